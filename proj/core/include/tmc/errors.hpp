#pragma once

#include <stdexcept>
#include <string>

namespace tmc {

/// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The word is not a factor of the Thue-Morse word.
struct not_a_factor : error {
    explicit not_a_factor(const std::string& what) : error(what) {}
};

/// The word is shorter than the operation requires.
struct too_short : error {
    explicit too_short(const std::string& what) : error(what) {}
};

/// Odd length where an even one is required (morphism preimage).
struct odd_length : error {
    explicit odd_length(const std::string& what) : error(what) {}
};

/// Not in the image of the morphism (contains a 00 or 11 block).
struct not_in_image : error {
    explicit not_in_image(const std::string& what) : error(what) {}
};

/// The word's frame cannot be decided (pair-free and too short).
struct frame_ambiguous : error {
    explicit frame_ambiguous(const std::string& what) : error(what) {}
};

/// A short coding violates the single-letter placement rules.
struct malformed_coding : error {
    explicit malformed_coding(const std::string& what) : error(what) {}
};

/// No word can realize the given class vector.
struct inconsistent_tuple : error {
    explicit inconsistent_tuple(const std::string& what) : error(what) {}
};

/// An internal search budget was exhausted without converging.
struct budget_exceeded : error {
    explicit budget_exceeded(const std::string& what) : error(what) {}
};

/// Index exceeds the supported 2^62 range for checked arithmetic.
struct overflow : error {
    explicit overflow(const std::string& what) : error(what) {}
};

/// An even argument was required.
struct odd_argument : error {
    explicit odd_argument(const std::string& what) : error(what) {}
};

/// Sample matrix has too few rows for the candidate columns.
struct insufficient_samples : error {
    explicit insufficient_samples(const std::string& what) : error(what) {}
};

/// A subsequence failed to reduce to the generator set.
struct non_closure : error {
    non_closure(const std::string& what, std::int64_t modulus, std::int64_t residue)
        : error(what), modulus(modulus), residue(residue) {}
    std::int64_t modulus;
    std::int64_t residue;
};

}  // namespace tmc
