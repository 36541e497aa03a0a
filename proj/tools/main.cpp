// Command-line front end: every library operation behind one binary, with a
// human table by default, JSON lines via --json, CSV for ranges via --csv.
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <cstdio>
#include <cstdlib>
#include <exception>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tmc/abelian.hpp"
#include "tmc/analysis.hpp"
#include "tmc/errors.hpp"
#include "tmc/frames.hpp"
#include "tmc/pairs.hpp"
#include "tmc/regularity.hpp"
#include "tmc/thue_morse.hpp"

using nlohmann::json;
using namespace tmc;

namespace {

enum class Mode { table, json_lines, csv };

struct Output {
    Mode mode = Mode::table;
    bool any_fail = false;

    void record(const std::string& command, bool ok, const json& payload) {
        if (!ok) any_fail = true;
        if (mode == Mode::json_lines) {
            json rec;
            rec["command"] = command;
            rec["status"] = ok ? "ok" : "fail";
            rec["payload"] = payload;
            std::printf("%s\n", rec.dump().c_str());
        }
    }

    void line(const std::string& s) {
        if (mode == Mode::table) std::printf("%s\n", s.c_str());
    }

    void csv(const std::string& s) {
        if (mode == Mode::csv) std::printf("%s\n", s.c_str());
    }
};

struct Range {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
};

Range parse_range(const std::string& s) {
    auto dots = s.find("..");
    try {
        if (dots == std::string::npos) {
            std::uint64_t v = std::stoull(s);
            return {v, v};
        }
        Range r{std::stoull(s.substr(0, dots)), std::stoull(s.substr(dots + 2))};
        if (r.lo > r.hi) throw CLI::ValidationError("range", "empty range " + s);
        return r;
    } catch (const std::invalid_argument&) {
        throw CLI::ValidationError("range", "expected A..B, got " + s);
    } catch (const std::out_of_range&) {
        throw CLI::ValidationError("range", "range endpoint too large in " + s);
    }
}

Word parse_word(const std::string& s) {
    try {
        return Word::from_string(s);
    } catch (const std::invalid_argument&) {
        throw CLI::ValidationError("word", "words are '0'/'1' strings: " + s);
    }
}

bool color_enabled() {
    return std::getenv("NO_COLOR") == nullptr;
}

std::string status_tag(bool ok) {
    if (!color_enabled()) return ok ? "ok  " : "FAIL";
    return ok ? "\x1b[32mok\x1b[0m  " : "\x1b[31mFAIL\x1b[0m";
}

int run(int argc, char** argv) {
    CLI::App app{"Thue-Morse 2-abelian complexity toolkit"};
    app.require_subcommand(1);
    bool opt_json = false, opt_csv = false;
    app.add_flag("--json", opt_json, "JSON-lines output");
    app.add_flag("--csv", opt_csv, "CSV output (complexity and pairs ranges)");

    // word --length N
    auto* cmd_word = app.add_subcommand("word", "prefix of the word");
    std::uint64_t word_len = 0;
    cmd_word->add_option("--length", word_len, "prefix length")->required();

    // factors --length N
    auto* cmd_factors = app.add_subcommand("factors", "all factors of a length");
    std::uint64_t factors_len = 0;
    cmd_factors->add_option("--length", factors_len, "factor length")->required();

    // complexity --n A..B [--l L] [--method fast|brute|both]
    auto* cmd_cx = app.add_subcommand("complexity", "class counts over a range");
    std::string cx_range;
    int cx_l = 2;
    std::string cx_method = "fast";
    cmd_cx->add_option("--n", cx_range, "inclusive range A..B")->required();
    cmd_cx->add_option("--l", cx_l, "equivalence order (default 2)");
    cmd_cx->add_option("--method", cx_method, "fast | brute | both")
        ->check(CLI::IsMember({"fast", "brute", "both"}));

    // pairs --n A..B [--method interval|brute|both]
    auto* cmd_pairs = app.add_subcommand("pairs", "pair-count ranges");
    std::string pairs_range;
    std::string pairs_method = "interval";
    cmd_pairs->add_option("--n", pairs_range, "inclusive range A..B")->required();
    cmd_pairs->add_option("--method", pairs_method, "interval | brute | both")
        ->check(CLI::IsMember({"interval", "brute", "both"}));

    // merf WORD [--trace]
    auto* cmd_merf = app.add_subcommand("merf", "maximal forced extension");
    std::string merf_word;
    bool merf_trace = false;
    cmd_merf->add_option("word", merf_word, "factor to extend")->required();
    cmd_merf->add_flag("--trace", merf_trace, "print each extension round");

    // bounds --length N
    auto* cmd_bounds = app.add_subcommand("bounds", "extension-count bounds");
    std::uint64_t bounds_len = 0;
    cmd_bounds->add_option("--length", bounds_len, "factor length")->required();

    // coding WORD / decode CODING FIRSTBIT
    auto* cmd_coding = app.add_subcommand("coding", "odd-frame coding of a factor");
    std::string coding_word;
    cmd_coding->add_option("word", coding_word, "factor to code")->required();

    auto* cmd_decode = app.add_subcommand("decode", "word from coding and first letter");
    std::string decode_coding;
    int decode_first = 0;
    cmd_decode->add_option("coding", decode_coding, "D/E/S string")->required();
    cmd_decode->add_option("firstbit", decode_first, "first letter (0 or 1)")
        ->required()
        ->check(CLI::Range(0, 1));

    // verify {relations, palindromes, steps, coverage}
    auto* cmd_verify = app.add_subcommand("verify", "check the proved properties");
    cmd_verify->require_subcommand(1);
    auto* v_rel = cmd_verify->add_subcommand("relations", "the 13 identities");
    std::int64_t v_rel_nmax = 1000;
    std::string v_rel_eval = "fast";
    v_rel->add_option("--n-max", v_rel_nmax, "check n in [0, n-max]");
    v_rel->add_option("--evaluator", v_rel_eval, "fast | brute")
        ->check(CLI::IsMember({"fast", "brute"}));
    auto* v_pal = cmd_verify->add_subcommand("palindromes", "value blocks");
    int v_pal_qmax = 10;
    v_pal->add_option("--q-max", v_pal_qmax, "largest block level");
    auto* v_steps = cmd_verify->add_subcommand("steps", "increments in {-2,0,2}");
    std::int64_t v_steps_nmax = 10000;
    v_steps->add_option("--n-max", v_steps_nmax, "check [4, n-max]");
    auto* v_cov = cmd_verify->add_subcommand("coverage", "residues + generator closure");

    // witness --steps K
    auto* cmd_witness = app.add_subcommand("witness", "unboundedness chain");
    int witness_steps = 4;
    cmd_witness->add_option("--steps", witness_steps, "chain links after the seed");

    // discover --n-max N --modulus M [--max-terms T]
    auto* cmd_disc = app.add_subcommand("discover", "search for linear relations");
    std::int64_t disc_nmax = 512;
    std::int64_t disc_modulus = 16;
    std::size_t disc_terms = 8;
    cmd_disc->add_option("--n-max", disc_nmax, "sample rows 0..n-max");
    cmd_disc->add_option("--modulus", disc_modulus, "largest subsequence modulus");
    cmd_disc->add_option("--max-terms", disc_terms, "term budget per relation");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);  // prints help text or the parse error
        return code == 0 ? 0 : 2;
    }

    Output out;
    if (opt_json && opt_csv)
        throw CLI::ValidationError("output", "--json and --csv are exclusive");
    if (opt_json) out.mode = Mode::json_lines;
    if (opt_csv) {
        if (!(cmd_cx->parsed() || cmd_pairs->parsed()))
            throw CLI::ValidationError(
                "output", "--csv applies to complexity and pairs ranges");
        out.mode = Mode::csv;
    }

    if (cmd_word->parsed()) {
        Word w = tm_prefix(static_cast<std::size_t>(word_len));
        out.record("word", true, {{"length", word_len}, {"word", w.str()}});
        out.line(w.str());
    } else if (cmd_factors->parsed()) {
        auto fs = enumerate_factors(static_cast<std::size_t>(factors_len));
        json names = json::array();
        for (const Word& w : *fs) names.push_back(w.str());
        out.record("factors", true,
                   {{"length", factors_len},
                    {"count", fs->size()},
                    {"factors", names}});
        out.line("count " + std::to_string(fs->size()));
        for (const Word& w : *fs) out.line(w.str());
    } else if (cmd_cx->parsed()) {
        Range r = parse_range(cx_range);
        if (cx_l < 1)
            throw CLI::ValidationError("l", "order must be >= 1");
        if (cx_l != 2 && cx_method != "brute")
            throw CLI::ValidationError(
                "method", "orders other than 2 are brute-force only");
        out.csv(cx_method == "both" ? "n,fast,brute" : "n,value");
        for (std::uint64_t n = r.lo; n <= r.hi; ++n) {
            std::uint64_t fast = 0, brute = 0;
            bool ok = true;
            if (cx_method != "brute") fast = complexity_fast(n);
            if (cx_method != "fast") brute = complexity_brute(n, cx_l);
            if (cx_method == "both") ok = fast == brute;
            std::uint64_t value = cx_method == "brute" ? brute : fast;
            json payload = {{"n", n}, {"value", value}, {"order", cx_l}};
            if (cx_method == "both") {
                payload["fast"] = fast;
                payload["brute"] = brute;
            }
            IntInterval iv;
            if (cx_l == 2) {
                iv = pairs_interval(n);
                payload["pairs_lo"] = iv.lo;
                payload["pairs_hi"] = iv.hi;
            }
            out.record("complexity", ok, payload);
            if (cx_method == "both") {
                out.line(std::to_string(n) + "  fast " + std::to_string(fast) +
                         "  brute " + std::to_string(brute) + "  " +
                         status_tag(ok));
                out.csv(std::to_string(n) + "," + std::to_string(fast) + "," +
                        std::to_string(brute));
            } else {
                out.line(std::to_string(n) + "  " + std::to_string(value));
                out.csv(std::to_string(n) + "," + std::to_string(value));
            }
        }
    } else if (cmd_pairs->parsed()) {
        Range r = parse_range(pairs_range);
        out.csv("n,lo,hi");
        for (std::uint64_t n = r.lo; n <= r.hi; ++n) {
            IntInterval iv;
            bool ok = true;
            if (pairs_method != "brute") iv = pairs_interval(n);
            if (pairs_method != "interval") {
                auto s = pairs_brute(static_cast<std::size_t>(n));
                IntInterval b{*s.begin(), *s.rbegin()};
                ok = std::int64_t(s.size()) == b.count();
                if (pairs_method == "brute")
                    iv = b;
                else
                    ok = ok && iv == b;
            }
            out.record("pairs", ok,
                       {{"n", n}, {"lo", iv.lo}, {"hi", iv.hi}});
            out.line(std::to_string(n) + "  [" + std::to_string(iv.lo) + "," +
                     std::to_string(iv.hi) + "]" +
                     (pairs_method == "both" ? "  " + status_tag(ok) : ""));
            out.csv(std::to_string(n) + "," + std::to_string(iv.lo) + "," +
                    std::to_string(iv.hi));
        }
    } else if (cmd_merf->parsed()) {
        Word w = parse_word(merf_word);
        std::vector<MerfStep> steps;
        MerfResult r = merf(w, steps);
        json trace = json::array();
        for (const auto& s : steps)
            trace.push_back({{"q", s.q},
                             {"filled", s.filled.str()},
                             {"preimage", s.preimage.str()}});
        json payload = {{"input", w.str()},
                        {"extended", r.extended.str()},
                        {"frame", r.frame_size},
                        {"offset", r.original_offset},
                        {"determined", r.extended.size() - w.size()}};
        if (merf_trace) payload["trace"] = trace;
        out.record("merf", true, payload);
        if (merf_trace)
            for (const auto& s : steps)
                out.line("q=" + std::to_string(s.q) + "  fill " +
                         s.filled.str() + "  preimage " + s.preimage.str());
        out.line("extended " + r.extended.str());
        out.line("frame " + std::to_string(r.frame_size) + "  offset " +
                 std::to_string(r.original_offset) + "  determined " +
                 std::to_string(r.extended.size() - w.size()));
    } else if (cmd_bounds->parsed()) {
        auto [lo, hi] = unique_extension_bounds(bounds_len);
        json payload = {{"n", bounds_len}, {"min", lo}, {"max", hi}};
        bool ok = true;
        if (bounds_len >= 4 && bounds_len <= 64) {
            Word wlo, whi;
            std::uint64_t best_lo = ~std::uint64_t(0), best_hi = 0;
            for (const Word& w :
                 *enumerate_factors(static_cast<std::size_t>(bounds_len))) {
                std::uint64_t d = determined_letters(w);
                if (d < best_lo) {
                    best_lo = d;
                    wlo = w;
                }
                if (d > best_hi) {
                    best_hi = d;
                    whi = w;
                }
            }
            ok = best_lo == lo && best_hi == hi;
            payload["sharp"] = ok;
            payload["min_witness"] = wlo.str();
            payload["max_witness"] = whi.str();
        }
        out.record("bounds", ok, payload);
        out.line("min " + std::to_string(lo) + "  max " + std::to_string(hi));
        if (payload.contains("sharp"))
            out.line(std::string("sharp ") + (ok ? "yes" : "NO") +
                     "  min_witness " + payload["min_witness"].get<std::string>() +
                     "  max_witness " + payload["max_witness"].get<std::string>());
    } else if (cmd_coding->parsed()) {
        Word w = parse_word(coding_word);
        ShortCoding c = short_coding(w);
        out.record("coding", true,
                   {{"word", w.str()},
                    {"coding", c.str()},
                    {"first", w.first()}});
        out.line(c.str());
    } else if (cmd_decode->parsed()) {
        ShortCoding c;
        try {
            c = ShortCoding::parse(decode_coding);
        } catch (const malformed_coding& e) {
            throw CLI::ValidationError("coding", e.what());
        }
        Word w = decode_short_coding(c, decode_first);
        // A coding is genuine only if a factor reads back to it.
        bool consistent = is_factor(w);
        if (consistent) {
            try {
                consistent = short_coding(w) == c;
            } catch (const frame_ambiguous&) {
                // too short to re-read the frame; the factor check stands
            }
        }
        out.record("decode", consistent,
                   {{"coding", c.str()},
                    {"first", decode_first},
                    {"word", w.str()},
                    {"consistent", consistent}});
        out.line(w.str() + (consistent ? "" : "  (no factor has this coding)"));
    } else if (v_rel->parsed()) {
        Evaluator eval;
        if (v_rel_eval == "fast") {
            eval = fast_evaluator();
        } else {
            eval = [](std::int64_t idx) {
                return static_cast<std::int64_t>(
                    complexity_brute(static_cast<std::uint64_t>(idx), 2));
            };
        }
        int ok_count = 0;
        for (const auto& rel : relations_catalog()) {
            auto rep = verify_relation(rel, 0, v_rel_nmax, eval);
            ok_count += rep.holds;
            json payload = {{"relation", rel.str()}, {"holds", rep.holds}};
            if (rep.first_failure) payload["first_failure"] = *rep.first_failure;
            out.record("verify relations", rep.holds, payload);
            out.line(status_tag(rep.holds) + "  " + rel.str());
        }
        out.line(std::to_string(ok_count) + "/" +
                 std::to_string(relations_catalog().size()) + " ok");
    } else if (v_pal->parsed()) {
        Evaluator eval = fast_evaluator();
        for (int q = 1; q <= v_pal_qmax; ++q) {
            auto block = palindrome_block(q, eval);
            out.record("verify palindromes", block.is_palindrome,
                       {{"q", q},
                        {"size", block.values.size()},
                        {"palindrome", block.is_palindrome}});
            out.line(status_tag(block.is_palindrome) + "  q=" +
                     std::to_string(q) + "  block size " +
                     std::to_string(block.values.size()));
        }
    } else if (v_steps->parsed()) {
        auto rep = step_check(4, v_steps_nmax, fast_evaluator());
        json payload = {{"lo", 4}, {"hi", v_steps_nmax}, {"ok", rep.ok}};
        if (rep.first_violation) payload["first_violation"] = *rep.first_violation;
        out.record("verify steps", rep.ok, payload);
        out.line(status_tag(rep.ok) + "  steps on [4," +
                 std::to_string(v_steps_nmax) + "]");
    } else if (v_cov->parsed()) {
        auto cov = residue_coverage(relations_catalog(), 32);
        out.record("verify coverage", cov.complete,
                   {{"modulus", 32},
                    {"covered", cov.covered.size()},
                    {"complete", cov.complete}});
        out.line(status_tag(cov.complete) + "  residues covered " +
                 std::to_string(cov.covered.size()) + "/32");
        bool closed = false;
        std::string detail;
        try {
            closed = basis_closure_check(relations_catalog(),
                                         generator_basis(), 2);
        } catch (const non_closure& e) {
            detail = std::string(e.what()) + " at P[" +
                     std::to_string(e.modulus) + "n+" +
                     std::to_string(e.residue) + "]";
        }
        json payload = {{"basis", generator_basis().size()},
                        {"closed", closed}};
        if (!detail.empty()) payload["stuck"] = detail;
        out.record("verify coverage", closed, payload);
        out.line(status_tag(closed) + "  generator closure" +
                 (detail.empty() ? "" : "  " + detail));
    } else if (cmd_witness->parsed()) {
        auto chain = unbounded_witness(witness_steps);
        for (std::size_t i = 0; i < chain.size(); ++i) {
            out.record("witness", true,
                       {{"i", i},
                        {"index", chain[i].first},
                        {"value", chain[i].second}});
            out.line("a_" + std::to_string(i) + " = " +
                     std::to_string(chain[i].first) + "  P = " +
                     std::to_string(chain[i].second));
        }
    } else if (cmd_disc->parsed()) {
        auto found = discover_relations(disc_nmax, disc_modulus, disc_terms);
        for (const auto& rel : found) {
            out.record("discover", true, {{"relation", rel.str()}});
            out.line(rel.str());
        }
        out.line(std::to_string(found.size()) + " relations");
    }

    return out.any_fail ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return 2;
    } catch (const tmc::error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
