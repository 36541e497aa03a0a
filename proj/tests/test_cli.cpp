// End-to-end tests for the command-line tool. The binary path arrives as
// argv[1]; the remaining arguments go to doctest.

#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <json.hpp>

using nlohmann::json;

namespace {

std::string g_tool;

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_tool(const std::string& args, bool keep_stderr = false) {
    std::string cmd = g_tool + " " + args + (keep_stderr ? " 2>&1" : " 2>/dev/null");
    RunResult r;
    FILE* p = ::popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    char buf[4096];
    std::size_t got;
    while ((got = std::fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
    int status = ::pclose(p);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::vector<json> json_lines(const std::string& text) {
    std::vector<json> records;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string::npos) nl = text.size();
        std::string line = text.substr(pos, nl - pos);
        pos = nl + 1;
        if (line.empty()) continue;
        records.push_back(json::parse(line));
    }
    return records;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string::npos) nl = text.size();
        lines.push_back(text.substr(pos, nl - pos));
        pos = nl + 1;
    }
    return lines;
}

}  // namespace

TEST_CASE("word prints the prefix") {
    auto r = run_tool("word --length 16");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "0110100110010110\n");

    auto rj = run_tool("--json word --length 16");
    auto recs = json_lines(rj.out);
    REQUIRE(recs.size() == 1);
    CHECK(recs[0]["command"] == "word");
    CHECK(recs[0]["status"] == "ok");
    CHECK(recs[0]["payload"]["length"] == 16);
    CHECK(recs[0]["payload"]["word"] == "0110100110010110");
}

TEST_CASE("factors lists the whole level") {
    auto r = run_tool("--json factors --length 3");
    REQUIRE(r.exit_code == 0);
    auto recs = json_lines(r.out);
    REQUIRE(recs.size() == 1);
    CHECK(recs[0]["payload"]["count"] == 6);
    std::vector<std::string> expected{"001", "010", "011", "100", "101", "110"};
    CHECK(recs[0]["payload"]["factors"].get<std::vector<std::string>>() ==
          expected);
}

TEST_CASE("complexity range with cross-check") {
    auto r = run_tool("--json complexity --n 0..10 --method both");
    REQUIRE(r.exit_code == 0);
    auto recs = json_lines(r.out);
    REQUIRE(recs.size() == 11);
    std::vector<std::int64_t> expected{1, 2, 4, 6, 8, 6, 8, 10, 8, 6, 8};
    for (std::size_t i = 0; i < recs.size(); ++i) {
        CHECK(recs[i]["status"] == "ok");
        CHECK(recs[i]["payload"]["n"] == i);
        CHECK(recs[i]["payload"]["value"] == expected[i]);
        CHECK(recs[i]["payload"]["fast"] == expected[i]);
        CHECK(recs[i]["payload"]["brute"] == expected[i]);
    }
}

TEST_CASE("complexity CSV export") {
    auto r = run_tool("--csv complexity --n 3..5");
    REQUIRE(r.exit_code == 0);
    auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 4);
    CHECK(lines[0] == "n,value");
    CHECK(lines[1] == "3,6");
    CHECK(lines[2] == "4,8");
    CHECK(lines[3] == "5,6");
}

TEST_CASE("generic order goes through the brute counter") {
    auto r = run_tool("--json complexity --n 5..5 --l 1 --method brute");
    REQUIRE(r.exit_code == 0);
    auto recs = json_lines(r.out);
    REQUIRE(recs.size() == 1);
    CHECK(recs[0]["payload"]["value"] == 2);
    CHECK(recs[0]["payload"]["order"] == 1);

    // The O(log n) path only exists for order 2.
    CHECK(run_tool("complexity --n 5..5 --l 3 --method fast").exit_code == 2);
}

TEST_CASE("pairs range in both methods") {
    auto r = run_tool("--json pairs --n 2..9 --method both");
    REQUIRE(r.exit_code == 0);
    auto recs = json_lines(r.out);
    REQUIRE(recs.size() == 8);
    std::vector<std::pair<int, int>> expected{
        {0, 1}, {0, 1}, {0, 2}, {1, 2}, {1, 3}, {1, 3}, {1, 3}, {2, 3}};
    for (std::size_t i = 0; i < recs.size(); ++i) {
        CHECK(recs[i]["status"] == "ok");
        CHECK(recs[i]["payload"]["lo"] == expected[i].first);
        CHECK(recs[i]["payload"]["hi"] == expected[i].second);
    }

    auto rc = run_tool("--csv pairs --n 11..11");
    auto lines = lines_of(rc.out);
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] == "n,lo,hi");
    CHECK(lines[1] == "11,2,4");
}

TEST_CASE("merf reports the forced extension") {
    auto r = run_tool("--json merf 0110010");
    REQUIRE(r.exit_code == 0);
    auto recs = json_lines(r.out);
    REQUIRE(recs.size() == 1);
    CHECK(recs[0]["payload"]["extended"] == "0110100110010110");
    CHECK(recs[0]["payload"]["frame"] == 8);
    CHECK(recs[0]["payload"]["offset"] == 6);
    CHECK(recs[0]["payload"]["determined"] == 9);
    CHECK(!recs[0]["payload"].contains("trace"));

    auto rt = run_tool("--json merf 0110010 --trace");
    auto trecs = json_lines(rt.out);
    REQUIRE(trecs.size() == 1);
    REQUIRE(trecs[0]["payload"]["trace"].size() == 3);
    CHECK(trecs[0]["payload"]["trace"][0]["q"] == 1);
    CHECK(trecs[0]["payload"]["trace"][0]["filled"] == "01100101");
    CHECK(trecs[0]["payload"]["trace"][0]["preimage"] == "0100");
    CHECK(trecs[0]["payload"]["trace"][2]["preimage"] == "01");

    auto rh = run_tool("merf 0110010 --trace");
    CHECK(rh.out.find("q=1") != std::string::npos);
    CHECK(rh.out.find("extended 0110100110010110") != std::string::npos);
}

TEST_CASE("merf rejects bad input") {
    CHECK(run_tool("merf 01a0").exit_code == 2);   // not a binary string
    CHECK(run_tool("merf 0111").exit_code == 1);   // not a factor
}

TEST_CASE("bounds with witnesses on small lengths") {
    auto r = run_tool("--json bounds --length 6");
    REQUIRE(r.exit_code == 0);
    auto recs = json_lines(r.out);
    REQUIRE(recs.size() == 1);
    CHECK(recs[0]["payload"]["min"] == 0);
    CHECK(recs[0]["payload"]["max"] == 10);
    CHECK(recs[0]["payload"]["sharp"] == true);
    CHECK(recs[0]["payload"].contains("min_witness"));
    CHECK(recs[0]["payload"].contains("max_witness"));

    // Past the enumeration cut-off only the closed form is reported.
    auto rbig = run_tool("--json bounds --length 100");
    auto brecs = json_lines(rbig.out);
    REQUIRE(brecs.size() == 1);
    CHECK(!brecs[0]["payload"].contains("sharp"));
    CHECK(brecs[0]["payload"]["min"] == 28);
    CHECK(brecs[0]["payload"]["max"] == 156);
}

TEST_CASE("coding and decode round-trip") {
    auto r = run_tool("--json coding 1001011");
    REQUIRE(r.exit_code == 0);
    auto recs = json_lines(r.out);
    CHECK(recs[0]["payload"]["coding"] == "SEDE");
    CHECK(recs[0]["payload"]["first"] == 1);

    auto rd = run_tool("--json decode SEDE 1");
    REQUIRE(rd.exit_code == 0);
    auto drecs = json_lines(rd.out);
    CHECK(drecs[0]["payload"]["word"] == "1001011");

    // DD decodes to 0101, but that factor reads back as SDS.
    auto rdd = run_tool("--json decode DD 0");
    CHECK(rdd.exit_code == 1);
    auto ddrecs = json_lines(rdd.out);
    REQUIRE(ddrecs.size() == 1);
    CHECK(ddrecs[0]["status"] == "fail");
    CHECK(ddrecs[0]["payload"]["consistent"] == false);

    CHECK(run_tool("decode DSD 0").exit_code == 2);  // S inside the coding
    CHECK(run_tool("decode SEDE 2").exit_code == 2); // first letter not a bit
}

TEST_CASE("verify relations") {
    auto r = run_tool("--json verify relations --n-max 400");
    REQUIRE(r.exit_code == 0);
    auto recs = json_lines(r.out);
    REQUIRE(recs.size() == 13);
    for (const auto& rec : recs) {
        CHECK(rec["status"] == "ok");
        CHECK(rec["payload"]["holds"] == true);
    }
    CHECK(recs[0]["payload"]["relation"] == "P[4n+1] = P[2n+1]");

    auto rt = run_tool("verify relations --n-max 200");
    CHECK(rt.out.find("13/13 ok") != std::string::npos);
}

TEST_CASE("verify relations with the enumeration evaluator") {
    auto r = run_tool("--json verify relations --n-max 12 --evaluator brute");
    REQUIRE(r.exit_code == 0);
    auto recs = json_lines(r.out);
    REQUIRE(recs.size() == 13);
    for (const auto& rec : recs) CHECK(rec["status"] == "ok");
}

TEST_CASE("verify palindromes, steps, coverage") {
    auto rp = run_tool("--json verify palindromes --q-max 6");
    REQUIRE(rp.exit_code == 0);
    auto precs = json_lines(rp.out);
    REQUIRE(precs.size() == 6);
    CHECK(precs[0]["payload"]["size"] == 3);
    CHECK(precs[1]["payload"]["size"] == 5);

    auto rs = run_tool("--json verify steps --n-max 3000");
    REQUIRE(rs.exit_code == 0);
    auto srecs = json_lines(rs.out);
    REQUIRE(srecs.size() == 1);
    CHECK(srecs[0]["payload"]["ok"] == true);

    auto rc = run_tool("--json verify coverage");
    REQUIRE(rc.exit_code == 0);
    auto crecs = json_lines(rc.out);
    REQUIRE(crecs.size() == 2);
    CHECK(crecs[0]["payload"]["complete"] == true);
    CHECK(crecs[0]["payload"]["covered"] == 32);
    CHECK(crecs[1]["payload"]["closed"] == true);
}

TEST_CASE("witness chain") {
    auto r = run_tool("--json witness --steps 3");
    REQUIRE(r.exit_code == 0);
    auto recs = json_lines(r.out);
    REQUIRE(recs.size() == 4);
    std::vector<std::pair<std::int64_t, std::int64_t>> expected{
        {3, 6}, {43, 12}, {683, 18}, {10923, 24}};
    for (std::size_t i = 0; i < recs.size(); ++i) {
        CHECK(recs[i]["payload"]["index"] == expected[i].first);
        CHECK(recs[i]["payload"]["value"] == expected[i].second);
    }
}

TEST_CASE("discover finds the two marquee identities") {
    auto r = run_tool("--json discover --n-max 512 --modulus 16");
    REQUIRE(r.exit_code == 0);
    auto recs = json_lines(r.out);
    REQUIRE(!recs.empty());
    bool saw_quad = false, saw_sixteen = false;
    for (const auto& rec : recs) {
        auto s = rec["payload"]["relation"].get<std::string>();
        saw_quad = saw_quad || s == "P[4n+1] = P[2n+1]";
        saw_sixteen = saw_sixteen || s == "P[16n+10] = P[16n+8]";
    }
    CHECK(saw_quad);
    CHECK(saw_sixteen);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run_tool("").exit_code == 2);                       // no subcommand
    CHECK(run_tool("frobnicate").exit_code == 2);             // unknown
    CHECK(run_tool("complexity").exit_code == 2);             // missing --n
    CHECK(run_tool("complexity --n 9..3").exit_code == 2);    // empty range
    CHECK(run_tool("complexity --n x..3").exit_code == 2);    // not a number
    CHECK(run_tool("pairs --n 2..4 --method quick").exit_code == 2);
    CHECK(run_tool("--json --csv pairs --n 2..4").exit_code == 2);
    CHECK(run_tool("--csv word --length 4").exit_code == 2);  // csv scope
    CHECK(run_tool("--help").exit_code == 0);
}

TEST_CASE("NO_COLOR strips escape codes") {
    std::string saved = g_tool;
    g_tool = "NO_COLOR=1 " + saved;
    auto r = run_tool("verify steps --n-max 100");
    g_tool = saved;
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find('\x1b') == std::string::npos);
    CHECK(r.out.find("ok") != std::string::npos);
}

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: %s <tool-path> [doctest args]\n", argv[0]);
        return 1;
    }
    g_tool = argv[1];

    doctest::Context ctx;
    std::vector<char*> rest;
    rest.push_back(argv[0]);
    for (int i = 2; i < argc; ++i) rest.push_back(argv[i]);
    ctx.applyCommandLine(static_cast<int>(rest.size()), rest.data());
    return ctx.run();
}
