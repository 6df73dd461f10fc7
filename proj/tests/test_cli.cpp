#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "ringlab/cli.hpp"

using namespace ringlab;

namespace {

struct GoldenCase {
    std::string name;
    std::vector<std::string> args;
    int expected_exit;
};

const std::vector<GoldenCase>& golden_cases() {
    static const std::vector<GoldenCase> cases = {
        {"homs", {"homs", "--pres", "Z[x]/(x^2+1)", "--ring", "Z/5"}, 0},
        {"exists", {"exists", "--morphism", "e", "--ring", "Z/3"}, 0},
        {"pushout",
         {"pushout", "--m", "Z[x] -> Z[x]/(x^2+1) : x", "--a", "Z[x] -> Z[x]/(x-1) : x"},
         0},
        {"colimit",
         {"colimit", "--diagram",
          "{\"ring\":\"Z/4\",\"objects\":[{\"pres\":\"Z[x]\",\"anchor\":[0]},"
          "{\"pres\":\"Z[x]\",\"anchor\":[2]}],"
          "\"arrows\":[{\"src\":0,\"dst\":1,\"morphism\":\"Z[x] -> Z[x] : x^2\"}]}"},
         0},
        {"ideal",
         {"ideal", "--gens", "x^2+1, x-1", "--q", "1", "--vars", "x", "--domain", "Z",
          "--order", "lex"},
         0},
        {"radical", {"radical", "--gens", "x^2", "--q", "x", "--vars", "x", "--p", "0"}, 0},
        {"closure", {"closure", "--ring", "Z/5", "--nvars", "1", "--points", "2; 3"}, 0},
        {"crad",
         {"crad", "--ring", "GF(3)", "--family", "GF(9)", "--ideal", "x^2+1", "--q", "x",
          "--vars", "x"},
         0},
        {"gc-check",
         {"gc-check", "--ring", "GF(3)", "--family", "GF(9)", "--ideal", "x^2+1", "--q", "x",
          "--vars", "x"},
         1},
        {"sat", {"sat", "--ring", "Z/6", "--theory", "builtin:t_id", "--bound", "2"}, 1},
        {"classify", {"classify", "--theory", "builtin:t_f", "--bound", "1"}, 0},
        {"resultant",
         {"resultant", "--n", "i", "--m", "e", "--family", "Z/2, Z/3, GF(4), Z/5"},
         0},
        {"cover", {"cover", "--m", "e", "--x", "i", "--family", "Z/2, Z/3, GF(4), Z/5"}, 0},
        {"diamor",
         {"diamor", "--diagram",
          "{\"ring\":\"Z/4\",\"objects\":[{\"pres\":\"Z[]\",\"anchor\":[]}]}", "--x",
          "Z[] -> Z[x]/(x^2+1) : @ 0", "--check-rings", "Z/2, Z/3"},
         0},
        {"rprod",
         {"rprod", "--factors", "Z/2, Z/3", "--filter", "", "--axiom",
          "forall x,y (x*y=0) => (x=0) \\/ (y=0)"},
         1},
        {"purity",
         {"purity", "--ring-a", "GF(3)", "--ring-b", "GF(9)", "--m",
          "Z[] -> Z[x]/(x^2+1) :", "--param", ""},
         1},
        {"member",
         {"member", "--ring", "Z/6", "--family", "Z/2, Z/3", "--which", "special",
          "--max-factors", "2"},
         0},
    };
    return cases;
}

std::string golden_path(const std::string& name) {
    return std::string(RINGLAB_GOLDEN_DIR) + "/" + name + ".json";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) return {};
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("golden reports for every subcommand") {
    bool regen = std::getenv("RINGLAB_REGEN_GOLDEN") != nullptr;
    for (const GoldenCase& gc : golden_cases()) {
        INFO(gc.name);
        CliResult res = run_command(gc.args);
        REQUIRE(res.exit_code == gc.expected_exit);
        std::string dump = res.report.dump(2) + "\n";
        std::string path = golden_path(gc.name);
        if (regen) {
            std::ofstream out(path);
            out << dump;
        }
        std::string expected = read_file(path);
        REQUIRE(!expected.empty());
        REQUIRE(dump == expected);
    }
}

TEST_CASE("reports are byte-identical across runs") {
    for (const GoldenCase& gc : golden_cases()) {
        CliResult a = run_command(gc.args);
        CliResult b = run_command(gc.args);
        REQUIRE(a.report.dump(2) == b.report.dump(2));
        REQUIRE(a.text == b.text);
        REQUIRE(a.exit_code == b.exit_code);
    }
}

TEST_CASE("semantic spot checks of the reports") {
    CliResult homs_res = run_command({"homs", "--pres", "Z[x]/(x^2+1)", "--ring", "Z/5"});
    REQUIRE(homs_res.report["result"]["count"] == 2);
    REQUIRE(homs_res.report["result"]["points"][0][0] == 2);
    REQUIRE(homs_res.report["result"]["points"][1][0] == 3);

    CliResult sat_res = run_command({"sat", "--ring", "Z/6", "--theory", "builtin:t_id"});
    REQUIRE(sat_res.exit_code == 1);
    bool found_witness = false;
    for (const auto& r : sat_res.report["reports"])
        if (r.contains("witness")) {
            REQUIRE(r["witness"]["x"] == 2);
            REQUIRE(r["witness"]["y"] == 3);
            found_witness = true;
        }
    REQUIRE(found_witness);

    CliResult cover_res =
        run_command({"cover", "--m", "e", "--x", "i", "--family", "Z/2, Z/3, GF(4), Z/5"});
    REQUIRE(cover_res.report["all_exact"] == true);

    CliResult mem = run_command({"member", "--ring", "Z/6", "--family", "Z/2, Z/3", "--which",
                                 "special", "--max-factors", "2"});
    REQUIRE(mem.report["verdict"] == "found");
    REQUIRE(mem.report["witness"].size() == 2);

    CliResult pur = run_command({"purity", "--ring-a", "GF(3)", "--ring-b", "GF(9)", "--m",
                                 "Z[] -> Z[x]/(x^2+1) :", "--param", ""});
    REQUIRE(pur.report["report"]["pure_violation"] == true);
    REQUIRE(pur.report["report"]["phrasings_agree"] == true);
}

TEST_CASE("usage, parse and budget errors exit 2") {
    REQUIRE(run_command({"homs", "--pres", "Z[x]"}).exit_code == 2);  // missing --ring
    REQUIRE(run_command({"homs", "--pres", "Q[x]", "--ring", "Z/5"}).exit_code == 2);
    REQUIRE(run_command({"sat", "--ring", "Z/6", "--theory", "builtin:bogus"}).exit_code == 2);
    CliResult budget = run_command(
        {"homs", "--pres", "Z[x,y,z]", "--ring", "Z/7", "--budget", "10"});
    REQUIRE(budget.exit_code == 2);
    REQUIRE(budget.report["error"]["type"] == "budget");
    CliResult gbb = run_command({"ideal", "--gens", "x^2+1, x-1", "--q", "1", "--vars", "x",
                                 "--domain", "Z", "--gb-max-basis", "1"});
    REQUIRE(gbb.exit_code == 2);
    REQUIRE(gbb.report["error"]["type"] == "budget");
    // malformed numeric arguments are usage errors, not crashes
    REQUIRE(run_command({"closure", "--ring", "Z/5", "--nvars", "oops", "--points", "1"})
                .exit_code == 2);
    REQUIRE(run_command({"sat", "--ring", "Z/5", "--theory", "builtin:char(x)"}).exit_code == 2);
    REQUIRE(run_command({"rprod", "--factors", "Z/2, Z/3", "--filter", "0,banana"}).exit_code ==
            2);
    // a morphism that is not well-defined is rejected before computation
    CliResult bad = run_command({"exists", "--morphism", "Z[x]/(x^2) -> Z[x] : x", "--ring", "Z/4"});
    REQUIRE(bad.exit_code == 2);
}

TEST_CASE("theory files load from disk") {
    std::string path = "/tmp/ringlab_demo_theory.txt";
    {
        std::ofstream out(path);
        out << "theory demo:\n";
        out << "forall x,y (x*y = 0) => (x = 0) \\/ (y = 0)\n";
        out << "for n in 1..\n";
        out << "forall x (x^n = 0) => (x = 0)\n";
    }
    CliResult res = run_command({"sat", "--ring", "Z/4", "--theory", path, "--bound", "3"});
    REQUIRE(res.exit_code == 1);
    REQUIRE(res.report["theory"] == "demo");
    REQUIRE(res.report["reports"].size() == 4);  // 1 fixed + 3 schema instances
}

TEST_CASE("text output carries the headline verdicts") {
    CliResult res = run_command({"sat", "--ring", "Z/6", "--theory", "builtin:t_id"});
    REQUIRE(res.text == "Z/6 |/= t_id\n");
    CliResult ok = run_command({"sat", "--ring", "Z/5", "--theory", "builtin:t_id"});
    REQUIRE(ok.text == "Z/5 |= t_id\n");
}
