#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include "hst/error.hpp"
#include "hst/json_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <sys/wait.h>
#include <fstream>
#include <sstream>
#include <string>

using namespace hst;
using nlohmann::json;

namespace {

std::string g_cli;
std::filesystem::path g_dir;

int run(const std::string& args, const std::string& out_name = "") {
    std::string cmd = g_cli + " " + args;
    if (!out_name.empty()) cmd += " > " + (g_dir / out_name).string();
    cmd += " 2> /dev/null";
    int rc = std::system(cmd.c_str());
    return rc == -1 ? -1 : WEXITSTATUS(rc);
}

std::string slurp(const std::string& name) {
    std::ifstream in(g_dir / name);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string write_fixture(const std::string& name, const json& j) {
    auto path = (g_dir / name).string();
    write_text_file(path, dump_canonical(j));
    return path;
}

} // namespace

TEST_CASE("triangulation json round trip") {
    auto t = lower_triangulation(interval(6), 3);
    auto j = triangulation_to_json(t);
    CHECK(j["schema"] == "hst/1");
    CHECK(j["m"] == 6);
    CHECK(triangulation_from_json(j) == t);
    CHECK(dump_canonical(j) == dump_canonical(triangulation_to_json(t)));

    json bad = j;
    bad["schema"] = "hst/0";
    CHECK_THROWS_AS(triangulation_from_json(bad), UnknownFormat);
    bad = j;
    bad["m"] = 7;
    CHECK_THROWS_AS(triangulation_from_json(bad), UnknownFormat);
}

TEST_CASE("poset and chain serialization") {
    auto p = enumerate_poset(7, 4);
    auto j = poset_to_json(p);
    CHECK(j["nodes"].size() == 7);
    CHECK(j["covers"].size() == 7);

    auto chain = flip_chain(lower_triangulation(interval(8), 5),
                            upper_triangulation(interval(8), 5));
    auto cj = flip_chain_to_json(chain);
    CHECK(cj["witnesses"].size() == 4);
    for (const auto& w : cj["witnesses"]) CHECK(w.contains("inserted"));

    CHECK(relabel_map_to_json({{5, 4}})["map"] == json::array({json::array({5, 4})}));
}

TEST_CASE("cli enumerate and poset") {
    CHECK(run("enumerate 7 4 --count", "count74.txt") == 0);
    CHECK(slurp("count74.txt") == "7\n");
    CHECK(run("enumerate 6 2 --count", "count62.txt") == 0);
    CHECK(slurp("count62.txt") == "14\n");

    CHECK(run("enumerate 6 3 -o " + (g_dir / "enum63.json").string()) == 0);
    json enum63 = json::parse(slurp("enum63.json"));
    for (const auto& tj : enum63) CHECK_NOTHROW(triangulation_from_json(tj));

    CHECK(run("poset 7 4 --format dot", "poset74.dot") == 0);
    auto dot = slurp("poset74.dot");
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("135|136|146") != std::string::npos);

    CHECK(run("poset 7 4 --format json", "poset74.json") == 0);
    json pj = json::parse(slurp("poset74.json"));
    CHECK(pj["schema"] == "hst/1");
    CHECK(pj["nodes"].size() == 7);
    CHECK(pj["covers"].size() == 7);
    CHECK(pj["leq2_spot_checks"]["bottom_below_all"] == true);
    CHECK(pj["leq2_spot_checks"]["all_below_top"] == true);

    CHECK(run("poset 7 4 --format xml") == 1);
    CHECK(run("enumerate 9 2 --budget 10") == 3);
    CHECK(run("enumerate") == 1);
}

TEST_CASE("cli check-equality") {
    CHECK(run("check-equality 8 5") == 0);
    CHECK(run("check-equality 6 2") == 0);
}

TEST_CASE("cli flip-chain") {
    auto lo = write_fixture("lo85.json", triangulation_to_json(lower_triangulation(interval(8), 5)));
    auto hi = write_fixture("hi85.json", triangulation_to_json(upper_triangulation(interval(8), 5)));
    CHECK(run("flip-chain --from " + lo + " --to " + hi, "chain.json") == 0);
    json cj = json::parse(slurp("chain.json"));
    CHECK(cj["witnesses"].size() == 4);
    CHECK(run("flip-chain --from " + hi + " --to " + lo) == 2);
    CHECK(run("flip-chain --from " + lo + " --to /nonexistent.json") == 1);
}

TEST_CASE("cli vertex operations") {
    auto t53 = write_fixture("lo53.json", triangulation_to_json(lower_triangulation(interval(5), 3)));

    CHECK(run("contract " + t53 + " --x 4 --y 5", "contract.json") == 0);
    json cj = json::parse(slurp("contract.json"));
    CHECK(cj["triangulation"]["simplices"] == json::parse("[[1,2,3,4]]"));
    CHECK(cj["relabel"]["map"] == json::parse("[[5,4]]"));
    CHECK(run("contract " + t53 + " --x 2 --y 4") == 1);

    CHECK(run("delete " + t53 + " --v 2", "delete.json") == 0);
    json dj = json::parse(slurp("delete.json"));
    CHECK(dj["simplices"] == json::parse("[[1,3,4],[1,4,5],[3,4,5]]"));
    CHECK(dj["lower_facets"] == json::parse("[[1,3],[3,5]]"));
    CHECK(dj["upper_facets"] == json::parse("[[1,5]]"));

    CHECK(run("sections " + t53 + " --v 2", "sections.json") == 0);
    json sj = json::parse(slurp("sections.json"));
    CHECK(sj["sections"].size() == 4);

    CHECK(run("expand " + t53 + " --v 2 --all", "expand.json") == 0);
    json ej = json::parse(slurp("expand.json"));
    CHECK(ej["expansions"].size() == 4);

    json ls;
    ls["members"] = json::parse("[[1,3,4],[1,4,5],[3,4,5]]");
    auto ls_path = write_fixture("lowerset.json", ls);
    CHECK(run("expand " + t53 + " --v 2 --lowerset " + ls_path, "expand_one.json") == 0);
    json e1 = json::parse(slurp("expand_one.json"));
    CHECK(e1["triangulation"]["simplices"] ==
          json::parse("[[1,2,3,6],[1,3,4,5],[1,3,5,6],[3,4,5,6]]"));
}

TEST_CASE("cli certify") {
    auto good = write_fixture("good.json", triangulation_to_json(lower_triangulation(interval(5), 3)));
    CHECK(run("certify " + good, "certify_good.json") == 0);
    json gj = json::parse(slurp("certify_good.json"));
    CHECK(gj["valid"] == true);
    CHECK(gj["volume_certified"] == true);
    CHECK(gj["scaled_volume_sum"] == "96");

    auto bad = write_fixture("bad.json",
                             triangulation_to_json(Triangulation(
                                 interval(5), 3, {{1, 2, 3, 4}, {1, 2, 3, 5}})));
    CHECK(run("certify " + bad, "certify_bad.json") == 2);
    json bj = json::parse(slurp("certify_bad.json"));
    CHECK(bj["valid"] == false);
    CHECK(bj.contains("witness"));

    write_text_file((g_dir / "garbage.json").string(), "not json at all\n");
    CHECK(run("certify " + (g_dir / "garbage.json").string()) == 1);
}

TEST_CASE("cli outputs are byte-stable") {
    CHECK(run("poset 8 5 --format json", "p1.json") == 0);
    CHECK(run("poset 8 5 --format json", "p2.json") == 0);
    CHECK(slurp("p1.json") == slurp("p2.json"));
}

int main(int argc, char** argv) {
    doctest::Context ctx;
    ctx.applyCommandLine(1, argv);  // remaining args belong to this harness
    if (argc < 2) {
        std::fprintf(stderr, "usage: test_cli_io <path-to-hst-cli>\n");
        return 1;
    }
    g_cli = argv[1];
    g_dir = std::filesystem::temp_directory_path() / "hst_cli_io_tests";
    std::filesystem::create_directories(g_dir);
    return ctx.run();
}
