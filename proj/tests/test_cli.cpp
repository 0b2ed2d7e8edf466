#include <gtest/gtest.h>

#include <cstdlib>

#include "cotoral/cli.hpp"
#include "oracles/semifree_oracle.hpp"
#include "support.hpp"

using namespace cotoral;
using namespace testing_support;

namespace {

const std::string data_dir = COTORAL_DATA_DIR;

Json run_json(std::vector<std::string> args, int expected_exit = 0) {
    auto r = run_cli(std::move(args));
    EXPECT_EQ(r.exit_code, expected_exit) << r.output;
    return Json::parse(r.output);
}

}  // namespace

TEST(Cli, Examples) {
    auto a = run_json({"cotoral-test", "--ambient", "1", "--sub", "[[2]]", "--super", "[]"});
    EXPECT_EQ(a["cotoral"], true);
    EXPECT_EQ(a["schema"], 1);
    auto b = run_json({"semifree-check", "--in", data_dir + "/sz_wedge_s2mz.json", "--k", "0"});
    EXPECT_EQ(b["member"], false);
    EXPECT_EQ(b["failed"], "condition_2");
    EXPECT_EQ(b["degree"], 0);
    auto c = run_json({"ideal-compare", "--x", "sigma([])", "--y", "sigma([[2]])", "--ambient", "1"});
    EXPECT_EQ(c["x_contains_y"], true);
    EXPECT_EQ(c["y_contains_x"], false);
}

TEST(Cli, EverySubcommandRuns) {
    auto canon = run_json({"subgroup-canonicalize", "--ambient", "2", "--sub", "[[4,2],[0,6]]"});
    EXPECT_EQ(canon["dimension"], 0);
    EXPECT_EQ(canon["connected"], false);
    auto iso = run_json({"isotropy", "--ambient", "1", "--expr", "S^2 ^ sigma(C(2)) v sigma(C(3))"});
    EXPECT_EQ(iso["maximal"].size(), 2u);
    auto slice = run_json({"spectrum-slice", "--ambient", "1", "--max-index", "3"});
    EXPECT_EQ(slice["primes"].size(), 4u);
    EXPECT_EQ(slice["hasse_edges"].size(), 3u);
    for (const char* name : {"s0_wedge_s2", "mapping_cone"}) {
        auto d = run_json({"semifree-decompose", "--in", data_dir + "/" + name + ".json"});
        EXPECT_EQ(d["member"], true);
        EXPECT_EQ(d["steps"].size(), 2u);
    }
    auto first = run_json({"semifree-decompose", "--in", data_dir + "/sz_wedge_s2mz.json"});
    EXPECT_EQ(first["member"], false);
    auto weyl = run_json({"weyl-quotient", "--in", data_dir + "/weyl_swap.json", "--max-index", "2"});
    auto plain = run_json({"spectrum-slice", "--ambient", "2", "--max-index", "2"});
    EXPECT_LT(weyl["orbits"].size(), plain["primes"].size());
    auto sign = run_json({"weyl-quotient", "--in", data_dir + "/weyl_sign.json", "--max-index", "3"});
    for (const auto& o : sign["orbits"]) EXPECT_EQ(o["size"], 1);
    auto o2 = run_json({"o2-support-check", "--in", data_dir + "/o2_supp_s0.json"});
    EXPECT_EQ(o2["realizable"], true);
}

TEST(Cli, ErrorsExitTwoWithKind) {
    auto unknown = run_json({"frobnicate"}, 2);
    EXPECT_EQ(unknown["error"]["kind"], "usage");
    auto missing = run_json({"cotoral-test", "--ambient", "1", "--sub", "[[2]]"}, 2);
    EXPECT_EQ(missing["error"]["kind"], "usage");
    auto syntax = run_json({"cotoral-test", "--ambient", "1", "--sub", "[[2]", "--super", "[]"}, 2);
    EXPECT_EQ(syntax["error"]["kind"], "parse");
    auto mismatch = run_json({"cotoral-test", "--ambient", "2", "--sub", "C(2)", "--super", "[]"}, 2);
    EXPECT_EQ(mismatch["error"]["kind"], "ambient_mismatch");
    auto file = run_json({"semifree-check", "--in", data_dir + "/does_not_exist.json"}, 2);
    EXPECT_EQ(file["error"]["kind"], "validation");
    auto dot = run_json({"cotoral-test", "--ambient", "1", "--sub", "[]", "--super", "[]", "--format", "dot"}, 2);
    EXPECT_EQ(dot["error"]["kind"], "validation");
    auto schema = run_json({"o2-support-check", "--in", data_dir + "/weyl_swap.json"}, 2);
    EXPECT_TRUE(schema["error"].contains("message"));
    EXPECT_EQ(run_cli({"--help"}).exit_code, 0);
}

TEST(Cli, DotOutputAndColor) {
    ::unsetenv("COTORAL_COLOR");
    auto plain = run_cli({"spectrum-slice", "--ambient", "1", "--max-index", "2", "--format", "dot"});
    ASSERT_EQ(plain.exit_code, 0);
    EXPECT_NE(plain.output.find("digraph"), std::string::npos);
    EXPECT_NE(plain.output.find("n0 -> n2"), std::string::npos);
    EXPECT_NE(plain.output.find("n1 -> n2"), std::string::npos);
    EXPECT_EQ(plain.output.find("fillcolor"), std::string::npos);
    ::setenv("COTORAL_COLOR", "1", 1);
    auto colored = run_cli({"spectrum-slice", "--ambient", "1", "--max-index", "2", "--format", "dot"});
    EXPECT_NE(colored.output.find("fillcolor"), std::string::npos);
    ::setenv("COTORAL_COLOR", "0", 1);
    EXPECT_EQ(run_cli({"spectrum-slice", "--ambient", "1", "--max-index", "2", "--format", "dot"}).output, plain.output);
    ::unsetenv("COTORAL_COLOR");
    auto weyl = run_cli({"weyl-quotient", "--in", data_dir + "/weyl_swap.json", "--max-index", "2", "--format", "dot"});
    EXPECT_EQ(weyl.exit_code, 0);
    EXPECT_NE(weyl.output.find("digraph"), std::string::npos);
}

TEST(Cli, Deterministic) {
    std::vector<std::string> args{"spectrum-slice", "--ambient", "2", "--max-index", "3", "--threads", "4"};
    auto a = run_cli(args);
    std::vector<std::string> single{"spectrum-slice", "--ambient", "2", "--max-index", "3"};
    EXPECT_EQ(a.output, run_cli(single).output);
    EXPECT_EQ(a.output, run_cli(args).output);
}

TEST(JsonRoundTrip, EmittedDocumentsReparse) {
    for (int trial = 0; trial < 100; ++trial) {
        auto k = random_subgroup(static_cast<std::size_t>(uniform(0, 3)));
        EXPECT_EQ(subgroup_from_json(Json::parse(to_json(k).dump())), k);
        auto x = random_sphere();
        EXPECT_EQ(wide_sphere_from_json(Json::parse(to_json(x).dump())), x);
        int tw = static_cast<int>(uniform(-1, 1));
        auto d = decompose_twisted(trial % 2 ? random_twisted(tw) : x, tw);
        auto back = decomposition_from_json(Json::parse(to_json(d).dump()));
        EXPECT_EQ(to_json(back), to_json(d));
        EXPECT_EQ(back.steps, d.steps);
        auto iso = IsotropySet::closure_of(k.ambient_rank(), {k, random_subgroup(k.ambient_rank())});
        EXPECT_EQ(isotropy_from_json(Json::parse(to_json(iso).dump()), k.ambient_rank()), iso);
    }
    auto w = WeylAction::generated_by(2, {{{0, 1}, {1, 0}}});
    auto w2 = weyl_action_from_json(Json::parse(to_json(w).dump()));
    EXPECT_EQ(w2.elements(), w.elements());
    for (auto args : std::vector<std::vector<std::string>>{
             {"spectrum-slice", "--ambient", "2", "--max-index", "2"},
             {"semifree-decompose", "--in", data_dir + "/mapping_cone.json"},
             {"weyl-quotient", "--in", data_dir + "/weyl_swap.json", "--max-index", "2"}}) {
        auto r = run_cli(args);
        EXPECT_EQ(Json::parse(r.output).dump() + "\n", r.output);
    }
}
