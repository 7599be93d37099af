#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include "json.hpp"

using json = nlohmann::ordered_json;

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
    std::string cmd = env + (env.empty() ? "" : " ") + WEYLKIT_CLI + std::string(" ") + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string data(const std::string& name) { return std::string(WEYLKIT_TEST_DATA) + "/" + name; }

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::stringstream s;
    s << f.rdbuf();
    return s.str();
}

std::filesystem::path scratch(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / "weylkit_cli_test";
    std::filesystem::create_directories(dir);
    return dir / name;
}

}  // namespace

TEST(Cli, HullMatchesGolden) {
    auto r = run("hull --type A2 --point 3,3");
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out, slurp(data("hull_A2_3_3.json")));
    auto j = json::parse(r.out);
    EXPECT_EQ(j["count"], 37);
    EXPECT_EQ(j["points"].size(), 37u);
    EXPECT_EQ(json::parse(j.dump()), j);
    EXPECT_EQ(run("hull --type A2 --point 3,3").out, r.out);
}

TEST(Cli, HullWritesOutputAndSvg) {
    auto out = scratch("hull.json"), svg = scratch("hull.svg");
    std::filesystem::remove(out);
    std::filesystem::remove(svg);
    auto r = run("hull --type A2 --point 1,1 --output " + out.string() + " --svg " + svg.string());
    ASSERT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.empty());
    EXPECT_EQ(json::parse(slurp(out.string()))["count"], 7);
    EXPECT_FALSE(std::filesystem::exists(out.string() + ".tmp"));
    auto text = slurp(svg.string());
    EXPECT_NE(text.find("<svg"), std::string::npos);
    EXPECT_NE(text.find("class=\"hull\""), std::string::npos);
}

TEST(Cli, VerifyConvexityA1) {
    auto r = run("verify-convexity --type A1 --point 2");
    ASSERT_EQ(r.code, 0);
    auto j = json::parse(r.out);
    EXPECT_EQ(j["status"], "pass");
    std::set<std::string> ends;
    for (const auto& p : j["endpoints"]) ends.insert(p[0].get<std::string>());
    EXPECT_EQ(ends, (std::set<std::string>{"-2", "-1", "0", "1", "2"}));
    EXPECT_TRUE(j["witnesses"].empty());
    EXPECT_FALSE(j.contains("timings"));
}

TEST(Cli, VerifyConvexityA2WithTimings) {
    auto r = run("verify-convexity --type A2 --point 2,2 --timings");
    ASSERT_EQ(r.code, 0);
    auto j = json::parse(r.out);
    EXPECT_EQ(j["counts"]["AQ"], 19);
    EXPECT_EQ(j["counts"]["gallery_endpoints"], 19);
    EXPECT_TRUE(j.contains("timings"));
}

TEST(Cli, RootsysSchema) {
    auto r = run("rootsys --type G2");
    ASSERT_EQ(r.code, 0);
    auto j = json::parse(r.out);
    for (auto k : {"label", "rank", "cartan", "gram", "positive_roots"}) EXPECT_TRUE(j.contains(k)) << k;
    EXPECT_EQ(j["positive_roots"].size(), 6u);
    EXPECT_EQ(json::parse(run("rootsys --type 'I2(5)'").out)["positive_roots"].size(), 5u);
}

TEST(Cli, FoldPathAndSvgAgree) {
    auto svg = scratch("fold.svg");
    auto r = run("fold --type A2 --point 2,2 --target 0,0 --word 2,1,2 --svg " + svg.string());
    ASSERT_EQ(r.code, 0);
    auto j = json::parse(r.out);
    EXPECT_EQ(j["path"]["endpoint"], json::array({"0", "0"}));
    EXPECT_EQ(j["word"], json::array({2, 1, 2}));
    EXPECT_EQ(j["chain"].back(), json::array({"-2", "-2"}));
    auto text = slurp(svg.string());
    auto at = text.find("class=\"path\"");
    ASSERT_NE(at, std::string::npos);
    auto pts = text.substr(text.find("points=\"", at) + 8);
    pts = pts.substr(0, pts.find('"'));
    std::size_t vertices = 1 + static_cast<std::size_t>(std::count(pts.begin(), pts.end(), ' '));
    EXPECT_EQ(vertices, j["path"]["breakpoints"].size());
}

TEST(Cli, TreeStarAndHTree) {
    auto r = run("tree --input " + data("star4.json"));
    ASSERT_EQ(r.code, 0);
    auto j = json::parse(r.out);
    EXPECT_TRUE(j["pv_ok"]);
    EXPECT_TRUE(j["rt_ok"]);
    EXPECT_TRUE(j["roundtrip_ok"]);
    for (const auto& [k, v] : j["wedge"].items()) EXPECT_EQ(v, "0") << k;
    auto h = json::parse(run("tree --input " + data("h_tree.json") + " --base c,d,a").out);
    EXPECT_TRUE(h["roundtrip_ok"]);
    EXPECT_EQ(h["wedge"]["a,b"], "3");
    auto lex = run("tree --input " + data("h_tree_lex.json") + " --base c,d,a");
    ASSERT_EQ(lex.code, 0);
    auto l = json::parse(lex.out);
    EXPECT_TRUE(l["roundtrip_ok"]);
    EXPECT_EQ(l["wedge"]["a,b"], "(1;-2)");
}

TEST(Cli, TreeViolationIsReported) {
    auto r = run("tree --input " + data("bad_sign.json"));
    EXPECT_EQ(r.code, 1);
    auto j = json::parse(r.out);
    EXPECT_FALSE(j["pv_ok"]);
    EXPECT_FALSE(j["violations"].empty());
}

TEST(Cli, SuzukiReeNormAndCheck) {
    auto n = run("sr norm --case B --args x^{1} x^{1}");
    ASSERT_EQ(n.code, 0);
    auto j = json::parse(n.out);
    EXPECT_EQ(j["nu"], j["closed_form"]);
    EXPECT_EQ(j["nu"], "0+1√2");
    auto c = run("sr check --case G --samples 100 --seed 5");
    ASSERT_EQ(c.code, 0);
    EXPECT_EQ(json::parse(c.out)["status"], "pass");
    EXPECT_EQ(run("sr check --case G --samples 100 --seed 5").out, c.out);
    EXPECT_EQ(run("sr check --case F --samples 50 --seed 2").code, 0);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run("").code, 2);
    EXPECT_EQ(run("hull --type A2").code, 2);
    EXPECT_EQ(run("hull --type A2 --point 3").code, 2);
    EXPECT_EQ(run("hull --type Q7 --point 1").code, 2);
    EXPECT_EQ(run("fold --type A2 --point 3,3 --target 4,2").code, 2);
    EXPECT_EQ(run("sr norm --case B --args x^{1}").code, 2);
    EXPECT_EQ(run("verify-convexity --type A2 --point 3,3", "WEYLKIT_CAP=5").code, 3);
}
