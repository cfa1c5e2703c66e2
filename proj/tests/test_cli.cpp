#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>
#include <sys/wait.h>

#include <json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run(const std::string& args, const std::string& env = {}) {
    const std::string cmd = env + (env.empty() ? "" : " ") + EXTLAB_CLI + std::string(" ") + args + " 2>/dev/null";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string data(const std::string& rel) { return std::string(EXTLAB_DATA) + "/" + rel; }

std::string tmpdir() {
    auto d = std::filesystem::temp_directory_path() / "extlab_cli_test";
    std::filesystem::create_directories(d);
    return d.string();
}

}  // namespace

TEST(Cli, H2Examples) {
    auto r = run("h2 --group C2 --coeffs 2");
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(json::parse(r.out)["h2_invariants"], json::array({2}));
    EXPECT_EQ(json::parse(run("h2 --group C2 --coeffs 3").out)["h2_invariants"], json::array());
    EXPECT_EQ(json::parse(run("h2 --group V4 --coeffs 2").out)["h2_invariants"], json::array({2, 2, 2}));
    auto list = json::parse(run("h2 --group C2 --coeffs 2,4").out);
    EXPECT_EQ(list["coeffs"], json::array({2, 4}));
    EXPECT_EQ(list["h2_invariants"], json::array({2, 2}));
    auto file = json::parse(run("h2 --group " + data("groups/d8_perm.json") + " --coeffs " +
                                data("modules/c2xc4.json"))
                                .out);
    EXPECT_EQ(file["h2_invariants"], json::array({2, 2, 2, 2, 2, 2}));
}

TEST(Cli, BuildExamples) {
    auto trivial = json::parse(run("build --group S3 --coeffs 2").out);
    EXPECT_EQ(trivial["order"], 12);
    EXPECT_EQ(trivial["sidecar"]["encode"], "row-major");
    auto c4 = run("build --cocycle " + data("cocycles/c2_c2_class_1.json"));
    ASSERT_EQ(c4.code, 0);
    EXPECT_EQ(json::parse(c4.out)["max_element_order"], 4);
    const auto out = tmpdir() + "/prod.json";
    ASSERT_EQ(run("build --cocycle " + data("cocycles/c3_c3_class_1.json") + " --out " + out).code, 0);
    EXPECT_TRUE(std::filesystem::exists(out + ".sidecar.json"));
    auto g = json::parse(run("group " + out).out);
    EXPECT_EQ(g["order"], 9);
    EXPECT_EQ(g["cyclic"], true);
    EXPECT_EQ(run("build --cocycle " + data("cocycles/bad_identity_row.json")).code, 3);
    EXPECT_EQ(run("build --cocycle " + data("cocycles/bad_not_cocycle.json")).code, 3);
}

TEST(Cli, IsoExitCodes) {
    auto yes = run("iso --mode upper " + data("cocycles/c2_c2_class_1.json") + " " +
                   data("cocycles/c2_c2_class_1.json"));
    EXPECT_EQ(yes.code, 0);
    EXPECT_EQ(json::parse(yes.out)["verdict"], "yes");
    auto no = run("iso --mode hg2 " + data("cocycles/c2_c2_class_0.json") + " " +
                  data("cocycles/c2_c2_class_1.json"));
    EXPECT_EQ(no.code, 1);
    EXPECT_EQ(json::parse(no.out)["verdict"], "no");
    auto hg2yes = json::parse(run("iso --mode hg2 " + data("cocycles/c3_c3_class_1.json") + " " +
                                  data("cocycles/c3_c3_class_1.json"))
                                  .out);
    EXPECT_TRUE(hg2yes["certificate"].contains("eta"));
    // cap: cohomology of S3 refused below order 6
    EXPECT_EQ(run("iso --mode g2 " + data("cocycles/s3_c6_class_0.json") + " " +
                  data("cocycles/s3_c6_class_1.json"),
                  "EXTLAB_MAX_ORDER=4")
                  .code,
              2);
    // mismatched coefficients
    EXPECT_EQ(run("iso --mode upper " + data("cocycles/c2_c2_class_0.json") + " " +
                  data("cocycles/c3_c3_class_0.json"))
                  .code,
              3);
    EXPECT_EQ(run("iso --mode sideways " + data("cocycles/c2_c2_class_0.json") + " " +
                  data("cocycles/c2_c2_class_0.json"))
                  .code,
              3);
}

TEST(Cli, IsoG2MatchesOracleOnS3) {
    for (auto a : {"s3_c6_class_0.json", "s3_c6_class_1.json"})
        for (auto b : {"s3_c6_class_0.json", "s3_c6_class_1.json"}) {
            const std::string files = data(std::string("cocycles/") + a) + " " + data(std::string("cocycles/") + b);
            auto d = run("iso --mode g2 " + files);
            auto o = run("oracle --kind g2 " + files);
            EXPECT_EQ(d.code, o.code) << a << " " << b;
        }
}

TEST(Cli, VerifyExamples) {
    auto t33 = run("verify --theorem T3.3 --group S3 --coeffs 6 --exhaustive");
    EXPECT_EQ(t33.code, 0);
    auto j = json::parse(t33.out);
    EXPECT_EQ(j["status"], "pass");
    EXPECT_EQ(j["counterexamples"], json::array());
    EXPECT_EQ(j["vacuous"], false);
    EXPECT_EQ(run("verify --theorem P4.3 --group C6 --coeffs 6 --exhaustive").code, 0);
    auto gate = run("verify --theorem P5.3 --group S3 --coeffs 2 --exhaustive");
    EXPECT_EQ(gate.code, 2);
    EXPECT_EQ(json::parse(gate.out)["status"], "hypothesis-not-met");
    auto sampled = json::parse(run("verify --theorem T3.6 --group C4 --coeffs 4 --sample 5 --seed 7").out);
    EXPECT_EQ(sampled["seed"], 7);
    EXPECT_EQ(sampled["pairs_checked"], 5);
    EXPECT_EQ(run("verify --theorem T3.3 --group S3 --coeffs 6").code, 3);
    EXPECT_EQ(run("verify --theorem X9.9 --group S3 --coeffs 6 --exhaustive").code, 3);
}

TEST(Cli, Determinism) {
    for (const auto& args : std::vector<std::string>{"h2 --group D8 --coeffs 4",
                      "verify --theorem P4.5 --group C6 --coeffs 6 --exhaustive",
                      "verify --theorem T4.4 --group S3 --coeffs 6 --sample 8 --seed 3",
                      "iso --mode upper " + data("cocycles/v4_c2_class_3.json") + " " +
                          data("cocycles/v4_c2_class_5.json")}) {
        auto a = run(args), b = run(args);
        EXPECT_EQ(a.code, b.code);
        EXPECT_EQ(a.out, b.out) << args;
    }
}

TEST(Cli, EnvOverridesGroupCap) {
    EXPECT_EQ(run("group A5").code, 0);
    EXPECT_EQ(run("group A5", "EXTLAB_MAX_ORDER=59").code, 2);
    EXPECT_EQ(run("group S4", "EXTLAB_MAX_ORDER=30").code, 0);
    EXPECT_EQ(run("group S4", "EXTLAB_MAX_ORDER=23").code, 2);
    EXPECT_EQ(run("group Nope").code, 3);
}

TEST(Cli, OutputFormats) {
    auto csv = run("h2 --group C3 --coeffs 3 --format csv");
    EXPECT_NE(csv.out.find("h2_order,3"), std::string::npos);
    auto text = run("group S3 --format text");
    EXPECT_NE(text.out.find("centerless: true"), std::string::npos);
}
