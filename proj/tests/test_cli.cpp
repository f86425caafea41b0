// Runs the schemewalk binary end to end and inspects its artifacts.

#include "json.hpp"

#include <gtest/gtest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const std::string cli = SCHEMEWALK_CLI;
const std::string data = SCHEMEWALK_DATA_DIR;

class Cli : public ::testing::Test {
protected:
    void SetUp() override
    {
        const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
        root_ = fs::temp_directory_path() / ("schemewalk_cli_" + std::to_string(::getpid()) + "_" + info->name());
        fs::remove_all(root_);
        fs::create_directories(root_);
    }
    void TearDown() override { fs::remove_all(root_); }

    /// Runs the CLI with `args`, returns its exit status.
    int run(const std::string& args, const std::string& env = "")
    {
        const std::string cmd = env + (env.empty() ? "" : " ") + "'" + cli + "' " + args + " >'" +
                                (root_ / "stdout.txt").string() + "' 2>'" + (root_ / "stderr.txt").string() + "'";
        const int status = std::system(cmd.c_str());
        return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    }

    std::string out(const std::string& name) const { return (root_ / name).string(); }

    static std::string slurp(const fs::path& p)
    {
        std::ifstream in(p, std::ios::binary);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }

    json read_json(const std::string& rel) const { return json::parse(slurp(root_ / rel)); }
    std::string stderr_text() const { return slurp(root_ / "stderr.txt"); }

    /// CSV rows as string fields, header dropped.
    std::vector<std::vector<std::string>> read_csv(const std::string& rel) const
    {
        std::vector<std::vector<std::string>> rows;
        std::stringstream ss(slurp(root_ / rel));
        std::string line;
        std::getline(ss, line);
        while (std::getline(ss, line)) {
            std::vector<std::string> fields;
            std::stringstream ls(line);
            std::string f;
            while (std::getline(ls, f, ',')) {
                fields.push_back(f);
            }
            rows.push_back(fields);
        }
        return rows;
    }

    fs::path root_;
};

} // namespace

TEST_F(Cli, JohnsonWritesFourArtifacts)
{
    ASSERT_EQ(run("scheme johnson 5 2 --out " + out("j52")), 0) << stderr_text();
    std::set<std::string> files;
    for (const auto& e : fs::directory_iterator(out("j52"))) {
        files.insert(e.path().filename().string());
    }
    EXPECT_EQ(files, (std::set<std::string>{"scheme.json", "verification.json", "intersection.json", "krein.json"}));
    EXPECT_TRUE(read_json("j52/verification.json")["passed"].get<bool>());
    EXPECT_EQ(read_json("j52/intersection.json")["p"][1][1][1], 3);
    EXPECT_EQ(read_json("j52/krein.json")["multiplicities"], json({1, 4, 5}));
}

TEST_F(Cli, OutputIsByteIdentical)
{
    const std::vector<std::pair<std::string, std::vector<std::string>>> runs{
        {"scheme grassmann 2 4 2 --out {}", {"scheme.json", "intersection.json", "krein.json"}},
        {"walk grover --tree-degree 3 --steps 6 --vacuum-split --out {}", {"walk.csv", "summary.json"}},
        {"walk line --coin hadamard --steps 20 --out {}", {"walk.csv", "summary.json"}},
        {"ifs --tree-degree 3 --depth 6 --moments 10 --out {}", {"jacobi.json", "moments.json", "strata.json"}},
        {"fusion ising --power sigma 6 --trees sigma,sigma,sigma,sigma --total 1 --out {}", {"report.json"}}};
    for (const auto& [pattern, files] : runs) {
        std::vector<std::string> seen;
        for (const char* tag : {"a", "b"}) {
            auto args = pattern;
            args.replace(args.find("{}"), 2, out(tag));
            ASSERT_EQ(run(args), 0) << args << "\n" << stderr_text();
        }
        for (const auto& f : files) {
            EXPECT_EQ(slurp(root_ / "a" / f), slurp(root_ / "b" / f)) << pattern << " " << f;
        }
        fs::remove_all(root_ / "a");
        fs::remove_all(root_ / "b");
    }
}

TEST_F(Cli, SeedFromEnvironment)
{
    ASSERT_EQ(run("scheme johnson 6 3 --out " + out("a")), 0);
    ASSERT_EQ(run("scheme johnson 6 3 --out " + out("b"), "SCHEMEWALK_SEED=99"), 0);
    ASSERT_EQ(run("scheme johnson 6 3 --seed 99 --out " + out("c")), 0);
    EXPECT_EQ(read_json("a/krein.json")["seed"], 0xA55C);
    EXPECT_EQ(read_json("b/krein.json")["seed"], 99);
    EXPECT_EQ(slurp(root_ / "b" / "krein.json"), slurp(root_ / "c" / "krein.json"));
    const auto qa = read_json("a/krein.json")["rounded"];
    const auto qb = read_json("b/krein.json")["rounded"];
    EXPECT_EQ(qa, qb);
    EXPECT_EQ(run("scheme johnson 6 3 --out " + out("d"), "SCHEMEWALK_SEED=zzz"), 1);
}

TEST_F(Cli, BadSchemeEntryIsParseError)
{
    EXPECT_EQ(run("scheme verify " + data + "/bad.json --out " + out("bad")), 1);
    EXPECT_NE(stderr_text().find("entry 2"), std::string::npos);
}

TEST_F(Cli, FailingAxiomExitsTwo)
{
    EXPECT_EQ(run("scheme verify " + data + "/path3_classes.json --out " + out("p3")), 2);
    const auto rep = read_json("p3/verification.json");
    EXPECT_FALSE(rep["passed"].get<bool>());
}

TEST_F(Cli, VerifyAcceptsValidFile)
{
    EXPECT_EQ(run("scheme verify " + data + "/k2.json --out " + out("k2")), 0) << stderr_text();
    EXPECT_TRUE(fs::exists(out("k2/krein.json")));
}

TEST_F(Cli, GroupConjugacyClassSizes)
{
    ASSERT_EQ(run("scheme group " + data + "/s3.json --orbits conjugation --out " + out("s3")), 0) << stderr_text();
    auto v = read_json("s3/scheme.json")["valencies"].get<std::vector<int>>();
    std::sort(v.begin(), v.end());
    EXPECT_EQ(v, (std::vector<int>{1, 2, 3}));
}

TEST_F(Cli, MissingInputFile) { EXPECT_EQ(run("scheme verify /nonexistent.json"), 1); }

TEST_F(Cli, UnknownSubcommand) { EXPECT_EQ(run("frobnicate"), 1); }

TEST_F(Cli, GroverVacuumSplitStepTwo)
{
    ASSERT_EQ(run("walk grover --tree-degree 3 --steps 3 --vacuum-split --out " + out("g")), 0) << stderr_text();
    std::map<std::string, std::multiset<std::string>> by_step;
    for (const auto& r : read_csv("g/walk.csv")) {
        if (r[3] != "0") {
            by_step[r[0]].insert(r[3]);
        }
        EXPECT_EQ(r[4], "0");
    }
    EXPECT_EQ(by_step["1"], (std::multiset<std::string>{"1"}));
    EXPECT_EQ(by_step["2"], (std::multiset<std::string>{"-1/3", "2/3", "2/3"}));
    EXPECT_EQ(by_step["3"], (std::multiset<std::string>{"1/9", "-2/9", "-2/9", "-2/9", "-2/9", "4/9", "4/9", "4/9",
                                                        "4/9"}));
    const auto summary = read_json("g/summary.json");
    for (const auto& n : summary["norm_squared_exact"]) {
        EXPECT_EQ(n, "1");
    }
    EXPECT_EQ(summary["first_step"], 1);
    // after one step all mass sits one level out from the root
    EXPECT_EQ(summary["stratum_mass"][1][1], 1.0);
}

TEST_F(Cli, GroverStepsZeroEchoesInitial)
{
    ASSERT_EQ(run("walk grover --graph " + data + "/cycle4.json --steps 0 --out " + out("c4")), 0) << stderr_text();
    const auto rows = read_csv("c4/walk.csv");
    ASSERT_EQ(rows.size(), 8u);
    for (const auto& r : rows) {
        EXPECT_EQ(r[0], "0");
        EXPECT_EQ(r[3], (r[1] == "0" && r[2] == "1") ? "1" : "0");
    }
}

TEST_F(Cli, GroverInvalidArc)
{
    EXPECT_EQ(run("walk grover --graph " + data + "/cycle4.json --steps 2 --initial-arc 0,2 --out " + out("x")), 1);
    EXPECT_NE(stderr_text().find("not an arc"), std::string::npos);
}

TEST_F(Cli, GroverFloatMatchesExact)
{
    ASSERT_EQ(run("walk grover --tree-degree 3 --steps 4 --initial-arc 0,1 --float --out " + out("f")), 0);
    ASSERT_EQ(run("walk grover --tree-degree 3 --steps 4 --initial-arc 0,1 --out " + out("e")), 0);
    const auto f = read_csv("f/walk.csv");
    const auto e = read_csv("e/walk.csv");
    ASSERT_EQ(f.size(), e.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        const auto& frac = e[i][3];
        const auto slash = frac.find('/');
        const double exact = slash == std::string::npos
                                 ? std::stod(frac)
                                 : std::stod(frac.substr(0, slash)) / std::stod(frac.substr(slash + 1));
        EXPECT_NEAR(std::stod(f[i][3]), exact, 1e-14);
    }
}

TEST_F(Cli, HadamardParity)
{
    ASSERT_EQ(run("walk line --coin hadamard --steps 10 --out " + out("l")), 0) << stderr_text();
    int checked = 0;
    for (const auto& r : read_csv("l/walk.csv")) {
        const int t = std::stoi(r[0]);
        const int x = std::stoi(r[1]);
        if ((t + x) % 2 != 0) {
            EXPECT_EQ(r[3], "0");
            EXPECT_EQ(r[4], "0");
            ++checked;
        }
    }
    EXPECT_GT(checked, 50);
}

TEST_F(Cli, SplitStepAndBadCoin)
{
    EXPECT_EQ(run("walk line --split 0.3,0.9 --steps 15 --coin-state sym --out " + out("s")), 0) << stderr_text();
    EXPECT_LT(read_json("s/summary.json")["max_norm_drift"].get<double>(), 1e-12);
    EXPECT_EQ(run("walk line --coin unitary --coin-a 1,0 --coin-b 1,0 --steps 3 --out " + out("u")), 1);
    EXPECT_EQ(run("walk line --coin bogus --steps 3 --out " + out("u")), 1);
}

TEST_F(Cli, IfsTree)
{
    ASSERT_EQ(run("ifs --tree-degree 3 --depth 6 --base 0 --moments 6 --out " + out("t")), 0) << stderr_text();
    EXPECT_EQ(read_json("t/jacobi.json")["omega"], json({3.0, 2.0, 2.0, 2.0, 2.0}));
    EXPECT_EQ(read_json("t/moments.json")["vacuum"], json({1, 0, 3, 0, 15, 0, 87}));
    EXPECT_LT(read_json("t/moments.json")["max_difference"].get<double>(), 1e-9);
    EXPECT_EQ(read_json("t/strata.json")["sizes"], json({1, 3, 6, 12, 24, 48, 96}));
}

TEST_F(Cli, IfsBernoulli)
{
    ASSERT_EQ(run("ifs --graph " + data + "/path2.json --base 0 --moments 10 --out " + out("p")), 0) << stderr_text();
    EXPECT_EQ(read_json("p/jacobi.json")["omega"], json({1.0}));
    EXPECT_EQ(read_json("p/moments.json")["vacuum"], json({1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1}));
}

TEST_F(Cli, IfsLeakageExitsThree)
{
    EXPECT_EQ(run("ifs --graph " + data + "/star_irregular.json --base 0 --out " + out("s")), 3);
    EXPECT_NE(stderr_text().find("stratum 2"), std::string::npos);
    ASSERT_EQ(run("ifs --graph " + data + "/star_irregular.json --base 0 --force-projection --out " + out("f")), 0);
    const auto j = read_json("f/jacobi.json");
    EXPECT_FALSE(j["tridiagonal"].get<bool>());
    EXPECT_NEAR(j["max_leakage"].get<double>(), std::sqrt(0.5), 1e-12);
}

TEST_F(Cli, IfsBadBase) { EXPECT_EQ(run("ifs --cycle 5 --base 7 --out " + out("x")), 1); }

TEST_F(Cli, FusionIsingPower)
{
    ASSERT_EQ(run("fusion ising --power sigma 5 --out " + out("f")), 0) << stderr_text();
    const auto text = slurp(root_ / "f" / "report.json");
    EXPECT_NE(text.find("4σ"), std::string::npos);
    const auto rep = json::parse(text);
    EXPECT_EQ(rep["powers"][2]["value"], "2σ");
    EXPECT_TRUE(rep["verlinde"]["passed"].get<bool>());
    for (const auto& q : rep["six_sigma_qutrit"]) {
        EXPECT_TRUE(q["valid"].get<bool>());
    }
}

TEST_F(Cli, FusionIsingTrees)
{
    ASSERT_EQ(run("fusion ising --trees sigma,sigma,sigma --total sigma --out " + out("f")), 0) << stderr_text();
    EXPECT_EQ(read_json("f/report.json")["trees"]["dimension"], 2);
    EXPECT_EQ(run("fusion ising --trees sigma,tau --total sigma --out " + out("g")), 1);
}

TEST_F(Cli, FusionVerifyTrivialAndBroken)
{
    ASSERT_EQ(run("fusion verify " + data + "/trivial.json --out " + out("t")), 0) << stderr_text();
    const auto rep = read_json("t/report.json");
    EXPECT_TRUE(rep["verification"]["passed"].get<bool>());
    EXPECT_EQ(rep["quantum_dimensions"], json({1.0}));
    EXPECT_EQ(run("fusion verify " + data + "/ising_broken.json --out " + out("b")), 2);
    EXPECT_NE(stderr_text().find("associativity"), std::string::npos);
}

TEST_F(Cli, FusionFromKrein)
{
    ASSERT_EQ(run("scheme group " + data + "/s3.json --out " + out("s3")), 0);
    ASSERT_EQ(run("fusion --from-krein " + out("s3/krein.json") + " --out " + out("k")), 0) << stderr_text();
    EXPECT_EQ(read_json("k/report.json")["accepted"], json({"sqrt_rescaled"}));
    ASSERT_EQ(run("scheme johnson 4 2 --out " + out("j42")), 0);
    EXPECT_EQ(run("fusion --from-krein " + out("j42/krein.json") + " --out " + out("kj")), 2);
    const auto rep = read_json("kj/report.json");
    EXPECT_TRUE(rep["accepted"].empty());
    EXPECT_TRUE(rep["views"][0]["integral"].get<bool>());
}
