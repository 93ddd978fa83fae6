// End-to-end runs of the listhom executable.

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

struct Run {
    int status;
    std::string out;
};

Run run(const std::string & args)
{
    std::string cmd = std::string(LISTHOM_CLI) + " " + args + " 2>/dev/null";
    FILE * pipe = popen(cmd.c_str(), "r");
    if (!pipe)
        return {-1, {}};
    std::string out;
    char buf[4096];
    while (auto n = fread(buf, 1, sizeof buf, pipe))
        out.append(buf, n);
    int raw = pclose(pipe);
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

class Cli : public ::testing::Test {
protected:
    fs::path dir;

    void SetUp() override
    {
        auto name = ::testing::UnitTest::GetInstance()->current_test_info()->name();
        dir = fs::temp_directory_path() / (std::string("listhom_cli_") + name);
        fs::create_directories(dir);
    }
    void TearDown() override { fs::remove_all(dir); }

    std::string write(const std::string & name, const std::string & text)
    {
        auto p = dir / name;
        std::ofstream(p) << text;
        return p.string();
    }
};

const char * triangle_k3 = R"({"graph": {"n": 3, "edges": [[0,1],[1,2],[0,2]]}, "target": {"k": 3}})";
const char * triangle_k2 = R"({"graph": {"n": 3, "edges": [[0,1],[1,2],[0,2]]}, "target": {"k": 2}})";
const char * c5_k3 = R"({"graph": {"n": 5, "edges": [[0,1],[1,2],[2,3],[3,4],[4,0]]}, "target": {"k": 3}})";

} // namespace

TEST_F(Cli, SolveExitCodes)
{
    auto yes = run("solve --witness " + write("t3.json", triangle_k3));
    EXPECT_EQ(yes.status, 0);
    EXPECT_NE(yes.out.find("TRUE"), std::string::npos);
    EXPECT_NE(yes.out.find("witness:"), std::string::npos);

    auto no = run("solve " + write("t2.json", triangle_k2));
    EXPECT_EQ(no.status, 1);
    EXPECT_NE(no.out.find("FALSE"), std::string::npos);

    auto c5 = write("c5.json", c5_k3);
    EXPECT_EQ(run("solve " + c5).status, 2);
    EXPECT_EQ(run("solve --fallback-brute " + c5).status, 0);
}

TEST_F(Cli, SolveJson)
{
    auto r = run("solve --json " + write("t3.json", triangle_k3));
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out.rfind("{\"result\":true,\"witness\":[", 0), 0U);
    auto n = run("solve --json " + write("t2.json", triangle_k2));
    EXPECT_EQ(n.out, "{\"result\":false}\n");
}

TEST_F(Cli, UsageAndIoErrors)
{
    EXPECT_EQ(run("solve " + (dir / "missing.json").string()).status, 3);
    EXPECT_EQ(run("solve " + write("bad.json", "{\"graph\": 1}")).status, 3);
    EXPECT_EQ(run("no-such-command").status, 3);
    EXPECT_EQ(run("--help").status, 0);
}

TEST_F(Cli, CheckOrdering)
{
    auto c4 = write("c4.json", R"({"graph": {"n": 4, "edges": [[0,1],[1,2],[2,3],[3,0]]}, "target": {"k": 3}})");
    auto r = run("check-ordering " + c4);
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("found"), std::string::npos);

    auto claw = write("claw.json",
        R"({"graph": {"n": 7, "edges": [[0,1],[0,2],[0,3],[1,4],[2,5],[3,6]]}, "target": {"k": 3}})");
    auto none = run("check-ordering " + claw);
    EXPECT_EQ(none.status, 1);
    EXPECT_NE(none.out.find("none"), std::string::npos);
    auto all = run("check-ordering --all-starts " + claw);
    EXPECT_EQ(all.status, 1);
    EXPECT_EQ(all.out.find(": found"), std::string::npos);

    auto p4 = write("p4.json", R"({"graph": {"n": 4, "edges": [[0,1],[1,2],[2,3]]}, "target": {"k": 3}})");
    auto from1 = run("check-ordering --start 1 " + p4);
    EXPECT_EQ(from1.status, 0);
    EXPECT_NE(from1.out.find("ordering from 1"), std::string::npos);
}

TEST_F(Cli, GenIsDeterministic)
{
    auto a = run("gen permutation --n 12 --k 4 --density 0.6 --seed 9");
    auto b = run("gen permutation --n 12 --k 4 --density 0.6 --seed 9");
    EXPECT_EQ(a.status, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_NE(a.out, run("gen permutation --n 12 --k 4 --density 0.6 --seed 10").out);

    auto k3 = run("gen permutation --perm 1,2,3 --k 3");
    EXPECT_EQ(k3.out, "{\"graph\":{\"edges\":[[0,1],[0,2],[1,2]],\"n\":3},"
                      "\"lists\":[[0,1,2],[0,1,2],[0,1,2]],\"target\":{\"k\":3}}\n");

    auto c5 = write("gen_c5.json", run("gen cycle --n 5 --k 3").out);
    EXPECT_EQ(run("solve " + c5).status, 2);
    EXPECT_EQ(run("gen interval --n 0 --density 0").status, 3);
}

TEST_F(Cli, FuzzIsClean)
{
    auto r = run("fuzz --trials 100 --max-n 8 --k 3 --seed 1 --family permutation");
    EXPECT_EQ(r.status, 0) << r.out;
    EXPECT_NE(r.out.find("disagreements: 0"), std::string::npos);
    EXPECT_EQ(run("fuzz --trials 40 --max-n 8 --k 4 --seed 3 --family interval --density 0.5").status, 0);
    EXPECT_EQ(run("fuzz --trials 1 --max-n 21").status, 3);
}

TEST_F(Cli, Oracle)
{
    auto r = run("oracle --witness " + write("t3.json", triangle_k3));
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("witness: 0 1 2"), std::string::npos);
    auto c = run("oracle --count " + write("t3b.json", triangle_k3));
    EXPECT_NE(c.out.find("count: 6"), std::string::npos);
    EXPECT_EQ(run("oracle " + write("c5.json", c5_k3)).status, 0);
    EXPECT_EQ(run("oracle --cap 3 " + write("c5b.json", c5_k3)).status, 3);
}

TEST_F(Cli, ExportConfigs)
{
    auto p3 = write("p3.json", R"({"graph": {"n": 3, "edges": [[0,1],[1,2]]}, "target": {"k": 3}})");
    auto dot = dir / "p3.dot";
    auto r = run("export-configs " + p3 + " --dot " + dot.string());
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("path: yes"), std::string::npos);
    std::ifstream in(dot);
    std::string text((std::istreambuf_iterator<char>(in)), {});
    EXPECT_NE(text.find("digraph"), std::string::npos);
    EXPECT_NE(text.find("color=red"), std::string::npos);

    EXPECT_EQ(run("export-configs " + write("c5.json", c5_k3)).status, 2);

    auto big = write("big.json", run("gen permutation --perm 1,2,3,4,5,6,7,8 --k 6").out);
    EXPECT_EQ(run("export-configs " + big + " --cap 10").status, 3);
}
