#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>

#include "pachner/constructions.hpp"
#include "pachner/fvector.hpp"
#include "pachner/io.hpp"

namespace fs = std::filesystem;
using namespace pachner;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(const std::string& args)
{
    const fs::path err_file = fs::temp_directory_path() / "pachner_cli_stderr.txt";
    const std::string cmd = std::string(PACHNER_CLI) + " " + args + " 2>" + err_file.string();
    FILE* pipe = popen(cmd.c_str(), "r");
    std::string out;
    std::array<char, 4096> buf{};
    while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe))
        out.append(buf.data(), n);
    const int status = pclose(pipe);
    std::string err = fs::exists(err_file) ? read_file(err_file) : std::string();
    fs::remove(err_file);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out, err};
}

class Cli : public ::testing::Test {
protected:
    void SetUp() override
    {
        dir = fs::temp_directory_path() /
              ("pachner_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir);
        fs::create_directories(dir);
    }
    void TearDown() override { fs::remove_all(dir); }
    std::string path(const std::string& name) const { return (dir / name).string(); }
    std::string save(const std::string& name, const std::string& text) const
    {
        write_file(dir / name, text);
        return path(name);
    }
    fs::path dir;
};

} // namespace

TEST_F(Cli, FvecReportsClosedAndBoundedComplexes)
{
    const Outcome torus = run("fvec fixture:torus7");
    EXPECT_EQ(torus.code, 0);
    EXPECT_NE(torus.out.find("f = 7,21,14; chi = 0; DS: closed-ok"), std::string::npos) << torus.out;

    const std::string disk = save("disk.fl", write_facet_list(fixture("disk_cone")));
    const Outcome d = run("fvec " + disk);
    EXPECT_EQ(d.code, 0);
    EXPECT_NE(d.out.find("boundary f = 3,3"), std::string::npos) << d.out;
    EXPECT_NE(d.out.find("DS(2): ok"), std::string::npos) << d.out;

    const Outcome bad = run("fvec " + save("bad.fl", "1 2 3\n2 3\n"));
    EXPECT_EQ(bad.code, 2);
    EXPECT_NE(bad.err.find("NotPure"), std::string::npos);
    EXPECT_EQ(run("fvec " + path("missing.fl")).code, 2);
    EXPECT_EQ(run("fvec fixture:nope").code, 2);
}

TEST_F(Cli, MovesApplyAndIllegalMoves)
{
    const Outcome moves = run("moves fixture:bipyramid -i 1");
    EXPECT_EQ(moves.code, 0);
    EXPECT_NE(moves.out.find("i=1 sigma={1,2} tau={4,5}"), std::string::npos) << moves.out;

    const std::string sphere = save("sphere2.fl", write_facet_list(fixture("sphere2_min")));
    const std::string out = path("bip.fl");
    const Outcome apply = run("apply " + sphere + R"( --move '{"kind":"bistellar","sigma":[1,2,3],"tau":[5],"i":0}' -o )" + out);
    EXPECT_EQ(apply.code, 0) << apply.err;
    EXPECT_EQ(load_complex(out), fixture("bipyramid"));
    EXPECT_TRUE(fs::exists(out + ".log.jsonl"));
    EXPECT_EQ(run("replay " + sphere + " " + out + ".log.jsonl --expect " + out).code, 0);

    const Outcome illegal = run("apply " + sphere + R"( --move '{"kind":"bistellar","sigma":[1,2],"tau":[3,4],"i":1}')");
    EXPECT_EQ(illegal.code, 3);
    EXPECT_NE(illegal.err.find("IllegalMove"), std::string::npos);
}

TEST_F(Cli, ShellAndSubdivide)
{
    const Outcome list = run("shell fixture:disk_two");
    EXPECT_EQ(list.code, 0);
    EXPECT_NE(list.out.find("i=0 sigma={4} tau={2,3}"), std::string::npos) << list.out;
    const Outcome shelled = run(R"(shell fixture:disk_two --move '{"kind":"shelling","sigma":[4],"tau":[2,3],"i":0}')");
    EXPECT_EQ(shelled.code, 0);
    EXPECT_EQ(parse_complex(shelled.out), build_complex({{1, 2, 3}}));
    EXPECT_EQ(run("shell fixture:sphere2_min").code, 4);

    const Outcome sub = run("subdivide fixture:triangle --facet 1,2,3 --face 1,2 -o " + path("s.fl"));
    EXPECT_EQ(sub.code, 0) << sub.err;
    EXPECT_EQ(load_complex(path("s.fl")).num_facets(), 4u);
    EXPECT_EQ(run("subdivide fixture:disk_two --facet 1,2,3 --face 2,3").code, 3);
}

TEST_F(Cli, SolveDvecDouble)
{
    const Outcome plan = run("solve -n 2 --from 4,6,4 --to 12,30,20");
    EXPECT_EQ(plan.code, 0);
    EXPECT_NE(plan.out.find("0:+8; N=8"), std::string::npos) << plan.out;
    EXPECT_NE(run("solve --from 4,6,4 --to 4,6,4").out.find("N=0"), std::string::npos);
    EXPECT_EQ(run("solve --from 4,6,4 --to 7,21,14").code, 4);
    EXPECT_EQ(run("dvec -n 3 -i 1").code, 0);
    const Outcome dbl = run("double fixture:disk_cone");
    EXPECT_EQ(dbl.code, 0);
    EXPECT_EQ(f_vector(parse_complex(dbl.out)).f, (std::vector<Integer>{5, 9, 6}));
    EXPECT_EQ(run("double fixture:torus7").code, 4);
}

TEST_F(Cli, CellsAndCheck)
{
    const Outcome plump = run("--seed 7 plump -n 2 -o " + path("k2.json"));
    EXPECT_EQ(plump.code, 0) << plump.err;
    EXPECT_EQ(run("check " + path("k2.json")).code, 0);
    const Outcome mold = run("mold -n 3 --seed 7 -o " + path("u3.json"));
    EXPECT_EQ(mold.code, 0) << mold.err;
    EXPECT_EQ(run("check " + path("u3.json")).code, 0);
    EXPECT_EQ(run("mold -n 5").code, 4);
    EXPECT_EQ(run("check fixture:torus7").code, 0);

    // Same seed, same bytes.
    EXPECT_EQ(run("plump -n 3 --seed 4").out, run("plump -n 3 --seed 4").out);
}

TEST_F(Cli, EqualizeAndReplay)
{
    const std::string a = save("sphere2_min.fl", write_facet_list(fixture("sphere2_min")));
    const std::string b = save("icosahedron.fl", write_facet_list(fixture("icosahedron")));
    const Outcome eq = run("equalize " + a + " " + b + " -o " + path("out"));
    EXPECT_EQ(eq.code, 0) << eq.err;
    const FacetComplex c1 = load_complex(path("out/c1.fl"));
    EXPECT_EQ(f_vector(c1), f_vector(load_complex(path("out/c2.fl"))));
    EXPECT_EQ(run("replay " + a + " " + path("out/log1.jsonl") + " --expect " + path("out/c1.fl")).code, 0);
    EXPECT_EQ(run("replay " + b + " " + path("out/log1.jsonl")).code, 3);
    EXPECT_EQ(run("equalize " + a + " fixture:torus7").code, 4);

    const Outcome full = run("equalize fixture:disk_cone fixture:disk_hexagon --full -o " + path("full"));
    EXPECT_EQ(full.code, 0) << full.err;
    const FacetComplex d1 = load_complex(path("full/c1.fl")), d2 = load_complex(path("full/c2.fl"));
    EXPECT_EQ(f_vector(d1), f_vector(d2));
    EXPECT_EQ(f_vector(boundary_complex(d1)), f_vector(boundary_complex(d2)));

    const Outcome first = run("equalize fixture:torus7 fixture:torus7 --format json --seed 3");
    EXPECT_EQ(first.out, run("equalize fixture:torus7 fixture:torus7 --format json --seed 3").out);
}

TEST_F(Cli, BadArgumentsExitTwo)
{
    EXPECT_EQ(run("frobnicate").code, 2);
    EXPECT_EQ(run("dvec").code, 2);
    EXPECT_EQ(run("apply fixture:triangle --move '{not json'").code, 2);
}
