/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <isolation/cli.hh>
#include <isolation/graph6.hh>
#include <isolation/isolation.hh>
#include <isolation/patterns.hh>

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

using namespace isolation;

namespace
{
    struct Outcome
    {
        int code;
        std::string out, err;
    };

    auto invoke(const std::vector<std::string> & args, const std::string & input = "") -> Outcome
    {
        std::istringstream in{input};
        std::ostringstream out, err;
        int code = run(args, in, out, err);
        return Outcome{code, out.str(), err.str()};
    }

    auto scratch_file(const std::string & name, const std::string & contents) -> std::filesystem::path
    {
        auto path = std::filesystem::temp_directory_path() / ("isolation-cli-" + std::to_string(::getpid()) + "-" + name);
        std::ofstream{path} << contents;
        return path;
    }
}

TEST_CASE("classify")
{
    auto r = invoke({ "classify", "C~" });
    CHECK(r.code == 0);
    CHECK(r.out == "G4Member(K4)\n");

    CHECK(invoke({ "classify", encode_graph6(catalog::g9(5)) }).out == "G9Member(5)\n");
    CHECK(invoke({ "classify" }, "4\n0 1\n1 2\n2 3\n").out == "None\n");
    CHECK(invoke({ "classify" }, "  Cl\n").out == "G4Member(C4)\n");
}

TEST_CASE("iota")
{
    auto r = invoke({ "iota", "--family", "c4", encode_graph6(catalog::g9(2)) });
    CHECK(r.code == 0);
    std::istringstream lines{r.out};
    std::string family, n, size, witness;
    std::getline(lines, family);
    std::getline(lines, n);
    std::getline(lines, size);
    std::getline(lines, witness);
    CHECK(family == "family: c4");
    CHECK(n == "n: 9");
    CHECK(size == "size: 2");
    REQUIRE(witness.starts_with("witness: "));
    std::istringstream members{witness.substr(9)};
    VertexSet d;
    int v;
    while (members >> v)
        d.insert(v);
    CHECK(d.size() == 2);
    CHECK(is_isolating(catalog::g9(2), FamilySpec::c4(), d));

    CHECK(invoke({ "iota", "-f", "cycles", "C~" }).out == "family: cycles\nn: 4\nsize: 1\nwitness: 0\n");
    CHECK(invoke({ "iota", "Bg" }).out == "family: c4\nn: 3\nsize: 0\nwitness: \n");

    auto path = scratch_file("g.txt", "4\n0 1\n1 2\n2 3\n3 0\n");
    CHECK(invoke({ "iota", "--input", path.string() }).out == "family: c4\nn: 4\nsize: 1\nwitness: 0\n");
    std::filesystem::remove(path);
}

TEST_CASE("isolate")
{
    auto r = invoke({ "isolate", "--trace" }, "10\n0 1\n0 2\n0 3\n0 4\n0 5\n2 3\n3 4\n4 5\n5 2\n1 6\n6 7\n7 8\n8 9\n9 6\n");
    CHECK(r.code == 0);
    CHECK(r.out.find("n: 10\n") != std::string::npos);
    CHECK(r.out.find("bound: 2\n") != std::string::npos);
    CHECK(r.out.find("trace: depth=0") != std::string::npos);

    auto exceptional = invoke({ "isolate", "C~" });
    CHECK(exceptional.code == 1);
    CHECK(exceptional.err.find("G4Member(K4)") != std::string::npos);

    auto disconnected = invoke({ "isolate", "--any" }, "8\n0 1\n1 2\n2 3\n3 0\n4 5\n5 6\n6 7\n7 4\n");
    CHECK(disconnected.code == 0);
    CHECK(disconnected.out == "n: 8\nsize: 2\nbound: 1\nwitness: 0 4\nover-bound-component: 0 1 2 3\nover-bound-component: 4 5 6 7\n");
    CHECK(invoke({ "isolate" }, "8\n0 1\n1 2\n2 3\n3 0\n4 5\n5 6\n6 7\n7 4\n").code == 1);
}

TEST_CASE("construct-b")
{
    CHECK(invoke({ "construct-b", "--n", "3", "--pattern", "c4" }).out == "Bg\n");
    CHECK(invoke({ "construct-b", "--n", "4" }).out == encode_graph6(catalog::path(4)) + "\n");
    CHECK(invoke({ "construct-b", "--n", "8", "--pattern", "c3", "--edges" }).out.starts_with("8\n0 1\n"));
    CHECK(invoke({ "construct-b", "--n", "12", "--pattern", "k5" }).code == 0);
    CHECK(invoke({ "construct-b", "--n", "12", "--pattern", "petersen" }).code == 2);
    CHECK(invoke({ "construct-b", "--n", "0" }).code == 1);
    CHECK(invoke({ "construct-b" }).code == 2);
}

TEST_CASE("sweep")
{
    std::string records = encode_graph6(catalog::g9(3)) + "\n" + encode_graph6(catalog::path(9)) + "\nCl\n";
    auto catalog_path = scratch_file("cat.g6", records);
    auto expect_path = scratch_file("expect.g6", encode_graph6(relabel(catalog::g9(3), { 8, 7, 6, 5, 4, 3, 2, 1, 0 })) + "\n");

    auto r = invoke({ "sweep", "--catalog", catalog_path.string(), "--bound", "1", "--workers", "2", "--expect", expect_path.string() });
    CHECK(r.code == 0);
    CHECK(r.out.find("scanned: 3\n") != std::string::npos);
    CHECK(r.out.find("passed-filter: 2\n") != std::string::npos);
    CHECK(r.out.find("expect: match\n") != std::string::npos);

    auto unfiltered = invoke({ "sweep", "--catalog", catalog_path.string(), "--unfiltered", "--bound", "0" });
    CHECK(unfiltered.out.find("violators: 2\n") != std::string::npos);

    auto mismatch = invoke({ "sweep", "--catalog", catalog_path.string(), "--bound", "0", "--expect", expect_path.string() });
    CHECK(mismatch.code == 1);
    CHECK(mismatch.out.find("expect: mismatch\n") != std::string::npos);

    CHECK(invoke({ "sweep", "--catalog", catalog_path.string(), "--min-deg", "5", "--max-deg", "1" }).code == 2);
    CHECK(invoke({ "sweep", "--catalog", catalog_path.string(), "--family", "pentagons" }).code == 2);
    CHECK(invoke({ "sweep", "--catalog", catalog_path.string(), "--workers", "0" }).code == 2);
    CHECK(invoke({ "sweep", "--catalog", "/nonexistent.g6" }).code == 1);

    auto broken = scratch_file("broken.g6", "Cl\nC!\n");
    auto e = invoke({ "sweep", "--catalog", broken.string() });
    CHECK(e.code == 1);
    CHECK(e.err.find("record 1") != std::string::npos);

    for (auto & p : { catalog_path, expect_path, broken })
        std::filesystem::remove(p);
}

TEST_CASE("usage errors and determinism")
{
    CHECK(invoke({}).code == 2);
    CHECK(invoke({ "frobnicate" }).code == 2);
    CHECK(invoke({ "iota", "--family" }).code == 2);
    CHECK(invoke({ "iota", "--family", "squares", "Cl" }).code == 2);
    CHECK(invoke({ "iota", "C!" }).code == 1);
    CHECK(invoke({ "iota" }, "").code == 1);
    CHECK(invoke({ "--help" }).code == 0);

    auto a = invoke({ "isolate", "--trace", encode_graph6(catalog::cycle(20)) });
    auto b = invoke({ "isolate", "--trace", encode_graph6(catalog::cycle(20)) });
    CHECK(a.out == b.out);
}

TEST_CASE("selftest")
{
    auto r = invoke({ "selftest" });
    CHECK(r.code == 0);
    CHECK(r.out.find("witness-vertices: 54/54 pass\n") != std::string::npos);
    CHECK(r.out.find("nine-vertex-exceptional-values: 6/6 pass\n") != std::string::npos);
    CHECK(r.out.find("small-exceptional-values: 3/3 pass\n") != std::string::npos);
    CHECK(r.out.find("extremal: 20/20 pass\n") != std::string::npos);
    CHECK(r.out.ends_with("selftest: pass\n"));
}
