#include "corpus.hpp"
#include "support.hpp"

#include "mrb/cli.hpp"
#include "mrb/error.hpp"
#include "mrb/operad.hpp"
#include "mrb/workspace.hpp"

#include "doctest.h"

#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

using namespace mrb;
namespace fs = std::filesystem;

namespace {

template <class F>
ErrorKind kind_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no exception");
    return ErrorKind::ParseError;
}

Json read_json(const fs::path& p) {
    std::ifstream in(p);
    return Json::parse(in);
}

struct TempDir {
    fs::path path;
    TempDir() {
        std::random_device rd;
        path = fs::temp_directory_path() / ("matchrb-" + std::to_string(rd()) + std::to_string(rd()));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;
};

// Fresh copy of the fixture workspace.
struct Scratch : TempDir {
    Scratch() {
        for (const auto& e : fs::directory_iterator(MRB_FIXTURES)) fs::copy(e.path(), path / e.path().filename());
    }
};

struct Run {
    int code;
    std::string out, err;
    Json json() const { return Json::parse(out); }
};

Run matchrb(const fs::path& ws, std::vector<std::string> args) {
    args.insert(args.begin(), {"--workspace", ws.string()});
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("fixture files match the in-code corpus") {
    auto corpus = testing::fixture_corpus();
    if (std::getenv("MRB_WRITE_FIXTURES")) {
        fs::create_directories(MRB_FIXTURES);
        for (const auto& [name, j] : corpus) write_atomically(fs::path(MRB_FIXTURES) / (name + ".json"), j.dump(2) + "\n");
    }
    std::size_t on_disk = 0;
    for (const auto& e : fs::directory_iterator(MRB_FIXTURES)) {
        if (e.path().extension() != ".json") continue;
        ++on_disk;
        auto name = e.path().stem().string();
        INFO(name);
        REQUIRE(corpus.count(name) == 1);
        CHECK(read_json(e.path()) == corpus.at(name));
    }
    CHECK(on_disk == corpus.size());
}

TEST_CASE("scalars and tensors through json") {
    CHECK(scalar_from_json(Json("-3/6")) == Scalar(-1, 2));
    CHECK(scalar_from_json(Json(4)) == Scalar(4));
    CHECK(to_json(Scalar(2, -4)) == Json("-1/2"));
    CHECK(kind_of([] { scalar_from_json(Json("1/0")); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { scalar_from_json(Json("x")); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { scalar_from_json(Json(0.5)); }) == ErrorKind::ParseError);

    std::mt19937_64 rng(3);
    auto t = testing::random_tensor(rng, {2, 3, 2});
    CHECK(sparse_from_json(sparse_to_json(t), t.shape()) == t);
    CHECK(kind_of([&] { sparse_from_json(Json::parse(R"([[0, 5, 1, "1"]])"), t.shape()); }) == ErrorKind::ParseError);
    auto m = testing::random_matrix(rng, 3, 4);
    CHECK(matrix_from_json(matrix_to_json(m), 3, 4) == m);
    CHECK(kind_of([&] { matrix_from_json(matrix_to_json(m), 4, 3); }) == ErrorKind::ParseError);
}

TEST_CASE("structures round trip through json") {
    auto P1 = truncated_integration();
    CHECK(algebra_from_json(to_json(P1.algebra())) == P1.algebra());
    CHECK(bimodule_from_json(to_json(P1.module()), 6) == P1.module());
    CHECK(family_from_json(to_json(P1)) == P1);
    for (std::uint64_t s = 0; s < 10; ++s) {
        auto F = random_matching_family(s, s % 2 == 0);
        CHECK(family_from_json(Json::parse(to_json(F).dump())) == F);
        auto D = random_dendriform(s);
        CHECK(dendriform_from_json(Json::parse(to_json(D).dump())) == D);
    }
    DenseTensor r({2, 2});
    r.at({0, 1}) = Scalar(1, 3);
    RMatrixFamily R(LabelSet({"u", "v"}), truncated_polynomial(2), {r, DenseTensor({2, 2})});
    CHECK(rmatrix_from_json(to_json(R)) == R);

    auto D = line_dendriform({1, -1}, {0, 0});
    auto pi = multiplication_from_mda(D);
    CHECK(operad_from_json(to_json(pi), D.dim(), D.labels) == pi);

    auto p3 = truncated_integration(3, 2);
    auto d = cocycle_to_deformation(p3, testing::first_kernel_cocycle(p3));
    CHECK(deformation_from_json(to_json(d), p3) == d);
    CHECK(deformation_from_json(to_json(d, "p3"), p3) == d);
    CHECK(to_json(d, "p3")["base"] == Json("p3"));

    auto C = dual_numbers_dg();
    auto Cj = a_infinity_from_json(to_json(C));
    CHECK(check_a_infinity(Cj).passed());
    CHECK(to_json(Cj) == to_json(C));
    auto H = tensor_with(p3, C);
    auto Hj = homotopy_mrrba_from_json(Json::parse(to_json(H).dump()));
    CHECK(to_json(Hj) == to_json(H));
    CHECK(check_homotopy_mrrba(Hj).passed());
    auto HD = tensor_with(D, C);
    CHECK(homotopy_mda_from_json(to_json(HD)) == HD);

    auto rep = check_mrrba(testing::corrupted_p1());
    REQUIRE_FALSE(rep.passed());
    auto back = report_from_json(to_json(rep));
    CHECK(back.check == rep.check);
    CHECK(back.checked == rep.checked);
    CHECK(back.failures == rep.failures);
    CHECK(to_json(back).dump() == to_json(rep).dump());
}

TEST_CASE("workspace loading and references") {
    auto ws = Workspace::load(MRB_FIXTURES);
    CHECK(ws.family("p1") == truncated_integration());
    CHECK(ws.algebra("p1") == truncated_polynomial(6));
    CHECK(ws.bimodule("zero2-adjoint") == adjoint_bimodule(Algebra::zero(2)));
    CHECK(ws.rmatrix("skew-r").algebra == Algebra::zero(2));
    CHECK(ws.resolved("central")["base"]["kind"] == "mrrba");
    auto p3 = truncated_integration(3, 2);
    CHECK(ws.deformation("p3-deformation").base() == p3);
    CHECK(kind_of([&] { ws.family("nope"); }) == ErrorKind::UnknownTarget);
    CHECK(kind_of([&] { ws.family("mda-line"); }) == ErrorKind::UnknownChecker);

    TempDir dir;
    std::ofstream(dir.path / "a.json") << R"({"kind": "morphism", "source": "missing", "target": "missing"})";
    CHECK(kind_of([&] { Workspace::load(dir.path); }) == ErrorKind::UnknownTarget);
    std::ofstream(dir.path / "a.json") << R"({"kind": "mrrba", "algebra": "a"})";
    CHECK(kind_of([&] { Workspace::load(dir.path); }) == ErrorKind::ParseError);
    std::ofstream(dir.path / "a.json") << "{not json";
    CHECK(kind_of([&] { Workspace::load(dir.path); }) == ErrorKind::ParseError);
    fs::remove(dir.path / "a.json");

    auto empty = Workspace::load(dir.path);
    empty.put("z", to_json(zero_family(1, 1, 1)));
    CHECK(empty.family("z") == zero_family(1, 1, 1));
    CHECK(Workspace::load(dir.path).family("z") == zero_family(1, 1, 1));
    std::size_t files = 0;
    for ([[maybe_unused]] const auto& e : fs::directory_iterator(dir.path)) ++files;
    CHECK(files == 1);
    CHECK(kind_of([&] { empty.put("../x", to_json(zero_family(1, 1, 1))); }) == ErrorKind::ParseError);
}

TEST_CASE("check command") {
    Scratch ws;
    auto r = matchrb(ws.path, {"check", "p1", "mrrba"});
    CHECK(r.code == 0);
    auto j = r.json();
    CHECK(j["passed"] == true);
    CHECK(j["certificate"]["failures"].empty());
    CHECK(r.err.rfind("PASS", 0) == 0);
    CHECK(matchrb(ws.path, {"check", "p1", "mc"}).code == 0);

    r = matchrb(ws.path, {"check", "p1-corrupt", "mrrba"});
    CHECK(r.code == 1);
    j = r.json();
    CHECK(j["passed"] == false);
    auto expected = to_json(check_mrrba(testing::corrupted_p1()));
    CHECK(j["certificate"] == expected);
    REQUIRE_FALSE(j["certificate"]["failures"].empty());
    CHECK(j["certificate"]["failures"][0].contains("lhs"));
    CHECK(matchrb(ws.path, {"check", "p1-corrupt", "mc"}).code == 1);

    CHECK(matchrb(ws.path, {"check", "nope", "mrrba"}).code == 2);
    CHECK(matchrb(ws.path, {"check", "p1", "nope"}).code == 2);
    CHECK(matchrb(ws.path, {"check", "mda-line", "mrrba"}).code == 2);
    CHECK(matchrb(ws.path, {"check", "p1"}).code == 2);
    CHECK(matchrb(ws.path / "missing", {"check", "p1", "mrrba"}).code == 2);

    std::vector<std::array<std::string, 3>> passing{
        {"upper", "algebra", ""},         {"zero2-adjoint", "bimodule", ""}, {"p1", "bimodule", ""},
        {"skew-r", "aybe", ""},           {"skew-r", "skew", ""},           {"mda-line", "mda", ""},
        {"mda-p3", "mda", ""},            {"p1-identity", "morphism", ""},  {"p3-deformation", "deformation", ""},
        {"dg-dual", "a-infinity", ""},    {"h-mrrba", "homotopy-mrrba", ""}, {"h-mda", "homotopy-mda", ""},
        {"zero-ctx", "mc", ""}};
    for (const auto& [target, checker, _] : passing) {
        INFO(target << " " << checker);
        CHECK(matchrb(ws.path, {"check", target, checker}).code == 0);
    }
    CHECK(matchrb(ws.path, {"check", "mda-bad", "mda"}).code == 1);

    // same input, same bytes
    auto a = matchrb(ws.path, {"check", "p1-corrupt", "mrrba"});
    auto b = matchrb(ws.path, {"--seed", "99", "check", "p1-corrupt", "mrrba"});
    CHECK(a.out == b.out);
}

TEST_CASE("build command persists certified outputs") {
    Scratch ws;
    auto r = matchrb(ws.path, {"build", "induce-dendriform", "p1", "--name", "p1-mda"});
    CHECK(r.code == 0);
    CHECK(r.json()["persisted"] == true);
    REQUIRE(fs::exists(ws.path / "p1-mda.json"));
    auto check = matchrb(ws.path, {"check", "p1-mda", "mda"});
    CHECK(check.code == 0);
    CHECK(check.json()["certificate"].dump() == r.json()["certificate"].dump());
    CHECK(Workspace::load(ws.path).dendriform("p1-mda") == induce_dendriform(truncated_integration()));

    r = matchrb(ws.path, {"build", "functor-g", "p1-mda", "--name", "p1-g"});
    CHECK(r.code == 0);
    CHECK(r.json()["roundtrip"] == true);
    CHECK(matchrb(ws.path, {"check", "p1-g", "mrrba"}).code == 0);

    r = matchrb(ws.path, {"build", "induce-dendriform", "p1-corrupt", "--name", "bad-mda"});
    CHECK(r.code == 1);
    CHECK(r.json()["persisted"] == false);
    CHECK(r.json()["input_certificates"]["p1-corrupt"]["passed"] == false);
    CHECK_FALSE(fs::exists(ws.path / "bad-mda.json"));
    r = matchrb(ws.path, {"build", "functor-g", "mda-bad", "--name", "bad-g"});
    CHECK(r.code == 1);
    CHECK_FALSE(fs::exists(ws.path / "bad-g.json"));
    r = matchrb(ws.path, {"build", "family-from-rb-pair", "p1"});
    CHECK(r.code == 1);

    CHECK(matchrb(ws.path, {"build", "nope", "p1"}).code == 2);
    CHECK(matchrb(ws.path, {"build", "induce-dendriform", "missing"}).code == 2);
    CHECK(matchrb(ws.path, {"build", "induce-dendriform"}).code == 2);

    struct Case {
        std::vector<std::string> args;
        std::string name, checker;
    };
    std::vector<Case> cases{
        {{"semidirect-embedding", "mda-line"}, "semi", "mrrba"},
        {{"operators-from-rmatrix", "skew-r", "zero2-adjoint"}, "from-r", "mrrba"},
        {{"operators-on-dual", "skew-r"}, "on-dual", "mrrba"},
        {{"extend-to-labelled-dendriform", "mda-line"}, "extended", "mda"},
        {{"homotopy-functor-g", "h-mda"}, "h-g", "homotopy-mrrba"},
        {{"induce-homotopy-dendriform", "h-mrrba"}, "h-induced", "homotopy-mda"},
        {{"cocycle-to-deformation", "p3", "--index", "1"}, "p3-def-1", "deformation"},
        {{"family-from-rb-pair", "p3-single"}, "pm", "mrrba"},
        {{"family-from-central-elements", "central"}, "xy", "mrrba"},
    };
    for (const auto& c : cases) {
        INFO(c.args[0]);
        auto args = c.args;
        args.insert(args.begin(), "build");
        args.insert(args.end(), {"--name", c.name});
        auto built = matchrb(ws.path, args);
        CHECK(built.code == 0);
        REQUIRE(fs::exists(ws.path / (c.name + ".json")));
        auto again = matchrb(ws.path, {"check", c.name, c.checker});
        CHECK(again.code == 0);
        CHECK(again.json()["certificate"].dump() == built.json()["certificate"].dump());
    }
    CHECK(matchrb(ws.path, {"build", "homotopy-functor-g", "h-mda"}).json()["roundtrip"] == true);
    auto pm = Workspace::load(ws.path).family("pm");
    CHECK(pm.labels().names() == std::vector<std::string>{"+", "-"});
    CHECK(matchrb(ws.path, {"build", "cocycle-to-deformation", "p3", "--index", "100000"}).code == 2);
}

TEST_CASE("cohomology command") {
    Scratch ws;
    auto r = matchrb(ws.path, {"cohomology", "zero-ctx", "op", "2"});
    CHECK(r.code == 0);
    auto j = r.json();
    CHECK(j["complex"] == "operator");
    CHECK(j["degree"] == 2);
    CHECK(j["dim_cochain"] == 4);
    CHECK(j["dim_cohomology"] == 4);
    CHECK(j["delta_squared_zero"] == true);

    r = matchrb(ws.path, {"cohomology", "zero-222", "mrrba", "2"});
    CHECK(r.json()["dim_cochain"] == 32);

    auto P1 = truncated_integration();
    r = matchrb(ws.path, {"cohomology", "p1", "mrrba", "1"});
    CHECK(r.code == 0);
    CHECK(r.json()["dim_cohomology"] == cohomology_mrrba(P1, 1));

    CHECK(matchrb(ws.path, {"cohomology", "p1", "hochschild", "1"}).json()["dim_cochain"] == 36);
    CHECK(matchrb(ws.path, {"cohomology", "upper", "hochschild", "1"}).code == 0);
    CHECK(matchrb(ws.path, {"cohomology", "mda-line", "mda", "2"}).code == 0);
    CHECK(matchrb(ws.path, {"cohomology", "p3", "mrba", "2"}).code == 0);

    r = matchrb(ws.path, {"cohomology", "p1", "les", "2"});
    CHECK(r.code == 0);
    CHECK(r.json()["certificate"]["passed"] == true);
    CHECK(r.json()["nodes"].size() > 0);
    auto a = matchrb(ws.path, {"--seed", "1", "cohomology", "p1", "les", "2"}).json();
    auto b = matchrb(ws.path, {"--seed", "2", "cohomology", "p1", "les", "2"}).json();
    CHECK(a["nodes"] == b["nodes"]);

    CHECK(matchrb(ws.path, {"cohomology", "p1", "mrrba", "4"}).code == 2);
    CHECK(matchrb(ws.path, {"--max-degree", "4", "cohomology", "zero-ctx", "op", "4"}).json()["dim_cochain"] == 16);
    CHECK(matchrb(ws.path, {"cohomology", "p1", "nope", "1"}).code == 2);
    CHECK(matchrb(ws.path, {"cohomology", "p1-corrupt", "op", "1"}).code == 1);
}

TEST_CASE("deform and report commands") {
    Scratch ws;
    auto r = matchrb(ws.path, {"deform", "p3"});
    CHECK(r.code == 0);
    auto p3 = truncated_integration(3, 2);
    CHECK(r.json()["cocycles"] == kernel_basis(mrrba_complex(p3, 2).differential(2)).size());
    CHECK(r.json()["h2"]["dim_cohomology"] == cohomology_mrrba(p3, 2));

    r = matchrb(ws.path, {"deform", "p3-deformation", "--against", "p3-deformation"});
    CHECK(r.code == 0);
    CHECK(r.json()["equivalent"] == true);
    CHECK(matchrb(ws.path, {"build", "cocycle-to-deformation", "p3", "--index", "1", "--name", "other"}).code == 0);
    auto other = matchrb(ws.path, {"deform", "p3-deformation", "--against", "other"}).json();
    auto d0 = Workspace::load(ws.path).deformation("p3-deformation");
    auto d1 = Workspace::load(ws.path).deformation("other");
    CHECK(other["equivalent"] == find_equivalence(d0, d1).has_value());
    CHECK(matchrb(ws.path, {"deform", "mda-line"}).code == 2);

    r = matchrb(ws.path, {"report", "p1"});
    CHECK(r.code == 0);
    CHECK(r.json()["a"] == 6);
    CHECK(r.json()["labels"] == Json::array({"0", "1"}));
    CHECK(matchrb(ws.path, {"report", "p1-corrupt"}).code == 1);
    CHECK(matchrb(ws.path, {"report", "central"}).code == 0);
    CHECK(matchrb(ws.path, {"report", "skew-r"}).json()["checker"] == "aybe");
    CHECK(matchrb(ws.path, {"--help"}).code == 0);
    CHECK(matchrb(ws.path, {}).code == 2);
}
