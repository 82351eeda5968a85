#include "doctest.h"
#include "json.hpp"
#include "oracle.hpp"
#include "support.hpp"

#include "mrb/error.hpp"
#include "mrb/fixtures.hpp"

#include <cstdlib>
#include <fstream>

using namespace mrb;
using oracle::Vec;

namespace {

ErrorKind kind_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no exception");
    return ErrorKind::ShapeMismatch;
}

bool mixed_failure(const CertificateReport& rep) {
    for (const auto& f : rep.failures)
        if (f.labels.size() == 2 && f.labels[0] != f.labels[1]) return true;
    return false;
}

} // namespace

TEST_CASE("check_mrrba on the truncated integration family") {
    auto P1 = truncated_integration();
    auto rep = check_mrrba(P1);
    CHECK(rep.passed());
    CHECK(rep.checked == 4 * 36);

    // both sides equal t^{k+l+m+n+2}/((k+m+1)(l+n+1)) on monomials
    auto& A = P1.algebra();
    for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l)
            for (std::size_t m = 0; m < 6; ++m)
                for (std::size_t n = 0; n < 6; ++n) {
                    Vec lhs = oracle::bilinear(A.mult(), oracle::mat_vec(P1.map(k).matrix, oracle::unit(6, m)),
                                               oracle::mat_vec(P1.map(l).matrix, oracle::unit(6, n)));
                    Vec expect(6);
                    std::size_t deg = k + l + m + n + 2;
                    if (deg < 6 && k + m + 1 < 6 && l + n + 1 < 6)
                        expect[deg] = Scalar(1, static_cast<long long>((k + m + 1) * (l + n + 1)));
                    CHECK((lhs == expect));
                }
}

TEST_CASE("check_mrrba: homogeneity and genuine non-examples") {
    auto P1 = truncated_integration();
    // The (x, y) identity is bilinear in (P_x, P_y): rescaling one map keeps the family valid.
    auto doubled = OperatorFamily(P1.context(), {P1.map(0), LinearMap(Scalar(2) * P1.map(1).matrix)});
    CHECK(check_mrrba(doubled).passed());
    auto twice = OperatorFamily(P1.context(), {LinearMap(Scalar(2) * P1.map(0).matrix), LinearMap(Scalar(2) * P1.map(1).matrix)});
    CHECK(check_mrrba(twice).passed());

    // Replace P_1 by t^n -> t^{n+2}/(n+1): each map alone is no longer matched with P_0.
    DenseMatrix wrong(6, 6);
    for (std::size_t n = 0; n + 2 < 6; ++n) wrong(n + 2, n) = Scalar(1, static_cast<long long>(n + 1));
    auto broken = OperatorFamily(P1.context(), {P1.map(0), LinearMap(wrong)});
    auto rep = check_mrrba(broken);
    CHECK_FALSE(rep.passed());
    CHECK(mixed_failure(rep));
    for (const auto& f : rep.failures) CHECK((f.lhs != f.rhs));

    // zero products and actions: any maps pass
    std::mt19937_64 rng(4);
    auto Z = zero_family(2, 3, 2);
    auto arbitrary = OperatorFamily(Z.context(), {LinearMap(testing::random_matrix(rng, 2, 3)), LinearMap(testing::random_matrix(rng, 2, 3))});
    CHECK(check_mrrba(arbitrary).passed());
}

TEST_CASE("check_mrrba agrees with an elementwise oracle, pair by pair") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        auto F = random_matching_family(seed, seed % 2 == 0, 2);
        auto rep = check_mrrba(F);
        if (seed % 2 == 0) CHECK(rep.passed());
        for (std::size_t x = 0; x < 2; ++x)
            for (std::size_t y = 0; y < 2; ++y) {
                bool ok = oracle::matching_pair_holds(F.algebra(), F.module(), F.map(x).matrix, F.map(y).matrix);
                bool reported = false;
                for (const auto& f : rep.failures) reported |= f.labels == std::vector<std::string>{F.labels()[x], F.labels()[y]};
                CHECK(ok == !reported);
            }
    }
}

TEST_CASE("single-label case is the relative Rota-Baxter identity") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        auto F = random_rota_baxter(seed);
        CHECK(check_mrrba(F).passed());
        CHECK(check_relative_rota_baxter(F.algebra(), F.module(), F.map(0)).passed());
        CHECK(oracle::matching_pair_holds(F.algebra(), F.module(), F.map(0).matrix, F.map(0).matrix));
        auto G = random_matching_family(seed, false, 1);
        CHECK(check_mrrba(G).passed() == oracle::matching_pair_holds(G.algebra(), G.module(), G.map(0).matrix, G.map(0).matrix));
    }
}

TEST_CASE("relabel") {
    auto P1 = truncated_integration();
    CHECK(relabel(P1, {{"0", "0"}, {"1", "1"}}) == P1);
    auto collapsed = relabel(P1, {{"0", "0"}, {"1", "0"}});
    CHECK(collapsed.map(1) == P1.map(0));
    CHECK(check_mrrba(collapsed).passed());
    auto swapped = relabel(P1, {{"0", "1"}, {"1", "0"}});
    CHECK(swapped.map(0) == P1.map(1));
    CHECK(check_mrrba(swapped).passed());
    for (const auto& t0 : {"0", "1"})
        for (const auto& t1 : {"0", "1"}) CHECK(check_mrrba(relabel(P1, {{"0", t0}, {"1", t1}})).passed());
    CHECK(kind_of([&] { relabel(P1, {{"0", "1"}}); }) == ErrorKind::UnknownLabel);
    CHECK(kind_of([&] { relabel(P1, {{"0", "1"}, {"1", "7"}}); }) == ErrorKind::UnknownLabel);
}

TEST_CASE("family_from_rb_pair") {
    auto P1 = truncated_integration();
    auto zero = family_from_rb_pair(P1.algebra(), P1.module(), LinearMap::zero(6, 6));
    CHECK(check_mrrba(zero).passed());
    auto pm = family_from_rb_pair(P1.algebra(), P1.module(), P1.map(0));
    CHECK(pm.labels().names() == std::vector<std::string>{"+", "-"});
    CHECK(check_mrrba(pm).passed());
    auto Z = zero_family(2, 2, 1);
    CHECK(check_mrrba(family_from_rb_pair(Z.algebra(), Z.module(), LinearMap::identity(2))).passed());
    auto A = truncated_polynomial(3);
    CHECK(kind_of([&] { family_from_rb_pair(A, adjoint_bimodule(A), LinearMap::identity(3)); }) ==
          ErrorKind::InputNotRotaBaxter);

    // (+,-) holds iff (+,+) holds, also for maps that are not Rota-Baxter
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        auto G = random_matching_family(seed, seed % 3 == 0, 1);
        const auto& p = G.map(0).matrix;
        DenseMatrix n = Scalar(-1) * p;
        CHECK(oracle::matching_pair_holds(G.algebra(), G.module(), p, p) ==
              oracle::matching_pair_holds(G.algebra(), G.module(), p, n));
    }
}

TEST_CASE("family_from_central_elements") {
    auto P1 = truncated_integration();
    auto& A = P1.algebra();
    auto zero = family_from_central_elements(A, P1.module(), P1.map(0), LabelSet::range(2), {Vec(6), Vec(6)});
    CHECK(zero.map(0).matrix.is_zero());
    CHECK(zero.map(1).matrix.is_zero());
    auto rebuilt = family_from_central_elements(A, P1.module(), P1.map(0), LabelSet::range(2), {oracle::unit(6, 0), oracle::unit(6, 1)});
    CHECK(rebuilt == P1);

    auto F = truncated_integration(2, 1);
    auto idem = family_from_central_elements(F.algebra(), F.module(), F.map(0), LabelSet({"x", "y"}), {{1, 0}, {1, 1}});
    CHECK(check_mrrba(idem).passed());

    auto T = upper_triangular();
    DenseMatrix p(3, 3);
    p(1, 2) = 1;
    try {
        family_from_central_elements(T, adjoint_bimodule(T), LinearMap(p), LabelSet::range(1), {{1, 0, 0}});
        FAIL("expected NotCentral");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotCentral);
        CHECK(std::string(e.what()).find("E12") != std::string::npos);
    }
    // the unit of T is central
    CHECK(check_mrrba(family_from_central_elements(T, adjoint_bimodule(T), LinearMap(p), LabelSet::range(1), {{1, 0, 1}})).passed());
}

namespace {

// Brute-force solution search for the matching AYBE. Evaluates the three summands
// term by term from the decomposition r = sum c_ij e_i (x) e_j.
std::vector<Scalar> aybe_oracle(const Algebra& A, const DenseTensor& rx, const DenseTensor& ry) {
    std::size_t a = A.dim();
    std::vector<Scalar> out(a * a * a);
    auto idx = [a](std::size_t p, std::size_t q, std::size_t s) { return (p * a + q) * a + s; };
    for (std::size_t i = 0; i < a; ++i)
        for (std::size_t j = 0; j < a; ++j) {
            if (rx.at({i, j}).is_zero()) continue;
            for (std::size_t k = 0; k < a; ++k)
                for (std::size_t l = 0; l < a; ++l) {
                    Scalar c = rx.at({i, j}) * ry.at({k, l});
                    if (c.is_zero()) continue;
                    Vec ki = oracle::bilinear(A.mult(), oracle::unit(a, k), oracle::unit(a, i));
                    Vec jk = oracle::bilinear(A.mult(), oracle::unit(a, j), oracle::unit(a, k));
                    Vec lj = oracle::bilinear(A.mult(), oracle::unit(a, l), oracle::unit(a, j));
                    for (std::size_t p = 0; p < a; ++p) {
                        out[idx(p, j, l)] += c * ki[p];
                        out[idx(i, p, l)] -= c * jk[p];
                        out[idx(i, k, p)] += c * lj[p];
                    }
                }
        }
    return out;
}

bool aybe_holds(const Algebra& A, const DenseTensor& rx, const DenseTensor& ry) {
    for (const auto& v : aybe_oracle(A, rx, ry))
        if (!v.is_zero()) return false;
    return true;
}

std::vector<DenseTensor> grid(std::size_t a, int bound) {
    std::vector<DenseTensor> out;
    std::size_t width = 2 * static_cast<std::size_t>(bound) + 1, total = 1;
    for (std::size_t s = 0; s < a * a; ++s) total *= width;
    for (std::size_t code = 0; code < total; ++code) {
        DenseTensor t({a, a});
        std::size_t c = code;
        for (std::size_t s = 0; s < a * a; ++s) {
            t[s] = Scalar(static_cast<long long>(c % width) - bound);
            c /= width;
        }
        if (!t.is_zero()) out.push_back(std::move(t));
    }
    return out;
}

struct SearchSpace {
    std::string name;
    Algebra algebra;
    int bound;
};

std::vector<SearchSpace> spaces() {
    return {{"dual-numbers", truncated_polynomial(2), 2},
            {"one-sided-extension", one_sided_extension(), 2},
            {"upper-triangular", upper_triangular(), 1},
            {"truncated-cubic", truncated_polynomial(3), 1}};
}

nlohmann::json sparse_json(const DenseTensor& r) {
    nlohmann::json t = nlohmann::json::array();
    for (std::size_t k = 0; k < r.size(); ++k)
        if (!r[k].is_zero()) {
            auto ix = r.multi_index(k);
            t.push_back({ix[0], ix[1], r[k].str()});
        }
    return t;
}

// Every nonzero grid point solving the single-label equation, and every pair of
// distinct solutions that also solves both mixed equations.
nlohmann::json search() {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& sp : spaces()) {
        std::vector<DenseTensor> singles;
        for (const auto& r : grid(sp.algebra.dim(), sp.bound))
            if (aybe_holds(sp.algebra, r, r)) singles.push_back(r);
        nlohmann::json entry{{"algebra", sp.name}, {"bound", sp.bound}, {"solutions", nlohmann::json::array()},
                             {"pairs", nlohmann::json::array()}};
        for (const auto& r : singles) entry["solutions"].push_back(sparse_json(r));
        for (std::size_t i = 0; i < singles.size(); ++i)
            for (std::size_t j = i + 1; j < singles.size(); ++j)
                if (aybe_holds(sp.algebra, singles[i], singles[j]) && aybe_holds(sp.algebra, singles[j], singles[i]))
                    entry["pairs"].push_back({i, j});
        out.push_back(entry);
    }
    return out;
}

Algebra algebra_named(const std::string& name) {
    for (const auto& sp : spaces())
        if (sp.name == name) return sp.algebra;
    FAIL("unknown algebra");
    return {};
}

// Single-label families for every solution, two-label families for every pair.
std::vector<RMatrixFamily> frozen_solutions() {
    std::ifstream in(std::string(MRB_TEST_DATA) + "/aybe_solutions.json");
    REQUIRE(in.good());
    auto j = nlohmann::json::parse(in);
    std::vector<RMatrixFamily> out;
    for (const auto& e : j) {
        auto A = algebra_named(e["algebra"]);
        std::vector<DenseTensor> sols;
        for (const auto& t : e["solutions"]) {
            DenseTensor r({A.dim(), A.dim()});
            for (const auto& x : t) r.at({x[0].get<std::size_t>(), x[1].get<std::size_t>()}) = Scalar::parse(x[2].get<std::string>());
            sols.push_back(r);
            out.emplace_back(LabelSet({"x"}), A, std::vector<DenseTensor>{r});
        }
        for (const auto& p : e["pairs"])
            out.emplace_back(LabelSet({"x", "y"}), A, std::vector<DenseTensor>{sols.at(p[0]), sols.at(p[1])});
    }
    return out;
}

} // namespace

TEST_CASE("frozen AYBE search results are reproducible") {
    auto fresh = search();
    if (std::getenv("MRB_REGENERATE")) {
        std::ofstream(std::string(MRB_TEST_DATA) + "/aybe_solutions.json") << fresh.dump(1) << "\n";
    }
    std::ifstream in(std::string(MRB_TEST_DATA) + "/aybe_solutions.json");
    REQUIRE(in.good());
    CHECK(nlohmann::json::parse(in) == fresh);
}

TEST_CASE("check_matching_aybe and check_skew_symmetric") {
    std::mt19937_64 rng(8);
    auto Z = Algebra::zero(3);
    CHECK(check_matching_aybe(RMatrixFamily(LabelSet::range(2), Z, {testing::random_tensor(rng, {3, 3}), testing::random_tensor(rng, {3, 3})})).passed());
    auto A = truncated_polynomial(3);
    CHECK(check_matching_aybe(RMatrixFamily(LabelSet::range(2), A, {DenseTensor({3, 3}), DenseTensor({3, 3})})).passed());

    auto sols = frozen_solutions();
    REQUIRE(sols.size() >= 60);
    std::size_t skew = 0, noncommutative = 0;
    for (const auto& R : sols) {
        CHECK(check_matching_aybe(R).passed());
        skew += check_skew_symmetric(R).passed();
        noncommutative += !check_commutative(R.algebra).passed();
    }
    CHECK(skew > 0);
    CHECK(noncommutative > 0);
    // the tensor evaluator agrees with the term-by-term oracle on random inputs
    for (int trial = 0; trial < 40; ++trial) {
        auto B = trial % 2 ? upper_triangular() : truncated_polynomial(3);
        RMatrixFamily R(LabelSet::range(2), B, {testing::random_tensor(rng, {3, 3}, 1), testing::random_tensor(rng, {3, 3}, 1)});
        CHECK((aybe_tensor(R, 0, 1).data() == aybe_oracle(B, R.tensors[0], R.tensors[1])));
        CHECK(check_matching_aybe(R).passed() ==
              (aybe_holds(B, R.tensors[0], R.tensors[0]) && aybe_holds(B, R.tensors[0], R.tensors[1]) &&
               aybe_holds(B, R.tensors[1], R.tensors[0]) && aybe_holds(B, R.tensors[1], R.tensors[1])));
    }

    CHECK(check_skew_symmetric(RMatrixFamily(LabelSet::range(1), A, {DenseTensor({3, 3})})).passed());
    DenseTensor anti({3, 3});
    anti.at({1, 2}) = 1;
    anti.at({2, 1}) = -1;
    CHECK(check_skew_symmetric(RMatrixFamily(LabelSet::range(1), A, {anti})).passed());
    DenseTensor diag({3, 3});
    diag.at({1, 1}) = 1;
    auto rep = check_skew_symmetric(RMatrixFamily(LabelSet::range(1), A, {diag}));
    REQUIRE(rep.failures.size() == 1);
    CHECK(rep.failures[0].basis == std::vector<std::size_t>{1, 1});
}

TEST_CASE("operators from r-matrices") {
    auto A = truncated_polynomial(3);
    auto zero = operators_from_rmatrix(RMatrixFamily(LabelSet::range(1), A, {DenseTensor({3, 3})}), adjoint_bimodule(A));
    CHECK(zero.map(0).matrix.is_zero());
    std::mt19937_64 rng(2);
    auto Z = Algebra::zero(2);
    auto zz = operators_from_rmatrix(RMatrixFamily(LabelSet::range(1), Z, {testing::random_tensor(rng, {2, 2})}), adjoint_bimodule(Z));
    CHECK(zz.map(0).matrix.is_zero());
    CHECK(kind_of([&] { operators_from_rmatrix(RMatrixFamily(LabelSet::range(1), A, {DenseTensor({3, 3})}), coadjoint_bimodule(A)); }) ==
          ErrorKind::NotAdjoint);
    DenseTensor bad({3, 3});
    bad.at({0, 0}) = 1;
    CHECK(kind_of([&] { operators_from_rmatrix(RMatrixFamily(LabelSet::range(1), A, {bad}), adjoint_bimodule(A)); }) ==
          ErrorKind::AybeFails);

    std::size_t nonzero = 0;
    for (const auto& R : frozen_solutions()) {
        auto F = operators_from_rmatrix(R, adjoint_bimodule(R.algebra));
        CHECK(check_mrrba(F).passed());
        for (const auto& p : F.maps()) nonzero += !p.matrix.is_zero();
    }
    CHECK(nonzero > 0);
}

TEST_CASE("operators on the dual") {
    auto A = truncated_polynomial(3);
    auto zero = operators_on_dual(RMatrixFamily(LabelSet::range(1), A, {DenseTensor({3, 3})}));
    CHECK(zero.map(0).matrix.is_zero());

    DenseTensor r({2, 2});
    r.at({0, 1}) = 1;
    r.at({1, 0}) = -1;
    auto F = operators_on_dual(RMatrixFamily(LabelSet::range(1), Algebra::zero(2), {r}));
    CHECK((F.map(0).apply({0, 1}) == Vec{1, 0}));
    CHECK((F.map(0).apply({1, 0}) == Vec{0, -1}));
    CHECK(check_mrrba(F).passed());

    DenseTensor sym({3, 3});
    sym.at({0, 0}) = 1;
    CHECK(kind_of([&] { operators_on_dual(RMatrixFamily(LabelSet::range(1), A, {sym})); }) == ErrorKind::NotSkewSymmetric);

    std::size_t used = 0;
    for (const auto& R : frozen_solutions()) {
        if (!check_skew_symmetric(R).passed()) continue;
        ++used;
        auto G = operators_on_dual(R);
        CHECK(check_mrrba(G).passed());
        // P(alpha) = -sum alpha(r_(1)) r_(2)
        for (std::size_t x = 0; x < R.labels.size(); ++x)
            for (std::size_t j = 0; j < R.algebra.dim(); ++j)
                for (std::size_t i = 0; i < R.algebra.dim(); ++i) CHECK(G.map(x).matrix(i, j) == -R.tensors[x].at({j, i}));
    }
    CHECK(used > 0);
}

TEST_CASE("star product") {
    auto P1 = truncated_integration();
    auto P = select_labels(P1, {"0"});
    auto S = star_product(P);
    CHECK(check_algebra(S.algebra).passed());
    CHECK(check_bimodule(S.algebra, S.bimodule).passed());
    for (std::size_t m = 0; m < 6; ++m)
        for (std::size_t n = 0; n < 6; ++n) {
            Vec expect(6);
            if (m + n + 1 < 6) expect[m + n + 1] = Scalar(1, static_cast<long long>(n + 1)) + Scalar(1, static_cast<long long>(m + 1));
            CHECK((oracle::bilinear(S.algebra.mult(), oracle::unit(6, m), oracle::unit(6, n)) == expect));
        }
    auto zero = star_product(select_labels(zero_family(2, 2, 1), {"0"}));
    CHECK(zero.algebra.mult().is_zero());
    auto Z = zero_family(2, 2, 1);
    CHECK(star_product(OperatorFamily(Z.context(), {LinearMap::identity(2)})).algebra.mult().is_zero());
    CHECK(kind_of([&] { star_product(P1); }) == ErrorKind::MultiLabelNotSupported);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto R = star_product(random_rota_baxter(seed));
        CHECK(check_algebra(R.algebra).passed());
        CHECK(check_bimodule(R.algebra, R.bimodule).passed());
    }
}

TEST_CASE("check_morphism_pair") {
    auto P1 = truncated_integration();
    CHECK(check_morphism_pair(LinearMap::identity(6), LinearMap::identity(6), P1, P1).passed());
    auto rep = check_morphism_pair(LinearMap::identity(6), LinearMap::zero(6, 6), P1, P1);
    CHECK_FALSE(rep.passed());
    bool intertwining = false;
    for (const auto& f : rep.failures) intertwining |= f.identity == "intertwining";
    CHECK(intertwining);
    CHECK(kind_of([&] { check_morphism_pair(LinearMap::identity(6), LinearMap::identity(6), P1, select_labels(P1, {"0"})); }) ==
          ErrorKind::LabelSetMismatch);
    // an isomorphic copy is reached by (g, h)
    auto g = random_invertible(3, 6), h = random_invertible(4, 6);
    auto copy = transport_family(P1, g, h);
    CHECK(check_morphism_pair(LinearMap(g), LinearMap(h), P1, copy).passed());
    CHECK(check_mrrba(copy).passed());
}
