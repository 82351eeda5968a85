#include "deformation_oracle.hpp"
#include "doctest.h"
#include "support.hpp"

#include "mrb/deformation.hpp"
#include "mrb/error.hpp"
#include "mrb/fixtures.hpp"

using namespace mrb;
using oracle::Vec;
using oracle::coboundary;
using oracle::kernel_cocycles;
using oracle::line_deformations;
using oracle::line_equivalent;
using oracle::order_one;
using oracle::same_class;
using oracle::scalar3;
using oracle::unital_line;
using oracle::zero_line;

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

bool has_failure_at(const CertificateReport& rep, const std::string& tag) {
    for (const auto& f : rep.failures)
        if (f.identity.find(tag) != std::string::npos) return true;
    return false;
}

MapSeries series(std::initializer_list<LinearMap> maps) { return MapSeries(maps); }

// The operator equation at n = 1 written out elementwise; counts failing (x, y, u, v).
std::size_t operator_equation_failures(const MrrbaDeformation& d) {
    const auto& F = d.base();
    oracle::Ops ops{F};
    std::size_t m = F.module().dim(), bad = 0;
    auto mu1 = [&](const Vec& a, const Vec& b) { return oracle::bilinear(d.mu()[1], a, b); };
    auto l1 = [&](const Vec& a, const Vec& u) { return oracle::bilinear(d.l()[1], a, u); };
    auto r1 = [&](const Vec& u, const Vec& a) { return oracle::bilinear(d.r()[1], u, a); };
    auto P1 = [&](std::size_t x, const Vec& u) { return oracle::mat_vec(d.P()[x][1].matrix, u); };
    for (std::size_t x = 0; x < F.labels().size(); ++x)
        for (std::size_t y = 0; y < F.labels().size(); ++y)
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < m; ++j) {
                    Vec u = oracle::unit(m, i), v = oracle::unit(m, j);
                    Vec lhs = oracle::add(oracle::add(ops.mul(P1(x, u), ops.P(y, v)), ops.mul(ops.P(x, u), P1(y, v))),
                                          mu1(ops.P(x, u), ops.P(y, v)));
                    Vec rhs = ops.P(x, oracle::add(r1(u, ops.P(y, v)), ops.r(u, P1(y, v))));
                    rhs = oracle::add(rhs, P1(x, ops.r(u, ops.P(y, v))));
                    rhs = oracle::add(rhs, ops.P(y, oracle::add(l1(ops.P(x, u), v), ops.l(P1(x, u), v))));
                    rhs = oracle::add(rhs, P1(y, ops.l(ops.P(x, u), v)));
                    bad += lhs != rhs;
                }
    return bad;
}

std::size_t failures_named(const CertificateReport& rep, const std::string& tag) {
    std::size_t n = 0;
    for (const auto& f : rep.failures) n += f.identity.find(tag) != std::string::npos;
    return n;
}

MdaDeformation mda_order_one(const MatchingDendriform& D, const MatchingDendriform& first) {
    std::vector<std::vector<DenseTensor>> prec, succ;
    for (std::size_t x = 0; x < D.labels.size(); ++x) {
        prec.push_back({D.prec[x], first.prec[x]});
        succ.push_back({D.succ[x], first.succ[x]});
    }
    return MdaDeformation(D, std::move(prec), std::move(succ));
}

} // namespace

TEST_CASE("deformation construction") {
    auto F = truncated_integration(3, 2);
    auto c = MrrbaDeformation::constant(F, 2);
    CHECK(c.order() == 2);
    CHECK(check_mrrba_deformation(c).passed());
    auto mu = c.mu();
    mu[0].at({0, 0, 0}) += 1;
    CHECK(kind_of([&] { MrrbaDeformation(F, mu, c.l(), c.r(), c.P()); }) == ErrorKind::DeformationInvalid);
    auto P = c.P();
    P[1].pop_back();
    CHECK(kind_of([&] { MrrbaDeformation(F, c.mu(), c.l(), c.r(), P); }) == ErrorKind::DeformationInvalid);
}

TEST_CASE("order-0 equations are the base axioms") {
    std::vector<OperatorFamily> fams{truncated_integration(), truncated_integration(3, 2), zero_family(2, 2, 2),
                                     random_matching_family(1, true), random_matching_family(2, false),
                                     random_matching_family(3, false), random_rota_baxter(4)};
    for (const auto& F : fams) {
        bool base = check_algebra(F.algebra()).passed() && check_bimodule(F.algebra(), F.module()).passed() &&
                    check_mrrba(F).passed();
        CHECK(check_mrrba_deformation(MrrbaDeformation::constant(F, 0)).passed() == base);
    }
}

TEST_CASE("cocycle_to_deformation") {
    auto F = truncated_integration();
    auto ctx = F.context();
    auto zero = cocycle_to_deformation(F, MixedCochain::zero(ctx, 2));
    CHECK(zero == MrrbaDeformation::constant(F, 1));

    auto cocycles = kernel_cocycles(F);
    CHECK(cocycles.size() == 78);
    for (const auto& z : cocycles) {
        auto d = cocycle_to_deformation(F, z);
        CHECK(check_mrrba_deformation(d).passed());
        auto inf = extract_infinitesimal(d);
        CHECK(inf.cochain == z);
        CHECK(inf.cocycle.passed());
    }

    auto bad = MixedCochain::zero(ctx, 2);
    bad.alpha.at({1, 1, 0}) = 1;
    CHECK(kind_of([&] { cocycle_to_deformation(F, bad); }) == ErrorKind::NotCocycle);
    CHECK(kind_of([&] { cocycle_to_deformation(F, MixedCochain::zero(ctx, 1)); }) == ErrorKind::DegreeMismatch);
}

TEST_CASE("deformation equations against the first-order display") {
    auto F = truncated_integration(3, 2);
    std::mt19937_64 rng(8);
    auto cocycles = kernel_cocycles(F);
    std::size_t failing = 0;
    for (std::size_t s = 0; s < 30; ++s) {
        auto z = cocycles[s % cocycles.size()];
        auto d0 = cocycle_to_deformation(F, z);
        std::vector<LinearMap> P1{d0.P()[0][1], d0.P()[1][1]};
        auto mu1 = d0.mu()[1], l1 = d0.l()[1], r1 = d0.r()[1];
        if (s % 3 == 1) P1[s % 2] = LinearMap(P1[s % 2].matrix + testing::random_matrix(rng, 3, 3, 1));
        if (s % 3 == 2) l1 += testing::random_tensor(rng, l1.shape(), 1);
        auto d = order_one(F, mu1, l1, r1, P1);
        auto rep = check_mrrba_deformation(d);
        CHECK(failures_named(rep, "equation-5[n=1]") == operator_equation_failures(d));
        failing += !rep.passed();
    }
    CHECK(failing > 0);

    // mu_1 with nonzero Hochschild coboundary
    DenseTensor mu1(Shape{3, 3, 3});
    mu1.at({1, 1, 0}) = 1;
    REQUIRE_FALSE(hochschild_delta(F.algebra(), adjoint_bimodule(F.algebra()), mu1).is_zero());
    auto c = MrrbaDeformation::constant(F, 1);
    auto d = order_one(F, mu1, c.l()[1], c.r()[1], {c.P()[0][1], c.P()[1][1]});
    auto rep = check_mrrba_deformation(d);
    CHECK(has_failure_at(rep, "equation-1[n=1]"));
    CHECK_FALSE(has_failure_at(rep, "[n=0]"));
    CHECK(kind_of([&] { extract_infinitesimal(d); }) == ErrorKind::DeformationInvalid);
}

TEST_CASE("infinitesimals") {
    auto F = truncated_integration();
    auto inf = extract_infinitesimal(MrrbaDeformation::constant(F, 2));
    CHECK(inf.cochain.is_zero());
    CHECK(inf.cocycle.passed());

    std::mt19937_64 rng(12);
    auto phi = LinearMap(testing::random_matrix(rng, 6, 6, 1));
    auto psi = LinearMap(testing::random_matrix(rng, 6, 6, 1));
    auto z = coboundary(F, phi, psi);
    auto d = cocycle_to_deformation(F, z);
    auto from_cob = extract_infinitesimal(d);
    CHECK(from_cob.cochain == z);
    CHECK(from_cob.cocycle.passed());
    // equivalent to the constant deformation through (id + t phi, id + t psi)
    auto eq = check_equivalence(d, MrrbaDeformation::constant(F, 1), series({LinearMap::identity(6), phi}),
                                series({LinearMap::identity(6), psi}));
    CHECK(eq.passed());
}

TEST_CASE("transport and equivalence") {
    auto F = truncated_integration(3, 2);
    std::mt19937_64 rng(21);
    auto cocycles = kernel_cocycles(F);
    auto d = cocycle_to_deformation(F, cocycles[3]);
    auto id3 = LinearMap::identity(3);
    auto phi = series({id3, LinearMap(testing::random_matrix(rng, 3, 3, 1))});
    auto psi = series({id3, LinearMap(testing::random_matrix(rng, 3, 3, 1))});

    auto same = check_equivalence(d, d, series({id3}), series({id3}));
    CHECK(same.passed());

    auto d2 = transport(d, phi, psi);
    CHECK(check_mrrba_deformation(d2).passed());
    auto eq = check_equivalence(d, d2, phi, psi);
    CHECK(eq.passed());
    CHECK(eq.checked > 0);
    auto z = extract_infinitesimal(d).cochain.to_vector(), z2 = extract_infinitesimal(d2).cochain.to_vector();
    auto cob = coboundary(F, phi[1], psi[1]).to_vector();
    for (std::size_t i = 0; i < z.size(); ++i) CHECK(z[i] - z2[i] == cob[i]);

    // symmetric and transitive
    CHECK(check_equivalence(d2, d, inverse_series(phi, 1), inverse_series(psi, 1)).passed());
    auto phi2 = series({id3, LinearMap(testing::random_matrix(rng, 3, 3, 1))});
    auto psi2 = series({id3, LinearMap(testing::random_matrix(rng, 3, 3, 1))});
    auto d3 = transport(d2, phi2, psi2);
    auto compose_series = [](const MapSeries& a, const MapSeries& b) {
        return series({LinearMap::identity(3), LinearMap(a[1].matrix + b[1].matrix)});
    };
    CHECK(check_equivalence(d, d3, compose_series(phi, phi2), compose_series(psi, psi2)).passed());

    // mismatched maps
    auto wrong = series({id3, LinearMap(phi[1].matrix + DenseMatrix::identity(3))});
    auto bad = check_equivalence(d, d2, wrong, psi);
    CHECK_FALSE(bad.passed());
    CHECK(has_failure_at(bad, "[n=1]"));
    CHECK(kind_of([&] { check_equivalence(d, d2, series({LinearMap(DenseMatrix::identity(3) + DenseMatrix::identity(3))}), psi); }) ==
          ErrorKind::DeformationInvalid);

    // order 2 with a second-order equivalence term
    auto base2 = MrrbaDeformation::constant(F, 2);
    auto phi3 = series({id3, LinearMap(testing::random_matrix(rng, 3, 3, 1)), LinearMap(testing::random_matrix(rng, 3, 3, 1))});
    auto psi3 = series({id3, LinearMap(testing::random_matrix(rng, 3, 3, 1))});
    auto t2 = transport(base2, phi3, psi3);
    CHECK(check_mrrba_deformation(t2).passed());
    CHECK(check_equivalence(base2, t2, phi3, psi3).passed());
    auto inv = inverse_series(phi3, 2);
    CHECK((phi3[1].matrix + inv[1].matrix).is_zero());
}

TEST_CASE("classification of order-1 deformations on one-dimensional bases") {
    for (const auto& F : {unital_line(), zero_line()}) {
        REQUIRE(check_mrrba(F).passed());
        auto defs = line_deformations(F);
        REQUIRE(defs.size() >= 3);
        std::size_t n = std::min<std::size_t>(defs.size(), 40), equivalent = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const auto &d = defs[i], &d2 = defs[j];
                bool eq = line_equivalent(d, d2);
                bool cls = same_class(F, extract_infinitesimal(d).cochain, extract_infinitesimal(d2).cochain);
                CHECK(eq == cls);
                auto found = find_equivalence(d, d2);
                CHECK(found.has_value() == eq);
                if (found) CHECK(check_equivalence(d, d2, found->phi, found->psi).passed());
                equivalent += eq;
            }
        CHECK(equivalent > n);
        CHECK(equivalent < n * n);
    }
}

TEST_CASE("dendriform deformations") {
    auto D = induce_dendriform(truncated_integration(3, 2));
    auto c = MdaDeformation::constant(D, 2);
    CHECK(check_mda_deformation(c).passed());
    auto inf0 = extract_mda_infinitesimal(c);
    CHECK(inf0.cochain.is_zero());
    CHECK(inf0.cocycle.passed());

    for (const auto& E : line_dendriform_grid())
        CHECK(check_mda_deformation(MdaDeformation::constant(E, 0)).passed() == check_mda(E).passed());

    auto kernel = kernel_basis(mda_complex(D, 2).differential(2));
    REQUIRE_FALSE(kernel.empty());
    std::size_t c2 = OperadElement::dimension(3, 2, 2);
    for (const auto& k : kernel) {
        auto pi1 = OperadElement::from_vector(3, D.labels, 2, k.to_dense(c2));
        auto d = mda_cocycle_to_deformation(D, pi1);
        CHECK(check_mda_deformation(d).passed());
        auto inf = extract_mda_infinitesimal(d);
        CHECK(inf.cochain == pi1);
        CHECK(inf.cocycle.passed());
    }

    // a non-cocycle first-order term
    auto first = MatchingDendriform::zero(3, D.labels);
    first.prec[0].at({1, 1, 1}) = 1;
    auto pi_bad = multiplication_from_mda(first);
    REQUIRE_FALSE(delta_mda(D, pi_bad).is_zero());
    auto bad = mda_order_one(D, first);
    auto rep = check_mda_deformation(bad);
    CHECK(has_failure_at(rep, "[n=1]"));
    CHECK_FALSE(has_failure_at(rep, "[n=0]"));
    CHECK(kind_of([&] { mda_cocycle_to_deformation(D, pi_bad); }) == ErrorKind::NotCocycle);
    CHECK(kind_of([&] { extract_mda_infinitesimal(bad); }) == ErrorKind::DeformationInvalid);

    // transport: pi_1 - pi_1' = delta(psi_1)
    std::mt19937_64 rng(33);
    auto d = mda_cocycle_to_deformation(D, OperadElement::from_vector(3, D.labels, 2, kernel.back().to_dense(c2)));
    auto psi = series({LinearMap::identity(3), LinearMap(testing::random_matrix(rng, 3, 3, 1))});
    auto d2 = transport(d, psi);
    CHECK(check_mda_deformation(d2).passed());
    auto eq = check_mda_equivalence(d, d2, psi);
    CHECK(eq.passed());
    auto lhs = extract_mda_infinitesimal(d).cochain - extract_mda_infinitesimal(d2).cochain;
    CHECK(lhs == delta_mda(D, lift_to_operad(psi[1], D.labels)));
    auto wrong = series({LinearMap::identity(3), LinearMap(psi[1].matrix + DenseMatrix::identity(3))});
    CHECK_FALSE(check_mda_equivalence(d, d2, wrong).passed());

    auto lifted = lift_to_operad(psi[1], D.labels);
    CHECK(lifted.arity() == 1);
    CHECK(lifted.component(0, 0) == psi[1].as_tensor());
}
