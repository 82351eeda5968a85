#include "mrb/fixtures.hpp"

#include "mrb/error.hpp"
#include "mrb/linalg.hpp"

#include <random>

namespace mrb {

Algebra truncated_polynomial(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back(i == 0 ? "1" : i == 1 ? "t" : "t^" + std::to_string(i));
    DenseTensor mult({n, n, n});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; i + j < n; ++j) mult.at({i, j, i + j}) = 1;
    return Algebra(std::move(names), std::move(mult));
}

Algebra upper_triangular() {
    // E11 E11 = E11, E11 E12 = E12, E12 E22 = E12, E22 E22 = E22
    DenseTensor mult({3, 3, 3});
    mult.at({0, 0, 0}) = 1;
    mult.at({0, 1, 1}) = 1;
    mult.at({1, 2, 1}) = 1;
    mult.at({2, 2, 2}) = 1;
    return Algebra({"E11", "E12", "E22"}, std::move(mult));
}

Algebra one_sided_extension() {
    DenseTensor mult({2, 2, 2});
    mult.at({0, 0, 0}) = 1;
    mult.at({0, 1, 1}) = 1;
    return Algebra({"e", "n"}, std::move(mult));
}

namespace {

LinearMap shifted_integration(std::size_t n, std::size_t k) {
    DenseMatrix m(n, n);
    for (std::size_t j = 0; j < n; ++j)
        if (k + j + 1 < n) m(k + j + 1, j) = Scalar(1, static_cast<long long>(k + j + 1));
    return LinearMap(std::move(m));
}

} // namespace

OperatorFamily truncated_integration(std::size_t n, std::size_t q) {
    auto A = truncated_polynomial(n);
    std::vector<LinearMap> maps;
    for (std::size_t k = 0; k < q; ++k) maps.push_back(shifted_integration(n, k));
    auto M = adjoint_bimodule(A);
    return OperatorFamily(LabelSet::range(q), std::move(A), std::move(M), std::move(maps));
}

OperatorFamily zero_family(std::size_t a, std::size_t m, std::size_t q) {
    std::vector<LinearMap> maps(q, LinearMap::zero(m, a));
    return OperatorFamily(LabelSet::range(q), Algebra::zero(a), Bimodule::zero(a, m), std::move(maps));
}

OperatorFamily transport_family(const OperatorFamily& F, const DenseMatrix& g, const DenseMatrix& h) {
    auto gi = inverse(g), hi = inverse(h);
    if (!gi || !hi) throw Error(ErrorKind::ShapeMismatch, "transport needs invertible maps");
    auto G = LinearMap(g).as_tensor(), Gi = LinearMap(*gi).as_tensor();
    auto H = LinearMap(h).as_tensor(), Hi = LinearMap(*hi).as_tensor();
    const auto& A = F.algebra();
    const auto& M = F.module();
    auto mult = compose(compose(compose(G, 0, A.mult()), 0, Gi), 1, Gi);
    auto left = compose(compose(compose(H, 0, M.left()), 0, Gi), 1, Hi);
    auto right = compose(compose(compose(H, 0, M.right()), 0, Hi), 1, Gi);
    std::vector<LinearMap> maps;
    for (const auto& p : F.maps()) maps.emplace_back(g * p.matrix * *hi);
    return OperatorFamily(F.labels(), Algebra(A.basis(), std::move(mult)),
                          Bimodule(A.dim(), M.basis(), std::move(left), std::move(right)), std::move(maps));
}

DenseMatrix random_invertible(std::uint64_t seed, std::size_t n) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coin(-1, 1);
    DenseMatrix lower = DenseMatrix::identity(n), upper = DenseMatrix::identity(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j) {
            lower(i, j) = coin(rng);
            upper(j, i) = coin(rng);
        }
    return lower * upper;
}

namespace {

OperatorFamily base_rota_baxter(std::size_t which, const Scalar& c) {
    switch (which % 5) {
    case 0: {
        auto F = truncated_integration(3, 1);
        return OperatorFamily(F.context(), {LinearMap(c * F.map(0).matrix)});
    }
    case 1: {
        auto F = truncated_integration(2, 1);
        return OperatorFamily(F.context(), {LinearMap(c * F.map(0).matrix)});
    }
    case 2: {
        // K with e.e = e, extended by a square-zero copy of K; M = K with e acting by 1
        DenseTensor mult({2, 2, 2});
        mult.at({0, 0, 0}) = 1;
        mult.at({0, 1, 1}) = 1;
        mult.at({1, 0, 1}) = 1;
        Algebra A({"e", "n"}, std::move(mult));
        DenseTensor left({2, 1, 1}), right({1, 2, 1});
        left.at({0, 0, 0}) = 1;
        right.at({0, 0, 0}) = 1;
        Bimodule M(2, {"u"}, std::move(left), std::move(right));
        DenseMatrix p(2, 1);
        p(1, 0) = c;
        return OperatorFamily(LabelSet::range(1), std::move(A), std::move(M), {LinearMap(std::move(p))});
    }
    case 3: {
        auto A = upper_triangular();
        DenseMatrix p(3, 3);
        p(1, 2) = c;
        auto M = adjoint_bimodule(A);
        return OperatorFamily(LabelSet::range(1), std::move(A), std::move(M), {LinearMap(std::move(p))});
    }
    default: {
        // zero products: every map is Rota-Baxter
        DenseMatrix p(2, 3);
        p(0, 0) = c;
        p(1, 2) = c;
        p(0, 1) = 1;
        return OperatorFamily(LabelSet::range(1), Algebra::zero(2), Bimodule::zero(2, 3), {LinearMap(std::move(p))});
    }
    }
}

Scalar pick_scale(std::mt19937_64& rng) {
    static const Scalar scales[] = {Scalar(1), Scalar(-1), Scalar(2), Scalar(1, 2), Scalar(-3, 2)};
    return scales[rng() % 5];
}

} // namespace

OperatorFamily random_rota_baxter(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto base = base_rota_baxter(rng() % 5, pick_scale(rng));
    return transport_family(base, random_invertible(rng(), base.algebra().dim()), random_invertible(rng(), base.module().dim()));
}

OperatorFamily random_matching_family(std::uint64_t seed, bool valid, std::size_t q) {
    std::mt19937_64 rng(seed);
    OperatorFamily family = [&] {
        switch (rng() % 3) {
        case 0: {
            auto F = random_rota_baxter(rng());
            std::vector<LinearMap> maps;
            for (std::size_t x = 0; x < q; ++x) maps.emplace_back(pick_scale(rng) * F.map(0).matrix);
            return OperatorFamily(make_context(LabelSet::range(q), F.algebra(), F.module()), std::move(maps));
        }
        case 1: {
            auto F = truncated_integration(3 + rng() % 2, q);
            auto n = F.algebra().dim();
            return transport_family(F, random_invertible(rng(), n), random_invertible(rng(), n));
        }
        default: {
            auto F = truncated_integration(3, 1);
            auto& A = F.algebra();
            std::vector<std::vector<Scalar>> elems;
            for (std::size_t x = 0; x < q; ++x) {
                std::vector<Scalar> e(A.dim());
                for (auto& v : e) v = Scalar(static_cast<long long>(rng() % 3) - 1);
                elems.push_back(std::move(e));
            }
            return family_from_central_elements(A, F.module(), F.map(0), LabelSet::range(q), elems);
        }
        }
    }();
    if (valid) return family;
    std::vector<LinearMap> maps;
    for (std::size_t x = 0; x < q; ++x) {
        DenseMatrix p(family.algebra().dim(), family.module().dim());
        for (std::size_t i = 0; i < p.rows(); ++i)
            for (std::size_t j = 0; j < p.cols(); ++j) p(i, j) = Scalar(static_cast<long long>(rng() % 5) - 2);
        maps.emplace_back(std::move(p));
    }
    return OperatorFamily(family.context(), std::move(maps));
}

MatchingDendriform line_dendriform(const std::vector<Scalar>& prec, const std::vector<Scalar>& succ, LabelSet labels) {
    std::vector<DenseTensor> p, s;
    for (const auto& v : prec) p.push_back(DenseTensor({1, 1, 1}, {v}));
    for (const auto& v : succ) s.push_back(DenseTensor({1, 1, 1}, {v}));
    return MatchingDendriform({"e"}, std::move(labels), std::move(p), std::move(s));
}

std::vector<MatchingDendriform> line_dendriform_grid() {
    std::vector<MatchingDendriform> out;
    for (int code = 0; code < 81; ++code) {
        int c = code;
        std::vector<Scalar> v;
        for (int k = 0; k < 4; ++k) {
            v.emplace_back(c % 3 - 1);
            c /= 3;
        }
        out.push_back(line_dendriform({v[0], v[1]}, {v[2], v[3]}));
    }
    return out;
}

MatchingDendriform random_dendriform(std::uint64_t seed, std::size_t q) {
    return induce_dendriform(random_matching_family(seed, true, q));
}

} // namespace mrb
