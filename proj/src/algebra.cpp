#include "mrb/algebra.hpp"

#include "mrb/error.hpp"

namespace mrb {

std::vector<std::string> default_names(const std::string& stem, std::size_t n) {
    std::vector<std::string> v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(stem + std::to_string(i));
    return v;
}

DenseTensor sparse_tensor(Shape shape, const std::vector<std::pair<std::vector<std::size_t>, Scalar>>& entries) {
    DenseTensor t(std::move(shape));
    for (const auto& [idx, v] : entries) t[t.flat_index(idx)] += v;
    return t;
}

Algebra::Algebra(std::vector<std::string> basis, DenseTensor mult) : basis_(std::move(basis)), mult_(std::move(mult)) {
    std::size_t n = basis_.size();
    if (mult_.shape() != Shape{n, n, n}) throw Error(ErrorKind::ShapeMismatch, "mult must have shape [dim, dim, dim]");
}

Algebra Algebra::zero(std::size_t dim) { return Algebra(default_names("e", dim), DenseTensor({dim, dim, dim})); }

Bimodule::Bimodule(std::size_t algebra_dim, std::vector<std::string> basis, DenseTensor left, DenseTensor right)
    : adim_(algebra_dim), basis_(std::move(basis)), left_(std::move(left)), right_(std::move(right)) {
    std::size_t a = adim_, m = basis_.size();
    if (left_.shape() != Shape{a, m, m}) throw Error(ErrorKind::ShapeMismatch, "left action must have shape [adim, mdim, mdim]");
    if (right_.shape() != Shape{m, a, m}) throw Error(ErrorKind::ShapeMismatch, "right action must have shape [mdim, adim, mdim]");
}

Bimodule Bimodule::zero(std::size_t algebra_dim, std::size_t dim) {
    return Bimodule(algebra_dim, default_names("u", dim), DenseTensor({algebra_dim, dim, dim}),
                    DenseTensor({dim, algebra_dim, dim}));
}

CertificateReport check_algebra(const Algebra& A) {
    CertificateReport rep{"algebra"};
    const auto& mu = A.mult();
    const auto* names = &A.basis();
    compare_maps(rep, "associativity", {}, compose(mu, 0, mu), compose(mu, 1, mu), {names, names, names});
    return rep;
}

CertificateReport check_bimodule(const Algebra& A, const Bimodule& M) {
    if (M.algebra_dim() != A.dim()) throw Error(ErrorKind::ShapeMismatch, "bimodule is over an algebra of another dimension");
    CertificateReport rep{"bimodule"};
    const auto &mu = A.mult(), &l = M.left(), &r = M.right();
    const auto *an = &A.basis(), *mn = &M.basis();
    compare_maps(rep, "left", {}, compose(l, 0, mu), compose(l, 1, l), {an, an, mn});
    compare_maps(rep, "middle", {}, compose(r, 0, l), compose(l, 1, r), {an, mn, an});
    compare_maps(rep, "right", {}, compose(r, 0, r), compose(r, 1, mu), {mn, an, an});
    return rep;
}

Bimodule adjoint_bimodule(const Algebra& A) { return Bimodule(A.dim(), A.basis(), A.mult(), A.mult()); }

Bimodule coadjoint_bimodule(const Algebra& A) {
    std::size_t n = A.dim();
    const auto& mu = A.mult();
    DenseTensor left({n, n, n}), right({n, n, n});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                // (e_i . d_j)(e_k) = d_j(e_k e_i),  (d_j . e_i)(e_k) = d_j(e_i e_k)
                left.at({i, j, k}) = mu.at({k, i, j});
                right.at({j, i, k}) = mu.at({i, k, j});
            }
    std::vector<std::string> names;
    for (const auto& b : A.basis()) names.push_back(b + "*");
    return Bimodule(n, std::move(names), std::move(left), std::move(right));
}

Algebra semidirect_product(const Algebra& A, const Bimodule& M) {
    if (M.algebra_dim() != A.dim()) throw Error(ErrorKind::ShapeMismatch, "bimodule is over an algebra of another dimension");
    std::size_t a = A.dim(), m = M.dim(), n = a + m;
    DenseTensor mult({n, n, n});
    for (std::size_t i = 0; i < a; ++i)
        for (std::size_t j = 0; j < a; ++j)
            for (std::size_t k = 0; k < a; ++k) mult.at({i, j, k}) = A.mult().at({i, j, k});
    for (std::size_t i = 0; i < a; ++i)
        for (std::size_t u = 0; u < m; ++u)
            for (std::size_t k = 0; k < m; ++k) {
                mult.at({i, a + u, a + k}) = M.left().at({i, u, k});
                mult.at({a + u, i, a + k}) = M.right().at({u, i, k});
            }
    auto names = A.basis();
    names.insert(names.end(), M.basis().begin(), M.basis().end());
    return Algebra(std::move(names), std::move(mult));
}

CertificateReport check_commutative(const Algebra& A) {
    CertificateReport rep{"commutative"};
    const auto* names = &A.basis();
    compare_maps(rep, "commutativity", {}, A.mult(), move_input(A.mult(), 0, 1), {names, names});
    return rep;
}

CertificateReport check_algebra_morphism(const LinearMap& phi, const Algebra& src, const Algebra& dst) {
    if (phi.source_dim() != src.dim() || phi.target_dim() != dst.dim())
        throw Error(ErrorKind::ShapeMismatch, "algebra map has the wrong shape");
    CertificateReport rep{"algebra-morphism"};
    auto f = phi.as_tensor();
    const auto* names = &src.basis();
    compare_maps(rep, "multiplicative", {}, compose(f, 0, src.mult()), product(dst.mult(), f, f), {names, names});
    return rep;
}

CertificateReport check_equivariant(const LinearMap& phi, const LinearMap& psi, const Algebra& src_alg,
                                    const Bimodule& src, const Algebra& dst_alg, const Bimodule& dst) {
    if (psi.source_dim() != src.dim() || psi.target_dim() != dst.dim() || phi.source_dim() != src_alg.dim() ||
        phi.target_dim() != dst_alg.dim())
        throw Error(ErrorKind::ShapeMismatch, "module map has the wrong shape");
    CertificateReport rep{"equivariant"};
    auto f = phi.as_tensor(), g = psi.as_tensor();
    const auto *an = &src_alg.basis(), *mn = &src.basis();
    compare_maps(rep, "left-action", {}, compose(g, 0, src.left()), product(dst.left(), f, g), {an, mn});
    compare_maps(rep, "right-action", {}, compose(g, 0, src.right()), product(dst.right(), g, f), {mn, an});
    return rep;
}

} // namespace mrb
