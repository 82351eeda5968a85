#include "mrb/operators.hpp"

#include "mrb/error.hpp"

namespace mrb {

Context::Context(LabelSet labels_, Algebra algebra_, Bimodule module_)
    : labels(std::move(labels_)), algebra(std::move(algebra_)), module(std::move(module_)) {
    if (module.algebra_dim() != algebra.dim())
        throw Error(ErrorKind::ShapeMismatch, "bimodule is over an algebra of another dimension");
    if (labels.size() == 0) throw Error(ErrorKind::ShapeMismatch, "label set must be nonempty");
}

ContextPtr make_context(LabelSet labels, Algebra algebra, Bimodule module) {
    return std::make_shared<const Context>(std::move(labels), std::move(algebra), std::move(module));
}

void require_same_context(const ContextPtr& a, const ContextPtr& b) {
    if (a == b) return;
    if (!a || !b || !(*a == *b)) throw Error(ErrorKind::ContextMismatch, "cochains live over different contexts");
}

OperatorFamily::OperatorFamily(ContextPtr ctx, std::vector<LinearMap> maps) : ctx_(std::move(ctx)), maps_(std::move(maps)) {
    if (maps_.size() != ctx_->q()) throw Error(ErrorKind::ShapeMismatch, "need exactly one map per label");
    for (const auto& p : maps_) {
        if (p.source_dim() != ctx_->m() || p.target_dim() != ctx_->a())
            throw Error(ErrorKind::ShapeMismatch, "operator must map M to A");
        tensors_.push_back(p.as_tensor());
    }
}

OperatorFamily::OperatorFamily(LabelSet labels, Algebra algebra, Bimodule module, std::vector<LinearMap> maps)
    : OperatorFamily(make_context(std::move(labels), std::move(algebra), std::move(module)), std::move(maps)) {}

namespace {

void matching_identity(CertificateReport& rep, const Algebra& A, const Bimodule& M, const DenseTensor& px,
                       const DenseTensor& py, const std::vector<std::string>& labels) {
    auto lhs = product(A.mult(), px, py);
    auto rhs = compose(px, 0, compose(M.right(), 1, py));
    rhs += compose(py, 0, compose(M.left(), 0, px));
    const auto* mn = &M.basis();
    compare_maps(rep, "matching", labels, lhs, rhs, {mn, mn});
}

} // namespace

CertificateReport check_mrrba(const OperatorFamily& F) {
    CertificateReport rep{"mrrba"};
    const auto& L = F.labels();
    for (std::size_t x = 0; x < L.size(); ++x)
        for (std::size_t y = 0; y < L.size(); ++y)
            matching_identity(rep, F.algebra(), F.module(), F.tensor(x), F.tensor(y), {L[x], L[y]});
    return rep;
}

CertificateReport check_relative_rota_baxter(const Algebra& A, const Bimodule& M, const LinearMap& P) {
    if (P.source_dim() != M.dim() || P.target_dim() != A.dim()) throw Error(ErrorKind::ShapeMismatch, "operator must map M to A");
    CertificateReport rep{"relative-rota-baxter"};
    auto p = P.as_tensor();
    matching_identity(rep, A, M, p, p, {});
    return rep;
}

OperatorFamily select_labels(const OperatorFamily& F, const std::vector<std::string>& labels) {
    std::vector<LinearMap> maps;
    for (const auto& x : labels) maps.push_back(F.map(x));
    return OperatorFamily(LabelSet(labels), F.algebra(), F.module(), std::move(maps));
}

OperatorFamily relabel(const OperatorFamily& F, const std::map<std::string, std::string>& tau) {
    std::vector<LinearMap> maps;
    for (const auto& x : F.labels().names()) {
        auto it = tau.find(x);
        if (it == tau.end()) throw Error(ErrorKind::UnknownLabel, "relabelling is undefined on '" + x + "'");
        maps.push_back(F.map(F.labels().index_of(it->second)));
    }
    for (const auto& [x, y] : tau) F.labels().index_of(x);
    return OperatorFamily(F.context(), std::move(maps));
}

OperatorFamily family_from_rb_pair(const Algebra& A, const Bimodule& M, const LinearMap& P) {
    auto rep = check_relative_rota_baxter(A, M, P);
    if (!rep.passed()) throw Error(ErrorKind::InputNotRotaBaxter, rep.summary());
    LinearMap neg(Scalar(-1) * P.matrix);
    return OperatorFamily(LabelSet({"+", "-"}), A, M, {P, neg});
}

OperatorFamily family_from_central_elements(const Algebra& A, const Bimodule& M, const LinearMap& P, const LabelSet& labels,
                                            const std::vector<std::vector<Scalar>>& elements) {
    auto rep = check_relative_rota_baxter(A, M, P);
    if (!rep.passed()) throw Error(ErrorKind::InputNotRotaBaxter, rep.summary());
    if (elements.size() != labels.size()) throw Error(ErrorKind::ShapeMismatch, "need one element per label");
    std::size_t a = A.dim();
    auto p = P.as_tensor();
    std::vector<LinearMap> maps;
    for (std::size_t x = 0; x < labels.size(); ++x) {
        if (elements[x].size() != a) throw Error(ErrorKind::ShapeMismatch, "element has the wrong dimension");
        DenseTensor elem({a}, elements[x]);
        auto left_mul = compose(A.mult(), 0, elem);
        auto right_mul = compose(A.mult(), 1, elem);
        for (std::size_t b = 0; b < a; ++b)
            for (std::size_t k = 0; k < a; ++k)
                if (left_mul.at({b, k}) != right_mul.at({b, k}))
                    throw Error(ErrorKind::NotCentral,
                                "element for label '" + labels[x] + "' does not commute with " + A.basis()[b]);
        // u -> P(a_x . u)
        maps.push_back(LinearMap::from_tensor(compose(p, 0, compose(M.left(), 0, elem))));
    }
    return OperatorFamily(labels, A, M, std::move(maps));
}

RMatrixFamily::RMatrixFamily(LabelSet labels_, Algebra algebra_, std::vector<DenseTensor> tensors_)
    : labels(std::move(labels_)), algebra(std::move(algebra_)), tensors(std::move(tensors_)) {
    if (tensors.size() != labels.size()) throw Error(ErrorKind::ShapeMismatch, "need one tensor per label");
    std::size_t a = algebra.dim();
    for (const auto& t : tensors)
        if (t.shape() != Shape{a, a}) throw Error(ErrorKind::ShapeMismatch, "r-matrix must have shape [dim, dim]");
}

DenseTensor aybe_tensor(const RMatrixFamily& R, std::size_t x, std::size_t y) {
    std::size_t a = R.algebra.dim();
    const auto &rx = R.tensors.at(x), &ry = R.tensors.at(y), &mu = R.algebra.mult();
    DenseTensor out({a, a, a});
    for (std::size_t i = 0; i < a; ++i)
        for (std::size_t j = 0; j < a; ++j)
            for (std::size_t k = 0; k < a; ++k) {
                const Scalar& m = mu.at({i, j, k});
                if (m.is_zero()) continue;
                // r^y_(1) r^x_(1) (x) r^x_(2) (x) r^y_(2)
                for (std::size_t q = 0; q < a; ++q)
                    for (std::size_t s = 0; s < a; ++s) out.at({k, q, s}) += m * ry.at({i, s}) * rx.at({j, q});
                // - r^x_(1) (x) r^x_(2) r^y_(1) (x) r^y_(2)
                for (std::size_t p = 0; p < a; ++p)
                    for (std::size_t s = 0; s < a; ++s) out.at({p, k, s}) -= m * rx.at({p, i}) * ry.at({j, s});
                // + r^x_(1) (x) r^y_(1) (x) r^y_(2) r^x_(2)
                for (std::size_t p = 0; p < a; ++p)
                    for (std::size_t q = 0; q < a; ++q) out.at({p, q, k}) += m * rx.at({p, j}) * ry.at({q, i});
            }
    return out;
}

CertificateReport check_matching_aybe(const RMatrixFamily& R) {
    CertificateReport rep{"aybe"};
    const auto& names = R.algebra.basis();
    for (std::size_t x = 0; x < R.labels.size(); ++x)
        for (std::size_t y = 0; y < R.labels.size(); ++y) {
            auto t = aybe_tensor(R, x, y);
            for (std::size_t k = 0; k < t.size(); ++k) {
                ++rep.checked;
                if (t[k].is_zero()) continue;
                auto idx = t.multi_index(k);
                rep.failures.push_back(Failure{"aybe", {R.labels[x], R.labels[y]}, idx,
                                               {names[idx[0]], names[idx[1]], names[idx[2]]}, {t[k]}, {Scalar(0)}});
            }
        }
    return rep;
}

CertificateReport check_skew_symmetric(const RMatrixFamily& R) {
    CertificateReport rep{"skew"};
    std::size_t a = R.algebra.dim();
    const auto& names = R.algebra.basis();
    for (std::size_t x = 0; x < R.labels.size(); ++x)
        for (std::size_t i = 0; i < a; ++i)
            for (std::size_t j = i; j < a; ++j) {
                ++rep.checked;
                const auto& t = R.tensors[x];
                if (t.at({i, j}) == -t.at({j, i})) continue;
                rep.failures.push_back(
                    Failure{"skew-symmetry", {R.labels[x]}, {i, j}, {names[i], names[j]}, {t.at({i, j})}, {-t.at({j, i})}});
            }
    return rep;
}

OperatorFamily operators_from_rmatrix(const RMatrixFamily& R, const Bimodule& M) {
    if (M.algebra_dim() != R.algebra.dim() || M.left() != R.algebra.mult() || M.right() != R.algebra.mult())
        throw Error(ErrorKind::NotAdjoint, "r1.u.r2 lies in A only for the adjoint bimodule");
    auto rep = check_matching_aybe(R);
    if (!rep.passed()) throw Error(ErrorKind::AybeFails, rep.summary());
    std::size_t a = R.algebra.dim();
    auto sandwich = compose(M.right(), 0, M.left());  // (e_i u) e_j : [a, a, a, a]
    std::vector<LinearMap> maps;
    for (const auto& r : R.tensors) {
        DenseTensor t({a, a});
        for (std::size_t i = 0; i < a; ++i)
            for (std::size_t j = 0; j < a; ++j) {
                const Scalar& c = r.at({i, j});
                if (c.is_zero()) continue;
                for (std::size_t u = 0; u < a; ++u)
                    for (std::size_t o = 0; o < a; ++o) t.at({u, o}).add_product(c, sandwich.at({i, u, j, o}));
            }
        maps.push_back(LinearMap::from_tensor(t));
    }
    return OperatorFamily(R.labels, R.algebra, M, std::move(maps));
}

OperatorFamily operators_on_dual(const RMatrixFamily& R) {
    auto skew = check_skew_symmetric(R);
    if (!skew.passed()) throw Error(ErrorKind::NotSkewSymmetric, skew.summary());
    auto rep = check_matching_aybe(R);
    if (!rep.passed()) throw Error(ErrorKind::AybeFails, rep.summary());
    std::size_t a = R.algebra.dim();
    std::vector<LinearMap> maps;
    for (const auto& r : R.tensors) {
        // P(d_j) = sum_i r[i][j] e_i
        DenseMatrix m(a, a);
        for (std::size_t i = 0; i < a; ++i)
            for (std::size_t j = 0; j < a; ++j) m(i, j) = r.at({i, j});
        maps.emplace_back(std::move(m));
    }
    return OperatorFamily(R.labels, R.algebra, coadjoint_bimodule(R.algebra), std::move(maps));
}

StarProduct star_product(const OperatorFamily& F) {
    if (F.labels().size() != 1) throw Error(ErrorKind::MultiLabelNotSupported, "star product needs exactly one label");
    const auto& A = F.algebra();
    const auto& M = F.module();
    const auto& p = F.tensor(0);
    auto star = compose(M.left(), 0, p);
    star += compose(M.right(), 1, p);
    auto id = identity_tensor(A.dim());
    auto lbar = product(A.mult(), p, id) - compose(p, 0, M.right());
    auto rbar = product(A.mult(), id, p) - compose(p, 0, M.left());
    Algebra mp(M.basis(), std::move(star));
    Bimodule coeff(M.dim(), A.basis(), std::move(lbar), std::move(rbar));
    return {std::move(mp), std::move(coeff)};
}

CertificateReport check_morphism_pair(const LinearMap& phi, const LinearMap& psi, const OperatorFamily& src,
                                      const OperatorFamily& dst) {
    if (!(src.labels() == dst.labels())) throw Error(ErrorKind::LabelSetMismatch, "morphism between different label sets");
    CertificateReport rep{"morphism"};
    rep.merge(check_algebra_morphism(phi, src.algebra(), dst.algebra()));
    rep.merge(check_equivariant(phi, psi, src.algebra(), src.module(), dst.algebra(), dst.module()));
    auto f = phi.as_tensor(), g = psi.as_tensor();
    const auto* mn = &src.module().basis();
    for (std::size_t x = 0; x < src.labels().size(); ++x)
        compare_maps(rep, "intertwining", {src.labels()[x]}, compose(f, 0, src.tensor(x)), compose(dst.tensor(x), 0, g),
                     {mn});
    return rep;
}

} // namespace mrb
