#include "mrb/deformation.hpp"

#include "mrb/error.hpp"

#include <algorithm>

namespace mrb {

namespace {

// phi o X
DenseTensor after(const LinearMap& phi, const DenseTensor& X) { return compose(phi.as_tensor(), 0, X); }
// X with phi applied to input `slot`
DenseTensor before(const DenseTensor& X, std::size_t slot, const LinearMap& phi) { return compose(X, slot, phi.as_tensor()); }

LinearMap series_at(const MapSeries& s, std::size_t i, std::size_t dim) {
    return i < s.size() ? s[i] : LinearMap::zero(dim, dim);
}

std::string at_order(const std::string& name, std::size_t n) { return name + "[n=" + std::to_string(n) + "]"; }

template <class T>
void require_base(const std::vector<T>& list, const T& base, const std::string& what) {
    if (list.empty()) throw Error(ErrorKind::DeformationInvalid, what + " series is empty");
    if (!(list.front() == base)) throw Error(ErrorKind::DeformationInvalid, what + " at order 0 differs from the base");
}

void require_shape(const DenseTensor& t, const Shape& s, const std::string& what) {
    if (t.shape() != s) throw Error(ErrorKind::ShapeMismatch, what + " has the wrong shape");
}

void report_zero(CertificateReport& rep, const std::string& identity, const std::vector<std::string>& labels,
                 const DenseTensor& t) {
    compare_maps(rep, identity, labels, t, DenseTensor(t.shape()));
}

void report_zero_mixed(CertificateReport& rep, const MixedCochain& c, const LabelSet& L) {
    report_zero(rep, "hochschild", {}, c.alpha);
    for (std::size_t j = 0; j < c.beta.size(); ++j) report_zero(rep, "module-slot-" + std::to_string(j + 1), {}, c.beta[j]);
    if (c.gamma)
        for (std::size_t code = 0; code < c.gamma->size(); ++code)
            report_zero(rep, "operator", L.names_of(L.decode(code, c.gamma->degree())), c.gamma->component(code));
}

MixedCochain raw_infinitesimal(const MrrbaDeformation& d) {
    const auto& F = d.base();
    auto z = MixedCochain::zero(F.context(), 2);
    z.alpha = d.mu_at(1);
    z.beta[0] = d.r_at(1);
    z.beta[1] = d.l_at(1);
    for (std::size_t x = 0; x < F.labels().size(); ++x) z.gamma->component(x) = d.P_at(x, 1);
    return z;
}

MixedCochain degree_one(const Context& ctx, const ContextPtr& ptr, const LinearMap& phi, const LinearMap& psi) {
    auto c = MixedCochain::zero(ptr, 1);
    if (phi.source_dim() != ctx.a() || phi.target_dim() != ctx.a() || psi.source_dim() != ctx.m() || psi.target_dim() != ctx.m())
        throw Error(ErrorKind::ShapeMismatch, "equivalence maps have the wrong size");
    c.alpha = phi.as_tensor();
    c.beta[0] = psi.as_tensor();
    return c;
}

std::vector<Scalar> difference(std::vector<Scalar> a, const std::vector<Scalar>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}

void check_series_inverse(CertificateReport& rep, const MapSeries& s, const MapSeries& inv, std::size_t order,
                          const std::string& name) {
    std::size_t dim = s.front().source_dim();
    for (std::size_t n = 0; n <= order; ++n) {
        DenseMatrix sum(dim, dim);
        for (std::size_t i = 0; i <= n; ++i) sum = sum + series_at(s, i, dim).matrix * inv[n - i].matrix;
        if (!(sum == (n == 0 ? DenseMatrix::identity(dim) : DenseMatrix(dim, dim))))
            rep.failures.push_back({at_order(name + "-inverse", n), {}, {}, {}, sum.data(), {}});
    }
    rep.notes.push_back(name + "_t is invertible modulo t^" + std::to_string(order + 1) + " (constant term id)");
}

} // namespace

MrrbaDeformation::MrrbaDeformation(OperatorFamily base, std::vector<DenseTensor> mu, std::vector<DenseTensor> l,
                                   std::vector<DenseTensor> r, std::vector<std::vector<LinearMap>> P)
    : base_(std::move(base)), mu_(std::move(mu)), l_(std::move(l)), r_(std::move(r)), P_(std::move(P)) {
    const auto& A = base_.algebra();
    const auto& M = base_.module();
    require_base(mu_, A.mult(), "mu");
    require_base(l_, M.left(), "l");
    require_base(r_, M.right(), "r");
    std::size_t N = mu_.size();
    if (l_.size() != N || r_.size() != N) throw Error(ErrorKind::DeformationInvalid, "series of different orders");
    if (P_.size() != base_.labels().size()) throw Error(ErrorKind::DeformationInvalid, "one operator series per label expected");
    for (std::size_t x = 0; x < P_.size(); ++x) {
        if (P_[x].size() != N) throw Error(ErrorKind::DeformationInvalid, "series of different orders");
        require_base(P_[x], base_.map(x), "P_" + base_.labels()[x]);
        for (const auto& p : P_[x])
            if (p.source_dim() != M.dim() || p.target_dim() != A.dim()) throw Error(ErrorKind::ShapeMismatch, "operator coefficient");
    }
    for (std::size_t i = 0; i < N; ++i) {
        require_shape(mu_[i], A.mult().shape(), "mu coefficient");
        require_shape(l_[i], M.left().shape(), "l coefficient");
        require_shape(r_[i], M.right().shape(), "r coefficient");
    }
}

MrrbaDeformation MrrbaDeformation::constant(const OperatorFamily& base, std::size_t order) {
    const auto& A = base.algebra();
    const auto& M = base.module();
    std::vector<DenseTensor> mu{A.mult()}, l{M.left()}, r{M.right()};
    std::vector<std::vector<LinearMap>> P;
    for (std::size_t x = 0; x < base.labels().size(); ++x) P.push_back({base.map(x)});
    for (std::size_t i = 1; i <= order; ++i) {
        mu.emplace_back(A.mult().shape());
        l.emplace_back(M.left().shape());
        r.emplace_back(M.right().shape());
        for (auto& p : P) p.push_back(LinearMap::zero(M.dim(), A.dim()));
    }
    return MrrbaDeformation(base, std::move(mu), std::move(l), std::move(r), std::move(P));
}

DenseTensor MrrbaDeformation::mu_at(std::size_t i) const { return i < mu_.size() ? mu_[i] : DenseTensor(mu_[0].shape()); }
DenseTensor MrrbaDeformation::l_at(std::size_t i) const { return i < l_.size() ? l_[i] : DenseTensor(l_[0].shape()); }
DenseTensor MrrbaDeformation::r_at(std::size_t i) const { return i < r_.size() ? r_[i] : DenseTensor(r_[0].shape()); }
DenseTensor MrrbaDeformation::P_at(std::size_t x, std::size_t i) const {
    return i < P_[x].size() ? P_[x][i].as_tensor() : DenseTensor(P_[x][0].as_tensor().shape());
}

CertificateReport check_mrrba_deformation(const MrrbaDeformation& d, std::size_t max_n) {
    CertificateReport rep("mrrba-deformation");
    const auto& F = d.base();
    const auto* an = &F.algebra().basis();
    const auto* mn = &F.module().basis();
    const auto& L = F.labels();
    std::size_t top = std::min(d.order(), max_n);
    for (std::size_t n = 0; n <= top; ++n) {
        DenseTensor e1l(Shape{an->size(), an->size(), an->size(), an->size()}), e1r = e1l;
        DenseTensor e2l(Shape{an->size(), an->size(), mn->size(), mn->size()}), e2r = e2l;
        DenseTensor e3l(Shape{an->size(), mn->size(), an->size(), mn->size()}), e3r = e3l;
        DenseTensor e4l(Shape{mn->size(), an->size(), an->size(), mn->size()}), e4r = e4l;
        for (std::size_t i = 0; i <= n; ++i) {
            std::size_t j = n - i;
            auto mi = d.mu_at(i), mj = d.mu_at(j), li = d.l_at(i), lj = d.l_at(j), ri = d.r_at(i), rj = d.r_at(j);
            e1l += compose(mi, 0, mj);
            e1r += compose(mi, 1, mj);
            e2l += compose(li, 0, mj);
            e2r += compose(li, 1, lj);
            e3l += compose(ri, 0, lj);
            e3r += compose(li, 1, rj);
            e4l += compose(ri, 0, rj);
            e4r += compose(ri, 1, mj);
        }
        compare_maps(rep, at_order("equation-1", n), {}, e1l, e1r, {an, an, an});
        compare_maps(rep, at_order("equation-2", n), {}, e2l, e2r, {an, an, mn});
        compare_maps(rep, at_order("equation-3", n), {}, e3l, e3r, {an, mn, an});
        compare_maps(rep, at_order("equation-4", n), {}, e4l, e4r, {mn, an, an});
        for (std::size_t x = 0; x < L.size(); ++x)
            for (std::size_t y = 0; y < L.size(); ++y) {
                DenseTensor lhs(Shape{mn->size(), mn->size(), an->size()}), rhs = lhs;
                for (std::size_t i = 0; i <= n; ++i)
                    for (std::size_t j = 0; i + j <= n; ++j) {
                        std::size_t k = n - i - j;
                        lhs += product(d.mu_at(i), d.P_at(x, j), d.P_at(y, k));
                        rhs += compose(d.P_at(x, i), 0, compose(d.r_at(j), 1, d.P_at(y, k)));
                        rhs += compose(d.P_at(y, i), 0, compose(d.l_at(j), 0, d.P_at(x, k)));
                    }
                compare_maps(rep, at_order("equation-5", n), {L[x], L[y]}, lhs, rhs, {mn, mn});
            }
    }
    return rep;
}

Infinitesimal extract_infinitesimal(const MrrbaDeformation& d) {
    auto rep = check_mrrba_deformation(d, 1);
    if (!rep.passed()) throw Error(ErrorKind::DeformationInvalid, rep.summary());
    Infinitesimal out{raw_infinitesimal(d), CertificateReport("infinitesimal-cocycle")};
    auto delta = delta_mrrba(d.base(), out.cochain);
    report_zero_mixed(out.cocycle, delta, d.base().labels());
    return out;
}

MrrbaDeformation cocycle_to_deformation(const OperatorFamily& base, const MixedCochain& z) {
    if (z.degree != 2) throw Error(ErrorKind::DegreeMismatch, "deformations come from degree-2 cocycles");
    auto delta = delta_mrrba(base, z);
    if (!delta.is_zero()) throw Error(ErrorKind::NotCocycle, "delta of the cochain is nonzero");
    auto d = MrrbaDeformation::constant(base, 0);
    std::vector<DenseTensor> mu{d.mu()[0], z.alpha}, l{d.l()[0], z.beta[1]}, r{d.r()[0], z.beta[0]};
    std::vector<std::vector<LinearMap>> P;
    for (std::size_t x = 0; x < base.labels().size(); ++x)
        P.push_back({base.map(x), LinearMap::from_tensor(z.gamma->component(x))});
    return MrrbaDeformation(base, std::move(mu), std::move(l), std::move(r), std::move(P));
}

MapSeries inverse_series(const MapSeries& s, std::size_t order) {
    if (s.empty()) throw Error(ErrorKind::DeformationInvalid, "empty series");
    std::size_t dim = s[0].source_dim();
    if (!(s[0].matrix == DenseMatrix::identity(dim)))
        throw Error(ErrorKind::DeformationInvalid, "the constant term of an equivalence must be the identity");
    MapSeries inv{LinearMap::identity(dim)};
    for (std::size_t n = 1; n <= order; ++n) {
        DenseMatrix acc(dim, dim);
        for (std::size_t k = 1; k <= n; ++k) acc = acc - series_at(s, k, dim).matrix * inv[n - k].matrix;
        inv.emplace_back(std::move(acc));
    }
    return inv;
}

MrrbaDeformation transport(const MrrbaDeformation& d, const MapSeries& phi, const MapSeries& psi) {
    std::size_t N = d.order(), a = d.base().algebra().dim(), m = d.base().module().dim();
    auto phinv = inverse_series(phi, N), psinv = inverse_series(psi, N);
    std::vector<DenseTensor> mu, l, r;
    std::vector<std::vector<LinearMap>> P(d.base().labels().size());
    for (std::size_t n = 0; n <= N; ++n) {
        DenseTensor mn(d.mu()[0].shape()), ln(d.l()[0].shape()), rn(d.r()[0].shape());
        for (std::size_t i = 0; i <= n; ++i)
            for (std::size_t j = 0; i + j <= n; ++j)
                for (std::size_t k = 0; i + j + k <= n; ++k) {
                    std::size_t q = n - i - j - k;
                    auto ph = series_at(phi, i, a), ps = series_at(psi, i, m);
                    mn += after(ph, before(before(d.mu_at(j), 0, phinv[k]), 1, phinv[q]));
                    ln += after(ps, before(before(d.l_at(j), 0, phinv[k]), 1, psinv[q]));
                    rn += after(ps, before(before(d.r_at(j), 0, psinv[k]), 1, phinv[q]));
                }
        mu.push_back(std::move(mn));
        l.push_back(std::move(ln));
        r.push_back(std::move(rn));
        for (std::size_t x = 0; x < P.size(); ++x) {
            DenseMatrix acc(a, m);
            for (std::size_t i = 0; i <= n; ++i)
                for (std::size_t j = 0; i + j <= n; ++j)
                    acc = acc + series_at(phi, i, a).matrix * LinearMap::from_tensor(d.P_at(x, j)).matrix * psinv[n - i - j].matrix;
            P[x].emplace_back(std::move(acc));
        }
    }
    return MrrbaDeformation(d.base(), std::move(mu), std::move(l), std::move(r), std::move(P));
}

CertificateReport check_equivalence(const MrrbaDeformation& d, const MrrbaDeformation& d2, const MapSeries& phi,
                                    const MapSeries& psi) {
    if (!(d.base() == d2.base())) throw Error(ErrorKind::ContextMismatch, "deformations of different structures");
    CertificateReport rep("equivalence");
    const auto& F = d.base();
    std::size_t N = std::min(d.order(), d2.order()), a = F.algebra().dim(), m = F.module().dim();
    auto phinv = inverse_series(phi, N), psinv = inverse_series(psi, N);
    check_series_inverse(rep, phi, phinv, N, "phi");
    check_series_inverse(rep, psi, psinv, N, "psi");
    const auto* an = &F.algebra().basis();
    const auto* mn = &F.module().basis();
    const auto& L = F.labels();
    for (std::size_t n = 0; n <= N; ++n) {
        DenseTensor q1l(d.mu()[0].shape()), q1r = q1l, q2l(d.l()[0].shape()), q2r = q2l, q3l(d.r()[0].shape()), q3r = q3l;
        for (std::size_t i = 0; i <= n; ++i) {
            auto ph = series_at(phi, i, a), ps = series_at(psi, i, m);
            q1l += after(ph, d.mu_at(n - i));
            q2l += after(ps, d.l_at(n - i));
            q3l += after(ps, d.r_at(n - i));
            for (std::size_t j = 0; i + j <= n; ++j) {
                std::size_t k = n - i - j;
                auto phj = series_at(phi, j, a), phk = series_at(phi, k, a);
                auto psj = series_at(psi, j, m), psk = series_at(psi, k, m);
                q1r += before(before(d2.mu_at(i), 0, phj), 1, phk);
                q2r += before(before(d2.l_at(i), 0, phj), 1, psk);
                q3r += before(before(d2.r_at(i), 0, psj), 1, phk);
            }
        }
        compare_maps(rep, at_order("morphism-mu", n), {}, q1l, q1r, {an, an});
        compare_maps(rep, at_order("morphism-l", n), {}, q2l, q2r, {an, mn});
        compare_maps(rep, at_order("morphism-r", n), {}, q3l, q3r, {mn, an});
        for (std::size_t x = 0; x < L.size(); ++x) {
            DenseMatrix lhs(a, m), rhs(a, m);
            for (std::size_t i = 0; i <= n; ++i) {
                lhs = lhs + series_at(phi, i, a).matrix * LinearMap::from_tensor(d.P_at(x, n - i)).matrix;
                rhs = rhs + LinearMap::from_tensor(d2.P_at(x, i)).matrix * series_at(psi, n - i, m).matrix;
            }
            compare_maps(rep, at_order("morphism-P", n), {L[x]}, LinearMap(lhs).as_tensor(), LinearMap(rhs).as_tensor(), {mn});
        }
    }
    if (N >= 1) {
        bool low_ok = check_mrrba_deformation(d, 1).passed() && check_mrrba_deformation(d2, 1).passed();
        bool morph_ok = std::none_of(rep.failures.begin(), rep.failures.end(), [](const Failure& f) {
            return f.identity.find("[n=0]") != std::string::npos || f.identity.find("[n=1]") != std::string::npos;
        });
        if (low_ok && morph_ok) {
            auto lhs = difference(raw_infinitesimal(d).to_vector(), raw_infinitesimal(d2).to_vector());
            auto rhs = delta_mrrba(F, degree_one(*F.context(), F.context(), series_at(phi, 1, a), series_at(psi, 1, m))).to_vector();
            ++rep.checked;
            if (lhs != rhs) rep.failures.push_back({"coboundary", {}, {}, {}, lhs, rhs});
        } else {
            rep.notes.push_back("coboundary identity skipped: order-1 equations fail");
        }
    }
    return rep;
}

std::optional<Equivalence> find_equivalence(const MrrbaDeformation& d, const MrrbaDeformation& d2) {
    if (!(d.base() == d2.base())) throw Error(ErrorKind::ContextMismatch, "deformations of different structures");
    for (const auto* e : {&d, &d2}) {
        auto rep = check_mrrba_deformation(*e, 1);
        if (!rep.passed()) throw Error(ErrorKind::DeformationInvalid, rep.summary());
    }
    const auto& F = d.base();
    auto ctx = F.context();
    auto target = difference(raw_infinitesimal(d).to_vector(), raw_infinitesimal(d2).to_vector());
    std::size_t in = MixedCochain::dimension(*ctx, 1), out = MixedCochain::dimension(*ctx, 2);
    auto D = matrix_of(in, out, [&](const std::vector<Scalar>& v) {
        return delta_mrrba_unchecked(F, MixedCochain::from_vector(ctx, 1, v)).to_vector();
    });
    auto sol = solve(D, SparseVector::from_dense(target));
    if (!sol) return std::nullopt;
    auto c = MixedCochain::from_vector(ctx, 1, sol->to_dense(in));
    std::size_t a = ctx->a(), m = ctx->m();
    return Equivalence{{LinearMap::identity(a), LinearMap::from_tensor(c.alpha)},
                       {LinearMap::identity(m), LinearMap::from_tensor(c.beta[0])}};
}

MdaDeformation::MdaDeformation(MatchingDendriform base, std::vector<std::vector<DenseTensor>> prec,
                               std::vector<std::vector<DenseTensor>> succ)
    : base_(std::move(base)), prec_(std::move(prec)), succ_(std::move(succ)) {
    std::size_t q = base_.labels.size(), d = base_.dim();
    if (prec_.size() != q || succ_.size() != q) throw Error(ErrorKind::DeformationInvalid, "one series per label expected");
    std::size_t N = prec_.front().size();
    for (std::size_t x = 0; x < q; ++x) {
        if (prec_[x].size() != N || succ_[x].size() != N) throw Error(ErrorKind::DeformationInvalid, "series of different orders");
        require_base(prec_[x], base_.prec[x], "prec_" + base_.labels[x]);
        require_base(succ_[x], base_.succ[x], "succ_" + base_.labels[x]);
        for (std::size_t i = 0; i < N; ++i) {
            require_shape(prec_[x][i], Shape{d, d, d}, "prec coefficient");
            require_shape(succ_[x][i], Shape{d, d, d}, "succ coefficient");
        }
    }
}

MdaDeformation MdaDeformation::constant(const MatchingDendriform& base, std::size_t order) {
    std::vector<std::vector<DenseTensor>> prec, succ;
    std::size_t d = base.dim();
    for (std::size_t x = 0; x < base.labels.size(); ++x) {
        prec.push_back({base.prec[x]});
        succ.push_back({base.succ[x]});
        for (std::size_t i = 1; i <= order; ++i) {
            prec.back().emplace_back(Shape{d, d, d});
            succ.back().emplace_back(Shape{d, d, d});
        }
    }
    return MdaDeformation(base, std::move(prec), std::move(succ));
}

DenseTensor MdaDeformation::prec_at(std::size_t x, std::size_t i) const {
    return i < prec_[x].size() ? prec_[x][i] : DenseTensor(prec_[x][0].shape());
}
DenseTensor MdaDeformation::succ_at(std::size_t x, std::size_t i) const {
    return i < succ_[x].size() ? succ_[x][i] : DenseTensor(succ_[x][0].shape());
}

MatchingDendriform MdaDeformation::coefficient(std::size_t i) const {
    std::vector<DenseTensor> prec, succ;
    for (std::size_t x = 0; x < base_.labels.size(); ++x) {
        prec.push_back(prec_at(x, i));
        succ.push_back(succ_at(x, i));
    }
    return MatchingDendriform(base_.basis, base_.labels, std::move(prec), std::move(succ));
}

CertificateReport check_mda_deformation(const MdaDeformation& d, std::size_t max_n) {
    CertificateReport rep("mda-deformation");
    const auto& D = d.base();
    const auto* b = &D.basis;
    std::size_t dim = D.dim(), top = std::min(d.order(), max_n);
    for (std::size_t n = 0; n <= top; ++n)
        for (std::size_t x = 0; x < D.labels.size(); ++x)
            for (std::size_t y = 0; y < D.labels.size(); ++y) {
                Shape s{dim, dim, dim, dim};
                DenseTensor l1(s), r1(s), l2(s), r2(s), l3(s), r3(s);
                for (std::size_t i = 0; i <= n; ++i) {
                    std::size_t j = n - i;
                    l1 += compose(d.prec_at(y, j), 0, d.prec_at(x, i));
                    r1 += compose(d.prec_at(x, i), 1, d.prec_at(y, j)) + compose(d.prec_at(y, i), 1, d.succ_at(x, j));
                    l2 += compose(d.prec_at(y, j), 0, d.succ_at(x, i));
                    r2 += compose(d.succ_at(x, i), 1, d.prec_at(y, j));
                    l3 += compose(d.succ_at(x, j), 0, d.prec_at(y, i)) + compose(d.succ_at(y, j), 0, d.succ_at(x, i));
                    r3 += compose(d.succ_at(x, i), 1, d.succ_at(y, j));
                }
                std::vector<std::string> lab{D.labels[x], D.labels[y]};
                compare_maps(rep, at_order("equation-1", n), lab, l1, r1, {b, b, b});
                compare_maps(rep, at_order("equation-2", n), lab, l2, r2, {b, b, b});
                compare_maps(rep, at_order("equation-3", n), lab, l3, r3, {b, b, b});
            }
    return rep;
}

MdaInfinitesimal extract_mda_infinitesimal(const MdaDeformation& d) {
    auto rep = check_mda_deformation(d, 1);
    if (!rep.passed()) throw Error(ErrorKind::DeformationInvalid, rep.summary());
    MdaInfinitesimal out{multiplication_from_mda(d.coefficient(1)), CertificateReport("mda-infinitesimal-cocycle")};
    auto delta = delta_mda(d.base(), out.cochain);
    const auto& L = d.base().labels;
    for (std::size_t r = 0; r < delta.arity(); ++r)
        for (std::size_t code = 0; code < delta.tuple_count(); ++code) {
            auto names = L.names_of(L.decode(code, delta.arity() - 1));
            names.insert(names.begin(), "[" + std::to_string(r + 1) + "]");
            report_zero(out.cocycle, "delta", names, delta.component(r, code));
        }
    return out;
}

MdaDeformation mda_cocycle_to_deformation(const MatchingDendriform& base, const OperadElement& pi1) {
    if (pi1.arity() != 2) throw Error(ErrorKind::DegreeMismatch, "deformations come from arity-2 cocycles");
    if (!delta_mda(base, pi1).is_zero()) throw Error(ErrorKind::NotCocycle, "delta of the cochain is nonzero");
    auto coeff = mda_from_multiplication(pi1, base.basis);
    std::vector<std::vector<DenseTensor>> prec, succ;
    for (std::size_t x = 0; x < base.labels.size(); ++x) {
        prec.push_back({base.prec[x], coeff.prec[x]});
        succ.push_back({base.succ[x], coeff.succ[x]});
    }
    return MdaDeformation(base, std::move(prec), std::move(succ));
}

OperadElement lift_to_operad(const LinearMap& psi, const LabelSet& labels) {
    if (psi.source_dim() != psi.target_dim()) throw Error(ErrorKind::ShapeMismatch, "an endomorphism is required");
    OperadElement e(psi.source_dim(), labels, 1);
    e.component(0, 0) = psi.as_tensor();
    return e;
}

MdaDeformation transport(const MdaDeformation& d, const MapSeries& psi) {
    std::size_t N = d.order(), dim = d.base().dim(), q = d.base().labels.size();
    auto inv = inverse_series(psi, N);
    std::vector<std::vector<DenseTensor>> prec(q), succ(q);
    for (std::size_t x = 0; x < q; ++x)
        for (std::size_t n = 0; n <= N; ++n) {
            DenseTensor p(Shape{dim, dim, dim}), s = p;
            for (std::size_t i = 0; i <= n; ++i)
                for (std::size_t j = 0; i + j <= n; ++j)
                    for (std::size_t k = 0; i + j + k <= n; ++k) {
                        auto ps = series_at(psi, i, dim);
                        const auto &u = inv[k], &v = inv[n - i - j - k];
                        p += after(ps, before(before(d.prec_at(x, j), 0, u), 1, v));
                        s += after(ps, before(before(d.succ_at(x, j), 0, u), 1, v));
                    }
            prec[x].push_back(std::move(p));
            succ[x].push_back(std::move(s));
        }
    return MdaDeformation(d.base(), std::move(prec), std::move(succ));
}

CertificateReport check_mda_equivalence(const MdaDeformation& d, const MdaDeformation& d2, const MapSeries& psi) {
    if (!(d.base() == d2.base())) throw Error(ErrorKind::ContextMismatch, "deformations of different structures");
    CertificateReport rep("mda-equivalence");
    const auto& D = d.base();
    std::size_t N = std::min(d.order(), d2.order()), dim = D.dim();
    auto inv = inverse_series(psi, N);
    check_series_inverse(rep, psi, inv, N, "psi");
    const auto* b = &D.basis;
    for (std::size_t n = 0; n <= N; ++n)
        for (std::size_t x = 0; x < D.labels.size(); ++x) {
            Shape s{dim, dim, dim};
            DenseTensor pl(s), pr(s), sl(s), sr(s);
            for (std::size_t i = 0; i <= n; ++i) {
                auto ps = series_at(psi, i, dim);
                pl += after(ps, d.prec_at(x, n - i));
                sl += after(ps, d.succ_at(x, n - i));
                for (std::size_t j = 0; i + j <= n; ++j) {
                    auto pk = series_at(psi, n - i - j, dim);
                    pr += before(before(d2.prec_at(x, j), 0, ps), 1, pk);
                    sr += before(before(d2.succ_at(x, j), 0, ps), 1, pk);
                }
            }
            compare_maps(rep, at_order("morphism-prec", n), {D.labels[x]}, pl, pr, {b, b});
            compare_maps(rep, at_order("morphism-succ", n), {D.labels[x]}, sl, sr, {b, b});
        }
    if (N >= 1) {
        bool ok = rep.passed() && check_mda_deformation(d, 1).passed() && check_mda_deformation(d2, 1).passed();
        if (ok) {
            auto lhs = multiplication_from_mda(d.coefficient(1)) - multiplication_from_mda(d2.coefficient(1));
            auto rhs = delta_mda(D, lift_to_operad(series_at(psi, 1, dim), D.labels));
            ++rep.checked;
            if (!(lhs == rhs)) rep.failures.push_back({"coboundary", {}, {}, {}, lhs.to_vector(), rhs.to_vector()});
        } else {
            rep.notes.push_back("coboundary identity skipped: order-1 equations fail");
        }
    }
    return rep;
}

} // namespace mrb
