#include "mrb/cochain.hpp"

#include "mrb/error.hpp"

namespace mrb {

namespace {

Scalar sign(std::size_t k) { return k % 2 ? Scalar(-1) : Scalar(1); }

LabelTuple slice(const LabelTuple& t, std::size_t from, std::size_t to) {
    return LabelTuple(t.begin() + static_cast<std::ptrdiff_t>(from), t.begin() + static_cast<std::ptrdiff_t>(to));
}

LabelTuple concat(LabelTuple a, const LabelTuple& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

void add_signed(DenseTensor& acc, const DenseTensor& t, const Scalar& s) { acc.add_scaled(t, s); }

// Coboundary with left action [a,m,m], right action [m,a,m] and multiplication [a,a,a].
DenseTensor hoch(const DenseTensor& mult, const DenseTensor& left, const DenseTensor& right, const DenseTensor& f) {
    std::size_t n = f.inputs();
    std::size_t a = mult.shape()[0];
    Shape rs(n + 1, a);
    rs.push_back(f.out_dim());
    DenseTensor r(rs);
    if (f.is_zero()) return r;
    r += compose(left, 1, f);
    for (std::size_t k = 0; k < n; ++k) add_signed(r, compose(f, k, mult), sign(k + 1));
    add_signed(r, compose(right, 0, f), sign(n + 1));
    return r;
}

} // namespace

Shape cochain_shape(const Context& ctx, std::size_t degree) {
    Shape s(degree, ctx.m());
    s.push_back(ctx.a());
    return s;
}

LabeledCochain::LabeledCochain(ContextPtr ctx, std::size_t degree) : ctx_(std::move(ctx)), degree_(degree) {
    if (!ctx_) throw Error(ErrorKind::ContextMismatch, "cochain needs a context");
    components_.assign(ctx_->labels.tuple_count(degree), DenseTensor(cochain_shape(*ctx_, degree)));
}

LabeledCochain::LabeledCochain(ContextPtr ctx, std::size_t degree, std::vector<DenseTensor> components)
    : ctx_(std::move(ctx)), degree_(degree), components_(std::move(components)) {
    if (!ctx_) throw Error(ErrorKind::ContextMismatch, "cochain needs a context");
    if (components_.size() != ctx_->labels.tuple_count(degree))
        throw Error(ErrorKind::ShapeMismatch, "need one component per label tuple");
    auto shape = cochain_shape(*ctx_, degree);
    for (const auto& c : components_)
        if (c.shape() != shape) throw Error(ErrorKind::ShapeMismatch, "cochain component has the wrong shape");
}

LabeledCochain LabeledCochain::from_family(const OperatorFamily& F) {
    std::vector<DenseTensor> comps;
    for (std::size_t x = 0; x < F.labels().size(); ++x) comps.push_back(F.tensor(x));
    return LabeledCochain(F.context(), 1, std::move(comps));
}

std::size_t LabeledCochain::dimension(const Context& ctx, std::size_t degree) {
    return ctx.labels.tuple_count(degree) * shape_size(cochain_shape(ctx, degree));
}

LabeledCochain LabeledCochain::from_vector(ContextPtr ctx, std::size_t degree, const std::vector<Scalar>& v) {
    LabeledCochain c(std::move(ctx), degree);
    if (v.size() != dimension(*c.ctx_, degree)) throw Error(ErrorKind::ShapeMismatch, "vector length does not match g^n");
    std::size_t k = 0;
    for (auto& comp : c.components_)
        for (auto& x : comp.data()) x = v[k++];
    return c;
}

std::vector<Scalar> LabeledCochain::to_vector() const {
    std::vector<Scalar> v;
    v.reserve(dimension(*ctx_, degree_));
    for (const auto& comp : components_) v.insert(v.end(), comp.data().begin(), comp.data().end());
    return v;
}

bool LabeledCochain::is_zero() const {
    for (const auto& c : components_)
        if (!c.is_zero()) return false;
    return true;
}

LabeledCochain& LabeledCochain::operator+=(const LabeledCochain& rhs) {
    require_same_context(ctx_, rhs.ctx_);
    if (degree_ != rhs.degree_) throw Error(ErrorKind::ShapeMismatch, "cannot add cochains of different degrees");
    for (std::size_t i = 0; i < components_.size(); ++i) components_[i] += rhs.components_[i];
    return *this;
}

LabeledCochain& LabeledCochain::operator-=(const LabeledCochain& rhs) {
    require_same_context(ctx_, rhs.ctx_);
    if (degree_ != rhs.degree_) throw Error(ErrorKind::ShapeMismatch, "cannot subtract cochains of different degrees");
    for (std::size_t i = 0; i < components_.size(); ++i) components_[i] -= rhs.components_[i];
    return *this;
}

LabeledCochain& LabeledCochain::operator*=(const Scalar& c) {
    for (auto& comp : components_) comp *= c;
    return *this;
}

bool operator==(const LabeledCochain& a, const LabeledCochain& b) {
    if (a.degree_ != b.degree_ || a.components_ != b.components_) return false;
    return a.ctx_ == b.ctx_ || *a.ctx_ == *b.ctx_;
}

LabeledCochain diamond(const LabeledCochain& P, const LabeledCochain& Q) {
    require_same_context(P.context(), Q.context());
    const Context& ctx = *P.context();
    const auto& L = ctx.labels;
    std::size_t m = P.degree(), n = Q.degree();
    LabeledCochain R(P.context(), m + n);
    if (P.is_zero() || Q.is_zero()) return R;

    const auto& mult = ctx.algebra.mult();
    const auto& left = ctx.module.left();
    const auto& right = ctx.module.right();

    // Q(v).u and u.Q(v), one per Q component.
    std::vector<std::optional<DenseTensor>> q_left, q_right, q_mult;
    for (const auto& qc : Q.components()) {
        if (qc.is_zero()) {
            q_left.emplace_back();
            q_right.emplace_back();
            q_mult.emplace_back();
            continue;
        }
        q_left.push_back(compose(left, 0, qc));
        q_right.push_back(compose(right, 1, qc));
        q_mult.push_back(compose(mult, 1, qc));
    }

    for (std::size_t code = 0; code < R.size(); ++code) {
        auto t = L.decode(code, m + n);
        DenseTensor& out = R.component(code);
        for (std::size_t i = 0; i < m; ++i) {
            // Q fed through the left action into slot i of P
            std::size_t qc = L.encode(slice(t, i, i + n));
            const auto& pc = P.component(concat(slice(t, 0, i), slice(t, i + n, m + n)));
            if (q_left[qc] && !pc.is_zero()) add_signed(out, compose(pc, i, *q_left[qc]), sign(i * n));
            // u_i . Q(...) into slot i of P
            std::size_t qc2 = L.encode(slice(t, i + 1, i + 1 + n));
            const auto& pc2 = P.component(concat(slice(t, 0, i + 1), slice(t, i + 1 + n, m + n)));
            if (q_right[qc2] && !pc2.is_zero()) add_signed(out, compose(pc2, i, *q_right[qc2]), -sign((i + 1) * n));
        }
        std::size_t qc = L.encode(slice(t, m, m + n));
        const auto& pc = P.component(slice(t, 0, m));
        if (q_mult[qc] && !pc.is_zero()) add_signed(out, compose(*q_mult[qc], 0, pc), sign(m * n));
    }
    return R;
}

LabeledCochain bracket(const LabeledCochain& P, const LabeledCochain& Q) {
    auto r = diamond(P, Q);
    r -= sign(P.degree() * Q.degree()) * diamond(Q, P);
    return r;
}

namespace {

void compare_to_zero(CertificateReport& rep, const std::string& identity, const LabeledCochain& c) {
    const auto& ctx = *c.context();
    std::vector<const std::vector<std::string>*> axes(c.degree(), &ctx.module.basis());
    for (std::size_t code = 0; code < c.size(); ++code) {
        const auto& comp = c.component(code);
        compare_maps(rep, identity, ctx.labels.names_of(ctx.labels.decode(code, c.degree())), comp,
                     DenseTensor(comp.shape()), axes);
    }
}

} // namespace

CertificateReport check_mc(const OperatorFamily& F) {
    CertificateReport rep{"maurer-cartan"};
    auto P = LabeledCochain::from_family(F);
    compare_to_zero(rep, "self-bracket", bracket(P, P));
    return rep;
}

void require_mc(const OperatorFamily& F) {
    auto rep = check_mc(F);
    if (!rep.passed()) throw Error(ErrorKind::NotMaurerCartan, rep.summary());
}

CertificateReport check_mc_twist(const OperatorFamily& F, const OperatorFamily& Fp) {
    require_same_context(F.context(), Fp.context());
    CertificateReport rep{"maurer-cartan-twist"};
    auto base = check_mc(F);
    if (!base.passed()) {
        rep.merge(base, "base");
        rep.notes.push_back("base family is not Maurer-Cartan");
    }
    auto P = LabeledCochain::from_family(F);
    auto Pp = LabeledCochain::from_family(Fp);
    auto lhs = bracket(P, Pp) + Scalar(1, 2) * bracket(Pp, Pp);
    CertificateReport twist{"twist"};
    compare_to_zero(twist, "twist", lhs);
    rep.merge(twist);

    std::vector<LinearMap> sum;
    for (std::size_t x = 0; x < F.labels().size(); ++x) sum.emplace_back(F.map(x).matrix + Fp.map(x).matrix);
    auto direct = check_mrrba(OperatorFamily(F.context(), std::move(sum)));
    if (direct.passed() != twist.passed())
        rep.notes.push_back(std::string("twist identity ") + (twist.passed() ? "holds" : "fails") +
                            " but the summed family " + (direct.passed() ? "passes" : "fails") + " the matching check");
    return rep;
}

LabeledCochain delta_op_unchecked(const OperatorFamily& F, const LabeledCochain& f) {
    require_same_context(F.context(), f.context());
    auto r = bracket(LabeledCochain::from_family(F), f);
    if (f.degree() % 2) r *= Scalar(-1);
    return r;
}

LabeledCochain delta_op(const OperatorFamily& F, const LabeledCochain& f) {
    require_mc(F);
    return delta_op_unchecked(F, f);
}

DenseTensor hochschild_delta(const Algebra& A, const Bimodule& M, const DenseTensor& f) {
    if (M.algebra_dim() != A.dim()) throw Error(ErrorKind::ShapeMismatch, "bimodule is over another algebra");
    const auto& s = f.shape();
    if (s.empty() || s.back() != M.dim()) throw Error(ErrorKind::ShapeMismatch, "cochain must take values in M");
    for (std::size_t k = 0; k + 1 < s.size(); ++k)
        if (s[k] != A.dim()) throw Error(ErrorKind::ShapeMismatch, "cochain inputs must lie in A");
    return hoch(A.mult(), M.left(), M.right(), f);
}

Shape mixed_shape(std::size_t a, std::size_t m, std::size_t n, std::size_t position) {
    if (position >= n) throw Error(ErrorKind::PositionOutOfRange, "module slot beyond arity");
    Shape s(n, a);
    s[position] = m;
    s.push_back(m);
    return s;
}

std::vector<DenseTensor> hochschild_delta_alpha(const Algebra& A, const Bimodule& M, const DenseTensor& alpha,
                                                const std::vector<DenseTensor>& beta) {
    std::size_t a = A.dim(), m = M.dim(), n = beta.size();
    if (n == 0) throw Error(ErrorKind::DegreeOutOfRange, "mixed cochains start in degree 1");
    Shape as(n + 1, a);
    if (alpha.shape() != as) throw Error(ErrorKind::ShapeMismatch, "alpha must be an n-ary operation on A");
    for (std::size_t j = 0; j < n; ++j)
        if (beta[j].shape() != mixed_shape(a, m, n, j)) throw Error(ErrorKind::ShapeMismatch, "beta summand has the wrong shape");

    const auto& mult = A.mult();
    const auto& left = M.left();
    const auto& right = M.right();
    bool alpha_zero = alpha.is_zero();
    std::vector<bool> beta_zero(n);
    for (std::size_t j = 0; j < n; ++j) beta_zero[j] = beta[j].is_zero();

    std::vector<DenseTensor> out;
    for (std::size_t j = 0; j <= n; ++j) {
        DenseTensor r(mixed_shape(a, m, n + 1, j));
        if (j == 0) {
            if (!alpha_zero) r += compose(right, 1, alpha);
        } else if (!beta_zero[j - 1]) {
            r += compose(left, 1, beta[j - 1]);
        }
        for (std::size_t k = 0; k < n; ++k) {
            // merge inputs k and k+1
            Scalar s = sign(k + 1);
            if (j == k) {
                if (!beta_zero[k]) add_signed(r, compose(beta[k], k, right), s);
            } else if (j == k + 1) {
                if (!beta_zero[k]) add_signed(r, compose(beta[k], k, left), s);
            } else if (j < k) {
                if (!beta_zero[j]) add_signed(r, compose(beta[j], k, mult), s);
            } else if (!beta_zero[j - 1]) {
                add_signed(r, compose(beta[j - 1], k, mult), s);
            }
        }
        if (j == n) {
            if (!alpha_zero) add_signed(r, compose(left, 0, alpha), sign(n + 1));
        } else if (!beta_zero[j]) {
            add_signed(r, compose(right, 0, beta[j]), sign(n + 1));
        }
        out.push_back(std::move(r));
    }
    return out;
}

MixedCochain MixedCochain::zero(const ContextPtr& ctx, std::size_t degree) {
    if (degree == 0) throw Error(ErrorKind::DegreeOutOfRange, "mixed cochains start in degree 1");
    std::size_t a = ctx->a(), m = ctx->m();
    MixedCochain c{degree, DenseTensor(Shape(degree + 1, a)), {}, std::nullopt};
    for (std::size_t j = 0; j < degree; ++j) c.beta.emplace_back(mixed_shape(a, m, degree, j));
    if (degree >= 2) c.gamma.emplace(ctx, degree - 1);
    return c;
}

std::size_t MixedCochain::dimension(const Context& ctx, std::size_t degree) {
    if (degree == 0) return 0;
    std::size_t a = ctx.a(), m = ctx.m();
    std::size_t d = shape_size(Shape(degree + 1, a));
    d += degree * shape_size(mixed_shape(a, m, degree, 0));
    if (degree >= 2) d += LabeledCochain::dimension(ctx, degree - 1);
    return d;
}

MixedCochain MixedCochain::from_vector(const ContextPtr& ctx, std::size_t degree, const std::vector<Scalar>& v) {
    auto c = zero(ctx, degree);
    if (v.size() != dimension(*ctx, degree)) throw Error(ErrorKind::ShapeMismatch, "vector length does not match C^n");
    std::size_t k = 0;
    for (auto& x : c.alpha.data()) x = v[k++];
    for (auto& b : c.beta)
        for (auto& x : b.data()) x = v[k++];
    if (c.gamma)
        for (std::size_t code = 0; code < c.gamma->size(); ++code)
            for (auto& x : c.gamma->component(code).data()) x = v[k++];
    return c;
}

std::vector<Scalar> MixedCochain::to_vector() const {
    std::vector<Scalar> v(alpha.data());
    for (const auto& b : beta) v.insert(v.end(), b.data().begin(), b.data().end());
    if (gamma) {
        auto g = gamma->to_vector();
        v.insert(v.end(), g.begin(), g.end());
    }
    return v;
}

bool MixedCochain::is_zero() const {
    if (!alpha.is_zero()) return false;
    for (const auto& b : beta)
        if (!b.is_zero()) return false;
    return !gamma || gamma->is_zero();
}

LabeledCochain h_map(const OperatorFamily& F, const DenseTensor& alpha, const std::vector<DenseTensor>& beta) {
    const auto& ctx = F.context();
    std::size_t n = beta.size(), a = ctx->a(), m = ctx->m();
    if (n == 0) throw Error(ErrorKind::DegreeOutOfRange, "h is defined from degree 1");
    if (alpha.shape() != Shape(n + 1, a)) throw Error(ErrorKind::ShapeMismatch, "alpha must be an n-ary operation on A");
    for (std::size_t j = 0; j < n; ++j)
        if (beta[j].shape() != mixed_shape(a, m, n, j)) throw Error(ErrorKind::ShapeMismatch, "beta summand has the wrong shape");

    LabeledCochain r(ctx, n);
    bool alpha_zero = alpha.is_zero();
    std::vector<bool> beta_zero(n);
    for (std::size_t j = 0; j < n; ++j) beta_zero[j] = beta[j].is_zero();
    Scalar s = sign(n);
    for (std::size_t code = 0; code < r.size(); ++code) {
        auto t = ctx->labels.decode(code, n);
        auto& out = r.component(code);
        if (!alpha_zero) {
            DenseTensor acc = alpha;
            for (std::size_t k = 0; k < n; ++k) acc = compose(acc, k, F.tensor(t[k]));
            add_signed(out, acc, s);
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (beta_zero[i]) continue;
            DenseTensor acc = beta[i];
            for (std::size_t k = 0; k < n; ++k)
                if (k != i) acc = compose(acc, k, F.tensor(t[k]));
            add_signed(out, compose(F.tensor(t[i]), 0, acc), -s);
        }
    }
    return r;
}

MixedCochain delta_mrrba_unchecked(const OperatorFamily& F, const MixedCochain& c) {
    const auto& ctx = F.context();
    std::size_t n = c.degree;
    if (n == 0) throw Error(ErrorKind::DegreeOutOfRange, "mixed cochains start in degree 1");
    if (c.beta.size() != n || (n >= 2) != c.gamma.has_value())
        throw Error(ErrorKind::ShapeMismatch, "mixed cochain components do not match its degree");
    if (c.gamma) require_same_context(ctx, c.gamma->context());
    const auto& A = ctx->algebra;
    MixedCochain r{n + 1, hoch(A.mult(), A.mult(), A.mult(), c.alpha), hochschild_delta_alpha(A, ctx->module, c.alpha, c.beta),
                   h_map(F, c.alpha, c.beta)};
    if (c.gamma && !c.gamma->is_zero()) *r.gamma += delta_op_unchecked(F, *c.gamma);
    return r;
}

MixedCochain delta_mrrba(const OperatorFamily& F, const MixedCochain& c) {
    require_mc(F);
    return delta_mrrba_unchecked(F, c);
}

} // namespace mrb
