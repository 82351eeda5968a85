#pragma once

// Elementwise evaluation of the cochain differentials straight from their
// defining sums, on basis vectors, without the tensor composition helpers.

#include "oracle.hpp"

#include "mrb/cochain.hpp"

namespace mrb::oracle {

namespace detail {
inline void eval_rec(const DenseTensor& t, const std::vector<Vec>& args, std::size_t k, std::size_t offset, const Scalar& c,
                     Vec& out) {
    if (k == args.size()) {
        std::size_t od = t.out_dim();
        for (std::size_t o = 0; o < od; ++o) out[o] += c * t[offset * od + o];
        return;
    }
    for (std::size_t i = 0; i < args[k].size(); ++i)
        if (!args[k][i].is_zero()) eval_rec(t, args, k + 1, offset * t.shape()[k] + i, c * args[k][i], out);
}
} // namespace detail

inline Vec eval(const DenseTensor& t, const std::vector<Vec>& args) {
    Vec out(t.out_dim());
    detail::eval_rec(t, args, 0, 0, Scalar(1), out);
    return out;
}

// All multi-indices over dims, first index most significant.
inline std::vector<std::vector<std::size_t>> indices(const std::vector<std::size_t>& dims) {
    std::vector<std::vector<std::size_t>> out{{}};
    for (auto d : dims) {
        std::vector<std::vector<std::size_t>> next;
        for (const auto& p : out)
            for (std::size_t i = 0; i < d; ++i) {
                auto q = p;
                q.push_back(i);
                next.push_back(std::move(q));
            }
        out = std::move(next);
    }
    return out;
}

inline void store(DenseTensor& t, const std::vector<std::size_t>& idx, const Vec& v) {
    auto full = idx;
    full.push_back(0);
    std::size_t base = t.flat_index(full);
    for (std::size_t o = 0; o < v.size(); ++o) t[base + o] = v[o];
}

struct Ops {
    const OperatorFamily& F;
    Vec P(std::size_t x, const Vec& u) const { return mat_vec(F.map(x).matrix, u); }
    Vec mul(const Vec& a, const Vec& b) const { return bilinear(F.algebra().mult(), a, b); }
    Vec l(const Vec& a, const Vec& u) const { return bilinear(F.module().left(), a, u); }
    Vec r(const Vec& u, const Vec& a) const { return bilinear(F.module().right(), u, a); }
};

inline LabelTuple erase_range(const LabelTuple& t, std::size_t from, std::size_t count) {
    LabelTuple out(t);
    out.erase(out.begin() + static_cast<std::ptrdiff_t>(from), out.begin() + static_cast<std::ptrdiff_t>(from + count));
    return out;
}

// The operator differential written out term by term.
inline LabeledCochain delta_op(const OperatorFamily& F, const LabeledCochain& f) {
    Ops ops{F};
    const auto& L = F.labels();
    std::size_t n = f.degree(), m = F.module().dim();
    LabeledCochain out(F.context(), n + 1);
    for (std::size_t code = 0; code < out.size(); ++code) {
        auto x = L.decode(code, n + 1);
        for (const auto& idx : indices(std::vector<std::size_t>(n + 1, m))) {
            std::vector<Vec> u;
            for (auto i : idx) u.push_back(unit(m, i));
            std::vector<Vec> tail(u.begin() + 1, u.end()), head(u.begin(), u.end() - 1);
            Vec ftail = eval(f.component(erase_range(x, 0, 1)), tail);
            Vec v = sub(ops.mul(ops.P(x[0], u[0]), ftail), ops.P(x[0], ops.r(u[0], ftail)));
            for (std::size_t i = 1; i <= n; ++i) {
                Scalar s = i % 2 ? Scalar(-1) : Scalar(1);
                // u_i . P(u_{i+1}) merged, label x_{i+1} consumed
                std::vector<Vec> a(u.begin(), u.end());
                a[i - 1] = ops.r(u[i - 1], ops.P(x[i], u[i]));
                a.erase(a.begin() + static_cast<std::ptrdiff_t>(i));
                v = add(v, scale(eval(f.component(erase_range(x, i, 1)), a), s));
                // P(u_i) . u_{i+1} merged, label x_i consumed
                std::vector<Vec> b(u.begin(), u.end());
                b[i] = ops.l(ops.P(x[i - 1], u[i - 1]), u[i]);
                b.erase(b.begin() + static_cast<std::ptrdiff_t>(i - 1));
                v = add(v, scale(eval(f.component(erase_range(x, i - 1, 1)), b), s));
            }
            Scalar s = (n + 1) % 2 ? Scalar(-1) : Scalar(1);
            Vec fhead = eval(f.component(erase_range(x, n, 1)), head);
            v = add(v, scale(ops.mul(fhead, ops.P(x[n], u[n])), s));
            v = sub(v, scale(ops.P(x[n], ops.l(fhead, u[n])), s));
            store(out.component(code), idx, v);
        }
    }
    return out;
}

// Coboundary of the star-product algebra on M with coefficients in A (single label).
inline DenseTensor star_hochschild(const OperatorFamily& F, const DenseTensor& f) {
    Ops ops{F};
    std::size_t n = f.inputs(), m = F.module().dim(), a = F.algebra().dim();
    auto star = [&](const Vec& u, const Vec& v) { return add(ops.l(ops.P(0, u), v), ops.r(u, ops.P(0, v))); };
    auto lbar = [&](const Vec& u, const Vec& x) { return sub(ops.mul(ops.P(0, u), x), ops.P(0, ops.r(u, x))); };
    auto rbar = [&](const Vec& x, const Vec& u) { return sub(ops.mul(x, ops.P(0, u)), ops.P(0, ops.l(x, u))); };
    Shape s(n + 1, m);
    s.push_back(a);
    DenseTensor out(s);
    for (const auto& idx : indices(std::vector<std::size_t>(n + 1, m))) {
        std::vector<Vec> u;
        for (auto i : idx) u.push_back(unit(m, i));
        Vec v = lbar(u[0], eval(f, std::vector<Vec>(u.begin() + 1, u.end())));
        for (std::size_t i = 1; i <= n; ++i) {
            std::vector<Vec> w(u);
            w[i - 1] = star(u[i - 1], u[i]);
            w.erase(w.begin() + static_cast<std::ptrdiff_t>(i));
            v = add(v, scale(eval(f, w), i % 2 ? Scalar(-1) : Scalar(1)));
        }
        v = add(v, scale(rbar(eval(f, std::vector<Vec>(u.begin(), u.end() - 1)), u[n]), (n + 1) % 2 ? Scalar(-1) : Scalar(1)));
        store(out, idx, v);
    }
    return out;
}

// delta^alpha evaluated on every basis input; the module slot of output j is position j.
inline std::vector<DenseTensor> delta_alpha(const Algebra& A, const Bimodule& M, const DenseTensor& alpha,
                                            const std::vector<DenseTensor>& beta) {
    std::size_t n = beta.size(), a = A.dim(), m = M.dim();
    auto mul = [&](const Vec& x, const Vec& y) { return bilinear(A.mult(), x, y); };
    auto l = [&](const Vec& x, const Vec& u) { return bilinear(M.left(), x, u); };
    auto r = [&](const Vec& u, const Vec& x) { return bilinear(M.right(), u, x); };
    std::vector<DenseTensor> out;
    for (std::size_t j = 0; j <= n; ++j) {
        std::vector<std::size_t> dims(n + 1, a);
        dims[j] = m;
        Shape s = dims;
        s.push_back(m);
        DenseTensor t(s);
        for (const auto& idx : indices(dims)) {
            std::vector<Vec> x;
            for (std::size_t k = 0; k <= n; ++k) x.push_back(unit(dims[k], idx[k]));
            std::vector<Vec> rest(x.begin() + 1, x.end());
            Vec v = j == 0 ? r(x[0], eval(alpha, rest)) : l(x[0], eval(beta[j - 1], rest));
            for (std::size_t k = 0; k < n; ++k) {
                std::vector<Vec> w(x);
                std::size_t slot;
                if (j == k) {
                    w[k] = r(x[k], x[k + 1]);
                    slot = k;
                } else if (j == k + 1) {
                    w[k] = l(x[k], x[k + 1]);
                    slot = k;
                } else {
                    w[k] = mul(x[k], x[k + 1]);
                    slot = j < k ? j : j - 1;
                }
                w.erase(w.begin() + static_cast<std::ptrdiff_t>(k + 1));
                v = add(v, scale(eval(beta[slot], w), (k + 1) % 2 ? Scalar(-1) : Scalar(1)));
            }
            std::vector<Vec> init(x.begin(), x.end() - 1);
            Vec last = j == n ? l(eval(alpha, init), x[n]) : r(eval(beta[j], init), x[n]);
            v = add(v, scale(last, (n + 1) % 2 ? Scalar(-1) : Scalar(1)));
            store(t, idx, v);
        }
        out.push_back(std::move(t));
    }
    return out;
}

inline LabeledCochain h(const OperatorFamily& F, const DenseTensor& alpha, const std::vector<DenseTensor>& beta) {
    Ops ops{F};
    std::size_t n = beta.size(), m = F.module().dim();
    const auto& L = F.labels();
    LabeledCochain out(F.context(), n);
    Scalar s = n % 2 ? Scalar(-1) : Scalar(1);
    for (std::size_t code = 0; code < out.size(); ++code) {
        auto x = L.decode(code, n);
        for (const auto& idx : indices(std::vector<std::size_t>(n, m))) {
            std::vector<Vec> pu;
            for (std::size_t k = 0; k < n; ++k) pu.push_back(ops.P(x[k], unit(m, idx[k])));
            Vec v = eval(alpha, pu);
            for (std::size_t i = 0; i < n; ++i) {
                auto w = pu;
                w[i] = unit(m, idx[i]);
                v = sub(v, ops.P(x[i], eval(beta[i], w)));
            }
            store(out.component(code), idx, scale(v, s));
        }
    }
    return out;
}

inline DenseTensor hochschild(const Algebra& A, const Bimodule& M, const DenseTensor& f) {
    std::size_t n = f.inputs(), a = A.dim();
    Shape s(n + 1, a);
    s.push_back(M.dim());
    DenseTensor out(s);
    for (const auto& idx : indices(std::vector<std::size_t>(n + 1, a))) {
        std::vector<Vec> x;
        for (auto i : idx) x.push_back(unit(a, i));
        Vec v = bilinear(M.left(), x[0], eval(f, std::vector<Vec>(x.begin() + 1, x.end())));
        for (std::size_t i = 1; i <= n; ++i) {
            auto w = x;
            w[i - 1] = bilinear(A.mult(), x[i - 1], x[i]);
            w.erase(w.begin() + static_cast<std::ptrdiff_t>(i));
            v = add(v, scale(eval(f, w), i % 2 ? Scalar(-1) : Scalar(1)));
        }
        v = add(v, scale(bilinear(M.right(), eval(f, std::vector<Vec>(x.begin(), x.end() - 1)), x[n]),
                         (n + 1) % 2 ? Scalar(-1) : Scalar(1)));
        store(out, idx, v);
    }
    return out;
}

// Dense matrix of a vector map, for rank comparisons.
template <class Op>
DenseMatrix dense_matrix(std::size_t in, std::size_t out, Op op) {
    DenseMatrix d(out, in);
    for (std::size_t j = 0; j < in; ++j) {
        Vec e = unit(in, j);
        Vec v = op(e);
        for (std::size_t i = 0; i < out; ++i) d(i, j) = v[i];
    }
    return d;
}

} // namespace mrb::oracle
