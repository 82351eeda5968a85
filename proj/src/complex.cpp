#include "mrb/complex.hpp"

#include "mrb/error.hpp"

#include <map>
#include <mutex>
#include <random>

namespace mrb {

SparseMatrix matrix_of(std::size_t in_dim, std::size_t out_dim, const VectorMap& op) {
    std::vector<SparseVector> cols;
    cols.reserve(in_dim);
    std::vector<Scalar> e(in_dim);
    for (std::size_t j = 0; j < in_dim; ++j) {
        e[j] = 1;
        auto v = op(e);
        e[j] = 0;
        if (v.size() != out_dim) throw Error(ErrorKind::ShapeMismatch, "operator returned a vector of the wrong length");
        cols.push_back(SparseVector::from_dense(v));
    }
    return SparseMatrix::from_columns(out_dim, std::move(cols));
}

struct CochainComplex::Cache {
    std::mutex mu;
    std::map<std::size_t, SparseMatrix> d;
};

CochainComplex::CochainComplex(std::string name, std::size_t min_degree, Dimension dim, Differential d,
                               std::size_t max_degree)
    : name_(std::move(name)), min_(min_degree), max_(max_degree), dim_(std::move(dim)), d_(std::move(d)),
      cache_(std::make_shared<Cache>()) {}

std::size_t CochainComplex::dim(std::size_t n) const { return n < min_ ? 0 : dim_(n); }

const SparseMatrix& CochainComplex::differential(std::size_t n) const {
    if (n > max_)
        throw Error(ErrorKind::DegreeOutOfRange,
                    name_ + ": degree " + std::to_string(n) + " exceeds max degree " + std::to_string(max_));
    std::lock_guard lock(cache_->mu);
    auto it = cache_->d.find(n);
    if (it != cache_->d.end()) return it->second;
    SparseMatrix m = n + 1 < min_ ? SparseMatrix(0, 0) : n < min_ ? SparseMatrix(dim(n + 1), 0) : d_(n);
    if (m.rows() != dim(n + 1) || m.cols() != dim(n))
        throw Error(ErrorKind::ShapeMismatch, name_ + ": differential has the wrong shape");
    return cache_->d.emplace(n, std::move(m)).first->second;
}

bool CochainComplex::squares_to_zero(std::size_t n) const {
    if (n == 0) return true;
    return (differential(n) * differential(n - 1)).is_zero();
}

CohomologyReport CochainComplex::report(std::size_t n) const {
    if (n < min_) throw Error(ErrorKind::DegreeOutOfRange, name_ + " starts in degree " + std::to_string(min_));
    CohomologyReport r;
    r.complex = name_;
    r.degree = n;
    r.dim_cochain = dim(n);
    const auto& out = differential(n);
    r.dim_kernel = kernel_dim(out);
    if (n > 0) {
        const auto& in = differential(n - 1);
        r.dim_image_prev = rank(in);
        r.delta_squared_zero = (out * in).is_zero();
    }
    r.dim_cohomology = r.dim_kernel - r.dim_image_prev;
    return r;
}

CochainComplex hochschild_complex(const Algebra& A, const Bimodule& M, std::size_t min_degree, std::size_t max_degree) {
    std::size_t a = A.dim(), m = M.dim();
    auto dim = [a, m](std::size_t n) { return shape_size(Shape(n, a)) * m; };
    auto d = [A, M, dim](std::size_t n) {
        Shape s(n, A.dim());
        s.push_back(M.dim());
        return matrix_of(dim(n), dim(n + 1), [&](const std::vector<Scalar>& v) {
            return hochschild_delta(A, M, DenseTensor(s, v)).data();
        });
    };
    return CochainComplex("hochschild", min_degree, dim, d, max_degree);
}

CochainComplex op_complex(const OperatorFamily& F, std::size_t min_degree, std::size_t max_degree) {
    require_mc(F);
    auto ctx = F.context();
    auto dim = [ctx](std::size_t n) { return LabeledCochain::dimension(*ctx, n); };
    auto d = [F, ctx, dim](std::size_t n) {
        return matrix_of(dim(n), dim(n + 1), [&](const std::vector<Scalar>& v) {
            return delta_op_unchecked(F, LabeledCochain::from_vector(ctx, n, v)).to_vector();
        });
    };
    return CochainComplex("operator", min_degree, dim, d, max_degree);
}

CochainComplex mrrba_complex(const OperatorFamily& F, std::size_t max_degree) {
    require_mc(F);
    auto ctx = F.context();
    auto dim = [ctx](std::size_t n) { return MixedCochain::dimension(*ctx, n); };
    auto d = [F, ctx, dim](std::size_t n) {
        return matrix_of(dim(n), dim(n + 1), [&](const std::vector<Scalar>& v) {
            return delta_mrrba_unchecked(F, MixedCochain::from_vector(ctx, n, v)).to_vector();
        });
    };
    return CochainComplex("mrrba", 1, dim, d, max_degree);
}

std::size_t cohomology_mrrba(const OperatorFamily& F, std::size_t n, std::size_t max_degree) {
    if (n == 0) throw Error(ErrorKind::DegreeOutOfRange, "the mrrba complex starts in degree 1");
    if (n > max_degree) throw Error(ErrorKind::DegreeOutOfRange, "degree exceeds max degree");
    return mrrba_complex(F, max_degree).cohomology(n);
}

std::size_t cohomology_op(const OperatorFamily& F, std::size_t n, std::size_t max_degree) {
    if (n > max_degree) throw Error(ErrorKind::DegreeOutOfRange, "degree exceeds max degree");
    return op_complex(F, 0, max_degree).cohomology(n);
}

namespace {

bool is_adjoint(const Context& ctx) {
    const auto& mult = ctx.algebra.mult();
    return ctx.module.left() == mult && ctx.module.right() == mult;
}

std::size_t alpha_dim(const Context& ctx, std::size_t n) { return shape_size(Shape(n + 1, ctx.a())); }

std::vector<Scalar> mrba_delta(const OperatorFamily& F, std::size_t n, const std::vector<Scalar>& v) {
    const auto& ctx = F.context();
    std::size_t da = alpha_dim(*ctx, n);
    DenseTensor alpha(Shape(n + 1, ctx->a()), std::vector<Scalar>(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(da)));
    const auto& mult = ctx->algebra.mult();
    std::vector<Scalar> out;
    if (alpha.is_zero()) {
        out.assign(alpha_dim(*ctx, n + 1), Scalar());
    } else {
        DenseTensor d = compose(mult, 1, alpha);
        for (std::size_t k = 0; k < n; ++k) d.add_scaled(compose(alpha, k, mult), k % 2 ? Scalar(1) : Scalar(-1));
        d.add_scaled(compose(mult, 0, alpha), n % 2 ? Scalar(1) : Scalar(-1));
        out = d.data();
    }
    LabeledCochain g = h_map(F, alpha, std::vector<DenseTensor>(n, alpha));
    if (n >= 2) {
        auto gamma = LabeledCochain::from_vector(ctx, n - 1, std::vector<Scalar>(v.begin() + static_cast<std::ptrdiff_t>(da), v.end()));
        if (!gamma.is_zero()) g += delta_op_unchecked(F, gamma);
    }
    auto gv = g.to_vector();
    out.insert(out.end(), gv.begin(), gv.end());
    return out;
}

} // namespace

std::size_t mrba_dimension(const Context& ctx, std::size_t n) {
    if (n == 0) return 0;
    return alpha_dim(ctx, n) + (n >= 2 ? LabeledCochain::dimension(ctx, n - 1) : 0);
}

SparseMatrix mrba_embedding(const Context& ctx, std::size_t n) {
    if (!is_adjoint(ctx)) throw Error(ErrorKind::NotAdjoint, "the embedding needs M = A with the adjoint actions");
    std::size_t da = alpha_dim(ctx, n), dg = mrba_dimension(ctx, n) - da;
    std::vector<SparseVector> cols;
    for (std::size_t j = 0; j < da; ++j) {
        SparseVector c;
        for (std::size_t copy = 0; copy <= n; ++copy) c.entries.emplace_back(copy * da + j, Scalar(1));
        cols.push_back(std::move(c));
    }
    for (std::size_t j = 0; j < dg; ++j) cols.push_back(SparseVector::unit((n + 1) * da + j));
    return SparseMatrix::from_columns(MixedCochain::dimension(ctx, n), std::move(cols));
}

MrbaSubcomplex mrba_subcomplex(const OperatorFamily& F, std::size_t max_degree) {
    auto ctx = F.context();
    if (!is_adjoint(*ctx)) throw Error(ErrorKind::NotAdjoint, "matching RBA cochains need M = A with the adjoint actions");
    require_mc(F);
    auto dim = [ctx](std::size_t n) { return mrba_dimension(*ctx, n); };
    auto d = [F, dim](std::size_t n) {
        return matrix_of(dim(n), dim(n + 1), [&](const std::vector<Scalar>& v) { return mrba_delta(F, n, v); });
    };
    MrbaSubcomplex out{CochainComplex("mrba", 1, dim, d, max_degree), CertificateReport{"mrba-embedding"}};

    auto big = mrrba_complex(F, max_degree);
    for (std::size_t n = 1; n <= max_degree; ++n) {
        auto E = mrba_embedding(*ctx, n);
        auto E1 = mrba_embedding(*ctx, n + 1);
        auto lhs = big.differential(n) * E;
        auto rhs = E1 * out.complex.differential(n);
        std::size_t da = alpha_dim(*ctx, n + 1);
        for (std::size_t j = 0; j < lhs.cols(); ++j) {
            ++out.embedding.checked;
            // containment: every beta block equals the alpha block
            auto col = lhs.column(j).to_dense(lhs.rows());
            bool inside = true;
            for (std::size_t copy = 1; copy <= n + 1 && inside; ++copy)
                for (std::size_t k = 0; k < da && inside; ++k) inside = col[copy * da + k] == col[k];
            if (!inside) out.embedding.failures.push_back(Failure{"containment", {}, {n, j}, {}, {}, {}});
            if (!(lhs.column(j) == rhs.column(j)))
                out.embedding.failures.push_back(Failure{"chain-map", {}, {n, j}, {}, lhs.column(j).to_dense(lhs.rows()),
                                                         rhs.column(j).to_dense(rhs.rows())});
        }
    }
    return out;
}

namespace {

std::vector<SparseVector> independent(std::size_t dim, const std::vector<SparseVector>& vs) {
    EchelonBasis e(dim);
    std::vector<SparseVector> kept;
    for (const auto& v : vs)
        if (e.insert(v)) kept.push_back(v);
    return kept;
}

std::size_t span_dim(std::size_t dim, const std::vector<SparseVector>& a, const std::vector<SparseVector>& b) {
    EchelonBasis e(dim);
    for (const auto& v : a) e.insert(v);
    for (const auto& v : b) e.insert(v);
    return e.rank();
}

// dim { z in span(zs) : g z in span(target) }, zs and target independent.
std::size_t preimage_dim(const std::vector<SparseVector>& images, const std::vector<SparseVector>& target, std::size_t rows) {
    std::vector<SparseVector> cols = images;
    cols.insert(cols.end(), target.begin(), target.end());
    return kernel_dim(SparseMatrix::from_columns(rows, cols));
}

std::vector<SparseVector> apply_all(const SparseMatrix& m, const std::vector<SparseVector>& vs) {
    std::vector<SparseVector> out;
    for (const auto& v : vs) out.push_back(m.apply(v));
    return out;
}

struct Level {
    std::vector<SparseVector> cocycles, coboundaries;
    std::size_t dim = 0;
};

Level level(const CochainComplex& c, std::size_t n) {
    Level l;
    l.dim = c.dim(n);
    l.cocycles = kernel_basis(c.differential(n));
    if (n > 0) l.coboundaries = independent(l.dim, c.differential(n - 1).columns());
    return l;
}

SparseMatrix block_matrix(std::size_t rows, std::size_t cols, std::size_t row_offset, std::size_t col_offset, std::size_t count) {
    std::vector<SparseVector> c(cols);
    for (std::size_t k = 0; k < count; ++k) c[col_offset + k] = SparseVector::unit(row_offset + k);
    return SparseMatrix::from_columns(rows, std::move(c));
}

Failure node_failure(const std::string& identity, std::size_t n) { return Failure{identity, {}, {n}, {}, {}, {}}; }

} // namespace

LongExactSequence long_exact_sequence(const OperatorFamily& F, std::size_t max_degree, unsigned seed) {
    auto ctx = F.context();
    auto mid = mrba_subcomplex(F, max_degree).complex;
    auto ops = op_complex(F, 1, max_degree);
    auto quot = hochschild_complex(ctx->algebra, adjoint_bimodule(ctx->algebra), 1, max_degree);
    // the operator part sits in degree n + 1 of the middle complex
    CochainComplex sub(
        "operator-shifted", 2, [ops](std::size_t n) { return ops.dim(n - 1); },
        [ops](std::size_t n) { return ops.differential(n - 1); }, max_degree);

    LongExactSequence les;
    auto& rep = les.report;
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> coeff(-3, 3);

    std::size_t top = max_degree + 1;
    std::vector<SparseMatrix> inc(top + 1), proj(top + 1);
    for (std::size_t n = 1; n <= top; ++n) {
        std::size_t ds = sub.dim(n), dm = mid.dim(n), dq = quot.dim(n);
        inc[n] = block_matrix(dm, ds, dq, 0, ds);
        std::vector<SparseVector> pc(dm);
        for (std::size_t k = 0; k < dq; ++k) pc[k] = SparseVector::unit(k);
        proj[n] = SparseMatrix::from_columns(dq, std::move(pc));

        ++rep.checked;
        bool exact = (proj[n] * inc[n]).is_zero() && rank(inc[n]) == ds && rank(proj[n]) == dq && dm == ds + dq;
        if (!exact) rep.failures.push_back(node_failure("short-exact", n));
    }
    for (std::size_t n = 1; n <= max_degree; ++n) {
        ++rep.checked;
        bool chain = (mid.differential(n) * inc[n]).columns() == (inc[n + 1] * sub.differential(n)).columns() &&
                     (quot.differential(n) * proj[n]).columns() == (proj[n + 1] * mid.differential(n)).columns();
        if (!chain) rep.failures.push_back(node_failure("chain-maps", n));
    }

    std::vector<Level> ls(top + 1), lm(top + 1), lq(top + 1);
    for (std::size_t n = 1; n <= max_degree; ++n) {
        ls[n] = level(sub, n);
        lm[n] = level(mid, n);
        lq[n] = level(quot, n);
    }
    ls[top].dim = sub.dim(top);
    ls[top].coboundaries = independent(ls[top].dim, sub.differential(top - 1).columns());

    // lift z to the middle complex, apply d, pull back along the inclusion
    auto connect = [&](std::size_t n, const SparseVector& z, bool perturb) -> std::optional<SparseVector> {
        auto lift = solve(proj[n], z);
        if (!lift) return std::nullopt;
        if (perturb && sub.dim(n) > 0) {
            std::vector<Scalar> r(sub.dim(n));
            for (auto& x : r) x = coeff(rng);
            lift->axpy(1, inc[n].apply(SparseVector::from_dense(r)));
        }
        return solve(inc[n + 1], mid.differential(n).apply(*lift));
    };

    for (std::size_t n = 1; n <= max_degree; ++n) {
        EchelonBasis bd = span(ls[n + 1].dim, ls[n + 1].coboundaries);
        for (const auto& z : lq[n].cocycles) {
            auto a = connect(n, z, false);
            auto b = connect(n, z, true);
            ++rep.checked;
            if (!a || !b) {
                rep.failures.push_back(node_failure("snake-lift", n));
                continue;
            }
            SparseVector diff = *a;
            diff.axpy(-1, *b);
            if (!bd.contains(diff)) rep.failures.push_back(node_failure("lift-independence", n));
        }
    }

    auto image_of_connect = [&](std::size_t n) {
        std::vector<SparseVector> out;
        for (const auto& z : lq[n].cocycles)
            if (auto y = connect(n, z, false)) out.push_back(*y);
        return out;
    };

    for (std::size_t n = 1; n <= max_degree; ++n) {
        // at H^n of the operator part: ker i* = im connect
        {
            LesNode node{"operator", n, ls[n].cocycles.size() - ls[n].coboundaries.size(), 0, 0, true};
            auto im = n >= 2 ? image_of_connect(n - 1) : std::vector<SparseVector>{};
            std::size_t bdim = ls[n].coboundaries.size();
            node.dim_image_in = span_dim(ls[n].dim, ls[n].coboundaries, im) - bdim;
            node.dim_kernel_out =
                preimage_dim(apply_all(inc[n], ls[n].cocycles), lm[n].coboundaries, mid.dim(n)) - bdim;
            EchelonBasis bm = span(mid.dim(n), lm[n].coboundaries);
            bool contained = true;
            for (const auto& y : im) contained = contained && bm.contains(inc[n].apply(y));
            node.exact = contained && node.dim_image_in == node.dim_kernel_out;
            les.nodes.push_back(node);
        }
        // at H^n of the mRBA complex: ker p* = im i*
        {
            LesNode node{"mrba", n, lm[n].cocycles.size() - lm[n].coboundaries.size(), 0, 0, true};
            std::size_t bdim = lm[n].coboundaries.size();
            node.dim_image_in = span_dim(mid.dim(n), lm[n].coboundaries, apply_all(inc[n], ls[n].cocycles)) - bdim;
            node.dim_kernel_out =
                preimage_dim(apply_all(proj[n], lm[n].cocycles), lq[n].coboundaries, quot.dim(n)) - bdim;
            node.exact = node.dim_image_in == node.dim_kernel_out;
            les.nodes.push_back(node);
        }
        // at H^n of the Hochschild complex: ker connect = im p*
        {
            LesNode node{"hochschild", n, lq[n].cocycles.size() - lq[n].coboundaries.size(), 0, 0, true};
            std::size_t bdim = lq[n].coboundaries.size();
            auto im = apply_all(proj[n], lm[n].cocycles);
            node.dim_image_in = span_dim(quot.dim(n), lq[n].coboundaries, im) - bdim;
            node.dim_kernel_out = preimage_dim(image_of_connect(n), ls[n + 1].coboundaries, ls[n + 1].dim) - bdim;
            EchelonBasis bs = span(ls[n + 1].dim, ls[n + 1].coboundaries);
            bool contained = true;
            for (const auto& v : im) {
                auto y = connect(n, v, false);
                contained = contained && y && bs.contains(*y);
            }
            node.exact = contained && node.dim_image_in == node.dim_kernel_out;
            les.nodes.push_back(node);
        }
    }
    for (const auto& node : les.nodes) {
        ++rep.checked;
        if (!node.exact) rep.failures.push_back(node_failure("exact-at-" + node.complex, node.degree));
    }

    for (std::size_t n = 1; n <= max_degree; ++n) {
        long s = n % 2 ? -1 : 1;
        les.euler_op += s * static_cast<long>(sub.dim(n));
        les.euler_mrba += s * static_cast<long>(mid.dim(n));
        les.euler_hochschild += s * static_cast<long>(quot.dim(n));
    }
    ++rep.checked;
    if (les.euler_mrba != les.euler_op + les.euler_hochschild) rep.failures.push_back(node_failure("euler-characteristic", max_degree));
    return les;
}

} // namespace mrb
