#include "mrb/homotopy.hpp"

#include "mrb/error.hpp"

#include <algorithm>
#include <numeric>

namespace mrb {

namespace {

Scalar parity(long long k) { return k % 2 ? Scalar(-1) : Scalar(1); }

Shape shape_of(const std::vector<GradedSpace>& inputs, const GradedSpace& output) {
    Shape s;
    for (const auto& v : inputs) s.push_back(v.dim());
    s.push_back(output.dim());
    return s;
}

std::vector<std::string> graded_names(const GradedSpace& V, const std::string& stem) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < V.dim(); ++i) out.push_back(stem + std::to_string(i) + "^" + std::to_string(V.degree_of(i)));
    return out;
}

// Entry (b_1..b_n, o) scaled by (-1)^{i(l+1) + l(|b_1| + ... + |b_{i-1}|)}, i 1-based.
DenseTensor signed_term(DenseTensor t, const std::vector<const GradedSpace*>& axes, std::size_t i, std::size_t l) {
    std::size_t out = t.out_dim();
    if (out == 0) return t;
    for (std::size_t k = 0; k * out < t.size(); ++k) {
        auto idx = t.multi_index(k * out);
        long long deg = 0;
        for (std::size_t a = 0; a + 1 < i; ++a) deg += axes[a]->degree_of(idx[a]);
        Scalar s = parity(static_cast<long long>(i * (l + 1)) + static_cast<long long>(l) * deg);
        if (s == Scalar(1)) continue;
        for (std::size_t o = 0; o < out; ++o) t[k * out + o] = -t[k * out + o];
    }
    return t;
}

void require_map(const GradedMultiMap& f, const std::vector<GradedSpace>& inputs, const GradedSpace& output, int degree,
                 const std::string& what) {
    if (f.inputs() != inputs || !(f.output() == output))
        throw Error(ErrorKind::ShapeMismatch, what + " has the wrong source or target");
    if (f.degree() != degree)
        throw Error(ErrorKind::DegreeMismatch, what + " must have degree " + std::to_string(degree));
}

DenseTensor with_operators(DenseTensor t, const std::vector<LinearMap>& maps, const LabelTuple& x, std::size_t skip) {
    for (std::size_t j = 0; j < x.size(); ++j)
        if (j != skip) t = compose(t, j, maps[x[j]].as_tensor());
    return t;
}

} // namespace

GradedSpace::GradedSpace(std::vector<int> degrees, std::vector<std::size_t> dims)
    : degrees_(std::move(degrees)), dims_(std::move(dims)) {
    if (degrees_.size() != dims_.size()) throw Error(ErrorKind::ShapeMismatch, "one dimension per degree");
    auto sorted = degrees_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw Error(ErrorKind::DegreeMismatch, "degree declared twice");
    for (std::size_t p = 0; p < degrees_.size(); ++p) basis_degrees_.insert(basis_degrees_.end(), dims_[p], degrees_[p]);
}

GradedSpace GradedSpace::concentrated(std::size_t dim, int degree) { return GradedSpace({degree}, {dim}); }

bool GradedSpace::has_degree(int degree) const {
    return std::find(degrees_.begin(), degrees_.end(), degree) != degrees_.end();
}

std::size_t GradedSpace::dim_of(int degree) const {
    auto it = std::find(degrees_.begin(), degrees_.end(), degree);
    if (it == degrees_.end()) throw Error(ErrorKind::DegreeOutOfRange, "degree " + std::to_string(degree) + " is not declared");
    return dims_[it - degrees_.begin()];
}

std::size_t GradedSpace::offset(int degree) const {
    auto it = std::find(degrees_.begin(), degrees_.end(), degree);
    if (it == degrees_.end()) throw Error(ErrorKind::DegreeOutOfRange, "degree " + std::to_string(degree) + " is not declared");
    return std::accumulate(dims_.begin(), dims_.begin() + (it - degrees_.begin()), std::size_t{0});
}

GradedSpace GradedSpace::with_labels(std::size_t q) const {
    auto d = dims_;
    for (auto& x : d) x *= q;
    return GradedSpace(degrees_, std::move(d));
}

GradedMultiMap::GradedMultiMap(std::vector<GradedSpace> inputs, GradedSpace output, int degree)
    : inputs_(std::move(inputs)), output_(std::move(output)), degree_(degree), dense_(shape_of(inputs_, output_)) {
    if (inputs_.empty()) throw Error(ErrorKind::DegreeOutOfRange, "graded maps have at least one input");
}

GradedMultiMap::GradedMultiMap(std::vector<GradedSpace> inputs, GradedSpace output, int degree, DenseTensor dense)
    : GradedMultiMap(std::move(inputs), std::move(output), degree) {
    if (dense.shape() != dense_.shape()) throw Error(ErrorKind::ShapeMismatch, "graded map tensor has the wrong shape");
    for (std::size_t f = 0; f < dense.size(); ++f) {
        if (dense[f].is_zero()) continue;
        auto idx = dense.multi_index(f);
        long long deg = degree_;
        for (std::size_t a = 0; a < inputs_.size(); ++a) deg += inputs_[a].degree_of(idx[a]);
        if (deg != output_.degree_of(idx.back()))
            throw Error(ErrorKind::DegreeMismatch, "entry lands in degree " + std::to_string(output_.degree_of(idx.back())) +
                                                       " instead of " + std::to_string(deg));
    }
    dense_ = std::move(dense);
}

GradedMultiMap GradedMultiMap::from_blocks(std::vector<GradedSpace> inputs, GradedSpace output, int degree,
                                           const Block& blocks) {
    GradedMultiMap f(std::move(inputs), std::move(output), degree);
    for (const auto& [degs, block] : blocks) {
        if (degs.size() != f.arity()) throw Error(ErrorKind::ShapeMismatch, "block key has the wrong arity");
        Shape s;
        std::vector<std::size_t> base;
        int out = degree;
        for (std::size_t a = 0; a < degs.size(); ++a) {
            s.push_back(f.inputs_[a].dim_of(degs[a]));
            base.push_back(f.inputs_[a].offset(degs[a]));
            out += degs[a];
        }
        if (!f.output_.has_degree(out)) {
            if (block.is_zero()) continue;
            throw Error(ErrorKind::DegreeMismatch, "block lands in undeclared degree " + std::to_string(out));
        }
        s.push_back(f.output_.dim_of(out));
        base.push_back(f.output_.offset(out));
        if (block.shape() != s) throw Error(ErrorKind::ShapeMismatch, "block has the wrong shape");
        for (std::size_t e = 0; e < block.size(); ++e) {
            auto idx = block.multi_index(e);
            for (std::size_t a = 0; a < idx.size(); ++a) idx[a] += base[a];
            f.dense_[f.dense_.flat_index(idx)] = block[e];
        }
    }
    return f;
}

GradedMultiMap::Block GradedMultiMap::blocks() const {
    Block out;
    for (std::size_t e = 0; e < dense_.size(); ++e) {
        if (dense_[e].is_zero()) continue;
        auto idx = dense_.multi_index(e);
        std::vector<int> degs;
        Shape s;
        for (std::size_t a = 0; a < inputs_.size(); ++a) {
            degs.push_back(inputs_[a].degree_of(idx[a]));
            s.push_back(inputs_[a].dim_of(degs.back()));
        }
        int od = output_.degree_of(idx.back());
        s.push_back(output_.dim_of(od));
        auto it = out.try_emplace(degs, s).first;
        for (std::size_t a = 0; a < inputs_.size(); ++a) idx[a] -= inputs_[a].offset(degs[a]);
        idx.back() -= output_.offset(od);
        it->second[it->second.flat_index(idx)] = dense_[e];
    }
    return out;
}

AInfinity::AInfinity(GradedSpace space_, std::vector<GradedMultiMap> mu_) : space(std::move(space_)), mu(std::move(mu_)) {
    for (std::size_t k = 1; k <= mu.size(); ++k)
        require_map(mu[k - 1], std::vector<GradedSpace>(k, space), space, static_cast<int>(k) - 2,
                    "mu_" + std::to_string(k));
}

AInfinity AInfinity::concentrated(const Algebra& A) {
    auto V = GradedSpace::concentrated(A.dim());
    return AInfinity(V, {GradedMultiMap({V}, V, -1), GradedMultiMap({V, V}, V, 0, A.mult())});
}

AInfinityBimodule::AInfinityBimodule(const GradedSpace& algebra, GradedSpace space_,
                                     std::vector<std::vector<GradedMultiMap>> eta_)
    : space(std::move(space_)), eta(std::move(eta_)) {
    for (std::size_t k = 1; k <= eta.size(); ++k) {
        if (eta[k - 1].size() != k) throw Error(ErrorKind::ShapeMismatch, "need one action per module slot");
        for (std::size_t j = 0; j < k; ++j) {
            std::vector<GradedSpace> in(k, algebra);
            in[j] = space;
            require_map(eta[k - 1][j], in, space, static_cast<int>(k) - 2, "eta_" + std::to_string(k));
        }
    }
}

AInfinityBimodule AInfinityBimodule::concentrated(const Algebra& A, const Bimodule& M) {
    auto VA = GradedSpace::concentrated(A.dim()), VM = GradedSpace::concentrated(M.dim());
    return AInfinityBimodule(VA, VM,
                             {{GradedMultiMap({VM}, VM, -1)},
                              {GradedMultiMap({VM, VA}, VM, 0, M.right()), GradedMultiMap({VA, VM}, VM, 0, M.left())}});
}

HomotopyMrrba::HomotopyMrrba(AInfinity algebra_, AInfinityBimodule module_, LabelSet labels_, std::vector<LinearMap> maps_)
    : algebra(std::move(algebra_)), module(std::move(module_)), labels(std::move(labels_)), maps(std::move(maps_)) {
    if (maps.size() != labels.size()) throw Error(ErrorKind::ShapeMismatch, "need exactly one map per label");
    for (const auto& p : maps) {
        if (p.source_dim() != module.space.dim() || p.target_dim() != algebra.space.dim())
            throw Error(ErrorKind::ShapeMismatch, "operator must map M to A");
        for (std::size_t i = 0; i < p.target_dim(); ++i)
            for (std::size_t j = 0; j < p.source_dim(); ++j)
                if (!p.matrix(i, j).is_zero() && algebra.space.degree_of(i) != module.space.degree_of(j))
                    throw Error(ErrorKind::DegreeMismatch, "operators must preserve degree");
    }
}

HomotopyMrrba HomotopyMrrba::concentrated(const OperatorFamily& F) {
    return HomotopyMrrba(AInfinity::concentrated(F.algebra()), AInfinityBimodule::concentrated(F.algebra(), F.module()),
                         F.labels(), F.maps());
}

HomotopyMda::HomotopyMda(GradedSpace space_, LabelSet labels_, std::vector<OperadElement> pi_)
    : space(std::move(space_)), labels(std::move(labels_)), pi(std::move(pi_)) {
    for (std::size_t k = 1; k <= pi.size(); ++k) {
        const auto& p = pi[k - 1];
        if (p.arity() != k) throw Error(ErrorKind::DegreeMismatch, "pi_" + std::to_string(k) + " has the wrong arity");
        if (p.dim() != space.dim() || !(p.labels() == labels))
            throw Error(ErrorKind::ContextMismatch, "pi_" + std::to_string(k) + " lives on another space");
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t code = 0; code < p.tuple_count(); ++code) component(k, r, code);
    }
}

HomotopyMda HomotopyMda::concentrated(const MatchingDendriform& D) {
    return HomotopyMda(GradedSpace::concentrated(D.dim()), D.labels,
                       {OperadElement(D.dim(), D.labels, 1), multiplication_from_mda(D)});
}

GradedMultiMap HomotopyMda::component(std::size_t k, std::size_t r, std::size_t code) const {
    return GradedMultiMap(std::vector<GradedSpace>(k, space), space, static_cast<int>(k) - 2, pi.at(k - 1).component(r, code));
}

CertificateReport check_a_infinity(const AInfinity& A, std::size_t K) {
    CertificateReport rep("a-infinity");
    auto names = graded_names(A.space, "e");
    std::size_t N = A.space.dim(), top = std::min(K, A.max_arity());
    for (std::size_t n = 1; n <= K; ++n) {
        DenseTensor sum(Shape(n + 1, N));
        std::vector<const GradedSpace*> axes(n, &A.space);
        for (std::size_t k = 1; k <= std::min(n, top); ++k) {
            std::size_t l = n + 1 - k;
            if (l > top) continue;
            for (std::size_t i = 1; i <= k; ++i)
                sum += signed_term(compose(A.op(k).dense(), i - 1, A.op(l).dense()), axes, i, l);
        }
        compare_maps(rep, "stasheff[n=" + std::to_string(n) + "]", {}, sum, DenseTensor(sum.shape()),
                     std::vector<const std::vector<std::string>*>(n, &names));
    }
    return rep;
}

CertificateReport check_a_infinity_bimodule(const AInfinity& A, const AInfinityBimodule& M, std::size_t K) {
    CertificateReport rep("a-infinity-bimodule");
    auto an = graded_names(A.space, "e"), mn = graded_names(M.space, "m");
    std::size_t top_a = std::min(K, A.max_arity()), top_m = std::min(K, M.max_arity());
    for (std::size_t n = 1; n <= K; ++n)
        for (std::size_t p = 0; p < n; ++p) {
            std::vector<const GradedSpace*> axes(n, &A.space);
            std::vector<const std::vector<std::string>*> names(n, &an);
            axes[p] = &M.space;
            names[p] = &mn;
            Shape s;
            for (auto* v : axes) s.push_back(v->dim());
            s.push_back(M.space.dim());
            DenseTensor sum(s);
            for (std::size_t k = 1; k <= std::min(n, top_m); ++k) {
                std::size_t l = n + 1 - k;
                for (std::size_t i = 1; i <= k; ++i) {
                    bool inside = p + 1 >= i && p + 1 < i + l;
                    if (l > (inside ? top_m : top_a)) continue;
                    const auto& inner = inside ? M.op(l, p + 1 - i) : A.op(l);
                    std::size_t outer_slot = inside ? i - 1 : (p + 1 < i ? p : p + 1 - l);
                    sum += signed_term(compose(M.op(k, outer_slot).dense(), i - 1, inner.dense()), axes, i, l);
                }
            }
            compare_maps(rep, "stasheff[n=" + std::to_string(n) + ",slot=" + std::to_string(p + 1) + "]", {}, sum,
                         DenseTensor(sum.shape()), names);
        }
    return rep;
}

CertificateReport check_homotopy_mda(const HomotopyMda& H, std::size_t K) {
    CertificateReport rep("homotopy-mda");
    auto names = graded_names(H.space, "e");
    std::size_t d = H.space.dim(), top = std::min(K, H.max_arity());
    for (std::size_t n = 1; n <= K; ++n) {
        OperadElement sum(d, H.labels, n);
        std::vector<const GradedSpace*> axes(n, &H.space);
        for (std::size_t k = 1; k <= std::min(n, top); ++k) {
            std::size_t l = n + 1 - k;
            if (l > top) continue;
            for (std::size_t i = 1; i <= k; ++i) {
                auto term = partial_compose(H.pi[k - 1], H.pi[l - 1], i);
                for (std::size_t r = 0; r < n; ++r)
                    for (std::size_t code = 0; code < sum.tuple_count(); ++code)
                        sum.component(r, code) += signed_term(term.component(r, code), axes, i, l);
            }
        }
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t code = 0; code < sum.tuple_count(); ++code) {
                const auto& t = sum.component(r, code);
                compare_maps(rep, "mda-h[n=" + std::to_string(n) + ",r=" + std::to_string(r + 1) + "]",
                             H.labels.names_of(H.labels.decode(code, n - 1)), t, DenseTensor(t.shape()),
                             std::vector<const std::vector<std::string>*>(n, &names));
            }
    }
    return rep;
}

CertificateReport check_homotopy_operators(const HomotopyMrrba& H, std::size_t K) {
    CertificateReport rep("homotopy-matching");
    auto mn = graded_names(H.module.space, "m");
    const auto& L = H.labels;
    std::size_t a = H.algebra.space.dim(), m = H.module.space.dim();
    for (std::size_t k = 1; k <= K; ++k)
        for (std::size_t code = 0; code < L.tuple_count(k); ++code) {
            auto x = L.decode(code, k);
            Shape s(k, m);
            s.push_back(a);
            DenseTensor lhs(s), rhs(s);
            if (k <= H.algebra.max_arity()) lhs = with_operators(H.algebra.op(k).dense(), H.maps, x, k);
            if (k <= H.module.max_arity())
                for (std::size_t r = 0; r < k; ++r)
                    rhs += compose(H.maps[x[r]].as_tensor(), 0, with_operators(H.module.op(k, r).dense(), H.maps, x, r));
            compare_maps(rep, "matching[k=" + std::to_string(k) + "]", L.names_of(x), lhs, rhs,
                         std::vector<const std::vector<std::string>*>(k, &mn));
        }
    return rep;
}

CertificateReport check_homotopy_mrrba(const HomotopyMrrba& H, std::size_t K) {
    CertificateReport rep("homotopy-mrrba");
    rep.merge(check_a_infinity(H.algebra, K), "a-infinity");
    rep.merge(check_a_infinity_bimodule(H.algebra, H.module, K), "bimodule");
    rep.merge(check_homotopy_operators(H, K));
    return rep;
}

HomotopyMda induce_homotopy_dendriform(const HomotopyMrrba& H, std::size_t K) {
    auto rep = check_homotopy_mrrba(H, K);
    if (!rep.passed()) throw Error(ErrorKind::InputFails, rep.summary());
    std::size_t m = H.module.space.dim();
    std::vector<OperadElement> pi;
    for (std::size_t k = 1; k <= H.module.max_arity(); ++k) {
        OperadElement p(m, H.labels, k);
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t code = 0; code < p.tuple_count(); ++code) {
                auto x = insert_at(H.labels.decode(code, k - 1), r, 0);
                p.component(r, code) = with_operators(H.module.op(k, r).dense(), H.maps, x, r);
            }
        pi.push_back(std::move(p));
    }
    return HomotopyMda(H.module.space, H.labels, std::move(pi));
}

HomotopyMrrba homotopy_functor_g(const HomotopyMda& H, std::size_t K) {
    auto rep = check_homotopy_mda(H, K);
    if (!rep.passed()) throw Error(ErrorKind::InputFails, rep.summary());
    std::size_t d = H.space.dim(), q = H.labels.size();
    auto A = H.space.with_labels(q);
    std::vector<GradedMultiMap> mu;
    std::vector<std::vector<GradedMultiMap>> eta;
    for (std::size_t k = 1; k <= H.max_arity(); ++k) {
        const auto& p = H.pi[k - 1];
        DenseTensor mu_k(Shape(k + 1, d * q));
        std::vector<GradedMultiMap> eta_k;
        for (std::size_t r = 0; r < k; ++r) {
            Shape s(k + 1, d * q);
            s[r] = d;
            s.back() = d;
            DenseTensor act(s);
            for (std::size_t code = 0; code < p.tuple_count(); ++code) {
                auto rest = H.labels.decode(code, k - 1);
                const auto& t = p.component(r, code);
                for (std::size_t e = 0; e < t.size(); ++e) {
                    if (t[e].is_zero()) continue;
                    auto idx = t.multi_index(e);
                    auto act_idx = idx;
                    for (std::size_t j = 0, s2 = 0; j < k; ++j) {
                        if (j == r) continue;
                        act_idx[j] = idx[j] * q + rest[s2++];
                    }
                    act[act.flat_index(act_idx)] = t[e];
                    // mu_k sums over the free label x_r as well
                    for (std::size_t xr = 0; xr < q; ++xr) {
                        auto mu_idx = act_idx;
                        mu_idx[r] = idx[r] * q + xr;
                        mu_idx.back() = idx.back() * q + xr;
                        mu_k[mu_k.flat_index(mu_idx)] += t[e];
                    }
                }
            }
            std::vector<GradedSpace> in(k, A);
            in[r] = H.space;
            eta_k.emplace_back(std::move(in), H.space, static_cast<int>(k) - 2, std::move(act));
        }
        mu.emplace_back(std::vector<GradedSpace>(k, A), A, static_cast<int>(k) - 2, std::move(mu_k));
        eta.push_back(std::move(eta_k));
    }
    std::vector<LinearMap> maps;
    for (std::size_t x = 0; x < q; ++x) {
        DenseMatrix mtx(d * q, d);
        for (std::size_t a = 0; a < d; ++a) mtx(a * q + x, a) = 1;
        maps.emplace_back(std::move(mtx));
    }
    return HomotopyMrrba(AInfinity(A, std::move(mu)), AInfinityBimodule(A, H.space, std::move(eta)), H.labels,
                         std::move(maps));
}

AInfinity dual_numbers_dg() {
    GradedSpace C({0, 1}, {1, 1});
    DenseTensor d(Shape{2, 2}), m(Shape{2, 2, 2});
    d.at({1, 0}) = 1;
    m.at({0, 0, 0}) = 1;
    m.at({0, 1, 1}) = 1;
    m.at({1, 0, 1}) = 1;
    return AInfinity(C, {GradedMultiMap({C}, C, -1, d), GradedMultiMap({C, C}, C, 0, m)});
}

namespace {

// Space V (x) C with basis c * dim V + v.
GradedSpace tensor_space(std::size_t dim, const GradedSpace& C) {
    auto dims = C.dims();
    for (auto& x : dims) x *= dim;
    return GradedSpace(C.degrees(), std::move(dims));
}

// Entry (v_1 (x) c_1, ..., v_k (x) c_k, v (x) c) = f(v_1..v_k, v) * g(c_1..c_k, c).
DenseTensor tensor_entries(const DenseTensor& f, const DenseTensor& g) {
    std::size_t k = f.rank();
    Shape s;
    for (std::size_t a = 0; a < k; ++a) s.push_back(f.shape()[a] * g.shape()[a]);
    DenseTensor out(s);
    for (std::size_t e = 0; e < f.size(); ++e) {
        if (f[e].is_zero()) continue;
        auto fi = f.multi_index(e);
        for (std::size_t h = 0; h < g.size(); ++h) {
            if (g[h].is_zero()) continue;
            auto gi = g.multi_index(h);
            std::vector<std::size_t> idx(k);
            for (std::size_t a = 0; a < k; ++a) idx[a] = gi[a] * f.shape()[a] + fi[a];
            out[out.flat_index(idx)] = f[e] * g[h];
        }
    }
    return out;
}

DenseTensor differential_of(const AInfinity& C) {
    return C.max_arity() >= 1 ? C.op(1).dense() : DenseTensor(Shape{C.space.dim(), C.space.dim()});
}

DenseTensor product_of(const AInfinity& C) {
    auto n = C.space.dim();
    return C.max_arity() >= 2 ? C.op(2).dense() : DenseTensor(Shape{n, n, n});
}

} // namespace

HomotopyMrrba tensor_with(const OperatorFamily& F, const AInfinity& C) {
    std::size_t a = F.algebra().dim(), m = F.module().dim();
    auto VA = tensor_space(a, C.space), VM = tensor_space(m, C.space);
    auto d = differential_of(C), prod = product_of(C);
    AInfinity alg(VA, {GradedMultiMap({VA}, VA, -1, tensor_entries(identity_tensor(a), d)),
                       GradedMultiMap({VA, VA}, VA, 0, tensor_entries(F.algebra().mult(), prod))});
    AInfinityBimodule mod(VA, VM,
                          {{GradedMultiMap({VM}, VM, -1, tensor_entries(identity_tensor(m), d))},
                           {GradedMultiMap({VM, VA}, VM, 0, tensor_entries(F.module().right(), prod)),
                            GradedMultiMap({VA, VM}, VM, 0, tensor_entries(F.module().left(), prod))}});
    std::vector<LinearMap> maps;
    auto id = identity_tensor(C.space.dim());
    for (std::size_t x = 0; x < F.labels().size(); ++x)
        maps.push_back(LinearMap::from_tensor(tensor_entries(F.tensor(x), id)));
    return HomotopyMrrba(std::move(alg), std::move(mod), F.labels(), std::move(maps));
}

HomotopyMda tensor_with(const MatchingDendriform& D, const AInfinity& C) {
    std::size_t d = D.dim();
    auto V = tensor_space(d, C.space);
    OperadElement pi1(V.dim(), D.labels, 1);
    pi1.component(0, 0) = tensor_entries(identity_tensor(d), differential_of(C));
    auto base = multiplication_from_mda(D);
    OperadElement pi2(V.dim(), D.labels, 2);
    auto prod = product_of(C);
    for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t code = 0; code < pi2.tuple_count(); ++code)
            pi2.component(r, code) = tensor_entries(base.component(r, code), prod);
    return HomotopyMda(V, D.labels, {std::move(pi1), std::move(pi2)});
}

} // namespace mrb
