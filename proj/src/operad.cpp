#include "mrb/operad.hpp"

#include "mrb/error.hpp"

#include <random>

namespace mrb {

namespace {

Shape element_shape(std::size_t dim, std::size_t arity) { return Shape(arity + 1, dim); }

Scalar sign(std::size_t e) { return e % 2 ? Scalar(-1) : Scalar(1); }

LabelTuple slice(const LabelTuple& t, std::size_t from, std::size_t to) {
    return LabelTuple(t.begin() + static_cast<std::ptrdiff_t>(from), t.begin() + static_cast<std::ptrdiff_t>(to));
}

} // namespace

OperadElement::OperadElement(std::size_t dim, LabelSet labels, std::size_t arity)
    : dim_(dim), labels_(std::move(labels)), arity_(arity) {
    if (arity == 0) throw Error(ErrorKind::DegreeOutOfRange, "operad elements have arity >= 1");
    std::size_t count = labels_.tuple_count(arity - 1);
    comps_.assign(arity, std::vector<DenseTensor>(count, DenseTensor(element_shape(dim, arity))));
}

OperadElement::OperadElement(std::size_t dim, LabelSet labels, std::size_t arity,
                             std::vector<std::vector<DenseTensor>> components)
    : OperadElement(dim, std::move(labels), arity) {
    if (components.size() != arity_) throw Error(ErrorKind::ShapeMismatch, "one component list per position expected");
    for (std::size_t r = 0; r < arity_; ++r) {
        if (components[r].size() != comps_[r].size())
            throw Error(ErrorKind::ShapeMismatch, "wrong number of label tuples at position " + std::to_string(r + 1));
        for (auto& t : components[r])
            if (t.shape() != element_shape(dim_, arity_)) throw Error(ErrorKind::ShapeMismatch, "component shape");
    }
    comps_ = std::move(components);
}

OperadElement OperadElement::unit(std::size_t dim, LabelSet labels) {
    OperadElement e(dim, std::move(labels), 1);
    e.comps_[0][0] = identity_tensor(dim);
    return e;
}

std::size_t OperadElement::dimension(std::size_t dim, std::size_t q, std::size_t arity) {
    std::size_t n = arity;
    for (std::size_t i = 1; i < arity; ++i) n *= q;
    for (std::size_t i = 0; i <= arity; ++i) n *= dim;
    return n;
}

OperadElement OperadElement::from_vector(std::size_t dim, LabelSet labels, std::size_t arity,
                                         const std::vector<Scalar>& v) {
    OperadElement e(dim, std::move(labels), arity);
    if (v.size() != dimension(dim, e.labels_.size(), arity)) throw Error(ErrorKind::ShapeMismatch, "vector length");
    auto it = v.begin();
    for (auto& pos : e.comps_)
        for (auto& t : pos)
            for (auto& x : t.data()) x = *it++;
    return e;
}

const DenseTensor& OperadElement::component(std::size_t r, const LabelTuple& rest) const {
    return comps_.at(r).at(labels_.encode(rest));
}

std::vector<Scalar> OperadElement::to_vector() const {
    std::vector<Scalar> v;
    v.reserve(dimension(dim_, labels_.size(), arity_));
    for (const auto& pos : comps_)
        for (const auto& t : pos) v.insert(v.end(), t.data().begin(), t.data().end());
    return v;
}

bool OperadElement::is_zero() const {
    for (const auto& pos : comps_)
        for (const auto& t : pos)
            if (!t.is_zero()) return false;
    return true;
}

void OperadElement::require_compatible(const OperadElement& rhs) const {
    if (dim_ != rhs.dim_ || !(labels_ == rhs.labels_)) throw Error(ErrorKind::ContextMismatch, "operad elements over different spaces");
    if (arity_ != rhs.arity_) throw Error(ErrorKind::DegreeMismatch, "arities differ");
}

OperadElement& OperadElement::operator+=(const OperadElement& rhs) {
    require_compatible(rhs);
    for (std::size_t r = 0; r < arity_; ++r)
        for (std::size_t c = 0; c < comps_[r].size(); ++c) comps_[r][c] += rhs.comps_[r][c];
    return *this;
}

OperadElement& OperadElement::operator-=(const OperadElement& rhs) {
    require_compatible(rhs);
    for (std::size_t r = 0; r < arity_; ++r)
        for (std::size_t c = 0; c < comps_[r].size(); ++c) comps_[r][c] -= rhs.comps_[r][c];
    return *this;
}

OperadElement& OperadElement::operator*=(const Scalar& c) {
    for (auto& pos : comps_)
        for (auto& t : pos) t *= c;
    return *this;
}

OperadElement partial_compose(const OperadElement& f, const OperadElement& g, std::size_t i1) {
    std::size_t k = f.arity(), l = g.arity();
    if (i1 < 1 || i1 > k)
        throw Error(ErrorKind::PositionOutOfRange, "position " + std::to_string(i1) + " in arity " + std::to_string(k));
    if (f.dim() != g.dim() || !(f.labels() == g.labels()))
        throw Error(ErrorKind::ContextMismatch, "operad elements over different spaces");
    const auto& L = f.labels();
    std::size_t i = i1 - 1, K = k + l - 1;
    OperadElement out(f.dim(), L, K);

    // labels handed to f: prefix, the label in the slot of g, suffix
    auto outer = [&](const LabelTuple& t, std::size_t inner) {
        LabelTuple u = slice(t, 0, i);
        u.push_back(inner);
        auto tail = slice(t, i + l, K);
        u.insert(u.end(), tail.begin(), tail.end());
        return u;
    };
    for (std::size_t r = 0; r < K; ++r) {
        for (std::size_t code = 0; code < out.tuple_count(); ++code) {
            auto t = insert_at(L.decode(code, K - 1), r, 0);
            auto window = slice(t, i, i + l);
            auto& dst = out.component(r, code);
            if (r >= i && r < i + l) {
                const auto& fc = f.at(i, outer(t, 0));
                const auto& gc = g.at(r - i, window);
                if (!fc.is_zero() && !gc.is_zero()) dst = compose(fc, i, gc);
                continue;
            }
            std::size_t fr = r < i ? r : r - l + 1;
            for (std::size_t s = 0; s < l; ++s) {
                const auto& fc = f.at(fr, outer(t, window[s]));
                const auto& gc = g.at(s, window);
                if (fc.is_zero() || gc.is_zero()) continue;
                dst += compose(fc, i, gc);
            }
        }
    }
    return out;
}

namespace {

void compare_elements(CertificateReport& rep, const std::string& identity, const OperadElement& lhs,
                      const OperadElement& rhs) {
    const auto& L = lhs.labels();
    for (std::size_t r = 0; r < lhs.arity(); ++r)
        for (std::size_t code = 0; code < lhs.tuple_count(); ++code) {
            auto names = L.names_of(L.decode(code, lhs.arity() - 1));
            names.insert(names.begin(), "[" + std::to_string(r + 1) + "]");
            compare_maps(rep, identity, names, lhs.component(r, code), rhs.component(r, code));
        }
}

OperadElement random_element(std::mt19937_64& rng, std::size_t dim, const LabelSet& labels, std::size_t arity) {
    std::uniform_int_distribution<int> coeff(-2, 2);
    std::vector<Scalar> v(OperadElement::dimension(dim, labels.size(), arity));
    for (auto& x : v) x = Scalar(static_cast<long long>(coeff(rng)));
    return OperadElement::from_vector(dim, labels, arity, v);
}

std::string tag(std::initializer_list<std::size_t> xs) {
    std::string s;
    for (auto x : xs) s += (s.empty() ? "" : ",") + std::to_string(x);
    return s;
}

} // namespace

CertificateReport check_operad_axioms(const std::vector<OperadElement>& elements, const PartialComposition& compose) {
    CertificateReport rep("operad-axioms");
    if (elements.empty()) return rep;
    auto one = OperadElement::unit(elements[0].dim(), elements[0].labels());
    for (const auto& f : elements) {
        for (std::size_t i = 1; i <= f.arity(); ++i) compare_elements(rep, "right-unit(" + tag({i}) + ")", compose(f, one, i), f);
        compare_elements(rep, "left-unit", compose(one, f, 1), f);
    }
    for (const auto& f : elements)
        for (const auto& g : elements)
            for (const auto& h : elements) {
                std::size_t k = f.arity(), l = g.arity();
                for (std::size_t i = 1; i <= k; ++i)
                    for (std::size_t j = 1; j <= l; ++j)
                        compare_elements(rep, "sequential(" + tag({k, l, h.arity(), i, j}) + ")",
                                         compose(compose(f, g, i), h, i + j - 1), compose(f, compose(g, h, j), i));
                for (std::size_t i = 1; i <= k; ++i)
                    for (std::size_t j = i + 1; j <= k; ++j)
                        compare_elements(rep, "parallel(" + tag({k, l, h.arity(), i, j}) + ")",
                                         compose(compose(f, g, i), h, j + l - 1), compose(compose(f, h, j), g, i));
            }
    return rep;
}

CertificateReport check_operad_axioms(std::size_t dim, const LabelSet& labels, std::size_t arity_bound, unsigned seed,
                                      const PartialComposition& compose) {
    std::mt19937_64 rng(seed);
    std::vector<OperadElement> elements;
    for (std::size_t k = 1; k <= arity_bound; ++k) elements.push_back(random_element(rng, dim, labels, k));
    auto rep = check_operad_axioms(elements, compose);
    rep.notes.push_back("random elements of arity 1.." + std::to_string(arity_bound) + ", seed " + std::to_string(seed));
    return rep;
}

OperadElement multiplication_from_mda(const MatchingDendriform& D) {
    std::size_t q = D.labels.size();
    OperadElement pi(D.dim(), D.labels, 2);
    for (std::size_t x = 0; x < q; ++x) {
        pi.component(0, x) = D.prec[x];  // position 1 suppressed: a <_y b
        pi.component(1, x) = D.succ[x];  // position 2 suppressed: a >_x b
    }
    return pi;
}

MatchingDendriform mda_from_multiplication(const OperadElement& pi, std::vector<std::string> basis) {
    if (pi.arity() != 2) throw Error(ErrorKind::DegreeMismatch, "a multiplication has arity 2");
    if (basis.empty())
        for (std::size_t i = 0; i < pi.dim(); ++i) basis.push_back("e" + std::to_string(i));
    std::vector<DenseTensor> prec, succ;
    for (std::size_t x = 0; x < pi.labels().size(); ++x) {
        prec.push_back(pi.component(0, x));
        succ.push_back(pi.component(1, x));
    }
    return MatchingDendriform(std::move(basis), pi.labels(), std::move(prec), std::move(succ));
}

CertificateReport check_multiplication(const OperadElement& pi) {
    if (pi.arity() != 2) throw Error(ErrorKind::DegreeMismatch, "a multiplication has arity 2");
    CertificateReport rep("multiplication");
    auto lhs = partial_compose(pi, pi, 1), rhs = partial_compose(pi, pi, 2);
    const auto& L = pi.labels();
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t code = 0; code < lhs.tuple_count(); ++code)
            compare_maps(rep, "associativity-" + std::to_string(r + 1), L.names_of(L.decode(code, 2)),
                         lhs.component(r, code), rhs.component(r, code));
    return rep;
}

OperadElement brace_bracket(const OperadElement& f, const OperadElement& g) {
    std::size_t k = f.arity(), l = g.arity();
    OperadElement out(f.dim(), f.labels(), k + l - 1);
    if (f.is_zero() || g.is_zero()) return out;
    for (std::size_t i = 1; i <= k; ++i) out += sign((i - 1) * (l - 1)) * partial_compose(f, g, i);
    Scalar outer = sign((k - 1) * (l - 1));
    for (std::size_t i = 1; i <= l; ++i) out -= (outer * sign((i - 1) * (k - 1))) * partial_compose(g, f, i);
    return out;
}

OperadElement delta_mda_unchecked(const OperadElement& pi, const OperadElement& f) {
    return sign(f.arity() + 1) * brace_bracket(pi, f);
}

namespace {
void require_mda(const MatchingDendriform& D) {
    auto rep = check_mda(D);
    if (!rep.passed()) throw Error(ErrorKind::MdaFails, rep.summary());
}
} // namespace

OperadElement delta_mda(const MatchingDendriform& D, const OperadElement& f) {
    require_mda(D);
    if (f.dim() != D.dim() || !(f.labels() == D.labels))
        throw Error(ErrorKind::ContextMismatch, "element and dendriform over different spaces");
    return delta_mda_unchecked(multiplication_from_mda(D), f);
}

CochainComplex mda_complex(const MatchingDendriform& D, std::size_t max_degree) {
    require_mda(D);
    auto pi = multiplication_from_mda(D);
    std::size_t d = D.dim();
    auto L = D.labels;
    auto dim = [d, q = L.size()](std::size_t n) { return n == 0 ? 0 : OperadElement::dimension(d, q, n); };
    auto diff = [pi, d, L, dim](std::size_t n) {
        return matrix_of(dim(n), dim(n + 1), [&](const std::vector<Scalar>& v) {
            return delta_mda_unchecked(pi, OperadElement::from_vector(d, L, n, v)).to_vector();
        });
    };
    return CochainComplex("mda", 1, dim, diff, max_degree);
}

std::size_t cohomology_mda(const MatchingDendriform& D, std::size_t n, std::size_t max_degree) {
    if (n == 0 || n > max_degree)
        throw Error(ErrorKind::DegreeOutOfRange, "degree " + std::to_string(n) + " outside 1.." + std::to_string(max_degree));
    return mda_complex(D, max_degree).cohomology(n);
}

OperadElement theta(const OperatorFamily& F, const LabeledCochain& f) {
    require_same_context(F.context(), f.context());
    std::size_t n = f.degree();
    if (n == 0) throw Error(ErrorKind::DegreeOutOfRange, "theta is defined from degree 1");
    const auto& M = F.module();
    OperadElement out(M.dim(), F.labels(), n + 1);
    Scalar s = sign(n + 1);
    for (std::size_t code = 0; code < f.size(); ++code) {
        const auto& fc = f.component(code);
        if (fc.is_zero()) continue;
        out.component(0, code) = s * compose(M.right(), 1, fc);
        out.component(n, code) = compose(M.left(), 0, fc);
    }
    return out;
}

OperadElement mrrba_to_mda_chain_map(const OperatorFamily& F, const MixedCochain& c) {
    if (c.degree < 2 || !c.gamma) throw Error(ErrorKind::DegreeOutOfRange, "the map starts in degree 2");
    return theta(F, *c.gamma);
}

ChainMapReport check_mrrba_to_mda(const OperatorFamily& F, std::size_t max_degree) {
    require_mc(F);
    ChainMapReport out;
    auto ctx = F.context();
    auto pi = theta(F, LabeledCochain::from_family(F));
    std::size_t m = ctx->m();
    const auto& L = ctx->labels;

    // image in arity n of a degree-n mixed cochain; zero in degree 1
    auto image = [&](const MixedCochain& c) {
        if (c.degree < 2) return OperadElement(m, L, 1);
        return mrrba_to_mda_chain_map(F, c);
    };
    for (std::size_t n = 1; n <= max_degree; ++n) {
        std::size_t in = MixedCochain::dimension(*ctx, n);
        std::size_t out_dim = OperadElement::dimension(m, L.size(), n + 1);
        std::size_t gamma_dim = n >= 2 ? LabeledCochain::dimension(*ctx, n - 1) : 0;
        auto defect = [&](const std::vector<Scalar>& v) {
            auto c = MixedCochain::from_vector(ctx, n, v);
            auto lhs = image(delta_mrrba_unchecked(F, c));
            if (n >= 2) lhs -= delta_mda_unchecked(pi, image(c));
            return lhs.to_vector();
        };
        auto D = matrix_of(in, out_dim, defect);
        auto G = matrix_of(gamma_dim, out_dim, [&](const std::vector<Scalar>& g) {
            std::vector<Scalar> v(in - gamma_dim);
            v.insert(v.end(), g.begin(), g.end());
            return defect(v);
        });
        ChainMapDefect row{n, rank(D), rank(G)};
        out.defects.push_back(row);
        out.report.checked += in;
        if (row.rank_defect == 0) continue;
        for (std::size_t j = 0; j < in; ++j) {
            std::vector<Scalar> e(in);
            e[j] = 1;
            auto c = MixedCochain::from_vector(ctx, n, e);
            auto lhs = image(delta_mrrba_unchecked(F, c));
            auto rhs = n >= 2 ? delta_mda_unchecked(pi, image(c)) : OperadElement(m, L, n + 1);
            if (lhs == rhs) continue;
            out.report.failures.push_back(
                {"chain-map", {"degree " + std::to_string(n)}, {j}, {}, lhs.to_vector(), rhs.to_vector()});
            break;
        }
        out.report.notes.push_back("degree " + std::to_string(n) + ": defect rank " + std::to_string(row.rank_defect) +
                                   " on " + std::to_string(in) + " cochains, " + std::to_string(row.rank_on_gamma) +
                                   " from the operator part alone");
    }
    return out;
}

DenseTensor hochschild_comparison_unchecked(const MatchingDendriform& D, const OperadElement& f) {
    std::size_t d = D.dim(), q = D.labels.size(), n = f.arity(), s = d * q + d;
    if (f.dim() != d || !(f.labels() == D.labels))
        throw Error(ErrorKind::ContextMismatch, "element and dendriform over different spaces");
    DenseTensor out(Shape(n + 1, s));
    std::vector<std::size_t> idx(n, 0), a(n);
    LabelTuple x(n);
    std::size_t total = shape_size(Shape(n, s));
    for (std::size_t flat = 0; flat < total; ++flat) {
        std::size_t rem = flat, module_inputs = 0, pos = 0;
        for (std::size_t k = n; k-- > 0;) {
            idx[k] = rem % s;
            rem /= s;
        }
        std::size_t in = 0;
        for (std::size_t k = 0; k < n; ++k) {
            if (idx[k] < d * q) {
                a[k] = idx[k] / q;
                x[k] = idx[k] % q;
            } else {
                a[k] = idx[k] - d * q;
                x[k] = 0;
                ++module_inputs;
                pos = k;
            }
            in = in * d + a[k];
        }
        if (module_inputs > 1) continue;
        std::size_t base = flat * s;
        if (module_inputs == 1) {
            const auto& c = f.at(pos, x);
            for (std::size_t o = 0; o < d; ++o) out[base + d * q + o] = c[in * d + o];
            continue;
        }
        for (std::size_t r = 0; r < n; ++r) {
            const auto& c = f.at(r, x);
            for (std::size_t o = 0; o < d; ++o) out[base + o * q + x[r]] += c[in * d + o];
        }
    }
    return out;
}

DenseTensor hochschild_comparison(const MatchingDendriform& D, const OperadElement& f) {
    require_mda(D);
    return hochschild_comparison_unchecked(D, f);
}

} // namespace mrb
