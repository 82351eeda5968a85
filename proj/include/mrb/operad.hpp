#pragma once

#include "mrb/cochain.hpp"
#include "mrb/complex.hpp"
#include "mrb/dendriform.hpp"

#include <functional>

namespace mrb {

// Element of the arity-k component of the matching operad on a d-dimensional space.
// Position r (0-based) carries one [d]*k + [d] tensor per label (k-1)-tuple: the
// label at position r is never stored, so the value cannot depend on it.
class OperadElement {
  public:
    OperadElement(std::size_t dim, LabelSet labels, std::size_t arity);
    OperadElement(std::size_t dim, LabelSet labels, std::size_t arity, std::vector<std::vector<DenseTensor>> components);
    static OperadElement unit(std::size_t dim, LabelSet labels);
    static OperadElement from_vector(std::size_t dim, LabelSet labels, std::size_t arity, const std::vector<Scalar>& v);
    // k * q^(k-1) * d^(k+1)
    static std::size_t dimension(std::size_t dim, std::size_t q, std::size_t arity);

    std::size_t arity() const noexcept { return arity_; }
    std::size_t dim() const noexcept { return dim_; }
    const LabelSet& labels() const noexcept { return labels_; }
    std::size_t tuple_count() const { return labels_.tuple_count(arity_ - 1); }

    const DenseTensor& component(std::size_t r, std::size_t code) const { return comps_.at(r).at(code); }
    DenseTensor& component(std::size_t r, std::size_t code) { return comps_.at(r).at(code); }
    const DenseTensor& component(std::size_t r, const LabelTuple& rest) const;
    // Value at position r for a full k-tuple; entry r of `full` is ignored.
    const DenseTensor& at(std::size_t r, const LabelTuple& full) const { return component(r, drop_at(full, r)); }
    const std::vector<std::vector<DenseTensor>>& components() const noexcept { return comps_; }

    std::vector<Scalar> to_vector() const;
    bool is_zero() const;

    OperadElement& operator+=(const OperadElement& rhs);
    OperadElement& operator-=(const OperadElement& rhs);
    OperadElement& operator*=(const Scalar& c);
    friend OperadElement operator+(OperadElement a, const OperadElement& b) { return a += b; }
    friend OperadElement operator-(OperadElement a, const OperadElement& b) { return a -= b; }
    friend OperadElement operator*(const Scalar& c, OperadElement a) { return a *= c; }
    friend bool operator==(const OperadElement&, const OperadElement&) = default;

  private:
    void require_compatible(const OperadElement& rhs) const;

    std::size_t dim_;
    LabelSet labels_;
    std::size_t arity_;
    std::vector<std::vector<DenseTensor>> comps_;
};

// f o_i g with i 1-based, as in the usual operad notation.
OperadElement partial_compose(const OperadElement& f, const OperadElement& g, std::size_t i);

using PartialComposition = std::function<OperadElement(const OperadElement&, const OperadElement&, std::size_t)>;

// Sequential, parallel and unit axioms over every triple of the given elements.
CertificateReport check_operad_axioms(const std::vector<OperadElement>& elements,
                                      const PartialComposition& compose = partial_compose);
// Same on seeded random elements of arity <= arity_bound.
CertificateReport check_operad_axioms(std::size_t dim, const LabelSet& labels, std::size_t arity_bound,
                                      unsigned seed = 11, const PartialComposition& compose = partial_compose);

OperadElement multiplication_from_mda(const MatchingDendriform& D);
// Inverse of multiplication_from_mda on arity-2 elements.
MatchingDendriform mda_from_multiplication(const OperadElement& pi, std::vector<std::string> basis = {});
// pi o_1 pi = pi o_2 pi, one identity per output position.
CertificateReport check_multiplication(const OperadElement& pi);

OperadElement brace_bracket(const OperadElement& f, const OperadElement& g);

// (-1)^(n+1) {{pi, f}}. Throws MdaFails.
OperadElement delta_mda(const MatchingDendriform& D, const OperadElement& f);
OperadElement delta_mda_unchecked(const OperadElement& pi, const OperadElement& f);

// Arity n in degree n, from degree 1.
CochainComplex mda_complex(const MatchingDendriform& D, std::size_t max_degree = CochainComplex::default_max_degree);
std::size_t cohomology_mda(const MatchingDendriform& D, std::size_t n,
                           std::size_t max_degree = CochainComplex::default_max_degree);

// g^n -> arity n + 1 over the module, n >= 1.
OperadElement theta(const OperatorFamily& F, const LabeledCochain& f);
// (alpha, beta, gamma) -> theta(gamma), degree >= 2.
OperadElement mrrba_to_mda_chain_map(const OperatorFamily& F, const MixedCochain& c);

struct ChainMapDefect {
    std::size_t degree = 0;
    std::size_t rank_defect = 0;    // rank of (map o delta - delta o map) on C^n
    std::size_t rank_on_gamma = 0;  // same, restricted to alpha = beta = 0
};
struct ChainMapReport {
    CertificateReport report{"mrrba-to-mda"};
    std::vector<ChainMapDefect> defects;
};
// Compares the image of delta c with delta_mda of the image of c on every basis
// cochain of degrees 1..max_degree (the image of degree 1 is zero).
ChainMapReport check_mrrba_to_mda(const OperatorFamily& F, std::size_t max_degree = 2);

// Hochschild n-cochain of the semidirect algebra (D (x) K[X]) (+) D. Throws MdaFails.
DenseTensor hochschild_comparison(const MatchingDendriform& D, const OperadElement& f);
DenseTensor hochschild_comparison_unchecked(const MatchingDendriform& D, const OperadElement& f);

} // namespace mrb
