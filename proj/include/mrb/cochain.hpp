#pragma once

#include "mrb/operators.hpp"

#include <optional>

namespace mrb {

// An element of g^n: one map M^{(x)n} -> A per label n-tuple. Components are
// indexed by LabelSet::encode and have shape [m, ..., m, a]; degree 0 holds a
// single element of A with shape [a].
class LabeledCochain {
  public:
    LabeledCochain(ContextPtr ctx, std::size_t degree);
    LabeledCochain(ContextPtr ctx, std::size_t degree, std::vector<DenseTensor> components);
    static LabeledCochain from_family(const OperatorFamily& F);
    static LabeledCochain from_vector(ContextPtr ctx, std::size_t degree, const std::vector<Scalar>& v);
    static std::size_t dimension(const Context& ctx, std::size_t degree);

    const ContextPtr& context() const noexcept { return ctx_; }
    std::size_t degree() const noexcept { return degree_; }
    std::size_t size() const noexcept { return components_.size(); }
    const std::vector<DenseTensor>& components() const noexcept { return components_; }
    const DenseTensor& component(std::size_t code) const { return components_.at(code); }
    DenseTensor& component(std::size_t code) { return components_.at(code); }
    const DenseTensor& component(const LabelTuple& t) const { return components_.at(ctx_->labels.encode(t)); }

    std::vector<Scalar> to_vector() const;
    bool is_zero() const;

    LabeledCochain& operator+=(const LabeledCochain& rhs);
    LabeledCochain& operator-=(const LabeledCochain& rhs);
    LabeledCochain& operator*=(const Scalar& c);
    friend LabeledCochain operator+(LabeledCochain a, const LabeledCochain& b) { return a += b; }
    friend LabeledCochain operator-(LabeledCochain a, const LabeledCochain& b) { return a -= b; }
    friend LabeledCochain operator*(const Scalar& c, LabeledCochain a) { return a *= c; }
    friend bool operator==(const LabeledCochain& a, const LabeledCochain& b);

  private:
    ContextPtr ctx_;
    std::size_t degree_;
    std::vector<DenseTensor> components_;
};

// Shape [m]*n + [a], or [a] when n = 0.
Shape cochain_shape(const Context& ctx, std::size_t degree);

LabeledCochain diamond(const LabeledCochain& P, const LabeledCochain& Q);
LabeledCochain bracket(const LabeledCochain& P, const LabeledCochain& Q);

CertificateReport check_mc(const OperatorFamily& F);
// d_P(P') + 1/2 [P', P'] = 0, compared against check_mrrba of the summed family.
CertificateReport check_mc_twist(const OperatorFamily& F, const OperatorFamily& Fp);

// (-1)^n [P, f]. Throws NotMaurerCartan unless F passes check_mc.
LabeledCochain delta_op(const OperatorFamily& F, const LabeledCochain& f);
// Same, without the Maurer-Cartan check.
LabeledCochain delta_op_unchecked(const OperatorFamily& F, const LabeledCochain& f);

// Standard coboundary of f: A^{(x)n} -> M, shape [a]*n + [m].
DenseTensor hochschild_delta(const Algebra& A, const Bimodule& M, const DenseTensor& f);

// Shape of the summand of Hom(A^{n-1,1}, M) whose M input sits at `position`.
Shape mixed_shape(std::size_t a, std::size_t m, std::size_t n, std::size_t position);

// delta^alpha on the M-valued part: beta has n tensors, the result n + 1.
std::vector<DenseTensor> hochschild_delta_alpha(const Algebra& A, const Bimodule& M, const DenseTensor& alpha,
                                                const std::vector<DenseTensor>& beta);

// Mixed cochain (alpha, beta_1..beta_n, gamma) of degree n >= 1; gamma is absent at n = 1.
struct MixedCochain {
    std::size_t degree;
    DenseTensor alpha;
    std::vector<DenseTensor> beta;
    std::optional<LabeledCochain> gamma;

    static MixedCochain zero(const ContextPtr& ctx, std::size_t degree);
    static MixedCochain from_vector(const ContextPtr& ctx, std::size_t degree, const std::vector<Scalar>& v);
    static std::size_t dimension(const Context& ctx, std::size_t degree);
    std::vector<Scalar> to_vector() const;
    bool is_zero() const;

    friend bool operator==(const MixedCochain&, const MixedCochain&) = default;
};

LabeledCochain h_map(const OperatorFamily& F, const DenseTensor& alpha, const std::vector<DenseTensor>& beta);

MixedCochain delta_mrrba(const OperatorFamily& F, const MixedCochain& c);
MixedCochain delta_mrrba_unchecked(const OperatorFamily& F, const MixedCochain& c);

// Throws NotMaurerCartan with the first failure in the message.
void require_mc(const OperatorFamily& F);

} // namespace mrb
