#pragma once

#include "mrb/operad.hpp"

#include <map>

namespace mrb {

inline constexpr std::size_t default_arity_bound = 3;

// Finite direct sum of homogeneous pieces. The basis lists the pieces in the
// declared order, each piece contiguous.
class GradedSpace {
  public:
    GradedSpace() = default;
    GradedSpace(std::vector<int> degrees, std::vector<std::size_t> dims);
    static GradedSpace concentrated(std::size_t dim, int degree = 0);

    const std::vector<int>& degrees() const noexcept { return degrees_; }
    const std::vector<std::size_t>& dims() const noexcept { return dims_; }
    std::size_t dim() const noexcept { return basis_degrees_.size(); }
    bool has_degree(int degree) const;
    // Throw DegreeOutOfRange on undeclared degrees.
    std::size_t dim_of(int degree) const;
    std::size_t offset(int degree) const;
    int degree_of(std::size_t basis) const { return basis_degrees_.at(basis); }
    const std::vector<int>& basis_degrees() const noexcept { return basis_degrees_; }

    // Every piece multiplied by q; basis element a*q + x stands for a (x) x.
    GradedSpace with_labels(std::size_t q) const;

    friend bool operator==(const GradedSpace&, const GradedSpace&) = default;

  private:
    std::vector<int> degrees_;
    std::vector<std::size_t> dims_;
    std::vector<int> basis_degrees_;
};

// Multilinear map of fixed internal degree between graded spaces, held as one
// dense tensor on the total bases. Entries violating the degree rule are rejected.
class GradedMultiMap {
  public:
    using Block = std::map<std::vector<int>, DenseTensor>;

    GradedMultiMap(std::vector<GradedSpace> inputs, GradedSpace output, int degree);
    // Throws DegreeMismatch when an entry lands outside the forced output degree.
    GradedMultiMap(std::vector<GradedSpace> inputs, GradedSpace output, int degree, DenseTensor dense);
    // Keys are input-degree tuples; each value has shape [dims..., dim of the output degree].
    static GradedMultiMap from_blocks(std::vector<GradedSpace> inputs, GradedSpace output, int degree,
                                      const Block& blocks);

    std::size_t arity() const noexcept { return inputs_.size(); }
    int degree() const noexcept { return degree_; }
    const std::vector<GradedSpace>& inputs() const noexcept { return inputs_; }
    const GradedSpace& output() const noexcept { return output_; }
    const DenseTensor& dense() const noexcept { return dense_; }
    // Nonzero blocks only.
    Block blocks() const;
    bool is_zero() const { return dense_.is_zero(); }

    friend bool operator==(const GradedMultiMap&, const GradedMultiMap&) = default;

  private:
    std::vector<GradedSpace> inputs_;
    GradedSpace output_;
    int degree_;
    DenseTensor dense_;
};

// Operations mu_k, k = 1..size(), stored at index k-1; deg mu_k = k-2.
struct AInfinity {
    GradedSpace space;
    std::vector<GradedMultiMap> mu;

    AInfinity(GradedSpace space, std::vector<GradedMultiMap> mu);
    // Degree 0, mu_2 = the product, everything else zero.
    static AInfinity concentrated(const Algebra& A);
    const GradedMultiMap& op(std::size_t k) const { return mu.at(k - 1); }
    std::size_t max_arity() const noexcept { return mu.size(); }
};

// eta[k-1][j]: the arity-k action with the module argument in slot j (0-based).
struct AInfinityBimodule {
    GradedSpace space;
    std::vector<std::vector<GradedMultiMap>> eta;

    AInfinityBimodule(const GradedSpace& algebra, GradedSpace space, std::vector<std::vector<GradedMultiMap>> eta);
    // Degree 0, eta_2 = (right action, left action).
    static AInfinityBimodule concentrated(const Algebra& A, const Bimodule& M);
    const GradedMultiMap& op(std::size_t k, std::size_t slot) const { return eta.at(k - 1).at(slot); }
    std::size_t max_arity() const noexcept { return eta.size(); }
};

struct HomotopyMrrba {
    AInfinity algebra;
    AInfinityBimodule module;
    LabelSet labels;
    std::vector<LinearMap> maps;  // degree 0, M -> A

    HomotopyMrrba(AInfinity algebra, AInfinityBimodule module, LabelSet labels, std::vector<LinearMap> maps);
    static HomotopyMrrba concentrated(const OperatorFamily& F);
    std::size_t max_arity() const noexcept { return std::max(algebra.max_arity(), module.max_arity()); }
};

// pi[k-1] lives in arity k of the operad on the total space, deg k-2 componentwise.
struct HomotopyMda {
    GradedSpace space;
    LabelSet labels;
    std::vector<OperadElement> pi;

    HomotopyMda(GradedSpace space, LabelSet labels, std::vector<OperadElement> pi);
    // Degree 0 with pi_2 the multiplication of D.
    static HomotopyMda concentrated(const MatchingDendriform& D);
    std::size_t max_arity() const noexcept { return pi.size(); }
    GradedMultiMap component(std::size_t k, std::size_t r, std::size_t code) const;

    friend bool operator==(const HomotopyMda&, const HomotopyMda&) = default;
};

// Identities for n = 1..K. Operations above the stored arity count as zero.
CertificateReport check_a_infinity(const AInfinity& A, std::size_t K = default_arity_bound);
CertificateReport check_a_infinity_bimodule(const AInfinity& A, const AInfinityBimodule& M,
                                            std::size_t K = default_arity_bound);
CertificateReport check_homotopy_mda(const HomotopyMda& H, std::size_t K = default_arity_bound);
// The operator identity alone, k = 1..K.
CertificateReport check_homotopy_operators(const HomotopyMrrba& H, std::size_t K = default_arity_bound);
// A-infinity, bimodule and operator identities together.
CertificateReport check_homotopy_mrrba(const HomotopyMrrba& H, std::size_t K = default_arity_bound);

// Throw InputFails unless the input passes at the bound K.
HomotopyMda induce_homotopy_dendriform(const HomotopyMrrba& H, std::size_t K = default_arity_bound);
HomotopyMrrba homotopy_functor_g(const HomotopyMda& H, std::size_t K = default_arity_bound);

// K[s]/(s^2) with |s| = 1 and differential s -> 1.
AInfinity dual_numbers_dg();
// F (x) C and D (x) C for a dg algebra C (only mu_1, mu_2 used) and ungraded F, D.
HomotopyMrrba tensor_with(const OperatorFamily& F, const AInfinity& C);
HomotopyMda tensor_with(const MatchingDendriform& D, const AInfinity& C);

} // namespace mrb
