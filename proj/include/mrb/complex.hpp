#pragma once

#include "mrb/cochain.hpp"
#include "mrb/linalg.hpp"

#include <functional>
#include <memory>

namespace mrb {

using VectorMap = std::function<std::vector<Scalar>(const std::vector<Scalar>&)>;

// Matrix of a linear map given as a function on coordinate vectors, built column by column.
SparseMatrix matrix_of(std::size_t in_dim, std::size_t out_dim, const VectorMap& op);

struct CohomologyReport {
    std::string complex;
    std::size_t degree = 0;
    std::size_t dim_cochain = 0;
    std::size_t dim_kernel = 0;
    std::size_t dim_image_prev = 0;
    std::size_t dim_cohomology = 0;
    bool delta_squared_zero = true;

    friend bool operator==(const CohomologyReport&, const CohomologyReport&) = default;
};

// Cochain complex starting in min_degree, with differentials materialized on
// demand and cached. Copies share the cache.
class CochainComplex {
  public:
    using Dimension = std::function<std::size_t(std::size_t)>;
    using Differential = std::function<SparseMatrix(std::size_t)>;

    static constexpr std::size_t default_max_degree = 3;

    CochainComplex(std::string name, std::size_t min_degree, Dimension dim, Differential d,
                   std::size_t max_degree = default_max_degree);

    const std::string& name() const noexcept { return name_; }
    std::size_t min_degree() const noexcept { return min_; }
    std::size_t max_degree() const noexcept { return max_; }

    // 0 below min_degree.
    std::size_t dim(std::size_t n) const;
    // d_n : C^n -> C^{n+1}; throws DegreeOutOfRange above max_degree.
    const SparseMatrix& differential(std::size_t n) const;
    bool squares_to_zero(std::size_t n) const;

    CohomologyReport report(std::size_t n) const;
    std::size_t cohomology(std::size_t n) const { return report(n).dim_cohomology; }

  private:
    struct Cache;
    std::string name_;
    std::size_t min_, max_;
    Dimension dim_;
    Differential d_;
    std::shared_ptr<Cache> cache_;
};

// Hom(A^{(x)n}, M), n >= min_degree.
CochainComplex hochschild_complex(const Algebra& A, const Bimodule& M, std::size_t min_degree = 0,
                                  std::size_t max_degree = CochainComplex::default_max_degree);
// g^n with delta_op; throws NotMaurerCartan.
CochainComplex op_complex(const OperatorFamily& F, std::size_t min_degree = 0,
                          std::size_t max_degree = CochainComplex::default_max_degree);
CochainComplex mrrba_complex(const OperatorFamily& F, std::size_t max_degree = CochainComplex::default_max_degree);

std::size_t cohomology_mrrba(const OperatorFamily& F, std::size_t n,
                             std::size_t max_degree = CochainComplex::default_max_degree);
std::size_t cohomology_op(const OperatorFamily& F, std::size_t n,
                          std::size_t max_degree = CochainComplex::default_max_degree);

// Hom(A^{(x)n}, A) (+) g^{n-1} over an adjoint context; alpha first, gamma after.
std::size_t mrba_dimension(const Context& ctx, std::size_t n);
// E(alpha, gamma) = (alpha, alpha, ..., alpha, gamma) as a matrix C^n_mRBA -> C^n_mrRBA.
SparseMatrix mrba_embedding(const Context& ctx, std::size_t n);

struct MrbaSubcomplex {
    CochainComplex complex;
    CertificateReport embedding;
};
// Throws NotAdjoint unless the bimodule is the adjoint one.
MrbaSubcomplex mrba_subcomplex(const OperatorFamily& F, std::size_t max_degree = CochainComplex::default_max_degree);

struct LesNode {
    std::string complex;
    std::size_t degree = 0;
    std::size_t dim_cohomology = 0;
    std::size_t dim_image_in = 0;    // image of the incoming map
    std::size_t dim_kernel_out = 0;  // kernel of the outgoing map
    bool exact = true;
};

struct LongExactSequence {
    std::vector<LesNode> nodes;  // operator part, mRBA, Hochschild, per degree
    CertificateReport report{"long-exact-sequence"};
    long euler_op = 0, euler_mrba = 0, euler_hochschild = 0;
};

// 0 -> g^{n-1} -> C^n_mRBA -> Hom(A^{(x)n}, A) -> 0 and its long sequence for degrees 1..max_degree.
LongExactSequence long_exact_sequence(const OperatorFamily& F, std::size_t max_degree = 2, unsigned seed = 7);

} // namespace mrb
