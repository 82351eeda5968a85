#pragma once

#include "mrb/report.hpp"
#include "mrb/tensor.hpp"

#include <array>
#include <string>
#include <vector>

namespace mrb {

std::vector<std::string> default_names(const std::string& stem, std::size_t n);

// Tensor of the given shape from sparse (index..., value) entries.
DenseTensor sparse_tensor(Shape shape, const std::vector<std::pair<std::vector<std::size_t>, Scalar>>& entries);

// Finite-dimensional algebra by structure constants: e_i e_j = sum_k mult[i][j][k] e_k.
class Algebra {
  public:
    Algebra() = default;
    Algebra(std::vector<std::string> basis, DenseTensor mult);
    static Algebra zero(std::size_t dim);

    std::size_t dim() const noexcept { return basis_.size(); }
    const std::vector<std::string>& basis() const noexcept { return basis_; }
    const DenseTensor& mult() const noexcept { return mult_; }

    friend bool operator==(const Algebra&, const Algebra&) = default;

  private:
    std::vector<std::string> basis_;
    DenseTensor mult_;
};

// left: [a, m, m] for a.u, right: [m, a, m] for u.a.
class Bimodule {
  public:
    Bimodule() = default;
    Bimodule(std::size_t algebra_dim, std::vector<std::string> basis, DenseTensor left, DenseTensor right);
    static Bimodule zero(std::size_t algebra_dim, std::size_t dim);

    std::size_t algebra_dim() const noexcept { return adim_; }
    std::size_t dim() const noexcept { return basis_.size(); }
    const std::vector<std::string>& basis() const noexcept { return basis_; }
    const DenseTensor& left() const noexcept { return left_; }
    const DenseTensor& right() const noexcept { return right_; }

    friend bool operator==(const Bimodule&, const Bimodule&) = default;

  private:
    std::size_t adim_ = 0;
    std::vector<std::string> basis_;
    DenseTensor left_, right_;
};

CertificateReport check_algebra(const Algebra& A);
CertificateReport check_bimodule(const Algebra& A, const Bimodule& M);

Bimodule adjoint_bimodule(const Algebra& A);
Bimodule coadjoint_bimodule(const Algebra& A);
Algebra semidirect_product(const Algebra& A, const Bimodule& M);

// Failures at (i, j) where e_i e_j != e_j e_i.
CertificateReport check_commutative(const Algebra& A);

// Morphism of algebras and equivariance of a module map along it.
CertificateReport check_algebra_morphism(const LinearMap& phi, const Algebra& src, const Algebra& dst);
CertificateReport check_equivariant(const LinearMap& phi, const LinearMap& psi, const Algebra& src_alg,
                                    const Bimodule& src, const Algebra& dst_alg, const Bimodule& dst);

} // namespace mrb
