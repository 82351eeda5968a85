#pragma once

#include "mrb/operad.hpp"

#include <cstdint>
#include <optional>

namespace mrb {

inline constexpr std::size_t default_deformation_order = 2;

// Truncated series mu_t, l_t, r_t, (P_t)_x; index 0 of every list is the base structure.
class MrrbaDeformation {
  public:
    // P[x][i] is the t^i coefficient of (P_t)_x.
    MrrbaDeformation(OperatorFamily base, std::vector<DenseTensor> mu, std::vector<DenseTensor> l,
                     std::vector<DenseTensor> r, std::vector<std::vector<LinearMap>> P);
    static MrrbaDeformation constant(const OperatorFamily& base, std::size_t order = default_deformation_order);

    const OperatorFamily& base() const noexcept { return base_; }
    std::size_t order() const noexcept { return mu_.size() - 1; }
    const std::vector<DenseTensor>& mu() const noexcept { return mu_; }
    const std::vector<DenseTensor>& l() const noexcept { return l_; }
    const std::vector<DenseTensor>& r() const noexcept { return r_; }
    const std::vector<std::vector<LinearMap>>& P() const noexcept { return P_; }
    // Terms above the stored order read as zero.
    DenseTensor mu_at(std::size_t i) const;
    DenseTensor l_at(std::size_t i) const;
    DenseTensor r_at(std::size_t i) const;
    DenseTensor P_at(std::size_t x, std::size_t i) const;

    friend bool operator==(const MrrbaDeformation&, const MrrbaDeformation&) = default;

  private:
    OperatorFamily base_;
    std::vector<DenseTensor> mu_, l_, r_;
    std::vector<std::vector<LinearMap>> P_;
};

// Coefficient equations of t^n for n = 0..min(order, max_n): associativity,
// the three bimodule identities, and the matching operator identity.
CertificateReport check_mrrba_deformation(const MrrbaDeformation& d, std::size_t max_n = SIZE_MAX);

struct Infinitesimal {
    MixedCochain cochain;  // (mu_1, (r_1, l_1), P_1)
    CertificateReport cocycle{"infinitesimal-cocycle"};
};
// Throws DeformationInvalid unless the equations hold for n <= 1.
Infinitesimal extract_infinitesimal(const MrrbaDeformation& d);

// Order-1 deformation read off a degree-2 cocycle. Throws DegreeMismatch, NotCocycle.
MrrbaDeformation cocycle_to_deformation(const OperatorFamily& base, const MixedCochain& z);

// Series of linear maps with constant term id.
using MapSeries = std::vector<LinearMap>;
MapSeries inverse_series(const MapSeries& s, std::size_t order);

// Equations of a morphism (phi_t, psi_t) from d to d2, and at n = 1 the coboundary
// identity z(d) - z(d2) = delta(phi_1, psi_1). Throws DeformationInvalid unless
// phi_0 and psi_0 are identities.
CertificateReport check_equivalence(const MrrbaDeformation& d, const MrrbaDeformation& d2, const MapSeries& phi,
                                    const MapSeries& psi);

// The deformation d2 making (phi_t, psi_t) an isomorphism from d.
MrrbaDeformation transport(const MrrbaDeformation& d, const MapSeries& phi, const MapSeries& psi);

struct Equivalence {
    MapSeries phi, psi;
};
// For deformations passing at n <= 1: an order-1 equivalence from d to d2 when their
// infinitesimals are cohomologous, otherwise nothing.
std::optional<Equivalence> find_equivalence(const MrrbaDeformation& d, const MrrbaDeformation& d2);

// prec[x][i], succ[x][i]; index 0 is the base.
class MdaDeformation {
  public:
    MdaDeformation(MatchingDendriform base, std::vector<std::vector<DenseTensor>> prec,
                   std::vector<std::vector<DenseTensor>> succ);
    static MdaDeformation constant(const MatchingDendriform& base, std::size_t order = default_deformation_order);

    const MatchingDendriform& base() const noexcept { return base_; }
    std::size_t order() const noexcept { return prec_.front().size() - 1; }
    const std::vector<std::vector<DenseTensor>>& prec() const noexcept { return prec_; }
    const std::vector<std::vector<DenseTensor>>& succ() const noexcept { return succ_; }
    DenseTensor prec_at(std::size_t x, std::size_t i) const;
    DenseTensor succ_at(std::size_t x, std::size_t i) const;
    // The t^i coefficients as a dendriform on the same space (not a valid one in general).
    MatchingDendriform coefficient(std::size_t i) const;

    friend bool operator==(const MdaDeformation&, const MdaDeformation&) = default;

  private:
    MatchingDendriform base_;
    std::vector<std::vector<DenseTensor>> prec_, succ_;
};

CertificateReport check_mda_deformation(const MdaDeformation& d, std::size_t max_n = SIZE_MAX);

struct MdaInfinitesimal {
    OperadElement cochain;
    CertificateReport cocycle{"mda-infinitesimal-cocycle"};
};
MdaInfinitesimal extract_mda_infinitesimal(const MdaDeformation& d);

// pi_1 in arity 2 -> order-1 deformation. Throws NotCocycle.
MdaDeformation mda_cocycle_to_deformation(const MatchingDendriform& base, const OperadElement& pi1);

// psi in arity 1: every position-1 component equal to psi.
OperadElement lift_to_operad(const LinearMap& psi, const LabelSet& labels);

MdaDeformation transport(const MdaDeformation& d, const MapSeries& psi);
// Morphism equations and, at n = 1, pi_1 - pi_1' = delta(psi_1).
CertificateReport check_mda_equivalence(const MdaDeformation& d, const MdaDeformation& d2, const MapSeries& psi);

} // namespace mrb
