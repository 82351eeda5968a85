#pragma once

#include "mrb/operators.hpp"

namespace mrb {

// Per label x a pair of products a <_x b, a >_x b, each an [d, d, d] tensor.
struct MatchingDendriform {
    std::vector<std::string> basis;
    LabelSet labels;
    std::vector<DenseTensor> prec, succ;

    MatchingDendriform() = default;
    MatchingDendriform(std::vector<std::string> basis, LabelSet labels, std::vector<DenseTensor> prec,
                       std::vector<DenseTensor> succ);
    static MatchingDendriform zero(std::size_t dim, LabelSet labels);

    std::size_t dim() const noexcept { return basis.size(); }
    friend bool operator==(const MatchingDendriform&, const MatchingDendriform&) = default;
};

CertificateReport check_mda(const MatchingDendriform& D);
MatchingDendriform induce_dendriform(const OperatorFamily& F);
CertificateReport check_mda_morphism(const LinearMap& f, const MatchingDendriform& src, const MatchingDendriform& dst);

// Basis of D (x) K[X]: index i * |X| + x.
std::vector<std::string> labelled_basis(const MatchingDendriform& D);

// Ordinary (single-label) dendriform structure on D (x) K[X].
MatchingDendriform extend_to_labelled_dendriform(const MatchingDendriform& D);

// (D (x) K[X], D, {id_x}) as a matching relative Rota-Baxter algebra.
OperatorFamily functor_g(const MatchingDendriform& D);

struct AdjunctionTransport {
    LinearMap operator_map;  // a (x) x -> P_x(psi(a))
    CertificateReport report;
};
AdjunctionTransport adjunction_transport(const LinearMap& psi, const MatchingDendriform& D, const OperatorFamily& T);

struct SemidirectEmbedding {
    OperatorFamily family;  // on (D (x) K[X]) + D with its adjoint bimodule
    LinearMap inclusion;    // a -> (0, a)
    CertificateReport report;
};
SemidirectEmbedding semidirect_embedding(const MatchingDendriform& D);

} // namespace mrb
