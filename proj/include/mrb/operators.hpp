#pragma once

#include "mrb/algebra.hpp"
#include "mrb/labels.hpp"

#include <map>
#include <memory>

namespace mrb {

// Algebra A, A-bimodule M and a label set: everything a family of maps M -> A lives over.
struct Context {
    LabelSet labels;
    Algebra algebra;
    Bimodule module;

    Context(LabelSet labels, Algebra algebra, Bimodule module);
    std::size_t a() const noexcept { return algebra.dim(); }
    std::size_t m() const noexcept { return module.dim(); }
    std::size_t q() const noexcept { return labels.size(); }

    friend bool operator==(const Context&, const Context&) = default;
};

using ContextPtr = std::shared_ptr<const Context>;
ContextPtr make_context(LabelSet labels, Algebra algebra, Bimodule module);
void require_same_context(const ContextPtr& a, const ContextPtr& b);

class OperatorFamily {
  public:
    OperatorFamily(ContextPtr ctx, std::vector<LinearMap> maps);
    OperatorFamily(LabelSet labels, Algebra algebra, Bimodule module, std::vector<LinearMap> maps);

    const ContextPtr& context() const noexcept { return ctx_; }
    const LabelSet& labels() const noexcept { return ctx_->labels; }
    const Algebra& algebra() const noexcept { return ctx_->algebra; }
    const Bimodule& module() const noexcept { return ctx_->module; }
    const std::vector<LinearMap>& maps() const noexcept { return maps_; }
    const LinearMap& map(std::size_t x) const { return maps_.at(x); }
    const LinearMap& map(const std::string& label) const { return maps_.at(labels().index_of(label)); }
    // P_x as a tensor of shape [m, a].
    const DenseTensor& tensor(std::size_t x) const { return tensors_.at(x); }

    friend bool operator==(const OperatorFamily& a, const OperatorFamily& b) {
        return *a.ctx_ == *b.ctx_ && a.maps_ == b.maps_;
    }

  private:
    ContextPtr ctx_;
    std::vector<LinearMap> maps_;
    std::vector<DenseTensor> tensors_;
};

CertificateReport check_mrrba(const OperatorFamily& F);

// P(u).P(v) = P(u.P(v) + P(u).v) for a single map.
CertificateReport check_relative_rota_baxter(const Algebra& A, const Bimodule& M, const LinearMap& P);

// Sub-family on the given labels, in the given order.
OperatorFamily select_labels(const OperatorFamily& F, const std::vector<std::string>& labels);
OperatorFamily relabel(const OperatorFamily& F, const std::map<std::string, std::string>& tau);
OperatorFamily family_from_rb_pair(const Algebra& A, const Bimodule& M, const LinearMap& P);
OperatorFamily family_from_central_elements(const Algebra& A, const Bimodule& M, const LinearMap& P, const LabelSet& labels,
                                            const std::vector<std::vector<Scalar>>& elements);

// One element of A (x) A per label, stored as [a, a] coefficient tensors.
struct RMatrixFamily {
    LabelSet labels;
    Algebra algebra;
    std::vector<DenseTensor> tensors;

    RMatrixFamily(LabelSet labels, Algebra algebra, std::vector<DenseTensor> tensors);
    friend bool operator==(const RMatrixFamily&, const RMatrixFamily&) = default;
};

CertificateReport check_matching_aybe(const RMatrixFamily& R);
CertificateReport check_skew_symmetric(const RMatrixFamily& R);
// The AYBE left-hand side for labels (x, y) as an [a, a, a] tensor.
DenseTensor aybe_tensor(const RMatrixFamily& R, std::size_t x, std::size_t y);

OperatorFamily operators_from_rmatrix(const RMatrixFamily& R, const Bimodule& M);
OperatorFamily operators_on_dual(const RMatrixFamily& R);

struct StarProduct {
    Algebra algebra;    // M with u * v = P(u).v + u.P(v)
    Bimodule bimodule;  // A as a bimodule over it
};
StarProduct star_product(const OperatorFamily& F);

CertificateReport check_morphism_pair(const LinearMap& phi, const LinearMap& psi, const OperatorFamily& src,
                                      const OperatorFamily& dst);

} // namespace mrb
