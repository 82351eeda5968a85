#include "mrb/dendriform.hpp"

#include "mrb/error.hpp"

namespace mrb {

MatchingDendriform::MatchingDendriform(std::vector<std::string> basis_, LabelSet labels_, std::vector<DenseTensor> prec_,
                                       std::vector<DenseTensor> succ_)
    : basis(std::move(basis_)), labels(std::move(labels_)), prec(std::move(prec_)), succ(std::move(succ_)) {
    std::size_t d = basis.size();
    if (prec.size() != labels.size() || succ.size() != labels.size())
        throw Error(ErrorKind::ShapeMismatch, "need one pair of products per label");
    for (const auto* ops : {&prec, &succ})
        for (const auto& t : *ops)
            if (t.shape() != Shape{d, d, d}) throw Error(ErrorKind::ShapeMismatch, "products must have shape [dim, dim, dim]");
}

MatchingDendriform MatchingDendriform::zero(std::size_t dim, LabelSet labels) {
    std::vector<DenseTensor> z(labels.size(), DenseTensor({dim, dim, dim}));
    return MatchingDendriform(default_names("e", dim), std::move(labels), z, z);
}

CertificateReport check_mda(const MatchingDendriform& D) {
    CertificateReport rep("mda");
    const auto* n = &D.basis;
    std::vector<const std::vector<std::string>*> names{n, n, n};
    for (std::size_t x = 0; x < D.labels.size(); ++x)
        for (std::size_t y = 0; y < D.labels.size(); ++y) {
            const auto &px = D.prec[x], &py = D.prec[y], &sx = D.succ[x], &sy = D.succ[y];
            std::vector<std::string> lab{D.labels[x], D.labels[y]};
            compare_maps(rep, "axiom-1", lab, compose(py, 0, px), compose(px, 1, py) + compose(py, 1, sx), names);
            compare_maps(rep, "axiom-2", lab, compose(py, 0, sx), compose(sx, 1, py), names);
            compare_maps(rep, "axiom-3", lab, compose(sx, 0, py) + compose(sy, 0, sx), compose(sx, 1, sy), names);
        }
    return rep;
}

MatchingDendriform induce_dendriform(const OperatorFamily& F) {
    auto rep = check_mrrba(F);
    if (!rep.passed()) throw Error(ErrorKind::MrrbaFails, rep.summary());
    std::vector<DenseTensor> prec, succ;
    for (std::size_t x = 0; x < F.labels().size(); ++x) {
        prec.push_back(compose(F.module().right(), 1, F.tensor(x)));
        succ.push_back(compose(F.module().left(), 0, F.tensor(x)));
    }
    return MatchingDendriform(F.module().basis(), F.labels(), std::move(prec), std::move(succ));
}

CertificateReport check_mda_morphism(const LinearMap& f, const MatchingDendriform& src, const MatchingDendriform& dst) {
    if (!(src.labels == dst.labels)) throw Error(ErrorKind::LabelSetMismatch, "morphism between different label sets");
    if (f.source_dim() != src.dim() || f.target_dim() != dst.dim()) throw Error(ErrorKind::ShapeMismatch, "map has the wrong shape");
    CertificateReport rep("mda-morphism");
    auto t = f.as_tensor();
    const auto* n = &src.basis;
    for (std::size_t x = 0; x < src.labels.size(); ++x) {
        compare_maps(rep, "prec", {src.labels[x]}, compose(t, 0, src.prec[x]), product(dst.prec[x], t, t), {n, n});
        compare_maps(rep, "succ", {src.labels[x]}, compose(t, 0, src.succ[x]), product(dst.succ[x], t, t), {n, n});
    }
    return rep;
}

std::vector<std::string> labelled_basis(const MatchingDendriform& D) {
    std::vector<std::string> names;
    for (const auto& b : D.basis)
        for (const auto& x : D.labels.names()) names.push_back(b + "⊗" + x);
    return names;
}

namespace {

void require_mda(const MatchingDendriform& D) {
    auto rep = check_mda(D);
    if (!rep.passed()) throw Error(ErrorKind::MdaFails, rep.summary());
}

// (a (x) x) . (b (x) y) = (a <_y b) (x) x + (a >_x b) (x) y
DenseTensor bullet_product(const MatchingDendriform& D) {
    std::size_t d = D.dim(), q = D.labels.size(), n = d * q;
    DenseTensor out({n, n, n});
    for (std::size_t x = 0; x < q; ++x)
        for (std::size_t y = 0; y < q; ++y)
            for (std::size_t a = 0; a < d; ++a)
                for (std::size_t b = 0; b < d; ++b)
                    for (std::size_t c = 0; c < d; ++c) {
                        out.at({a * q + x, b * q + y, c * q + x}) += D.prec[y].at({a, b, c});
                        out.at({a * q + x, b * q + y, c * q + y}) += D.succ[x].at({a, b, c});
                    }
    return out;
}

} // namespace

MatchingDendriform extend_to_labelled_dendriform(const MatchingDendriform& D) {
    require_mda(D);
    std::size_t d = D.dim(), q = D.labels.size(), n = d * q;
    DenseTensor prec({n, n, n}), succ({n, n, n});
    for (std::size_t x = 0; x < q; ++x)
        for (std::size_t y = 0; y < q; ++y)
            for (std::size_t a = 0; a < d; ++a)
                for (std::size_t b = 0; b < d; ++b)
                    for (std::size_t c = 0; c < d; ++c) {
                        prec.at({a * q + x, b * q + y, c * q + x}) = D.prec[y].at({a, b, c});
                        succ.at({a * q + x, b * q + y, c * q + y}) = D.succ[x].at({a, b, c});
                    }
    return MatchingDendriform(labelled_basis(D), LabelSet({"*"}), {std::move(prec)}, {std::move(succ)});
}

OperatorFamily functor_g(const MatchingDendriform& D) {
    require_mda(D);
    std::size_t d = D.dim(), q = D.labels.size(), n = d * q;
    DenseTensor left({n, d, d}), right({d, n, d});
    for (std::size_t x = 0; x < q; ++x)
        for (std::size_t a = 0; a < d; ++a)
            for (std::size_t b = 0; b < d; ++b)
                for (std::size_t c = 0; c < d; ++c) {
                    left.at({a * q + x, b, c}) = D.succ[x].at({a, b, c});
                    right.at({b, a * q + x, c}) = D.prec[x].at({b, a, c});
                }
    std::vector<LinearMap> maps;
    for (std::size_t x = 0; x < q; ++x) {
        DenseMatrix m(n, d);
        for (std::size_t a = 0; a < d; ++a) m(a * q + x, a) = 1;
        maps.emplace_back(std::move(m));
    }
    return OperatorFamily(D.labels, Algebra(labelled_basis(D), bullet_product(D)),
                          Bimodule(n, D.basis, std::move(left), std::move(right)), std::move(maps));
}

AdjunctionTransport adjunction_transport(const LinearMap& psi, const MatchingDendriform& D, const OperatorFamily& T) {
    if (!(D.labels == T.labels())) throw Error(ErrorKind::LabelSetMismatch, "dendriform and family use different labels");
    auto morph = check_mda_morphism(psi, D, induce_dendriform(T));
    if (!morph.passed()) throw Error(ErrorKind::NotMdaMorphism, morph.summary());
    std::size_t d = D.dim(), q = D.labels.size();
    DenseMatrix m(T.algebra().dim(), d * q);
    for (std::size_t x = 0; x < q; ++x) {
        DenseMatrix px = T.map(x).matrix * psi.matrix;
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t a = 0; a < d; ++a) m(i, a * q + x) = px(i, a);
    }
    LinearMap op(std::move(m));
    auto rep = check_morphism_pair(op, psi, functor_g(D), T);
    return {std::move(op), std::move(rep)};
}

SemidirectEmbedding semidirect_embedding(const MatchingDendriform& D) {
    auto G = functor_g(D);
    auto S = semidirect_product(G.algebra(), G.module());
    std::size_t d = D.dim(), q = D.labels.size(), n = d * q + d;
    std::vector<LinearMap> maps;
    for (std::size_t x = 0; x < q; ++x) {
        DenseMatrix m(n, n);
        for (std::size_t a = 0; a < d; ++a) m(a * q + x, d * q + a) = 1;
        maps.emplace_back(std::move(m));
    }
    DenseMatrix incl(n, d);
    for (std::size_t a = 0; a < d; ++a) incl(d * q + a, a) = 1;
    auto M = adjoint_bimodule(S);
    OperatorFamily family(D.labels, std::move(S), std::move(M), std::move(maps));
    CertificateReport rep("semidirect-embedding");
    auto mrrba = check_mrrba(family);
    rep.merge(mrrba);
    if (mrrba.passed()) rep.merge(check_mda_morphism(LinearMap(incl), D, induce_dendriform(family)));
    return {std::move(family), LinearMap(std::move(incl)), std::move(rep)};
}

} // namespace mrb
