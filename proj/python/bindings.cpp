#include "mrb/cli.hpp"
#include "mrb/cochain.hpp"
#include "mrb/error.hpp"
#include "mrb/fixtures.hpp"
#include "mrb/json_io.hpp"
#include "mrb/operad.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace mrb;

namespace {

Json parse(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
}

template <class F>
auto guarded(F&& f) {
    try {
        return f();
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
}

std::string dump(const Json& j) { return j.dump(); }

Bimodule bimodule_with_algebra(const Json& j) {
    auto A = algebra_from_json(j.at("algebra"));
    return bimodule_from_json(j, A.dim());
}

std::string check(const std::string& kind, const std::string& text, std::size_t arity_bound) {
    auto j = parse(text);
    return guarded([&] {
        CertificateReport rep;
        if (kind == "algebra") rep = check_algebra(algebra_from_json(j));
        else if (kind == "bimodule") rep = check_bimodule(algebra_from_json(j.at("algebra")), bimodule_with_algebra(j));
        else if (kind == "mrrba") rep = check_mrrba(family_from_json(j));
        else if (kind == "mc") rep = check_mc(family_from_json(j));
        else if (kind == "aybe") rep = check_matching_aybe(rmatrix_from_json(j));
        else if (kind == "skew") rep = check_skew_symmetric(rmatrix_from_json(j));
        else if (kind == "mda") rep = check_mda(dendriform_from_json(j));
        else if (kind == "deformation") rep = check_mrrba_deformation(deformation_from_json(j, family_from_json(j.at("base"))));
        else if (kind == "a-infinity") rep = check_a_infinity(a_infinity_from_json(j), arity_bound);
        else if (kind == "homotopy-mrrba") rep = check_homotopy_mrrba(homotopy_mrrba_from_json(j), arity_bound);
        else if (kind == "homotopy-mda") rep = check_homotopy_mda(homotopy_mda_from_json(j), arity_bound);
        else throw Error(ErrorKind::UnknownChecker, "no checker '" + kind + "'");
        return dump(to_json(rep));
    });
}

std::string cohomology(const std::string& text, const std::string& complex, std::size_t n, std::size_t max_degree) {
    if (n > max_degree) throw Error(ErrorKind::DegreeOutOfRange, "degree exceeds max_degree");
    auto j = parse(text);
    return guarded([&] {
        if (complex == "mda") return dump(to_json(mda_complex(dendriform_from_json(j), max_degree).report(n)));
        auto F = family_from_json(j);
        if (complex == "mrrba") return dump(to_json(mrrba_complex(F, max_degree).report(n)));
        if (complex == "op") return dump(to_json(op_complex(F, 0, max_degree).report(n)));
        if (complex == "mrba") return dump(to_json(mrba_subcomplex(F, max_degree).complex.report(n)));
        if (complex == "hochschild")
            return dump(to_json(hochschild_complex(F.algebra(), F.module(), 0, max_degree).report(n)));
        throw Error(ErrorKind::UnknownChecker, "no complex '" + complex + "'");
    });
}

template <class F>
std::string unary(const std::string& text, F&& f) {
    auto j = parse(text);
    return guarded([&] { return dump(to_json(f(j))); });
}

std::string cocycle_deformation(const std::string& text, std::size_t index) {
    auto j = parse(text);
    return guarded([&] {
        auto F = family_from_json(j);
        auto ctx = F.context();
        auto basis = kernel_basis(mrrba_complex(F, 2).differential(2));
        if (index >= basis.size()) throw Error(ErrorKind::ParseError, "cocycle index out of range");
        auto z = MixedCochain::from_vector(ctx, 2, basis[index].to_dense(MixedCochain::dimension(*ctx, 2)));
        return dump(to_json(cocycle_to_deformation(F, z)));
    });
}

std::size_t cocycle_count(const std::string& text) {
    auto j = parse(text);
    return guarded([&] { return kernel_basis(mrrba_complex(family_from_json(j), 2).differential(2)).size(); });
}

std::tuple<int, std::string, std::string> run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<Scalar> scalars(const std::vector<std::string>& v) {
    std::vector<Scalar> out;
    for (const auto& s : v) out.push_back(Scalar::parse(s));
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    py::register_exception<Error>(m, "MatchrbError");

    m.def("check", &check, py::arg("kind"), py::arg("text"), py::arg("arity_bound") = default_arity_bound);
    m.def("cohomology", &cohomology, py::arg("text"), py::arg("complex"), py::arg("degree"), py::arg("max_degree") = 3);

    m.def("induce_dendriform", [](const std::string& t) { return unary(t, [](const Json& j) { return induce_dendriform(family_from_json(j)); }); });
    m.def("functor_g", [](const std::string& t) { return unary(t, [](const Json& j) { return functor_g(dendriform_from_json(j)); }); });
    m.def("semidirect_embedding", [](const std::string& t) {
        return unary(t, [](const Json& j) { return semidirect_embedding(dendriform_from_json(j)).family; });
    });
    m.def("extend_to_labelled_dendriform", [](const std::string& t) {
        return unary(t, [](const Json& j) { return extend_to_labelled_dendriform(dendriform_from_json(j)); });
    });
    m.def("operators_from_rmatrix", [](const std::string& r, const std::string& bimodule) {
        auto M = parse(bimodule);
        return unary(r, [&](const Json& j) { return operators_from_rmatrix(rmatrix_from_json(j), bimodule_with_algebra(M)); });
    });
    m.def("operators_on_dual", [](const std::string& t) { return unary(t, [](const Json& j) { return operators_on_dual(rmatrix_from_json(j)); }); });
    m.def("family_from_rb_pair", [](const std::string& t) {
        return unary(t, [](const Json& j) {
            auto F = family_from_json(j);
            return family_from_rb_pair(F.algebra(), F.module(), F.map(0));
        });
    });
    m.def("family_from_central_elements", [](const std::string& t, const std::vector<std::string>& labels,
                                             const std::vector<std::vector<std::string>>& elements) {
        return unary(t, [&](const Json& j) {
            auto F = family_from_json(j);
            std::vector<std::vector<Scalar>> e;
            for (const auto& v : elements) e.push_back(scalars(v));
            return family_from_central_elements(F.algebra(), F.module(), F.map(0), LabelSet(labels), e);
        });
    });
    m.def("homotopy_functor_g", [](const std::string& t, std::size_t k) {
        return unary(t, [&](const Json& j) { return homotopy_functor_g(homotopy_mda_from_json(j), k); });
    }, py::arg("text"), py::arg("arity_bound") = default_arity_bound);
    m.def("induce_homotopy_dendriform", [](const std::string& t, std::size_t k) {
        return unary(t, [&](const Json& j) { return induce_homotopy_dendriform(homotopy_mrrba_from_json(j), k); });
    }, py::arg("text"), py::arg("arity_bound") = default_arity_bound);
    m.def("cocycle_count", &cocycle_count);
    m.def("cocycle_to_deformation", &cocycle_deformation, py::arg("text"), py::arg("index"));

    m.def("truncated_integration", [](std::size_t n, std::size_t q) { return dump(to_json(truncated_integration(n, q))); },
          py::arg("n") = 6, py::arg("q") = 2);
    m.def("zero_family", [](std::size_t a, std::size_t mdim, std::size_t q) { return dump(to_json(zero_family(a, mdim, q))); });
    m.def("line_dendriform", [](const std::vector<std::string>& prec, const std::vector<std::string>& succ) {
        return dump(to_json(line_dendriform(scalars(prec), scalars(succ))));
    });
    m.def("dual_numbers_dg", [] { return dump(to_json(dual_numbers_dg())); });
    m.def("tensor_with_dual_numbers", [](const std::string& t) {
        auto j = parse(t);
        return guarded([&] {
            if (j.at("kind") == "mda") return dump(to_json(tensor_with(dendriform_from_json(j), dual_numbers_dg())));
            return dump(to_json(tensor_with(family_from_json(j), dual_numbers_dg())));
        });
    });

    m.def("run_cli", &run_cli, py::arg("args"));
}
