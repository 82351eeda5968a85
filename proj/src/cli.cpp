#include "mrb/cli.hpp"

#include "mrb/cochain.hpp"
#include "mrb/error.hpp"
#include "mrb/operad.hpp"
#include "mrb/workspace.hpp"

#include "CLI11.hpp"

#include <ostream>

namespace mrb::cli {

namespace {

struct Options {
    std::string workspace = ".";
    std::size_t max_degree = 3;
    std::size_t arity_bound = default_arity_bound;
    std::size_t order = 2;
    unsigned seed = 7;
};

struct Outcome {
    Json json;
    bool passed = true;
    std::string summary;
};

CertificateReport check_entry(const Workspace& ws, const std::string& name, const std::string& checker,
                              const Options& opt) {
    if (checker == "algebra") return check_algebra(ws.algebra(name));
    if (checker == "bimodule") {
        auto A = ws.kind(name) == "mrrba" ? ws.family(name).algebra()
                                          : algebra_from_json(ws.resolved(name).at("algebra"));
        return check_bimodule(A, ws.bimodule(name));
    }
    if (checker == "mrrba") return check_mrrba(ws.family(name));
    if (checker == "mc") return check_mc(ws.family(name));
    if (checker == "aybe") return check_matching_aybe(ws.rmatrix(name));
    if (checker == "skew") return check_skew_symmetric(ws.rmatrix(name));
    if (checker == "mda") return check_mda(ws.dendriform(name));
    if (checker == "morphism") {
        if (ws.kind(name) != "morphism") throw Error(ErrorKind::UnknownChecker, "'" + name + "' is not a morphism");
        auto j = ws.resolved(name);
        auto src = family_from_json(j.at("source"));
        auto dst = family_from_json(j.at("target"));
        LinearMap phi(matrix_from_json(j.at("phi"), dst.algebra().dim(), src.algebra().dim()));
        LinearMap psi(matrix_from_json(j.at("psi"), dst.module().dim(), src.module().dim()));
        return check_morphism_pair(phi, psi, src, dst);
    }
    if (checker == "deformation") return check_mrrba_deformation(ws.deformation(name));
    if (checker == "homotopy-mda") return check_homotopy_mda(ws.homotopy_mda(name), opt.arity_bound);
    if (checker == "homotopy-mrrba") return check_homotopy_mrrba(ws.homotopy_mrrba(name), opt.arity_bound);
    if (checker == "a-infinity") return check_a_infinity(ws.a_infinity(name), opt.arity_bound);
    throw Error(ErrorKind::UnknownChecker, "no checker '" + checker + "'");
}

// Checker run by `report` and on refused builds.
std::string default_checker(const std::string& kind) {
    if (kind == "rmatrix") return "aybe";
    if (kind == "central-elements") return "";
    return kind;
}

Json report_json(const CertificateReport& rep) { return to_json(rep); }

Outcome cmd_check(const Workspace& ws, const std::string& target, const std::string& checker, const Options& opt) {
    auto rep = check_entry(ws, target, checker, opt);
    Json j{{"command", "check"}, {"target", target}, {"checker", checker}, {"certificate", report_json(rep)}};
    return {j, rep.passed(), target + ": " + rep.summary()};
}

// ---- build

struct Built {
    Json entry;
    CertificateReport certificate;
    std::optional<bool> roundtrip;
};

Json family_entry(const OperatorFamily& F) { return to_json(F); }

OperatorFamily single_label_family(const Workspace& ws, const std::string& name) {
    auto F = ws.family(name);
    if (F.labels().size() != 1)
        throw Error(ErrorKind::InputFails, "'" + name + "' must carry exactly one operator");
    return F;
}

Built construct(const Workspace& ws, const std::string& construction, const std::vector<std::string>& inputs,
                const Options& opt, std::optional<std::size_t> index, std::string& base_ref) {
    auto need = [&](std::size_t n) {
        if (inputs.size() != n)
            throw Error(ErrorKind::ParseError,
                        construction + " takes " + std::to_string(n) + " input(s), got " + std::to_string(inputs.size()));
    };
    if (construction == "induce-dendriform") {
        need(1);
        auto D = induce_dendriform(ws.family(inputs[0]));
        return {to_json(D), check_mda(D), {}};
    }
    if (construction == "functor-g") {
        need(1);
        auto D = ws.dendriform(inputs[0]);
        auto F = functor_g(D);
        return {family_entry(F), check_mrrba(F), induce_dendriform(F) == D};
    }
    if (construction == "semidirect-embedding") {
        need(1);
        auto S = semidirect_embedding(ws.dendriform(inputs[0]));
        return {family_entry(S.family), check_mrrba(S.family), {}};
    }
    if (construction == "operators-from-rmatrix") {
        need(2);
        auto F = operators_from_rmatrix(ws.rmatrix(inputs[0]), ws.bimodule(inputs[1]));
        return {family_entry(F), check_mrrba(F), {}};
    }
    if (construction == "operators-on-dual") {
        need(1);
        auto F = operators_on_dual(ws.rmatrix(inputs[0]));
        return {family_entry(F), check_mrrba(F), {}};
    }
    if (construction == "extend-to-labelled-dendriform") {
        need(1);
        auto E = extend_to_labelled_dendriform(ws.dendriform(inputs[0]));
        return {to_json(E), check_mda(E), {}};
    }
    if (construction == "homotopy-functor-g") {
        need(1);
        auto H = ws.homotopy_mda(inputs[0]);
        auto G = homotopy_functor_g(H, opt.arity_bound);
        return {to_json(G), check_homotopy_mrrba(G, opt.arity_bound),
                induce_homotopy_dendriform(G, opt.arity_bound) == H};
    }
    if (construction == "induce-homotopy-dendriform") {
        need(1);
        auto H = induce_homotopy_dendriform(ws.homotopy_mrrba(inputs[0]), opt.arity_bound);
        return {to_json(H), check_homotopy_mda(H, opt.arity_bound), {}};
    }
    if (construction == "cocycle-to-deformation") {
        need(1);
        auto F = ws.family(inputs[0]);
        auto ctx = F.context();
        auto basis = kernel_basis(mrrba_complex(F, 2).differential(2));
        std::size_t i = index.value_or(0);
        if (i >= basis.size())
            throw Error(ErrorKind::ParseError, "cocycle index " + std::to_string(i) + " out of range, kernel has " +
                                                   std::to_string(basis.size()) + " basis vectors");
        auto z = MixedCochain::from_vector(ctx, 2, basis[i].to_dense(MixedCochain::dimension(*ctx, 2)));
        auto d = cocycle_to_deformation(F, z);
        base_ref = inputs[0];
        return {to_json(d, base_ref), check_mrrba_deformation(d), {}};
    }
    if (construction == "family-from-rb-pair") {
        need(1);
        auto F = single_label_family(ws, inputs[0]);
        auto G = family_from_rb_pair(F.algebra(), F.module(), F.map(0));
        return {family_entry(G), check_mrrba(G), {}};
    }
    if (construction == "family-from-central-elements") {
        need(1);
        if (ws.kind(inputs[0]) != "central-elements")
            throw Error(ErrorKind::UnknownChecker, "'" + inputs[0] + "' is not a central-elements entry");
        auto j = ws.resolved(inputs[0]);
        auto F = family_from_json(j.at("base"));
        if (F.labels().size() != 1) throw Error(ErrorKind::InputFails, "base must carry exactly one operator");
        LabelSet labels(j.at("labels").get<std::vector<std::string>>());
        std::vector<std::vector<Scalar>> elements;
        for (const auto& l : labels.names()) {
            std::vector<Scalar> v;
            for (const auto& s : j.at("elements").at(l)) v.push_back(scalar_from_json(s));
            if (v.size() != F.algebra().dim()) throw Error(ErrorKind::ParseError, "element for '" + l + "' has wrong length");
            elements.push_back(std::move(v));
        }
        auto G = family_from_central_elements(F.algebra(), F.module(), F.map(0), labels, elements);
        return {family_entry(G), check_mrrba(G), {}};
    }
    throw Error(ErrorKind::UnknownChecker, "no construction '" + construction + "'");
}

bool is_input_error(ErrorKind k) {
    switch (k) {
    case ErrorKind::ParseError:
    case ErrorKind::UnknownTarget:
    case ErrorKind::UnknownChecker:
    case ErrorKind::DegreeOutOfRange:
    case ErrorKind::ShapeMismatch:
    case ErrorKind::LabelSetMismatch:
    case ErrorKind::UnknownLabel:
    case ErrorKind::DegreeMismatch:
        return true;
    default:
        return false;
    }
}

Outcome cmd_build(Workspace& ws, const std::string& construction, const std::vector<std::string>& inputs,
                  std::string name, const Options& opt, std::optional<std::size_t> index) {
    if (name.empty()) name = (inputs.empty() ? std::string("built") : inputs[0]) + "-" + construction;
    Json j{{"command", "build"}, {"construction", construction}, {"inputs", inputs}, {"name", name}};
    std::string base_ref;
    Built b;
    try {
        b = construct(ws, construction, inputs, opt, index, base_ref);
    } catch (const Error& e) {
        if (is_input_error(e.kind())) throw;
        j["persisted"] = false;
        j["error"] = std::string(to_string(e.kind()));
        j["message"] = e.what();
        Json certs = Json::object();
        for (const auto& in : inputs) {
            if (!ws.contains(in)) continue;
            auto checker = default_checker(ws.kind(in));
            if (checker.empty()) continue;
            try {
                certs[in] = report_json(check_entry(ws, in, checker, opt));
            } catch (const Error&) {
            }
        }
        j["input_certificates"] = certs;
        return {j, false, "refused " + construction + ": " + e.what()};
    }
    bool ok = b.certificate.passed() && b.roundtrip.value_or(true);
    j["kind"] = b.entry.at("kind");
    j["certificate"] = report_json(b.certificate);
    if (b.roundtrip) j["roundtrip"] = *b.roundtrip;
    if (ok) ws.put(name, b.entry);
    j["persisted"] = ok;
    if (!ok) j["error"] = std::string(to_string(ErrorKind::ConstructionFailed));
    return {j, ok, (ok ? "built " : "refused ") + name + ": " + b.certificate.summary()};
}

// ---- cohomology

Json les_json(const LongExactSequence& les) {
    Json nodes = Json::array();
    for (const auto& n : les.nodes)
        nodes.push_back({{"complex", n.complex},
                         {"degree", n.degree},
                         {"dim_cohomology", n.dim_cohomology},
                         {"dim_image_in", n.dim_image_in},
                         {"dim_kernel_out", n.dim_kernel_out},
                         {"exact", n.exact}});
    return {{"nodes", nodes},
            {"euler", {{"op", les.euler_op}, {"mrba", les.euler_mrba}, {"hochschild", les.euler_hochschild}}},
            {"certificate", report_json(les.report)}};
}

Outcome cmd_cohomology(const Workspace& ws, const std::string& target, const std::string& complex, std::size_t n,
                       const Options& opt) {
    if (n > opt.max_degree)
        throw Error(ErrorKind::DegreeOutOfRange,
                    "degree " + std::to_string(n) + " exceeds --max-degree " + std::to_string(opt.max_degree));
    Json j{{"command", "cohomology"}, {"target", target}};
    if (complex == "les") {
        auto les = long_exact_sequence(ws.family(target), n, opt.seed);
        j["complex"] = "les";
        j["max_degree"] = n;
        j.update(les_json(les));
        return {j, les.report.passed(), target + " les: " + les.report.summary()};
    }
    std::optional<CochainComplex> C;
    Json extra = Json::object();
    if (complex == "mrrba") C = mrrba_complex(ws.family(target), opt.max_degree);
    else if (complex == "op") C = op_complex(ws.family(target), 0, opt.max_degree);
    else if (complex == "mrba") {
        auto S = mrba_subcomplex(ws.family(target), opt.max_degree);
        extra["embedding"] = report_json(S.embedding);
        C = std::move(S.complex);
    } else if (complex == "hochschild") {
        const auto& k = ws.kind(target);
        if (k == "algebra") {
            auto A = ws.algebra(target);
            C = hochschild_complex(A, adjoint_bimodule(A), 0, opt.max_degree);
        } else {
            auto F = ws.family(target);
            C = hochschild_complex(F.algebra(), F.module(), 0, opt.max_degree);
        }
    } else if (complex == "mda") C = mda_complex(ws.dendriform(target), opt.max_degree);
    else throw Error(ErrorKind::UnknownChecker, "no complex '" + complex + "'");
    if (n < C->min_degree())
        throw Error(ErrorKind::DegreeOutOfRange, "complex starts in degree " + std::to_string(C->min_degree()));
    auto r = C->report(n);
    j.update(to_json(r));
    for (auto& [key, v] : extra.items()) j[key] = v;
    bool ok = r.delta_squared_zero && (!extra.contains("embedding") || extra["embedding"]["passed"].get<bool>());
    std::string summary = target + " " + r.complex + " H^" + std::to_string(n) + " = " + std::to_string(r.dim_cohomology) +
                          " (cochains " + std::to_string(r.dim_cochain) + ")";
    return {j, ok, summary};
}

// ---- deform

Outcome cmd_deform(const Workspace& ws, const std::string& target, const std::string& against, const Options& opt) {
    Json j{{"command", "deform"}, {"target", target}};
    const auto& kind = ws.kind(target);
    if (kind == "mrrba") {
        auto F = ws.family(target);
        auto ctx = F.context();
        auto C = mrrba_complex(F, std::max<std::size_t>(opt.max_degree, 2));
        auto h2 = C.report(2);
        auto basis = kernel_basis(C.differential(2));
        CertificateReport all("cocycle-to-deformation");
        for (std::size_t i = 0; i < basis.size(); ++i) {
            auto z = MixedCochain::from_vector(ctx, 2, basis[i].to_dense(MixedCochain::dimension(*ctx, 2)));
            all.merge(check_mrrba_deformation(cocycle_to_deformation(F, z)), "cocycle[" + std::to_string(i) + "]");
        }
        auto constant = MrrbaDeformation::constant(F, opt.order);
        auto rep = check_mrrba_deformation(constant);
        all.merge(rep, "constant");
        j["order"] = opt.order;
        j["h2"] = to_json(h2);
        j["cocycles"] = basis.size();
        j["certificate"] = report_json(all);
        return {j, all.passed(),
                target + ": " + std::to_string(basis.size()) + " cocycles, H^2 = " + std::to_string(h2.dim_cohomology) +
                    ", " + all.summary()};
    }
    if (kind != "deformation") throw Error(ErrorKind::UnknownChecker, "'" + target + "' is a " + kind + ", expected mrrba or deformation");
    auto d = ws.deformation(target);
    auto rep = check_mrrba_deformation(d, opt.order);
    j["order"] = d.order();
    j["certificate"] = report_json(rep);
    bool ok = rep.passed();
    std::string summary = target + ": " + rep.summary();
    if (!against.empty()) {
        auto d2 = ws.deformation(against);
        j["against"] = against;
        auto eq = find_equivalence(d, d2);
        j["equivalent"] = eq.has_value();
        if (eq) {
            Json phi = Json::array(), psi = Json::array();
            for (const auto& m : eq->phi) phi.push_back(matrix_to_json(m.matrix));
            for (const auto& m : eq->psi) psi.push_back(matrix_to_json(m.matrix));
            j["phi"] = phi;
            j["psi"] = psi;
        }
        summary += eq ? ", equivalent to " + against : ", not equivalent to " + against;
    }
    return {j, ok, summary};
}

// ---- report

Json describe(const Workspace& ws, const std::string& name) {
    const auto& kind = ws.kind(name);
    Json j{{"name", name}, {"kind", kind}};
    if (kind == "algebra") j["dim"] = ws.algebra(name).dim();
    else if (kind == "bimodule") j["dim"] = ws.bimodule(name).dim();
    else if (kind == "mrrba") {
        auto F = ws.family(name);
        j["a"] = F.algebra().dim();
        j["m"] = F.module().dim();
        j["labels"] = F.labels().names();
    } else if (kind == "rmatrix") {
        auto R = ws.rmatrix(name);
        j["a"] = R.algebra.dim();
        j["labels"] = R.labels.names();
    } else if (kind == "mda") {
        auto D = ws.dendriform(name);
        j["dim"] = D.dim();
        j["labels"] = D.labels.names();
    } else if (kind == "deformation") {
        j["order"] = ws.deformation(name).order();
    }
    return j;
}

Outcome cmd_report(const Workspace& ws, const std::string& target, const Options& opt) {
    Json j{{"command", "report"}};
    j.update(describe(ws, target));
    auto checker = default_checker(ws.kind(target));
    if (checker.empty()) return {j, true, target + ": " + ws.kind(target)};
    auto rep = check_entry(ws, target, checker, opt);
    j["checker"] = checker;
    j["certificate"] = report_json(rep);
    return {j, rep.passed(), target + " (" + ws.kind(target) + "): " + rep.summary()};
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"matching Rota-Baxter toolkit", "matchrb"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_option("--workspace", opt.workspace, "fixture directory")->capture_default_str();
    app.add_option("--max-degree", opt.max_degree, "highest cochain degree")->capture_default_str();
    app.add_option("--arity-bound", opt.arity_bound, "highest arity for homotopy checks")->capture_default_str();
    app.add_option("--order", opt.order, "deformation order")->capture_default_str();
    app.add_option("--seed", opt.seed, "seed for randomized steps")->capture_default_str();

    std::string target, checker, complex, construction, name, against;
    std::vector<std::string> inputs;
    std::size_t degree = 0;
    std::optional<std::size_t> index;

    auto* check = app.add_subcommand("check", "run a checker on a workspace entry");
    check->add_option("target", target)->required();
    check->add_option("kind", checker)->required();

    auto* build = app.add_subcommand("build", "run a construction and persist a certified result");
    build->add_option("construction", construction)->required();
    build->add_option("inputs", inputs);
    build->add_option("--name", name, "name of the new entry");
    build->add_option("--index", index, "kernel basis vector for cocycle-to-deformation");

    auto* coh = app.add_subcommand("cohomology", "cohomology dimension report");
    coh->add_option("target", target)->required();
    coh->add_option("complex", complex)->required();
    coh->add_option("degree", degree)->required();

    auto* deform = app.add_subcommand("deform", "deformation checks and equivalence");
    deform->add_option("target", target)->required();
    deform->add_option("--against", against, "second deformation to compare with");

    auto* report = app.add_subcommand("report", "describe and certify an entry");
    report->add_option("target", target)->required();

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return pass;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return input_error;
    }

    try {
        auto ws = Workspace::load(opt.workspace);
        Outcome o;
        if (*check) o = cmd_check(ws, target, checker, opt);
        else if (*build) o = cmd_build(ws, construction, inputs, name, opt, index);
        else if (*coh) o = cmd_cohomology(ws, target, complex, degree, opt);
        else if (*deform) o = cmd_deform(ws, target, against, opt);
        else o = cmd_report(ws, target, opt);
        o.json["passed"] = o.passed;
        out << o.json.dump(2) << "\n";
        err << (o.passed ? "PASS " : "FAIL ") << o.summary << "\n";
        return o.passed ? pass : fail;
    } catch (const Error& e) {
        Json j{{"error", std::string(to_string(e.kind()))}, {"message", e.what()}};
        out << j.dump(2) << "\n";
        err << "error: " << e.what() << "\n";
        // Construction and checker preconditions count as failures of the object, not of the input.
        return is_input_error(e.kind()) ? input_error : fail;
    } catch (const nlohmann::json::exception& e) {
        Json j{{"error", "ParseError"}, {"message", e.what()}};
        out << j.dump(2) << "\n";
        err << "error: " << e.what() << "\n";
        return input_error;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "error: " << e.what() << "\n";
        return input_error;
    }
}

} // namespace mrb::cli
