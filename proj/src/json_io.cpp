#include "mrb/json_io.hpp"

#include "mrb/error.hpp"

namespace mrb {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
    return j.at(key);
}

std::size_t size_field(const Json& j, const char* key) {
    const auto& v = field(j, key);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
        bad(std::string("field '") + key + "' must be a non-negative integer");
    return v.get<std::size_t>();
}

std::vector<std::string> strings(const Json& j, const char* key) {
    const auto& v = field(j, key);
    if (!v.is_array()) bad(std::string("field '") + key + "' must be an array");
    std::vector<std::string> out;
    for (const auto& s : v) {
        if (!s.is_string()) bad(std::string("field '") + key + "' must hold strings");
        out.push_back(s.get<std::string>());
    }
    return out;
}

std::vector<std::string> default_basis(const std::string& stem, std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(stem + std::to_string(i));
    return out;
}

std::vector<std::string> basis_or_default(const Json& j, const std::string& stem, std::size_t n) {
    if (!j.contains("basis")) return default_basis(stem, n);
    auto b = strings(j, "basis");
    if (b.size() != n) bad("basis has " + std::to_string(b.size()) + " names for dimension " + std::to_string(n));
    return b;
}

LabelSet labels_of(const Json& j) { return LabelSet(strings(j, "labels")); }

// {label: value} in label order; every label present.
template <class F>
auto per_label(const Json& j, const char* key, const LabelSet& L, F&& read) {
    const auto& obj = field(j, key);
    if (!obj.is_object()) bad(std::string("field '") + key + "' must be an object keyed by label");
    for (const auto& [name, v] : obj.items()) {
        (void)v;
        L.index_of(name);
    }
    std::vector<decltype(read(obj.begin().value()))> out;
    for (const auto& x : L.names()) {
        if (!obj.contains(x)) bad(std::string("field '") + key + "' has no entry for label '" + x + "'");
        out.push_back(read(obj.at(x)));
    }
    return out;
}

Json dims_to_json(const GradedSpace& V) {
    Json d = Json::object();
    for (std::size_t p = 0; p < V.degrees().size(); ++p) d[std::to_string(V.degrees()[p])] = V.dims()[p];
    return d;
}

int parse_int(const std::string& s) {
    try {
        std::size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size()) bad("not an integer: '" + s + "'");
        return v;
    } catch (const std::logic_error&) {
        bad("not an integer: '" + s + "'");
    }
}

Json blocks_json(const GradedMultiMap& f) {
    Json out = Json::array();
    for (const auto& [degs, block] : f.blocks()) out.push_back({{"degrees", degs}, {"entries", sparse_to_json(block)}});
    return out;
}

GradedMultiMap::Block blocks_from(const Json& j, const std::vector<GradedSpace>& inputs, const GradedSpace& output,
                                  int degree) {
    if (!j.is_array()) bad("blocks must be an array");
    GradedMultiMap::Block out;
    for (const auto& b : j) {
        std::vector<int> degs;
        for (const auto& d : field(b, "degrees")) {
            if (!d.is_number_integer()) bad("block degrees must be integers");
            degs.push_back(d.get<int>());
        }
        if (degs.size() != inputs.size()) bad("block degree tuple has the wrong length");
        Shape s;
        int od = degree;
        for (std::size_t a = 0; a < degs.size(); ++a) {
            if (!inputs[a].has_degree(degs[a])) bad("block uses undeclared degree " + std::to_string(degs[a]));
            s.push_back(inputs[a].dim_of(degs[a]));
            od += degs[a];
        }
        if (!output.has_degree(od)) bad("block lands in undeclared degree " + std::to_string(od));
        s.push_back(output.dim_of(od));
        if (out.count(degs)) bad("block listed twice");
        out.emplace(degs, sparse_from_json(field(b, "entries"), s));
    }
    return out;
}

} // namespace

Json to_json(const Scalar& s) { return s.str(); }

Scalar scalar_from_json(const Json& j) {
    if (j.is_number_integer()) return Scalar(j.get<long long>());
    if (!j.is_string()) bad("scalar must be a \"p/q\" string");
    try {
        return Scalar::parse(j.get<std::string>());
    } catch (const Error&) {
        throw;
    } catch (const std::exception& e) {
        bad("bad scalar '" + j.get<std::string>() + "'");
    }
}

Json sparse_to_json(const DenseTensor& t) {
    Json out = Json::array();
    for (std::size_t f = 0; f < t.size(); ++f) {
        if (t[f].is_zero()) continue;
        Json e = Json::array();
        for (auto i : t.multi_index(f)) e.push_back(i);
        e.push_back(t[f].str());
        out.push_back(std::move(e));
    }
    return out;
}

DenseTensor sparse_from_json(const Json& j, const Shape& shape) {
    if (!j.is_array()) bad("sparse tensor must be an array of entries");
    DenseTensor t(shape);
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != shape.size() + 1) bad("sparse entry must list " + std::to_string(shape.size()) + " indices and a value");
        std::vector<std::size_t> idx;
        for (std::size_t a = 0; a < shape.size(); ++a) {
            if (!e[a].is_number_integer() || e[a].get<long long>() < 0) bad("sparse index must be a non-negative integer");
            auto i = e[a].get<std::size_t>();
            if (i >= shape[a]) bad("sparse index " + std::to_string(i) + " out of range");
            idx.push_back(i);
        }
        t[t.flat_index(idx)] = scalar_from_json(e.back());
    }
    return t;
}

Json matrix_to_json(const DenseMatrix& m) {
    Json out = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(m(i, k).str());
        out.push_back(std::move(row));
    }
    return out;
}

DenseMatrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols) {
    if (!j.is_array() || j.size() != rows) bad("matrix must have " + std::to_string(rows) + " rows");
    DenseMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols) bad("matrix rows must have " + std::to_string(cols) + " entries");
        for (std::size_t k = 0; k < cols; ++k) m(i, k) = scalar_from_json(j[i][k]);
    }
    return m;
}

Json to_json(const Algebra& A) {
    return {{"kind", "algebra"}, {"dim", A.dim()}, {"basis", A.basis()}, {"mult", sparse_to_json(A.mult())}};
}

Algebra algebra_from_json(const Json& j) {
    auto n = size_field(j, "dim");
    return Algebra(basis_or_default(j, "e", n), sparse_from_json(field(j, "mult"), {n, n, n}));
}

Json to_json(const Bimodule& M) {
    return {{"kind", "bimodule"},
            {"algebra_dim", M.algebra_dim()},
            {"dim", M.dim()},
            {"basis", M.basis()},
            {"left", sparse_to_json(M.left())},
            {"right", sparse_to_json(M.right())}};
}

Bimodule bimodule_from_json(const Json& j, std::size_t a) {
    auto m = size_field(j, "dim");
    if (j.contains("algebra_dim") && size_field(j, "algebra_dim") != a) bad("bimodule is over an algebra of another dimension");
    return Bimodule(a, basis_or_default(j, "u", m), sparse_from_json(field(j, "left"), {a, m, m}),
                    sparse_from_json(field(j, "right"), {m, a, m}));
}

Json to_json(const OperatorFamily& F) {
    Json maps = Json::object();
    for (std::size_t x = 0; x < F.labels().size(); ++x) maps[F.labels()[x]] = matrix_to_json(F.map(x).matrix);
    return {{"kind", "mrrba"},
            {"labels", F.labels().names()},
            {"algebra", to_json(F.algebra())},
            {"bimodule", to_json(F.module())},
            {"maps", maps}};
}

OperatorFamily family_from_json(const Json& j) {
    auto L = labels_of(j);
    auto A = algebra_from_json(field(j, "algebra"));
    auto M = bimodule_from_json(field(j, "bimodule"), A.dim());
    auto maps = per_label(j, "maps", L, [&](const Json& v) { return LinearMap(matrix_from_json(v, A.dim(), M.dim())); });
    return OperatorFamily(L, std::move(A), std::move(M), std::move(maps));
}

Json to_json(const RMatrixFamily& R) {
    Json t = Json::object();
    for (std::size_t x = 0; x < R.labels.size(); ++x) t[R.labels[x]] = sparse_to_json(R.tensors[x]);
    return {{"kind", "rmatrix"}, {"labels", R.labels.names()}, {"algebra", to_json(R.algebra)}, {"tensors", t}};
}

RMatrixFamily rmatrix_from_json(const Json& j) {
    auto L = labels_of(j);
    auto A = algebra_from_json(field(j, "algebra"));
    std::size_t a = A.dim();
    auto t = per_label(j, "tensors", L, [&](const Json& v) { return sparse_from_json(v, {a, a}); });
    return RMatrixFamily(L, std::move(A), std::move(t));
}

Json to_json(const MatchingDendriform& D) {
    Json prec = Json::object(), succ = Json::object();
    for (std::size_t x = 0; x < D.labels.size(); ++x) {
        prec[D.labels[x]] = sparse_to_json(D.prec[x]);
        succ[D.labels[x]] = sparse_to_json(D.succ[x]);
    }
    return {{"kind", "mda"}, {"dim", D.dim()}, {"basis", D.basis}, {"labels", D.labels.names()}, {"prec", prec}, {"succ", succ}};
}

MatchingDendriform dendriform_from_json(const Json& j) {
    auto d = size_field(j, "dim");
    auto L = labels_of(j);
    auto read = [&](const Json& v) { return sparse_from_json(v, {d, d, d}); };
    return MatchingDendriform(basis_or_default(j, "e", d), L, per_label(j, "prec", L, read), per_label(j, "succ", L, read));
}

Json to_json(const OperadElement& f) {
    Json comps = Json::object();
    const auto& L = f.labels();
    for (std::size_t r = 0; r < f.arity(); ++r) {
        Json byl = Json::object();
        for (std::size_t code = 0; code < f.tuple_count(); ++code)
            byl[L.tuple_string(L.decode(code, f.arity() - 1))] = sparse_to_json(f.component(r, code));
        comps[std::to_string(r + 1)] = byl;
    }
    return {{"arity", f.arity()}, {"components", comps}};
}

OperadElement operad_from_json(const Json& j, std::size_t dim, const LabelSet& labels) {
    auto k = size_field(j, "arity");
    if (k == 0) bad("arity must be positive");
    OperadElement f(dim, labels, k);
    const auto& comps = field(j, "components");
    if (!comps.is_object()) bad("components must be an object keyed by position");
    Shape s(k + 1, dim);
    for (const auto& [pos, byl] : comps.items()) {
        int r = parse_int(pos);
        if (r < 1 || static_cast<std::size_t>(r) > k) bad("position " + pos + " out of range");
        if (!byl.is_object()) bad("components must be keyed by label tuple");
        for (const auto& [tuple, t] : byl.items()) {
            auto rest = labels.parse_tuple(tuple);
            if (rest.size() != k - 1) bad("label tuple '" + tuple + "' has the wrong length");
            f.component(static_cast<std::size_t>(r - 1), labels.encode(rest)) = sparse_from_json(t, s);
        }
    }
    return f;
}

Json to_json(const MrrbaDeformation& d, const std::string& base_ref) {
    const auto& F = d.base();
    Json mu = Json::array(), l = Json::array(), r = Json::array(), P = Json::object();
    for (std::size_t i = 0; i <= d.order(); ++i) {
        mu.push_back(sparse_to_json(d.mu()[i]));
        l.push_back(sparse_to_json(d.l()[i]));
        r.push_back(sparse_to_json(d.r()[i]));
    }
    for (std::size_t x = 0; x < F.labels().size(); ++x) {
        Json series = Json::array();
        for (const auto& p : d.P()[x]) series.push_back(matrix_to_json(p.matrix));
        P[F.labels()[x]] = series;
    }
    Json base = base_ref.empty() ? to_json(F) : Json(base_ref);
    return {{"kind", "deformation"}, {"base", base}, {"order", d.order()}, {"mu", mu}, {"l", l}, {"r", r}, {"P", P}};
}

MrrbaDeformation deformation_from_json(const Json& j, const OperatorFamily& base) {
    auto N = size_field(j, "order");
    std::size_t a = base.algebra().dim(), m = base.module().dim();
    auto series = [&](const char* key, const Shape& s) {
        const auto& v = field(j, key);
        if (!v.is_array() || v.size() != N + 1) bad(std::string("field '") + key + "' must list order+1 terms");
        std::vector<DenseTensor> out;
        for (const auto& t : v) out.push_back(sparse_from_json(t, s));
        return out;
    };
    auto P = per_label(j, "P", base.labels(), [&](const Json& v) {
        if (!v.is_array() || v.size() != N + 1) bad("each operator series must list order+1 matrices");
        std::vector<LinearMap> out;
        for (const auto& t : v) out.emplace_back(matrix_from_json(t, a, m));
        return out;
    });
    return MrrbaDeformation(base, series("mu", {a, a, a}), series("l", {a, m, m}), series("r", {m, a, m}), std::move(P));
}

Json to_json(const GradedSpace& V) { return {{"degrees", V.degrees()}, {"dims", dims_to_json(V)}}; }

GradedSpace graded_space_from_json(const Json& j) {
    std::vector<int> degrees;
    for (const auto& d : field(j, "degrees")) {
        if (!d.is_number_integer()) bad("degrees must be integers");
        degrees.push_back(d.get<int>());
    }
    const auto& dims = field(j, "dims");
    if (!dims.is_object()) bad("dims must be an object keyed by degree");
    std::vector<std::size_t> sizes;
    for (int d : degrees) {
        auto key = std::to_string(d);
        if (!dims.contains(key)) bad("no dimension for degree " + key);
        sizes.push_back(size_field(dims, key.c_str()));
    }
    if (dims.size() != degrees.size()) bad("dims lists undeclared degrees");
    return GradedSpace(std::move(degrees), std::move(sizes));
}

Json to_json(const GradedMultiMap& f) { return {{"degree", f.degree()}, {"blocks", blocks_json(f)}}; }

GradedMultiMap graded_map_from_json(const Json& j, std::vector<GradedSpace> inputs, GradedSpace output, int degree) {
    if (j.contains("degree") && field(j, "degree").get<int>() != degree) bad("map has degree " + field(j, "degree").dump() + ", expected " + std::to_string(degree));
    auto blocks = blocks_from(field(j, "blocks"), inputs, output, degree);
    return GradedMultiMap::from_blocks(std::move(inputs), std::move(output), degree, blocks);
}

Json to_json(const AInfinity& A) {
    Json maps = Json::array();
    for (std::size_t k = 1; k <= A.max_arity(); ++k) {
        auto m = to_json(A.op(k));
        m["arity"] = k;
        maps.push_back(std::move(m));
    }
    return {{"kind", "a-infinity"}, {"degrees", A.space.degrees()}, {"dims", dims_to_json(A.space)},
            {"max_arity", A.max_arity()}, {"maps", maps}};
}

AInfinity a_infinity_from_json(const Json& j) {
    auto V = graded_space_from_json(j);
    std::size_t K = size_field(j, "max_arity");
    std::vector<GradedMultiMap> mu;
    for (std::size_t k = 1; k <= K; ++k) mu.emplace_back(std::vector<GradedSpace>(k, V), V, int(k) - 2);
    for (const auto& m : field(j, "maps")) {
        auto k = size_field(m, "arity");
        if (k == 0 || k > K) bad("arity out of range");
        mu[k - 1] = graded_map_from_json(m, std::vector<GradedSpace>(k, V), V, int(k) - 2);
    }
    return AInfinity(V, std::move(mu));
}

Json to_json(const HomotopyMrrba& H) {
    Json module_maps = Json::array();
    for (std::size_t k = 1; k <= H.module.max_arity(); ++k)
        for (std::size_t s = 0; s < k; ++s) {
            auto m = to_json(H.module.op(k, s));
            m["arity"] = k;
            m["slot"] = s + 1;
            module_maps.push_back(std::move(m));
        }
    Json ops = Json::object();
    for (std::size_t x = 0; x < H.labels.size(); ++x) ops[H.labels[x]] = matrix_to_json(H.maps[x].matrix);
    auto alg = to_json(H.algebra);
    alg.erase("kind");
    return {{"kind", "homotopy-mrrba"},
            {"labels", H.labels.names()},
            {"algebra", alg},
            {"module",
             {{"degrees", H.module.space.degrees()},
              {"dims", dims_to_json(H.module.space)},
              {"max_arity", H.module.max_arity()},
              {"maps", module_maps}}},
            {"operators", ops}};
}

HomotopyMrrba homotopy_mrrba_from_json(const Json& j) {
    auto L = labels_of(j);
    auto A = a_infinity_from_json(field(j, "algebra"));
    const auto& mj = field(j, "module");
    auto V = graded_space_from_json(mj);
    std::size_t K = size_field(mj, "max_arity");
    std::vector<std::vector<GradedMultiMap>> eta;
    auto inputs = [&](std::size_t k, std::size_t s) {
        std::vector<GradedSpace> in(k, A.space);
        in[s] = V;
        return in;
    };
    for (std::size_t k = 1; k <= K; ++k) {
        eta.emplace_back();
        for (std::size_t s = 0; s < k; ++s) eta.back().emplace_back(inputs(k, s), V, int(k) - 2);
    }
    for (const auto& m : field(mj, "maps")) {
        auto k = size_field(m, "arity"), s = size_field(m, "slot");
        if (k == 0 || k > K || s == 0 || s > k) bad("module map arity or slot out of range");
        eta[k - 1][s - 1] = graded_map_from_json(m, inputs(k, s - 1), V, int(k) - 2);
    }
    auto maps = per_label(j, "operators", L,
                          [&](const Json& v) { return LinearMap(matrix_from_json(v, A.space.dim(), V.dim())); });
    AInfinityBimodule M(A.space, V, std::move(eta));
    return HomotopyMrrba(std::move(A), std::move(M), L, std::move(maps));
}

Json to_json(const HomotopyMda& H) {
    Json maps = Json::array();
    for (std::size_t k = 1; k <= H.max_arity(); ++k)
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t code = 0; code < H.pi[k - 1].tuple_count(); ++code) {
                auto c = H.component(k, r, code);
                if (c.is_zero()) continue;
                maps.push_back({{"arity", k},
                                {"position", r + 1},
                                {"labels", H.labels.tuple_string(H.labels.decode(code, k - 1))},
                                {"degree", c.degree()},
                                {"blocks", blocks_json(c)}});
            }
    return {{"kind", "homotopy-mda"}, {"degrees", H.space.degrees()}, {"dims", dims_to_json(H.space)},
            {"labels", H.labels.names()}, {"max_arity", H.max_arity()}, {"maps", maps}};
}

HomotopyMda homotopy_mda_from_json(const Json& j) {
    auto V = graded_space_from_json(j);
    auto L = labels_of(j);
    std::size_t K = size_field(j, "max_arity");
    std::vector<OperadElement> pi;
    for (std::size_t k = 1; k <= K; ++k) pi.emplace_back(V.dim(), L, k);
    for (const auto& m : field(j, "maps")) {
        auto k = size_field(m, "arity"), r = size_field(m, "position");
        if (k == 0 || k > K || r == 0 || r > k) bad("map arity or position out of range");
        const auto& lt = field(m, "labels");
        if (!lt.is_string()) bad("labels must be a comma-separated tuple");
        auto rest = L.parse_tuple(lt.get<std::string>());
        if (rest.size() != k - 1) bad("label tuple has the wrong length");
        auto f = graded_map_from_json(m, std::vector<GradedSpace>(k, V), V, int(k) - 2);
        pi[k - 1].component(r - 1, L.encode(rest)) = f.dense();
    }
    return HomotopyMda(V, L, std::move(pi));
}

Json to_json(const CertificateReport& r) {
    Json failures = Json::array();
    for (const auto& f : r.failures) {
        Json lhs = Json::array(), rhs = Json::array();
        for (const auto& s : f.lhs) lhs.push_back(s.str());
        for (const auto& s : f.rhs) rhs.push_back(s.str());
        failures.push_back({{"identity", f.identity},
                            {"labels", f.labels},
                            {"basis", f.basis},
                            {"basis_names", f.basis_names},
                            {"lhs", lhs},
                            {"rhs", rhs}});
    }
    return {{"check", r.check}, {"passed", r.passed()}, {"checked", r.checked}, {"failures", failures}, {"notes", r.notes}};
}

CertificateReport report_from_json(const Json& j) {
    CertificateReport r(field(j, "check").get<std::string>());
    r.checked = size_field(j, "checked");
    for (const auto& n : field(j, "notes")) r.notes.push_back(n.get<std::string>());
    for (const auto& fj : field(j, "failures")) {
        Failure f;
        f.identity = field(fj, "identity").get<std::string>();
        f.labels = strings(fj, "labels");
        for (const auto& b : field(fj, "basis")) f.basis.push_back(b.get<std::size_t>());
        f.basis_names = strings(fj, "basis_names");
        for (const auto& s : field(fj, "lhs")) f.lhs.push_back(scalar_from_json(s));
        for (const auto& s : field(fj, "rhs")) f.rhs.push_back(scalar_from_json(s));
        r.failures.push_back(std::move(f));
    }
    return r;
}

Json to_json(const CohomologyReport& r) {
    return {{"complex", r.complex},
            {"degree", r.degree},
            {"dim_cochain", r.dim_cochain},
            {"dim_kernel", r.dim_kernel},
            {"dim_image_prev", r.dim_image_prev},
            {"dim_cohomology", r.dim_cohomology},
            {"delta_squared_zero", r.delta_squared_zero}};
}

} // namespace mrb
