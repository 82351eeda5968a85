#include "mrb/workspace.hpp"

#include "mrb/error.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unistd.h>

namespace mrb {

namespace {

constexpr const char* reference_keys[] = {"algebra", "bimodule", "base", "source", "target"};

std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw Error(ErrorKind::ParseError, "cannot read " + p.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

template <class F>
auto parsed(const std::string& name, F&& f) {
    try {
        return f();
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::ParseError, name + ": " + e.what());
    }
}

} // namespace

void write_atomically(const std::filesystem::path& path, const std::string& text) {
    auto tmp = path;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error(ErrorKind::ParseError, "cannot write " + tmp.string());
        out << text;
        out.flush();
        if (!out) throw Error(ErrorKind::ParseError, "write failed for " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw Error(ErrorKind::ParseError, "cannot replace " + path.string() + ": " + ec.message());
    }
}

Workspace Workspace::load(const std::filesystem::path& dir) {
    Workspace ws;
    ws.dir_ = dir;
    if (!std::filesystem::is_directory(dir)) throw Error(ErrorKind::ParseError, "workspace " + dir.string() + " is not a directory");
    for (const auto& e : std::filesystem::directory_iterator(dir)) {
        if (!e.is_regular_file() || e.path().extension() != ".json") continue;
        auto name = e.path().stem().string();
        Json j;
        try {
            j = Json::parse(read_file(e.path()));
        } catch (const nlohmann::json::exception& ex) {
            throw Error(ErrorKind::ParseError, e.path().filename().string() + ": " + ex.what());
        }
        if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
            throw Error(ErrorKind::ParseError, e.path().filename().string() + ": entry needs a string \"kind\"");
        ws.kinds_[name] = j["kind"].get<std::string>();
        ws.entries_[name] = std::move(j);
    }
    for (const auto& [name, j] : ws.entries_) ws.resolved(name);
    return ws;
}

std::vector<std::string> Workspace::names() const {
    std::vector<std::string> out;
    for (const auto& [name, j] : entries_) out.push_back(name);
    return out;
}

const Json& Workspace::raw(const std::string& name) const {
    auto it = entries_.find(name);
    if (it == entries_.end()) throw Error(ErrorKind::UnknownTarget, "no entry named '" + name + "'");
    return it->second;
}

const std::string& Workspace::kind(const std::string& name) const {
    raw(name);
    return kinds_.at(name);
}

Json Workspace::resolve(const Json& j, std::vector<std::string>& stack) const {
    Json out = j;
    for (const char* key : reference_keys) {
        if (!out.contains(key) || !out[key].is_string()) continue;
        auto ref = out[key].get<std::string>();
        if (std::find(stack.begin(), stack.end(), ref) != stack.end())
            throw Error(ErrorKind::ParseError, "reference cycle through '" + ref + "'");
        stack.push_back(ref);
        out[key] = resolve(raw(ref), stack);
        stack.pop_back();
    }
    return out;
}

Json Workspace::resolved(const std::string& name) const {
    std::vector<std::string> stack{name};
    return resolve(raw(name), stack);
}

namespace {

void expect(const std::string& name, const std::string& kind, std::initializer_list<const char*> allowed) {
    for (const char* a : allowed)
        if (kind == a) return;
    std::string list;
    for (const char* a : allowed) list += std::string(list.empty() ? "" : ", ") + a;
    throw Error(ErrorKind::UnknownChecker, "'" + name + "' is a " + kind + ", expected " + list);
}

} // namespace

Algebra Workspace::algebra(const std::string& name) const {
    const auto& k = kind(name);
    expect(name, k, {"algebra", "mrrba", "rmatrix"});
    auto j = resolved(name);
    return parsed(name, [&] { return algebra_from_json(k == "algebra" ? j : j.at("algebra")); });
}

Bimodule Workspace::bimodule(const std::string& name) const {
    const auto& k = kind(name);
    expect(name, k, {"bimodule", "mrrba"});
    auto j = resolved(name);
    return parsed(name, [&] {
        if (k == "mrrba") return family_from_json(j).module();
        std::size_t a = j.contains("algebra") ? algebra_from_json(j.at("algebra")).dim() : j.at("algebra_dim").get<std::size_t>();
        return bimodule_from_json(j, a);
    });
}

OperatorFamily Workspace::family(const std::string& name) const {
    expect(name, kind(name), {"mrrba"});
    auto j = resolved(name);
    return parsed(name, [&] { return family_from_json(j); });
}

RMatrixFamily Workspace::rmatrix(const std::string& name) const {
    expect(name, kind(name), {"rmatrix"});
    auto j = resolved(name);
    return parsed(name, [&] { return rmatrix_from_json(j); });
}

MatchingDendriform Workspace::dendriform(const std::string& name) const {
    expect(name, kind(name), {"mda"});
    auto j = resolved(name);
    return parsed(name, [&] { return dendriform_from_json(j); });
}

MrrbaDeformation Workspace::deformation(const std::string& name) const {
    expect(name, kind(name), {"deformation"});
    auto j = resolved(name);
    return parsed(name, [&] { return deformation_from_json(j, family_from_json(j.at("base"))); });
}

AInfinity Workspace::a_infinity(const std::string& name) const {
    expect(name, kind(name), {"a-infinity"});
    auto j = resolved(name);
    return parsed(name, [&] { return a_infinity_from_json(j); });
}

HomotopyMrrba Workspace::homotopy_mrrba(const std::string& name) const {
    expect(name, kind(name), {"homotopy-mrrba"});
    auto j = resolved(name);
    return parsed(name, [&] { return homotopy_mrrba_from_json(j); });
}

HomotopyMda Workspace::homotopy_mda(const std::string& name) const {
    expect(name, kind(name), {"homotopy-mda"});
    auto j = resolved(name);
    return parsed(name, [&] { return homotopy_mda_from_json(j); });
}

void Workspace::put(const std::string& name, const Json& entry) {
    if (name.empty() || name.find('/') != std::string::npos || name.front() == '.')
        throw Error(ErrorKind::ParseError, "invalid entry name '" + name + "'");
    if (!entry.contains("kind")) throw Error(ErrorKind::ParseError, "entry needs a kind");
    write_atomically(dir_ / (name + ".json"), entry.dump(2) + "\n");
    entries_[name] = entry;
    kinds_[name] = entry["kind"].get<std::string>();
}

} // namespace mrb
