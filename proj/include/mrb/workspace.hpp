#pragma once

#include "mrb/json_io.hpp"

#include <filesystem>
#include <map>

namespace mrb {

// Directory of <name>.json fixtures, each tagged with "kind". String values under
// "algebra", "bimodule", "base", "source" and "target" refer to other entries.
class Workspace {
  public:
    Workspace() = default;
    // Reads every *.json file; throws ParseError on malformed files and UnknownTarget on dangling references.
    static Workspace load(const std::filesystem::path& dir);

    const std::filesystem::path& dir() const noexcept { return dir_; }
    bool contains(const std::string& name) const { return entries_.count(name) > 0; }
    std::vector<std::string> names() const;
    const std::string& kind(const std::string& name) const;
    // Entry with references replaced by the referenced objects.
    Json resolved(const std::string& name) const;

    Algebra algebra(const std::string& name) const;
    Bimodule bimodule(const std::string& name) const;
    OperatorFamily family(const std::string& name) const;
    RMatrixFamily rmatrix(const std::string& name) const;
    MatchingDendriform dendriform(const std::string& name) const;
    MrrbaDeformation deformation(const std::string& name) const;
    AInfinity a_infinity(const std::string& name) const;
    HomotopyMrrba homotopy_mrrba(const std::string& name) const;
    HomotopyMda homotopy_mda(const std::string& name) const;

    // Writes <dir>/<name>.json through a temporary file and a rename.
    void put(const std::string& name, const Json& entry);

  private:
    Json resolve(const Json& j, std::vector<std::string>& stack) const;
    const Json& raw(const std::string& name) const;

    std::filesystem::path dir_;
    std::map<std::string, Json> entries_;
    std::map<std::string, std::string> kinds_;
};

// Atomic replace of `path` with `text`.
void write_atomically(const std::filesystem::path& path, const std::string& text);

} // namespace mrb
