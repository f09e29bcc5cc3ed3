#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lca/confalgebra.hpp"
#include "lca/confmap.hpp"
#include "lca/liealgebra.hpp"

namespace lca {

struct Diagnostic {
    enum Severity { WARNING, ERROR };
    Severity severity = ERROR;
    std::string message;
    int line = 0;    // 1-based
    int column = 0;  // 1-based
    std::string snippet;

    std::string to_string() const;
};

// Parsed .lca file: named declarations in source order. Declarations may
// reference only earlier names.
struct SourceFile {
    struct Declaration {
        enum Kind { LIEALG, CONFALG, MAP, MODMAP } kind;
        std::string name;
    };
    struct MapDecl {
        std::string from, to;
        ConformalMap map;
    };
    struct ModMapDecl {
        std::string from, to;
        ModuleMap map;
    };

    std::vector<Declaration> order;
    std::map<std::string, LieAlgebra> liealgs;
    std::map<std::string, ConformalAlgebra> confalgs;
    std::map<std::string, MapDecl> maps;
    std::map<std::string, ModMapDecl> modmaps;

    const ConformalAlgebra* confalg(const std::string& name) const;
    const ModMapDecl* modmap(const std::string& name) const;
};

struct ParseResult {
    std::optional<SourceFile> file;
    // Warnings on success, at least one error on failure.
    std::vector<Diagnostic> diagnostics;

    bool ok() const { return file.has_value(); }
};

ParseResult parse_source(const std::string& text);

// Canonical text form; parse_source(render_source(f)) reconstructs an
// equal file with zero diagnostics.
std::string render_source(const SourceFile& f);

std::string render_liealg(const std::string& name, const LieAlgebra& g);
std::string render_confalg(const std::string& name, const ConformalAlgebra& a);
std::string render_map(const std::string& name, const SourceFile::MapDecl& d,
                       const ConformalAlgebra& domain, const ConformalAlgebra& target);
std::string render_modmap(const std::string& name, const SourceFile::ModMapDecl& d,
                          const ConformalAlgebra& domain, const ConformalAlgebra& target);

}  // namespace lca
