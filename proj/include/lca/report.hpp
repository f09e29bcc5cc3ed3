#pragma once

#include <string>
#include <vector>

#include "lca/dsl.hpp"

namespace lca {

// One verification-ledger line: a claim from the classification literature
// checked against an algebra or map declared in the input file.
struct LedgerEntry {
    std::string claim;
    std::string paper_anchor;
    std::string bounds;  // "exact" or the truncation used
    bool pass = false;
};

struct ReportOptions {
    int deg_d = 3;
    int deg_x = 3;
};

// Runs every applicable claim against the declarations of f, in source
// order. Deterministic: same file and options give the same entries.
std::vector<LedgerEntry> run_ledger(const SourceFile& f, const ReportOptions& opt = {});

// Rank-1 algebra with [L_lam L] = (D + 2 lam) L.
bool is_virasoro(const ConformalAlgebra& A);

// True iff the generator graph with edges on nonzero brackets is connected
// (a cheap indecomposability test gating the simple-algebra claims).
bool bracket_connected(const ConformalAlgebra& A);

// FNV-1a 64-bit hex digest of the input text, for report provenance.
std::string source_digest(const std::string& text);

}  // namespace lca
