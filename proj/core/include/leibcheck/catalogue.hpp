#pragma once

#include "leibcheck/bilinear.hpp"
#include "leibcheck/expr.hpp"
#include "leibcheck/invariants.hpp"
#include "leibcheck/lemmas.hpp"

#include <optional>
#include <string>
#include <vector>

namespace leibcheck {

// Hypotheses stated by a classification theorem; unset fields are not claimed.
struct ClaimedSignature {
    std::optional<std::size_t> dim_A2, dim_A3, dim_A4, dim_leib, dim_center;
    std::optional<bool> leib_equals_center;
};

struct Theorem {
    std::string id;
    std::string title;  // short human description of the hypotheses
    ClaimedSignature claimed;
};

// Each constraint is a list of expressions that must not vanish together;
// a single-element list is the ordinary "expr != 0".
using Constraint = std::vector<CoeffExpr>;

struct EntryProduct {
    std::size_t left = 0;   // 1-based
    std::size_t right = 0;  // 1-based
    std::vector<std::pair<std::size_t, CoeffExpr>> terms;  // (output index 1-based, coefficient)
};

struct IsoCriteria {
    std::string text;
    std::optional<std::string> relation;  // e.g. "alpha2^4 = alpha1^4" in plain words
};

struct CatalogueEntry {
    std::string name;
    std::string theorem_id;
    std::vector<std::string> params;
    std::vector<Constraint> constraints;
    std::vector<EntryProduct> products;
    std::optional<IsoCriteria> iso_criteria;
    std::vector<std::string> flags;
};

struct Catalogue {
    std::size_t dimension = 5;
    std::vector<Theorem> theorems;
    std::vector<CatalogueEntry> entries;

    const CatalogueEntry& entry(const std::string& name) const;
    const Theorem& theorem(const std::string& id) const;
};

// Names allowed to repeat a printed label; they are stored disambiguated.
bool is_documented_duplicate(const std::string& name);

Catalogue parse_catalogue(const std::string& text);
std::string serialize_catalogue(const Catalogue& cat);
Catalogue load_catalogue(const std::string& path);

// FNV-1a 64 over the exact file text, hex encoded.
std::string content_digest(const std::string& text);

bool admissible(const CatalogueEntry& e, const ParamAssignment& p);
std::vector<ParamAssignment> sample_params(const CatalogueEntry& e, std::size_t count = 3);
LeibnizAlgebra<Gaussian> instantiate(const CatalogueEntry& e, const ParamAssignment& p, std::size_t n = 5);

struct CheckResult {
    std::string name;
    bool pass = true;
    std::string detail;
};

struct EntryReport {
    std::string entry;
    ParamAssignment params;
    std::vector<CheckResult> checks;
    InvariantSignature signature;
    BoundsReport bounds;
    std::optional<CanonicalKind> v_form;

    bool passed() const;
};

EntryReport verify_entry(const Catalogue& cat, const CatalogueEntry& e, const ParamAssignment& p);

// "A_5:alpha=2,beta=1" -> entry name and assignment
std::pair<std::string, ParamAssignment> parse_entry_ref(const std::string& ref);

}  // namespace leibcheck
