#pragma once

#include "leibcheck/catalogue.hpp"
#include "leibcheck/isomorphism.hpp"

#include <optional>
#include <string>
#include <vector>

namespace leibcheck {

// One side of a fixture: either a catalogue entry at a parameter point or an
// inline product table (used for the proof templates).
struct AlgebraRef {
    std::optional<std::string> entry;
    ParamAssignment params;
    std::vector<EntryProduct> products;
    std::string label;  // display name
};

enum class FixtureMode { Exact, FiniteField };

struct WitnessFixture {
    std::string name;
    AlgebraRef source, target;
    FixtureMode mode = FixtureMode::Exact;
    std::vector<std::vector<CoeffExpr>> matrix;  // rows; sqrt(...) allowed
    std::vector<std::uint64_t> primes;           // finite-field mode
    bool expect_ok = true;
    std::string note;
};

std::vector<WitnessFixture> parse_fixtures(const std::string& text);
std::vector<WitnessFixture> load_fixtures(const std::string& path);

LeibnizAlgebra<Gaussian> build_algebra(const Catalogue& cat, const AlgebraRef& ref);
Matrix<QuadExt> fixture_matrix(const WitnessFixture& f);

struct FixtureResult {
    std::string name;
    bool expect_ok = true;
    bool ok = false;            // witness verified (exact) or found mod every prime
    bool exact = false;         // certificate rather than evidence
    std::string detail;

    bool matches() const { return ok == expect_ok; }
};

FixtureResult check_fixture(const Catalogue& cat, const WitnessFixture& f, const SearchConfig& cfg = {});

inline LeibnizAlgebra<QuadExt> to_quad_algebra(const LeibnizAlgebra<Gaussian>& a) {
    return map_algebra(a, QuadExt(), [](const Gaussian& g) { return QuadExt(g); });
}

// Same as build_algebra, but inline tables may use sqrt(...) coefficients.
LeibnizAlgebra<QuadExt> build_algebra_ext(const Catalogue& cat, const AlgebraRef& ref);

}  // namespace leibcheck
