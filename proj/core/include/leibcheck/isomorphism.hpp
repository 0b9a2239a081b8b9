#pragma once

#include "leibcheck/invariants.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace leibcheck {

template <FieldElement F>
struct WitnessCheck {
    bool ok = true;
    bool singular = false;
    std::size_t i = 0, j = 0;  // first failing basis pair, 0-based
    Vec<F> defect;
};

// P is a homomorphism A -> B when P [e_i,e_j]_A = [P e_i, P e_j]_B for all i, j;
// columns of P are the images of A's basis in B's coordinates.
template <FieldElement F>
WitnessCheck<F> verify_witness(const LeibnizAlgebra<F>& a, const LeibnizAlgebra<F>& b, const Matrix<F>& p) {
    const std::size_t n = a.dim();
    if (b.dim() != n || p.rows() != n || p.cols() != n)
        throw Error(Errc::DimensionMismatch, "witness shape does not match the algebras");
    WitnessCheck<F> res;
    if (!is_invertible(p)) {
        res.ok = false;
        res.singular = true;
        return res;
    }
    std::vector<Vec<F>> cols;
    for (std::size_t j = 0; j < n; ++j) cols.push_back(p.column(j));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec<F> lhs = p.apply(a.product(i, j));
            Vec<F> rhs = b.bracket(cols[i], cols[j]);
            bool bad = false;
            for (std::size_t k = 0; k < n; ++k) {
                lhs[k] -= rhs[k];
                if (!lhs[k].is_zero()) bad = true;
            }
            if (bad) {
                res.ok = false;
                res.i = i;
                res.j = j;
                res.defect = std::move(lhs);
                return res;
            }
        }
    return res;
}

using PMatrix = Matrix<PrimeFieldElem>;
using PAlgebra = LeibnizAlgebra<PrimeFieldElem>;

PAlgebra reduce_algebra(const LeibnizAlgebra<Gaussian>& a, std::uint64_t p);

struct SearchConfig {
    std::uint64_t prime = 13;
    std::uint64_t lift_height = 6;      // |a|, |b| bound for lifted numerators
    std::uint64_t lift_denominator = 4; // largest denominator tried when lifting
    std::uint64_t lift_budget = 20000;  // candidate values tried per witness
    std::uint64_t candidate_cap = 10'000'000;
    bool adapted = true;                // block-triangular unknowns w.r.t. the flags
    std::size_t max_witnesses = 1;      // collected in enumeration order
    unsigned threads = 0;               // 0: LEIBCHECK_THREADS or hardware concurrency
};

enum class SearchStatus { Found, Exhausted, CapReached, SignatureMismatch };

const char* search_status_name(SearchStatus s);

struct SearchResult {
    SearchStatus status = SearchStatus::Exhausted;
    std::vector<PMatrix> witnesses;  // original bases, enumeration order
    std::uint64_t candidates = 0;
    std::string reason;

    std::optional<PMatrix> first() const {
        if (witnesses.empty()) return std::nullopt;
        return witnesses.front();
    }
};

// Flag-adapted search for isomorphisms A -> B over GF(p).
SearchResult adapted_search(const LeibnizAlgebra<Gaussian>& a, const LeibnizAlgebra<Gaussian>& b,
                            const SearchConfig& cfg);

// Lift a GF(p) witness to small Gaussian rationals; returned only when it
// verifies exactly over Q(i).
std::optional<Matrix<Gaussian>> lift_witness(const PMatrix& w, const LeibnizAlgebra<Gaussian>& a,
                                             const LeibnizAlgebra<Gaussian>& b, const SearchConfig& cfg);

enum class IsoVerdict { Certified, FiniteFieldEvidence, Inconclusive, NonIsomorphic };

const char* iso_verdict_name(IsoVerdict v);

struct IsoOutcome {
    IsoVerdict verdict = IsoVerdict::Inconclusive;
    std::optional<Matrix<Gaussian>> exact;       // when certified
    std::vector<std::pair<std::uint64_t, PMatrix>> evidence;  // prime, witness
    std::uint64_t candidates = 0;
    std::string note;
};

// Search over cfg.prime (and a second prime when lifting fails), then lift.
IsoOutcome search_and_certify(const LeibnizAlgebra<Gaussian>& a, const LeibnizAlgebra<Gaussian>& b,
                              SearchConfig cfg, std::size_t lift_attempts = 8);

// Smallest prime > p that is 1 mod 4.
std::uint64_t next_prime_1mod4(std::uint64_t p);

unsigned configured_threads();

}  // namespace leibcheck
