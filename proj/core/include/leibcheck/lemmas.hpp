#pragma once

#include "leibcheck/invariants.hpp"

#include <string>

namespace leibcheck {

struct Lemma4Result {
    bool applicable = false;
    long bound = 0;  // (k^2 - k + 2) / 2
    bool holds = true;
};

struct Lemma5Result {
    bool applicable = false;
    bool leib_in_A3 = false;
    long bound_i = 0;   // t + (k^2 + k + 2) / 2
    long bound_ii = 0;  // t + (k^2 + k) / 2, only meaningful when Leib is inside A^3
    bool holds = true;
};

struct BoundsReport {
    long n = 0;
    long k4 = 0;  // n - dim Z
    long k5 = 0;  // n - dim A^2
    long t = 0;   // dim A^3
    Lemma4Result lemma4;
    Lemma5Result lemma5;

    std::string to_json() const;
};

// Plain formulas, exposed so the paper's worked instances can be replayed.
long lemma4_bound(long k);
long lemma5_bound_i(long k, long t);
long lemma5_bound_ii(long k, long t);

// Applicability: nilpotent and dim Leib = 1.
Lemma4Result lemma4_check(const InvariantSignature& sig);
Lemma5Result lemma5_check(const InvariantSignature& sig);
BoundsReport bounds_report(const InvariantSignature& sig);

}  // namespace leibcheck
