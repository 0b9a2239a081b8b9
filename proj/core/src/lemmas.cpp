#include "leibcheck/lemmas.hpp"

#include "json.hpp"

namespace leibcheck {

namespace {

bool applicable(const InvariantSignature& sig) {
    return sig.dim_leib == 1 && !sig.lower_central_dims.empty() && sig.lower_central_dims.back() == 0;
}

}  // namespace

long lemma4_bound(long k) { return (k * k - k + 2) / 2; }
long lemma5_bound_i(long k, long t) { return t + (k * k + k + 2) / 2; }
long lemma5_bound_ii(long k, long t) { return t + (k * k + k) / 2; }

Lemma4Result lemma4_check(const InvariantSignature& sig) {
    Lemma4Result r;
    r.applicable = applicable(sig);
    long k = static_cast<long>(sig.n) - static_cast<long>(sig.dim_center);
    r.bound = lemma4_bound(k);
    if (r.applicable) r.holds = static_cast<long>(sig.dim_power(2)) <= r.bound;
    return r;
}

// The Leib-inside-A^3 test is dim(Leib cap A^3) == dim Leib.
Lemma5Result lemma5_check(const InvariantSignature& sig) {
    Lemma5Result r;
    r.applicable = applicable(sig);
    long n = static_cast<long>(sig.n);
    long k = n - static_cast<long>(sig.dim_power(2));
    long t = static_cast<long>(sig.dim_power(3));
    r.leib_in_A3 = sig.dim_leib_cap_A3 == sig.dim_leib;
    r.bound_i = lemma5_bound_i(k, t);
    r.bound_ii = lemma5_bound_ii(k, t);
    if (r.applicable) {
        r.holds = n <= r.bound_i;
        if (r.leib_in_A3) r.holds = r.holds && n <= r.bound_ii;
    }
    return r;
}

BoundsReport bounds_report(const InvariantSignature& sig) {
    BoundsReport b;
    b.n = static_cast<long>(sig.n);
    b.k4 = b.n - static_cast<long>(sig.dim_center);
    b.k5 = b.n - static_cast<long>(sig.dim_power(2));
    b.t = static_cast<long>(sig.dim_power(3));
    b.lemma4 = lemma4_check(sig);
    b.lemma5 = lemma5_check(sig);
    return b;
}

std::string BoundsReport::to_json() const {
    nlohmann::json j{{"n", n},
                     {"k_center", k4},
                     {"k_A2", k5},
                     {"t", t},
                     {"lemma4", {{"applicable", lemma4.applicable}, {"bound", lemma4.bound}, {"holds", lemma4.holds}}},
                     {"lemma5",
                      {{"applicable", lemma5.applicable},
                       {"leib_in_A3", lemma5.leib_in_A3},
                       {"bound_i", lemma5.bound_i},
                       {"bound_ii", lemma5.bound_ii},
                       {"holds", lemma5.holds}}}};
    return j.dump();
}

}  // namespace leibcheck
