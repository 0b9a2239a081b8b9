#pragma once

#include "leibcheck/gaussian.hpp"
#include "leibcheck/prime_field.hpp"
#include "leibcheck/quadext.hpp"
#include "leibcheck/rational.hpp"

#include <concepts>
#include <cstdint>
#include <optional>

namespace leibcheck {

template <class F>
concept FieldElement = requires(F a, const F& b, long k) {
    { a + b } -> std::convertible_to<F>;
    { a - b } -> std::convertible_to<F>;
    { a * b } -> std::convertible_to<F>;
    { a / b } -> std::convertible_to<F>;
    { -a } -> std::convertible_to<F>;
    { a == b } -> std::convertible_to<bool>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.zero_like() } -> std::convertible_to<F>;
    { a.one_like() } -> std::convertible_to<F>;
    { a.from_int(k) } -> std::convertible_to<F>;
};

struct SquareRoot {
    bool in_base = false;  // root found inside Q(i)
    QuadExt value;         // the root, possibly the generator sqrt(a)
};

// d = s^2 * g with g a Gaussian integer free of square factors (trial
// division on its norm) and normalized up to sign, so equal fields get equal
// generators.
struct RadicandForm {
    Gaussian s;
    Gaussian g;
};
RadicandForm reduce_radicand(const Gaussian& d);

// Square root of a nonzero Gaussian rational. Falls back to s*sqrt(g) from
// reduce_radicand when a is not a square in Q(i).
SquareRoot sqrt_in_field(const Gaussian& a);

// Square root of a Gaussian rational inside Q(i) only.
std::optional<Gaussian> gaussian_sqrt(const Gaussian& a);

// Ring map Z[1/m][i] -> GF(p), i -> sqrt_minus_one(p).
PrimeFieldElem reduce_mod_p(const Gaussian& a, std::uint64_t p);

// Embeddings used when one algebra must be compared over a larger field.
inline QuadExt to_quad(const Gaussian& g) { return QuadExt(g); }

}  // namespace leibcheck
