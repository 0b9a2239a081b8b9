#pragma once

#include "leibcheck/catalogue.hpp"

#include <cstdint>
#include <random>
#include <string>

namespace testing_support {

inline const leibcheck::Catalogue& catalogue() {
    static const leibcheck::Catalogue cat = leibcheck::load_catalogue(std::string(LEIBCHECK_DATA_DIR) + "/catalogue.json");
    return cat;
}

// "A_5:alpha=2" or "A_1"
inline leibcheck::LeibnizAlgebra<leibcheck::Gaussian> algebra(const std::string& ref) {
    auto [name, params] = leibcheck::parse_entry_ref(ref);
    return leibcheck::instantiate(catalogue().entry(name), params, catalogue().dimension);
}

// Random invertible matrix with small Gaussian integer entries: a product of a
// unit lower and a unit upper triangular factor, so invertibility is structural.
inline leibcheck::Matrix<leibcheck::Gaussian> random_invertible(std::size_t n, std::mt19937_64& rng) {
    using leibcheck::Gaussian;
    using leibcheck::Rational;
    auto small = [&] {
        long re = static_cast<long>(rng() % 5) - 2;
        long im = rng() % 4 == 0 ? static_cast<long>(rng() % 3) - 1 : 0;
        return Gaussian(Rational(re), Rational(im));
    };
    leibcheck::Matrix<Gaussian> lo = leibcheck::Matrix<Gaussian>::identity(n, Gaussian());
    leibcheck::Matrix<Gaussian> up = lo;
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            if (r > c) lo(r, c) = small();
            if (r < c) up(r, c) = small();
        }
    std::size_t k = rng() % n;
    up(k, k) = Gaussian(Rational(static_cast<long>(rng() % 3) + 1), Rational(rng() % 2 == 0 ? 0 : 1));
    return lo * up;
}

}  // namespace testing_support
