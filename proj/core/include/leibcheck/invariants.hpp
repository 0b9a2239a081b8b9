#pragma once

#include "leibcheck/algebra.hpp"

#include <string>
#include <vector>

namespace leibcheck {

struct InvariantSignature {
    std::size_t n = 0;
    std::vector<std::size_t> lower_central_dims;
    std::vector<std::size_t> derived_dims;
    std::size_t dim_leib = 0;
    std::size_t dim_center = 0;
    std::size_t dim_left_ann = 0;
    std::size_t dim_right_ann = 0;
    std::size_t dim_center_cap_A2 = 0;
    std::size_t dim_leib_cap_A3 = 0;
    std::size_t dim_A2A = 0;   // dim [A^2, A]
    std::size_t dim_A2A2 = 0;  // dim [A^2, A^2]
    std::size_t dim_der = 0;   // dim Der(A)
    bool is_lie = false;

    // dim A^i for i >= 1, 0 beyond the computed series.
    std::size_t dim_power(std::size_t i) const {
        if (i == 0 || i > lower_central_dims.size()) return 0;
        return lower_central_dims[i - 1];
    }

    friend bool operator==(const InvariantSignature&, const InvariantSignature&) = default;

    // Name of the first differing field, or empty.
    std::string first_difference(const InvariantSignature& other) const;
    std::string to_string() const;
    std::string to_json() const;  // compact JSON object
};

template <FieldElement F>
Subspace<F> power_subspace(const SeriesReport<F>& lcs, std::size_t i, std::size_t n, const F& proto) {
    if (i >= 1 && i <= lcs.subspaces.size()) return lcs.subspaces[i - 1];
    return Subspace<F>(n, proto);
}

// Derivations D with D[x,y] = [Dx,y] + [x,Dy]; unknown d(s,i) is the e_s
// coordinate of D e_i, one equation per basis pair and output coordinate.
template <FieldElement F>
std::size_t derivation_dim(const LeibnizAlgebra<F>& a) {
    const std::size_t n = a.dim();
    const F& z = a.zero();
    auto var = [n](std::size_t s, std::size_t i) { return s * n + i; };
    Matrix<F> eq(n * n * n, n * n, z);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const std::size_t row = (i * n + j) * n + k;
                for (std::size_t s = 0; s < n; ++s) {
                    eq(row, var(k, s)) += a.product(i, j)[s];
                    eq(row, var(s, i)) -= a.product(s, j)[k];
                    eq(row, var(s, j)) -= a.product(i, s)[k];
                }
            }
    return n * n - rank(eq);
}

template <FieldElement F>
InvariantSignature signature(const LeibnizAlgebra<F>& a) {
    InvariantSignature s;
    const std::size_t n = a.dim();
    s.n = n;
    auto lcs = series(a, SeriesKind::LowerCentral);
    auto der = series(a, SeriesKind::Derived);
    s.lower_central_dims = lcs.dims;
    s.derived_dims = der.dims;
    auto full = Subspace<F>::full(n, a.zero());
    Subspace<F> a2 = subspace_product(a, full, full);
    Subspace<F> a3 = subspace_product(a, full, a2);
    auto leib = leib_ideal(a);
    auto ann = annihilators(a);
    s.dim_leib = leib.dim();
    s.dim_center = ann.center.dim();
    s.dim_left_ann = ann.left.dim();
    s.dim_right_ann = ann.right.dim();
    s.dim_center_cap_A2 = intersection(ann.center, a2).dim();
    s.dim_leib_cap_A3 = intersection(leib, a3).dim();
    s.dim_A2A = subspace_product(a, a2, full).dim();
    s.dim_A2A2 = subspace_product(a, a2, a2).dim();
    s.dim_der = derivation_dim(a);
    s.is_lie = leib.dim() == 0;
    return s;
}

}  // namespace leibcheck
