#pragma once

#include "leibcheck/linalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace leibcheck {

template <FieldElement F>
struct Product {
    std::size_t left = 0;   // 0-based
    std::size_t right = 0;  // 0-based
    Vec<F> value;           // coordinates of [e_left, e_right]
};

// Structure constants c_{ij}^k with [e_i, e_j] = sum_k c_{ij}^k e_k.
// Only nonzero products are kept in the sparse list; the dense table serves
// evaluation.
template <FieldElement F>
class LeibnizAlgebra {
public:
    LeibnizAlgebra() = default;

    LeibnizAlgebra(std::size_t n, const F& proto, const std::vector<Product<F>>& products)
        : n_(n), zero_(proto.zero_like()), table_(n * n, Vec<F>(n, zero_)) {
        for (const auto& p : products) {
            if (p.left >= n || p.right >= n)
                throw Error(Errc::IndexOutOfRange, "product index outside 1.." + std::to_string(n));
            if (p.value.size() != n) throw Error(Errc::DimensionMismatch, "product vector length");
            auto& slot = table_[p.left * n + p.right];
            for (std::size_t k = 0; k < n; ++k) slot[k] += p.value[k];
        }
        rebuild_sparse();
    }

    static LeibnizAlgebra abelian(std::size_t n, const F& proto) { return LeibnizAlgebra(n, proto, {}); }

    // Build directly from a dense table indexed [i*n + j].
    static LeibnizAlgebra from_table(std::size_t n, const F& proto, std::vector<Vec<F>> table) {
        LeibnizAlgebra a;
        a.n_ = n;
        a.zero_ = proto.zero_like();
        a.table_ = std::move(table);
        a.rebuild_sparse();
        return a;
    }

    std::size_t dim() const { return n_; }
    const F& zero() const { return zero_; }
    const Vec<F>& product(std::size_t i, std::size_t j) const { return table_[i * n_ + j]; }
    const std::vector<Product<F>>& products() const { return sparse_; }

    Vec<F> bracket(const Vec<F>& x, const Vec<F>& y) const {
        if (x.size() != n_ || y.size() != n_) throw Error(Errc::DimensionMismatch, "bracket operand length");
        Vec<F> out(n_, zero_);
        for (const auto& p : sparse_) {
            const F& a = x[p.left];
            const F& b = y[p.right];
            if (a.is_zero() || b.is_zero()) continue;
            F ab = a * b;
            for (std::size_t k = 0; k < n_; ++k)
                if (!p.value[k].is_zero()) out[k] += ab * p.value[k];
        }
        return out;
    }

    friend bool operator==(const LeibnizAlgebra& a, const LeibnizAlgebra& b) {
        if (a.n_ != b.n_) return false;
        for (std::size_t k = 0; k < a.table_.size(); ++k)
            for (std::size_t m = 0; m < a.n_; ++m)
                if (!(a.table_[k][m] == b.table_[k][m])) return false;
        return true;
    }

    // Human-readable table, 1-based: "[e1,e2]=e3; [e2,e1]=-e3".
    std::string to_string() const {
        std::string s;
        for (const auto& p : sparse_) {
            if (!s.empty()) s += "; ";
            s += "[e" + std::to_string(p.left + 1) + ",e" + std::to_string(p.right + 1) + "]=";
            bool first = true;
            for (std::size_t k = 0; k < n_; ++k) {
                if (p.value[k].is_zero()) continue;
                if (!first) s += " + ";
                first = false;
                s += "(" + p.value[k].to_string() + ")e" + std::to_string(k + 1);
            }
        }
        return s.empty() ? "abelian" : s;
    }

private:
    void rebuild_sparse() {
        sparse_.clear();
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                if (!is_zero_vector(table_[i * n_ + j])) sparse_.push_back({i, j, table_[i * n_ + j]});
    }

    std::size_t n_ = 0;
    F zero_{};
    std::vector<Vec<F>> table_;
    std::vector<Product<F>> sparse_;
};

template <FieldElement G, FieldElement F, class Fn>
LeibnizAlgebra<G> map_algebra(const LeibnizAlgebra<F>& a, const G& proto, Fn&& fn) {
    std::vector<Product<G>> prods;
    for (const auto& p : a.products()) {
        Vec<G> v;
        v.reserve(a.dim());
        for (const auto& x : p.value) v.push_back(fn(x));
        prods.push_back({p.left, p.right, std::move(v)});
    }
    return LeibnizAlgebra<G>(a.dim(), proto, prods);
}

template <FieldElement F>
struct LeibnizCheck {
    bool ok = true;
    std::size_t i = 0, j = 0, k = 0;  // first violating triple, 0-based
    Vec<F> defect;
};

// [e_i,[e_j,e_k]] = [[e_i,e_j],e_k] + [e_j,[e_i,e_k]] on every basis triple.
template <FieldElement F>
LeibnizCheck<F> check_leibniz(const LeibnizAlgebra<F>& a) {
    const std::size_t n = a.dim();
    std::vector<Vec<F>> basis;
    for (std::size_t i = 0; i < n; ++i) basis.push_back(unit_vector(n, i, a.zero()));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec<F> lhs = a.bracket(basis[i], a.product(j, k));
                Vec<F> r1 = a.bracket(a.product(i, j), basis[k]);
                Vec<F> r2 = a.bracket(basis[j], a.product(i, k));
                bool bad = false;
                for (std::size_t m = 0; m < n; ++m) {
                    lhs[m] -= r1[m] + r2[m];
                    if (!lhs[m].is_zero()) bad = true;
                }
                if (bad) return {false, i, j, k, std::move(lhs)};
            }
    return {};
}

template <FieldElement F>
Subspace<F> subspace_product(const LeibnizAlgebra<F>& a, const Subspace<F>& u, const Subspace<F>& v) {
    if (u.ambient_dim() != a.dim() || v.ambient_dim() != a.dim())
        throw Error(Errc::DimensionMismatch, "subspace ambient differs from algebra dimension");
    std::vector<Vec<F>> gens;
    for (const auto& x : u.vectors())
        for (const auto& y : v.vectors()) gens.push_back(a.bracket(x, y));
    return Subspace<F>::span(a.dim(), gens, a.zero());
}

enum class SeriesKind { LowerCentral, Derived };

template <FieldElement F>
struct SeriesReport {
    SeriesKind kind = SeriesKind::LowerCentral;
    std::vector<std::size_t> dims;
    std::vector<Subspace<F>> subspaces;
};

// Lower central: A^1 = A, A^i = [A, A^{i-1}]. Derived: D^1 = A^2,
// D^i = [D^{i-1}, D^{i-1}]. Both stop at the first repeated dimension.
template <FieldElement F>
SeriesReport<F> series(const LeibnizAlgebra<F>& a, SeriesKind kind) {
    SeriesReport<F> rep;
    rep.kind = kind;
    auto full = Subspace<F>::full(a.dim(), a.zero());
    Subspace<F> cur = full;
    if (kind == SeriesKind::Derived) {
        cur = subspace_product(a, full, full);
    }
    rep.subspaces.push_back(cur);
    rep.dims.push_back(cur.dim());
    while (cur.dim() > 0) {
        Subspace<F> next = kind == SeriesKind::LowerCentral ? subspace_product(a, full, cur)
                                                            : subspace_product(a, cur, cur);
        if (next.dim() == cur.dim()) break;
        cur = std::move(next);
        rep.subspaces.push_back(cur);
        rep.dims.push_back(cur.dim());
    }
    return rep;
}

// span{[e_i,e_i]} + span{[e_i,e_j] + [e_j,e_i]}: the polarization of a -> [a,a].
template <FieldElement F>
Subspace<F> leib_ideal(const LeibnizAlgebra<F>& a) {
    std::vector<Vec<F>> gens;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        gens.push_back(a.product(i, i));
        for (std::size_t j = i + 1; j < a.dim(); ++j) {
            Vec<F> s = a.product(i, j);
            for (std::size_t k = 0; k < a.dim(); ++k) s[k] += a.product(j, i)[k];
            gens.push_back(std::move(s));
        }
    }
    return Subspace<F>::span(a.dim(), gens, a.zero());
}

template <FieldElement F>
struct Annihilators {
    Subspace<F> left;    // {x : [x, A] = 0}
    Subspace<F> right;   // {x : [A, x] = 0}
    Subspace<F> center;  // both
};

template <FieldElement F>
Annihilators<F> annihilators(const LeibnizAlgebra<F>& a) {
    const std::size_t n = a.dim();
    // Row (j,k) of the left system: sum_i x_i c_{ij}^k = 0.
    Matrix<F> lsys(n * n, n, a.zero()), rsys(n * n, n, a.zero());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                lsys(j * n + k, i) = a.product(i, j)[k];
                rsys(i * n + k, j) = a.product(i, j)[k];
            }
    Annihilators<F> out;
    out.left = Subspace<F>::span(n, nullspace(lsys), a.zero());
    out.right = Subspace<F>::span(n, nullspace(rsys), a.zero());
    out.center = intersection(out.left, out.right);
    return out;
}

enum class SplitStatus { SplitCertified, NotCertified };

struct AlgebraFlags {
    bool is_lie = false;
    bool is_nilpotent = false;
    std::size_t nilpotency_class = 0;  // meaningful only when nilpotent
    bool is_filiform = false;
    SplitStatus split_status = SplitStatus::NotCertified;
};

template <FieldElement F>
AlgebraFlags classify_flags(const LeibnizAlgebra<F>& a) {
    AlgebraFlags fl;
    const std::size_t n = a.dim();
    fl.is_lie = true;
    for (std::size_t i = 0; i < n && fl.is_lie; ++i)
        for (std::size_t j = 0; j < n && fl.is_lie; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (!(a.product(i, j)[k] == -a.product(j, i)[k])) {
                    fl.is_lie = false;
                    break;
                }
    auto lcs = series(a, SeriesKind::LowerCentral);
    fl.is_nilpotent = lcs.dims.back() == 0;
    if (fl.is_nilpotent) fl.nilpotency_class = n == 0 ? 0 : lcs.dims.size() - 1;
    // dims[i-1] = dim A^i. Filiform: dim A^i = n - i for 2 <= i <= n. The
    // null-filiform chain n, n-1, ..., 0 (class n) is counted as well.
    if (fl.is_nilpotent && n > 1) {
        auto dim_at = [&](std::size_t i) { return i <= lcs.dims.size() ? lcs.dims[i - 1] : std::size_t{0}; };
        bool fil = true, null_fil = true;
        for (std::size_t i = 2; i <= n; ++i) {
            fil = fil && dim_at(i) == n - i;
            null_fil = null_fil && dim_at(i) == n + 1 - i;
        }
        fl.is_filiform = fil || null_fil;
    }
    auto ann = annihilators(a);
    Subspace<F> a2 = lcs.dims.size() > 1 ? lcs.subspaces[1] : Subspace<F>(n, a.zero());
    if (lcs.dims.size() == 1) a2 = lcs.subspaces[0];  // A^2 = A (not nilpotent)
    fl.split_status = a2.contains(ann.center) ? SplitStatus::NotCertified : SplitStatus::SplitCertified;
    return fl;
}

// New basis x_j = sum_i P_{ij} e_i; returns the table in the x basis.
template <FieldElement F>
LeibnizAlgebra<F> base_change(const LeibnizAlgebra<F>& a, const Matrix<F>& p) {
    const std::size_t n = a.dim();
    if (p.rows() != n || p.cols() != n) throw Error(Errc::DimensionMismatch, "base change matrix shape");
    Matrix<F> pinv = invert(p);
    std::vector<Vec<F>> cols;
    for (std::size_t j = 0; j < n; ++j) cols.push_back(p.column(j));
    std::vector<Vec<F>> table(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) table[i * n + j] = pinv.apply(a.bracket(cols[i], cols[j]));
    return LeibnizAlgebra<F>::from_table(n, a.zero(), std::move(table));
}

}  // namespace leibcheck
