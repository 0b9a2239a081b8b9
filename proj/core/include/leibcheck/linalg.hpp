#pragma once

#include "leibcheck/matrix.hpp"

#include <optional>
#include <utility>

namespace leibcheck {

template <FieldElement F>
struct RrefResult {
    Matrix<F> form;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

// Gauss-Jordan elimination; the pivot is the first nonzero entry in column order.
template <FieldElement F>
RrefResult<F> rref(Matrix<F> m) {
    RrefResult<F> res;
    std::size_t lead_row = 0;
    for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
        std::size_t p = lead_row;
        while (p < m.rows() && m(p, c).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != lead_row)
            for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(lead_row, k));
        F inv = m(lead_row, c).one_like() / m(lead_row, c);
        for (std::size_t k = c; k < m.cols(); ++k) m(lead_row, k) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == lead_row || m(r, c).is_zero()) continue;
            F f = m(r, c);
            for (std::size_t k = c; k < m.cols(); ++k)
                if (!m(lead_row, k).is_zero()) m(r, k) -= f * m(lead_row, k);
        }
        res.pivots.push_back(c);
        ++lead_row;
    }
    res.rank = lead_row;
    res.form = std::move(m);
    return res;
}

template <FieldElement F>
std::size_t rank(const Matrix<F>& m) {
    return rref(m).rank;
}

// Basis of {x : M x = 0}, one vector per free column.
template <FieldElement F>
std::vector<Vec<F>> nullspace(const Matrix<F>& m) {
    auto r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : r.pivots) is_pivot[p] = true;
    std::vector<Vec<F>> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vec<F> v(m.cols(), m.zero());
        v[f] = m.zero().one_like();
        for (std::size_t row = 0; row < r.rank; ++row) v[r.pivots[row]] = -r.form(row, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

template <FieldElement F>
Matrix<F> invert(const Matrix<F>& m) {
    if (m.rows() != m.cols()) throw Error(Errc::DimensionMismatch, "invert needs a square matrix");
    std::size_t n = m.rows();
    Matrix<F> aug(n, 2 * n, m.zero());
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
        aug(r, n + r) = m.zero().one_like();
    }
    auto red = rref(std::move(aug));
    if (red.rank < n || red.pivots[n - 1] != n - 1) throw Error(Errc::Singular, "matrix is not invertible");
    Matrix<F> inv(n, n, m.zero());
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv(r, c) = red.form(r, n + c);
    return inv;
}

template <FieldElement F>
bool is_invertible(const Matrix<F>& m) {
    return m.rows() == m.cols() && rank(m) == m.rows();
}

template <FieldElement F>
F determinant(Matrix<F> m) {
    if (m.rows() != m.cols()) throw Error(Errc::DimensionMismatch, "determinant needs a square matrix");
    std::size_t n = m.rows();
    F det = m.zero().one_like();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c).is_zero()) ++p;
        if (p == n) return m.zero();
        if (p != c) {
            for (std::size_t k = 0; k < n; ++k) std::swap(m(p, k), m(c, k));
            det = -det;
        }
        det *= m(c, c);
        F inv = m(c, c).one_like() / m(c, c);
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m(r, c).is_zero()) continue;
            F f = m(r, c) * inv;
            for (std::size_t k = c; k < n; ++k) m(r, k) -= f * m(c, k);
        }
    }
    return det;
}

// Solve M x = b; nullopt when inconsistent. Free variables are set to zero.
template <FieldElement F>
std::optional<Vec<F>> solve(const Matrix<F>& m, const Vec<F>& b) {
    if (b.size() != m.rows()) throw Error(Errc::DimensionMismatch, "solve shape");
    Matrix<F> aug(m.rows(), m.cols() + 1, m.zero());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
        aug(r, m.cols()) = b[r];
    }
    auto red = rref(std::move(aug));
    if (red.rank > 0 && red.pivots[red.rank - 1] == m.cols()) return std::nullopt;
    Vec<F> x(m.cols(), m.zero());
    for (std::size_t r = 0; r < red.rank; ++r) x[red.pivots[r]] = red.form(r, m.cols());
    return x;
}

// Subspace of F^n stored as an RREF basis, so equality is structural.
template <FieldElement F>
class Subspace {
public:
    Subspace() = default;
    Subspace(std::size_t ambient, const F& proto) : n_(ambient), basis_(0, ambient, proto) {}

    static Subspace span(std::size_t ambient, const std::vector<Vec<F>>& vectors, const F& proto) {
        Matrix<F> m = vectors.empty() ? Matrix<F>(0, ambient, proto) : Matrix<F>::from_rows(vectors, ambient, proto);
        return from_matrix(m);
    }

    static Subspace full(std::size_t ambient, const F& proto) {
        return from_matrix(Matrix<F>::identity(ambient, proto));
    }

    static Subspace from_matrix(const Matrix<F>& rows) {
        Subspace s(rows.cols(), rows.zero());
        auto r = rref(rows);
        s.basis_ = Matrix<F>(r.rank, rows.cols(), rows.zero());
        for (std::size_t i = 0; i < r.rank; ++i)
            for (std::size_t c = 0; c < rows.cols(); ++c) s.basis_(i, c) = r.form(i, c);
        s.pivots_ = std::move(r.pivots);
        return s;
    }

    std::size_t ambient_dim() const { return n_; }
    std::size_t dim() const { return basis_.rows(); }
    const Matrix<F>& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    std::vector<Vec<F>> vectors() const {
        std::vector<Vec<F>> out;
        for (std::size_t r = 0; r < basis_.rows(); ++r) out.push_back(basis_.row(r));
        return out;
    }
    const F& zero() const { return basis_.zero(); }

    bool contains(const Vec<F>& v) const {
        if (v.size() != n_) throw Error(Errc::AmbientMismatch, "vector length differs from ambient dimension");
        Vec<F> w = v;
        for (std::size_t r = 0; r < dim(); ++r) {
            const F f = w[pivots_[r]];
            if (f.is_zero()) continue;
            for (std::size_t c = 0; c < n_; ++c)
                if (!basis_(r, c).is_zero()) w[c] -= f * basis_(r, c);
        }
        return is_zero_vector(w);
    }

    bool contains(const Subspace& other) const {
        check(other);
        for (std::size_t r = 0; r < other.dim(); ++r)
            if (!contains(other.basis_.row(r))) return false;
        return true;
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        a.check(b);
        return a.basis_ == b.basis_;
    }

    friend Subspace sum(const Subspace& a, const Subspace& b) {
        a.check(b);
        auto vs = a.vectors();
        for (auto& v : b.vectors()) vs.push_back(std::move(v));
        return span(a.n_, vs, a.zero());
    }

    friend Subspace intersection(const Subspace& a, const Subspace& b) {
        a.check(b);
        if (a.dim() == 0 || b.dim() == 0) return Subspace(a.n_, a.zero());
        // columns: a's basis, then minus b's basis; kernel gives common vectors
        Matrix<F> m(a.n_, a.dim() + b.dim(), a.zero());
        for (std::size_t c = 0; c < a.n_; ++c) {
            for (std::size_t i = 0; i < a.dim(); ++i) m(c, i) = a.basis_(i, c);
            for (std::size_t j = 0; j < b.dim(); ++j) m(c, a.dim() + j) = -b.basis_(j, c);
        }
        std::vector<Vec<F>> common;
        for (const auto& k : nullspace(m)) {
            Vec<F> v(a.n_, a.zero());
            for (std::size_t i = 0; i < a.dim(); ++i)
                if (!k[i].is_zero())
                    for (std::size_t c = 0; c < a.n_; ++c) v[c] += k[i] * a.basis_(i, c);
            common.push_back(std::move(v));
        }
        return span(a.n_, common, a.zero());
    }

    // Standard unit vectors on the non-pivot coordinates: a canonical complement.
    std::vector<std::size_t> complement_coordinates() const {
        std::vector<bool> pivot(n_, false);
        for (auto p : pivots_) pivot[p] = true;
        std::vector<std::size_t> out;
        for (std::size_t c = 0; c < n_; ++c)
            if (!pivot[c]) out.push_back(c);
        return out;
    }

private:
    void check(const Subspace& o) const {
        if (n_ != o.n_) throw Error(Errc::AmbientMismatch, "subspaces live in different ambient spaces");
    }

    std::size_t n_ = 0;
    Matrix<F> basis_;
    std::vector<std::size_t> pivots_;
};

}  // namespace leibcheck
