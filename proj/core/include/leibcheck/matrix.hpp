#pragma once

#include "leibcheck/error.hpp"
#include "leibcheck/scalar.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace leibcheck {

template <FieldElement F>
using Vec = std::vector<F>;

// Dense row-major matrix. Keeps a zero prototype so empty shapes still know
// which field instance they belong to.
template <FieldElement F>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const F& zero)
        : rows_(rows), cols_(cols), zero_(zero.zero_like()), data_(rows * cols, zero_) {}

    static Matrix identity(std::size_t n, const F& proto) {
        Matrix m(n, n, proto);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = proto.one_like();
        return m;
    }

    static Matrix from_rows(const std::vector<Vec<F>>& rows, std::size_t cols, const F& proto) {
        Matrix m(rows.size(), cols, proto);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].size() != cols) throw Error(Errc::DimensionMismatch, "ragged row");
            for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
        }
        return m;
    }

    static Matrix from_columns(const std::vector<Vec<F>>& cols, std::size_t rows, const F& proto) {
        Matrix m(rows, cols.size(), proto);
        for (std::size_t c = 0; c < cols.size(); ++c) {
            if (cols[c].size() != rows) throw Error(Errc::DimensionMismatch, "ragged column");
            for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const F& zero() const { return zero_; }

    F& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const F& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vec<F> row(std::size_t r) const { return Vec<F>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_); }
    Vec<F> column(std::size_t c) const {
        Vec<F> v;
        v.reserve(rows_);
        for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
        return v;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_, zero_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    bool is_zero() const {
        for (const auto& x : data_)
            if (!x.is_zero()) return false;
        return true;
    }

    Vec<F> apply(const Vec<F>& v) const {
        if (v.size() != cols_) throw Error(Errc::DimensionMismatch, "matrix-vector shape");
        Vec<F> out(rows_, zero_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                if (!v[c].is_zero() && !(*this)(r, c).is_zero()) out[r] += (*this)(r, c) * v[c];
        return out;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw Error(Errc::DimensionMismatch, "matrix product shape");
        Matrix out(a.rows_, b.cols_, a.zero_);
        for (std::size_t r = 0; r < a.rows_; ++r)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const F& x = a(r, k);
                if (x.is_zero()) continue;
                for (std::size_t c = 0; c < b.cols_; ++c)
                    if (!b(k, c).is_zero()) out(r, c) += x * b(k, c);
            }
        return out;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(Errc::DimensionMismatch, "matrix sum shape");
        Matrix out = a;
        for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] += b.data_[k];
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
        for (std::size_t k = 0; k < a.data_.size(); ++k)
            if (!(a.data_[k] == b.data_[k])) return false;
        return true;
    }

    std::string to_string() const {
        std::string s = "[";
        for (std::size_t r = 0; r < rows_; ++r) {
            s += r ? ",[" : "[";
            for (std::size_t c = 0; c < cols_; ++c) {
                if (c) s += ",";
                s += (*this)(r, c).to_string();
            }
            s += "]";
        }
        return s + "]";
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    F zero_{};
    std::vector<F> data_;
};

template <FieldElement F>
Vec<F> unit_vector(std::size_t n, std::size_t k, const F& proto) {
    Vec<F> v(n, proto.zero_like());
    v[k] = proto.one_like();
    return v;
}

template <FieldElement F>
bool is_zero_vector(const Vec<F>& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

// Entry-wise image of a matrix under a field embedding or reduction.
template <FieldElement G, FieldElement F, class Fn>
Matrix<G> map_matrix(const Matrix<F>& m, const G& proto, Fn&& fn) {
    Matrix<G> out(m.rows(), m.cols(), proto);
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = fn(m(r, c));
    return out;
}

}  // namespace leibcheck
