#pragma once

#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "liftspace/errors.hpp"
#include "liftspace/rational.hpp"
#include "liftspace/vector.hpp"

namespace liftspace {

// Dense row-major matrix of exact rationals.
class RationalMatrix {
public:
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(checked_size(rows, cols)) {}

    RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        entries_.reserve(rows_ * cols_);
        for (const auto& row : rows) {
            if (row.size() != cols_)
                throw DimensionMismatch("matrix literal: ragged rows");
            entries_.insert(entries_.end(), row.begin(), row.end());
        }
        checked_size(rows_, cols_);
    }

    static RationalMatrix identity(std::size_t n) {
        RationalMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static RationalMatrix zero(std::size_t rows, std::size_t cols) {
        return RationalMatrix(rows, cols);
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    const Rational& operator()(std::size_t r, std::size_t c) const {
        return entries_.at(r * cols_ + c);
    }
    Rational& operator()(std::size_t r, std::size_t c) { return entries_.at(r * cols_ + c); }

    const std::vector<Rational>& entries() const noexcept { return entries_; }

    RationalMatrix transpose() const {
        RationalMatrix out(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
        return out;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t c = 0; c < cols_; ++c)
            std::swap(entries_[a * cols_ + c], entries_[b * cols_ + c]);
    }

    bool is_zero() const {
        for (const auto& e : entries_)
            if (e != 0) return false;
        return true;
    }

    bool is_square() const noexcept { return rows_ == cols_; }

    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
    static std::size_t checked_size(std::size_t rows, std::size_t cols) {
        if (rows == 0 || cols == 0)
            throw std::invalid_argument("RationalMatrix: rows and cols must be >= 1");
        return rows * cols;
    }

    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> entries_;
};

inline RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionMismatch("matrix add: " + std::to_string(a.rows()) + "x" +
                                std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) +
                                "x" + std::to_string(b.cols()));
    RationalMatrix out(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c) + b(r, c);
    return out;
}

inline RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionMismatch("matrix sub: " + std::to_string(a.rows()) + "x" +
                                std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) +
                                "x" + std::to_string(b.cols()));
    RationalMatrix out(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c) - b(r, c);
    return out;
}

inline RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols() != b.rows())
        throw DimensionMismatch("matrix mul: " + std::to_string(a.rows()) + "x" +
                                std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) +
                                "x" + std::to_string(b.cols()));
    RationalMatrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(r, k) == 0) continue;
            for (std::size_t c = 0; c < b.cols(); ++c) out(r, c) += a(r, k) * b(k, c);
        }
    return out;
}

inline RationalMatrix operator*(const Rational& s, const RationalMatrix& m) {
    RationalMatrix out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = s * m(r, c);
    return out;
}

inline RationalVector operator*(const RationalMatrix& m, const RationalVector& v) {
    if (m.cols() != v.dim())
        throw DimensionMismatch("matrix-vector mul: " + std::to_string(m.rows()) + "x" +
                                std::to_string(m.cols()) + " vs dim " + std::to_string(v.dim()));
    std::vector<Rational> out(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Rational sum = 0;
        for (std::size_t c = 0; c < m.cols(); ++c) sum += m(r, c) * v[c];
        out[r] = sum;
    }
    return RationalVector(std::move(out));
}

inline Rational trace(const RationalMatrix& m) {
    if (!m.is_square())
        throw DimensionMismatch("trace: matrix is " + std::to_string(m.rows()) + "x" +
                                std::to_string(m.cols()));
    Rational sum = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) sum += m(i, i);
    return sum;
}

inline bool is_symmetric(const RationalMatrix& m) {
    if (!m.is_square()) return false;
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = r + 1; c < m.cols(); ++c)
            if (m(r, c) != m(c, r)) return false;
    return true;
}

// Normalized dyad v vᵀ / ⟨v|v⟩: the orthogonal projector onto span{v}.
inline RationalMatrix dyad(const RationalVector& v) {
    const Rational n2 = norm_squared(v);
    if (n2 == 0) throw ZeroVectorDyad("dyad: zero vector has no normalized dyad");
    RationalMatrix out(v.dim(), v.dim());
    for (std::size_t r = 0; r < v.dim(); ++r) {
        if (v[r] == 0) continue;
        for (std::size_t c = 0; c < v.dim(); ++c) out(r, c) = v[r] * v[c] / n2;
    }
    return out;
}

// Exact rank via rational Gaussian elimination. First-nonzero pivoting,
// top-to-bottom row order: deterministic on equal inputs.
inline std::size_t rank(RationalMatrix m) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t pivot = r;
        while (pivot < m.rows() && m(pivot, c) == 0) ++pivot;
        if (pivot == m.rows()) continue;
        m.swap_rows(r, pivot);
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            if (m(i, c) == 0) continue;
            const Rational factor = m(i, c) / m(r, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= factor * m(r, j);
        }
        ++r;
    }
    return r;
}

inline std::ostream& operator<<(std::ostream& os, const RationalMatrix& m) {
    os << "[";
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (r) os << ", ";
        os << "[";
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) os << ", ";
            os << format_rational(m(r, c));
        }
        os << "]";
    }
    return os << "]";
}

}  // namespace liftspace
