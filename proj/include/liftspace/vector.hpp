#pragma once

#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "liftspace/errors.hpp"
#include "liftspace/rational.hpp"

namespace liftspace {

// Exact coordinate tuple. Immutable in spirit: operations return new values.
class RationalVector {
public:
    explicit RationalVector(std::size_t dim) : entries_(check_dim(dim)) {}

    explicit RationalVector(std::vector<Rational> entries) : entries_(std::move(entries)) {
        check_dim(entries_.size());
    }

    RationalVector(std::initializer_list<Rational> entries)
        : RationalVector(std::vector<Rational>(entries)) {}

    static RationalVector zero(std::size_t dim) { return RationalVector(dim); }

    std::size_t dim() const noexcept { return entries_.size(); }

    const Rational& operator[](std::size_t i) const { return entries_.at(i); }
    Rational& operator[](std::size_t i) { return entries_.at(i); }

    const std::vector<Rational>& entries() const noexcept { return entries_; }

    auto begin() const noexcept { return entries_.begin(); }
    auto end() const noexcept { return entries_.end(); }

    bool is_zero() const {
        for (const auto& e : entries_)
            if (e != 0) return false;
        return true;
    }

    bool is_integral() const {
        for (const auto& e : entries_)
            if (!is_integer(e)) return false;
        return true;
    }

    friend bool operator==(const RationalVector&, const RationalVector&) = default;

private:
    static std::size_t check_dim(std::size_t dim) {
        if (dim == 0) throw std::invalid_argument("RationalVector: dimension must be >= 1");
        return dim;
    }

    std::vector<Rational> entries_;
};

inline Rational inner_product(const RationalVector& v, const RationalVector& w) {
    if (v.dim() != w.dim())
        throw DimensionMismatch("inner_product: " + std::to_string(v.dim()) + " vs " +
                                std::to_string(w.dim()));
    Rational sum = 0;
    for (std::size_t k = 0; k < v.dim(); ++k) sum += v[k] * w[k];
    return sum;
}

inline Rational norm_squared(const RationalVector& v) { return inner_product(v, v); }

inline RationalVector operator+(const RationalVector& v, const RationalVector& w) {
    if (v.dim() != w.dim())
        throw DimensionMismatch("vector add: " + std::to_string(v.dim()) + " vs " +
                                std::to_string(w.dim()));
    std::vector<Rational> out(v.dim());
    for (std::size_t k = 0; k < v.dim(); ++k) out[k] = v[k] + w[k];
    return RationalVector(std::move(out));
}

inline RationalVector operator-(const RationalVector& v, const RationalVector& w) {
    if (v.dim() != w.dim())
        throw DimensionMismatch("vector sub: " + std::to_string(v.dim()) + " vs " +
                                std::to_string(w.dim()));
    std::vector<Rational> out(v.dim());
    for (std::size_t k = 0; k < v.dim(); ++k) out[k] = v[k] - w[k];
    return RationalVector(std::move(out));
}

inline RationalVector operator*(const Rational& c, const RationalVector& v) {
    std::vector<Rational> out(v.dim());
    for (std::size_t k = 0; k < v.dim(); ++k) out[k] = c * v[k];
    return RationalVector(std::move(out));
}

// Kronecker product: (v ⊗ w)[r*dim(w) + c] = v[r] * w[c].
inline RationalVector tensor_product(const RationalVector& v, const RationalVector& w) {
    std::vector<Rational> out;
    out.reserve(v.dim() * w.dim());
    for (std::size_t r = 0; r < v.dim(); ++r)
        for (std::size_t c = 0; c < w.dim(); ++c) out.push_back(v[r] * w[c]);
    return RationalVector(std::move(out));
}

inline std::ostream& operator<<(std::ostream& os, const RationalVector& v) {
    os << "(";
    for (std::size_t k = 0; k < v.dim(); ++k) {
        if (k) os << ", ";
        os << format_rational(v[k]);
    }
    return os << ")";
}

}  // namespace liftspace
