#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>

#include "liftspace/errors.hpp"
#include "liftspace/matrix.hpp"
#include "liftspace/vector.hpp"

namespace liftspace {

// Tensor-factor dimensions of a bipartite cut. A compatible state vector has
// dimension dim_a * dim_b.
struct BipartiteShape {
    std::size_t dim_a = 0;
    std::size_t dim_b = 0;

    BipartiteShape(std::size_t a, std::size_t b) : dim_a(a), dim_b(b) {
        if (a < 1 || b < 1)
            throw std::invalid_argument("BipartiteShape: factor dimensions must be >= 1");
    }

    std::size_t total() const noexcept { return dim_a * dim_b; }
};

// Coefficient matrix of a bipartite state: M[r][c] = state[r*dim_b + c].
inline RationalMatrix reshape(const RationalVector& state, const BipartiteShape& shape) {
    if (state.dim() != shape.total())
        throw DimensionMismatch("reshape: state dim " + std::to_string(state.dim()) +
                                " != " + std::to_string(shape.dim_a) + "x" +
                                std::to_string(shape.dim_b));
    RationalMatrix m(shape.dim_a, shape.dim_b);
    for (std::size_t r = 0; r < shape.dim_a; ++r)
        for (std::size_t c = 0; c < shape.dim_b; ++c) m(r, c) = state[r * shape.dim_b + c];
    return m;
}

// Rank of the coefficient matrix: 1 means the state is a single product of
// factors, anything larger means it is entangled across this cut.
inline std::size_t schmidt_rank(const RationalVector& state, const BipartiteShape& shape) {
    if (state.is_zero()) throw ZeroState("schmidt_rank: zero state");
    return rank(reshape(state, shape));
}

// Exact factors of a rank-1 state, recovered from the nonzero row/column
// structure of the coefficient matrix: factor_b is the first nonzero row,
// factor_a[r] = M[r][c0]/M[r0][c0]. Unique up to reciprocal scaling.
inline std::optional<std::pair<RationalVector, RationalVector>> product_factors(
    const RationalVector& state, const BipartiteShape& shape) {
    if (schmidt_rank(state, shape) != 1) return std::nullopt;
    const RationalMatrix m = reshape(state, shape);
    std::size_t r0 = 0, c0 = 0;
    bool found = false;
    for (std::size_t r = 0; r < m.rows() && !found; ++r)
        for (std::size_t c = 0; c < m.cols() && !found; ++c)
            if (m(r, c) != 0) {
                r0 = r;
                c0 = c;
                found = true;
            }
    RationalVector factor_a(shape.dim_a), factor_b(shape.dim_b);
    for (std::size_t c = 0; c < shape.dim_b; ++c) factor_b[c] = m(r0, c);
    for (std::size_t r = 0; r < shape.dim_a; ++r) factor_a[r] = m(r, c0) / m(r0, c0);
    return std::make_pair(std::move(factor_a), std::move(factor_b));
}

inline bool is_product(const RationalVector& state, const BipartiteShape& shape) {
    return schmidt_rank(state, shape) == 1;
}

// Reduced state of one side of a pure bipartite state. Exact, trace 1,
// symmetric by construction.
struct DensityMatrix {
    RationalMatrix matrix;

    explicit DensityMatrix(RationalMatrix m) : matrix(std::move(m)) {
        if (!matrix.is_square())
            throw DimensionMismatch("DensityMatrix: matrix is " + std::to_string(matrix.rows()) +
                                    "x" + std::to_string(matrix.cols()));
        if (trace(matrix) != 1)
            throw std::invalid_argument("DensityMatrix: trace must be exactly 1");
        if (!is_symmetric(matrix))
            throw std::invalid_argument("DensityMatrix: matrix must be symmetric");
        for (std::size_t i = 0; i < matrix.rows(); ++i)
            if (matrix(i, i) < 0)
                throw std::invalid_argument("DensityMatrix: negative diagonal entry");
    }

    std::size_t dim() const noexcept { return matrix.rows(); }
};

enum class Side { A, B };

// Contraction over the discarded factor: keep A -> M Mᵀ / <state|state>,
// keep B -> Mᵀ M / <state|state>.
inline DensityMatrix partial_trace(const RationalVector& state, const BipartiteShape& shape,
                                   Side keep) {
    const Rational total = norm_squared(state);
    if (total == 0) throw ZeroState("partial_trace: zero state");
    const RationalMatrix m = reshape(state, shape);
    const RationalMatrix reduced =
        keep == Side::A ? m * m.transpose() : m.transpose() * m;
    return DensityMatrix(Rational(1) / total * reduced);
}

// trace(rho^2); exactly 1 iff rho is a one-dimensional projector, < 1 for
// proper mixtures.
inline Rational purity(const DensityMatrix& rho) { return trace(rho.matrix * rho.matrix); }

struct CoordinateView {
    RationalVector state;       // entries outside the kept coordinates zeroed
    Rational retained_fraction; // sum_{k in coords} state_k^2 / <state|state>
};

// Orthogonal projection onto a coordinate subspace; coords are 1-based.
// An empty coordinate set is allowed and yields the zero vector, fraction 0.
inline CoordinateView coordinate_view(const RationalVector& state,
                                      const std::set<std::size_t>& coords_1based) {
    RationalVector projected(state.dim());
    for (std::size_t coord : coords_1based) {
        if (coord < 1 || coord > state.dim())
            throw DimensionMismatch("coordinate_view: coordinate " + std::to_string(coord) +
                                    " outside 1.." + std::to_string(state.dim()));
        projected[coord - 1] = state[coord - 1];
    }
    const Rational total = norm_squared(state);
    Rational fraction = 0;
    if (total != 0) fraction = norm_squared(projected) / total;
    return {std::move(projected), std::move(fraction)};
}

}  // namespace liftspace
