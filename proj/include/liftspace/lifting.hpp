#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "liftspace/boolean_function.hpp"
#include "liftspace/errors.hpp"
#include "liftspace/rational.hpp"
#include "liftspace/vector.hpp"

namespace liftspace {

// A family of pairwise-orthogonal lifted vectors. Vector i (0-based) is the
// input vector extended by one coupling coefficient per predecessor and a 1
// in its own fresh dimension:
//
//   b_i = ( e_i | x_0, ..., x_{i-1}, 1, 0, ..., 0 )
//
// own_dims[i] is the 0-based coordinate of that 1 (prefix_dim + i); later
// vectors are 0 there until they in turn couple to b_i. All user-facing
// output renders coordinates 1-based.
struct LiftedBasis {
    std::size_t prefix_dim = 0;
    std::vector<RationalVector> vectors;
    std::vector<std::size_t> own_dims;

    std::size_t count() const noexcept { return vectors.size(); }
    std::size_t dim() const { return prefix_dim + vectors.size(); }

    const RationalVector& at_index(std::size_t index_1based) const {
        if (index_1based < 1 || index_1based > vectors.size())
            throw UnknownBasisIndex("basis index " + std::to_string(index_1based) +
                                    " outside 1.." + std::to_string(vectors.size()));
        return vectors[index_1based - 1];
    }
};

struct LiftOptions {
    // Abort with LiftBudgetExceeded when any entry's numerator or denominator
    // exceeds this many bits. 0 = unlimited. Coupling coefficients can double
    // in size per vector, so unbounded runs on large families will not finish.
    std::size_t max_entry_bits = 0;
};

// Sequential triangular lifting. Processes inputs in order; for input i the
// coupling coefficient against each earlier vector j is the unique solution
// of <b_i|b_j> = 0. The system is lower triangular with unit diagonal (vector
// j has entry 1 at its own dimension, where vectors j+1.. are still 0), so
// integer inputs yield integer outputs and the result is deterministic.
inline LiftedBasis lift(const std::vector<RationalVector>& inputs, const LiftOptions& options = {}) {
    if (inputs.empty()) throw std::invalid_argument("lift: need at least one input vector");
    const std::size_t d = inputs.front().dim();
    for (const auto& v : inputs)
        if (v.dim() != d)
            throw DimensionMismatch("lift: inputs of dimension " + std::to_string(d) + " and " +
                                    std::to_string(v.dim()));

    const std::size_t count = inputs.size();
    const std::size_t out_dim = d + count;
    LiftedBasis basis;
    basis.prefix_dim = d;
    basis.vectors.reserve(count);
    basis.own_dims.reserve(count);

    std::size_t max_bits_seen = 0;
    for (std::size_t i = 0; i < count; ++i) {
        const RationalVector& e = inputs[i];
        std::vector<Rational> coupling(i);
        for (std::size_t j = 0; j < i; ++j) {
            const RationalVector& b_j = basis.vectors[j];
            Rational overlap = 0;
            for (std::size_t k = 0; k < d; ++k)
                if (e[k] != 0) overlap += e[k] * b_j[k];
            for (std::size_t k = 0; k < j; ++k)
                if (coupling[k] != 0) overlap += coupling[k] * b_j[d + k];
            coupling[j] = -overlap;
            if (options.max_entry_bits != 0) {
                const std::size_t bits = entry_bits(coupling[j]);
                if (bits > max_bits_seen) max_bits_seen = bits;
                if (bits > options.max_entry_bits)
                    throw LiftBudgetExceeded(i, max_bits_seen, options.max_entry_bits);
            }
        }
        std::vector<Rational> entries;
        entries.reserve(out_dim);
        entries.insert(entries.end(), e.begin(), e.end());
        entries.insert(entries.end(), coupling.begin(), coupling.end());
        entries.push_back(1);
        entries.resize(out_dim, Rational(0));
        basis.vectors.emplace_back(std::move(entries));
        basis.own_dims.push_back(d + i);
    }
    return basis;
}

// e-vectors of the full function family, lifted. The zero function's coupling
// system is homogeneous, so it comes out as a bare unit vector in its own
// dimension with no special casing. Total dimension 2^n + 2^(2^n).
inline LiftedBasis lift_function_family(unsigned n, unsigned max_arity = kDefaultMaxArity,
                                        const LiftOptions& options = {}) {
    const FunctionFamily family = enumerate_functions(n, max_arity);
    std::vector<RationalVector> evectors;
    evectors.reserve(family.size());
    for (const auto& f : family.functions) evectors.push_back(to_evector(f));
    return lift(evectors, options);
}

struct OrthogonalityViolation {
    std::size_t i = 0, j = 0;  // 1-based basis indices, i < j
    Rational inner;
};

struct OrthogonalityReport {
    std::size_t pairs_checked = 0;
    std::vector<OrthogonalityViolation> violations;

    bool ok() const noexcept { return violations.empty(); }
};

// Brute-force check of all pairwise inner products.
inline OrthogonalityReport verify_orthogonality(const LiftedBasis& basis) {
    OrthogonalityReport report;
    for (std::size_t i = 0; i < basis.count(); ++i) {
        for (std::size_t j = i + 1; j < basis.count(); ++j) {
            ++report.pairs_checked;
            Rational ip = inner_product(basis.vectors[i], basis.vectors[j]);
            if (ip != 0) report.violations.push_back({i + 1, j + 1, std::move(ip)});
        }
    }
    return report;
}

}  // namespace liftspace
