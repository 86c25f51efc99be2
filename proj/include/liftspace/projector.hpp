#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "liftspace/errors.hpp"
#include "liftspace/lifting.hpp"
#include "liftspace/matrix.hpp"
#include "liftspace/partition.hpp"

namespace liftspace {

// Sum of normalized dyads over the selected basis vectors. For an orthogonal
// basis this is the orthogonal projector onto their span; members may be
// empty (zero matrix).
inline RationalMatrix build_projector(const LiftedBasis& basis,
                                      const std::set<std::size_t>& members) {
    RationalMatrix sum(basis.dim(), basis.dim());
    for (std::size_t index : members) sum = sum + dyad(basis.at_index(index));
    return sum;
}

struct PvmClass {
    std::string label;
    RationalMatrix projector;
    std::set<std::size_t> members;  // 1-based basis indices
};

// A projection-valued measure over the classes of a partition. Verified at
// construction: each projector symmetric idempotent of rank |members|, cross
// products zero, class sum equal to the projector onto the full basis span.
struct PartitionPVM {
    std::size_t space_dim = 0;
    std::vector<PvmClass> classes;

    const PvmClass& class_by_label(const std::string& label) const {
        for (const auto& c : classes)
            if (c.label == label) return c;
        throw UnknownBasisIndex("PVM has no class labeled '" + label + "'");
    }
};

inline PartitionPVM build_pvm(const LiftedBasis& basis, const Partition& partition) {
    PartitionPVM pvm;
    pvm.space_dim = basis.dim();
    for (const auto& label : partition.labels) {
        const auto& members = partition.members.at(label);
        for (std::size_t index : members) basis.at_index(index);  // range check first
        pvm.classes.push_back({label, build_projector(basis, members), members});
    }

    for (const auto& c : pvm.classes) {
        if (!is_symmetric(c.projector))
            throw NotAPVM("projector for class '" + c.label + "' is not symmetric");
        if (c.projector * c.projector != c.projector)
            throw NotAPVM("projector for class '" + c.label + "' is not idempotent");
        if (rank(c.projector) != c.members.size())
            throw NotAPVM("projector for class '" + c.label + "' has rank != |members| = " +
                          std::to_string(c.members.size()));
    }
    const RationalMatrix zero = RationalMatrix::zero(pvm.space_dim, pvm.space_dim);
    for (std::size_t a = 0; a < pvm.classes.size(); ++a)
        for (std::size_t b = a + 1; b < pvm.classes.size(); ++b)
            if (pvm.classes[a].projector * pvm.classes[b].projector != zero)
                throw NotAPVM("projectors for classes '" + pvm.classes[a].label + "' and '" +
                              pvm.classes[b].label + "' do not multiply to zero");

    std::set<std::size_t> all;
    for (std::size_t i = 1; i <= basis.count(); ++i) all.insert(i);
    RationalMatrix sum = zero;
    for (const auto& c : pvm.classes) sum = sum + c.projector;
    if (sum != build_projector(basis, all))
        throw NotAPVM("class projectors do not sum to the span projector");

    return pvm;
}

struct ClassProbability {
    std::string label;
    Rational probability;
};

struct QueryOutcome {
    std::string label;
    Rational probability;
    bool deterministic = false;
    std::vector<ClassProbability> distribution;  // all classes, PVM order
};

// Born weight <psi|E|psi> / <psi|psi>: the squared norm of the projection.
inline Rational born_probability(const RationalVector& state, const RationalMatrix& projector) {
    if (state.dim() != projector.cols() || !projector.is_square())
        throw DimensionMismatch("born_probability: state dim " + std::to_string(state.dim()) +
                                " vs projector " + std::to_string(projector.rows()) + "x" +
                                std::to_string(projector.cols()));
    const Rational total = norm_squared(state);
    if (total == 0) throw ZeroState("born_probability: zero state");
    return inner_product(state, projector * state) / total;
}

// One simulated projective measurement of the partition observable. Exact:
// returns the full outcome distribution, flagged deterministic when a single
// class carries probability 1. States with weight outside the basis span are
// an encoding bug, not a measurement result, and are rejected.
inline QueryOutcome single_query(const PartitionPVM& pvm, const RationalVector& oracle_state) {
    QueryOutcome outcome;
    Rational total = 0;
    for (const auto& c : pvm.classes) {
        Rational p = born_probability(oracle_state, c.projector);
        total += p;
        outcome.distribution.push_back({c.label, std::move(p)});
    }
    if (total != 1)
        throw StateOutsideSpan("state has weight outside the lifted basis span",
                               format_ratio(Rational(1) - total));
    std::size_t best = 0;
    for (std::size_t k = 1; k < outcome.distribution.size(); ++k)
        if (outcome.distribution[k].probability > outcome.distribution[best].probability)
            best = k;
    outcome.label = outcome.distribution[best].label;
    outcome.probability = outcome.distribution[best].probability;
    outcome.deterministic = outcome.probability == 1;
    return outcome;
}

// Prepare the state encoding function `prepared`, measure the (possibly
// unrelated) partition observable: "prepare one state, measure another".
inline QueryOutcome state_mismatch_query(std::size_t prepared_index_1based,
                                         const PartitionPVM& measured, const LiftedBasis& basis) {
    return single_query(measured, basis.at_index(prepared_index_1based));
}

}  // namespace liftspace
