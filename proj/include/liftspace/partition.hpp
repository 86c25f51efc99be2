#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "liftspace/boolean_function.hpp"
#include "liftspace/predicate.hpp"

namespace liftspace {

// A labeled partition of a function family. Indices are 1-based Table-1
// indices; every index maps to exactly one label and no class is empty.
struct Partition {
    std::vector<std::string> labels;                          // class order
    std::map<std::size_t, std::string> class_of;              // index -> label
    std::map<std::string, std::set<std::size_t>> members;     // label -> indices

    std::size_t num_classes() const noexcept { return labels.size(); }

    const std::string& label_of(std::size_t index_1based) const {
        auto it = class_of.find(index_1based);
        if (it == class_of.end())
            throw UnknownBasisIndex("index " + std::to_string(index_1based) +
                                    " not covered by partition");
        return it->second;
    }
};

// Two classes for a boolean predicate, true class first; empty classes are
// dropped (a tautological or unsatisfiable predicate yields one class).
inline Partition partition_by(const Predicate& p, const FunctionFamily& family) {
    const OutcomeLabels labels = outcome_labels(p);
    Partition partition;
    std::set<std::size_t> in_true, in_false;
    for (std::size_t i = 1; i <= family.size(); ++i) {
        if (p.evaluate(family.at_index(i)))
            in_true.insert(i);
        else
            in_false.insert(i);
    }
    if (!in_true.empty()) {
        partition.labels.push_back(labels.when_true);
        partition.members[labels.when_true] = in_true;
        for (auto i : in_true) partition.class_of[i] = labels.when_true;
    }
    if (!in_false.empty()) {
        partition.labels.push_back(labels.when_false);
        partition.members[labels.when_false] = in_false;
        for (auto i : in_false) partition.class_of[i] = labels.when_false;
    }
    return partition;
}

}  // namespace liftspace
