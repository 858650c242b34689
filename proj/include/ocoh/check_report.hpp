#pragma once

#include "ocoh/matrix.hpp"

#include <string>
#include <vector>

namespace ocoh {

/// One failed identity instance: which identity, at which basis multi-index,
/// and the (nonzero) defect vector in the target space.
struct Defect {
    std::string identity;
    std::vector<int> index;
    Vec value;
};

/// Structured result of an axiom / identity check. Failures are data, not
/// errors: callers inspect defects to debug structure-constant input.
struct CheckReport {
    std::string subject;
    std::vector<Defect> defects;

    bool pass() const { return defects.empty(); }

    void record(const std::string& identity, std::vector<int> index, Vec defect) {
        if (!is_zero_vec(defect)) defects.push_back({identity, std::move(index), std::move(defect)});
    }

    void merge(const CheckReport& other) {
        for (const auto& d : other.defects) defects.push_back(d);
    }
};

} // namespace ocoh
