#pragma once

#include "coqkit/arith.hpp"

#include <optional>
#include <vector>

namespace coqkit {

// Feasibility of { x : eq rows hold, le rows hold, lower <= x <= upper } over Q.
struct LinearSystem {
    struct Row {
        std::vector<Rat> coef;
        Rat rhs;
    };
    std::size_t vars = 0;
    std::vector<Row> eq, le;
    std::vector<Rat> lower, upper;
};

// Exact phase-1 simplex with Bland's rule; returns a feasible point or nothing.
std::optional<std::vector<Rat>> feasible_point(const LinearSystem& sys);

}  // namespace coqkit
