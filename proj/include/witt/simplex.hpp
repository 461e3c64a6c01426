#pragma once

#include <optional>
#include <vector>

#include "witt/budget.hpp"
#include "witt/rational.hpp"

namespace witt {

/// A point x >= 0 with A x = b, or nullopt if none exists. Exact two-phase simplex with
/// Bland's rule. A is given row-major (rows.size() == b.size()).
std::optional<std::vector<Rational>> feasible_point(const std::vector<std::vector<Rational>>& rows,
                                                    const std::vector<Rational>& b,
                                                    const Deadline& deadline = Deadline());

}  // namespace witt
