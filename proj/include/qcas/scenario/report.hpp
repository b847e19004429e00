#pragma once

#include "qcas/scenario/runner.hpp"

#include <string>

namespace qcas::scenario {

/// Shortest decimal that round-trips to the same double; "null" when not finite.
std::string format_number(double value);

/// Deterministic JSON report (two-space indentation, fixed key order).
std::string to_json(const RunReport& report);

/// One row per (point, theorem, variant): point,theorem,variant,lhs,rhs,slack,verdict.
std::string to_csv(const RunReport& report);

}  // namespace qcas::scenario
