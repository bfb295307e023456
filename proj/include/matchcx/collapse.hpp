#pragma once

#include "matchcx/complex.hpp"

#include <json.hpp>
#include <utility>
#include <vector>

namespace matchcx {

// An elementary collapse removes a free face together with its unique
// coface. The empty face counts: a lone vertex collapses to the void complex.
struct CollapseStep {
  Matching face;
  Matching coface;
};

struct CollapseTrace {
  bool success = false;  // false: the greedy strategy stalled (not a disproof)
  int target = 0;
  int rotation = 0;      // vertex ordering that succeeded
  std::vector<CollapseStep> steps;
  MatchingComplex final_complex;

  nlohmann::json to_json() const;
};

// Greedy collapse until no simplex above the target dimension remains.
// Faces are tried by removing the edge at the earliest vertex of the current
// ordering first; on a stall the ordering is rotated, up to n times.
CollapseTrace collapse_to_dimension(const MatchingComplex& k, int target);

// True iff every step is a legal elementary collapse in order and a trace
// marked successful ends at or below its target; when the trace carries a
// final complex, it must match the result.
bool replay(const MatchingComplex& k, const CollapseTrace& t);

CollapseTrace collapse_trace_from_json(const nlohmann::json& j);

}  // namespace matchcx
