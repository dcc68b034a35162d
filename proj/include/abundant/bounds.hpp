#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "abundant/interval.hpp"
#include "abundant/primes.hpp"

namespace abundant {

/// One explicit inequality from the bound suite.
///
/// Each side of a bound is turned into a normalized margin that is positive
/// exactly when the inequality holds; for x(1 +- a/log x) bounds the margin
/// is the slack left in the constant a.
struct BoundInfo {
  std::string id;
  std::string statement;
  std::string margin;  // what the reported margin measures
};

struct BoundViolation {
  std::string side;
  std::string point;  // "x=...", "x->N-" (left limit), "k=..." or "t=..."
  Truth verdict;      // False (certain failure) or Unresolved
  std::string margin;
};

struct BoundReport {
  std::string bound_id;
  std::string range_checked;  // human readable, after clipping to the domain
  std::uint64_t points_checked = 0;
  bool holds = false;
  Interval worst_margin;
  std::string worst_point;
  std::uint64_t violation_count = 0;
  std::vector<BoundViolation> violations;  // first kMaxRecorded only
  static constexpr std::size_t kMaxRecorded = 64;
};

const std::vector<BoundInfo>& bound_registry();

/// Checks bound `id` at every integer x in [from, to] within its validity
/// domain and at the left limit of every such integer above `from`, so step
/// functions are tested on both sides of each jump. B8 walks prime indices
/// k >= 463 with p_k <= to; B10 uses a fixed grid of t and ignores the range.
/// Throws RangeNotCovered if `to` exceeds the tables, DomainError for an
/// unknown id.
BoundReport verify_bound(const std::string& id, const PrimeTables& tables,
                         std::uint64_t from, std::uint64_t to);

}  // namespace abundant
