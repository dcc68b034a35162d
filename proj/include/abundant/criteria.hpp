#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "abundant/factored.hpp"
#include "abundant/generators.hpp"
#include "abundant/interval.hpp"
#include "abundant/primes.hpp"

namespace abundant {

/// Outcome of one inequality at one subject. `margin` is positive on the
/// satisfying side; holds is True only when the whole interval is there.
struct CriterionVerdict {
  std::string criterion_id;
  std::string subject;
  Interval margin;
  Truth holds = Truth::Unresolved;
};

/// Robin: margin e^gamma - f(n). DomainError for n < 3.
CriterionVerdict robin_check(const FactoredNumber& n);
/// Refined Robin: margin e^gamma + c/(log log n)^2 - f(n) with
/// c = 0.6482...; equality holds at n = 12, which stays Unresolved.
CriterionVerdict robin_refined_check(const FactoredNumber& n);

/// Largest n accepted by lagarias_check.
inline constexpr std::uint64_t kLagariasLimit = 10'000'000;
/// Lagarias: margin H_n + e^{H_n} log H_n - sigma(n). RangeNotCovered above
/// kLagariasLimit, DomainError for n = 0.
CriterionVerdict lagarias_check(std::uint64_t n);
/// Nicolas: margin N_k/(phi(N_k) log log N_k) - e^gamma for the primorial
/// N_k. Exact rational product for k <= 2000, table sums beyond.
/// DomainError for k < 2, OutOfRange past the tables.
CriterionVerdict nicolas_check(std::size_t k, const PrimeTables& tables);

/// Pass/fail summary of a criterion over a range of subjects.
struct ScanSummary {
  std::string criterion_id;
  std::uint64_t from = 0;
  std::uint64_t to = 0;
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;  // certain failures plus unresolved points
  std::vector<CriterionVerdict> failed;  // first kMaxRecorded
  double min_margin = 0;                 // smallest double margin seen
  std::uint64_t min_margin_at = 0;
  static constexpr std::size_t kMaxRecorded = 200;

  bool holds() const { return failures == 0; }
};

/// Robin (or refined Robin) for every integer in [max(from,3), to], sigma by sieve.
ScanSummary robin_scan(std::uint64_t from, std::uint64_t to, bool refined = false);
/// Lagarias for every integer in [max(from,1), to].
ScanSummary lagarias_scan(std::uint64_t from, std::uint64_t to);
/// Nicolas for prime indices k in [max(k_from,2), k_to].
ScanSummary nicolas_scan(std::size_t k_from, std::size_t k_to, const PrimeTables& tables);

struct TrendRow {
  FactoredNumber n;
  Interval f;
  Interval gap;  // e^gamma - f
  bool new_max = false;
};

struct GronwallTrend {
  std::vector<TrendRow> rows;
  bool gaps_positive_after_5040 = true;
  bool strictly_increasing = true;
  std::size_t running_max_updates = 0;
};

/// Per-entry f, gap to e^gamma and running maxima; entries below 3 are skipped.
GronwallTrend gronwall_trend(const ClassifiedList& list);

/// (sigma(N)/N - e^gamma log log N) sqrt(log N). DomainError for N < 3.
Interval ramanujan_quantity(const FactoredNumber& n);

struct CountStatistics {
  double horizon = 0;
  std::size_t xa = 0;
  std::size_t ca = 0;
  std::size_t ca_and_xa = 0;
  std::size_t ca_not_xa = 0;
  std::size_t xa_not_ca = 0;
};

/// Set counts over entries with log n <= horizon. Throws HorizonMismatch if
/// either list is known to stop short of the horizon.
CountStatistics count_statistics(const ClassifiedList& xa, const ClassifiedList& ca,
                                 double horizon);

enum class ReportFormat { Csv, Json, Tsv, Text };

/// Rows of criterion_id, subject, holds, margin_lo, margin_hi.
void write_verdicts(const std::vector<CriterionVerdict>& v, std::ostream& out,
                    ReportFormat format);

}  // namespace abundant
