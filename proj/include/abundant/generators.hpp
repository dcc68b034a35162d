#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "abundant/arith.hpp"
#include "abundant/factored.hpp"
#include "abundant/interval.hpp"

namespace abundant {

/// One colossally abundant step: multiply by `prime`, whose exponent becomes
/// `exponent`, at threshold F(p, k) = log(1 + 1/(p + ... + p^k)) / log p.
struct CAStep {
  Prime prime = 2;
  std::uint32_t exponent = 1;
  Interval threshold;
};

enum Flag : std::uint8_t { kSA = 1, kCA = 2, kXA = 4 };

/// "s", "c", "x" concatenated in that order; "-" when empty.
std::string flags_string(std::uint8_t flags);
std::uint8_t parse_flags(std::string_view text);

struct Metrics {
  std::optional<Interval> f;  // absent for n <= 2
  BigRational sigma_over_n;
  Interval log_n;
  Prime p = 1;
  std::uint32_t k2 = 0;
  mpz_class d;
};

Metrics compute_metrics(const FactoredNumber& n);

struct ListEntry {
  FactoredNumber n;
  std::uint8_t flags = 0;
};

/// Ascending list of classified numbers. `horizon` is the log n bound the
/// list is complete up to, when it came from a generator.
struct ClassifiedList {
  std::vector<ListEntry> entries;
  std::optional<double> horizon;

  std::size_t count(std::uint8_t flag) const;
  std::vector<FactoredNumber> numbers(std::uint8_t flag) const;
};

/// Threshold value F(p, k) as an enclosure.
Interval ca_threshold(Prime p, std::uint32_t k, mpfr_prec_t prec = kBasePrecision);

/// The `count` largest F(p, k), strictly descending; ties (never observed)
/// would go to the smaller prime, then the smaller k.
std::vector<CAStep> ca_steps(std::size_t count);
/// Prefix products of ca_steps(count), flagged SA and CA.
ClassifiedList ca_numbers(std::size_t count);
/// All CA numbers (in the step sense above) with log N <= max_log.
ClassifiedList ca_up_to(double max_log);

struct CAForEpsilon {
  FactoredNumber smallest;  // boundary steps excluded
  FactoredNumber largest;   // boundary steps included
};
/// CA numbers of parameter eps, 0 < eps < F(2,1). A step is on the boundary
/// when its enclosure of F(p, k) still contains eps at the precision cap.
CAForEpsilon ca_for_epsilon(double eps);

/// Every number with non-increasing exponents on an initial prime segment
/// and log n <= max_log, ascending (1 excluded). Throws TooLarge past
/// `max_count` candidates.
std::vector<FactoredNumber> enumerate_candidates(double max_log,
                                                 std::size_t max_count = 5'000'000);

/// Superabundant numbers with log n <= max_log, ascending from 1, flagged
/// SA, plus CA and XA where applicable on that range.
ClassifiedList sa_numbers(double max_log);
/// Record scan of sigma(n)/n over an ascending candidate list.
std::vector<FactoredNumber> record_scan(const std::vector<FactoredNumber>& ascending);

/// Extremely abundant numbers from an SA list: 10080 first, then each SA
/// entry whose f strictly exceeds f of every earlier entry from 10080 on.
/// Throws HorizonInsufficient if the list does not reach 10080.
ClassifiedList xa_numbers(const ClassifiedList& sa);

/// SA numbers <= limit from a direct divisor-sum sieve.
std::vector<std::uint64_t> brute_force_sa(std::uint64_t limit);

struct RobinSieveReport {
  std::uint64_t limit = 0;
  std::vector<std::uint64_t> violations_small;  // 3 <= n <= 5040 with f(n) >= e^gamma
  std::vector<std::uint64_t> violations_large;  // 5040 < n <= limit
  std::uint64_t max_f_point = 0;                // argmax of f over (5040, limit]
  double max_f = 0;
};
/// Robin's inequality over 3 <= n <= limit from a divisor-sum sieve.
RobinSieveReport brute_force_robin(std::uint64_t limit);

/// Divisor sums sigma(n) for 0 <= n <= limit (entry 0 unused).
std::vector<std::uint64_t> sigma_sieve(std::uint64_t limit);

enum class Notation { PrimePowers, Primorial };

/// Text list: `#` comment lines, then one number per line optionally
/// followed by a tab and a flags column. Numbers are factored text or plain
/// decimal integers.
void export_list(const ClassifiedList& list, const std::filesystem::path& path,
                 Notation notation = Notation::PrimePowers);
void write_list(const ClassifiedList& list, std::ostream& out,
                Notation notation = Notation::PrimePowers);
/// Throws ParseError with the offending line, ValidationError when entries
/// are not strictly ascending or, with `check_sa`, when an s-flagged entry
/// fails to beat every earlier s-flagged entry on sigma(n)/n.
ClassifiedList import_list(const std::filesystem::path& path, bool check_sa = false);
ClassifiedList read_list(std::istream& in, bool check_sa = false);

/// Entries of ca_numbers(count) whose certified log N lies below p(N).
std::vector<FactoredNumber> find_ca_log_less_p(std::size_t count);

}  // namespace abundant
