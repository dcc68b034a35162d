#include <doctest.h>

#include <cmath>
#include <set>
#include <sstream>

#include <json.hpp>

#include "abundant/criteria.hpp"
#include "abundant/errors.hpp"

using namespace abundant;

namespace {

constexpr double kEGamma = 1.7810724179901979;

const PrimeTables& tables() {
  static const PrimeTables t = PrimeTables::build(1'000'000);
  return t;
}

}  // namespace

TEST_CASE("Robin at single points") {
  auto v = robin_check(factor_small(10080));
  CHECK(v.holds == Truth::True);
  CHECK(std::fabs(v.margin.mid() - (kEGamma - 1.755814339)) < 1e-8);

  CHECK(robin_check(factor_small(5040)).holds == Truth::False);
  CHECK(robin_check(factor_small(12)).holds == Truth::False);
  CHECK_THROWS_AS(robin_check(factor_small(2)), DomainError);
}

TEST_CASE("refined Robin") {
  CHECK(robin_refined_check(factor_small(12)).holds == Truth::Unresolved);
  CHECK(robin_refined_check(factor_small(12)).margin.contains(0.0));
  CHECK(robin_refined_check(factor_small(10080)).holds == Truth::True);
  CHECK(robin_refined_check(factor_small(3)).holds == Truth::True);
  // 12 is the only point of equality up to 1e5.
  const ScanSummary s = robin_scan(3, 100000, true);
  CHECK(s.failures == 1);
  REQUIRE(s.failed.size() == 1);
  CHECK(s.failed[0].subject == "12");
}

TEST_CASE("Robin exceptions up to 1e6 are the known small set") {
  const std::set<std::uint64_t> expected = {3,   4,   5,   6,   8,   9,   10,  12,  16,
                                            18,  20,  24,  30,  36,  48,  60,  72,  84,
                                            120, 180, 240, 360, 720, 840, 2520, 5040};
  const ScanSummary s = robin_scan(3, 1'000'000);
  std::set<std::uint64_t> got;
  for (const auto& v : s.failed) got.insert(std::stoull(v.subject));
  CHECK(s.failures == expected.size());
  CHECK(got == expected);

  const RobinSieveReport r = brute_force_robin(1'000'000);
  CHECK(std::set<std::uint64_t>(r.violations_small.begin(), r.violations_small.end()) == expected);
  CHECK(r.violations_large.empty());
  CHECK(r.max_f < kEGamma);
}

TEST_CASE("Lagarias") {
  auto one = lagarias_check(1);
  CHECK(one.holds == Truth::True);
  CHECK(one.margin.contains(0.0));

  // H_5 = 137/60; margin = H + e^H log H - 6.
  const double h5 = 137.0 / 60;
  auto five = lagarias_check(5);
  CHECK(five.holds == Truth::True);
  CHECK(std::fabs(five.margin.mid() - (h5 + std::exp(h5) * std::log(h5) - 6)) < 1e-9);
  CHECK(lagarias_check(5040).holds == Truth::True);

  CHECK_THROWS_AS(lagarias_check(0), DomainError);
  CHECK_THROWS_AS(lagarias_check(kLagariasLimit + 1), RangeNotCovered);
  CHECK(lagarias_scan(1, 100000).holds());
}

TEST_CASE("Nicolas") {
  auto two = nicolas_check(2, tables());
  CHECK(two.holds == Truth::True);
  CHECK(std::fabs(two.margin.mid() - (3 / std::log(std::log(6.0)) - kEGamma)) < 1e-9);
  auto four = nicolas_check(4, tables());
  CHECK(std::fabs(four.margin.mid() - (4.375 / std::log(std::log(210.0)) - kEGamma)) < 1e-9);
  CHECK(nicolas_check(100, tables()).holds == Truth::True);
  CHECK_THROWS_AS(nicolas_check(1, tables()), DomainError);

  // Exact products (k <= 2000) and table sums (beyond) agree where they meet.
  const auto a = nicolas_check(2000, tables()).margin;
  const auto b = nicolas_check(2001, tables()).margin;
  CHECK(std::fabs(a.mid() - b.mid()) < 1e-3);
  CHECK(nicolas_scan(2, tables().primes().size(), tables()).holds());
}

TEST_CASE("Gronwall trend on XA") {
  const ClassifiedList sa = sa_numbers(160);
  ClassifiedList xa;
  for (const auto& e : sa.entries)
    if (e.flags & kXA) xa.entries.push_back(e);
  const GronwallTrend t = gronwall_trend(xa);
  REQUIRE(t.rows.size() >= 2);
  CHECK(t.strictly_increasing);
  CHECK(t.gaps_positive_after_5040);
  CHECK(t.running_max_updates == t.rows.size());
  CHECK(std::fabs(t.rows[0].gap.mid() - 0.025258) < 5e-6);
  CHECK(std::fabs(t.rows[1].gap.mid() - (kEGamma - 1.75718)) < 5e-6);
}

TEST_CASE("Ramanujan quantity") {
  const double L = std::log(5040.0);
  const double want = (19344.0 / 5040 - kEGamma * std::log(L)) * std::sqrt(L);
  CHECK(std::fabs(ramanujan_quantity(factor_small(5040)).mid() - want) < 1e-12);
  CHECK_THROWS_AS(ramanujan_quantity(factor_small(2)), DomainError);
  CHECK_NOTHROW(ramanujan_quantity(factor_small(3)));
}

TEST_CASE("count statistics") {
  const ClassifiedList sa = sa_numbers(200);
  ClassifiedList xa, ca;
  xa.horizon = ca.horizon = sa.horizon;
  for (const auto& e : sa.entries) {
    if (e.flags & kXA) xa.entries.push_back(e);
    if (e.flags & kCA) ca.entries.push_back(e);
  }
  const CountStatistics c = count_statistics(xa, ca, 200);
  CHECK(c.ca == c.ca_and_xa + c.ca_not_xa);
  CHECK(c.xa == c.ca_and_xa + c.xa_not_ca);
  CHECK(c.xa == xa.entries.size());
  CHECK(c.ca == ca_up_to(200).entries.size());

  // Table 1: among the first 10 XA, 8 are CA.
  const CountStatistics t = count_statistics(xa, ca, 158.7);
  CHECK(t.xa == 10);
  CHECK(t.ca_and_xa == 8);

  CHECK_THROWS_AS(count_statistics(xa, ca, 250), HorizonMismatch);
}

TEST_CASE("verdict reports") {
  const std::vector<CriterionVerdict> v = {robin_check(factor_small(10080)),
                                           robin_check(factor_small(5040))};
  std::ostringstream csv;
  write_verdicts(v, csv, ReportFormat::Csv);
  CHECK(csv.str().rfind("criterion_id,subject,holds,margin_lo,margin_hi\n", 0) == 0);

  std::ostringstream js;
  write_verdicts(v, js, ReportFormat::Json);
  const auto j = nlohmann::json::parse(js.str());
  REQUIRE(j.size() == 2);
  CHECK(j[0]["holds"] == "true");
  CHECK(j[1]["holds"] == "false");
  CHECK(j[0]["margin_lo"].get<double>() > 0);
}
