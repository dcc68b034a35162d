#include <doctest.h>

#include <cmath>
#include <sstream>

#include "abundant/arith.hpp"
#include "abundant/errors.hpp"
#include "abundant/properties.hpp"

using namespace abundant;

namespace {

const ClassifiedList& sa200() {
  static const ClassifiedList l = sa_numbers(200);
  return l;
}

std::string dump(const PropertyReport& r) {
  std::ostringstream os;
  os << r.property_id << '|' << r.population << '|' << r.condition_filter << '|' << r.unit_count
     << '|' << r.pass_count << '|' << r.filtered_count << '|'
     << (r.first_hold_index ? std::to_string(*r.first_hold_index) : "-");
  for (const auto& v : r.violations) os << '|' << v.index << ' ' << v.subject << ' ' << v.detail;
  return os.str();
}

PropertyReport run(const std::string& id) {
  for (const auto& info : property_registry()) {
    if (info.id != id) continue;
    const auto pop = sa200().numbers(info.natural == Population::SA ? kSA : kXA);
    return run_property(id, pop, info.natural, sa200().horizon);
  }
  throw DomainError(id);
}

// B^A / n^n exactly, as a pair to be cross-multiplied.
struct Tower {
  mpz_class num, den;
};

mpz_class pow_mpz(const mpz_class& b, const mpz_class& e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e.get_ui());
  return r;
}

Tower tower(const mpz_class& a, const mpz_class& b, const mpz_class& n) {
  return {pow_mpz(b, a), pow_mpz(n, n)};
}

int cmp(const Tower& x, const Tower& y) {
  const mpz_class l = x.num * y.den, r = y.num * x.den;
  return l < r ? -1 : (l > r ? 1 : 0);
}

}  // namespace

TEST_CASE("registry ids are stable") {
  std::vector<std::string> ids;
  for (const auto& p : property_registry()) ids.push_back(p.id);
  std::vector<std::string> want;
  for (int i = 1; i <= 13; ++i) want.push_back("P" + std::to_string(i));
  for (int i = 1; i <= 10; ++i) want.push_back("S" + std::to_string(i));
  CHECK(ids == want);
  CHECK_THROWS_AS(run_property("P14", {}, Population::SA), DomainError);
  CHECK(parse_population("XA") == Population::XA);
  CHECK_THROWS_AS(parse_population("ha"), DomainError);
}

TEST_CASE("every property accounts for every unit") {
  for (const auto& info : property_registry()) {
    const PropertyReport r = run(info.id);
    INFO(dump(r));
    CHECK(r.pass_count + r.violations.size() + r.filtered_count == r.unit_count);
    CHECK(r.unit_count > 0);
    CHECK(!r.exploratory);
    CHECK(r.large_enough == info.large_enough);
  }
}

TEST_CASE("properties hold to log n = 200") {
  for (const auto& info : property_registry()) {
    if (info.id == "P5") continue;
    const PropertyReport r = run(info.id);
    INFO(dump(r));
    CHECK(r.holds());
    if (!r.large_enough) CHECK(r.violations.empty());
    if (r.large_enough) {
      REQUIRE(r.first_hold_index.has_value());
      for (const auto& v : r.violations) CHECK(v.index < *r.first_hold_index);
    }
  }
}

TEST_CASE("P5 fails only at the first SA pair, by equality") {
  const PropertyReport r = run("P5");
  REQUIRE(r.violations.size() == 1);
  CHECK(r.violations[0].index == 2);
  CHECK(r.violations[0].subject == "1 -> 2");
  CHECK(r.violations[0].detail == "ratio 3/2 >= 3/2");
}

TEST_CASE("filters") {
  // P1-P4 skip 10080 itself; P8-P10 skip pairs starting at 1, 2, 4.
  CHECK(run("P1").filtered_count == 1);
  CHECK(run("P2").filtered_count == 1);
  CHECK(run("P3").filtered_count == 1);
  CHECK(run("P4").filtered_count == 0);
  CHECK(run("P8").filtered_count == 3);
  CHECK(run("P13").filtered_count == 49);
  CHECK(run("S8").filtered_count == 2);
  const auto one = run_property("P1", {factor_small(10080)}, Population::XA);
  CHECK(one.filtered_count == 1);
  CHECK(one.pass_count == 0);
}

TEST_CASE("P3 between table rows 6 and 7") {
  const std::vector<FactoredNumber> pop = {parse_factored("(139#)(13#)(5#)(3#)^2 2^3"),
                                           parse_factored("(139#)(13#)(5#)(3#)^2 2^4")};
  const PropertyReport r = run_property("P3", pop, Population::XA);
  CHECK(r.unit_count == 1);
  CHECK(r.pass_count == 1);
}

TEST_CASE("S1 on the first SA entries") {
  const std::vector<FactoredNumber> pop = {factor_small(1), factor_small(2), factor_small(4),
                                           factor_small(6), factor_small(12)};
  std::vector<long> g;
  for (const auto& n : pop) g.push_back(mpz_class(sigma(n) - materialize(n)).get_si());
  CHECK(g == std::vector<long>{0, 1, 3, 6, 16});
  const PropertyReport r = run_property("S1", pop, Population::SA);
  CHECK(r.pass_count == 4);
  CHECK(r.violations.empty());
}

TEST_CASE("P4 on SA reproduces the printed counterexamples") {
  const PropertyReport r = run_property("P4", sa200().numbers(kSA), Population::SA);
  bool s48 = false, s174 = false;
  for (const auto& v : r.violations) {
    if (v.index == 48 && v.detail == "(i) p drops 19 -> 17") s48 = true;
    if (v.index == 174 && v.detail == "(ii) d ratio 35/36") s174 = true;
  }
  CHECK(s48);
  CHECK(s174);
}

TEST_CASE("large-enough claims report where they start holding") {
  const PropertyReport s9 = run("S9");
  REQUIRE(s9.first_hold_index);
  CHECK(!s9.violations.empty());
  CHECK(*s9.first_hold_index == s9.violations.back().index + 1);
}

TEST_CASE("reports are deterministic") {
  for (const char* id : {"P1", "P10", "S4", "S7"}) CHECK(dump(run(id)) == dump(run(id)));
}

TEST_CASE("remarks") {
  const RemarkReport r = replicate_remarks(sa200());
  for (const auto& c : r.checks) {
    INFO(c.name << ": " << c.detail);
    CHECK(c.passed);
  }
  CHECK(r.all_passed());
  CHECK(r.checks.size() >= 12);
  CHECK_THROWS_AS(replicate_remarks(sa_numbers(100)), HorizonInsufficient);
}

TEST_CASE("tower comparisons agree with exact integers on SA up to 1e4") {
  std::vector<FactoredNumber> pop;
  for (const auto& n : sa200().numbers(kSA)) {
    if (approx_log_n(n) > std::log(1e4)) break;
    pop.push_back(n);
  }
  REQUIRE(pop.size() >= 15);

  struct Vals {
    mpz_class n, s, f, p;
  };
  std::vector<Vals> v;
  for (const auto& n : pop) v.push_back({materialize(n), sigma(n), phi(n), dedekind_psi(n)});

  // Exact monotonicity per pair, compared with the property verdicts.
  auto exact_ok = [&](std::size_t i, int which) {
    const Vals &a = v[i - 1], &b = v[i];
    switch (which) {
      case 0: return cmp(tower(b.s, b.s, b.n), tower(a.s, a.s, a.n)) >= 0;  // S2
      case 1: return cmp(tower(b.f, b.s, b.n), tower(a.f, a.s, a.n)) <= 0;  // P9 (1)
      case 2: return cmp(tower(b.f, b.p, b.n), tower(a.f, a.p, a.n)) <= 0;  // P9 (2)
      case 3: return cmp(tower(b.s, b.p, b.n), tower(a.s, a.p, a.n)) >= 0;  // P10 (1)
      case 4: return cmp(tower(b.s, b.f, b.n), tower(a.s, a.f, a.n)) >= 0;  // P10 (2)
      case 5: return cmp(tower(b.p, b.f, b.n), tower(a.p, a.f, a.n)) >= 0;  // P10 (3)
      default: return cmp(tower(b.p, b.s, b.n), tower(a.p, a.s, a.n)) >= 0;  // S6
    }
  };
  auto violated = [](const PropertyReport& r, std::size_t index) {
    for (const auto& x : r.violations)
      if (x.index == index) return true;
    return false;
  };

  const auto s2 = run_property("S2", pop, Population::SA);
  const auto p9 = run_property("P9", pop, Population::SA);
  const auto p10 = run_property("P10", pop, Population::SA);
  const auto s6 = run_property("S6", pop, Population::SA);
  for (std::size_t i = 1; i < pop.size(); ++i) {
    const std::size_t idx = i + 1;
    INFO("pair ending at " << idx);
    const bool pmono = pop[i].largest_prime() >= pop[i - 1].largest_prime();
    CHECK(violated(s2, idx) == !exact_ok(i, 0));
    if (idx >= 5) {
      CHECK(violated(p9, idx) == !(exact_ok(i, 1) && exact_ok(i, 2)));
      CHECK(violated(p10, idx) ==
            !(exact_ok(i, 3) && exact_ok(i, 4) && (!pmono || exact_ok(i, 5))));
    }
    if (pmono) CHECK(violated(s6, idx) == !exact_ok(i, 6));
  }
}
