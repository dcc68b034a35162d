#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <set>
#include <sstream>

#include "abundant/arith.hpp"
#include "abundant/errors.hpp"
#include "abundant/generators.hpp"

using namespace abundant;

namespace {

// Plain divisor-sum sieve, independent of the library's.
std::vector<std::uint64_t> naive_sigma(std::uint64_t limit) {
  std::vector<std::uint64_t> s(limit + 1, 0);
  for (std::uint64_t d = 1; d <= limit; ++d)
    for (std::uint64_t m = d; m <= limit; m += d) s[m] += d;
  return s;
}

std::vector<std::uint64_t> naive_sa(std::uint64_t limit) {
  const auto s = naive_sigma(limit);
  std::vector<std::uint64_t> out;
  // sigma(n)/n > sigma(m)/m compared as sigma(n) * m > sigma(m) * n.
  std::uint64_t bn = 0, bs = 0;
  for (std::uint64_t n = 1; n <= limit; ++n) {
    if (bn == 0 || static_cast<unsigned __int128>(s[n]) * bn >
                       static_cast<unsigned __int128>(bs) * n) {
      out.push_back(n);
      bn = n;
      bs = s[n];
    }
  }
  return out;
}

std::vector<std::uint64_t> values(const std::vector<FactoredNumber>& v) {
  std::vector<std::uint64_t> out;
  for (const auto& n : v) out.push_back(materialize(n).get_ui());
  return out;
}

const ClassifiedList& sa200() {
  static const ClassifiedList l = sa_numbers(200);
  return l;
}

}  // namespace

TEST_CASE("CA thresholds and first steps") {
  const auto steps = ca_steps(3);
  REQUIRE(steps.size() == 3);
  CHECK(steps[0].prime == 2);
  CHECK(steps[0].exponent == 1);
  CHECK(steps[1].prime == 3);
  CHECK(steps[2].prime == 2);
  CHECK(steps[2].exponent == 2);
  CHECK(std::fabs(steps[0].threshold.mid() - std::log(1.5) / std::log(2.0)) < 1e-15);
  CHECK(std::fabs(steps[0].threshold.mid() - 0.58496) < 5e-6);
  CHECK(std::fabs(steps[1].threshold.mid() - 0.26186) < 5e-6);
  CHECK(std::fabs(steps[2].threshold.mid() - 0.22239) < 5e-6);
}

TEST_CASE("first nine CA numbers") {
  const auto ca = ca_numbers(9);
  CHECK(values(ca.numbers(kCA)) ==
        std::vector<std::uint64_t>{2, 6, 12, 60, 120, 360, 2520, 5040, 55440});
  for (const auto& e : ca.entries) CHECK(e.n.has_primorial_shape());
}

TEST_CASE("CA numbers of a given epsilon") {
  auto r = ca_for_epsilon(0.3);
  CHECK(materialize(r.smallest) == 2);
  CHECK(materialize(r.largest) == 2);

  const double f71 = ca_threshold(7, 1).mid();
  r = ca_for_epsilon(f71 * (1 - 1e-6));
  CHECK(materialize(r.largest) == 2520);

  const double f21 = std::log(1.5) / std::log(2.0);
  CHECK(materialize(ca_for_epsilon(f21 * (1 - 1e-9)).largest) == 2);
  CHECK_THROWS_AS(ca_for_epsilon(0), DomainError);
  CHECK_THROWS_AS(ca_for_epsilon(0.6), DomainError);
}

TEST_CASE("candidate enumeration") {
  CHECK(values(enumerate_candidates(3.3)) == std::vector<std::uint64_t>{2, 4, 6, 8, 12, 16, 24});
  CHECK(values(enumerate_candidates(0.7)) == std::vector<std::uint64_t>{2});
  const auto c = enumerate_candidates(9.2184);
  CHECK(std::find(c.begin(), c.end(), factor_small(10080)) != c.end());
  CHECK_THROWS_AS(enumerate_candidates(60, 1000), TooLarge);
}

TEST_CASE("SA prefix matches a divisor-sum sieve to 1e6") {
  const auto oracle = naive_sa(1'000'000);
  CHECK(brute_force_sa(130) == std::vector<std::uint64_t>{1, 2, 4, 6, 12, 24, 36, 48, 60, 120});
  CHECK(brute_force_sa(1'000'000) == oracle);

  const auto sa = sa_numbers(std::log(1e6)).numbers(kSA);
  CHECK(values(sa) == oracle);
}

TEST_CASE("pruned SA search equals the unpruned record scan") {
  const double h = 50;
  std::vector<FactoredNumber> all{FactoredNumber{}};
  for (auto& n : enumerate_candidates(h)) all.push_back(std::move(n));
  CHECK(record_scan(all) == sa_numbers(h).numbers(kSA));
}

TEST_CASE("SA structure") {
  const auto& l = sa200();
  const auto sa = l.numbers(kSA);
  REQUIRE(sa.size() > 400);
  CHECK(sa.front().is_one());

  std::vector<std::uint64_t> between;
  for (const auto& n : sa) {
    if (approx_log_n(n) > 12) break;
    const auto v = materialize(n).get_ui();
    if (v > 10080 && v <= 110880) between.push_back(v);
  }
  CHECK(between == std::vector<std::uint64_t>{15120, 25200, 27720, 55440, 110880});

  CHECK(sa[46] == parse_factored("(19#)(3#)^2 2"));
  CHECK(sa[47] == parse_factored("(17#)(5#)(3#) 2^3"));

  for (std::size_t i = 1; i < sa.size(); ++i) {
    CHECK(sa[i].has_primorial_shape());
    CHECK(compare_sigma_ratio(sa[i - 1], sa[i]) < 0);
    // n'/n <= 2
    CHECK(compare_value(sa[i], mul_prime(sa[i - 1], 2)) <= 0);
  }

  // CA and XA are subsets of the SA list.
  const auto ca = ca_up_to(200).numbers(kCA);
  const std::set<std::string> sa_set = [&] {
    std::set<std::string> s;
    for (const auto& n : sa) s.insert(format_pp(n));
    return s;
  }();
  for (const auto& n : ca) CHECK(sa_set.count(format_pp(n)) == 1);
  CHECK(l.count(kCA) == ca.size());
}

TEST_CASE("first ten XA numbers reproduce the table") {
  struct Row {
    const char* n;
    char type;
    double f;
    Prime p;
    double log;
    std::uint32_t k2;
  };
  const Row rows[] = {
      {"(7#)(3#)2^3", 's', 1.75581, 7, 9.21831, 5},
      {"(113#)(13#)(5#)(3#)^2 2^3", 'c', 1.75718, 113, 126.444, 8},
      {"(127#)(13#)(5#)(3#)^2 2^3", 'c', 1.75737, 127, 131.288, 8},
      {"(131#)(13#)(5#)(3#)^2 2^3", 'c', 1.75764, 131, 136.163, 8},
      {"(137#)(13#)(5#)(3#)^2 2^3", 'c', 1.75778, 137, 141.083, 8},
      {"(139#)(13#)(5#)(3#)^2 2^3", 'c', 1.75821, 139, 146.018, 8},
      {"(139#)(13#)(5#)(3#)^2 2^4", 'c', 1.75826, 139, 146.711, 9},
      {"(151#)(13#)(5#)(3#)^2 2^3", 's', 1.75831, 151, 156.039, 8},
      {"(151#)(13#)(5#)(3#)^2 2^4", 'c', 1.75849, 151, 156.732, 9},
      {"(151#)(13#)(7#)(3#)^2 2^4", 'c', 1.75860, 151, 158.678, 9},
  };
  const auto& l = sa200();
  std::vector<ListEntry> xa;
  for (const auto& e : l.entries)
    if (e.flags & kXA) xa.push_back(e);
  REQUIRE(xa.size() >= 10);
  for (std::size_t i = 0; i < 10; ++i) {
    const Row& r = rows[i];
    INFO("row " << i + 1);
    CHECK(xa[i].n == parse_factored(r.n));
    CHECK(bool(xa[i].flags & kCA) == (r.type == 'c'));
    const Metrics m = compute_metrics(xa[i].n);
    CHECK(std::fabs(m.f->mid() - r.f) <= 5e-6);
    CHECK(std::fabs(m.log_n.mid() - r.log) <= 5e-4);
    CHECK(m.p == r.p);
    CHECK(m.k2 == r.k2);
  }

  // XA entries are strict running maxima of f from 10080 on.
  for (std::size_t i = 1; i < xa.size(); ++i) CHECK(compare_f(xa[i - 1].n, xa[i].n) < 0);

  ClassifiedList short_list = sa_numbers(8);
  CHECK_THROWS_AS(xa_numbers(short_list), HorizonInsufficient);
}

TEST_CASE("f between consecutive CA numbers is bounded by its endpoints") {
  const std::uint64_t limit = 1'000'000;
  const auto s = naive_sigma(limit);
  auto f = [&](std::uint64_t n) {
    return double(s[n]) / (double(n) * std::log(std::log(double(n))));
  };
  const auto ca = values(ca_up_to(std::log(double(limit))).numbers(kCA));
  REQUIRE(ca.size() >= 10);
  for (std::size_t i = 1; i + 1 < ca.size(); ++i) {
    const std::uint64_t a = ca[i], b = ca[i + 1];
    const double cap = std::max(f(a), f(b)) * (1 + 1e-12);
    std::uint64_t worst = a;
    for (std::uint64_t n = a; n <= b; ++n)
      if (f(n) > f(worst)) worst = n;
    INFO("N = " << a << ", N' = " << b << ", argmax " << worst);
    CHECK(f(worst) <= cap);
  }
}

TEST_CASE("CA numbers with log N < p(N)") {
  const auto v = values(find_ca_log_less_p(100));
  for (std::uint64_t n : {2, 6, 12, 60})
    CHECK(std::find(v.begin(), v.end(), n) != v.end());
  CHECK(std::find(v.begin(), v.end(), 5040) == v.end());
}

TEST_CASE("list text round trip") {
  const auto& l = sa200();
  for (Notation nt : {Notation::PrimePowers, Notation::Primorial}) {
    std::stringstream ss;
    write_list(l, ss, nt);
    const ClassifiedList back = read_list(ss, true);
    REQUIRE(back.entries.size() == l.entries.size());
    for (std::size_t i = 0; i < l.entries.size(); ++i) {
      CHECK(back.entries[i].n == l.entries[i].n);
      CHECK(back.entries[i].flags == l.entries[i].flags);
    }
    CHECK(back.horizon == l.horizon);
  }

  const auto path = std::filesystem::temp_directory_path() / "abundant_roundtrip.txt";
  export_list(l, path);
  CHECK(import_list(path).entries.size() == l.entries.size());
  std::filesystem::remove(path);
}

TEST_CASE("list parsing errors") {
  std::istringstream empty("");
  CHECK(read_list(empty).entries.empty());

  std::istringstream one("2^5 3^2 5 7\n");
  const auto l = read_list(one);
  REQUIRE(l.entries.size() == 1);
  CHECK(materialize(l.entries[0].n) == 10080);

  std::istringstream dup("# abundant list v1\n2\n2^5 3 3\n");
  try {
    read_list(dup);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }

  std::istringstream desc("4\n2\n");
  CHECK_THROWS_AS(read_list(desc), ValidationError);

  // 8 is not SA: sigma(8)/8 < sigma(6)/6.
  std::istringstream notsa("1\ts\n2\ts\n6\ts\n8\ts\n");
  CHECK_THROWS_AS(read_list(notsa, true), ValidationError);
}
