#include <doctest.h>

#include <cmath>
#include <filesystem>

#include "abundant/errors.hpp"
#include "abundant/primes.hpp"

using namespace abundant;

namespace {

bool naive_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

const PrimeTables& small_tables() {
  static const PrimeTables t = PrimeTables::build(20000);
  return t;
}

}  // namespace

TEST_CASE("sieve agrees with trial division") {
  const auto& t = small_tables();
  std::uint64_t count = 0;
  for (std::uint64_t n = 0; n <= 20000; ++n) {
    if (naive_prime(n)) ++count;
    REQUIRE(t.pi(n) == count);
  }
  CHECK(PrimeTables::build(100).pi(100) == 25);
  CHECK(t.nth_prime(1) == 2);
  CHECK(t.nth_prime(30) == 113);
  // one prime past the limit is available
  CHECK(t.nth_prime(t.pi(20000) + 1) == 20011);
  CHECK_THROWS_AS(t.nth_prime(t.pi(20000) + 2), OutOfRange);
  CHECK_THROWS_AS(t.nth_prime(0), OutOfRange);
  CHECK_THROWS_AS(t.pi(20001), RangeNotCovered);
  CHECK_THROWS_AS(PrimeTables::build(2), DomainError);
}

TEST_CASE("theta and psi enclosures") {
  const PrimeTables t = PrimeTables::build(10);
  const Interval th = t.theta(10).to_interval();
  const Interval ps = t.psi(10).to_interval();
  CHECK(th.lower() > 5.34710753071746);
  CHECK(th.upper() < 5.34710753071747);
  CHECK(th.width() < 1e-25);
  CHECK(ps.lower() > 7.83201418050546);
  CHECK(ps.upper() < 7.83201418050547);
  CHECK(t.psi_minus_theta(3).hi == 0);

  // exact comparison against sums of per-term MPFR logs
  const auto& big = small_tables();
  for (std::uint64_t x : {2ULL, 97ULL, 1000ULL, 19997ULL}) {
    Interval th_ref = Interval::from_long(0, 200);
    Interval ps_ref = Interval::from_long(0, 200);
    for (std::uint64_t p = 2; p <= x; ++p) {
      if (!naive_prime(p)) continue;
      const Interval lp = log(Interval::from_long(static_cast<long>(p), 200));
      th_ref = th_ref + lp;
      for (std::uint64_t q = p; q <= x; q *= p) ps_ref = ps_ref + lp;
    }
    const Interval a = big.theta(x).to_interval(200);
    const Interval b = big.psi(x).to_interval(200);
    CHECK(std::abs(a.mid() - th_ref.mid()) < 1e-9);
    CHECK(std::abs(b.mid() - ps_ref.mid()) < 1e-9);
    CHECK(!a.compare(th_ref).has_value());  // overlapping enclosures
    CHECK(!b.compare(ps_ref).has_value());
  }
  // theta <= psi and both nondecreasing
  for (std::uint64_t x = 2; x < 20000; ++x) {
    REQUIRE(big.theta(x).lo <= big.psi(x).lo);
    REQUIRE(big.theta(x).lo <= big.theta(x + 1).lo);
    REQUIRE(big.psi(x).lo <= big.psi(x + 1).lo);
  }
}

TEST_CASE("primorials, Mertens products and lcm") {
  const auto& t = small_tables();
  CHECK(materialize(t.primorial(4)) == 210);
  CHECK(t.primorial(30).largest_prime() == 113);
  CHECK(t.primorial(0).is_one());
  CHECK(t.mertens_product(2) == mpq_class(2));
  CHECK(t.mertens_product(3) == mpq_class(3));
  CHECK(t.mertens_product(10) == mpq_class(35, 8));
  const Interval ml = t.mertens_log(1000).to_interval();
  const double ref = std::log(t.mertens_product(1000).get_d());
  CHECK(std::abs(ml.mid() - ref) < 1e-12);
  CHECK(materialize(t.lcm_up_to(10)) == 2520);
  CHECK(materialize(t.lcm_up_to(16)) == 720720);
  // log lcm(1..m) = psi(m)
  const Interval l = log_n(t.lcm_up_to(5000));
  CHECK(!l.compare(t.psi(5000).to_interval()).has_value());
}

TEST_CASE("binary cache round trip") {
  const auto dir = std::filesystem::temp_directory_path() / "abundant_test_cache";
  std::filesystem::remove_all(dir);
  const PrimeTables a = PrimeTables::build_cached(5000, dir);
  CHECK(std::filesystem::exists(dir / "primes-5000-v1.bin"));
  const auto b = PrimeTables::load(dir / "primes-5000-v1.bin", 5000);
  REQUIRE(b.has_value());
  CHECK(b->pi(5000) == a.pi(5000));
  CHECK(b->psi(5000).lo == a.psi(5000).lo);
  CHECK(b->mertens_log(4999).hi == a.mertens_log(4999).hi);
  CHECK_FALSE(PrimeTables::load(dir / "primes-5000-v1.bin", 6000).has_value());
  std::filesystem::remove_all(dir);
}
