#include "doctest.h"

#include <numeric>

#include "abundant/arith.hpp"
#include "abundant/errors.hpp"
#include "abundant/factored.hpp"

using namespace abundant;

namespace {

// Oracle: sigma by summing every divisor.
std::uint64_t divisor_sum(std::uint64_t n) {
  std::uint64_t s = 0;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    s += d;
    if (d * d != n) s += n / d;
  }
  return s;
}

BigRational ratio(std::uint64_t a, std::uint64_t b) {
  BigRational r{mpz_class(a), mpz_class(b)};
  r.canonicalize();
  return r;
}

FactoredNumber n10080() { return make_factored({{2, 5}, {3, 2}, {5, 1}, {7, 1}}); }

FactoredNumber table_row2() {
  return from_primorials({{113, 1}, {13, 1}, {5, 1}, {3, 2}, {2, 3}});
}

}  // namespace

TEST_CASE("primality") {
  CHECK(is_prime(2));
  CHECK(is_prime(1000003));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(561));
  CHECK(is_prime(18446744073709551557ULL));
  CHECK_FALSE(is_prime(3215031751ULL));  // strong pseudoprime to bases 2,3,5,7
  CHECK(nth_small_prime(1) == 2);
  CHECK(nth_small_prime(30) == 113);
  CHECK(small_prime_index(113) == 30);
}

TEST_CASE("make_factored validates") {
  CHECK(materialize(n10080()) == 10080);
  CHECK(materialize(make_factored({})) == 1);
  CHECK(make_factored({}).is_one());
  CHECK_THROWS_AS(make_factored({{4, 1}}), NonPrimeFactor);
  CHECK_THROWS_AS(make_factored({{3, 1}, {3, 2}}), DuplicatePrime);
  CHECK_THROWS_AS(make_factored({{3, 0}}), ZeroExponent);
  // unsorted input is normalized
  CHECK(make_factored({{7, 1}, {2, 5}, {5, 1}, {3, 2}}) == n10080());
}

TEST_CASE("from_primorials adds multiplicities to every prime up to the top") {
  CHECK(from_primorials({{7, 1}, {3, 1}, {2, 3}}) == n10080());
  CHECK(materialize(from_primorials({{2, 1}})) == 2);
  const auto row2 = table_row2();
  CHECK(row2.k2() == 8);
  CHECK(row2.largest_prime() == 113);
  const std::pair<std::size_t, std::uint32_t> idx[] = {{4, 1}, {2, 1}, {1, 3}};
  CHECK(from_primorial_indices(idx) == n10080());
}

TEST_CASE("sigma_over_n matches the divisor-sum oracle") {
  CHECK(sigma_over_n(n10080()) == BigRational(39, 10));
  CHECK(sigma_over_n(FactoredNumber{}) == 1);
  CHECK(sigma_over_n(factor_small(12)) == BigRational(7, 3));
  for (std::uint64_t n = 1; n <= 20000; ++n) {
    REQUIRE(sigma_over_n(factor_small(n)) == ratio(divisor_sum(n), n));
  }
}

TEST_CASE("primorial sigma specializes to prod (q+1)/q") {
  FactoredNumber prim;
  BigRational expect = 1;
  for (std::size_t k = 1; k <= 40; ++k) {
    const Prime p = nth_small_prime(k);
    prim = mul_prime(prim, p);
    expect *= BigRational(p + 1, p);
    expect.canonicalize();
    REQUIRE(sigma_over_n(prim) == expect);
    REQUIRE(dedekind_psi_over_n(prim) == expect);
  }
}

TEST_CASE("phi, psi, d, omega") {
  // Oracle: count residues coprime to 210.
  int coprime = 0;
  for (int r = 1; r <= 210; ++r) coprime += std::gcd(r, 210) == 1;
  CHECK(coprime == 48);
  CHECK(phi_over_n(factor_small(210)) == ratio(coprime, 210));
  CHECK(phi_over_n(factor_small(210)) == BigRational(8, 35));
  CHECK(divisor_count(n10080()) == 72);
  CHECK(dedekind_psi_over_n(factor_small(2)) == BigRational(3, 2));
  CHECK(omega(n10080()) == 4);
  CHECK(phi(n10080()) == 2304);
  CHECK(phi_factored(n10080()) == factor_small(2304));
  CHECK(sigma(n10080()) == 39312);
}

TEST_CASE("sigma*phi/n^2 lies in (6/pi^2, 1)") {
  const Interval six_over_pi2 = Interval::from_long(6) / (pi_interval() * pi_interval());
  for (std::uint64_t n = 2; n <= 3000; ++n) {
    const auto f = factor_small(n);
    const BigRational prod = sigma_over_n(f) * phi_over_n(f);
    REQUIRE(prod < 1);
    REQUIRE(Interval::from_mpq(prod).compare(six_over_pi2) == std::weak_ordering::greater);
  }
}

TEST_CASE("log_n and f_value") {
  const Interval l = log_n(n10080());
  CHECK(l.lower() > 9.21830);
  CHECK(l.upper() < 9.21832);
  CHECK(log_n(factor_small(2)).lower() > 0.69314718055);
  CHECK(log_n(factor_small(2)).upper() < 0.69314718056);
  const Interval l2 = log_n(table_row2());
  CHECK(std::abs(l2.mid() - 126.444) < 5e-4);

  auto near = [](const Interval& v, double target, double tol) {
    return v.lower() > target - tol && v.upper() < target + tol;
  };
  CHECK(near(f_value(n10080()), 1.755814339, 1e-8));
  CHECK(near(f_value(factor_small(5040)), 1.790973367, 1e-8));
  CHECK(near(f_value(factor_small(55440)), 1.751246515, 1e-8));
  CHECK_THROWS_AS(f_value(factor_small(2)), DomainError);
  CHECK_THROWS_AS(f_value(FactoredNumber{}), DomainError);
  CHECK_THROWS_AS(log_log_n(FactoredNumber{}), DomainError);
}

TEST_CASE("log_n nests under precision escalation") {
  const auto n = table_row2();
  CHECK(log_n(n, 128).contains(log_n(n, 512)));
}

TEST_CASE("compare_f") {
  CHECK(compare_f(factor_small(5040), n10080()) == std::strong_ordering::greater);
  CHECK(compare_f(n10080(), n10080()) == std::strong_ordering::equal);
  CHECK(compare_f(n10080(), table_row2()) == std::strong_ordering::less);
  // antisymmetry and transitivity on a small set
  std::vector<FactoredNumber> xs;
  for (std::uint64_t n : {3, 4, 12, 60, 120, 5040, 10080, 55440, 720720}) xs.push_back(factor_small(n));
  for (const auto& a : xs) {
    for (const auto& b : xs) {
      REQUIRE(compare_f(a, b) == (0 <=> (compare_f(b, a) <=> 0)));
      for (const auto& c : xs) {
        if (compare_f(a, b) < 0 && compare_f(b, c) < 0) REQUIRE(compare_f(a, c) < 0);
      }
    }
  }
}

TEST_CASE("compare_value") {
  CHECK(compare_value(n10080(), factor_small(15120)) == std::strong_ordering::less);
  CHECK(compare_value(n10080(), n10080()) == std::strong_ordering::equal);
  CHECK(compare_value(factor_small(1024), factor_small(729)) == std::strong_ordering::greater);
  // near-equal magnitudes force the exact path
  const auto a = make_factored({{2, 1000}, {3, 1}});
  const auto b = make_factored({{2, 1000}, {5, 1}});
  CHECK(compare_value(a, b) == std::strong_ordering::less);
  for (std::uint64_t x = 1; x < 300; ++x) {
    for (std::uint64_t y = 1; y < 300; y += 7) {
      REQUIRE(compare_value(factor_small(x), factor_small(y)) == (x <=> y));
    }
  }
}

TEST_CASE("materialize and prime steps") {
  CHECK(materialize(make_factored({{2, 5}, {3, 2}, {5, 1}, {7, 1}, {11, 1}})) == 110880);
  CHECK_THROWS_AS(materialize(make_factored({{2, 100000}})), TooLarge);
  CHECK(mul_prime(factor_small(6), 2) == factor_small(12));
  CHECK(div_prime(n10080(), 7) == factor_small(1440));
  CHECK_THROWS_AS(div_prime(n10080(), 11), NotDivisible);
}

TEST_CASE("text forms") {
  CHECK(format_pp(n10080()) == "2^5 3^2 5 7");
  CHECK(format_pp(FactoredNumber{}) == "1");
  CHECK(format_primorial(n10080()) == "(7#)(3#)2^3");
  CHECK(format_primorial(from_primorials({{151, 1}, {13, 1}, {7, 1}, {3, 2}, {2, 4}})) ==
        "(151#)(13#)(7#)(3#)^2 2^4");
  CHECK(format_primorial(factor_small(2)) == "2");
  CHECK(format_primorial(factor_small(6)) == "(3#)");
  CHECK(parse_factored("2^5 3^2 5 7") == n10080());
  CHECK(parse_factored("(7#)(3#)2^3=10080") == n10080());
  CHECK(parse_factored("(7#)(3#)(2)^3") == n10080());
  CHECK(parse_factored("1").is_one());
  CHECK_THROWS_AS(parse_factored("2^5 3 3"), DuplicatePrime);
  CHECK_THROWS_AS(parse_factored("4^2"), NonPrimeFactor);
  CHECK_THROWS_AS(parse_factored("2^x"), DomainError);
  CHECK_THROWS_AS(parse_factored("(7#)(3#)2^3=10081"), ValidationError);
  // round trip
  for (std::uint64_t n = 1; n < 2000; ++n) {
    const auto f = factor_small(n);
    REQUIRE(parse_factored(format_pp(f)) == f);
    REQUIRE(parse_factored(format_primorial(f)) == f);
  }
}
