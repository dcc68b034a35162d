#include <doctest.h>

#include <cmath>

#include "abundant/bounds.hpp"
#include "abundant/errors.hpp"

using namespace abundant;

namespace {

const PrimeTables& tables() {
  static const PrimeTables t = PrimeTables::build(200000);
  return t;
}

}  // namespace

TEST_CASE("registry lists B1 to B10") {
  const auto& reg = bound_registry();
  REQUIRE(reg.size() == 10);
  for (std::size_t i = 0; i < reg.size(); ++i) CHECK(reg[i].id == "B" + std::to_string(i + 1));
  CHECK_THROWS_AS(verify_bound("B11", tables(), 2, 10), DomainError);
  CHECK_THROWS_AS(verify_bound("B1", tables(), 2, 200001), RangeNotCovered);
}

TEST_CASE("every bound holds on [2, 200000]") {
  for (const auto& b : bound_registry()) {
    const BoundReport r = verify_bound(b.id, tables(), 2, 200000);
    INFO(b.id << " worst " << r.worst_point << " " << r.worst_margin.str(8));
    CHECK(r.holds);
    CHECK(r.violations.empty());
    CHECK(r.points_checked > 0);
    CHECK(r.worst_margin.certainly_nonnegative());
  }
}

TEST_CASE("domain thresholds matter") {
  // B3 at small x: theta(x) > x(1 - 0.068/log x) fails, e.g. at x = 10.
  const BoundReport b3 = verify_bound("B3", tables(), 2, 100);
  CHECK(b3.range_checked == "empty");
  CHECK(b3.points_checked == 0);

  // Evaluate B3's inequality directly below its threshold through B1's tables.
  const double x = 10;
  CHECK(tables().theta(10).approx() < x * (1 - 0.068 / std::log(x)));
}

TEST_CASE("small worked values") {
  // psi(4) - theta(4) = log 2 < 1.42620 * 2
  const double d = tables().psi_minus_theta(4).approx();
  CHECK(d == doctest::Approx(std::log(2.0)).epsilon(1e-12));
  // Mertens product at 3 is exactly 3, above e^gamma log 3 (1 - 0.2/log^2 3)
  const double rhs = 1.7810724179901979 * std::log(3.0) * (1 - 0.2 / std::pow(std::log(3.0), 2));
  CHECK(rhs == doctest::Approx(1.632467649).epsilon(1e-8));
  CHECK(3.0 > rhs);
  const BoundReport b9 = verify_bound("B9", tables(), 3, 3);
  CHECK(b9.holds);
}

TEST_CASE("B8 walks prime indices from 463") {
  const BoundReport r = verify_bound("B8", tables(), 2, 200000);
  CHECK(r.range_checked == "k in [463, " + std::to_string(tables().pi(200000)) + "]");
  CHECK(r.holds);
}
