#include "doctest.h"

#include "abundant/errors.hpp"
#include "abundant/interval.hpp"

using namespace abundant;

TEST_CASE("arithmetic encloses exact results") {
  const Interval third = Interval::from_long(1) / Interval::from_long(3);
  CHECK(third.lower() <= 1.0 / 3.0);
  CHECK(third.upper() >= 1.0 / 3.0);
  CHECK(third.width() < 1e-35);

  const Interval back = third * Interval::from_long(3);
  CHECK(back.contains(1.0));

  const Interval neg = Interval::hull("-2", "3") * Interval::hull("-5", "1");
  CHECK(neg.lower() == -15.0);
  CHECK(neg.upper() == 10.0);
}

TEST_CASE("division by an interval straddling zero is rejected") {
  CHECK_THROWS_AS(Interval::from_long(1) / Interval::hull("-1", "1"), DomainError);
}

TEST_CASE("compare is tri-state") {
  const Interval a = Interval::hull("1", "2");
  const Interval b = Interval::hull("3", "4");
  const Interval c = Interval::hull("1.5", "3.5");
  CHECK(a.compare(b) == std::weak_ordering::less);
  CHECK(b.compare(a) == std::weak_ordering::greater);
  CHECK_FALSE(a.compare(c).has_value());
  CHECK(Interval::from_long(7).compare(Interval::from_long(7)) == std::weak_ordering::equivalent);
}

TEST_CASE("constants") {
  const Constants k = constants();
  CHECK(k.euler_gamma.lower() > 0.5772156649);
  CHECK(k.euler_gamma.upper() < 0.5772156650);
  // 1.78107241 < e^gamma < 1.78107242
  CHECK(k.e_gamma.compare(Interval::from_decimal("1.78107241")) == std::weak_ordering::greater);
  CHECK(k.e_gamma.compare(Interval::from_decimal("1.78107242")) == std::weak_ordering::less);
  CHECK(k.e_gamma.width() < 1e-35);
  // 0.6482...
  CHECK(k.robin_const.lower() > 0.6482);
  CHECK(k.robin_const.upper() < 0.6483);
}

TEST_CASE("higher precision nests inside lower precision") {
  for (long v : {2L, 3L, 10080L, 123456789L}) {
    const Interval lo = log(Interval::from_long(v, 128));
    const Interval hi = log(Interval::from_long(v, 512));
    CHECK(lo.contains(hi));
    CHECK(hi.width() < lo.width());
  }
}

TEST_CASE("certified digits never exceed the enclosure") {
  CHECK(certified_digits(Interval::from_decimal("1.755814339"), 6) == "1.75581");
  CHECK(certified_digits(Interval::from_decimal("126.4441"), 6) == "126.444");
  // 1.751 and 1.759 disagree at three digits.
  CHECK(certified_digits(Interval::hull("1.751", "1.759"), 6) == "1.8");
  CHECK(certified_digits(Interval::hull("0.9", "1.2"), 6).empty());
}
