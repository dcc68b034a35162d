#include "abundant/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "abundant/errors.hpp"

namespace abundant {

namespace {

// Double margins above this are accepted without an interval recheck. The
// double evaluation error of every margin below is under 1e-12.
constexpr double kFastSlack = 1e-9;
constexpr double kExpGamma = 1.7810724179901979;

enum class Quantity { Theta, Psi, PrimeCount, Mertens, PsiMinusTheta };

using FastMargin = double (*)(double x, double log_x, double value);
using ExactMargin = Interval (*)(const Interval& x, const Interval& log_x, const Interval& value);

struct Side {
  const char* name;
  std::uint64_t domain_min;
  Quantity quantity;
  FastMargin fast;
  ExactMargin exact;
};

enum class Walk { Reals, PrimeGaps, Grid };

struct BoundDef {
  BoundInfo info;
  Walk walk;
  std::vector<Side> sides;
};

Interval dec(const char* s, mpfr_prec_t prec) { return Interval::from_decimal(s, prec); }
Interval one(mpfr_prec_t prec) { return Interval::from_long(1, prec); }

// Normalized deviation log x (v/x - 1) for the x(1 +- a/log x) family.
double dev(double x, double l, double v) { return l * (v / x - 1.0); }
Interval dev(const Interval& x, const Interval& l, const Interval& v) {
  return l * (v / x - one(x.precision()));
}

template <const char* A>
Interval lower_slack(const Interval& x, const Interval& l, const Interval& v) {
  return dev(x, l, v) + dec(A, x.precision());
}
template <const char* A>
Interval upper_slack(const Interval& x, const Interval& l, const Interval& v) {
  return dec(A, x.precision()) - dev(x, l, v);
}

constexpr char k1_25[] = "1.25";
constexpr char k0_021[] = "0.021";
constexpr char k0_9[] = "0.9";
constexpr char k0_5[] = "0.5";
constexpr char k0_068[] = "0.068";
constexpr char k0_045[] = "0.045";
constexpr char k0_0221[] = "0.0221";
constexpr char k1_2762[] = "1.2762";
constexpr char k1_42620[] = "1.42620";
constexpr char k0_2[] = "0.2";

// pi(x) against x/log x (1 + c/log x): slack in c is (pi log x / x - 1) log x - c.
double pi_dev(double x, double l, double v) { return (v * l / x - 1.0) * l; }
Interval pi_dev(const Interval& x, const Interval& l, const Interval& v) {
  return (v * l / x - one(x.precision())) * l;
}

// Mertens: with R = prod p/(p-1) / (e^gamma log x), slack is 0.2 -+ (R-1) log^2 x.
double mertens_dev(double, double l, double v) {
  return (std::exp(v) / (kExpGamma * l) - 1.0) * l * l;
}
Interval mertens_dev(const Interval& x, const Interval& l, const Interval& v) {
  const Interval r = exp(v) / (exp_gamma(x.precision()) * l);
  return (r - one(x.precision())) * l * l;
}

const std::vector<BoundDef>& definitions() {
  static const std::vector<BoundDef> defs = [] {
    std::vector<BoundDef> d;
    d.push_back({{"B1", "x(1-1.25/log x) < theta(x) < x(1+0.021/log x), x > 1",
                  "slack in the constants 1.25 and 0.021"},
                 Walk::Reals,
                 {{"lower", 2, Quantity::Theta,
                   [](double x, double l, double v) { return dev(x, l, v) + 1.25; },
                   lower_slack<k1_25>},
                  {"upper", 2, Quantity::Theta,
                   [](double x, double l, double v) { return 0.021 - dev(x, l, v); },
                   upper_slack<k0_021>}}});
    d.push_back({{"B2", "x(1-0.9/log x) < psi(x) < x(1+0.5/log x), x > 1",
                  "slack in the constants 0.9 and 0.5"},
                 Walk::Reals,
                 {{"lower", 2, Quantity::Psi,
                   [](double x, double l, double v) { return dev(x, l, v) + 0.9; },
                   lower_slack<k0_9>},
                  {"upper", 2, Quantity::Psi,
                   [](double x, double l, double v) { return 0.5 - dev(x, l, v); },
                   upper_slack<k0_5>}}});
    d.push_back({{"B3", "theta(x) > x(1-0.068/log x), x >= 89909", "slack in the constant 0.068"},
                 Walk::Reals,
                 {{"lower", 89909, Quantity::Theta,
                   [](double x, double l, double v) { return dev(x, l, v) + 0.068; },
                   lower_slack<k0_068>}}});
    d.push_back({{"B4", "psi(x) < x(1+0.045/log x), x >= 43730", "slack in the constant 0.045"},
                 Walk::Reals,
                 {{"upper", 43730, Quantity::Psi,
                   [](double x, double l, double v) { return 0.045 - dev(x, l, v); },
                   upper_slack<k0_045>}}});
    d.push_back({{"B5", "psi(x) > x(1-0.0221/log x), x >= 89909", "slack in the constant 0.0221"},
                 Walk::Reals,
                 {{"lower", 89909, Quantity::Psi,
                   [](double x, double l, double v) { return dev(x, l, v) + 0.0221; },
                   lower_slack<k0_0221>}}});
    d.push_back(
        {{"B6",
          "x/log x (1+1/log x) < pi(x) for x >= 599; pi(x) < x/log x (1+1.2762/log x) for x > 1",
          "slack in the constants 1 and 1.2762"},
         Walk::Reals,
         {{"lower", 599, Quantity::PrimeCount,
           [](double x, double l, double v) { return pi_dev(x, l, v) - 1.0; },
           [](const Interval& x, const Interval& l, const Interval& v) {
             return pi_dev(x, l, v) - one(x.precision());
           }},
          {"upper", 2, Quantity::PrimeCount,
           [](double x, double l, double v) { return 1.2762 - pi_dev(x, l, v); },
           [](const Interval& x, const Interval& l, const Interval& v) {
             return dec(k1_2762, x.precision()) - pi_dev(x, l, v);
           }}}});
    d.push_back({{"B7", "psi(x) - theta(x) < 1.42620 sqrt(x), x > 0",
                  "1.42620 - (psi(x) - theta(x))/sqrt(x)"},
                 Walk::Reals,
                 {{"upper", 1, Quantity::PsiMinusTheta,
                   [](double x, double, double v) { return 1.42620 - v / std::sqrt(x); },
                   [](const Interval& x, const Interval&, const Interval& v) {
                     return dec(k1_42620, x.precision()) - v / sqrt(x);
                   }}}});
    d.push_back({{"B8", "p_{k+1} <= p_k (1 + 1/(2 log^2 p_k)), k >= 463",
                  "1 - 2 log^2 p_k (p_{k+1} - p_k)/p_k"},
                 Walk::PrimeGaps,
                 {}});
    d.push_back({{"B9",
                  "e^gamma log x (1-0.2/log^2 x) < prod_{p<=x} p/(p-1) for x > 1; "
                  "prod_{p<=x} p/(p-1) < e^gamma log x (1+0.2/log^2 x) for x >= 2973",
                  "slack in the constant 0.2"},
                 Walk::Reals,
                 {{"lower", 2, Quantity::Mertens,
                   [](double x, double l, double v) { return mertens_dev(x, l, v) + 0.2; },
                   [](const Interval& x, const Interval& l, const Interval& v) {
                     return mertens_dev(x, l, v) + dec(k0_2, x.precision());
                   }},
                  {"upper", 2973, Quantity::Mertens,
                   [](double x, double l, double v) { return 0.2 - mertens_dev(x, l, v); },
                   [](const Interval& x, const Interval& l, const Interval& v) {
                     return dec(k0_2, x.precision()) - mertens_dev(x, l, v);
                   }}}});
    d.push_back({{"B10", "t/(1+t) < log(1+t) < t, t > 0",
                  "log(1+t)(1+t)/t - 1 and 1 - log(1+t)/t"},
                 Walk::Grid,
                 {}});
    return d;
  }();
  return defs;
}

const BoundDef& find_def(const std::string& id) {
  for (const auto& d : definitions()) {
    if (d.info.id == id) return d;
  }
  throw DomainError("unknown bound id: " + id);
}

FixedRange quantity_at(const PrimeTables& t, Quantity q, std::uint64_t x) {
  switch (q) {
    case Quantity::Theta:
      return t.theta(x);
    case Quantity::Psi:
      return t.psi(x);
    case Quantity::Mertens:
      return t.mertens_log(x);
    case Quantity::PsiMinusTheta:
      return t.psi_minus_theta(x);
    case Quantity::PrimeCount: {
      const Fixed96 c = static_cast<Fixed96>(t.pi(x)) << kFixedFractionBits;
      return {c, c};
    }
  }
  return {};
}

// Accumulates verdicts; exact rechecks go through `exact`, which returns the
// certified margin for a recorded point.
class Tally {
 public:
  explicit Tally(BoundReport& r) : r_(r) {}

  template <class Label, class Exact>
  void check(const char* side, double fast, const Label& label, const Exact& exact) {
    ++r_.points_checked;
    if (!(fast >= worst_fast_)) {
      worst_fast_ = fast;
      worst_side_ = side;
      worst_label_ = label();
      worst_exact_ = exact;
    }
    if (fast > kFastSlack) return;
    Truth verdict = Truth::Unresolved;
    Interval m;
    for (mpfr_prec_t prec = kBasePrecision; prec <= 2 * kBasePrecision; prec *= 2) {
      m = exact(prec);
      if (m.certainly_positive()) return;
      if (m.certainly_negative()) {
        verdict = Truth::False;
        break;
      }
    }
    ++r_.violation_count;
    if (r_.violations.size() < BoundReport::kMaxRecorded) {
      r_.violations.push_back({side, label(), verdict, m.str(12)});
    }
  }

  // Non-strict inequality: a zero margin is acceptable.
  template <class Label, class Exact>
  void check_nonstrict(const char* side, double fast, const Label& label, const Exact& exact) {
    ++r_.points_checked;
    if (!(fast >= worst_fast_)) {
      worst_fast_ = fast;
      worst_side_ = side;
      worst_label_ = label();
      worst_exact_ = exact;
    }
    if (fast > kFastSlack) return;
    const Interval m = exact(kBasePrecision);
    if (m.certainly_nonnegative()) return;
    ++r_.violation_count;
    if (r_.violations.size() < BoundReport::kMaxRecorded) {
      r_.violations.push_back({side, label(),
                               m.certainly_negative() ? Truth::False : Truth::Unresolved,
                               m.str(12)});
    }
  }

  void finish() {
    r_.holds = r_.violation_count == 0;
    if (worst_exact_) {
      r_.worst_margin = worst_exact_(kBasePrecision);
      r_.worst_point = worst_side_ + " " + worst_label_;
    }
  }

 private:
  BoundReport& r_;
  double worst_fast_ = std::numeric_limits<double>::infinity();
  std::string worst_side_;
  std::string worst_label_;
  std::function<Interval(mpfr_prec_t)> worst_exact_;
};

void walk_reals(const BoundDef& def, const PrimeTables& t, std::uint64_t from, std::uint64_t to,
                BoundReport& r) {
  Tally tally(r);
  std::uint64_t lo_all = to + 1;
  for (const Side& side : def.sides) {
    const std::uint64_t start = std::max({from, side.domain_min, std::uint64_t{1}});
    lo_all = std::min(lo_all, start);
    if (start > to) continue;
    FixedRange prev{};
    double prev_fast = 0;
    for (std::uint64_t x = start; x <= to; ++x) {
      const FixedRange v = quantity_at(t, side.quantity, x);
      const double xd = static_cast<double>(x);
      const double l = std::log(xd);
      auto exact_for = [&side, x](FixedRange val) {
        return [&side, x, val](mpfr_prec_t prec) {
          const Interval xi = Interval::from_long(static_cast<long>(x), prec);
          return side.exact(xi, log(xi), val.to_interval(prec));
        };
      };
      // Left limit x -> N- sees the value at N - 1 against the bound at N.
      if (x > start && (v.lo != prev.lo || v.hi != prev.hi)) {
        tally.check(
            side.name, side.fast(xd, l, prev_fast),
            [x] { return "x->" + std::to_string(x) + "-"; }, exact_for(prev));
      }
      const double vf = v.approx();
      tally.check(
          side.name, side.fast(xd, l, vf), [x] { return "x=" + std::to_string(x); },
          exact_for(v));
      prev = v;
      prev_fast = vf;
    }
  }
  r.range_checked = lo_all > to ? "empty"
                                : "[" + std::to_string(lo_all) + ", " + std::to_string(to) + "]";
  tally.finish();
}

void walk_prime_gaps(const PrimeTables& t, std::uint64_t from, std::uint64_t to, BoundReport& r) {
  Tally tally(r);
  const std::size_t k_max = t.pi(to);
  std::size_t k_first = 0;
  std::size_t k = std::max<std::size_t>(463, t.pi(from > 0 ? from - 1 : 0) + 1);
  for (; k <= k_max; ++k) {
    if (k_first == 0) k_first = k;
    const Prime p = t.nth_prime(k);
    const Prime q = t.nth_prime(k + 1);
    const double l = std::log(static_cast<double>(p));
    const double fast =
        1.0 - 2.0 * l * l * static_cast<double>(q - p) / static_cast<double>(p);
    tally.check_nonstrict(
        "gap", fast, [k, p] { return "k=" + std::to_string(k) + " p=" + std::to_string(p); },
        [p, q](mpfr_prec_t prec) {
          const Interval lp = log(Interval::from_long(static_cast<long>(p), prec));
          const Interval gap = Interval::from_mpq(mpq_class(mpz_class(q - p), mpz_class(p)), prec);
          return one(prec) - lp * lp * gap * 2;
        });
  }
  r.range_checked = k_first == 0 ? "empty"
                                 : "k in [" + std::to_string(k_first) + ", " +
                                       std::to_string(k_max) + "]";
  tally.finish();
}

void walk_grid(BoundReport& r) {
  Tally tally(r);
  std::vector<mpq_class> grid;
  for (long j = 1; j <= 10000; ++j) grid.emplace_back(j, 1000);
  for (int e = -60; e <= 60; ++e) {
    mpq_class v = 1;
    if (e >= 0) {
      mpz_class n;
      mpz_ui_pow_ui(n.get_mpz_t(), 2, static_cast<unsigned long>(e));
      v = n;
    } else {
      mpz_class d;
      mpz_ui_pow_ui(d.get_mpz_t(), 2, static_cast<unsigned long>(-e));
      v = mpq_class(1, d);
    }
    grid.push_back(v);
  }
  for (auto& t : grid) t.canonicalize();
  for (const mpq_class& t : grid) {
    const double td = t.get_d();
    const double lg = std::log1p(td);
    auto label = [&t] { return "t=" + t.get_str(); };
    tally.check("lower", lg * (1.0 + td) / td - 1.0, label, [t](mpfr_prec_t prec) {
      const Interval ti = Interval::from_mpq(t, prec);
      return log1p(ti) * (ti + 1) / ti - one(prec);
    });
    tally.check("upper", 1.0 - lg / td, label, [t](mpfr_prec_t prec) {
      const Interval ti = Interval::from_mpq(t, prec);
      return one(prec) - log1p(ti) / ti;
    });
  }
  r.range_checked = "t in {j/1000 : 1 <= j <= 10000} and {2^e : -60 <= e <= 60}";
  tally.finish();
}

}  // namespace

const std::vector<BoundInfo>& bound_registry() {
  static const std::vector<BoundInfo> infos = [] {
    std::vector<BoundInfo> v;
    for (const auto& d : definitions()) v.push_back(d.info);
    return v;
  }();
  return infos;
}

BoundReport verify_bound(const std::string& id, const PrimeTables& tables, std::uint64_t from,
                         std::uint64_t to) {
  const BoundDef& def = find_def(id);
  BoundReport r;
  r.bound_id = def.info.id;
  if (def.walk == Walk::Grid) {
    walk_grid(r);
    return r;
  }
  if (to > tables.limit()) {
    throw RangeNotCovered("bound range end " + std::to_string(to) + " exceeds table limit " +
                          std::to_string(tables.limit()));
  }
  if (from > to) throw DomainError("empty bound range");
  if (def.walk == Walk::PrimeGaps) {
    walk_prime_gaps(tables, from, to, r);
  } else {
    walk_reals(def, tables, from, to, r);
  }
  return r;
}

}  // namespace abundant
