#include "abundant/properties.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>

#include "abundant/arith.hpp"
#include "abundant/errors.hpp"

namespace abundant {

std::string to_string(Population p) {
  switch (p) {
    case Population::SA: return "SA";
    case Population::XA: return "XA";
    case Population::CA: return "CA";
  }
  return "?";
}

Population parse_population(std::string_view text) {
  std::string t(text);
  std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::tolower(c); });
  if (t == "sa") return Population::SA;
  if (t == "xa") return Population::XA;
  if (t == "ca") return Population::CA;
  throw DomainError("unknown population: " + std::string(text));
}

bool PropertyReport::holds() const {
  if (!large_enough) return violations.empty();
  return first_hold_index.has_value();
}

bool RemarkReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const RemarkCheck& c) { return c.passed; });
}

namespace {

using Ord = std::weak_ordering;

const FactoredNumber& n10080() {
  static const FactoredNumber v = factor_small(10080);
  return v;
}

bool above_10080(const FactoredNumber& n) { return compare_value(n, n10080()) > 0; }

mpz_class pow_ui(Prime q, unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), q, e);
  return r;
}

// Exact a / b.
BigRational value_ratio(const FactoredNumber& a, const FactoredNumber& b) {
  mpz_class num = 1, den = 1;
  auto fa = a.factors();
  auto fb = b.factors();
  std::size_t i = 0, j = 0;
  while (i < fa.size() || j < fb.size()) {
    if (j == fb.size() || (i < fa.size() && fa[i].prime < fb[j].prime)) {
      num *= pow_ui(fa[i].prime, fa[i].exponent);
      ++i;
    } else if (i == fa.size() || fb[j].prime < fa[i].prime) {
      den *= pow_ui(fb[j].prime, fb[j].exponent);
      ++j;
    } else {
      long d = long(fa[i].exponent) - long(fb[j].exponent);
      if (d > 0) num *= pow_ui(fa[i].prime, d);
      if (d < 0) den *= pow_ui(fa[i].prime, -d);
      ++i;
      ++j;
    }
  }
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

template <class A, class B>
Ord order(A&& a, B&& b, const std::string& what) {
  return compare_escalating(
      [&](mpfr_prec_t prec) { return std::pair<Interval, Interval>{a(prec), b(prec)}; },
      [&] { return what; });
}

Interval Q(const BigRational& q, mpfr_prec_t prec) { return Interval::from_mpq(q, prec); }
Interval Z(const mpz_class& z, mpfr_prec_t prec) { return Interval::from_mpz(z, prec); }

enum class Fn { Sigma, Phi, Psi };

BigRational over_n(Fn fn, const FactoredNumber& n) {
  switch (fn) {
    case Fn::Sigma: return sigma_over_n(n);
    case Fn::Phi: return phi_over_n(n);
    case Fn::Psi: return dedekind_psi_over_n(n);
  }
  return 1;
}

// T(n) / n for T(n) = A(n) log B(n) - n log n, the log of A^B-type towers
// B(n)^{A(n)} / n^n, with log B = log n + log(B/n).
Interval tower(Fn a, Fn b, const FactoredNumber& n, mpfr_prec_t prec) {
  Interval L = log_n(n, prec);
  Interval logB = L + log(Q(over_n(b, n), prec));
  return Q(over_n(a, n), prec) * logB - L;
}

// Order of T(next) vs T(cur) where both are n * t(n).
Ord order_scaled(const FactoredNumber& cur, const FactoredNumber& next,
                 const std::function<Interval(const FactoredNumber&, mpfr_prec_t)>& t,
                 const std::string& what) {
  const BigRational r = value_ratio(next, cur);
  return order([&](mpfr_prec_t p) { return Q(r, p) * t(next, p); },
               [&](mpfr_prec_t p) { return t(cur, p); }, what);
}

std::string pair_name(const FactoredNumber& a, const FactoredNumber& b) {
  return format_pp(a) + " -> " + format_pp(b);
}

// One unit of a property: an entry or a consecutive pair. Parts that do
// not apply are simply not checked.
struct Unit {
  std::size_t index;
  std::string subject;
  int applicable = 0;
  std::string failures;

  void check(bool ok, const std::string& what) {
    ++applicable;
    if (ok) return;
    if (!failures.empty()) failures += "; ";
    failures += what;
  }
};

struct Tally {
  PropertyReport& r;
  void add(Unit u) {
    ++r.unit_count;
    if (!u.failures.empty()) {
      r.violations.push_back({u.index, std::move(u.subject), std::move(u.failures)});
    } else if (u.applicable == 0) {
      ++r.filtered_count;
    } else {
      ++r.pass_count;
    }
  }
};

using Pop = std::vector<FactoredNumber>;
using Body = std::function<void(const Pop&, Tally&)>;

template <class F>
void each(const Pop& pop, Tally& t, F&& f) {
  for (std::size_t i = 0; i < pop.size(); ++i) {
    Unit u{i + 1, format_pp(pop[i]), 0, {}};
    f(pop[i], u);
    t.add(std::move(u));
  }
}

template <class F>
void pairs(const Pop& pop, Tally& t, F&& f) {
  for (std::size_t i = 1; i < pop.size(); ++i) {
    Unit u{i + 1, pair_name(pop[i - 1], pop[i]), 0, {}};
    f(pop[i - 1], pop[i], i + 1, u);
    t.add(std::move(u));
  }
}

bool increasing(Ord o) { return o >= 0; }
bool decreasing(Ord o) { return o <= 0; }

std::vector<std::uint32_t> exponent_vector(const FactoredNumber& n) {
  std::vector<std::uint32_t> e;
  for (const auto& pp : n.factors()) {
    std::size_t k = small_prime_index(pp.prime);
    if (e.size() < k) e.resize(k, 0);
    e[k - 1] = pp.exponent;
  }
  return e;
}

void p1(const Pop& pop, Tally& t) {
  each(pop, t, [](const FactoredNumber& n, Unit& u) {
    if (!above_10080(n)) return;
    const auto e = exponent_vector(n);
    const Prime p = n.largest_prime();
    const std::string s = format_pp(n);
    auto L = [&](mpfr_prec_t prec) { return log_n(n, prec); };
    auto LLL = [&](mpfr_prec_t prec) {
      Interval l = log_n(n, prec);
      return l * log(l);
    };
    bool i_ok = true, ii_ok = true, iii_ok = true, iv_ok = true;
    std::string i_at, ii_at, iii_at, iv_at;
    for (std::size_t a = 0; a + 1 < e.size(); ++a) {
      const Prime q = nth_small_prime(a + 1);
      const std::uint32_t kq = e[a];
      const mpz_class qk = pow_ui(q, kq), qk1 = pow_ui(q, kq + 1), qk2 = pow_ui(q, kq + 2);
      if (i_ok && order(L, [&](mpfr_prec_t prec) { return Z(qk1, prec); }, s + " (i)") >= 0) {
        i_ok = false;
        i_at = "q=" + std::to_string(q);
      }
      for (std::size_t b = a + 1; ii_ok && b < e.size(); ++b) {
        const Prime r = nth_small_prime(b + 1);
        if (!(pow_ui(r, e[b]) < qk1 && qk1 < pow_ui(r, e[b] + 2))) {
          ii_ok = false;
          ii_at = "q=" + std::to_string(q) + " r=" + std::to_string(r);
        }
      }
      if (iii_ok && !(qk < mpz_class(kq) * mpz_class(std::to_string(p)))) {
        iii_ok = false;
        iii_at = "q=" + std::to_string(q);
      }
      if (iv_ok) {
        auto lo = [&](mpfr_prec_t prec) { return Z(qk, prec) * log_prime(q, prec); };
        auto hi = [&](mpfr_prec_t prec) { return Z(qk2, prec); };
        if (order(lo, LLL, s + " (iv)") >= 0 || order(LLL, hi, s + " (iv)") >= 0) {
          iv_ok = false;
          iv_at = "q=" + std::to_string(q);
        }
      }
    }
    u.check(i_ok, "(i) fails at " + i_at);
    u.check(ii_ok, "(ii) fails at " + ii_at);
    u.check(iii_ok, "(iii) fails at " + iii_at);
    u.check(iv_ok, "(iv) fails at " + iv_at);
  });
}

void p2(const Pop& pop, Tally& t) {
  each(pop, t, [](const FactoredNumber& n, Unit& u) {
    if (!above_10080(n)) return;
    const Prime p = n.largest_prime(), x = n.x2();
    u.check(x != 0 && x * x > p && x * x < 2 * p,
            "x2=" + std::to_string(x) + " p=" + std::to_string(p));
  });
}

void p3(const Pop& pop, Tally& t) {
  pairs(pop, t, [](const FactoredNumber& a, const FactoredNumber& b, std::size_t, Unit& u) {
    if (!above_10080(a)) return;
    const auto ea = exponent_vector(a), eb = exponent_vector(b);
    const std::size_t len = std::max(ea.size(), eb.size());
    std::string bad;
    for (std::size_t k = 0; k < len && bad.empty(); ++k) {
      long x = k < ea.size() ? ea[k] : 0, y = k < eb.size() ? eb[k] : 0;
      if (std::labs(x - y) > 1) {
        bad = "q=" + std::to_string(nth_small_prime(k + 1)) + " delta=" + std::to_string(x - y);
      }
    }
    u.check(bad.empty(), bad);
  });
}

void p4(const Pop& pop, Tally& t) {
  pairs(pop, t, [](const FactoredNumber& a, const FactoredNumber& b, std::size_t, Unit& u) {
    if (!above_10080(b)) return;
    u.check(a.largest_prime() <= b.largest_prime(),
            "(i) p drops " + std::to_string(a.largest_prime()) + " -> " +
                std::to_string(b.largest_prime()));
    const mpz_class da = divisor_count(a), db = divisor_count(b);
    BigRational q(db, da);
    q.canonicalize();
    u.check(da <= db, "(ii) d ratio " + q.get_str());
  });
}

void p5(const Pop& pop, Tally& t) {
  pairs(pop, t, [](const FactoredNumber& a, const FactoredNumber& b, std::size_t, Unit& u) {
    const BigRational q = sigma_over_n(b) / sigma_over_n(a);
    const BigRational rhs = 1 + BigRational(1, b.largest_prime());
    u.check(q < rhs, "ratio " + q.get_str() + " >= " + rhs.get_str());
  });
}

void p6(const Pop& pop, Tally& t) {
  pairs(pop, t, [](const FactoredNumber& a, const FactoredNumber& b, std::size_t, Unit& u) {
    const BigRational r = value_ratio(b, a);
    const std::string s = pair_name(a, b);
    auto lhs = [&](mpfr_prec_t p) { return Q(r, p); };
    auto rhs = [&](bool root, const char* c) {
      return [&a, root, c](mpfr_prec_t p) {
        Interval L = log_n(a, p), ll = log(L);
        Interval den = root ? sqrt(L) : L;
        return Interval::from_long(1, p) + Interval::from_decimal(c, p) * ll * ll / den;
      };
    };
    u.check(order(lhs, rhs(false, "4"), s) > 0, "c=4 bound fails");
    u.check(order(lhs, rhs(true, "0.195"), s) > 0, "c=0.195 bound fails");
  });
}

void p7(const Pop& pop, Tally& t) {
  pairs(pop, t, [](const FactoredNumber& a, const FactoredNumber& b, std::size_t, Unit& u) {
    const Prime pb = b.largest_prime();
    Ord o = order([&](mpfr_prec_t p) { return f_value(b, p) / f_value(a, p); },
                  [&](mpfr_prec_t p) { return Q(1 + BigRational(1, pb), p); }, pair_name(a, b));
    u.check(o < 0, "f ratio >= 1 + 1/p'");
  });
}

// Pairs whose earlier element is one of the first three entries are skipped.
bool past_a3(std::size_t later_index) { return later_index >= 5; }

FactoredNumber times_floor(const FactoredNumber& n, const BigRational& q) {
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return multiply(n, factor_small(fl.get_ui()));
}

void p8(const Pop& pop, Tally& t) {
  pairs(pop, t, [](const FactoredNumber& a, const FactoredNumber& b, std::size_t i, Unit& u) {
    if (!past_a3(i)) return;
    const FactoredNumber ma = times_floor(a, sigma_over_n(a));
    const FactoredNumber mb = times_floor(b, sigma_over_n(b));
    auto g = [](const FactoredNumber& m) {
      return [&m](mpfr_prec_t p) { return log_n(m, p) + log(Q(sigma_over_n(m), p)); };
    };
    u.check(increasing(order(g(mb), g(ma), pair_name(a, b))), "decreases");
  });
}

void tower_check(const Pop& pop, Tally& t, Fn a, Fn b, bool want_increasing, const char* tag,
                 bool need_p_monotone) {
  pairs(pop, t, [&](const FactoredNumber& x, const FactoredNumber& y, std::size_t i, Unit& u) {
    if (!past_a3(i)) return;
    if (need_p_monotone && y.largest_prime() < x.largest_prime()) return;
    Ord o = order_scaled(
        x, y, [&](const FactoredNumber& n, mpfr_prec_t p) { return tower(a, b, n, p); },
        pair_name(x, y));
    u.check(want_increasing ? increasing(o) : decreasing(o), std::string(tag) + " fails");
  });
}

void p9(const Pop& pop, Tally& t) {
  pairs(pop, t, [](const FactoredNumber& x, const FactoredNumber& y, std::size_t i, Unit& u) {
    if (!past_a3(i)) return;
    for (auto [b, tag] : {std::pair{Fn::Sigma, "(1)"}, std::pair{Fn::Psi, "(2)"}}) {
      Ord o = order_scaled(
          x, y, [b](const FactoredNumber& n, mpfr_prec_t p) { return tower(Fn::Phi, b, n, p); },
          pair_name(x, y));
      u.check(decreasing(o), std::string(tag) + " increases");
    }
  });
}

void p10(const Pop& pop, Tally& t) {
  pairs(pop, t, [](const FactoredNumber& x, const FactoredNumber& y, std::size_t i, Unit& u) {
    if (!past_a3(i)) return;
    auto run = [&](Fn a, Fn b, const char* tag) {
      Ord o = order_scaled(
          x, y, [a, b](const FactoredNumber& n, mpfr_prec_t p) { return tower(a, b, n, p); },
          pair_name(x, y));
      u.check(increasing(o), std::string(tag) + " decreases");
    };
    run(Fn::Sigma, Fn::Psi, "(1)");
    run(Fn::Sigma, Fn::Phi, "(2)");
    if (y.largest_prime() >= x.largest_prime()) run(Fn::Psi, Fn::Phi, "(3)");
  });
}

void p11(const Pop& pop, Tally& t) {
  pairs(pop, t, [](const FactoredNumber& x, const FactoredNumber& y, std::size_t, Unit& u) {
    const FactoredNumber fx = phi_factored(x), fy = phi_factored(y);
    // phi(n)/phi(phi(n)) = 1 / (phi(m)/m) at m = phi(n).
    const BigRational g1x = 1 / phi_over_n(fx), g1y = 1 / phi_over_n(fy);
    u.check(g1x <= g1y, "(1) decreases");
    u.check(g1x / phi_over_n(x) <= g1y / phi_over_n(y), "(2) decreases");
    u.check(divisor_count(x) * x.omega() <= divisor_count(y) * y.omega(), "(3) decreases");
    u.check(fx.omega() <= fy.omega(), "(4) decreases");
  });
}

void p12(const Pop& pop, Tally& t) {
  pairs(pop, t, [](const FactoredNumber& x, const FactoredNumber& y, std::size_t, Unit& u) {
    auto g = [](const FactoredNumber& n, int which) {
      BigRational q = which == 0 ? sigma_over_n(n)
                    : which == 1 ? BigRational(1 / phi_over_n(n))
                                 : dedekind_psi_over_n(n);
      return phi_factored(times_floor(n, q));
    };
    for (int w = 0; w < 3; ++w) {
      u.check(compare_value(g(x, w), g(y, w)) <= 0, "(" + std::to_string(w + 1) + ") decreases");
    }
  });
}

FactoredNumber lcm_to(Prime p) {
  std::vector<std::pair<Prime, std::uint32_t>> pp;
  for (std::size_t k = 1;; ++k) {
    const Prime q = nth_small_prime(k);
    if (q > p) break;
    std::uint32_t e = 1;
    for (std::uint64_t v = q; v <= p / q; v *= q) ++e;
    pp.emplace_back(q, e);
  }
  return make_factored(pp);
}

void p13(const Pop& pop, Tally& t) {
  each(pop, t, [](const FactoredNumber& n, Unit& u) {
    if (u.index <= 49) return;
    const FactoredNumber g = lcm_to(n.largest_prime());
    u.check(compare_f(n, g) > 0, "f(n) <= f(lcm(1..p))");
  });
}

bool has_ll(const FactoredNumber& n) { return compare_value(n, factor_small(2)) > 0; }

void s1(const Pop& pop, Tally& t) {
  pairs(pop, t, [](const FactoredNumber& x, const FactoredNumber& y, std::size_t, Unit& u) {
    // sigma(n) - n = n (sigma(n)/n - 1), compared after dividing by x.
    const BigRational r = value_ratio(y, x);
    u.check(r * (sigma_over_n(y) - 1) > sigma_over_n(x) - 1, "not strictly increasing");
  });
}

void s2(const Pop& pop, Tally& t) {
  pairs(pop, t, [](const FactoredNumber& x, const FactoredNumber& y, std::size_t, Unit& u) {
    Ord o = order_scaled(
        x, y,
        [](const FactoredNumber& n, mpfr_prec_t p) { return tower(Fn::Sigma, Fn::Sigma, n, p); },
        pair_name(x, y));
    u.check(increasing(o), "decreases");
  });
}

void s3(const Pop& pop, Tally& t) {
  pairs(pop, t, [](const FactoredNumber& x, const FactoredNumber& y, std::size_t, Unit& u) {
    if (!has_ll(x)) return;
    Ord o = order_scaled(
        x, y,
        [](const FactoredNumber& n, mpfr_prec_t p) {
          return Q(sigma_over_n(n), p) - log_log_n(n, p);
        },
        pair_name(x, y));
    u.check(increasing(o), "decreases");
  });
}

void s4(const Pop& pop, Tally& t) {
  pairs(pop, t, [](const FactoredNumber& x, const FactoredNumber& y, std::size_t, Unit& u) {
    if (!has_ll(x)) return;
    // sigma log sigma - (n ll) log(n ll), over n.
    auto g = [](const FactoredNumber& n, mpfr_prec_t p) {
      Interval L = log_n(n, p), ll = log(L);
      BigRational s = sigma_over_n(n);
      return Q(s, p) * (L + log(Q(s, p))) - ll * (L + log(ll));
    };
    u.check(increasing(order_scaled(x, y, g, pair_name(x, y))), "decreases");
  });
}

void s5(const Pop& pop, Tally& t) {
  pairs(pop, t, [](const FactoredNumber& x, const FactoredNumber& y, std::size_t, Unit& u) {
    if (y.largest_prime() < x.largest_prime()) return;
    const BigRational ix = 1 / phi_over_n(x), iy = 1 / phi_over_n(y);
    u.check(ix <= iy, "n/phi(n) decreases");
    u.check(sigma_over_n(x) * ix <= sigma_over_n(y) * iy, "sigma/phi decreases");
  });
}

void s6(const Pop& pop, Tally& t) {
  tower_check(pop, t, Fn::Psi, Fn::Sigma, true, "sigma^Psi/n^n", true);
}

void s7(const Pop& pop, Tally& t) {
  pairs(pop, t, [](const FactoredNumber& x, const FactoredNumber& y, std::size_t, Unit& u) {
    const Prime p = x.largest_prime();
    if (y.largest_prime() < p || p < 2) return;
    const BigRational r = value_ratio(y, x);
    Ord gap = order([&](mpfr_prec_t q) { return log(Q(r, q)); },
                    [&](mpfr_prec_t q) { return Interval::from_long(1, q) / log_prime(p, q); },
                    pair_name(x, y));
    if (gap <= 0) return;
    u.check(sigma_over_n(x) + phi_over_n(x) < sigma_over_n(y) + phi_over_n(y),
            "(sigma+phi)/n does not increase");
  });
}

void s8(const Pop& pop, Tally& t) {
  each(pop, t, [](const FactoredNumber& n, Unit& u) {
    if (!has_ll(n)) return;
    Ord o = order([&](mpfr_prec_t p) { return f_value(n, p); },
                  [&](mpfr_prec_t p) {
                    return exp_gamma(p) * (Interval::from_long(1, p) -
                                           Interval::from_long(2, p) / log_log_n(n, p));
                  },
                  format_pp(n));
    u.check(o > 0, "f below floor");
  });
}

void s9(const Pop& pop, Tally& t) {
  each(pop, t, [](const FactoredNumber& n, Unit& u) {
    if (n.is_one()) return;
    const Prime p = n.largest_prime();
    auto L = [&](mpfr_prec_t q) { return log_n(n, q); };
    auto side = [&](const char* c, int sign) {
      return [p, c, sign](mpfr_prec_t q) {
        Interval e = Interval::from_decimal(c, q) / log_prime(p, q);
        return Z(mpz_class(std::to_string(p)), q) *
               (sign > 0 ? Interval::from_long(1, q) + e : Interval::from_long(1, q) - e);
      };
    };
    u.check(order(L, side("0.0221", -1), format_pp(n)) > 0, "lower bound fails");
    u.check(order(L, side("0.5", 1), format_pp(n)) < 0, "upper bound fails");
  });
}

void s10(const Pop& pop, Tally& t) {
  each(pop, t, [](const FactoredNumber& n, Unit& u) {
    if (n.is_one()) return;
    const Prime p = n.largest_prime();
    Ord o = order([&](mpfr_prec_t q) { return Q(sigma_over_n(n), q); },
                  [&](mpfr_prec_t q) {
                    Interval lp = log_prime(p, q);
                    Interval eps = (Interval::from_long(1, q) +
                                    Interval::from_decimal("1.5", q) / lp) / lp;
                    return (Interval::from_long(1, q) - eps) * Q(1 / phi_over_n(n), q);
                  },
                  format_pp(n));
    u.check(o > 0, "sigma/n below bound");
  });
}

struct Def {
  PropertyInfo info;
  Body body;
  // Population length the claim was checked to in print; 0 for theorems.
  std::size_t printed_range;
};

const std::vector<Def>& defs() {
  using P = Population;
  static const std::vector<Def> d = {
      {{"P1", "log n < q^{k_q+1}; r^{k_r} < q^{k_q+1} < r^{k_r+2}; q^{k_q} < k_q p; "
              "q^{k_q} log q < log n log log n < q^{k_q+2}", P::XA, false, "n > 10080"}, p1, 13770},
      {{"P2", "sqrt(p) < x2 < sqrt(2p)", P::XA, false, "n > 10080"}, p2, 13770},
      {{"P3", "consecutive exponent differences in {-1, 0, 1}", P::XA, false, "n > 10080"}, p3,
       13770},
      {{"P4", "p(m) <= p(n) and d(m) <= d(n) for m < n", P::XA, false, "n > 10080"}, p4, 13770},
      {{"P5", "(sigma(n')/n')/(sigma(n)/n) < 1 + 1/p'", P::SA, false, ""}, p5, 250000},
      {{"P6", "n'/n > 1 + 4 (log log n)^2/log n and > 1 + 0.195 (log log n)^2/sqrt(log n)",
        P::XA, false, ""}, p6, 8150},
      {{"P7", "f(n')/f(n) < 1 + 1/p'", P::XA, false, ""}, p7, 8150},
      {{"P8", "sigma(n floor(sigma(n)/n)) increasing", P::SA, false, "from the 4th entry"}, p8,
       250000},
      {{"P9", "sigma^phi/n^n and Psi^phi/n^n decreasing", P::SA, false, "from the 4th entry"}, p9,
       250000},
      {{"P10", "Psi^sigma/n^n, phi^sigma/n^n increasing; phi^Psi/n^n increasing when p' >= p",
        P::SA, false, "from the 4th entry"}, p10, 250000},
      {{"P11", "phi/phi(phi), n/phi(phi), d omega, omega(phi) increasing", P::XA, false, ""}, p11,
       8150},
      {{"P12", "phi(n floor(sigma/n)), phi(n floor(n/phi)), phi(n floor(Psi/n)) increasing",
        P::XA, false, ""}, p12, 8150},
      {{"P13", "f(n) > f(lcm(1..p))", P::SA, false, "index > 49"}, p13, 250000},
      {{"S1", "sigma(n) - n strictly increasing", P::SA, false, ""}, s1, 0},
      {{"S2", "sigma^sigma/n^n increasing", P::SA, false, ""}, s2, 0},
      {{"S3", "sigma(n) - n log log n increasing", P::SA, true, "n >= 3"}, s3, 0},
      {{"S4", "sigma^sigma/(n log log n)^(n log log n) increasing", P::SA, true, "n >= 3"}, s4, 0},
      {{"S5", "n/phi(n) and sigma(n)/phi(n) increasing", P::SA, false, "p' >= p"}, s5, 0},
      {{"S6", "sigma^Psi/n^n increasing", P::SA, false, "p' >= p"}, s6, 0},
      {{"S7", "(sigma(n)+phi(n))/n increasing", P::XA, true, "p' >= p and log(n'/n) > 1/log p"},
       s7, 0},
      {{"S8", "f(n) > e^gamma (1 - 2/log log n)", P::SA, true, "n >= 3"}, s8, 0},
      {{"S9", "p(1 - 0.0221/log p) < log n < p(1 + 0.5/log p)", P::SA, true, "n >= 2"}, s9, 0},
      {{"S10", "sigma(n)/n > (1 - eps(p)) n/phi(n), eps(p) = (1 + 1.5/log p)/log p", P::SA,
        false, "n >= 2"}, s10, 0},
  };
  return d;
}

}  // namespace

const std::vector<PropertyInfo>& property_registry() {
  static const std::vector<PropertyInfo> v = [] {
    std::vector<PropertyInfo> out;
    for (const auto& d : defs()) out.push_back(d.info);
    return out;
  }();
  return v;
}

PropertyReport run_property(const std::string& id, const std::vector<FactoredNumber>& population,
                            Population kind, std::optional<double> horizon) {
  auto it = std::find_if(defs().begin(), defs().end(),
                         [&](const Def& d) { return d.info.id == id; });
  if (it == defs().end()) throw DomainError("unknown property id: " + id);

  PropertyReport r;
  r.property_id = id;
  r.population = to_string(kind);
  if (horizon) {
    std::ostringstream os;
    os << ", log n <= " << *horizon;
    r.population += os.str();
  }
  r.condition_filter = it->info.filter;
  r.large_enough = it->info.large_enough;
  r.exploratory = it->printed_range != 0 && population.size() > it->printed_range;

  Tally t{r};
  it->body(population, t);

  if (r.large_enough) {
    const std::size_t first = population.size() - r.unit_count + 1;
    const std::size_t last = population.size();
    std::size_t from = r.violations.empty() ? first : r.violations.back().index + 1;
    if (from <= last) r.first_hold_index = from;
  }
  return r;
}

RemarkReport replicate_remarks(const ClassifiedList& sa) {
  const FactoredNumber n1 = parse_factored("(139#)(13#)(5#)(3#)^2 2^4");
  const FactoredNumber n2 = parse_factored("(149#)(13#)(7#)(5#)(3#) 2^5");
  const FactoredNumber n3 = parse_factored("(151#)(13#)(5#)(3#)^2 2^3");
  const double need = approx_log_n(n3);
  if (!sa.horizon || *sa.horizon < need) {
    throw HorizonInsufficient("remarks need an SA list up to log n >= " + std::to_string(need));
  }
  if (sa.entries.empty() || !sa.entries.front().n.is_one()) {
    throw ValidationError("remarks need an SA list starting at 1");
  }

  RemarkReport rep;
  auto add = [&](std::string name, bool ok, std::string detail) {
    rep.checks.push_back({std::move(name), ok, std::move(detail)});
  };

  add("n1 < n2 < n3", compare_value(n1, n2) < 0 && compare_value(n2, n3) < 0, "");

  const auto xa = sa.numbers(kXA);
  auto pos = [](const std::vector<FactoredNumber>& v, const FactoredNumber& n) {
    auto i = std::find(v.begin(), v.end(), n);
    return i == v.end() ? std::optional<std::size_t>{} : std::optional<std::size_t>(i - v.begin());
  };
  auto i1 = pos(xa, n1), i3 = pos(xa, n3);
  add("n1, n3 consecutive XA", i1 && i3 && *i3 == *i1 + 1,
      i1 && i3 ? "XA positions " + std::to_string(*i1 + 1) + ", " + std::to_string(*i3 + 1)
               : "not both XA");
  add("f(n3) > f(n2)", compare_f(n3, n2) > 0,
      "f(n2)=" + f_value(n2).str(12) + " f(n3)=" + f_value(n3).str(12));
  add("d(n3) < d(n2)", divisor_count(n3) < divisor_count(n2),
      "d(n2)=" + divisor_count(n2).get_str() + " d(n3)=" + divisor_count(n3).get_str());

  const bool none149 = std::none_of(xa.begin(), xa.end(),
                                    [](const FactoredNumber& n) { return n.largest_prime() == 149; });
  add("no XA with p(n) = 149", none149, std::to_string(xa.size()) + " XA checked");

  const auto all = sa.numbers(kSA);
  auto at = [&](std::size_t k) -> const FactoredNumber* {
    return k >= 1 && k <= all.size() ? &all[k - 1] : nullptr;
  };
  const FactoredNumber s47 = parse_factored("(19#)(3#)^2 2");
  const FactoredNumber s48 = parse_factored("(17#)(5#)(3#) 2^3");
  const FactoredNumber s173 = parse_factored("(59#)(7#)(5#)(3#)^2 2^3");
  const FactoredNumber s174 = parse_factored("(61#)(7#)(3#)^2 2^2");
  add("s47, s48 as printed", at(48) && *at(47) == s47 && *at(48) == s48,
      at(48) ? format_primorial(*at(47)) + ", " + format_primorial(*at(48)) : "short list");
  add("p(s48) = 17 < 19 = p(s47)", s48.largest_prime() == 17 && s47.largest_prime() == 19, "");
  add("s173, s174 as printed", at(174) && *at(173) == s173 && *at(174) == s174,
      at(174) ? format_primorial(*at(173)) + ", " + format_primorial(*at(174)) : "short list");
  BigRational dr(divisor_count(s174), divisor_count(s173));
  dr.canonicalize();
  add("d(s174)/d(s173) = 35/36", dr == BigRational(35, 36), dr.get_str());

  const FactoredNumber lo = n10080(), hi = factor_small(110880);
  std::vector<std::string> between;
  bool xa_inside = false;
  for (const auto& e : sa.entries) {
    if (compare_value(e.n, lo) < 0 || compare_value(e.n, hi) > 0) continue;
    between.push_back(materialize(e.n).get_str());
    if ((e.flags & kXA) && !(e.n == lo)) xa_inside = true;
  }
  std::string joined;
  for (const auto& s : between) joined += (joined.empty() ? "" : ",") + s;
  add("SA in [10080, 11*10080]", joined == "10080,15120,25200,27720,55440,110880", joined);
  add("none of them XA besides 10080", !xa_inside, "");

  struct FRow {
    std::uint64_t n;
    const char* value;
  };
  for (auto [n, v] : {FRow{5040, "1.790973367"}, FRow{10080, "1.755814339"},
                      FRow{55440, "1.751246515"}}) {
    Interval f = f_value(factor_small(n));
    const double want = std::stod(v);
    add("f(" + std::to_string(n) + ")", std::fabs(f.mid() - want) < 1e-8,
        f.str(14));
  }
  return rep;
}

}  // namespace abundant
