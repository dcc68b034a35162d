#include "abundant/arith.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

namespace abundant {

namespace {

double approx_log_sigma_ratio(const FactoredNumber& n) {
  double s = 0;
  for (const auto& f : n.factors()) {
    const double q = static_cast<double>(f.prime);
    s += std::log1p(-std::pow(q, -static_cast<double>(f.exponent) - 1.0)) - std::log1p(-1.0 / q);
  }
  return s;
}

// Relative slack under which double estimates are not trusted.
constexpr double kDoubleSlack = 1e-9;

}  // namespace

BigRational sigma_over_n(const FactoredNumber& n) {
  mpz_class num = 1, den = 1, t;
  for (const auto& f : n.factors()) {
    mpz_ui_pow_ui(t.get_mpz_t(), f.prime, f.exponent);
    den *= t * (f.prime - 1);
    num *= t * f.prime - 1;
  }
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

BigRational phi_over_n(const FactoredNumber& n) {
  mpz_class num = 1, den = 1;
  for (const auto& f : n.factors()) {
    num *= f.prime - 1;
    den *= f.prime;
  }
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

BigRational dedekind_psi_over_n(const FactoredNumber& n) {
  mpz_class num = 1, den = 1;
  for (const auto& f : n.factors()) {
    num *= f.prime + 1;
    den *= f.prime;
  }
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

mpz_class divisor_count(const FactoredNumber& n) {
  mpz_class d = 1;
  for (const auto& f : n.factors()) d *= f.exponent + 1;
  return d;
}

mpz_class sigma(const FactoredNumber& n) {
  const BigRational r = sigma_over_n(n) * materialize(n);
  return r.get_num();
}

mpz_class phi(const FactoredNumber& n) {
  const BigRational r = phi_over_n(n) * materialize(n);
  return r.get_num();
}

mpz_class dedekind_psi(const FactoredNumber& n) {
  const BigRational r = dedekind_psi_over_n(n) * materialize(n);
  return r.get_num();
}

FactoredNumber phi_factored(const FactoredNumber& n) {
  FactoredNumber acc;
  for (const auto& f : n.factors()) {
    if (f.exponent > 1) {
      acc = multiply(acc, FactoredNumber::from_sorted_unchecked({{f.prime, f.exponent - 1}}));
    }
    acc = multiply(acc, factor_small(f.prime - 1));
  }
  return acc;
}

const Interval& log_prime(Prime q, mpfr_prec_t prec) {
  thread_local std::unordered_map<std::uint64_t, Interval> cache;
  const std::uint64_t key = (q << 13) | static_cast<std::uint64_t>(prec);
  auto it = cache.find(key);
  if (it == cache.end()) {
    it = cache.emplace(key, log(Interval::from_long(static_cast<long>(q), prec))).first;
  }
  return it->second;
}

Interval log_n(const FactoredNumber& n, mpfr_prec_t prec) {
  Interval s(prec);
  for (const auto& f : n.factors()) {
    s = s + log_prime(f.prime, prec) * static_cast<long>(f.exponent);
  }
  return s;
}

Interval log_log_n(const FactoredNumber& n, mpfr_prec_t prec) {
  if (n.is_one() || n == FactoredNumber::from_sorted_unchecked({{2, 1}})) {
    throw DomainError("log log n requires n >= 3");
  }
  return log(log_n(n, prec));
}

Interval f_value(const FactoredNumber& n, mpfr_prec_t prec) {
  const Interval ll = log_log_n(n, prec);
  return Interval::from_mpq(sigma_over_n(n), prec) / ll;
}

double approx_log_n(const FactoredNumber& n) {
  double s = 0;
  for (const auto& f : n.factors()) s += f.exponent * std::log(static_cast<double>(f.prime));
  return s;
}

std::strong_ordering compare_f(const FactoredNumber& a, const FactoredNumber& b) {
  if (a == b) return std::strong_ordering::equal;
  const BigRational ra = sigma_over_n(a);
  const BigRational rb = sigma_over_n(b);
  const auto ord = compare_escalating(
      [&](mpfr_prec_t prec) {
        return std::pair{Interval::from_mpq(ra, prec) / log_log_n(a, prec),
                         Interval::from_mpq(rb, prec) / log_log_n(b, prec)};
      },
      [&] { return "f comparison unresolved for " + format_pp(a) + " vs " + format_pp(b); });
  return ord == std::weak_ordering::less      ? std::strong_ordering::less
         : ord == std::weak_ordering::greater ? std::strong_ordering::greater
                                              : std::strong_ordering::equal;
}

std::strong_ordering compare_value(const FactoredNumber& a, const FactoredNumber& b) {
  if (a == b) return std::strong_ordering::equal;
  const double la = approx_log_n(a);
  const double lb = approx_log_n(b);
  if (std::abs(la - lb) > kDoubleSlack * std::max({1.0, la, lb})) {
    return la < lb ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  // Cancel the common part and compare the coprime residues exactly.
  mpz_class ra = 1, rb = 1, t;
  auto fa = a.factors();
  auto fb = b.factors();
  std::size_t i = 0, j = 0;
  auto mul = [&t](mpz_class& acc, Prime p, std::uint32_t k) {
    mpz_ui_pow_ui(t.get_mpz_t(), p, k);
    acc *= t;
  };
  while (i < fa.size() || j < fb.size()) {
    if (j == fb.size() || (i < fa.size() && fa[i].prime < fb[j].prime)) {
      mul(ra, fa[i].prime, fa[i].exponent);
      ++i;
    } else if (i == fa.size() || fb[j].prime < fa[i].prime) {
      mul(rb, fb[j].prime, fb[j].exponent);
      ++j;
    } else {
      if (fa[i].exponent > fb[j].exponent) mul(ra, fa[i].prime, fa[i].exponent - fb[j].exponent);
      if (fb[j].exponent > fa[i].exponent) mul(rb, fb[j].prime, fb[j].exponent - fa[i].exponent);
      ++i;
      ++j;
    }
  }
  const int c = cmp(ra, rb);
  return c < 0 ? std::strong_ordering::less
               : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::strong_ordering compare_sigma_ratio(const FactoredNumber& a, const FactoredNumber& b) {
  if (a == b) return std::strong_ordering::equal;
  const double la = approx_log_sigma_ratio(a);
  const double lb = approx_log_sigma_ratio(b);
  if (std::abs(la - lb) > kDoubleSlack) {
    return la < lb ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  const int c = cmp(sigma_over_n(a), sigma_over_n(b));
  return c < 0 ? std::strong_ordering::less
               : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

}  // namespace abundant
