#pragma once

#include <compare>

#include <gmpxx.h>

#include "abundant/errors.hpp"
#include "abundant/factored.hpp"
#include "abundant/interval.hpp"

namespace abundant {

/// Exact reduced ratio of big integers.
using BigRational = mpq_class;

/// sigma(n)/n = prod (q^{k+1}-1) / (q^k (q-1)).
BigRational sigma_over_n(const FactoredNumber& n);
/// phi(n)/n = prod (1 - 1/q).
BigRational phi_over_n(const FactoredNumber& n);
/// Psi(n)/n = prod (1 + 1/q)  (Dedekind psi).
BigRational dedekind_psi_over_n(const FactoredNumber& n);
/// d(n) = prod (k_q + 1).
mpz_class divisor_count(const FactoredNumber& n);
inline std::size_t omega(const FactoredNumber& n) { return n.omega(); }

/// Exact sigma(n), phi(n), Psi(n); subject to the materialize limit.
mpz_class sigma(const FactoredNumber& n);
mpz_class phi(const FactoredNumber& n);
mpz_class dedekind_psi(const FactoredNumber& n);
/// Factorization of phi(n) (each q - 1 factored by trial division).
FactoredNumber phi_factored(const FactoredNumber& n);

/// Enclosure of log q at the given precision (memoized per thread).
const Interval& log_prime(Prime q, mpfr_prec_t prec);

/// Enclosure of log n = sum k_q log q.
Interval log_n(const FactoredNumber& n, mpfr_prec_t prec = kBasePrecision);
/// log log n; DomainError for n <= 2 (log log n <= 0 or undefined).
Interval log_log_n(const FactoredNumber& n, mpfr_prec_t prec = kBasePrecision);
/// Robin's f(n) = sigma(n) / (n log log n); DomainError for n <= 2.
Interval f_value(const FactoredNumber& n, mpfr_prec_t prec = kBasePrecision);

/// Total order on f(a) vs f(b), doubling precision from kBasePrecision while
/// the enclosures overlap. Throws PrecisionExhausted past kMaxPrecision.
std::strong_ordering compare_f(const FactoredNumber& a, const FactoredNumber& b);
/// Order of the integer values; exact fallback cancels shared prime powers.
std::strong_ordering compare_value(const FactoredNumber& a, const FactoredNumber& b);
/// Order of sigma(a)/a vs sigma(b)/b (exact).
std::strong_ordering compare_sigma_ratio(const FactoredNumber& a, const FactoredNumber& b);

/// Fast double estimate of log n; for sorting and pruning only.
double approx_log_n(const FactoredNumber& n);

/// Generic escalation loop: evaluates `eval(prec)` to two enclosures and
/// returns their order once they separate. `describe()` names the pair in
/// the PrecisionExhausted message.
template <class Eval, class Describe>
std::weak_ordering compare_escalating(Eval&& eval, Describe&& describe,
                                      mpfr_prec_t start = kBasePrecision) {
  for (mpfr_prec_t prec = start; prec <= kMaxPrecision; prec *= 2) {
    auto [a, b] = eval(prec);
    if (auto c = a.compare(b)) return *c;
  }
  throw PrecisionExhausted(describe());
}

}  // namespace abundant
