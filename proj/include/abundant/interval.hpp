#pragma once

#include <compare>
#include <optional>
#include <string>

#include <gmpxx.h>
#include <mpfr.h>

namespace abundant {

inline constexpr mpfr_prec_t kBasePrecision = 128;
inline constexpr mpfr_prec_t kMaxPrecision = 4096;

/// Three-valued verdict for comparisons made on enclosures.
enum class Truth { False, True, Unresolved };

std::string to_string(Truth t);

/// Closed interval [lo, hi] with MPFR endpoints rounded outward.
///
/// Every operation rounds the lower endpoint toward -inf and the upper
/// endpoint toward +inf, so the result always encloses the exact value of
/// the operation applied to any points of the operands. The precision of a
/// result is the larger of its operands' precisions.
class Interval {
 public:
  explicit Interval(mpfr_prec_t prec = kBasePrecision);
  Interval(const Interval& other);
  Interval(Interval&& other) noexcept;
  Interval& operator=(const Interval& other);
  Interval& operator=(Interval&& other) noexcept;
  ~Interval();

  static Interval from_long(long v, mpfr_prec_t prec = kBasePrecision);
  static Interval from_double(double v, mpfr_prec_t prec = kBasePrecision);
  static Interval from_mpz(const mpz_class& v, mpfr_prec_t prec = kBasePrecision);
  static Interval from_mpq(const mpq_class& v, mpfr_prec_t prec = kBasePrecision);
  /// Encloses a decimal literal (rounded outward, so inexact decimals widen).
  static Interval from_decimal(const std::string& text,
                               mpfr_prec_t prec = kBasePrecision);
  /// [lo, hi] from raw endpoints (lo rounded down, hi rounded up).
  static Interval from_endpoints(mpfr_srcptr lo, mpfr_srcptr hi,
                                 mpfr_prec_t prec = kBasePrecision);
  /// [lo, hi] from two decimal literals.
  static Interval hull(const std::string& lo, const std::string& hi,
                       mpfr_prec_t prec = kBasePrecision);

  mpfr_prec_t precision() const { return prec_; }
  mpfr_srcptr lo() const { return lo_; }
  mpfr_srcptr hi() const { return hi_; }

  double lower() const;  // rounded down
  double upper() const;  // rounded up
  double mid() const;
  double width() const;  // rounded up

  bool is_point() const;
  bool contains(double v) const;
  bool contains(const Interval& inner) const;
  bool certainly_positive() const;
  bool certainly_negative() const;
  bool certainly_nonnegative() const;

  /// less/greater when the intervals are disjoint, equivalent when both are
  /// the same point, nullopt when they overlap.
  std::optional<std::weak_ordering> compare(const Interval& other) const;

  /// Decimal rendering of both endpoints with `digits` significant digits.
  std::string str(int digits = 20) const;

  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  friend Interval operator/(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a);

  friend Interval log(const Interval& a);
  friend Interval log1p(const Interval& a);
  friend Interval exp(const Interval& a);
  friend Interval sqrt(const Interval& a);

  /// Interval with both endpoints moved outward; used to absorb an a-priori
  /// error bound.
  Interval widened(double abs_err) const;

 private:
  void set_from_pair(mpfr_srcptr lo, mpfr_srcptr hi);

  mpfr_prec_t prec_;
  mpfr_t lo_;
  mpfr_t hi_;
};

Interval operator+(const Interval& a, long b);
Interval operator*(const Interval& a, long b);
Interval operator*(long a, const Interval& b);

/// Euler's constant gamma, validated once per process against a stored literal.
Interval euler_gamma(mpfr_prec_t prec = kBasePrecision);
/// e^gamma.
Interval exp_gamma(mpfr_prec_t prec = kBasePrecision);
/// (7/3 - e^gamma log log 12) * log log 12 = 0.6482...
Interval robin_constant(mpfr_prec_t prec = kBasePrecision);
Interval pi_interval(mpfr_prec_t prec = kBasePrecision);

struct Constants {
  Interval euler_gamma;
  Interval e_gamma;
  Interval robin_const;
};

Constants constants(mpfr_prec_t prec = kBasePrecision);

/// Shortest decimal string (at most `max_sig` significant digits) that both
/// endpoints round to; empty if not even one digit is certified.
std::string certified_digits(const Interval& v, int max_sig);

}  // namespace abundant
