#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace abundant {

using Prime = std::uint64_t;

/// Deterministic for all 64-bit inputs: trial division below 2^20, a fixed
/// Miller-Rabin witness set above.
bool is_prime(std::uint64_t n);

/// The k-th prime (1-based) from a process-wide growable table.
Prime nth_small_prime(std::size_t k);
/// 1-based index of prime p; throws NonPrimeFactor if p is not prime.
std::size_t small_prime_index(Prime p);

struct PrimePower {
  Prime prime = 2;
  std::uint32_t exponent = 1;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Multiplicity of a primorial factor: `top#` raised to `multiplicity`.
struct PrimorialPower {
  Prime top = 2;
  std::uint32_t multiplicity = 1;
};

/// A positive integer held as its prime factorization, primes ascending.
/// The empty factorization is 1.
class FactoredNumber {
 public:
  FactoredNumber() = default;

  /// Skips validation; the caller guarantees ascending primes and
  /// exponents >= 1.
  static FactoredNumber from_sorted_unchecked(std::vector<PrimePower> factors);
  /// Exponent vector over the initial prime segment 2, 3, 5, ... Trailing
  /// zeros are dropped; interior zeros are allowed.
  static FactoredNumber from_exponents(std::span<const std::uint32_t> exponents);

  std::span<const PrimePower> factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  std::size_t omega() const { return factors_.size(); }

  /// p(n); 1 for n = 1.
  Prime largest_prime() const;
  std::uint32_t exponent_of(Prime q) const;
  std::uint32_t k2() const { return exponent_of(2); }
  /// Largest prime with exponent >= 2, or 0 if there is none.
  Prime x2() const;
  /// Exponents are non-increasing over an initial segment of the primes.
  bool has_primorial_shape() const;

  friend bool operator==(const FactoredNumber&, const FactoredNumber&) = default;

 private:
  std::vector<PrimePower> factors_;
};

/// Validated construction; rejects composite bases (NonPrimeFactor),
/// repeated primes (DuplicatePrime) and zero exponents (ZeroExponent).
FactoredNumber make_factored(std::span<const std::pair<Prime, std::uint32_t>> pairs);
FactoredNumber make_factored(
    std::initializer_list<std::pair<Prime, std::uint32_t>> pairs);

/// Product of `top#` to the given multiplicities.
FactoredNumber from_primorials(std::span<const PrimorialPower> parts);
FactoredNumber from_primorials(std::initializer_list<PrimorialPower> parts);
/// Same, addressed by 1-based prime index (p_k#, multiplicity).
FactoredNumber from_primorial_indices(
    std::span<const std::pair<std::size_t, std::uint32_t>> parts);

FactoredNumber mul_prime(const FactoredNumber& n, Prime p);
/// Throws NotDivisible if p does not divide n.
FactoredNumber div_prime(const FactoredNumber& n, Prime p);
FactoredNumber multiply(const FactoredNumber& a, const FactoredNumber& b);
/// Factorization of a small positive integer by trial division.
FactoredNumber factor_small(std::uint64_t n);

inline constexpr double kDefaultMaxLog = 1e4;

/// The integer value; throws TooLarge if log n exceeds `max_log`.
mpz_class materialize(const FactoredNumber& n, double max_log = kDefaultMaxLog);

/// Canonical text form: `2^5 3^2 5 7`; `1` for n = 1.
std::string format_pp(const FactoredNumber& n);
/// Table-style primorial form, e.g. `(151#)(13#)(7#)(3#)^2 2^4`. Falls back
/// to the canonical form when n is not a product of primorials.
std::string format_primorial(const FactoredNumber& n);
/// Parses either form. Throws DuplicatePrime, NonPrimeFactor, ZeroExponent
/// or DomainError on malformed text.
FactoredNumber parse_factored(std::string_view text);

}  // namespace abundant

template <>
struct std::hash<abundant::FactoredNumber> {
  std::size_t operator()(const abundant::FactoredNumber& n) const noexcept;
};
