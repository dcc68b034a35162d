#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <vector>

#include "abundant/arith.hpp"
#include "abundant/factored.hpp"
#include "abundant/interval.hpp"

namespace abundant {

/// Unsigned fixed-point value with 96 fractional bits.
using Fixed96 = unsigned __int128;
inline constexpr int kFixedFractionBits = 96;

/// Certified enclosure [lo, hi] of a fixed-point prefix sum.
struct FixedRange {
  Fixed96 lo = 0;
  Fixed96 hi = 0;

  FixedRange& operator+=(const FixedRange& o) {
    lo += o.lo;
    hi += o.hi;
    return *this;
  }
  double approx() const;  // midpoint as double
  Interval to_interval(mpfr_prec_t prec = kBasePrecision) const;
};

/// Sieve plus cumulative Chebyshev and Mertens sums up to `limit`.
///
/// theta, psi and log prod p/(p-1) are kept as fixed-point prefix sums over
/// the primes, with every term rounded outward, so each query returns a
/// certified enclosure. Immutable after construction.
class PrimeTables {
 public:
  /// Throws DomainError for limit < 3 and TooLarge past 2^31 (the fixed-point
  /// sums would overflow) or when memory runs out.
  static PrimeTables build(std::uint64_t limit);
  /// Loads `dir/primes-<limit>-v<version>.bin` if present, else builds and
  /// writes it. An empty path disables caching.
  static PrimeTables build_cached(std::uint64_t limit, const std::filesystem::path& dir);

  std::uint64_t limit() const { return limit_; }
  /// Primes <= limit.
  std::span<const std::uint32_t> primes() const {
    return {primes_.data(), primes_.size() - 1};
  }
  /// pi(x) for x <= limit.
  std::uint64_t pi(std::uint64_t x) const;
  /// k-th prime, 1-based; valid for k <= pi(limit) + 1 (one prime past the
  /// limit is kept for gap checks).
  Prime nth_prime(std::size_t k) const;
  FactoredNumber primorial(std::size_t k) const;

  /// Enclosure of theta(x) = sum_{p <= x} log p.
  FixedRange theta(std::uint64_t x) const;
  /// Enclosure of psi(x) = sum_{p^m <= x} log p.
  FixedRange psi(std::uint64_t x) const;
  /// Enclosure of psi(x) - theta(x), the prime powers p^m <= x with m >= 2.
  FixedRange psi_minus_theta(std::uint64_t x) const;
  /// Enclosure of log prod_{p <= x} p/(p-1).
  FixedRange mertens_log(std::uint64_t x) const;
  /// Same sums addressed by prime index (1-based, cumulative through p_k).
  FixedRange theta_at_index(std::size_t k) const;
  FixedRange mertens_log_at_index(std::size_t k) const;

  /// Exact prod_{p <= x} p/(p-1).
  BigRational mertens_product(std::uint64_t x) const;
  /// lcm(1, ..., m) = prod_{q <= m} q^floor(log m / log q).
  FactoredNumber lcm_up_to(std::uint64_t m) const;

  void save(const std::filesystem::path& file) const;
  static std::optional<PrimeTables> load(const std::filesystem::path& file,
                                         std::uint64_t limit);

  static constexpr std::uint32_t kFormatVersion = 1;

 private:
  void require(std::uint64_t x) const;
  void finish_sums();

  std::uint64_t limit_ = 0;
  std::vector<std::uint32_t> primes_;  // includes one prime past the limit
  std::vector<Fixed96> log_mid_;       // floor(log p * 2^96) per prime
  std::vector<Fixed96> mertens_mid_;   // floor(-log(1-1/p) * 2^96) per prime
  std::vector<FixedRange> theta_cum_;
  std::vector<FixedRange> mertens_cum_;
  // Prime powers p^m <= limit with m >= 2, ascending, with cumulative log p.
  std::vector<std::uint64_t> higher_powers_;
  std::vector<FixedRange> higher_cum_;
};

}  // namespace abundant
