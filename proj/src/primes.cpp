#include "abundant/primes.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>

#include "abundant/errors.hpp"

namespace abundant {

namespace {

// Working precision for per-prime logs: correctly rounded at 160 bits, the
// error is far below one unit of the 96-bit fixed point.
constexpr mpfr_prec_t kTermPrecision = 160;

Fixed96 to_fixed_floor(mpfr_srcptr v) {
  mpfr_t scaled;
  mpfr_init2(scaled, kTermPrecision);
  mpfr_mul_2ui(scaled, v, kFixedFractionBits, MPFR_RNDN);
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), scaled, MPFR_RNDD);
  mpfr_clear(scaled);
  Fixed96 out = 0;
  std::uint64_t words[2] = {0, 0};
  std::size_t count = 0;
  mpz_export(words, &count, -1, sizeof(std::uint64_t), 0, 0, z.get_mpz_t());
  out = (static_cast<Fixed96>(words[1]) << 64) | words[0];
  return out;
}

// [mid - 1, mid + 2] encloses the true term: mid is the floor of a value
// within 2^-130 of the exact term scaled by 2^96.
FixedRange widen(Fixed96 mid) { return FixedRange{mid - 1, mid + 2}; }

std::vector<std::uint32_t> sieve_with_successor(std::uint64_t limit) {
  std::uint64_t span = limit + 2048;
  while (true) {
    std::vector<std::uint8_t> composite(span + 1, 0);
    std::vector<std::uint32_t> out;
    for (std::uint64_t i = 2; i <= span; ++i) {
      if (composite[i]) continue;
      out.push_back(static_cast<std::uint32_t>(i));
      if (i > limit) return out;
      for (std::uint64_t j = i * i; j <= span; j += i) composite[j] = 1;
    }
    span *= 2;
  }
}

}  // namespace

double FixedRange::approx() const {
  const long double mid = (static_cast<long double>(lo) + static_cast<long double>(hi)) / 2;
  return static_cast<double>(std::ldexp(mid, -kFixedFractionBits));
}

Interval FixedRange::to_interval(mpfr_prec_t prec) const {
  auto to_mpfr = [](mpfr_ptr out, Fixed96 v, mpfr_rnd_t rnd) {
    mpz_class z;
    const std::uint64_t words[2] = {static_cast<std::uint64_t>(v),
                                    static_cast<std::uint64_t>(v >> 64)};
    mpz_import(z.get_mpz_t(), 2, -1, sizeof(std::uint64_t), 0, 0, words);
    mpfr_set_z(out, z.get_mpz_t(), rnd);
    mpfr_div_2ui(out, out, kFixedFractionBits, rnd);
  };
  mpfr_t a, b;
  mpfr_init2(a, std::max<mpfr_prec_t>(prec, 130));
  mpfr_init2(b, std::max<mpfr_prec_t>(prec, 130));
  to_mpfr(a, lo, MPFR_RNDD);
  to_mpfr(b, hi, MPFR_RNDU);
  Interval r = Interval::from_endpoints(a, b, prec);
  mpfr_clear(a);
  mpfr_clear(b);
  return r;
}

PrimeTables PrimeTables::build(std::uint64_t limit) {
  if (limit < 3) throw DomainError("prime table limit must be >= 3");
  if (limit >= (1ULL << 31)) throw TooLarge("prime table limit must be below 2^31");
  PrimeTables t;
  t.limit_ = limit;
  try {
    t.primes_ = sieve_with_successor(limit);
  } catch (const std::bad_alloc&) {
    throw TooLarge("out of memory sieving to " + std::to_string(limit));
  }
  t.log_mid_.resize(t.primes_.size());
  t.mertens_mid_.resize(t.primes_.size());
  mpfr_t v;
  mpfr_init2(v, kTermPrecision);
  for (std::size_t i = 0; i < t.primes_.size(); ++i) {
    const unsigned long p = t.primes_[i];
    mpfr_set_ui(v, p, MPFR_RNDN);
    mpfr_log(v, v, MPFR_RNDN);
    t.log_mid_[i] = to_fixed_floor(v);
    // -log(1 - 1/p)
    mpfr_set_ui(v, p, MPFR_RNDN);
    mpfr_ui_div(v, 1, v, MPFR_RNDN);
    mpfr_neg(v, v, MPFR_RNDN);
    mpfr_log1p(v, v, MPFR_RNDN);
    mpfr_neg(v, v, MPFR_RNDN);
    t.mertens_mid_[i] = to_fixed_floor(v);
  }
  mpfr_clear(v);
  t.finish_sums();
  return t;
}

void PrimeTables::finish_sums() {
  theta_cum_.resize(primes_.size());
  mertens_cum_.resize(primes_.size());
  FixedRange th, me;
  for (std::size_t i = 0; i < primes_.size(); ++i) {
    th += widen(log_mid_[i]);
    me += widen(mertens_mid_[i]);
    theta_cum_[i] = th;
    mertens_cum_[i] = me;
  }
  std::vector<std::pair<std::uint64_t, std::size_t>> powers;
  for (std::size_t i = 0; i + 1 < primes_.size(); ++i) {
    const std::uint64_t p = primes_[i];
    if (p * p > limit_) break;
    for (std::uint64_t q = p * p; q <= limit_; q *= p) {
      powers.emplace_back(q, i);
      if (q > limit_ / p) break;
    }
  }
  std::sort(powers.begin(), powers.end());
  higher_powers_.clear();
  higher_cum_.clear();
  FixedRange acc;
  for (const auto& [q, i] : powers) {
    acc += widen(log_mid_[i]);
    higher_powers_.push_back(q);
    higher_cum_.push_back(acc);
  }
}

void PrimeTables::require(std::uint64_t x) const {
  if (x > limit_) {
    throw RangeNotCovered(std::to_string(x) + " exceeds table limit " + std::to_string(limit_));
  }
}

std::uint64_t PrimeTables::pi(std::uint64_t x) const {
  require(x);
  return static_cast<std::uint64_t>(
      std::upper_bound(primes_.begin(), primes_.end() - 1, x) - primes_.begin());
}

Prime PrimeTables::nth_prime(std::size_t k) const {
  if (k == 0 || k > primes_.size()) {
    throw OutOfRange("prime index " + std::to_string(k) + " outside table");
  }
  return primes_[k - 1];
}

FactoredNumber PrimeTables::primorial(std::size_t k) const {
  if (k > primes_.size()) throw OutOfRange("primorial index outside table");
  std::vector<PrimePower> f;
  f.reserve(k);
  for (std::size_t i = 0; i < k; ++i) f.push_back({primes_[i], 1});
  return FactoredNumber::from_sorted_unchecked(std::move(f));
}

FixedRange PrimeTables::theta_at_index(std::size_t k) const {
  if (k == 0) return {};
  if (k > theta_cum_.size()) throw OutOfRange("prime index outside table");
  return theta_cum_[k - 1];
}

FixedRange PrimeTables::mertens_log_at_index(std::size_t k) const {
  if (k == 0) return {};
  if (k > mertens_cum_.size()) throw OutOfRange("prime index outside table");
  return mertens_cum_[k - 1];
}

FixedRange PrimeTables::theta(std::uint64_t x) const { return theta_at_index(pi(x)); }

FixedRange PrimeTables::psi_minus_theta(std::uint64_t x) const {
  require(x);
  const auto n = std::upper_bound(higher_powers_.begin(), higher_powers_.end(), x) -
                 higher_powers_.begin();
  return n > 0 ? higher_cum_[static_cast<std::size_t>(n - 1)] : FixedRange{};
}

FixedRange PrimeTables::psi(std::uint64_t x) const {
  FixedRange r = theta(x);
  r += psi_minus_theta(x);
  return r;
}

FixedRange PrimeTables::mertens_log(std::uint64_t x) const {
  return mertens_log_at_index(pi(x));
}

BigRational PrimeTables::mertens_product(std::uint64_t x) const {
  require(x);
  mpz_class num = 1, den = 1;
  for (std::uint32_t p : primes()) {
    if (p > x) break;
    num *= p;
    den *= p - 1;
  }
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

FactoredNumber PrimeTables::lcm_up_to(std::uint64_t m) const {
  require(m);
  std::vector<PrimePower> f;
  for (std::uint32_t p : primes()) {
    if (p > m) break;
    std::uint32_t k = 0;
    for (std::uint64_t q = p; q <= m; q *= p) {
      ++k;
      if (q > m / p) break;
    }
    f.push_back({p, k});
  }
  return FactoredNumber::from_sorted_unchecked(std::move(f));
}

namespace {

constexpr char kMagic[4] = {'A', 'B', 'P', 'T'};

template <class T>
void write_pod(std::ofstream& out, const T& v) {
  out.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <class T>
bool read_pod(std::ifstream& in, T& v) {
  return static_cast<bool>(in.read(reinterpret_cast<char*>(&v), sizeof(T)));
}

template <class T>
void write_vec(std::ofstream& out, const std::vector<T>& v) {
  out.write(reinterpret_cast<const char*>(v.data()), static_cast<std::streamsize>(v.size() * sizeof(T)));
}

template <class T>
bool read_vec(std::ifstream& in, std::vector<T>& v, std::size_t n) {
  v.resize(n);
  return static_cast<bool>(
      in.read(reinterpret_cast<char*>(v.data()), static_cast<std::streamsize>(n * sizeof(T))));
}

}  // namespace

void PrimeTables::save(const std::filesystem::path& file) const {
  std::ofstream out(file, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write cache file " + file.string());
  out.write(kMagic, 4);
  write_pod(out, kFormatVersion);
  write_pod(out, limit_);
  const std::uint64_t count = primes_.size();
  write_pod(out, count);
  write_vec(out, primes_);
  write_vec(out, log_mid_);
  write_vec(out, mertens_mid_);
}

std::optional<PrimeTables> PrimeTables::load(const std::filesystem::path& file,
                                             std::uint64_t limit) {
  std::ifstream in(file, std::ios::binary);
  if (!in) return std::nullopt;
  char magic[4];
  std::uint32_t version = 0;
  std::uint64_t stored_limit = 0, count = 0;
  if (!in.read(magic, 4) || std::memcmp(magic, kMagic, 4) != 0) return std::nullopt;
  if (!read_pod(in, version) || version != kFormatVersion) return std::nullopt;
  if (!read_pod(in, stored_limit) || stored_limit != limit) return std::nullopt;
  if (!read_pod(in, count) || count == 0 || count > limit) return std::nullopt;
  PrimeTables t;
  t.limit_ = limit;
  if (!read_vec(in, t.primes_, count) || !read_vec(in, t.log_mid_, count) ||
      !read_vec(in, t.mertens_mid_, count)) {
    return std::nullopt;
  }
  if (t.primes_.back() <= limit || t.primes_[count - 2] > limit) return std::nullopt;
  t.finish_sums();
  return t;
}

PrimeTables PrimeTables::build_cached(std::uint64_t limit, const std::filesystem::path& dir) {
  if (dir.empty()) return build(limit);
  const auto file = dir / ("primes-" + std::to_string(limit) + "-v" +
                           std::to_string(kFormatVersion) + ".bin");
  if (auto t = load(file, limit)) return std::move(*t);
  PrimeTables t = build(limit);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (!ec) {
    try {
      t.save(file);
    } catch (const Error&) {
      // cache is best effort
    }
  }
  return t;
}

}  // namespace abundant
