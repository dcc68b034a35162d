#include "abundant/factored.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>

#include "abundant/errors.hpp"

namespace abundant {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

bool miller_rabin(std::uint64_t n) {
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic for n < 3.3e24.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                          23ULL, 29ULL, 31ULL, 37ULL}) {
    if (a % n == 0) continue;
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

struct SmallPrimeTable {
  std::mutex mu;
  std::vector<Prime> primes;
  std::uint64_t covered = 1;

  void grow_to(std::uint64_t limit) {
    if (limit <= covered) return;
    std::vector<bool> composite(limit + 1, false);
    primes.clear();
    for (std::uint64_t i = 2; i <= limit; ++i) {
      if (composite[i]) continue;
      primes.push_back(i);
      for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
    }
    covered = limit;
  }
};

SmallPrimeTable& small_primes() {
  static SmallPrimeTable t;
  return t;
}

// log of a prime power sum in double, used for fast magnitude checks only.
double approx_log(const FactoredNumber& n) {
  double s = 0;
  for (const auto& f : n.factors()) s += f.exponent * std::log(static_cast<double>(f.prime));
  return s;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  if (n < (1ULL << 20)) {
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
      if (n % d == 0) return false;
    }
    return true;
  }
  for (std::uint64_t d : {3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
    if (n % d == 0) return false;
  }
  return miller_rabin(n);
}

Prime nth_small_prime(std::size_t k) {
  if (k == 0) throw OutOfRange("prime index must be >= 1");
  auto& t = small_primes();
  std::lock_guard lock(t.mu);
  while (t.primes.size() < k) {
    t.grow_to(std::max<std::uint64_t>(1024, t.covered * 2));
  }
  return t.primes[k - 1];
}

std::size_t small_prime_index(Prime p) {
  if (!is_prime(p)) throw NonPrimeFactor(std::to_string(p) + " is not prime");
  auto& t = small_primes();
  std::lock_guard lock(t.mu);
  while (t.covered < p) t.grow_to(std::max<std::uint64_t>(p, t.covered * 2));
  auto it = std::lower_bound(t.primes.begin(), t.primes.end(), p);
  return static_cast<std::size_t>(it - t.primes.begin()) + 1;
}

FactoredNumber FactoredNumber::from_sorted_unchecked(std::vector<PrimePower> factors) {
  FactoredNumber n;
  n.factors_ = std::move(factors);
  return n;
}

FactoredNumber FactoredNumber::from_exponents(std::span<const std::uint32_t> exponents) {
  std::vector<PrimePower> f;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] > 0) f.push_back({nth_small_prime(i + 1), exponents[i]});
  }
  return from_sorted_unchecked(std::move(f));
}

Prime FactoredNumber::largest_prime() const {
  return factors_.empty() ? 1 : factors_.back().prime;
}

std::uint32_t FactoredNumber::exponent_of(Prime q) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), q,
                             [](const PrimePower& f, Prime v) { return f.prime < v; });
  return (it != factors_.end() && it->prime == q) ? it->exponent : 0;
}

Prime FactoredNumber::x2() const {
  Prime best = 0;
  for (const auto& f : factors_) {
    if (f.exponent >= 2) best = f.prime;
  }
  return best;
}

bool FactoredNumber::has_primorial_shape() const {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i].prime != nth_small_prime(i + 1)) return false;
    if (i > 0 && factors_[i].exponent > factors_[i - 1].exponent) return false;
  }
  return true;
}

FactoredNumber make_factored(std::span<const std::pair<Prime, std::uint32_t>> pairs) {
  std::vector<PrimePower> f;
  f.reserve(pairs.size());
  for (const auto& [p, k] : pairs) {
    if (k == 0) throw ZeroExponent("zero exponent for prime " + std::to_string(p));
    if (!is_prime(p)) throw NonPrimeFactor(std::to_string(p) + " is not prime");
    f.push_back({p, k});
  }
  std::sort(f.begin(), f.end(),
            [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
  for (std::size_t i = 1; i < f.size(); ++i) {
    if (f[i].prime == f[i - 1].prime) {
      throw DuplicatePrime("prime " + std::to_string(f[i].prime) + " repeated");
    }
  }
  return FactoredNumber::from_sorted_unchecked(std::move(f));
}

FactoredNumber make_factored(std::initializer_list<std::pair<Prime, std::uint32_t>> pairs) {
  return make_factored(std::span<const std::pair<Prime, std::uint32_t>>(pairs.begin(), pairs.size()));
}

FactoredNumber from_primorials(std::span<const PrimorialPower> parts) {
  std::vector<std::uint32_t> exps;
  for (const auto& part : parts) {
    const std::size_t idx = small_prime_index(part.top);
    if (exps.size() < idx) exps.resize(idx, 0);
    for (std::size_t i = 0; i < idx; ++i) exps[i] += part.multiplicity;
  }
  return FactoredNumber::from_exponents(exps);
}

FactoredNumber from_primorials(std::initializer_list<PrimorialPower> parts) {
  return from_primorials(std::span<const PrimorialPower>(parts.begin(), parts.size()));
}

FactoredNumber from_primorial_indices(
    std::span<const std::pair<std::size_t, std::uint32_t>> parts) {
  std::vector<PrimorialPower> tops;
  for (const auto& [k, m] : parts) tops.push_back({nth_small_prime(k), m});
  return from_primorials(tops);
}

FactoredNumber mul_prime(const FactoredNumber& n, Prime p) {
  if (!is_prime(p)) throw NonPrimeFactor(std::to_string(p) + " is not prime");
  std::vector<PrimePower> f(n.factors().begin(), n.factors().end());
  auto it = std::lower_bound(f.begin(), f.end(), p,
                             [](const PrimePower& a, Prime v) { return a.prime < v; });
  if (it != f.end() && it->prime == p) {
    ++it->exponent;
  } else {
    f.insert(it, PrimePower{p, 1});
  }
  return FactoredNumber::from_sorted_unchecked(std::move(f));
}

FactoredNumber div_prime(const FactoredNumber& n, Prime p) {
  std::vector<PrimePower> f(n.factors().begin(), n.factors().end());
  auto it = std::lower_bound(f.begin(), f.end(), p,
                             [](const PrimePower& a, Prime v) { return a.prime < v; });
  if (it == f.end() || it->prime != p) {
    throw NotDivisible(std::to_string(p) + " does not divide " + format_pp(n));
  }
  if (--it->exponent == 0) f.erase(it);
  return FactoredNumber::from_sorted_unchecked(std::move(f));
}

FactoredNumber multiply(const FactoredNumber& a, const FactoredNumber& b) {
  std::vector<PrimePower> out;
  auto fa = a.factors();
  auto fb = b.factors();
  std::size_t i = 0, j = 0;
  while (i < fa.size() || j < fb.size()) {
    if (j == fb.size() || (i < fa.size() && fa[i].prime < fb[j].prime)) {
      out.push_back(fa[i++]);
    } else if (i == fa.size() || fb[j].prime < fa[i].prime) {
      out.push_back(fb[j++]);
    } else {
      out.push_back({fa[i].prime, fa[i].exponent + fb[j].exponent});
      ++i;
      ++j;
    }
  }
  return FactoredNumber::from_sorted_unchecked(std::move(out));
}

FactoredNumber factor_small(std::uint64_t n) {
  if (n == 0) throw DomainError("cannot factor 0");
  std::vector<PrimePower> f;
  for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d != 0) continue;
    std::uint32_t k = 0;
    while (n % d == 0) {
      n /= d;
      ++k;
    }
    f.push_back({d, k});
  }
  if (n > 1) f.push_back({n, 1});
  return FactoredNumber::from_sorted_unchecked(std::move(f));
}

mpz_class materialize(const FactoredNumber& n, double max_log) {
  if (approx_log(n) > max_log) {
    throw TooLarge("log n exceeds " + std::to_string(max_log) + " for " + format_pp(n));
  }
  mpz_class r = 1;
  mpz_class t;
  for (const auto& f : n.factors()) {
    mpz_ui_pow_ui(t.get_mpz_t(), f.prime, f.exponent);
    r *= t;
  }
  return r;
}

std::string format_pp(const FactoredNumber& n) {
  if (n.is_one()) return "1";
  std::string out;
  for (const auto& f : n.factors()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(f.prime);
    if (f.exponent != 1) out += '^' + std::to_string(f.exponent);
  }
  return out;
}

std::string format_primorial(const FactoredNumber& n) {
  if (n.is_one()) return "1";
  if (!n.has_primorial_shape()) return format_pp(n);
  const auto f = n.factors();
  std::string out;
  bool last_had_power = false;
  for (std::size_t j = f.size(); j-- > 1;) {
    const std::uint32_t next = (j + 1 < f.size()) ? f[j + 1].exponent : 0;
    const std::uint32_t m = f[j].exponent - next;
    if (m == 0) continue;
    out += '(' + std::to_string(f[j].prime) + "#)";
    last_had_power = m > 1;
    if (last_had_power) out += '^' + std::to_string(m);
  }
  const std::uint32_t next = f.size() > 1 ? f[1].exponent : 0;
  const std::uint32_t m = f[0].exponent - next;
  if (m > 0) {
    if (last_had_power) out += ' ';
    out += '2';
    if (m > 1) out += '^' + std::to_string(m);
  }
  return out;
}

namespace {

std::uint64_t read_uint(std::string_view s, std::size_t& pos) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data() + pos, s.data() + s.size(), v);
  if (ec != std::errc() || ptr == s.data() + pos) {
    throw DomainError("expected a number at offset " + std::to_string(pos) +
                      " in '" + std::string(s) + "'");
  }
  pos = static_cast<std::size_t>(ptr - s.data());
  return v;
}

std::uint32_t read_power(std::string_view s, std::size_t& pos) {
  if (pos < s.size() && s[pos] == '^') {
    ++pos;
    const auto k = read_uint(s, pos);
    if (k > 0xffffffffULL) throw DomainError("exponent too large");
    return static_cast<std::uint32_t>(k);
  }
  return 1;
}

void skip_ws(std::string_view s, std::size_t& pos) {
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
}

FactoredNumber parse_primorial_form(std::string_view s) {
  std::map<Prime, std::uint64_t> acc;
  std::size_t pos = 0;
  auto add_all_below = [&](Prime top, std::uint64_t m) {
    const std::size_t idx = small_prime_index(top);
    for (std::size_t i = 1; i <= idx; ++i) acc[nth_small_prime(i)] += m;
  };
  while (true) {
    skip_ws(s, pos);
    if (pos >= s.size()) break;
    if (s[pos] == '(') {
      ++pos;
      const Prime p = read_uint(s, pos);
      bool primorial = false;
      if (pos < s.size() && s[pos] == '#') {
        primorial = true;
        ++pos;
      }
      if (pos >= s.size() || s[pos] != ')') throw DomainError("missing ')'");
      ++pos;
      const std::uint32_t m = read_power(s, pos);
      if (m == 0) throw ZeroExponent("zero multiplicity");
      if (!is_prime(p)) throw NonPrimeFactor(std::to_string(p) + " is not prime");
      if (primorial) {
        add_all_below(p, m);
      } else {
        acc[p] += m;
      }
    } else if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
      const Prime p = read_uint(s, pos);
      const std::uint32_t k = read_power(s, pos);
      if (k == 0) throw ZeroExponent("zero exponent");
      if (!is_prime(p)) throw NonPrimeFactor(std::to_string(p) + " is not prime");
      acc[p] += k;
    } else {
      throw DomainError("unexpected character '" + std::string(1, s[pos]) + "'");
    }
  }
  std::vector<PrimePower> f;
  for (const auto& [p, k] : acc) f.push_back({p, static_cast<std::uint32_t>(k)});
  return FactoredNumber::from_sorted_unchecked(std::move(f));
}

}  // namespace

FactoredNumber parse_factored(std::string_view text) {
  std::string_view s = text;
  std::string_view value_part;
  if (auto eq = s.find('='); eq != std::string_view::npos) {
    value_part = s.substr(eq + 1);
    s = s.substr(0, eq);
  }
  FactoredNumber n;
  if (s.find('#') != std::string_view::npos || s.find('(') != std::string_view::npos) {
    n = parse_primorial_form(s);
  } else {
    std::vector<std::pair<Prime, std::uint32_t>> pairs;
    std::size_t pos = 0;
    while (true) {
      skip_ws(s, pos);
      if (pos >= s.size()) break;
      const Prime p = read_uint(s, pos);
      const std::uint32_t k = read_power(s, pos);
      if (pos < s.size() && !std::isspace(static_cast<unsigned char>(s[pos]))) {
        throw DomainError("unexpected character '" + std::string(1, s[pos]) + "'");
      }
      if (p == 1 && k == 1 && pairs.empty()) continue;  // literal "1"
      pairs.emplace_back(p, k);
    }
    n = make_factored(pairs);
  }
  if (!value_part.empty()) {
    std::string v(value_part);
    v.erase(std::remove_if(v.begin(), v.end(), [](unsigned char c) { return std::isspace(c); }),
            v.end());
    if (materialize(n) != mpz_class(v)) {
      throw ValidationError("value " + v + " does not match factorization");
    }
  }
  return n;
}

}  // namespace abundant

std::size_t std::hash<abundant::FactoredNumber>::operator()(
    const abundant::FactoredNumber& n) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (const auto& f : n.factors()) {
    h ^= std::hash<std::uint64_t>{}(f.prime * 1000003ULL + f.exponent) + 0x9e3779b97f4a7c15ULL +
         (h << 6) + (h >> 2);
  }
  return h;
}
