#include "abundant/generators.hpp"

#include <algorithm>
#include <cstdint>
#include <cmath>
#include <fstream>
#include <queue>
#include <sstream>

#include "abundant/errors.hpp"

namespace abundant {

namespace {

constexpr double kExpGamma = 1.7810724179901979;
// Pruning and ordering decisions taken in double need at least this much
// room; anything closer goes to exact arithmetic or is left unpruned.
constexpr double kLogMargin = 1e-12;
// Two logs closer than this (relative) are ordered exactly.
constexpr double kOrderSlack = 1e-9;

double log_sigma_ratio_pp(double q, std::uint32_t k) {
  if (k == 0) return 0.0;
  return std::log1p(-std::pow(q, -static_cast<double>(k) - 1.0)) - std::log1p(-1.0 / q);
}

double approx_log_sigma_ratio(const FactoredNumber& n) {
  double s = 0;
  for (const auto& f : n.factors()) s += log_sigma_ratio_pp(static_cast<double>(f.prime), f.exponent);
  return s;
}

struct Keyed {
  double log;
  std::size_t index;
};

// Sorts ascending by value: double order where the gap is decisive, exact
// order inside runs of near-equal logs.
template <class Get>
void sort_by_value(std::vector<Keyed>& keys, Get&& number_at) {
  std::sort(keys.begin(), keys.end(), [](const Keyed& a, const Keyed& b) {
    return a.log < b.log || (a.log == b.log && a.index < b.index);
  });
  std::size_t i = 0;
  while (i < keys.size()) {
    std::size_t j = i + 1;
    while (j < keys.size() &&
           keys[j].log - keys[j - 1].log <= kOrderSlack * std::max(1.0, keys[j].log)) {
      ++j;
    }
    if (j - i > 1) {
      std::vector<std::pair<FactoredNumber, Keyed>> run;
      for (std::size_t t = i; t < j; ++t) run.emplace_back(number_at(keys[t].index), keys[t]);
      std::sort(run.begin(), run.end(), [](const auto& a, const auto& b) {
        return compare_value(a.first, b.first) < 0;
      });
      for (std::size_t t = i; t < j; ++t) keys[t] = run[t - i].second;
    }
    i = j;
  }
}

// Exponent vectors over an initial prime segment, stored back to back.
struct VectorPool {
  std::vector<std::uint16_t> data;
  std::vector<std::size_t> offset{0};

  std::size_t size() const { return offset.size() - 1; }
  void push(const std::vector<std::uint16_t>& e) {
    data.insert(data.end(), e.begin(), e.end());
    offset.push_back(data.size());
  }
  FactoredNumber number(std::size_t i) const {
    std::vector<PrimePower> f;
    for (std::size_t j = offset[i]; j < offset[i + 1]; ++j) {
      f.push_back({nth_small_prime(j - offset[i] + 1), data[j]});
    }
    return FactoredNumber::from_sorted_unchecked(std::move(f));
  }
};

struct PrimeData {
  std::vector<double> p, lg, theta;
  explicit PrimeData(double max_log) {
    double th = 0;
    for (std::size_t k = 1;; ++k) {
      const double q = static_cast<double>(nth_small_prime(k));
      p.push_back(q);
      lg.push_back(std::log(q));
      th += lg.back();
      theta.push_back(th);
      if (th > max_log + 1) break;  // keeps one prime past the last usable one
    }
  }
};

// Depth-first search over non-increasing exponent vectors, largest prime
// first, dropping every vector n for which some m = n q^a / r^b < n has
// sigma(m)/m >= sigma(n)/n. Such n are not superabundant, so the record scan
// over the survivors still yields exactly the SA numbers.
class SaSearch {
 public:
  SaSearch(double max_log, bool prune, std::size_t max_count = SIZE_MAX)
      : max_log_(max_log), prune_(prune), max_count_(max_count), pd_(max_log) {
    lsr_.resize(pd_.p.size());
    for (std::size_t i = 0; i < pd_.p.size(); ++i) {
      const std::size_t kmax = static_cast<std::size_t>(2 * max_log / pd_.lg[i]) + 3;
      lsr_[i].resize(kmax);
      for (std::size_t k = 0; k < kmax; ++k) {
        lsr_[i][k] = log_sigma_ratio_pp(pd_.p[i], static_cast<std::uint32_t>(k));
      }
    }
  }

  VectorPool run() {
    for (std::size_t t = 1; t < pd_.p.size() && pd_.theta[t - 1] <= max_log_; ++t) {
      t_ = t;
      e_.assign(t, 0);
      descend(static_cast<long>(t) - 1, 0.0);
    }
    return std::move(pool_);
  }

 private:
  double lsr(std::size_t i, std::uint32_t k) const {
    return k < lsr_[i].size() ? lsr_[i][k] : log_sigma_ratio_pp(pd_.p[i], k);
  }

  // Largest a with a log(up) < b log(down), kept slightly conservative.
  std::uint32_t max_up(std::size_t up, std::size_t down, std::uint32_t b) const {
    const double a = std::floor(b * pd_.lg[down] / pd_.lg[up] - 1e-9);
    return a < 1 ? 0 : static_cast<std::uint32_t>(a);
  }

  enum class Verdict { Keep, Skip, Stop };

  // Exchanges between prime index i (exponent k) and every larger assigned
  // prime, plus the first unused prime.
  Verdict check(std::size_t i, std::uint32_t k) const {
    const double base_q = lsr(i, k);
    bool skip = false;
    for (std::size_t j = i + 1; j < t_; ++j) {
      const std::uint32_t kr = e_[j];
      const double base_r = lsr(j, kr);
      // r down, q up: gains shrink as k grows, so only this k is ruled out.
      for (std::uint32_t b = 1; b <= kr && !skip; ++b) {
        const std::uint32_t a = max_up(i, j, b);
        if (a == 0) continue;
        if (lsr(i, k + a) - base_q + lsr(j, kr - b) - base_r > kLogMargin) skip = true;
      }
      // q down, r up: losses shrink as k grows, so every larger k fails too.
      for (std::uint32_t b = 1; b <= k; ++b) {
        const std::uint32_t a = max_up(j, i, b);
        if (a == 0) continue;
        if (lsr(j, kr + a) - base_r + lsr(i, k - b) - base_q > kLogMargin) return Verdict::Stop;
      }
    }
    const std::size_t next = t_;
    for (std::uint32_t b = 1; b <= k; ++b) {
      const std::uint32_t a = max_up(next, i, b);
      if (a == 0) continue;
      if (lsr(next, a) + lsr(i, k - b) - base_q > kLogMargin) return Verdict::Stop;
    }
    return skip ? Verdict::Skip : Verdict::Keep;
  }

  void descend(long i, double log_so_far) {
    const std::size_t ui = static_cast<std::size_t>(i);
    const std::uint32_t lo = ui + 1 == t_ ? 1 : e_[ui + 1];
    for (std::uint32_t k = lo; log_so_far + k * pd_.theta[ui] <= max_log_; ++k) {
      if (prune_) {
        const Verdict v = check(ui, k);
        if (v == Verdict::Stop) break;
        if (v == Verdict::Skip) continue;
      }
      e_[ui] = static_cast<std::uint16_t>(k);
      if (i == 0) {
        pool_.push(e_);
        if (pool_.size() > max_count_) {
          throw TooLarge("more than " + std::to_string(max_count_) +
                         " candidates; search stopped with largest prime " +
                         std::to_string(static_cast<std::uint64_t>(pd_.p[t_ - 1])));
        }
      } else {
        descend(i - 1, log_so_far + k * pd_.lg[ui]);
      }
    }
    e_[ui] = 0;
  }

  double max_log_;
  bool prune_;
  std::size_t max_count_;
  PrimeData pd_;
  std::vector<std::vector<double>> lsr_;
  std::size_t t_ = 0;
  std::vector<std::uint16_t> e_;
  VectorPool pool_;
};

std::vector<FactoredNumber> sorted_numbers(const VectorPool& pool) {
  std::vector<Keyed> keys(pool.size());
  for (std::size_t i = 0; i < pool.size(); ++i) {
    double l = 0;
    for (std::size_t j = pool.offset[i]; j < pool.offset[i + 1]; ++j) {
      l += pool.data[j] * std::log(static_cast<double>(nth_small_prime(j - pool.offset[i] + 1)));
    }
    keys[i] = {l, i};
  }
  sort_by_value(keys, [&](std::size_t i) { return pool.number(i); });
  std::vector<FactoredNumber> out;
  out.reserve(keys.size());
  for (const auto& k : keys) out.push_back(pool.number(k.index));
  return out;
}

// f compared through a double estimate, falling back to compare_f.
struct FEstimate {
  FactoredNumber n;
  double approx;
};

double approx_f(const FactoredNumber& n) {
  return std::exp(approx_log_sigma_ratio(n)) / std::log(approx_log_n(n));
}

bool f_greater(const FEstimate& a, const FEstimate& b) {
  if (std::abs(a.approx - b.approx) > kOrderSlack * a.approx) return a.approx > b.approx;
  return compare_f(a.n, b.n) > 0;
}

struct StepKey {
  Prime p;
  std::uint32_t k;
  double approx;
};

double approx_threshold(Prime p, std::uint32_t k) {
  const double q = static_cast<double>(p);
  // 1/(p + ... + p^k) = (p - 1) / (p (p^k - 1))
  const double inv = (q - 1.0) / (q * (std::pow(q, k) - 1.0));
  return std::log1p(inv) / std::log(q);
}

// True when step a comes before step b (larger threshold first).
bool step_before(const StepKey& a, const StepKey& b) {
  if (a.p == b.p && a.k == b.k) return false;
  if (std::abs(a.approx - b.approx) > kOrderSlack * std::max(a.approx, b.approx)) {
    return a.approx > b.approx;
  }
  const auto ord = compare_escalating(
      [&](mpfr_prec_t prec) {
        return std::pair{ca_threshold(a.p, a.k, prec), ca_threshold(b.p, b.k, prec)};
      },
      [&] {
        return "CA thresholds F(" + std::to_string(a.p) + "," + std::to_string(a.k) + ") and F(" +
               std::to_string(b.p) + "," + std::to_string(b.k) + ") unresolved";
      });
  if (ord != std::weak_ordering::equivalent) return ord == std::weak_ordering::greater;
  return a.p < b.p || (a.p == b.p && a.k < b.k);
}

// Emits CA steps in order until `more` returns false.
template <class More>
void generate_steps(More&& more) {
  auto cmp = [](const StepKey& a, const StepKey& b) { return step_before(b, a); };
  std::priority_queue<StepKey, std::vector<StepKey>, decltype(cmp)> heap(cmp);
  std::size_t next_index = 1;
  auto push_new_prime = [&] {
    const Prime p = nth_small_prime(next_index++);
    heap.push({p, 1, approx_threshold(p, 1)});
  };
  push_new_prime();
  while (true) {
    const StepKey s = heap.top();
    heap.pop();
    heap.push({s.p, s.k + 1, approx_threshold(s.p, s.k + 1)});
    if (s.k == 1) push_new_prime();
    if (!more(s)) return;
  }
}

}  // namespace

std::string flags_string(std::uint8_t flags) {
  std::string s;
  if (flags & kSA) s += 's';
  if (flags & kCA) s += 'c';
  if (flags & kXA) s += 'x';
  return s.empty() ? "-" : s;
}

std::uint8_t parse_flags(std::string_view text) {
  std::uint8_t f = 0;
  if (text == "-") return 0;
  for (char c : text) {
    switch (c) {
      case 's': f |= kSA; break;
      case 'c': f |= kCA; break;
      case 'x': f |= kXA; break;
      default: throw DomainError("unknown flag '" + std::string(1, c) + "'");
    }
  }
  return f;
}

Metrics compute_metrics(const FactoredNumber& n) {
  Metrics m;
  m.sigma_over_n = sigma_over_n(n);
  m.log_n = log_n(n);
  m.p = n.largest_prime();
  m.k2 = n.k2();
  m.d = divisor_count(n);
  const bool small = n.is_one() || n == FactoredNumber::from_sorted_unchecked({{2, 1}});
  if (!small) m.f = f_value(n);
  return m;
}

std::size_t ClassifiedList::count(std::uint8_t flag) const {
  return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(),
                                                [flag](const ListEntry& e) { return e.flags & flag; }));
}

std::vector<FactoredNumber> ClassifiedList::numbers(std::uint8_t flag) const {
  std::vector<FactoredNumber> out;
  for (const auto& e : entries) {
    if (e.flags & flag) out.push_back(e.n);
  }
  return out;
}

Interval ca_threshold(Prime p, std::uint32_t k, mpfr_prec_t prec) {
  mpz_class pk;
  mpz_ui_pow_ui(pk.get_mpz_t(), p, k);
  mpq_class inv(mpz_class(p - 1), mpz_class(p) * (pk - 1));
  inv.canonicalize();
  return log1p(Interval::from_mpq(inv, prec)) / log_prime(p, prec);
}

std::vector<CAStep> ca_steps(std::size_t count) {
  if (count == 0) throw DomainError("ca_steps needs count >= 1");
  std::vector<CAStep> out;
  generate_steps([&](const StepKey& s) {
    out.push_back({s.p, s.k, ca_threshold(s.p, s.k)});
    return out.size() < count;
  });
  return out;
}

ClassifiedList ca_numbers(std::size_t count) {
  ClassifiedList list;
  FactoredNumber n;
  for (const CAStep& s : ca_steps(count)) {
    n = mul_prime(n, s.prime);
    list.entries.push_back({n, kSA | kCA});
  }
  return list;
}

ClassifiedList ca_up_to(double max_log) {
  ClassifiedList list;
  list.horizon = max_log;
  FactoredNumber n;
  double l = 0;
  generate_steps([&](const StepKey& s) {
    l += std::log(static_cast<double>(s.p));
    if (l > max_log) return false;
    n = mul_prime(n, s.p);
    list.entries.push_back({n, kSA | kCA});
    return true;
  });
  return list;
}

CAForEpsilon ca_for_epsilon(double eps) {
  const Interval top = ca_threshold(2, 1);
  if (!(eps > 0) || !(Interval::from_double(eps).compare(top) == std::weak_ordering::less)) {
    throw DomainError("epsilon must lie in (0, F(2,1))");
  }
  CAForEpsilon out;
  generate_steps([&](const StepKey& s) {
    std::optional<std::weak_ordering> ord;
    for (mpfr_prec_t prec = kBasePrecision; prec <= kMaxPrecision && !ord; prec *= 2) {
      ord = ca_threshold(s.p, s.k, prec).compare(Interval::from_double(eps, prec));
    }
    if (ord == std::weak_ordering::greater) {
      out.smallest = mul_prime(out.smallest, s.p);
      out.largest = mul_prime(out.largest, s.p);
      return true;
    }
    if (!ord) {
      out.largest = mul_prime(out.largest, s.p);
      return true;
    }
    return false;
  });
  return out;
}

std::vector<FactoredNumber> enumerate_candidates(double max_log, std::size_t max_count) {
  if (max_log < std::log(2.0)) return {};
  SaSearch search(max_log, false, max_count);
  return sorted_numbers(search.run());
}

std::vector<FactoredNumber> record_scan(const std::vector<FactoredNumber>& ascending) {
  std::vector<FactoredNumber> out;
  double best = -1;
  const FactoredNumber* best_n = nullptr;
  for (const auto& n : ascending) {
    const double v = approx_log_sigma_ratio(n);
    bool record;
    if (best_n == nullptr || v > best + kLogMargin) {
      record = true;
    } else if (v < best - kLogMargin) {
      record = false;
    } else {
      record = compare_sigma_ratio(n, *best_n) > 0;
    }
    if (record) {
      out.push_back(n);
      best = v;
      best_n = &n;
    }
  }
  return out;
}

ClassifiedList sa_numbers(double max_log) {
  ClassifiedList list;
  list.horizon = max_log;
  std::vector<FactoredNumber> cands{FactoredNumber{}};
  if (max_log >= std::log(2.0)) {
    SaSearch search(max_log, true);
    auto sorted = sorted_numbers(search.run());
    cands.insert(cands.end(), std::make_move_iterator(sorted.begin()),
                 std::make_move_iterator(sorted.end()));
  }
  for (auto& n : record_scan(cands)) list.entries.push_back({std::move(n), kSA});

  // CA numbers are SA; flag them and insist they were found.
  const ClassifiedList ca = ca_up_to(max_log);
  std::size_t j = 0;
  for (const auto& c : ca.entries) {
    while (j < list.entries.size() && !(list.entries[j].n == c.n)) ++j;
    if (j == list.entries.size()) {
      throw ValidationError("CA number " + format_pp(c.n) + " missing from the SA scan");
    }
    list.entries[j].flags |= kCA;
  }
  if (max_log >= std::log(10080.0)) {
    const ClassifiedList xa = xa_numbers(list);
    std::size_t k = 0;
    for (auto& e : list.entries) {
      if (k < xa.entries.size() && e.n == xa.entries[k].n) {
        e.flags |= kXA;
        ++k;
      }
    }
  }
  return list;
}

ClassifiedList xa_numbers(const ClassifiedList& sa) {
  const FactoredNumber start = factor_small(10080);
  auto it = std::find_if(sa.entries.begin(), sa.entries.end(),
                         [&](const ListEntry& e) { return e.n == start; });
  if (it == sa.entries.end()) {
    throw HorizonInsufficient("SA list does not contain 10080");
  }
  ClassifiedList out;
  out.horizon = sa.horizon;
  FEstimate best{it->n, approx_f(it->n)};
  out.entries.push_back({it->n, static_cast<std::uint8_t>(it->flags | kXA)});
  for (++it; it != sa.entries.end(); ++it) {
    if (!(it->flags & kSA)) continue;
    FEstimate cur{it->n, approx_f(it->n)};
    if (f_greater(cur, best)) {
      out.entries.push_back({it->n, static_cast<std::uint8_t>(it->flags | kXA)});
      best = std::move(cur);
    }
  }
  return out;
}

std::vector<std::uint64_t> sigma_sieve(std::uint64_t limit) {
  std::vector<std::uint64_t> s;
  try {
    s.assign(limit + 1, 0);
  } catch (const std::bad_alloc&) {
    throw TooLarge("divisor-sum sieve to " + std::to_string(limit) + " does not fit in memory");
  }
  for (std::uint64_t d = 1; d <= limit; ++d) {
    for (std::uint64_t m = d; m <= limit; m += d) s[m] += d;
  }
  return s;
}

std::vector<std::uint64_t> brute_force_sa(std::uint64_t limit) {
  const auto s = sigma_sieve(limit);
  std::vector<std::uint64_t> out;
  std::uint64_t bn = 1, bs = 0;
  for (std::uint64_t n = 1; n <= limit; ++n) {
    // s[n]/n > bs/bn
    if (static_cast<unsigned __int128>(s[n]) * bn > static_cast<unsigned __int128>(bs) * n) {
      out.push_back(n);
      bn = n;
      bs = s[n];
    }
  }
  return out;
}

RobinSieveReport brute_force_robin(std::uint64_t limit) {
  RobinSieveReport r;
  r.limit = limit;
  if (limit < 3) return r;
  const auto s = sigma_sieve(limit);
  for (std::uint64_t n = 3; n <= limit; ++n) {
    const double ratio = static_cast<double>(s[n]) / static_cast<double>(n);
    const double ll = std::log(std::log(static_cast<double>(n)));
    const double gap = ratio - kExpGamma * ll;
    bool violates;
    if (std::abs(gap) > 1e-9) {
      violates = gap >= 0;
    } else {
      const auto ord = compare_escalating(
          [&](mpfr_prec_t prec) {
            const Interval lhs =
                Interval::from_mpq(mpq_class(mpz_class(std::to_string(s[n])),
                                             mpz_class(std::to_string(n))),
                                   prec);
            const Interval rhs =
                exp_gamma(prec) * log(log(Interval::from_long(static_cast<long>(n), prec)));
            return std::pair{lhs, rhs};
          },
          [n] { return "Robin inequality unresolved at n = " + std::to_string(n); });
      violates = ord != std::weak_ordering::less;
    }
    if (violates) (n <= 5040 ? r.violations_small : r.violations_large).push_back(n);
    if (n > 5040) {
      const double f = ratio / ll;
      if (f > r.max_f) {
        r.max_f = f;
        r.max_f_point = n;
      }
    }
  }
  return r;
}

void write_list(const ClassifiedList& list, std::ostream& out, Notation notation) {
  out << "# abundant list v1\n";
  if (list.horizon) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", *list.horizon);
    out << "# horizon " << buf << "\n";
  }
  out << "# columns: number<TAB>flags (s superabundant, c colossally abundant, x extremely "
         "abundant)\n";
  for (const auto& e : list.entries) {
    out << (notation == Notation::Primorial ? format_primorial(e.n) : format_pp(e.n)) << '\t'
        << flags_string(e.flags) << '\n';
  }
}

void export_list(const ClassifiedList& list, const std::filesystem::path& path,
                 Notation notation) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  write_list(list, out, notation);
}

namespace {

// A lone decimal token is read as the integer's value; it must split over
// primes below 10^6. Anything else goes through the factored-text parser.
FactoredNumber parse_entry(const std::string& text) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
    return parse_factored(text);
  }
  mpz_class v(text);
  if (v == 0) throw DomainError("zero is not a list entry");
  std::vector<std::pair<Prime, std::uint32_t>> pp;
  for (std::size_t k = 1; v > 1; ++k) {
    const Prime q = nth_small_prime(k);
    if (q > 1'000'000) throw DomainError("cannot split " + text + " over small primes");
    std::uint32_t e = 0;
    while (mpz_divisible_ui_p(v.get_mpz_t(), q)) {
      mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), q);
      ++e;
    }
    if (e > 0) pp.emplace_back(q, e);
  }
  return make_factored(pp);
}

}  // namespace

ClassifiedList read_list(std::istream& in, bool check_sa) {
  ClassifiedList list;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    if (line[first] == '#') {
      std::istringstream hs(line.substr(first + 1));
      std::string key;
      double h;
      if (hs >> key && key == "horizon" && hs >> h) list.horizon = h;
      continue;
    }
    const auto tab = line.find('\t', first);
    const std::string number = line.substr(first, tab == std::string::npos ? tab : tab - first);
    ListEntry e;
    try {
      e.n = parse_entry(number);
      if (tab != std::string::npos) {
        std::string flags = line.substr(tab + 1);
        while (!flags.empty() && (flags.back() == ' ' || flags.back() == '\t')) flags.pop_back();
        e.flags = parse_flags(flags);
      }
    } catch (const ParseError& err) {
      throw ParseError(lineno, err.what());
    } catch (const Error& err) {
      throw ParseError(lineno, err.what());
    }
    list.entries.push_back(std::move(e));
  }

  std::vector<std::string> failures;
  for (std::size_t i = 1; i < list.entries.size(); ++i) {
    if (compare_value(list.entries[i - 1].n, list.entries[i].n) >= 0) {
      failures.push_back("entry " + std::to_string(i + 1) + " (" + format_pp(list.entries[i].n) +
                         ") does not exceed its predecessor");
    }
  }
  if (check_sa) {
    const FactoredNumber* best = nullptr;
    for (std::size_t i = 0; i < list.entries.size(); ++i) {
      const auto& e = list.entries[i];
      if (!(e.flags & kSA)) continue;
      if (!e.n.has_primorial_shape()) {
        failures.push_back("entry " + std::to_string(i + 1) + " flagged s lacks non-increasing exponents");
      }
      if (best != nullptr && compare_sigma_ratio(e.n, *best) <= 0) {
        failures.push_back("entry " + std::to_string(i + 1) + " flagged s does not raise sigma(n)/n");
      }
      best = &e.n;
    }
  }
  if (!failures.empty()) {
    std::string msg = std::to_string(failures.size()) + " validation failure(s):";
    for (const auto& f : failures) msg += "\n  " + f;
    throw ValidationError(msg);
  }
  return list;
}

ClassifiedList import_list(const std::filesystem::path& path, bool check_sa) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path.string());
  return read_list(in, check_sa);
}

std::vector<FactoredNumber> find_ca_log_less_p(std::size_t count) {
  std::vector<FactoredNumber> out;
  for (const auto& e : ca_numbers(count).entries) {
    const Interval p = Interval::from_long(static_cast<long>(e.n.largest_prime()));
    const auto ord = compare_escalating([&](mpfr_prec_t prec) { return std::pair{log_n(e.n, prec), p}; },
                                        [&] { return "log N vs p(N) unresolved for " + format_pp(e.n); });
    if (ord == std::weak_ordering::less) out.push_back(e.n);
  }
  return out;
}

}  // namespace abundant
