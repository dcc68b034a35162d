#include "abundant/criteria.hpp"

#include <cmath>
#include <cstdio>
#include <unordered_set>

#include <json.hpp>

#include "abundant/arith.hpp"
#include "abundant/errors.hpp"

namespace abundant {

namespace {

constexpr double kExpGamma = 1.7810724179901979;
constexpr double kEulerGamma = 0.57721566490153286;
constexpr double kRobinConst = 0.64821364942;  // only for double screening
// Double margins above this (relative to the compared magnitudes) are
// accepted without an interval recheck.
constexpr double kFastSlack = 1e-9;

// Escalates precision until the margin has a certain sign. `strict` selects
// between "> 0" and ">= 0" as the satisfying side.
template <class Eval>
std::pair<Interval, Truth> settle(Eval&& eval, bool strict) {
  Interval m;
  for (mpfr_prec_t prec = kBasePrecision; prec <= kMaxPrecision; prec *= 2) {
    m = eval(prec);
    if (strict ? m.certainly_positive() : m.certainly_nonnegative()) return {m, Truth::True};
    if (m.certainly_negative()) return {m, Truth::False};
    if (strict && m.is_point()) return {m, Truth::False};  // exactly zero
  }
  return {m, Truth::Unresolved};
}

CriterionVerdict make(std::string id, std::string subject, std::pair<Interval, Truth> r) {
  return {std::move(id), std::move(subject), std::move(r.first), r.second};
}

Interval ratio_interval(std::uint64_t num, std::uint64_t den, mpfr_prec_t prec) {
  mpq_class q(mpz_class(std::to_string(num)), mpz_class(std::to_string(den)));
  q.canonicalize();
  return Interval::from_mpq(q, prec);
}

void require_at_least_3(const FactoredNumber& n, const char* what) {
  if (n.is_one() || n == FactoredNumber::from_sorted_unchecked({{2, 1}})) {
    throw DomainError(std::string(what) + " requires n >= 3");
  }
}

// Harmonic number as an interval, accumulated with outward rounding.
class Harmonic {
 public:
  Harmonic() {
    mpfr_init2(lo_, kBasePrecision);
    mpfr_init2(hi_, kBasePrecision);
    mpfr_init2(t_, kBasePrecision);
    mpfr_set_ui(lo_, 0, MPFR_RNDN);
    mpfr_set_ui(hi_, 0, MPFR_RNDN);
  }
  ~Harmonic() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
    mpfr_clear(t_);
  }
  Harmonic(const Harmonic&) = delete;
  Harmonic& operator=(const Harmonic&) = delete;

  void add_reciprocal(std::uint64_t n) {
    mpfr_set_ui(t_, 1, MPFR_RNDN);
    mpfr_div_ui(t_, t_, static_cast<unsigned long>(n), MPFR_RNDD);
    mpfr_add(lo_, lo_, t_, MPFR_RNDD);
    mpfr_set_ui(t_, 1, MPFR_RNDN);
    mpfr_div_ui(t_, t_, static_cast<unsigned long>(n), MPFR_RNDU);
    mpfr_add(hi_, hi_, t_, MPFR_RNDU);
  }
  double lower() const { return mpfr_get_d(lo_, MPFR_RNDD); }
  Interval value() const { return Interval::from_endpoints(lo_, hi_, kBasePrecision); }

 private:
  mpfr_t lo_, hi_, t_;
};

// H + e^H log H - sigma
Interval lagarias_margin(const Interval& h, std::uint64_t sigma) {
  return h + exp(h) * log(h) - Interval::from_mpz(mpz_class(std::to_string(sigma)), h.precision());
}

void record_failure(ScanSummary& s, CriterionVerdict v) {
  ++s.failures;
  if (s.failed.size() < ScanSummary::kMaxRecorded) s.failed.push_back(std::move(v));
}

void track_min(ScanSummary& s, double margin, std::uint64_t at) {
  if (s.checked == 1 || margin < s.min_margin) {
    s.min_margin = margin;
    s.min_margin_at = at;
  }
}

}  // namespace

CriterionVerdict robin_check(const FactoredNumber& n) {
  require_at_least_3(n, "Robin's inequality");
  const BigRational r = sigma_over_n(n);
  return make("robin", format_pp(n), settle(
                                         [&](mpfr_prec_t prec) {
                                           return exp_gamma(prec) -
                                                  Interval::from_mpq(r, prec) / log_log_n(n, prec);
                                         },
                                         true));
}

CriterionVerdict robin_refined_check(const FactoredNumber& n) {
  require_at_least_3(n, "the refined Robin bound");
  const BigRational r = sigma_over_n(n);
  return make("robin_refined", format_pp(n),
              settle(
                  [&](mpfr_prec_t prec) {
                    const Interval ll = log_log_n(n, prec);
                    return exp_gamma(prec) + robin_constant(prec) / (ll * ll) -
                           Interval::from_mpq(r, prec) / ll;
                  },
                  false));
}

CriterionVerdict lagarias_check(std::uint64_t n) {
  if (n == 0) throw DomainError("Lagarias' inequality requires n >= 1");
  if (n > kLagariasLimit) {
    throw RangeNotCovered("Lagarias check limited to n <= " + std::to_string(kLagariasLimit));
  }
  Harmonic h;
  for (std::uint64_t j = 1; j <= n; ++j) h.add_reciprocal(j);
  const mpz_class s = sigma(factor_small(n));
  const Interval hv = h.value();
  const auto margin = hv + exp(hv) * log(hv) - Interval::from_mpz(s);
  Truth t = margin.certainly_nonnegative() ? Truth::True
            : margin.certainly_negative()  ? Truth::False
                                           : Truth::Unresolved;
  return {"lagarias", std::to_string(n), margin, t};
}

CriterionVerdict nicolas_check(std::size_t k, const PrimeTables& tables) {
  if (k < 2) throw DomainError("Nicolas' inequality requires k >= 2");
  tables.nth_prime(k);  // range check
  const std::string subject = "k=" + std::to_string(k);
  if (k <= 2000) {
    const FactoredNumber nk = tables.primorial(k);
    const BigRational ratio = phi_over_n(nk);
    const BigRational inv = 1 / ratio;
    return make("nicolas", subject, settle(
                                        [&](mpfr_prec_t prec) {
                                          return Interval::from_mpq(inv, prec) / log_log_n(nk, prec) -
                                                 exp_gamma(prec);
                                        },
                                        true));
  }
  return make("nicolas", subject, settle(
                                      [&](mpfr_prec_t prec) {
                                        const Interval ratio =
                                            exp(tables.mertens_log_at_index(k).to_interval(prec));
                                        const Interval ll =
                                            log(tables.theta_at_index(k).to_interval(prec));
                                        return ratio / ll - exp_gamma(prec);
                                      },
                                      true));
}

ScanSummary robin_scan(std::uint64_t from, std::uint64_t to, bool refined) {
  ScanSummary s;
  s.criterion_id = refined ? "robin_refined" : "robin";
  s.from = std::max<std::uint64_t>(from, 3);
  s.to = to;
  if (s.from > to) return s;
  const auto sig = sigma_sieve(to);
  for (std::uint64_t n = s.from; n <= to; ++n) {
    ++s.checked;
    const double ratio = static_cast<double>(sig[n]) / static_cast<double>(n);
    const double ll = std::log(std::log(static_cast<double>(n)));
    const double bound = kExpGamma + (refined ? kRobinConst / (ll * ll) : 0.0);
    const double margin = bound - ratio / ll;
    track_min(s, margin, n);
    if (margin > kFastSlack * bound) continue;
    const auto r = settle(
        [&](mpfr_prec_t prec) {
          const Interval l2 = log(log(Interval::from_long(static_cast<long>(n), prec)));
          Interval b = exp_gamma(prec);
          if (refined) b = b + robin_constant(prec) / (l2 * l2);
          return b - ratio_interval(sig[n], n, prec) / l2;
        },
        !refined);
    if (r.second != Truth::True) record_failure(s, make(s.criterion_id, std::to_string(n), r));
  }
  return s;
}

ScanSummary lagarias_scan(std::uint64_t from, std::uint64_t to) {
  ScanSummary s;
  s.criterion_id = "lagarias";
  s.from = std::max<std::uint64_t>(from, 1);
  s.to = to;
  if (to > kLagariasLimit) {
    throw RangeNotCovered("Lagarias scan limited to n <= " + std::to_string(kLagariasLimit));
  }
  if (s.from > to) return s;
  const auto sig = sigma_sieve(to);
  Harmonic h;
  for (std::uint64_t n = 1; n <= to; ++n) {
    h.add_reciprocal(n);
    if (n < s.from) continue;
    ++s.checked;
    // The right side increases with H, so the lower end of H is the worst case.
    const double hl = h.lower();
    const double rhs = hl + std::exp(hl) * std::log(hl);
    const double margin = rhs - static_cast<double>(sig[n]);
    track_min(s, margin, n);
    if (margin > kFastSlack * rhs) continue;
    const Interval m = lagarias_margin(h.value(), sig[n]);
    const Truth t = m.certainly_nonnegative() ? Truth::True
                    : m.certainly_negative()  ? Truth::False
                                              : Truth::Unresolved;
    if (t != Truth::True) record_failure(s, {s.criterion_id, std::to_string(n), m, t});
  }
  return s;
}

ScanSummary nicolas_scan(std::size_t k_from, std::size_t k_to, const PrimeTables& tables) {
  ScanSummary s;
  s.criterion_id = "nicolas";
  s.from = std::max<std::size_t>(k_from, 2);
  s.to = k_to;
  if (k_to > 0) tables.nth_prime(k_to);  // range check
  for (std::size_t k = s.from; k <= k_to; ++k) {
    ++s.checked;
    const double m = tables.mertens_log_at_index(k).approx();
    const double th = tables.theta_at_index(k).approx();
    const double log_margin = m - kEulerGamma - std::log(std::log(th));
    track_min(s, std::exp(m) / std::log(th) - kExpGamma, k);
    if (log_margin > kFastSlack) continue;
    CriterionVerdict v = nicolas_check(k, tables);
    if (v.holds != Truth::True) record_failure(s, std::move(v));
  }
  return s;
}

GronwallTrend gronwall_trend(const ClassifiedList& list) {
  GronwallTrend t;
  const FactoredNumber n5040 = factor_small(5040);
  const Interval eg = exp_gamma();
  const FactoredNumber* best = nullptr;
  const FactoredNumber* prev = nullptr;
  for (const auto& e : list.entries) {
    if (e.n.is_one() || e.n == FactoredNumber::from_sorted_unchecked({{2, 1}})) continue;
    TrendRow row;
    row.n = e.n;
    row.f = f_value(e.n);
    row.gap = eg - row.f;
    if (best == nullptr || compare_f(e.n, *best) > 0) {
      row.new_max = true;
      ++t.running_max_updates;
      best = &e.n;
    }
    if (prev != nullptr && compare_f(e.n, *prev) <= 0) t.strictly_increasing = false;
    if (compare_value(e.n, n5040) > 0 && !row.gap.certainly_positive()) {
      t.gaps_positive_after_5040 = false;
    }
    prev = &e.n;
    t.rows.push_back(std::move(row));
  }
  return t;
}

Interval ramanujan_quantity(const FactoredNumber& n) {
  require_at_least_3(n, "the Ramanujan quantity");
  const Interval ln = log_n(n);
  return (Interval::from_mpq(sigma_over_n(n)) - exp_gamma() * log(ln)) * sqrt(ln);
}

CountStatistics count_statistics(const ClassifiedList& xa, const ClassifiedList& ca,
                                 double horizon) {
  for (const auto* l : {&xa, &ca}) {
    if (l->horizon && *l->horizon < horizon) {
      throw HorizonMismatch("list horizon " + std::to_string(*l->horizon) +
                            " is below the requested " + std::to_string(horizon));
    }
  }
  auto within = [horizon](const ListEntry& e) { return approx_log_n(e.n) <= horizon; };
  std::unordered_set<FactoredNumber> xs, cs;
  for (const auto& e : xa.entries) {
    if (within(e)) xs.insert(e.n);
  }
  for (const auto& e : ca.entries) {
    if (within(e)) cs.insert(e.n);
  }
  CountStatistics c;
  c.horizon = horizon;
  c.xa = xs.size();
  c.ca = cs.size();
  for (const auto& n : cs) {
    if (xs.count(n)) ++c.ca_and_xa;
  }
  c.ca_not_xa = c.ca - c.ca_and_xa;
  c.xa_not_ca = c.xa - c.ca_and_xa;
  return c;
}

void write_verdicts(const std::vector<CriterionVerdict>& v, std::ostream& out,
                    ReportFormat format) {
  auto num = [](double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return std::string(buf);
  };
  switch (format) {
    case ReportFormat::Json: {
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (const auto& r : v) {
        arr.push_back({{"criterion_id", r.criterion_id},
                       {"subject", r.subject},
                       {"holds", to_string(r.holds)},
                       {"margin_lo", r.margin.lower()},
                       {"margin_hi", r.margin.upper()}});
      }
      out << arr.dump(2) << '\n';
      return;
    }
    case ReportFormat::Csv:
    case ReportFormat::Tsv: {
      const char sep = format == ReportFormat::Csv ? ',' : '\t';
      out << "criterion_id" << sep << "subject" << sep << "holds" << sep << "margin_lo" << sep
          << "margin_hi\n";
      for (const auto& r : v) {
        std::string subject = r.subject;
        if (format == ReportFormat::Csv && subject.find_first_of(",\" ") != std::string::npos) {
          subject = "\"" + subject + "\"";
        }
        out << r.criterion_id << sep << subject << sep << to_string(r.holds) << sep
            << num(r.margin.lower()) << sep << num(r.margin.upper()) << '\n';
      }
      return;
    }
    case ReportFormat::Text:
      for (const auto& r : v) {
        out << r.criterion_id << "  " << r.subject << "  " << to_string(r.holds) << "  margin "
            << r.margin.str(12) << '\n';
      }
      return;
  }
}

}  // namespace abundant
