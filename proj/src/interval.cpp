#include "abundant/interval.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

#include "abundant/errors.hpp"

namespace abundant {

namespace {

// First 60 digits of Euler's constant; used to validate mpfr_const_euler.
constexpr const char* kGammaLiteral =
    "0.577215664901532860606512090082402431042159335939923598805767";
constexpr const char* kGammaLiteralSlack = "1e-59";

struct Scratch {
  explicit Scratch(mpfr_prec_t p) { mpfr_init2(v, p); }
  ~Scratch() { mpfr_clear(v); }
  Scratch(const Scratch&) = delete;
  Scratch& operator=(const Scratch&) = delete;
  mpfr_t v;
};

}  // namespace

std::string to_string(Truth t) {
  switch (t) {
    case Truth::True:
      return "true";
    case Truth::False:
      return "false";
    case Truth::Unresolved:
      return "unresolved";
  }
  return "unresolved";
}

Interval::Interval(mpfr_prec_t prec) : prec_(prec) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Interval& other) : prec_(other.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& other) noexcept : prec_(other.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
}

Interval& Interval::operator=(const Interval& other) {
  if (this != &other) {
    prec_ = other.prec_;
    mpfr_set_prec(lo_, prec_);
    mpfr_set_prec(hi_, prec_);
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
  }
  return *this;
}

Interval& Interval::operator=(Interval&& other) noexcept {
  if (this != &other) {
    std::swap(prec_, other.prec_);
    mpfr_swap(lo_, other.lo_);
    mpfr_swap(hi_, other.hi_);
  }
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Interval Interval::from_long(long v, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set_si(r.lo_, v, MPFR_RNDD);
  mpfr_set_si(r.hi_, v, MPFR_RNDU);
  return r;
}

Interval Interval::from_double(double v, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set_d(r.lo_, v, MPFR_RNDD);
  mpfr_set_d(r.hi_, v, MPFR_RNDU);
  return r;
}

Interval Interval::from_mpz(const mpz_class& v, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set_z(r.lo_, v.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(r.hi_, v.get_mpz_t(), MPFR_RNDU);
  return r;
}

Interval Interval::from_mpq(const mpq_class& v, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set_q(r.lo_, v.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_, v.get_mpq_t(), MPFR_RNDU);
  return r;
}

Interval Interval::from_endpoints(mpfr_srcptr lo, mpfr_srcptr hi,
                                  mpfr_prec_t prec) {
  Interval r(prec);
  r.set_from_pair(lo, hi);
  return r;
}

Interval Interval::from_decimal(const std::string& text, mpfr_prec_t prec) {
  return hull(text, text, prec);
}

Interval Interval::hull(const std::string& lo, const std::string& hi,
                        mpfr_prec_t prec) {
  Interval r(prec);
  if (mpfr_set_str(r.lo_, lo.c_str(), 10, MPFR_RNDD) != 0 &&
      !mpfr_number_p(r.lo_)) {
    throw DomainError("bad decimal literal: " + lo);
  }
  if (mpfr_set_str(r.hi_, hi.c_str(), 10, MPFR_RNDU) != 0 &&
      !mpfr_number_p(r.hi_)) {
    throw DomainError("bad decimal literal: " + hi);
  }
  if (mpfr_cmp(r.lo_, r.hi_) > 0) throw DomainError("empty interval");
  return r;
}

void Interval::set_from_pair(mpfr_srcptr lo, mpfr_srcptr hi) {
  mpfr_set(lo_, lo, MPFR_RNDD);
  mpfr_set(hi_, hi, MPFR_RNDU);
}

double Interval::lower() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double Interval::upper() const { return mpfr_get_d(hi_, MPFR_RNDU); }

double Interval::mid() const {
  Scratch m(prec_ + 1);
  mpfr_add(m.v, lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(m.v, m.v, 1, MPFR_RNDN);
  return mpfr_get_d(m.v, MPFR_RNDN);
}

double Interval::width() const {
  Scratch w(prec_);
  mpfr_sub(w.v, hi_, lo_, MPFR_RNDU);
  return mpfr_get_d(w.v, MPFR_RNDU);
}

bool Interval::is_point() const { return mpfr_equal_p(lo_, hi_) != 0; }

bool Interval::contains(double v) const {
  return mpfr_cmp_d(lo_, v) <= 0 && mpfr_cmp_d(hi_, v) >= 0;
}

bool Interval::contains(const Interval& inner) const {
  return mpfr_cmp(lo_, inner.lo_) <= 0 && mpfr_cmp(hi_, inner.hi_) >= 0;
}

bool Interval::certainly_positive() const { return mpfr_sgn(lo_) > 0; }
bool Interval::certainly_negative() const { return mpfr_sgn(hi_) < 0; }
bool Interval::certainly_nonnegative() const { return mpfr_sgn(lo_) >= 0; }

std::optional<std::weak_ordering> Interval::compare(const Interval& other) const {
  if (mpfr_cmp(hi_, other.lo_) < 0) return std::weak_ordering::less;
  if (mpfr_cmp(lo_, other.hi_) > 0) return std::weak_ordering::greater;
  if (is_point() && other.is_point()) return std::weak_ordering::equivalent;
  return std::nullopt;
}

std::string Interval::str(int digits) const {
  char* a = nullptr;
  char* b = nullptr;
  mpfr_asprintf(&a, "%.*RDg", digits, lo_);
  mpfr_asprintf(&b, "%.*RUg", digits, hi_);
  std::string s = std::string("[") + a + ", " + b + "]";
  mpfr_free_str(a);
  mpfr_free_str(b);
  return s;
}

Interval Interval::widened(double abs_err) const {
  Interval r(*this);
  mpfr_sub_d(r.lo_, r.lo_, abs_err, MPFR_RNDD);
  mpfr_add_d(r.hi_, r.hi_, abs_err, MPFR_RNDU);
  return r;
}

Interval operator+(const Interval& a, const Interval& b) {
  Interval r(std::max(a.prec_, b.prec_));
  mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Interval operator-(const Interval& a, const Interval& b) {
  Interval r(std::max(a.prec_, b.prec_));
  mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
  return r;
}

Interval operator-(const Interval& a) {
  Interval r(a.prec_);
  mpfr_neg(r.lo_, a.hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, a.lo_, MPFR_RNDU);
  return r;
}

Interval operator*(const Interval& a, const Interval& b) {
  const mpfr_prec_t p = std::max(a.prec_, b.prec_);
  Interval r(p);
  if (mpfr_sgn(a.lo_) >= 0 && mpfr_sgn(b.lo_) >= 0) {
    mpfr_mul(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_mul(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
  }
  mpfr_srcptr al[2] = {a.lo_, a.hi_};
  mpfr_srcptr bl[2] = {b.lo_, b.hi_};
  Scratch t(p);
  bool first = true;
  for (auto x : al) {
    for (auto y : bl) {
      mpfr_mul(t.v, x, y, MPFR_RNDD);
      if (first || mpfr_cmp(t.v, r.lo_) < 0) mpfr_set(r.lo_, t.v, MPFR_RNDD);
      mpfr_mul(t.v, x, y, MPFR_RNDU);
      if (first || mpfr_cmp(t.v, r.hi_) > 0) mpfr_set(r.hi_, t.v, MPFR_RNDU);
      first = false;
    }
  }
  return r;
}

Interval operator/(const Interval& a, const Interval& b) {
  if (mpfr_sgn(b.lo_) <= 0 && mpfr_sgn(b.hi_) >= 0) {
    throw DomainError("interval division by an interval containing zero");
  }
  const mpfr_prec_t p = std::max(a.prec_, b.prec_);
  Interval r(p);
  mpfr_srcptr al[2] = {a.lo_, a.hi_};
  mpfr_srcptr bl[2] = {b.lo_, b.hi_};
  Scratch t(p);
  bool first = true;
  for (auto x : al) {
    for (auto y : bl) {
      mpfr_div(t.v, x, y, MPFR_RNDD);
      if (first || mpfr_cmp(t.v, r.lo_) < 0) mpfr_set(r.lo_, t.v, MPFR_RNDD);
      mpfr_div(t.v, x, y, MPFR_RNDU);
      if (first || mpfr_cmp(t.v, r.hi_) > 0) mpfr_set(r.hi_, t.v, MPFR_RNDU);
      first = false;
    }
  }
  return r;
}

Interval operator+(const Interval& a, long b) {
  return a + Interval::from_long(b, a.precision());
}
Interval operator*(const Interval& a, long b) {
  return a * Interval::from_long(b, a.precision());
}
Interval operator*(long a, const Interval& b) { return b * a; }

Interval log(const Interval& a) {
  if (mpfr_sgn(a.lo_) <= 0) throw DomainError("log of a non-positive interval");
  Interval r(a.prec_);
  mpfr_log(r.lo_, a.lo_, MPFR_RNDD);
  mpfr_log(r.hi_, a.hi_, MPFR_RNDU);
  return r;
}

Interval log1p(const Interval& a) {
  if (mpfr_cmp_si(a.lo_, -1) <= 0) throw DomainError("log1p argument <= -1");
  Interval r(a.prec_);
  mpfr_log1p(r.lo_, a.lo_, MPFR_RNDD);
  mpfr_log1p(r.hi_, a.hi_, MPFR_RNDU);
  return r;
}

Interval exp(const Interval& a) {
  Interval r(a.prec_);
  mpfr_exp(r.lo_, a.lo_, MPFR_RNDD);
  mpfr_exp(r.hi_, a.hi_, MPFR_RNDU);
  return r;
}

Interval sqrt(const Interval& a) {
  if (mpfr_sgn(a.lo_) < 0) throw DomainError("sqrt of a negative interval");
  Interval r(a.prec_);
  mpfr_sqrt(r.lo_, a.lo_, MPFR_RNDD);
  mpfr_sqrt(r.hi_, a.hi_, MPFR_RNDU);
  return r;
}

Interval euler_gamma(mpfr_prec_t prec) {
  static std::once_flag validated;
  std::call_once(validated, [] {
    Interval builtin(256);
    mpfr_t lo, hi;
    mpfr_inits2(256, lo, hi, static_cast<mpfr_ptr>(nullptr));
    mpfr_const_euler(lo, MPFR_RNDD);
    mpfr_const_euler(hi, MPFR_RNDU);
    Interval lit = Interval::from_decimal(kGammaLiteral, 256);
    Interval slack = Interval::from_decimal(kGammaLiteralSlack, 256);
    Interval lit_lo = lit - slack;
    Interval lit_hi = lit + slack;
    const bool ok = mpfr_cmp(lo, lit_lo.lo()) >= 0 && mpfr_cmp(hi, lit_hi.hi()) <= 0;
    mpfr_clears(lo, hi, static_cast<mpfr_ptr>(nullptr));
    if (!ok) throw DomainError("Euler gamma self-check failed");
  });
  Scratch lo(prec);
  Scratch hi(prec);
  mpfr_const_euler(lo.v, MPFR_RNDD);
  mpfr_const_euler(hi.v, MPFR_RNDU);
  return Interval::from_endpoints(lo.v, hi.v, prec);
}

Interval exp_gamma(mpfr_prec_t prec) { return exp(euler_gamma(prec)); }

Interval robin_constant(mpfr_prec_t prec) {
  const Interval ll12 = log(log(Interval::from_long(12, prec)));
  const Interval seven_thirds =
      Interval::from_mpq(mpq_class(7, 3), prec);
  return (seven_thirds - exp_gamma(prec) * ll12) * ll12;
}

Interval pi_interval(mpfr_prec_t prec) {
  Scratch lo(prec);
  Scratch hi(prec);
  mpfr_const_pi(lo.v, MPFR_RNDD);
  mpfr_const_pi(hi.v, MPFR_RNDU);
  return Interval::from_endpoints(lo.v, hi.v, prec);
}

Constants constants(mpfr_prec_t prec) {
  return Constants{euler_gamma(prec), exp_gamma(prec), robin_constant(prec)};
}

namespace {

// Round `x` to `sig` significant decimal digits, returned in %g-like form.
std::string round_sig(mpfr_srcptr x, int sig) {
  char* s = nullptr;
  mpfr_asprintf(&s, "%.*RNg", sig, x);
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

std::string fixed_sig(mpfr_srcptr x, int sig) {
  // Fixed notation keeping `sig` significant digits (trailing zeros kept).
  if (mpfr_zero_p(x)) return "0";
  char* s = nullptr;
  mpfr_asprintf(&s, "%.*RNe", sig - 1, x);
  std::string sci(s);
  mpfr_free_str(s);
  const auto epos = sci.find('e');
  const int exp10 = std::stoi(sci.substr(epos + 1));
  const int decimals = std::max(0, sig - 1 - exp10);
  mpfr_asprintf(&s, "%.*RNf", decimals, x);
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

}  // namespace

std::string certified_digits(const Interval& v, int max_sig) {
  for (int sig = max_sig; sig >= 1; --sig) {
    if (round_sig(v.lo(), sig) != round_sig(v.hi(), sig)) continue;
    std::string a = fixed_sig(v.lo(), sig);
    if (a == fixed_sig(v.hi(), sig)) return a;
  }
  return {};
}

}  // namespace abundant
