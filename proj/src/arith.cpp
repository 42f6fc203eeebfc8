#include "gwm/arith.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace gwm {

Rat rat(long num, long den) {
  if (den == 0) throw DivisionByZero("rat: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat rat_parse(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      Rat r(s);
      r.canonicalize();
      return r;
    }
    Rat r(s.substr(0, slash) + "/" + s.substr(slash + 1));
    if (Int(r.get_den()) == 0) throw DivisionByZero("rat_parse: zero denominator");
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw DomainError("rat_parse: bad rational literal '" + s + "'");
  }
}

std::string rat_str(const Rat& r) { return r.get_str(); }

Int int_pow(const Int& base, unsigned long e) {
  Int out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

Rat rat_pow(const Rat& base, long e) {
  if (e == 0) return 1;
  if (base == 0) {
    if (e < 0) throw DivisionByZero("rat_pow: 0 to a negative power");
    return 0;
  }
  unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
  Rat out(int_pow(base.get_num(), a), int_pow(base.get_den(), a));
  out.canonicalize();
  if (e < 0) out = 1 / out;
  return out;
}

Int factorial(unsigned long n) {
  Int out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

Int double_factorial(long n) {
  if (n < -1) throw DomainError("double_factorial: argument below -1");
  if (n <= 0) return 1;
  Int out;
  mpz_2fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

Int binomial(unsigned long n, unsigned long k) {
  Int out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

// ---------------------------------------------------------------- Poly

Poly::Poly(const Rat& c) {
  if (c != 0) c_.push_back(c);
}

Poly::Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::X() { return monomial(1, 1); }

Poly Poly::monomial(const Rat& c, int k) {
  if (k < 0) throw DomainError("Poly::monomial: negative exponent");
  if (c == 0) return Poly();
  std::vector<Rat> v(static_cast<size_t>(k) + 1, Rat(0));
  v.back() = c;
  return Poly(std::move(v));
}

Poly Poly::from_roots(const std::vector<Rat>& roots) {
  Poly p{Rat(1)};
  for (const Rat& r : roots) p = p * Poly({-r, Rat(1)});
  return p;
}

Rat Poly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<size_t>(k)];
}

const Rat& Poly::lead() const {
  if (c_.empty()) throw DomainError("Poly::lead: zero polynomial");
  return c_.back();
}

Poly& Poly::operator+=(const Poly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly Poly::operator+(const Poly& o) const {
  Poly out = *this;
  out += o;
  return out;
}

Poly Poly::operator-(const Poly& o) const {
  Poly out = *this;
  out -= o;
  return out;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (Rat& c : out.c_) c = -c;
  return out;
}

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly();
  std::vector<Rat> out(c_.size() + o.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
  }
  return Poly(std::move(out));
}

Poly Poly::operator*(const Rat& s) const {
  if (s == 0) return Poly();
  Poly out = *this;
  for (Rat& c : out.c_) c *= s;
  return out;
}

Poly Poly::operator/(const Rat& s) const {
  if (s == 0) throw DivisionByZero("Poly / 0");
  return *this * (1 / s);
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<Rat> out(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * Rat(static_cast<long>(i));
  return Poly(std::move(out));
}

Rat Poly::eval(const Rat& x) const {
  Rat acc = 0;
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

Poly Poly::shifted_arg(const Rat& a) const {
  Poly acc;
  Poly lin({a, Rat(1)});
  for (size_t i = c_.size(); i-- > 0;) acc = acc * lin + Poly(c_[i]);
  return acc;
}

Poly Poly::neg_arg() const {
  Poly out = *this;
  for (size_t i = 1; i < out.c_.size(); i += 2) out.c_[i] = -out.c_[i];
  return out;
}

Poly Poly::times_xk(int k) const {
  if (k < 0) throw DomainError("Poly::times_xk: negative shift");
  if (is_zero() || k == 0) return *this;
  std::vector<Rat> out(static_cast<size_t>(k), Rat(0));
  out.insert(out.end(), c_.begin(), c_.end());
  return Poly(std::move(out));
}

Poly Poly::pow(unsigned e) const {
  Poly out{Rat(1)};
  Poly base = *this;
  while (e) {
    if (e & 1u) out = out * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return out;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return *this / lead();
}

void Poly::divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
  if (b.is_zero()) throw DivisionByZero("Poly::divmod: zero divisor");
  q = Poly();
  r = a;
  const Rat& bl = b.lead();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    int k = r.degree() - b.degree();
    Rat c = r.lead() / bl;
    Poly t = Poly::monomial(c, k);
    q += t;
    r -= t * b;
  }
}

Poly Poly::gcd(const Poly& a, const Poly& b) {
  Poly r0 = a, r1 = b, q, r;
  while (!r1.is_zero()) {
    divmod(r0, r1, q, r);
    r0 = std::move(r1);
    r1 = std::move(r);
  }
  return r0.monic();
}

int Poly::valuation() const {
  if (is_zero()) throw DomainError("Poly::valuation: zero polynomial");
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return static_cast<int>(i);
  throw DomainError("Poly::valuation: zero polynomial");
}

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = c_.size(); i-- > 0;) {
    const Rat& c = c_[i];
    if (c == 0) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    Rat a = first ? c : Rat(abs(c));
    first = false;
    if (i == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

// ------------------------------------------------------------- RatFunc

RatFunc::RatFunc() : num_(), den_(Rat(1)) {}

RatFunc::RatFunc(const Rat& c) : num_(c), den_(Rat(1)) {}

RatFunc::RatFunc(Poly num) : num_(std::move(num)), den_(Rat(1)) {}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

void RatFunc::normalize() {
  if (den_.is_zero()) throw DivisionByZero("RatFunc: zero denominator");
  if (num_.is_zero()) {
    den_ = Poly(Rat(1));
    return;
  }
  Poly g = Poly::gcd(num_, den_);
  if (g.degree() > 0) {
    Poly q, r;
    Poly::divmod(num_, g, q, r);
    num_ = std::move(q);
    Poly::divmod(den_, g, q, r);
    den_ = std::move(q);
  }
  Rat dl = den_.lead();
  if (dl != 1) {
    den_ = den_ / dl;
    num_ = num_ / dl;
  }
}

bool RatFunc::den_is_power_of_var() const {
  for (int k = 0; k < den_.degree(); ++k)
    if (den_.coeff(k) != 0) return false;
  return true;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  *this = *this + o;
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) {
  *this = *this - o;
  return *this;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-() const {
  RatFunc out = *this;
  out.num_ = -out.num_;
  return out;
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
  return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.is_zero()) throw DivisionByZero("RatFunc / 0");
  return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::operator*(const Rat& s) const {
  if (s == 0) return RatFunc();
  RatFunc out = *this;
  out.num_ = out.num_ * s;
  return out;
}

RatFunc RatFunc::operator/(const Rat& s) const {
  if (s == 0) throw DivisionByZero("RatFunc / 0");
  return *this * (1 / s);
}

bool RatFunc::operator==(const RatFunc& o) const {
  return num_ == o.num_ && den_ == o.den_;
}

RatFunc RatFunc::shifted_arg(const Rat& a) const {
  return RatFunc(num_.shifted_arg(a), den_.shifted_arg(a));
}

RatFunc RatFunc::neg_arg() const {
  return RatFunc(num_.neg_arg(), den_.neg_arg());
}

Rat RatFunc::eval(const Rat& x) const {
  Rat d = den_.eval(x);
  if (d == 0) throw PoleError("RatFunc::eval: pole at " + rat_str(x));
  return num_.eval(x) / d;
}

int RatFunc::pole_order_at_zero() const {
  if (is_zero() || den_.coeff(0) != 0) return 0;
  int vd = den_.valuation();
  int vn = num_.valuation();
  return vd > vn ? vd - vn : 0;  // vn < vd always holds after normalization
}

std::vector<Rat> RatFunc::laurent_at_zero(int lo, int hi) const {
  if (hi < lo) throw DomainError("laurent_at_zero: empty window");
  int p = pole_order_at_zero();
  if (p > -lo)
    throw PoleError("laurent_at_zero: pole order " + std::to_string(p) +
                    " exceeds window floor " + std::to_string(lo));
  std::vector<Rat> out;
  out.reserve(static_cast<size_t>(hi - lo + 1));
  if (is_zero()) {
    out.assign(static_cast<size_t>(hi - lo + 1), Rat(0));
    return out;
  }
  // Write den = x^vd * d0 with d0(0) != 0; expand num / d0 and shift by vd.
  int vd = den_.coeff(0) != 0 ? 0 : den_.valuation();
  std::vector<Rat> d0(static_cast<size_t>(den_.degree() - vd) + 1);
  for (size_t i = 0; i < d0.size(); ++i) d0[i] = den_.coeff(static_cast<int>(i) + vd);
  int need = hi + vd;  // expand num/d0 through x^need
  std::vector<Rat> ser(static_cast<size_t>(std::max(need, 0)) + 1, Rat(0));
  for (int k = 0; k <= need; ++k) {
    Rat acc = num_.coeff(k);
    for (int j = 1; j <= k && j <= static_cast<int>(d0.size()) - 1; ++j)
      acc -= d0[static_cast<size_t>(j)] * ser[static_cast<size_t>(k - j)];
    ser[static_cast<size_t>(k)] = acc / d0[0];
  }
  for (int e = lo; e <= hi; ++e) {
    int k = e + vd;
    out.push_back(k >= 0 && k <= need ? ser[static_cast<size_t>(k)] : Rat(0));
  }
  return out;
}

Rat RatFunc::laurent_coeff_at_zero(int k) const {
  if (is_zero()) return 0;
  int p = pole_order_at_zero();
  if (k < -p) return 0;
  return laurent_at_zero(-p, k).back();
}

Rat RatFunc::residue_at(const Rat& p) const {
  if (den_.eval(p) != 0) return 0;
  return shifted_arg(p).laurent_coeff_at_zero(-1);
}

Rat RatFunc::residue_at_infinity() const {
  if (is_zero()) return 0;
  // res_inf f = -res_0 [u^-2 f(1/u)]; f(1/u) = u^(dd-dn) rev(num)/rev(den).
  int dn = num_.degree(), dd = den_.degree();
  std::vector<Rat> rn(static_cast<size_t>(dn) + 1), rd(static_cast<size_t>(dd) + 1);
  for (int i = 0; i <= dn; ++i) rn[static_cast<size_t>(i)] = num_.coeff(dn - i);
  for (int i = 0; i <= dd; ++i) rd[static_cast<size_t>(i)] = den_.coeff(dd - i);
  RatFunc g(Poly(std::move(rn)), Poly(std::move(rd)));
  return -g.laurent_coeff_at_zero(dn - dd + 1);
}

std::string RatFunc::str(const std::string& var) const {
  if (is_polynomial()) return num_.str(var);
  return "(" + num_.str(var) + ") / (" + den_.str(var) + ")";
}

// ------------------------------------------------------------- Laurent

Laurent::Laurent(const Rat& c) : lo_(0), p_(c) {}

Laurent::Laurent(int lo, Poly p) : lo_(lo), p_(std::move(p)) { normalize(); }

void Laurent::normalize() {
  if (p_.is_zero()) {
    lo_ = 0;
    return;
  }
  int v = p_.coeff(0) != 0 ? 0 : p_.valuation();
  if (v > 0) {
    std::vector<Rat> c(p_.coeffs().begin() + v, p_.coeffs().end());
    p_ = Poly(std::move(c));
    lo_ += v;
  }
}

Laurent Laurent::monomial(const Rat& c, int k) {
  return Laurent(k, Poly(c));
}

Rat Laurent::coeff(int k) const { return p_.coeff(k - lo_); }

Laurent Laurent::operator+(const Laurent& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  int lo = std::min(lo_, o.lo_);
  return Laurent(lo, p_.times_xk(lo_ - lo) + o.p_.times_xk(o.lo_ - lo));
}

Laurent Laurent::operator-(const Laurent& o) const { return *this + (-o); }

Laurent Laurent::operator-() const { return Laurent(lo_, -p_); }

Laurent Laurent::operator*(const Laurent& o) const {
  if (is_zero() || o.is_zero()) return Laurent();
  return Laurent(lo_ + o.lo_, p_ * o.p_);
}

Laurent Laurent::operator*(const Rat& s) const { return Laurent(lo_, p_ * s); }

Laurent Laurent::times_xk(int k) const {
  if (is_zero()) return *this;
  return Laurent(lo_ + k, p_);
}

Laurent Laurent::neg_arg() const {
  if (is_zero()) return *this;
  Poly q = p_.neg_arg();
  if (lo_ % 2 != 0) q = q * Rat(-1);
  return Laurent(lo_, q);
}

Laurent Laurent::truncated_above(int hi) const {
  if (is_zero() || max_exp() <= hi) return *this;
  if (lo_ > hi) return Laurent();
  std::vector<Rat> c(p_.coeffs().begin(), p_.coeffs().begin() + (hi - lo_ + 1));
  return Laurent(lo_, Poly(std::move(c)));
}

Poly Laurent::regular_part() const {
  if (is_zero()) return Poly();
  if (lo_ >= 0) return p_.times_xk(lo_);
  if (max_exp() < 0) return Poly();
  std::vector<Rat> c(p_.coeffs().begin() - lo_, p_.coeffs().end());
  return Poly(std::move(c));
}

Laurent Laurent::principal_part() const {
  if (is_zero() || lo_ >= 0) return Laurent();
  return truncated_above(-1);
}

RatFunc Laurent::as_ratfunc() const {
  if (is_zero()) return RatFunc();
  if (lo_ >= 0) return RatFunc(p_.times_xk(lo_));
  return RatFunc(p_, Poly::monomial(1, -lo_));
}

Rat Laurent::eval(const Rat& x) const {
  if (is_zero()) return 0;
  if (lo_ >= 0) return p_.eval(x) * rat_pow(x, lo_);
  if (x == 0) throw PoleError("Laurent::eval: pole at 0");
  return p_.eval(x) * rat_pow(x, lo_);
}

std::string Laurent::str(const std::string& var) const {
  if (is_zero()) return "0";
  if (lo_ == 0) return p_.str(var);
  std::ostringstream os;
  os << var << "^(" << lo_ << ") * (" << p_.str(var) << ")";
  return os.str();
}

// ---------------------------------------------------------------- misc

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }
std::ostream& operator<<(std::ostream& os, const RatFunc& f) { return os << f.str(); }
std::ostream& operator<<(std::ostream& os, const Laurent& l) { return os << l.str(); }

std::vector<Rat> esym(const std::vector<Rat>& vals) {
  std::vector<Rat> e(vals.size() + 1, Rat(0));
  e[0] = 1;
  size_t used = 0;
  for (const Rat& v : vals) {
    ++used;
    for (size_t r = used; r >= 1; --r) e[r] += v * e[r - 1];
  }
  return e;
}

}  // namespace gwm
