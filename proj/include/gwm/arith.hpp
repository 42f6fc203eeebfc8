#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace gwm {

using Int = mpz_class;
using Rat = mpq_class;

struct CalcError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// Zero denominator / division by an identically zero object.
struct DivisionByZero : CalcError {
  using CalcError::CalcError;
};
// Evaluation or expansion hit a pole it may not silently truncate.
struct PoleError : CalcError {
  using CalcError::CalcError;
};
// Violated precondition (bad index range, wrong constant term, ...).
struct DomainError : CalcError {
  using CalcError::CalcError;
};
// Torus weights degenerate for the requested computation; caller should re-draw.
struct DegenerateWeights : CalcError {
  using CalcError::CalcError;
};

Rat rat(long num, long den = 1);
Rat rat_parse(const std::string& s);
std::string rat_str(const Rat& r);  // "p/q", or "p" when q = 1

Int int_pow(const Int& base, unsigned long e);
Rat rat_pow(const Rat& base, long e);  // e < 0 requires base != 0
Int factorial(unsigned long n);
Int double_factorial(long n);  // n!!, with (-1)!! = 0!! = 1
Int binomial(unsigned long n, unsigned long k);

// Dense univariate polynomial over the rationals.
class Poly {
 public:
  Poly() = default;
  explicit Poly(const Rat& c);
  explicit Poly(std::vector<Rat> coeffs);

  static Poly X();
  static Poly monomial(const Rat& c, int k);
  static Poly from_roots(const std::vector<Rat>& roots);  // prod (x - r)

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 if zero
  bool is_zero() const { return c_.empty(); }
  Rat coeff(int k) const;
  const Rat& lead() const;
  const std::vector<Rat>& coeffs() const { return c_; }

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rat& s) const;
  Poly operator/(const Rat& s) const;
  bool operator==(const Poly& o) const { return c_ == o.c_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly derivative() const;
  Rat eval(const Rat& x) const;
  Poly shifted_arg(const Rat& a) const;  // p(x + a)
  Poly neg_arg() const;                  // p(-x)
  Poly times_xk(int k) const;            // k >= 0
  Poly pow(unsigned e) const;
  Poly monic() const;

  // Quotient/remainder; b must be nonzero.
  static void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r);
  static Poly gcd(const Poly& a, const Poly& b);  // monic, gcd(0,0) = 0

  // Order of vanishing at 0; degree+1 convention avoided: zero poly throws.
  int valuation() const;

  std::string str(const std::string& var = "x") const;

 private:
  std::vector<Rat> c_;
  void trim();
};

inline Poly operator*(const Rat& s, const Poly& p) { return p * s; }

// Normalized rational function: monic denominator, gcd(num, den) = 1.
class RatFunc {
 public:
  RatFunc();  // zero
  RatFunc(const Rat& c);
  explicit RatFunc(Poly num);
  RatFunc(Poly num, Poly den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  // True when the denominator is x^k for some k >= 0 (Laurent polynomial).
  bool den_is_power_of_var() const;

  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator-() const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc operator*(const Rat& s) const;
  RatFunc operator/(const Rat& s) const;
  bool operator==(const RatFunc& o) const;
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

  RatFunc shifted_arg(const Rat& a) const;  // f(x + a)
  RatFunc neg_arg() const;                  // f(-x)
  Rat eval(const Rat& x) const;             // throws PoleError at a pole

  int pole_order_at_zero() const;  // 0 if regular at 0
  // Laurent coefficients of x^lo .. x^hi at 0. Throws PoleError if the pole
  // order exceeds -lo (a principal part would be silently dropped).
  std::vector<Rat> laurent_at_zero(int lo, int hi) const;
  Rat laurent_coeff_at_zero(int k) const;  // single coefficient, no window guard
  Rat residue_at(const Rat& p) const;      // 0 when p is not a pole
  Rat residue_at_infinity() const;

  std::string str(const std::string& var = "x") const;

 private:
  Poly num_, den_;
  void normalize();
};

inline RatFunc operator*(const Rat& s, const RatFunc& f) { return f * s; }

// Laurent polynomial: x^lo * p(x) with p(0) != 0 unless zero.
class Laurent {
 public:
  Laurent() = default;  // zero
  explicit Laurent(const Rat& c);
  Laurent(int lo, Poly p);
  static Laurent from_poly(Poly p) { return Laurent(0, std::move(p)); }
  static Laurent monomial(const Rat& c, int k);

  bool is_zero() const { return p_.is_zero(); }
  int min_exp() const { return lo_; }  // meaningless when zero
  int max_exp() const { return lo_ + p_.degree(); }
  Rat coeff(int k) const;

  Laurent operator+(const Laurent& o) const;
  Laurent operator-(const Laurent& o) const;
  Laurent operator-() const;
  Laurent operator*(const Laurent& o) const;
  Laurent operator*(const Rat& s) const;
  bool operator==(const Laurent& o) const { return lo_ == o.lo_ && p_ == o.p_; }
  bool operator!=(const Laurent& o) const { return !(*this == o); }

  Laurent times_xk(int k) const;
  Laurent neg_arg() const;  // l(-x)
  Laurent truncated_above(int hi) const;  // drop exponents > hi
  bool regular() const { return is_zero() || lo_ >= 0; }
  Poly regular_part() const;     // nonnegative-exponent part as a Poly
  Laurent principal_part() const;  // negative-exponent part
  RatFunc as_ratfunc() const;
  Rat eval(const Rat& x) const;  // x != 0 unless regular

  std::string str(const std::string& var = "x") const;

 private:
  int lo_ = 0;
  Poly p_;
  void normalize();
};

inline Laurent operator*(const Rat& s, const Laurent& l) { return l * s; }

// Elementary symmetric polynomials e_0..e_n of the given values.
std::vector<Rat> esym(const std::vector<Rat>& vals);

std::ostream& operator<<(std::ostream& os, const Poly& p);
std::ostream& operator<<(std::ostream& os, const RatFunc& f);
std::ostream& operator<<(std::ostream& os, const Laurent& l);

}  // namespace gwm
