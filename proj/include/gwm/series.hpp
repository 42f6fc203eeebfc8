#pragma once

#include <utility>
#include <vector>

#include "gwm/arith.hpp"

namespace gwm {

// Truncated power series over a commutative coefficient ring R.
//
// Exponent k represents u^k where u^grading_den is the distinguished
// variable; grading_den = 1 for ordinary q-series, 2 when half powers of Q
// are in play. The logarithmic derivative D = Q d/dQ therefore scales
// coefficient k by k / grading_den. Arithmetic between series of different
// orders truncates to the smaller order; grading denominators must agree.
template <class R>
class Series {
 public:
  explicit Series(int order, int grading_den = 1)
      : order_(order), gden_(grading_den),
        c_(static_cast<size_t>(order) + 1, R{}) {
    if (order < 0 || grading_den < 1) throw DomainError("Series: bad shape");
  }

  static Series constant(const R& c, int order, int grading_den = 1) {
    Series s(order, grading_den);
    s.c_[0] = c;
    return s;
  }

  // The expansion variable u itself.
  static Series var(int order, int grading_den = 1) {
    Series s(order, grading_den);
    if (order >= 1) s.c_[1] = R{Rat(1)};
    return s;
  }

  int order() const { return order_; }
  int grading_den() const { return gden_; }

  R coeff(int k) const {
    if (k < 0 || k > order_) return R{};
    return c_[static_cast<size_t>(k)];
  }
  const R& operator[](int k) const { return c_[at(k)]; }
  void set_coeff(int k, R v) { c_[at(k)] = std::move(v); }

  bool is_zero() const {
    for (const R& c : c_)
      if (!(c == R{})) return false;
    return true;
  }

  bool agrees_with(const Series& o, int through) const {
    if (gden_ != o.gden_) return false;
    for (int k = 0; k <= through; ++k)
      if (!(coeff(k) == o.coeff(k))) return false;
    return true;
  }
  bool operator==(const Series& o) const {
    return gden_ == o.gden_ && agrees_with(o, std::max(order_, o.order_));
  }
  bool operator!=(const Series& o) const { return !(*this == o); }

  Series truncated(int new_order) const {
    Series s(std::min(new_order, order_), gden_);
    for (int k = 0; k <= s.order_; ++k) s.c_[static_cast<size_t>(k)] = coeff(k);
    return s;
  }

  Series operator+(const Series& o) const {
    Series s = meet(o);
    for (int k = 0; k <= s.order_; ++k)
      s.c_[static_cast<size_t>(k)] = coeff(k) + o.coeff(k);
    return s;
  }
  Series operator-(const Series& o) const {
    Series s = meet(o);
    for (int k = 0; k <= s.order_; ++k)
      s.c_[static_cast<size_t>(k)] = coeff(k) - o.coeff(k);
    return s;
  }
  Series operator-() const {
    Series s = *this;
    for (R& c : s.c_) c = -c;
    return s;
  }

  Series operator*(const Series& o) const {
    Series s = meet(o);
    for (int k = 0; k <= s.order_; ++k) {
      R acc{};
      for (int j = 0; j <= k; ++j) acc = acc + coeff(j) * o.coeff(k - j);
      s.c_[static_cast<size_t>(k)] = acc;
    }
    return s;
  }

  Series operator*(const Rat& t) const {
    Series s = *this;
    for (R& c : s.c_) c = c * t;
    return s;
  }
  Series operator/(const Rat& t) const {
    if (t == 0) throw DivisionByZero("Series / 0");
    return *this * (1 / t);
  }
  Series scaled(const R& t) const {
    Series s = *this;
    for (R& c : s.c_) c = c * t;
    return s;
  }

  // Product with a series of plain rational coefficients.
  Series times_scalar_series(const Series<Rat>& o) const {
    require_same_grading(gden_, o.grading_den());
    Series s(std::min(order_, o.order()), gden_);
    for (int k = 0; k <= s.order_; ++k) {
      R acc{};
      for (int j = 0; j <= k; ++j) acc = acc + coeff(j) * o.coeff(k - j);
      s.c_[static_cast<size_t>(k)] = acc;
    }
    return s;
  }
  Series div_scalar_series(const Series<Rat>& o) const {
    return times_scalar_series(o.inverted());
  }

  // Multiplication by u^k; k < 0 requires the low coefficients to vanish.
  Series shifted(int k) const {
    Series s(order_, gden_);
    if (k >= 0) {
      for (int j = order_; j >= k; --j) s.c_[static_cast<size_t>(j)] = coeff(j - k);
    } else {
      if (order_ + k < 0) throw DomainError("Series::shifted: shift exceeds order");
      for (int j = 0; j < -k; ++j)
        if (!(coeff(j) == R{}))
          throw DomainError("Series::shifted: would create negative exponents");
      s.order_ = order_ + k;
      s.c_.resize(static_cast<size_t>(s.order_) + 1);
      for (int j = 0; j <= s.order_; ++j) s.c_[static_cast<size_t>(j)] = coeff(j - k);
    }
    return s;
  }

  // Q d/dQ respecting the grading.
  Series logderiv() const {
    Series s = *this;
    for (int k = 0; k <= order_; ++k)
      s.c_[static_cast<size_t>(k)] = s.c_[static_cast<size_t>(k)] * Rat(k, gden_);
    return s;
  }
  // Right inverse of logderiv; the constant term must vanish.
  Series antiderivative_log() const {
    if (!(coeff(0) == R{}))
      throw DomainError("Series::antiderivative_log: nonzero constant term");
    Series s = *this;
    for (int k = 1; k <= order_; ++k)
      s.c_[static_cast<size_t>(k)] = s.c_[static_cast<size_t>(k)] * Rat(gden_, k);
    return s;
  }

  // Multiplicative inverse; the constant term must be invertible in R.
  Series inverted() const {
    R c0 = coeff(0);
    if (c0 == R{}) throw DivisionByZero("Series::inverted: zero constant term");
    Series s(order_, gden_);
    R i0 = R{Rat(1)} / c0;
    s.c_[0] = i0;
    for (int k = 1; k <= order_; ++k) {
      R acc{};
      for (int j = 1; j <= k; ++j) acc = acc + coeff(j) * s.c_[static_cast<size_t>(k - j)];
      s.c_[static_cast<size_t>(k)] = -(acc * i0);
    }
    return s;
  }
  Series operator/(const Series& o) const { return *this * o.inverted(); }

  // exp of a series with zero constant term.
  Series exponential() const {
    if (!(coeff(0) == R{}))
      throw DomainError("Series::exponential: nonzero constant term");
    Series s(order_, gden_);
    s.c_[0] = R{Rat(1)};
    for (int k = 1; k <= order_; ++k) {
      R acc{};
      for (int j = 1; j <= k; ++j)
        acc = acc + coeff(j) * Rat(j) * s.c_[static_cast<size_t>(k - j)];
      s.c_[static_cast<size_t>(k)] = acc * Rat(1, k);
    }
    return s;
  }

  // log of a series with constant term 1.
  Series logarithm() const {
    if (!(coeff(0) == R{Rat(1)}))
      throw DomainError("Series::logarithm: constant term is not 1");
    Series s(order_, gden_);
    for (int k = 1; k <= order_; ++k) {
      R acc = coeff(k) * Rat(k);
      for (int j = 1; j < k; ++j)
        acc = acc - s.c_[static_cast<size_t>(j)] * Rat(j) * coeff(k - j);
      s.c_[static_cast<size_t>(k)] = acc * Rat(1, k);
    }
    return s;
  }

  // f^e for rational e; requires constant term 1.
  Series power(const Rat& e) const { return (logarithm() * e).exponential(); }

  // f(inner) for inner with zero constant term and rational coefficients.
  Series composed(const Series<Rat>& inner) const {
    if (inner.coeff(0) != 0)
      throw DomainError("Series::composed: inner constant term nonzero");
    int ord = std::min(order_, inner.order());
    Series acc(ord, inner.grading_den());
    for (int k = ord; k >= 0; --k) {
      acc = acc.times_scalar_series(inner);
      acc.c_[0] = acc.c_[0] + coeff(k);
    }
    return acc;
  }

  template <class F>
  auto mapped(F&& fn) const -> Series<decltype(fn(std::declval<const R&>()))> {
    using S = decltype(fn(std::declval<const R&>()));
    Series<S> out(order_, gden_);
    for (int k = 0; k <= order_; ++k) out.set_coeff(k, fn(c_[static_cast<size_t>(k)]));
    return out;
  }

 private:
  int order_;
  int gden_;
  std::vector<R> c_;

  size_t at(int k) const {
    if (k < 0 || k > order_) throw DomainError("Series: index out of range");
    return static_cast<size_t>(k);
  }
  Series meet(const Series& o) const {
    require_same_grading(gden_, o.gden_);
    return Series(std::min(order_, o.order_), gden_);
  }
  static void require_same_grading(int a, int b) {
    if (a != b) throw DomainError("Series: grading mismatch");
  }
};

template <class R>
Series<R> operator*(const Rat& t, const Series<R>& s) { return s * t; }

using QSeries = Series<Rat>;

// Compositional inverse: g(0) = 0, g'(0) != 0. Returns h with g(h(u)) = u.
inline QSeries reverted(const QSeries& g) {
  if (g.coeff(0) != 0) throw DomainError("reverted: nonzero constant term");
  if (g.order() < 1 || g.coeff(1) == 0)
    throw DomainError("reverted: linear coefficient not invertible");
  const int n = g.order();
  const Rat c = g.coeff(1);
  QSeries gu = g / c;  // unit linear coefficient
  QSeries h(n, g.grading_den());
  h.set_coeff(1, 1);
  for (int k = 2; k <= n; ++k) {
    QSeries err = gu.composed(h);
    h.set_coeff(k, -err.coeff(k));
  }
  // g = c * gu, so the inverse is h(u/c): scale coefficient k by c^-k.
  for (int k = 1; k <= n; ++k) h.set_coeff(k, h.coeff(k) * rat_pow(c, -k));
  return h;
}

}  // namespace gwm
