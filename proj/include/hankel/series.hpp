#pragma once

#include <algorithm>
#include <cassert>
#include <cmath>
#include <complex>
#include <utility>
#include <vector>

#include "hankel/errors.hpp"

namespace hankel {

using Complex = std::complex<double>;

/// Threshold below which a constant term counts as zero. Constant terms of
/// every series divided or square-rooted here are >= 1/2, so this is far
/// below any legitimate value.
inline constexpr double kUnitTolerance = 1e-10;

/// Default truncation order: enough for a2..a5 plus guard terms.
inline constexpr int kDefaultOrder = 8;

/// Deformation parameter of the q-calculus, restricted to the open interval
/// (0,1). Values outside are rejected at construction.
class QParameter {
 public:
  explicit QParameter(double q) : value_(q) {
    if (!(q > 0.0) || !(q < 1.0))
      throw ConfigInvalid("q must lie strictly inside the interval (0,1)");
  }
  double value() const { return value_; }

 private:
  double value_;
};

/// [n]_q = 1 + q + ... + q^(n-1), the q-analog of the integer n.
inline double q_number(int n, QParameter q) {
  assert(n >= 1);
  double sum = 0.0, pw = 1.0;
  for (int k = 0; k < n; ++k) {
    sum += pw;
    pw *= q.value();
  }
  return sum;
}

/// A power series c0 + c1 z + ... + cN z^N known up to order N. All values
/// are immutable after construction; every operation returns a new series.
/// Binary operations truncate to the smaller of the two orders.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    assert(!coeffs_.empty());
  }

  static TruncatedSeries constant(Complex value, int order) {
    std::vector<Complex> c(static_cast<std::size_t>(order) + 1, Complex{0.0});
    c[0] = value;
    return TruncatedSeries(std::move(c));
  }

  static TruncatedSeries zero(int order) { return constant(Complex{0.0}, order); }

  /// z^k as a series of the given order (k <= order).
  static TruncatedSeries monomial(int k, int order) {
    assert(k <= order);
    std::vector<Complex> c(static_cast<std::size_t>(order) + 1, Complex{0.0});
    c[static_cast<std::size_t>(k)] = Complex{1.0};
    return TruncatedSeries(std::move(c));
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  Complex coeff(int k) const {
    assert(k >= 0 && k <= order());
    return coeffs_[static_cast<std::size_t>(k)];
  }
  const std::vector<Complex>& coeffs() const { return coeffs_; }

 private:
  std::vector<Complex> coeffs_;
};

/// Copy truncated (or zero-padded) to the requested order. Padding treats the
/// series as an exact polynomial.
inline TruncatedSeries resized(const TruncatedSeries& a, int order) {
  std::vector<Complex> c(static_cast<std::size_t>(order) + 1, Complex{0.0});
  const int n = std::min(order, a.order());
  for (int k = 0; k <= n; ++k) c[static_cast<std::size_t>(k)] = a.coeff(k);
  return TruncatedSeries(std::move(c));
}

inline TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int n = std::min(a.order(), b.order());
  std::vector<Complex> c(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) c[static_cast<std::size_t>(k)] = a.coeff(k) + b.coeff(k);
  return TruncatedSeries(std::move(c));
}

inline TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int n = std::min(a.order(), b.order());
  std::vector<Complex> c(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) c[static_cast<std::size_t>(k)] = a.coeff(k) - b.coeff(k);
  return TruncatedSeries(std::move(c));
}

inline TruncatedSeries operator*(const TruncatedSeries& a, Complex s) {
  std::vector<Complex> c(a.coeffs());
  for (auto& v : c) v *= s;
  return TruncatedSeries(std::move(c));
}

inline TruncatedSeries operator*(Complex s, const TruncatedSeries& a) { return a * s; }

inline TruncatedSeries operator+(const TruncatedSeries& a, Complex s) {
  std::vector<Complex> c(a.coeffs());
  c[0] += s;
  return TruncatedSeries(std::move(c));
}

inline TruncatedSeries operator+(Complex s, const TruncatedSeries& a) { return a + s; }

inline TruncatedSeries operator-(const TruncatedSeries& a, Complex s) { return a + (-s); }

inline TruncatedSeries operator-(Complex s, const TruncatedSeries& a) {
  std::vector<Complex> c(a.coeffs());
  for (auto& v : c) v = -v;
  c[0] += s;
  return TruncatedSeries(std::move(c));
}

/// Cauchy product truncated at the smaller order.
inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int n = std::min(a.order(), b.order());
  std::vector<Complex> c(static_cast<std::size_t>(n) + 1, Complex{0.0});
  for (int k = 0; k <= n; ++k)
    for (int m = 0; m <= k; ++m) c[static_cast<std::size_t>(k)] += a.coeff(m) * b.coeff(k - m);
  return TruncatedSeries(std::move(c));
}

/// Series quotient c with c*b = a up to the smaller order. The divisor needs
/// a nonzero constant term.
inline TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (std::abs(b.coeff(0)) <= kUnitTolerance)
    throw DivisionByVanishingConstantTerm("series division requires |b(0)| > 1e-10");
  const int n = std::min(a.order(), b.order());
  std::vector<Complex> c(static_cast<std::size_t>(n) + 1);
  c[0] = a.coeff(0) / b.coeff(0);
  for (int k = 1; k <= n; ++k) {
    Complex acc = a.coeff(k);
    for (int m = 1; m <= k; ++m) acc -= b.coeff(m) * c[static_cast<std::size_t>(k - m)];
    c[static_cast<std::size_t>(k)] = acc / b.coeff(0);
  }
  return TruncatedSeries(std::move(c));
}

/// outer(inner(z)) by Horner evaluation on series. The inner series must
/// vanish at 0; the result carries the inner order, so the outer series is
/// treated as a polynomial (supply it at the working order when it is itself
/// a truncation).
inline TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner) {
  if (std::abs(inner.coeff(0)) > kUnitTolerance)
    throw CompositionWithNonvanishingInnerConstant("composition requires inner(0) = 0");
  TruncatedSeries acc = TruncatedSeries::constant(outer.coeff(outer.order()), inner.order());
  for (int k = outer.order() - 1; k >= 0; --k) acc = acc * inner + outer.coeff(k);
  return acc;
}

/// Principal square root: s(0) = +sqrt(a(0)) with a(0) real and positive,
/// then c_n = (a_n - sum_{k=1}^{n-1} c_k c_{n-k}) / (2 c_0).
inline TruncatedSeries sqrt(const TruncatedSeries& a) {
  const Complex a0 = a.coeff(0);
  if (!(a0.real() > kUnitTolerance) || std::abs(a0.imag()) > kUnitTolerance)
    throw SqrtOfNonpositiveConstantTerm("series sqrt requires a real positive constant term");
  const int n = a.order();
  std::vector<Complex> c(static_cast<std::size_t>(n) + 1);
  c[0] = std::sqrt(a0.real());
  for (int k = 1; k <= n; ++k) {
    Complex acc = a.coeff(k);
    for (int m = 1; m < k; ++m) acc -= c[static_cast<std::size_t>(m)] * c[static_cast<std::size_t>(k - m)];
    c[static_cast<std::size_t>(k)] = acc / (2.0 * c[0]);
  }
  return TruncatedSeries(std::move(c));
}

/// q-derivative acting coefficientwise: z^n -> [n]_q z^(n-1). The order
/// drops by one (a constant maps to the zero series of order 0).
inline TruncatedSeries q_derivative(const TruncatedSeries& f, QParameter q) {
  const int n = std::max(f.order() - 1, 0);
  std::vector<Complex> c(static_cast<std::size_t>(n) + 1, Complex{0.0});
  for (int k = 1; k <= f.order(); ++k)
    c[static_cast<std::size_t>(k - 1)] = q_number(k, q) * f.coeff(k);
  return TruncatedSeries(std::move(c));
}

/// Classical derivative, the q -> 1 limit of q_derivative.
inline TruncatedSeries derivative(const TruncatedSeries& f) {
  const int n = std::max(f.order() - 1, 0);
  std::vector<Complex> c(static_cast<std::size_t>(n) + 1, Complex{0.0});
  for (int k = 1; k <= f.order(); ++k)
    c[static_cast<std::size_t>(k - 1)] = static_cast<double>(k) * f.coeff(k);
  return TruncatedSeries(std::move(c));
}

}  // namespace hankel
