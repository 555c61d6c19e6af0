#pragma once

#include <optional>

#include "hankel/caratheodory.hpp"
#include "hankel/series.hpp"

namespace hankel {

enum class ClassKind { Star, QStarLemniscate };

/// Identifies the function class under study; carries q only for the
/// q-starlike lemniscate class.
class ClassTag {
 public:
  static ClassTag star() { return ClassTag(ClassKind::Star, std::nullopt); }
  static ClassTag qstar_lemniscate(QParameter q) {
    return ClassTag(ClassKind::QStarLemniscate, q);
  }

  ClassKind kind() const { return kind_; }
  QParameter q() const {
    assert(kind_ == ClassKind::QStarLemniscate);
    return *q_;
  }

 private:
  ClassTag(ClassKind kind, std::optional<QParameter> q) : kind_(kind), q_(q) {}
  ClassKind kind_;
  std::optional<QParameter> q_;
};

/// Taylor coefficients a2..a5 of a normalized analytic function
/// f(z) = z + a2 z^2 + ...
struct CoefficientVector {
  Complex a2, a3, a4, a5;
};

/// Closed forms for the starlike class, obtained from z f'/f = p(z):
///   a2 = p1, a3 = (p2 + p1^2)/2, a4 = (p1^3 + 3 p1 p2 + 2 p3)/6,
///   a5 = (p1^4 + 6 p1^2 p2 + 3 p2^2 + 8 p1 p3 + 6 p4)/24.
inline CoefficientVector coeffs_star_closed(const PCoefficients& p) {
  CoefficientVector a;
  a.a2 = p.p1;
  a.a3 = (p.p2 + p.p1 * p.p1) / 2.0;
  a.a4 = (p.p1 * p.p1 * p.p1 + 3.0 * p.p1 * p.p2 + 2.0 * p.p3) / 6.0;
  a.a5 = (p.p1 * p.p1 * p.p1 * p.p1 + 6.0 * p.p1 * p.p1 * p.p2 + 3.0 * p.p2 * p.p2 +
          8.0 * p.p1 * p.p3 + 6.0 * p.p4) /
         24.0;
  return a;
}

/// Series of 1 + p1 z + p2 z^2 + p3 z^3 + p4 z^4 at the given order (>= 4).
inline TruncatedSeries p_series(const PCoefficients& p, int order = 4) {
  assert(order >= 4);
  std::vector<Complex> c(static_cast<std::size_t>(order) + 1, Complex{0.0});
  c[0] = 1.0;
  c[1] = p.p1;
  c[2] = p.p2;
  c[3] = p.p3;
  c[4] = p.p4;
  return TruncatedSeries(std::move(c));
}

/// Target of the lemniscate subordination, phi(w) = sqrt(2(1+w)/(2+(1-q)w)),
/// as a series in w.
inline TruncatedSeries lemniscate_target(QParameter q, int order) {
  const TruncatedSeries w = TruncatedSeries::monomial(1, order);
  const TruncatedSeries num = 2.0 * (w + 1.0);
  const TruncatedSeries den = (1.0 - q.value()) * w + 2.0;
  return sqrt(num / den);
}

/// Solves d(n) a_n = sum_{m=1}^{n-1} g_m a_{n-m}, a_1 = 1, for the normalized
/// function f = z + sum a_n z^n determined by the ratio target g (g(0) = 1).
/// d(n) is n-1 for the classical relation z f'/f = g and [n]_q - 1 for its
/// q-analog; both are positive for n >= 2.
template <class DivisorFn>
TruncatedSeries function_from_target(const TruncatedSeries& g, DivisorFn&& divisor, int order) {
  assert(order >= 1);
  const TruncatedSeries gw = resized(g, std::max(g.order(), order - 1));
  std::vector<Complex> a(static_cast<std::size_t>(order) + 1, Complex{0.0});
  a[1] = 1.0;
  for (int n = 2; n <= order; ++n) {
    Complex acc{0.0};
    for (int m = 1; m <= n - 1; ++m) acc += gw.coeff(m) * a[static_cast<std::size_t>(n - m)];
    const double d = divisor(n);
    assert(d > 0.0);
    a[static_cast<std::size_t>(n)] = acc / d;
  }
  return TruncatedSeries(std::move(a));
}

/// a2..a5 solved from the defining subordination of the class: z f'/f = p for
/// the starlike class, and z (D_q f)/f = phi((p-1)/(p+1)) for the lemniscate
/// class. The series p must satisfy p(0) = 1; shorter inputs are treated as
/// polynomials.
inline CoefficientVector coeffs_from_subordination(const TruncatedSeries& p, const ClassTag& tag) {
  if (std::abs(p.coeff(0) - 1.0) > kUnitTolerance)
    throw SubordinationTargetInvalid("subordination target must satisfy p(0) = 1");
  const TruncatedSeries pw = resized(p, std::max(p.order(), 4));

  TruncatedSeries f = TruncatedSeries::zero(0);
  if (tag.kind() == ClassKind::Star) {
    f = function_from_target(pw, [](int n) { return static_cast<double>(n - 1); }, 5);
  } else {
    const QParameter q = tag.q();
    const TruncatedSeries omega = (pw - 1.0) / (pw + 1.0);
    const TruncatedSeries g = compose(lemniscate_target(q, pw.order()), omega);
    f = function_from_target(g, [q](int n) { return q_number(n, q) - 1.0; }, 5);
  }
  return CoefficientVector{f.coeff(2), f.coeff(3), f.coeff(4), f.coeff(5)};
}

/// The printed closed form of a5 for the lemniscate class, kept verbatim as a
/// cross-check of the recursion (the recursion is the source of truth).
inline Complex coeffs_qstar_closed_a5(const PCoefficients& p, QParameter qp) {
  const double q = qp.value();
  const Complex p1 = p.p1, p2 = p.p2, p3 = p.p3, p4 = p.p4;
  const double q2 = q * q, q3 = q2 * q, q4 = q3 * q, q5 = q4 * q, q6 = q5 * q, q7 = q6 * q,
               q8 = q7 * q;
  const Complex term =
      512.0 * p1 * p3 * q2 * (2.0 - 10.0 * q - 8.0 * q2 - 9.0 * q3 + 3.0 * q4) +
      p1 * p1 * p1 * p1 *
          (8.0 - 140.0 * q + 802.0 * q2 - 1435.0 * q3 - 340.0 * q4 - 1193.0 * q5 + 1015.0 * q6 -
           320.0 * q7 + 35.0 * q8) +
      32.0 * p1 * p1 * p2 * q *
          (6.0 - 68.0 * q + 175.0 * q2 + 89.0 * q3 + 148.0 * q4 - 93.0 * q5 + 15.0 * q6) +
      256.0 * q2 * (1.0 + q + q2) * (16.0 * p4 * q + p2 * p2 * (2.0 - 13.0 * q + 3.0 * q2));
  return term / (32768.0 * q4 * (1.0 + q2) * (1.0 + q + q2));
}

/// Extremal function of the starlike bound: the solution of
/// z f'/f = (1+z^3)/(1-z^3), with a4 = 2/3 and a2 = a3 = a5 = 0.
inline TruncatedSeries extremal_star(int order) {
  if (order < 7) throw ConfigInvalid("extremal series order must be >= 7");
  const TruncatedSeries z3 = TruncatedSeries::monomial(3, order);
  const TruncatedSeries target = (z3 + 1.0) / (1.0 - z3);
  return function_from_target(target, [](int n) { return static_cast<double>(n - 1); }, order);
}

/// Extremal function of the lemniscate bound: the solution of
/// z (D_q f)/f = sqrt(2(1+z^3)/(2+(1-q)z^3)). Only coefficients a_{3k+1}
/// are nonzero.
inline TruncatedSeries extremal_qstar(QParameter q, int order) {
  if (order < 7) throw ConfigInvalid("extremal series order must be >= 7");
  const TruncatedSeries z3 = TruncatedSeries::monomial(3, order);
  const TruncatedSeries target = compose(lemniscate_target(q, order), z3);
  return function_from_target(target, [q](int n) { return q_number(n, q) - 1.0; }, order);
}

/// a2..a5 read off a normalized function series (order >= 5).
inline CoefficientVector coefficients_of(const TruncatedSeries& f) {
  assert(f.order() >= 5);
  return CoefficientVector{f.coeff(2), f.coeff(3), f.coeff(4), f.coeff(5)};
}

}  // namespace hankel
