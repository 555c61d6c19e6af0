#pragma once

#include <cstdint>
#include <limits>

#include "hankel/caratheodory.hpp"
#include "hankel/classes.hpp"
#include "hankel/parallel.hpp"
#include "hankel/series.hpp"

namespace hankel {

/// Slack allowed in every domination and bound comparison; sized for the
/// roundoff of degree-8 polynomials with coefficients up to ~4.2e6.
inline constexpr double kDominationSlack = 1e-9;

/// A point of the closed cuboid [0,2] x [0,1] x [0,1] carrying
/// (p, x, y) = (p1, |lambda|, |mu|).
struct CuboidPoint {
  double p, x, y;

  CuboidPoint(double p_, double x_, double y_) : p(p_), x(x_), y(y_) {
    constexpr double tol = 1e-12;
    assert(p >= -tol && p <= 2.0 + tol);
    assert(x >= -tol && x <= 1.0 + tol);
    assert(y >= -tol && y <= 1.0 + tol);
  }
};

/// The four bracketed components of a surrogate objective; each is a product
/// of factors that are nonnegative on the closed cuboid.
struct SurrogateTerms {
  double term1, term2, term3, term4;
};

/// H_3(1) = a3 (a2 a4 - a3^2) - a4 (a4 - a2 a3) + a5 (a3 - a2^2).
inline Complex h3(const CoefficientVector& a) {
  return a.a3 * (a.a2 * a.a4 - a.a3 * a.a3) - a.a4 * (a.a4 - a.a2 * a.a3) +
         a.a5 * (a.a3 - a.a2 * a.a2);
}

/// Coefficients of the class member determined by the parametrized
/// Caratheodory data: closed forms for the starlike class, the subordination
/// recursion for the lemniscate class.
inline CoefficientVector class_coefficients(const CaratheodoryParams& params,
                                            const ClassTag& tag) {
  const PCoefficients p = lemma_expand(params);
  if (tag.kind() == ClassKind::Star) return coeffs_star_closed(p);
  return coeffs_from_subordination(p_series(p), tag);
}

/// Exact H_3(1) of the class member determined by (p1, lambda, mu, delta),
/// computed by composition rather than by transcribing the tau-decomposition.
inline Complex h3_from_params(const CaratheodoryParams& params, const ClassTag& tag) {
  return h3(class_coefficients(params, tag));
}

/// s1..s4 of the starlike surrogate.
inline SurrogateTerms surrogate_star_terms(double p, double x) {
  const double p2 = p * p, p3 = p2 * p, p4 = p3 * p;
  const double r = 4.0 - p2;
  const double x2 = x * x, x3 = x2 * x, x4 = x3 * x;
  SurrogateTerms t;
  t.term1 = 2.0 * p2 * x2 * r * r + 10.0 * p2 * x3 * r * r + p2 * x4 * r * r +
            3.0 * p4 * x * r + 3.0 * p4 * x2 * r + 36.0 * p2 * x2 * r + 9.0 * p4 * x3 * r;
  t.term2 = r * (1.0 - x2) * (12.0 * p3 + p * x * r * (20.0 + 4.0 * x) + 36.0 * p3 * x);
  t.term3 = r * (1.0 - x2) * (32.0 * r + 4.0 * x2 * r + 36.0 * p2 * x);
  t.term4 = r * (1.0 - x2) * (36.0 * p2 + 36.0 * x * r);
  return t;
}

/// S(p,x,y) = (s1 + s2 y + s3 y^2 + s4 (1 - y^2)) / 1152, the upper envelope
/// of |H_3(1)| for the starlike class over the phases of lambda, mu, delta.
inline double surrogate_star(const CuboidPoint& pt) {
  const SurrogateTerms s = surrogate_star_terms(pt.p, pt.x);
  return (s.term1 + s.term2 * pt.y + s.term3 * pt.y * pt.y +
          s.term4 * (1.0 - pt.y * pt.y)) /
         1152.0;
}

/// t1..t4 of the lemniscate surrogate, including the degree-8 coefficient
/// A(q) inside t1.
inline SurrogateTerms surrogate_qstar_terms(double p, double x, QParameter qp) {
  const double q = qp.value();
  const double q2 = q * q, q3 = q2 * q, q4 = q3 * q, q5 = q4 * q, q6 = q5 * q, q7 = q6 * q,
               q8 = q7 * q;
  const double A = 55.0 - 308.0 * q + 1349.0 * q2 - 698.0 * q3 + 620.0 * q4 - 46.0 * q5 -
                   25.0 * q6 - 20.0 * q7 + q8;
  const double s = 1.0 + q + q2;  // [3]_q
  const double p2 = p * p, p3 = p2 * p, p6 = p2 * p2 * p2;
  const double r = 4.0 - p2;
  const double x2 = x * x, x3 = x2 * x;

  SurrogateTerms t;
  t.term1 = A * p6 +
            p2 * r * x *
                (8.0 * (15.0 - 183.0 * q + 804.0 * q2 - 434.0 * q3 + 242.0 * q4 + 20.0 * q5 +
                        3.0 * q6 - 3.0 * q7) *
                     p2 +
                 64.0 * (45.0 + 66.0 * q + 262.0 * q2 + 28.0 * q3 + 62.0 * q4 + 6.0 * q5 +
                         3.0 * q6) *
                     r * x +
                 512.0 * (7.0 + 15.0 * q - 3.0 * q2 + 17.0 * q3 + 5.0 * q4 - q5) * r * x2 +
                 2048.0 * (7.0 - q) * s * s * x + 4096.0 * r * x3 +
                 512.0 * (7.0 - q) * s * s * p2 * x2 +
                 128.0 * (22.0 + 50.0 * q + 35.0 * q2 + 59.0 * q3 + 20.0 * q4 + q5 + q6) * p2 *
                     x) +
            2048.0 * (5.0 - q) * s * s * r * r * x3;
  t.term2 = r * (1.0 - x2) *
            (256.0 * (6.0 + 2.0 * q + 41.0 * q2 - 15.0 * q3 - 5.0 * q5 - q6) * p3 +
             2048.0 * (7.0 - q) * s * s * p3 * x +
             p * r * x *
                 (2048.0 * (6.0 + 12.0 * q + 5.0 * q2 + 12.0 * q3 + 4.0 * q4 - q5) +
                  16384.0 * q2 * x));
  t.term3 = r * (1.0 - x2) *
            (2048.0 * (7.0 - q) * s * s * p2 * x +
             r * (16384.0 * q2 * x2 + 16384.0 * (1.0 + q2) * (1.0 + q) * (1.0 + q)));
  t.term4 = r * (1.0 - x2) * s * s * ((14336.0 - 2048.0 * q) * p2 + 16384.0 * r * x);
  return t;
}

/// Normalizing denominator of the lemniscate surrogate.
inline double qstar_denominator(QParameter qp) {
  const double q = qp.value();
  const double s = 1.0 + q + q * q;
  return 4194304.0 * q * q * (1.0 + q * q) * s * s;
}

/// T~(p,x,y) = (t1 + t2 y + t3 y^2 + t4 (1 - y^2)) / (4194304 q^2 (1+q^2)
/// (1+q+q^2)^2), the upper envelope of |H_3(1)| for the lemniscate class.
inline double surrogate_qstar(const CuboidPoint& pt, QParameter q) {
  const SurrogateTerms t = surrogate_qstar_terms(pt.p, pt.x, q);
  return (t.term1 + t.term2 * pt.y + t.term3 * pt.y * pt.y +
          t.term4 * (1.0 - pt.y * pt.y)) /
         qstar_denominator(q);
}

inline double surrogate(const CuboidPoint& pt, const ClassTag& tag) {
  return tag.kind() == ClassKind::Star ? surrogate_star(pt) : surrogate_qstar(pt, tag.q());
}

/// The sharp bound each theorem asserts: 4/9 for the starlike class,
/// (1+q)^2 / (16 q^2 (1+q+q^2)^2) for the lemniscate class.
inline double sharp_bound(const ClassTag& tag) {
  if (tag.kind() == ClassKind::Star) return 4.0 / 9.0;
  const double q = tag.q().value();
  const double s = 1.0 + q + q * q;
  return (1.0 + q) * (1.0 + q) / (16.0 * q * q * s * s);
}

/// Both sides of the triangle-inequality step at the cuboid point
/// (p1, |lambda|, |mu|); delta enters only through the surrogate's
/// |delta| <= 1 envelope.
struct DominationCheck {
  double h3_modulus;
  double surrogate_value;
  bool dominated;
};

inline DominationCheck check_domination(const CaratheodoryParams& params, const ClassTag& tag) {
  const double m = std::abs(h3_from_params(params, tag));
  const CuboidPoint pt(params.p1, std::abs(params.lambda), std::abs(params.mu));
  const double sv = surrogate(pt, tag);
  return DominationCheck{m, sv, m <= sv + kDominationSlack};
}

/// Aggregate of a seeded Monte-Carlo domination sweep.
struct DominationSweep {
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  std::size_t violations = 0;        // domination failures (slack < -1e-9)
  std::size_t bound_exceedances = 0; // |H3| above the sharp bound + slack
  double max_h3 = 0.0;
  double min_slack = std::numeric_limits<double>::infinity();
  double max_a5_residual = 0.0;      // closed-form a5 vs recursion (q-case only)
};

/// Draws `samples` random parameter tuples (sample i is generated from
/// mix_seed(seed, i), so the result does not depend on work partitioning)
/// and checks |H3| against the surrogate and the sharp bound. For the
/// lemniscate class it also tracks the residual of the printed a5 closed
/// form against the recursion.
inline DominationSweep run_domination_sweep(const ClassTag& tag, std::size_t samples,
                                            std::uint64_t seed) {
  const double bound = sharp_bound(tag);
  const bool qcase = tag.kind() == ClassKind::QStarLemniscate;

  auto chunk = [&](std::size_t begin, std::size_t end) {
    DominationSweep acc;
    for (std::size_t i = begin; i < end; ++i) {
      std::mt19937_64 rng(detail::mix_seed(seed, i));
      const CaratheodoryParams params = random_caratheodory_params(rng);
      const DominationCheck c = check_domination(params, tag);
      acc.max_h3 = std::max(acc.max_h3, c.h3_modulus);
      acc.min_slack = std::min(acc.min_slack, c.surrogate_value - c.h3_modulus);
      if (!c.dominated) ++acc.violations;
      if (c.h3_modulus > bound + kDominationSlack) ++acc.bound_exceedances;
      if (qcase) {
        const PCoefficients p = lemma_expand(params);
        const Complex closed = coeffs_qstar_closed_a5(p, tag.q());
        const Complex recursed = coeffs_from_subordination(p_series(p), tag).a5;
        acc.max_a5_residual = std::max(acc.max_a5_residual, std::abs(closed - recursed));
      }
    }
    return acc;
  };
  auto merge = [](DominationSweep a, const DominationSweep& b) {
    a.violations += b.violations;
    a.bound_exceedances += b.bound_exceedances;
    a.max_h3 = std::max(a.max_h3, b.max_h3);
    a.min_slack = std::min(a.min_slack, b.min_slack);
    a.max_a5_residual = std::max(a.max_a5_residual, b.max_a5_residual);
    return a;
  };

  DominationSweep out = detail::parallel_reduce<DominationSweep>(samples, chunk, merge);
  out.seed = seed;
  out.samples = samples;
  return out;
}

}  // namespace hankel
