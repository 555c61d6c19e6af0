#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "hankel/bounds.hpp"
#include "hankel/classes.hpp"

using hankel::ClassTag;
using hankel::CoefficientVector;
using hankel::Complex;
using hankel::PCoefficients;
using hankel::QParameter;
using hankel::TruncatedSeries;

namespace {

void check_vector(const CoefficientVector& a, Complex a2, Complex a3, Complex a4, Complex a5,
                  double tol) {
  CHECK(std::abs(a.a2 - a2) <= tol);
  CHECK(std::abs(a.a3 - a3) <= tol);
  CHECK(std::abs(a.a4 - a4) <= tol);
  CHECK(std::abs(a.a5 - a5) <= tol);
}

PCoefficients p_of(const TruncatedSeries& s) {
  return PCoefficients{s.coeff(1), s.coeff(2), s.coeff(3), s.coeff(4)};
}

}  // namespace

TEST_CASE("closed starlike coefficients at reference inputs") {
  check_vector(coeffs_star_closed(PCoefficients{2, 2, 2, 2}), 2, 3, 4, 5, 0.0);  // Koebe
  check_vector(coeffs_star_closed(PCoefficients{0, 0, 0, 0}), 0, 0, 0, 0, 0.0);
  // p(z) = (1+z^2)/(1-z^2) gives f(z) = z/(1-z^2)
  check_vector(coeffs_star_closed(PCoefficients{0, 2, 0, 2}), 0, 1, 0, 1, 0.0);
}

TEST_CASE("subordination recursion reproduces the Koebe function") {
  const TruncatedSeries koebe_p = hankel::p_function_from_atoms({1.0}, {0.0}, 4);
  check_vector(coeffs_from_subordination(koebe_p, ClassTag::star()), 2, 3, 4, 5, 1e-14);
}

TEST_CASE("subordination target must have constant term 1") {
  const TruncatedSeries bad = TruncatedSeries::constant(1.5, 4);
  CHECK_THROWS_AS(coeffs_from_subordination(bad, ClassTag::star()),
                  hankel::SubordinationTargetInvalid);
}

TEST_CASE("oracle equivalence: closed forms match the recursion for sampled p") {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const TruncatedSeries p = hankel::sample_p_function(seed, 3, 4);
    const CoefficientVector closed = coeffs_star_closed(p_of(p));
    const CoefficientVector recursed = coeffs_from_subordination(p, ClassTag::star());
    CHECK(std::abs(closed.a2 - recursed.a2) < 1e-12);
    CHECK(std::abs(closed.a3 - recursed.a3) < 1e-12);
    CHECK(std::abs(closed.a4 - recursed.a4) < 1e-12);
    CHECK(std::abs(closed.a5 - recursed.a5) < 1e-12);
  }
}

TEST_CASE("constant target collapses the lemniscate class to the identity") {
  const ClassTag tag = ClassTag::qstar_lemniscate(QParameter(0.5));
  const TruncatedSeries one = TruncatedSeries::constant(1.0, 0);
  check_vector(coeffs_from_subordination(one, tag), 0, 0, 0, 0, 0.0);
}

TEST_CASE("lemniscate coefficients at frozen reference values") {
  // p-data of the half-plane extreme point, q = 9/10
  const ClassTag tag = ClassTag::qstar_lemniscate(QParameter(0.9));
  const CoefficientVector a =
      coeffs_from_subordination(p_series(PCoefficients{2, 2, 2, 2}), tag);
  check_vector(a, 19.0 / 36.0, 173.0 / 2592.0, 266285.0 / 25287552.0,
               -2131742665.0 / 659094755328.0, 1e-13);

  // a generic rational tuple, q = 1/2
  const ClassTag half = ClassTag::qstar_lemniscate(QParameter(0.5));
  const CoefficientVector b = coeffs_from_subordination(
      p_series(PCoefficients{0.5, -1.0 / 3.0, 0.25, 0.6}), half);
  check_vector(b, 3.0 / 16.0, -161.0 / 1536.0, 4997.0 / 57344.0, 21255769.0 / 275251200.0,
               1e-13);
  const Complex h = hankel::h3(b);
  CHECK(std::abs(h - Complex{-0.020676349553414033, 0.0}) < 1e-13);
}

TEST_CASE("printed a5 closed form agrees with the recursion") {
  const QParameter q(0.5);
  const ClassTag tag = ClassTag::qstar_lemniscate(q);
  CHECK(std::abs(coeffs_qstar_closed_a5(PCoefficients{0, 0, 0, 0}, q)) == 0.0);

  double max_residual = 0.0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const TruncatedSeries p = hankel::sample_p_function(seed, 3, 4);
    const Complex closed = coeffs_qstar_closed_a5(p_of(p), q);
    const Complex recursed = coeffs_from_subordination(p, tag).a5;
    max_residual = std::max(max_residual, std::abs(closed - recursed));
  }
  CHECK(max_residual < 1e-9);

  const QParameter q9(0.9);
  const Complex closed = coeffs_qstar_closed_a5(PCoefficients{2, 2, 2, 2}, q9);
  const Complex recursed =
      coeffs_from_subordination(p_series(PCoefficients{2, 2, 2, 2}),
                                ClassTag::qstar_lemniscate(q9))
          .a5;
  CHECK(std::abs(closed - recursed) < 1e-12);
}

TEST_CASE("starlike extremal function: z + 2 z^4 / 3 + ...") {
  const TruncatedSeries f = hankel::extremal_star(8);
  CHECK(std::abs(f.coeff(2)) == 0.0);
  CHECK(std::abs(f.coeff(3)) == 0.0);
  CHECK(std::abs(f.coeff(4) - 2.0 / 3.0) < 1e-15);
  CHECK(std::abs(f.coeff(5)) == 0.0);
  CHECK(std::abs(hankel::h3(coefficients_of(f)) - Complex{-4.0 / 9.0, 0.0}) < 1e-15);
  CHECK_THROWS_AS(hankel::extremal_star(5), hankel::ConfigInvalid);
}

TEST_CASE("lemniscate extremal function attains the q-dependent bound") {
  const TruncatedSeries f = hankel::extremal_qstar(QParameter(0.5), 8);
  CHECK(std::abs(f.coeff(2)) == 0.0);
  CHECK(std::abs(f.coeff(3)) == 0.0);
  CHECK(std::abs(f.coeff(5)) == 0.0);
  CHECK(std::abs(f.coeff(4) - 3.0 / 7.0) < 1e-15);
  CHECK(std::abs(std::abs(hankel::h3(coefficients_of(f))) - 9.0 / 49.0) < 1e-15);

  for (double qv : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    const QParameter q(qv);
    const TruncatedSeries g = hankel::extremal_qstar(q, 8);
    const double observed = std::abs(hankel::h3(coefficients_of(g)));
    const double bound = hankel::sharp_bound(ClassTag::qstar_lemniscate(q));
    CHECK(std::abs(observed - bound) < 1e-10);
    // a4 from the leading balance ( [4]_q - 1 ) a4 = (1+q)/4
    const double a4 = (1.0 + qv) / (4.0 * qv * (1.0 + qv + qv * qv));
    CHECK(std::abs(g.coeff(4) - a4) < 1e-14);
  }
  CHECK_THROWS_AS(hankel::extremal_qstar(QParameter(0.5), 6), hankel::ConfigInvalid);
}

TEST_CASE("q -> 1 limit recovers the classical lemniscate class") {
  const QParameter q(1.0 - 1e-6);
  const ClassTag tag = ClassTag::qstar_lemniscate(q);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const TruncatedSeries p = hankel::sample_p_function(seed, 3, 4);
    const CoefficientVector qcoeffs = coeffs_from_subordination(p, tag);

    // classical relation z f'/f = sqrt(1 + omega(z))
    const TruncatedSeries omega = (p - 1.0) / (p + 1.0);
    const TruncatedSeries target = sqrt(omega + 1.0);
    const TruncatedSeries f = hankel::function_from_target(
        target, [](int n) { return static_cast<double>(n - 1); }, 5);
    CHECK(std::abs(qcoeffs.a2 - f.coeff(2)) < 1e-4);
    CHECK(std::abs(qcoeffs.a3 - f.coeff(3)) < 1e-4);
    CHECK(std::abs(qcoeffs.a4 - f.coeff(4)) < 1e-4);
    CHECK(std::abs(qcoeffs.a5 - f.coeff(5)) < 1e-4);
  }
}

TEST_CASE("lemniscate extremal |H3| tends to 1/36 as q -> 1") {
  const TruncatedSeries f = hankel::extremal_qstar(QParameter(1.0 - 1e-6), 8);
  CHECK(std::abs(std::abs(hankel::h3(coefficients_of(f))) - 1.0 / 36.0) < 1e-4);
}
