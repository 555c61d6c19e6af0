#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "hankel/series.hpp"

namespace hankel {

/// Parameters of the coefficient-body parametrization of the Caratheodory
/// class: p1 in [0,2] and lambda, mu, delta in the closed unit disk.
struct CaratheodoryParams {
  double p1;
  Complex lambda;
  Complex mu;
  Complex delta;

  CaratheodoryParams(double p1_, Complex lambda_, Complex mu_, Complex delta_)
      : p1(p1_), lambda(lambda_), mu(mu_), delta(delta_) {
    constexpr double tol = 1e-12;
    if (!(p1 >= -tol && p1 <= 2.0 + tol))
      throw ConfigInvalid("p1 must lie in [0,2]");
    if (std::abs(lambda) > 1.0 + tol || std::abs(mu) > 1.0 + tol || std::abs(delta) > 1.0 + tol)
      throw ConfigInvalid("lambda, mu, delta must lie in the closed unit disk");
  }
};

/// First four Taylor coefficients of a function with positive real part.
struct PCoefficients {
  Complex p1, p2, p3, p4;
};

/// Expands (p1, lambda, mu, delta) into (p1..p4) via
///   2 p2 = p1^2 + lambda (4 - p1^2)
///   4 p3 = p1^3 + 2 p1 (4-p1^2) lambda - p1 (4-p1^2) lambda^2
///          + 2 (4-p1^2)(1-|lambda|^2) mu
///   8 p4 = p1^4 + (4-p1^2) lambda (p1^2 (lambda^2 - 3 lambda + 3) + 4 lambda)
///          - 4 (4-p1^2)(1-|lambda|^2)(p1 (lambda-1) mu + conj(lambda) mu^2
///                                     - (1-|mu|^2) delta)
/// Any tuple in the closed polydisk is accepted; the |p_n| <= 2 consequence
/// is checked by tests rather than assumed.
inline PCoefficients lemma_expand(const CaratheodoryParams& params) {
  const double p1 = params.p1;
  const Complex l = params.lambda, m = params.mu, d = params.delta;
  const double r = 4.0 - p1 * p1;
  const double one_l2 = 1.0 - std::norm(l);
  const double one_m2 = 1.0 - std::norm(m);

  PCoefficients out;
  out.p1 = p1;
  out.p2 = (p1 * p1 + l * r) / 2.0;
  out.p3 = (p1 * p1 * p1 + 2.0 * p1 * r * l - p1 * r * l * l + 2.0 * r * one_l2 * m) / 4.0;
  out.p4 = (p1 * p1 * p1 * p1 + r * l * (p1 * p1 * (l * l - 3.0 * l + 3.0) + 4.0 * l) -
            4.0 * r * one_l2 * (p1 * (l - 1.0) * m + std::conj(l) * m * m - one_m2 * d)) /
           8.0;
  return out;
}

/// Coefficients of p(e^{i theta} z) with theta chosen so the rotated p1 is
/// real and nonnegative: p_n -> p_n e^{i n theta}.
inline PCoefficients rotate_to_real_p1(const PCoefficients& p) {
  if (std::abs(p.p1) == 0.0) return p;
  const double theta = -std::arg(p.p1);
  const Complex w = std::polar(1.0, theta);
  return PCoefficients{p.p1 * w, p.p2 * w * w, p.p3 * w * w * w, p.p4 * w * w * w * w};
}

/// lambda recovered from the p2 relation: lambda = (2 p2 - p1^2) / (4 - p1^2).
/// Callers must branch on p1 = 2 (all coefficients are forced to 2 there).
inline Complex lambda_from_p2(const PCoefficients& p) {
  const Complex denom = 4.0 - p.p1 * p.p1;
  if (std::abs(denom) <= kUnitTolerance)
    throw DivisionByVanishingConstantTerm("lambda is undefined at p1 = 2");
  return (2.0 * p.p2 - p.p1 * p.p1) / denom;
}

namespace detail {

/// splitmix64 finalizer; derives independent per-sample seeds so that work
/// partitioning cannot change any draw.
inline std::uint64_t mix_seed(std::uint64_t base, std::uint64_t index) {
  std::uint64_t x = base + 0x9E3779B97F4A7C15ull * (index + 1);
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ull;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBull;
  x ^= x >> 31;
  return x;
}

/// Uniform double in [0,1) built from the top 53 bits of the engine output;
/// avoids the implementation-defined std::uniform_real_distribution.
inline double canonical(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline Complex random_unit_disk(std::mt19937_64& rng) {
  const double r = std::sqrt(canonical(rng));
  const double theta = 2.0 * std::numbers::pi * canonical(rng);
  return std::polar(r, theta);
}

}  // namespace detail

/// Uniform-ish draw over the parameter cuboid: p1 ~ U[0,2], the disk
/// parameters area-uniform on the closed unit disk. Draw order is fixed
/// (p1, lambda, mu, delta).
inline CaratheodoryParams random_caratheodory_params(std::mt19937_64& rng) {
  const double p1 = 2.0 * detail::canonical(rng);
  const Complex l = detail::random_unit_disk(rng);
  const Complex m = detail::random_unit_disk(rng);
  const Complex d = detail::random_unit_disk(rng);
  return CaratheodoryParams(p1, l, m, d);
}

/// p(z) = sum_j t_j (1 + e^{i theta_j} z) / (1 - e^{i theta_j} z) built from
/// explicit atoms, i.e. p_n = 2 sum_j t_j e^{i n theta_j}. Weights must be
/// nonnegative with sum 1 for the result to lie in the Caratheodory class.
inline TruncatedSeries p_function_from_atoms(const std::vector<double>& weights,
                                             const std::vector<double>& angles, int order) {
  assert(weights.size() == angles.size() && !weights.empty());
  std::vector<Complex> c(static_cast<std::size_t>(order) + 1, Complex{0.0});
  c[0] = 1.0;
  for (int n = 1; n <= order; ++n) {
    Complex acc{0.0};
    for (std::size_t j = 0; j < weights.size(); ++j)
      acc += weights[j] * std::polar(1.0, n * angles[j]);
    c[static_cast<std::size_t>(n)] = 2.0 * acc;
  }
  return TruncatedSeries(std::move(c));
}

/// Random member of the Caratheodory class: a convex combination of `atoms`
/// extreme points with Dirichlet(1,..,1) weights and uniform angles.
/// Deterministic given the seed; |p_n| <= 2 holds by construction and is
/// asserted on every sample.
inline TruncatedSeries sample_p_function(std::uint64_t seed, int atoms, int order) {
  assert(atoms >= 1 && order >= 4);
  std::mt19937_64 rng(seed);
  std::vector<double> weights(static_cast<std::size_t>(atoms));
  double total = 0.0;
  for (auto& w : weights) {
    w = -std::log1p(-detail::canonical(rng));
    total += w;
  }
  if (total == 0.0) {  // all-zero exponential draws
    weights[0] = 1.0;
    total = 1.0;
  }
  for (auto& w : weights) w /= total;
  std::vector<double> angles(static_cast<std::size_t>(atoms));
  for (auto& a : angles) a = 2.0 * std::numbers::pi * detail::canonical(rng);

  TruncatedSeries p = p_function_from_atoms(weights, angles, order);
  for (int n = 1; n <= order; ++n) assert(std::abs(p.coeff(n)) <= 2.0 + 1e-9);
  return p;
}

}  // namespace hankel
