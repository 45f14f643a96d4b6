#pragma once

#include <string>
#include <vector>

namespace nucgrow {

/// Rate assigned when a vacant site has exactly d occupied neighbours.
/// GammaZero uses exp(-beta * gamma_0); One uses the fast rate 1. GammaZero
/// is the default and keeps the d = 0 model meaningful.
enum class RateAtD { GammaZero, One };

/// Model parameters: dimension, the nondecreasing activation energies
/// gamma_0 <= ... <= gamma_d, and the inverse temperature beta > 0.
struct ModelParams {
  int dimension = 0;
  std::vector<double> gammas;  // length dimension + 1
  double beta = 1.0;
  RateAtD rate_at_d = RateAtD::GammaZero;
};

/// Outcome of parameter validation; never throws, reports the first
/// violated constraint by name.
struct ValidationResult {
  bool ok = true;
  std::string violation;
};

ValidationResult validate(const ModelParams& params);

/// Throwing wrapper used at simulation entry points.
void require_valid(const ModelParams& params);

/// Occupation rate of a vacant site with n occupied neighbours:
/// exp(-beta * gamma_{d-n}) for n < d, 1 for n > d, and the RateAtD choice
/// at n = d. Throws std::domain_error unless 0 <= n <= 2d.
double rate(const ModelParams& params, int n);

/// Critical constants kappa_0..kappa_d and length exponents l_0..l_d of the
/// relaxation scaling:
///   kappa_0 = gamma_0,  kappa_i = max(gamma_{i-1}, (gamma_i + i kappa_{i-1}) / (i+1)),
///   l_0 = 0,            l_i = (gamma_i - kappa_i) / i.
struct TheoryConstants {
  std::vector<double> kappas;
  std::vector<double> lengths;
};

TheoryConstants theory(const ModelParams& params);

/// Relaxation-time exponent in a box of volume exponent L:
/// max(gamma_d - d*L, kappa_d). L = +infinity selects the infinite-volume
/// value kappa_d; negative L is a domain error.
double predicted_exponent(const ModelParams& params, double volume_exponent);

}  // namespace nucgrow
