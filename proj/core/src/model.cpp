#include "nucgrow/model.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace nucgrow {

ValidationResult validate(const ModelParams& params) {
  if (params.dimension < 0) return {false, "dimension must be nonnegative"};
  if (params.gammas.size() != static_cast<std::size_t>(params.dimension) + 1)
    return {false, "gammas length must be dimension + 1"};
  for (double g : params.gammas) {
    if (!std::isfinite(g)) return {false, "gammas must be finite"};
    if (g < 0) return {false, "gammas must be nonnegative"};
  }
  for (std::size_t i = 1; i < params.gammas.size(); ++i)
    if (params.gammas[i] < params.gammas[i - 1])
      return {false, "gammas not nondecreasing"};
  if (!(params.beta > 0) || !std::isfinite(params.beta))
    return {false, "beta must be positive"};
  return {};
}

void require_valid(const ModelParams& params) {
  const auto r = validate(params);
  if (!r.ok) throw std::invalid_argument("invalid model parameters: " + r.violation);
}

double rate(const ModelParams& params, int n) {
  const int d = params.dimension;
  if (n < 0 || n > 2 * d)
    throw std::domain_error("neighbour count outside [0, 2d]");
  if (n > d) return 1.0;
  if (n == d && params.rate_at_d == RateAtD::One) return 1.0;
  // n == d with GammaZero falls through to gamma_{d-n} = gamma_0.
  return std::exp(-params.beta * params.gammas[static_cast<std::size_t>(d - n)]);
}

TheoryConstants theory(const ModelParams& params) {
  require_valid(params);
  const int d = params.dimension;
  TheoryConstants t;
  t.kappas.resize(d + 1);
  t.lengths.resize(d + 1);
  t.kappas[0] = params.gammas[0];
  t.lengths[0] = 0.0;
  for (int i = 1; i <= d; ++i) {
    t.kappas[i] = std::max(params.gammas[i - 1],
                           (params.gammas[i] + i * t.kappas[i - 1]) / (i + 1));
    t.lengths[i] = (params.gammas[i] - t.kappas[i]) / i;
  }
  return t;
}

double predicted_exponent(const ModelParams& params, double volume_exponent) {
  const auto t = theory(params);
  const int d = params.dimension;
  if (std::isinf(volume_exponent) && volume_exponent > 0) return t.kappas[d];
  if (!(volume_exponent >= 0))
    throw std::domain_error("volume exponent must be nonnegative");
  return std::max(params.gammas[d] - d * volume_exponent, t.kappas[d]);
}

}  // namespace nucgrow
