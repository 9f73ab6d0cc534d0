#include "myriad/asymptotics.hpp"

#include <cmath>

#include "myriad/errors.hpp"

namespace myriad {

// Both expectations share the closed form with denominator
// (a^2 + g^2 + 1)^2 - 4 g^2 = (a^2 + (g-1)^2)(a^2 + (g+1)^2).
// The numerators carry the factor (a^2 + (g-1)^2) as well, so the quotient
// is evaluated in factored form; the expanded expression cancels
// catastrophically near (a,g) = (0,1).

double expected_y(const CauchyParams& params) {
  params.validate();
  const double a = params.location;
  const double g = params.scale;
  if (std::abs(a) <= 1e-10) return 1.0 / (1.0 + g);
  const double gp = 1.0 + g;
  return gp / (a * a + gp * gp);
}

double expected_z(const CauchyParams& params) {
  params.validate();
  const double a = params.location;
  const double g = params.scale;
  if (std::abs(a) <= 1e-10 && std::abs(g - 1.0) <= 1e-10) return 0.0;
  const double gp = 1.0 + g;
  return a / (a * a + gp * gp);
}

PopulationStats population_stats(const CauchyParams& true_params, const CauchyParams& iterate) {
  true_params.validate();
  iterate.validate();
  const double da = true_params.location - iterate.location;
  const double gs = true_params.scale + iterate.scale;
  const double den = da * da + gs * gs;
  return {iterate.scale * gs / den, iterate.scale * da / den};
}

IdealizedState idealized_step(const IdealizedState& state) {
  state.true_params.validate();
  if (!(state.scale > 0.0)) throw PreconditionError("idealized state needs scale > 0");
  const double a = state.true_params.location;
  const double g = state.true_params.scale;
  const double da = a - state.location;
  IdealizedState next = state;
  next.location = state.location + state.scale * da / (g + state.scale);
  next.scale = std::sqrt(state.scale * (g + da * da / (g + state.scale)));
  return next;
}

}  // namespace myriad
