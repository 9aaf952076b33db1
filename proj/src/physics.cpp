#include "qgc/physics.hpp"

#include "qgc/error.hpp"

#include <cmath>
#include <sstream>
#include <string>

namespace qgc {

namespace {

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    std::ostringstream msg;
    msg << what << " must be finite and > 0, got " << v;
    throw Error(ErrorKind::InvalidParams, msg.str());
  }
}

}  // namespace

void validate(const PhysicalParams& p) {
  require_positive(p.hbar, "hbar");
  require_positive(p.delta_x, "delta_x");
  require_positive(p.mass, "mass");
  require_positive(p.hbond_energy, "hbond_energy");
}

double momentum_uncertainty(const PhysicalParams& p) {
  validate(p);
  return p.hbar / p.delta_x;
}

double kinetic_energy(double dp, double mass) {
  if (!(dp >= 0.0) || !std::isfinite(dp)) {
    std::ostringstream msg;
    msg << "momentum must be finite and >= 0, got " << dp;
    throw Error(ErrorKind::InvalidParams, msg.str());
  }
  require_positive(mass, "mass");
  return dp * dp / (2.0 * mass);
}

ScaleComparison scale_comparison(const PhysicalParams& p, double scale_factor) {
  validate(p);
  require_positive(scale_factor, "scale_factor");

  PhysicalParams scaled = p;
  scaled.delta_x = p.delta_x * scale_factor;

  ScaleComparison out;
  out.scale_factor = scale_factor;
  out.momentum_base = momentum_uncertainty(p);
  out.energy_base = kinetic_energy(out.momentum_base, p.mass);
  out.momentum_scaled = momentum_uncertainty(scaled);
  out.energy_scaled = kinetic_energy(out.momentum_scaled, p.mass);
  out.energy_ratio = 1.0 / (scale_factor * scale_factor);
  out.base_to_hbond = out.energy_base / p.hbond_energy;
  out.scaled_to_hbond = out.energy_scaled / p.hbond_energy;
  return out;
}

}  // namespace qgc
