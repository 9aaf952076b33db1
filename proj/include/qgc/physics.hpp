#pragma once

// Uncertainty-principle momentum and kinetic-energy estimates in CGS units.

namespace qgc {

/// CGS inputs. Defaults: reduced Planck constant, nucleotide length scale,
/// hydrogen-atom mass, and hydrogen-bond energy in water.
struct PhysicalParams {
  double hbar = 1.05e-27;         // erg s
  double delta_x = 1.7e-8;        // cm
  double mass = 1.67e-24;         // g
  double hbond_energy = 7e-14;    // erg
};

/// Throws InvalidParams unless every field is finite and strictly positive.
void validate(const PhysicalParams& p);

/// hbar / delta_x, in g cm / s.
double momentum_uncertainty(const PhysicalParams& p);

/// dp^2 / (2 mass), in erg. dp must be finite and non-negative.
double kinetic_energy(double dp, double mass);

struct ScaleComparison {
  double scale_factor = 1.0;
  double momentum_base = 0.0;     // at delta_x
  double energy_base = 0.0;
  double momentum_scaled = 0.0;   // at scale_factor * delta_x
  double energy_scaled = 0.0;
  double energy_ratio = 1.0;      // energy_scaled / energy_base = scale_factor^-2
  double base_to_hbond = 0.0;
  double scaled_to_hbond = 0.0;
};

ScaleComparison scale_comparison(const PhysicalParams& p, double scale_factor);

namespace units {
inline constexpr double kEvPerErg = 6.241509074460763e11;
inline constexpr double kJoulePerErg = 1e-7;
inline constexpr double kSiMomentumPerCgs = 1e-5;  // kg m/s per g cm/s
}  // namespace units

}  // namespace qgc
