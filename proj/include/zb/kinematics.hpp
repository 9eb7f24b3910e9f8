#pragma once

#include <stdexcept>

namespace zb::kinematics {

/// 2020 CODATA values, cgs-flavoured (cm, s, eV).
struct PhysicalConstants {
    static constexpr double electron_rest_energy_eV = 510998.95;
    static constexpr double planck_Js = 6.62607015e-34;
    static constexpr double light_speed_cm_s = 2.99792458e10;
    static constexpr double eV_to_J = 1.602176634e-19;
    static constexpr double rydberg_eV = 13.5056981;  // reference precision anchor
};

struct MasslessParticleError : std::domain_error {
    using std::domain_error::domain_error;
};

struct CollisionScenario {
    double beam_energy_eV = 0.0;
    double impact_parameter_cm = 0.0;  // transverse, b_perp
};

enum class Regime { PointLike, Extended, Marginal };

struct RegimeVerdict {
    double ratio = 0.0;  // probe time over T_Z
    Regime verdict = Regime::Marginal;
};

struct UncertaintyResult {
    double delta_t_s = 0.0;
    double ratio = 0.0;  // delta_t / T_Z
};

/// T = h / (mass energy), seconds. Throws MasslessParticleError for
/// non-positive mass energy (massless fermions have no such period).
double zitter_period(double mass_energy_eV);

/// T_Z of the electron, about 8.09e-21 s.
double electron_zitter_period();

/// lambda_C = c T_Z, cm.
double compton_wavelength_cm();

/// sqrt(1 - beta^2) = m_e c^2 / E for a beam of total energy E.
double gamma_inverse(double beam_energy_eV);

/// Impact parameter contracted along the motion: b_perp * sqrt(1 - beta^2).
double contracted_impact(double b_perp_cm, double beam_energy_eV);

/// Collision time tau = b_parallel / c (v = c substitution).
double collision_time(const CollisionScenario& s);

/// Energy-time uncertainty at unity: ratio = m_e c^2 / delta_w,
/// delta_t = ratio * T_Z.
UncertaintyResult uncertainty_time(double delta_w_eV);

/// Point-like when probe_time/T_Z < 1e-3, extended when > 1e3.
RegimeVerdict classify_regime(double probe_time_s);

const char* regime_name(Regime r);

}  // namespace zb::kinematics
