#include "zb/kinematics.hpp"

namespace zb::kinematics {

using PC = PhysicalConstants;

double zitter_period(double mass_energy_eV) {
    if (!(mass_energy_eV > 0.0))
        throw MasslessParticleError("zitter_period: mass energy must be positive");
    return PC::planck_Js / (mass_energy_eV * PC::eV_to_J);
}

double electron_zitter_period() { return zitter_period(PC::electron_rest_energy_eV); }

double compton_wavelength_cm() { return PC::light_speed_cm_s * electron_zitter_period(); }

double gamma_inverse(double beam_energy_eV) {
    if (beam_energy_eV < PC::electron_rest_energy_eV)
        throw std::invalid_argument("gamma_inverse: beam energy below electron rest energy");
    return PC::electron_rest_energy_eV / beam_energy_eV;
}

double contracted_impact(double b_perp_cm, double beam_energy_eV) {
    if (!(b_perp_cm > 0.0))
        throw std::invalid_argument("contracted_impact: impact parameter must be positive");
    return b_perp_cm * gamma_inverse(beam_energy_eV);
}

double collision_time(const CollisionScenario& s) {
    return contracted_impact(s.impact_parameter_cm, s.beam_energy_eV) / PC::light_speed_cm_s;
}

UncertaintyResult uncertainty_time(double delta_w_eV) {
    if (!(delta_w_eV > 0.0))
        throw std::invalid_argument("uncertainty_time: delta_w must be positive");
    UncertaintyResult r;
    r.ratio = PC::electron_rest_energy_eV / delta_w_eV;
    r.delta_t_s = r.ratio * electron_zitter_period();
    return r;
}

RegimeVerdict classify_regime(double probe_time_s) {
    if (!(probe_time_s > 0.0))
        throw std::invalid_argument("classify_regime: probe time must be positive");
    RegimeVerdict v;
    v.ratio = probe_time_s / electron_zitter_period();
    if (v.ratio < 1e-3) v.verdict = Regime::PointLike;
    else if (v.ratio > 1e3) v.verdict = Regime::Extended;
    else v.verdict = Regime::Marginal;
    return v;
}

const char* regime_name(Regime r) {
    switch (r) {
        case Regime::PointLike: return "point-like";
        case Regime::Extended: return "extended";
        default: return "marginal";
    }
}

}  // namespace zb::kinematics
