#include "zb/dirac.hpp"

#include <stdexcept>

namespace zb {

namespace {

DiracMatrices build_matrices() {
    const cplx i(0.0, 1.0);
    DiracMatrices d;
    // sigma_x in the off-diagonal blocks
    d.alpha1(0, 3) = 1.0;
    d.alpha1(1, 2) = 1.0;
    d.alpha1(2, 1) = 1.0;
    d.alpha1(3, 0) = 1.0;
    // sigma_y
    d.alpha2(0, 3) = -i;
    d.alpha2(1, 2) = i;
    d.alpha2(2, 1) = -i;
    d.alpha2(3, 0) = i;
    // sigma_z
    d.alpha3(0, 2) = 1.0;
    d.alpha3(1, 3) = -1.0;
    d.alpha3(2, 0) = 1.0;
    d.alpha3(3, 1) = -1.0;

    d.beta(0, 0) = 1.0;
    d.beta(1, 1) = 1.0;
    d.beta(2, 2) = -1.0;
    d.beta(3, 3) = -1.0;
    return d;
}

// Largest-magnitude component made real positive; ties broken by lowest index.
FourSpinor fix_phase(FourSpinor s) {
    int best = 0;
    double best_mag = std::abs(s[0]);
    for (int k = 1; k < 4; ++k) {
        if (std::abs(s[k]) > best_mag + 1e-14) {
            best = k;
            best_mag = std::abs(s[k]);
        }
    }
    if (best_mag == 0.0) return s;
    const cplx phase = std::conj(s[best]) / best_mag;
    return phase * s;
}

}  // namespace

const DiracMatrices& dirac_matrices() {
    static const DiracMatrices d = build_matrices();
    return d;
}

const Matrix4c& alpha(int axis) {
    const DiracMatrices& d = dirac_matrices();
    switch (axis) {
        case 0: return d.alpha1;
        case 1: return d.alpha2;
        case 2: return d.alpha3;
        default: throw std::invalid_argument("alpha: axis must be 0, 1 or 2");
    }
}

const Matrix4c& beta() { return dirac_matrices().beta; }

Matrix4c hamiltonian(const Vec3& p) {
    const DiracMatrices& d = dirac_matrices();
    return (cplx(p.x) * d.alpha1) + (cplx(p.y) * d.alpha2) + (cplx(p.z) * d.alpha3) + d.beta;
}

FourSpinor plane_wave_spinor(const Vec3& p, EnergyBranch branch, SpinLabel spin) {
    const double w = energy(p);
    const cplx i(0.0, 1.0);

    // sigma . p applied to the Pauli spinor chi_s
    cplx sp0, sp1;
    if (spin == SpinLabel::Up) {
        sp0 = p.z;
        sp1 = p.x + i * p.y;
    } else {
        sp0 = p.x - i * p.y;
        sp1 = -p.z;
    }
    const double scale = 1.0 / (w + 1.0);
    const double nrm = std::sqrt((w + 1.0) / (2.0 * w));

    FourSpinor s;
    if (branch == EnergyBranch::Positive) {
        // (chi_s, sigma.p/(W+1) chi_s)
        s[0] = (spin == SpinLabel::Up) ? 1.0 : 0.0;
        s[1] = (spin == SpinLabel::Down) ? 1.0 : 0.0;
        s[2] = scale * sp0;
        s[3] = scale * sp1;
    } else {
        // (-sigma.p/(W+1) chi_s, chi_s)
        s[0] = -scale * sp0;
        s[1] = -scale * sp1;
        s[2] = (spin == SpinLabel::Up) ? 1.0 : 0.0;
        s[3] = (spin == SpinLabel::Down) ? 1.0 : 0.0;
    }
    return fix_phase(nrm * s);
}

}  // namespace zb
