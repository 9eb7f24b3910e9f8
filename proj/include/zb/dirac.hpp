#pragma once

#include "zb/linalg.hpp"

namespace zb {

// Internal unit system throughout: m_e = c = h = 1 ("electron units").
// Energies in m_e c^2, momenta in m_e c, times in T_Z = h/m_e c^2,
// lengths in the Compton wavelength lambda_C = h/m_e c.

enum class EnergyBranch { Positive, Negative };
enum class SpinLabel { Up, Down };

inline SpinLabel flipped(SpinLabel s) { return s == SpinLabel::Up ? SpinLabel::Down : SpinLabel::Up; }

struct DiracMatrices {
    Matrix4c alpha1, alpha2, alpha3, beta;
};

/// Alpha and beta matrices in the standard (Dirac) representation:
/// alpha_i = [[0, sigma_i], [sigma_i, 0]], beta = diag(1, 1, -1, -1).
const DiracMatrices& dirac_matrices();

/// alpha matrix for axis 0..2.
const Matrix4c& alpha(int axis);
const Matrix4c& beta();

/// Free-particle energy W = sqrt(1 + |p|^2), in m_e c^2.
inline double energy(const Vec3& p) { return std::sqrt(1.0 + p.norm2()); }

/// Free Dirac Hamiltonian H(p) = alpha . p + beta; Hermitian with
/// eigenvalues {+W, +W, -W, -W}.
Matrix4c hamiltonian(const Vec3& p);

/// Unit-norm eigenvector of H(p) on the requested branch. The four spinors
/// at fixed p are mutually orthonormal; the phase is fixed by making the
/// largest-magnitude component real and positive (lowest index on ties).
FourSpinor plane_wave_spinor(const Vec3& p, EnergyBranch branch, SpinLabel spin);

}  // namespace zb
