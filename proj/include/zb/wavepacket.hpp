#pragma once

#include <utility>
#include <vector>

#include "zb/dirac.hpp"

namespace zb {

/// One quadrature node of the momentum-space expansion: momentum, weight
/// (the discretized d^3p), energy and the positive/negative branch
/// amplitude spinors at that node.
struct MomentumMode {
    Vec3 p;
    double weight = 1.0;
    double W = 1.0;
    FourSpinor a;  // +W branch amplitude
    FourSpinor b;  // -W branch amplitude
};

struct GridSpec {
    int nodes_per_axis = 21;
    double cutoff_sigmas = 5.0;
};

/// Recipe for a Gaussian momentum-space packet. epsilon in [0,1] sets the
/// negative-branch admixture, delta its relative phase.
struct PacketSpec {
    Vec3 p0;
    double sigma = 0.01;
    double epsilon = 0.0;
    double delta = 0.0;
    SpinLabel spin = SpinLabel::Up;
    GridSpec grid;
};

struct PacketState {
    std::vector<MomentumMode> modes;
    double norm_report = 0.0;  // total norm before normalization
    PacketSpec spec;
};

/// Cartesian tensor grid centered on p0, extent +-cutoff*sigma per axis,
/// trapezoidal weights. A single-node grid degenerates to {p0, weight 1}.
std::vector<std::pair<Vec3, double>> build_grid(const PacketSpec& spec);

/// Gaussian-envelope packet realizing the momentum expansion: per node
///   a = sqrt(1-eps^2) g(p) u(p, spin),  b = eps e^{i delta} g(p) v(p)
/// with g(p) = exp(-|p-p0|^2 / 4 sigma^2), normalized so that
/// sum weight (a^+a + b^+b) = 1. The negative-branch spinor v is the
/// alpha_1-coupled partner of u (Negative branch, flipped spin label).
PacketState gaussian_packet(const PacketSpec& spec);

double total_norm(const PacketState& state);

/// Rescales amplitudes so the unit-norm invariant holds; records the
/// pre-scale norm in norm_report. Rejects zero-norm states.
PacketState normalize(PacketState state);

/// True iff max over modes of b^+b < 1e-24.
bool is_pure_positive(const PacketState& state);

}  // namespace zb
