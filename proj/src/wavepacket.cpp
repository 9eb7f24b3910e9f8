#include "zb/wavepacket.hpp"

#include <cmath>
#include <stdexcept>

namespace zb {

namespace {

void validate(const PacketSpec& spec) {
    if (!(spec.sigma > 0.0)) throw std::invalid_argument("PacketSpec: sigma must be positive");
    if (spec.grid.nodes_per_axis < 1) throw std::invalid_argument("PacketSpec: grid nodes must be >= 1");
    if (!(spec.grid.cutoff_sigmas > 0.0)) throw std::invalid_argument("PacketSpec: grid cutoff must be positive");
    if (spec.epsilon < 0.0 || spec.epsilon > 1.0)
        throw std::invalid_argument("PacketSpec: epsilon must lie in [0, 1]");
}

}  // namespace

std::vector<std::pair<Vec3, double>> build_grid(const PacketSpec& spec) {
    validate(spec);
    const int n = spec.grid.nodes_per_axis;
    if (n == 1) return {{spec.p0, 1.0}};

    const double half = spec.grid.cutoff_sigmas * spec.sigma;
    const double h = 2.0 * half / (n - 1);

    std::vector<double> offset(n), w1(n);
    for (int i = 0; i < n; ++i) {
        offset[i] = -half + i * h;
        w1[i] = (i == 0 || i == n - 1) ? 0.5 * h : h;
    }

    std::vector<std::pair<Vec3, double>> grid;
    grid.reserve(static_cast<size_t>(n) * n * n);
    for (int ix = 0; ix < n; ++ix)
        for (int iy = 0; iy < n; ++iy)
            for (int iz = 0; iz < n; ++iz) {
                Vec3 p{spec.p0.x + offset[ix], spec.p0.y + offset[iy], spec.p0.z + offset[iz]};
                grid.emplace_back(p, w1[ix] * w1[iy] * w1[iz]);
            }
    return grid;
}

PacketState gaussian_packet(const PacketSpec& spec) {
    validate(spec);
    const double amp_pos = std::sqrt(1.0 - spec.epsilon * spec.epsilon);
    const cplx amp_neg = spec.epsilon * std::exp(cplx(0.0, spec.delta));

    PacketState state;
    state.spec = spec;
    for (const auto& [p, weight] : build_grid(spec)) {
        const Vec3 q = p - spec.p0;
        const double g = std::exp(-q.norm2() / (4.0 * spec.sigma * spec.sigma));
        MomentumMode mode;
        mode.p = p;
        mode.weight = weight;
        mode.W = energy(p);
        if (amp_pos != 0.0)
            mode.a = cplx(amp_pos * g) * plane_wave_spinor(p, EnergyBranch::Positive, spec.spin);
        if (spec.epsilon != 0.0)
            mode.b = (amp_neg * g) * plane_wave_spinor(p, EnergyBranch::Negative, flipped(spec.spin));
        state.modes.push_back(mode);
    }
    return normalize(std::move(state));
}

double total_norm(const PacketState& state) {
    double s = 0.0;
    for (const auto& m : state.modes) s += m.weight * (m.a.norm2() + m.b.norm2());
    return s;
}

PacketState normalize(PacketState state) {
    const double norm = total_norm(state);
    if (!(norm > 0.0)) throw std::domain_error("normalize: state has zero norm");
    state.norm_report = norm;
    const cplx scale = 1.0 / std::sqrt(norm);
    for (auto& m : state.modes) {
        m.a = scale * m.a;
        m.b = scale * m.b;
    }
    return state;
}

bool is_pure_positive(const PacketState& state) {
    double max_b = 0.0;
    for (const auto& m : state.modes) max_b = std::max(max_b, m.b.norm2());
    return max_b < 1e-24;
}

}  // namespace zb
