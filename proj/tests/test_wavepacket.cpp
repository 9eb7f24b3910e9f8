#include <doctest.h>

#include <cmath>

#include "zb/wavepacket.hpp"

using namespace zb;

namespace {

PacketSpec single_node_spec(double epsilon, double delta = 0.0) {
    PacketSpec spec;
    spec.p0 = {0, 0, 0};
    spec.sigma = 0.01;
    spec.epsilon = epsilon;
    spec.delta = delta;
    spec.grid = {1, 5.0};
    return spec;
}

// Trapezoidal sum of the (2 pi)^{3/2}-normalized Gaussian on a tensor grid;
// separable, so the 3-D sum is the cube of the 1-D sum.
double gaussian_quadrature_1d(int nodes, double cutoff, double sigma) {
    const double half = cutoff * sigma;
    const double h = 2.0 * half / (nodes - 1);
    double sum = 0.0;
    for (int i = 0; i < nodes; ++i) {
        const double x = -half + i * h;
        const double w = (i == 0 || i == nodes - 1) ? 0.5 * h : h;
        sum += w * std::exp(-x * x / (2.0 * sigma * sigma)) /
               (std::sqrt(2.0 * M_PI) * sigma);
    }
    return sum;
}

}  // namespace

TEST_CASE("degenerate single-node grid") {
    auto grid = build_grid(single_node_spec(0.0));
    REQUIRE(grid.size() == 1);
    CHECK(grid[0].second == 1.0);
    CHECK(grid[0].first.norm() == 0.0);
}

TEST_CASE("grid symmetry under reflection through the center") {
    PacketSpec spec = single_node_spec(0.0);
    spec.p0 = {0.2, -0.1, 0.05};
    spec.grid.nodes_per_axis = 3;
    auto grid = build_grid(spec);
    REQUIRE(grid.size() == 27);
    for (const auto& [p, w] : grid) {
        const Vec3 mirror = 2.0 * spec.p0 - p;
        bool found = false;
        for (const auto& [q, wq] : grid)
            if ((q - mirror).norm() < 1e-14 && std::abs(wq - w) < 1e-18) found = true;
        CHECK(found);
    }
}

TEST_CASE("grid rejects bad specs") {
    PacketSpec spec = single_node_spec(0.0);
    spec.sigma = 0.0;
    CHECK_THROWS_AS(build_grid(spec), std::invalid_argument);
    spec = single_node_spec(0.0);
    spec.grid.nodes_per_axis = 0;
    CHECK_THROWS_AS(build_grid(spec), std::invalid_argument);
}

TEST_CASE("default grid integrates a normalized Gaussian to fine-grid accuracy") {
    const double sigma = 0.01;
    PacketSpec spec = single_node_spec(0.0);
    spec.sigma = sigma;
    spec.grid = {21, 5.0};

    double coarse = 0.0;
    for (const auto& [p, w] : build_grid(spec))
        coarse += w * std::exp(-p.norm2() / (2.0 * sigma * sigma)) /
                  (std::pow(2.0 * M_PI, 1.5) * sigma * sigma * sigma);

    const double fine1d = gaussian_quadrature_1d(641, 5.0, sigma);
    const double fine = fine1d * fine1d * fine1d;
    CHECK(std::abs(coarse - fine) < 1e-6);
}

TEST_CASE("pure-branch packets") {
    const PacketState pos = gaussian_packet(single_node_spec(0.0));
    for (const auto& m : pos.modes) CHECK(m.b.norm2() == 0.0);
    CHECK(is_pure_positive(pos));

    const PacketState neg = gaussian_packet(single_node_spec(1.0));
    for (const auto& m : neg.modes) CHECK(m.a.norm2() == 0.0);
    CHECK_FALSE(is_pure_positive(neg));
}

TEST_CASE("rest-frame mixed single node hits the canonical amplitude pair") {
    const PacketState state = gaussian_packet(single_node_spec(1.0 / std::sqrt(2.0)));
    REQUIRE(state.modes.size() == 1);
    const MomentumMode& m = state.modes[0];
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(m.a[0] - inv_sqrt2) < 1e-12);
    CHECK(std::abs(m.a[1]) + std::abs(m.a[2]) + std::abs(m.a[3]) < 1e-15);
    CHECK(std::abs(m.b[3] - inv_sqrt2) < 1e-12);
    CHECK(std::abs(m.b[0]) + std::abs(m.b[1]) + std::abs(m.b[2]) < 1e-15);
    CHECK(total_norm(state) == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("normalization invariant after building") {
    PacketSpec spec = single_node_spec(0.4, 0.3);
    spec.p0 = {0.1, 0.0, -0.05};
    spec.grid = {7, 4.0};
    const PacketState state = gaussian_packet(spec);
    CHECK(std::abs(total_norm(state) - 1.0) < 1e-12);
}

TEST_CASE("branch purity: amplitudes live on their eigenspaces") {
    PacketSpec spec = single_node_spec(0.5, 1.1);
    spec.p0 = {0.3, -0.2, 0.1};
    spec.sigma = 0.05;
    spec.grid = {5, 3.0};
    const PacketState state = gaussian_packet(spec);
    for (const auto& m : state.modes) {
        // H a = +W a and H b = -W b up to rounding
        const FourSpinor ra = apply(hamiltonian(m.p), m.a) - (cplx(m.W) * m.a);
        const FourSpinor rb = apply(hamiltonian(m.p), m.b) + (cplx(m.W) * m.b);
        CHECK(ra.norm() < 1e-10);
        CHECK(rb.norm() < 1e-10);
    }
}

TEST_CASE("normalize: idempotence, scale invariance, zero norm") {
    PacketSpec spec = single_node_spec(0.6);
    spec.grid = {3, 3.0};
    PacketState state = gaussian_packet(spec);

    const PacketState again = normalize(state);
    for (size_t i = 0; i < state.modes.size(); ++i)
        for (int k = 0; k < 4; ++k) {
            const double scale = 1.0 + std::abs(state.modes[i].a[k]) + std::abs(state.modes[i].b[k]);
            CHECK(std::abs(again.modes[i].a[k] - state.modes[i].a[k]) < 1e-15 * scale);
            CHECK(std::abs(again.modes[i].b[k] - state.modes[i].b[k]) < 1e-15 * scale);
        }

    PacketState doubled = state;
    for (auto& m : doubled.modes) {
        m.a = cplx(2.0) * m.a;
        m.b = cplx(2.0) * m.b;
    }
    const PacketState rescaled = normalize(doubled);
    for (size_t i = 0; i < state.modes.size(); ++i)
        for (int k = 0; k < 4; ++k)
            CHECK(std::abs(rescaled.modes[i].a[k] - state.modes[i].a[k]) <
                  1e-14 * (1.0 + std::abs(state.modes[i].a[k])));

    PacketState empty = state;
    for (auto& m : empty.modes) {
        m.a = FourSpinor{};
        m.b = FourSpinor{};
    }
    CHECK_THROWS_AS(normalize(empty), std::domain_error);
}

TEST_CASE("epsilon validation and the purity threshold") {
    PacketSpec bad = single_node_spec(1.5);
    CHECK_THROWS_AS(gaussian_packet(bad), std::invalid_argument);

    CHECK_FALSE(is_pure_positive(gaussian_packet(single_node_spec(0.5))));
    CHECK(is_pure_positive(gaussian_packet(single_node_spec(1e-13))));
}

TEST_CASE("grid refinement drives the pre-normalization norm to its limit") {
    PacketSpec spec = single_node_spec(0.3);
    spec.sigma = 0.05;
    double prev_drift = -1.0;
    for (int nodes : {9, 17, 33}) {
        spec.grid.nodes_per_axis = nodes;
        const PacketState state = gaussian_packet(spec);
        const double drift = std::abs(state.norm_report /
                                          (std::pow(2.0 * M_PI, 1.5) * std::pow(spec.sigma, 3)) -
                                      1.0);
        if (prev_drift >= 0.0) CHECK(drift <= prev_drift + 1e-9);
        prev_drift = drift;
    }
}
