#pragma once

#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "pcs/linalg.hpp"

// Gauss-Legendre rules, panelised 1D integration with node-doubling error
// estimates, and the reproducible-budget structs shared by all integrators.

namespace pcs {

struct QuadratureSpec {
    int nodes_per_axis = 64;
    double cutoff_sigmas = 8.0;
    int subdivision_depth = 18;
    double target_tol = 1e-9;
};

struct MCConfig {
    uint64_t seed = 1;
    std::size_t samples = 1000000;
    double proposal_width_momentum = 0.0;  // 0 = pick from the rep
    double proposal_width_position = 0.0;
};

// Raised when an integration budget cannot reach the requested tolerance.
struct ToleranceError : std::runtime_error {
    double achieved;
    ToleranceError(const std::string& what, double est)
        : std::runtime_error(what), achieved(est) {}
};

// Nodes and weights on [-1,1]; cached per n.
void gauss_legendre(int n, std::span<double> nodes, std::span<double> weights);
const std::vector<double>& gl_nodes(int n);
const std::vector<double>& gl_weights(int n);

// One GL panel per subinterval of [a,b]; edges must be increasing.
struct PanelRule {
    std::vector<double> x, w;
    void add_panel(double a, double b, int n);
};

// Uniform subdivision of [a,b] into `panels` panels, n nodes each.
PanelRule uniform_panels(double a, double b, int panels, int n);

// Panels geometrically graded toward b: widths halve until `min_width`.
PanelRule graded_panels_toward(double a, double b, double min_width, int n);

struct Integral {
    double value = 0;
    double error = 0;  // node-doubling estimate
};

// Integrate f over the rule and attach a half-resolution error estimate.
Integral integrate_1d(const std::function<double(double)>& f, const PanelRule& full,
                      const PanelRule& half);

struct IntegralC {
    cplx value{0, 0};
    double error = 0;
};

int max_threads();

}  // namespace pcs
