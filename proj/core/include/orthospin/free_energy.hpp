#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orthospin/simplex_optimizer.hpp"
#include "orthospin/spectra.hpp"

namespace orthospin {

struct SimplexPoint {
    std::vector<double> x;
    std::vector<double> y;
};

// ½[(L1+L2)Σx² − L2Σy²] − Σ x log x on Δ*_θ.
double phi(int theta, double L1, double L2, const SimplexPoint& p);

// max over y₁ ∈ [0, d] of −(L2/2)y₁² + |h|y₁, with the arg-max interval.
struct InnerY {
    double value;
    double y_lo;
    double y_hi;
};
InnerY inner_y(double L2, double h, double d);

struct Maximizer {
    SimplexPoint point;  // y holds y_lo
    double y1_lo = 0.0;
    double y1_hi = 0.0;  // differs from y1_lo only when the y-optimum is an interval
    double value = 0.0;
};

struct MaximizeResult {
    std::vector<Maximizer> maximizers;
    double value = 0.0;
};

// Global maximum of φ + |h|y₁ over Δ*_θ. Throws NotProven for θ ≥ 4 with L2 < 0.
MaximizeResult maximize_phi(int theta, double L1, double L2, double h = 0.0,
                            const SimplexOptions& options = {});

struct FreeEnergy {
    double value;        // max φ in canonical coordinates
    double shift;        // per-edge constant from convert_parameters
    double model_value;  // value − shift/2, the free energy of the model Hamiltonian
    MaximizeResult max;
};

FreeEnergy free_energy(int theta, const ModelParams& params, const SimplexOptions& options = {});

double beta_c(int theta);
double beta_of_xstar(int theta, double x);

double field_free_energy(int theta, double L1, double L2, double h, const SimplexOptions& options = {});

struct OneSided {
    double y1_up;
    double y1_down;
};
OneSided one_sided_derivatives(int theta, double L1, double L2, const SimplexOptions& options = {});

enum class Phase { Disordered, Ising, XY, Nematic, Ferromagnetic, FourthPhase, Ordered, Boundary };

std::string to_string(Phase p);

struct PhaseResult {
    Phase phase = Phase::Disordered;
    bool conjectured = false;
    MaximizeResult max;
};

PhaseResult classify_phase(int theta, const ModelParams& params, const SimplexOptions& options = {});

// True iff the symmetric point maximises φ for spin 1 at (J1, J2).
bool in_disordered_region(double J1, double J2, const SimplexOptions& options = {});

// Boundary of the spin-1 disordered region inside J1 ≥ J2, as (J1, J2) points
// with J2 increasing from j2_min up to log 16.
std::vector<std::pair<double, double>> trace_curve_C(int resolution, double j2_min = -1.5,
                                                     const SimplexOptions& options = {});

double quadratic_alpha(double J1, double J2);

// φ and its gradient in the (x1, x2) coordinates used for spin 1 with J1 ≥ J2.
double phi_j(double J1, double J2, double x1, double x2);
std::pair<double, double> phi_j_gradient(double J1, double J2, double x1, double x2);

}  // namespace orthospin
