#pragma once

#include <span>
#include <utility>
#include <vector>

#include "octlab/element.hpp"
#include "octlab/report.hpp"

namespace octlab {

enum class TransformKind { Active, Passive };

// One transformation onto the unit sphere:
//   active   x -> exp(theta * t * ln|x - a|)
//   passive  x -> exp(theta * t * (x - a) * (pi/2 + 2*pi*N))
struct TransformSpec {
    TransformKind kind = TransformKind::Passive;
    Element theta;
    double t = 0.0;
    double a = 0.0;
    int branch = 0;  // N, passive only

    TransformSpec(TransformKind kind, Element theta, double t, double a, int branch = 0);
};

Element eval_transform(const TransformSpec& s, double x);

// Active strength matching the passive one at a single point x:
//   t_a = t_p * (x - a)/ln|x - a| * (pi/2 + 2*pi*N)
double duality_match(double t_p, double x, double a, int branch);

// Explicit parenthesization over factor indices; leaves hold indices.
struct BracketTree {
    struct Node {
        int leaf = -1;  // >= 0: factor index, children unused
        int left = -1;
        int right = -1;
    };
    std::vector<Node> nodes;
    int root = -1;

    static BracketTree left_fold(int count);
    void validate(int count) const;  // every factor index appears exactly once
};

struct WaveSpec {
    TablePtr table;
    std::vector<TransformSpec> factors;
    BracketTree bracketing;
};

Element eval_wave(const WaveSpec& w, double x);

// True iff every sampled value lies in span{1, axis} for one unit
// imaginary axis; the detected axis is written to *axis when nonnull.
bool complex_confined(const WaveSpec& w, std::span<const double> xs, double tol,
                      Element* axis = nullptr);

enum class SymmetryClass { U1, SU2, G2Type };
const char* to_string(SymmetryClass c);

struct AxisSpec {
    Element theta;  // unit imaginary
    double d = 0.0;
};

SymmetryClass classify_axes(std::span<const AxisSpec> specs, double tol = 1e-10);

// Evaluation grid for the finite-difference residuals: `points` samples of
// [center-half_width, center+half_width] minus balls of radius
// `pole_exclusion` around the listed poles.
struct GridSpec {
    double center = 0.0;
    double half_width = 0.5;
    int points = 101;
    double h = 1e-5;
    double pole_exclusion = 1e-2;
};

struct EigenResult {
    explicit EigenResult(Element theta) : theta_tilde(std::move(theta)) {}

    Element theta_tilde;
    double d_tilde = 0.0;  // the real eigenvalue
    double residual_analytic = 0.0;
    double residual_fd = 0.0;
    SymmetryClass symmetry_class = SymmetryClass::U1;
    bool degenerate = false;              // collapsed merge or zero derivative image
    double reconstruction_residual = 0.0; // |exp(theta~ d~) - factor product|
    bool axis_in_derivation_image = false;
    double axis_image_residual = 0.0;
    bool su3_stabilized = false;
};

struct ParticleSpec {
    double t = 1.0;
    int m = 0;     // branch count M >= 0
    int sign = 1;  // +1 or -1 in (1/2 +- 2M)
};

// Eigenvalue of the field-sum operator -theta d/dx - sum t_i/(x - a_i) on
// exp(theta*(m x + sum t_i ln|x-a_i|)) with m = pi t (1/2 +- 2M), checked
// analytically and by central differences.
EigenResult complex_solution(const TablePtr& table, const std::vector<std::pair<double, double>>& fields,
                             const ParticleSpec& particle, GridSpec grid = {.h = 1e-4});

// True iff multiplying the wave by the constant phase exp(theta*alpha)
// leaves the eigenvalue unchanged exactly and both residuals unchanged up
// to difference-quotient rounding.
bool global_phase_check(const TablePtr& table, const std::vector<std::pair<double, double>>& fields,
                        const ParticleSpec& particle, double alpha, GridSpec grid = {.h = 1e-4},
                        double tol = 1e-10);

struct MergeResult {
    Element theta;
    double d = 0.0;
    bool collapsed = false;  // product was 1: d = 0, axis unspecified
};

// theta~, d~ with exp(theta~ d~) = exp(theta1 d1) exp(theta2 d2),
// principal branch.
MergeResult quaternion_merge(const AxisSpec& s1, const AxisSpec& s2);

// Wave exp(theta~ d~ (x-a)) from same-pole factors, merged left to right;
// eigen relation for -theta~ d/dx checked on the grid.
EigenResult local_solution(std::span<const AxisSpec> specs, double a, GridSpec grid = {});

// Same, but each axis first passes through the derivation map of (u, v).
// The factor product folds left unless an explicit bracketing is given.
EigenResult octonion_solution(const Element& u, const Element& v, std::span<const AxisSpec> specs,
                              double a, GridSpec grid = {},
                              const BracketTree* bracketing = nullptr);

}  // namespace octlab
