#pragma once

#include <array>
#include <string>

#include "cqc/errors.hpp"

namespace cqc {

// One row of the rectangular matrix-multiplication exponent table:
//   gamma, omega(gamma) are the published knots,
//   y     = 1 - (1-gamma)/omega(gamma)   (the aspect the knot certifies),
//   step  = 1 - 2/omega(gamma)           (upper bound on rho at aspect y),
//   line  = value of the published linear upper bound at y.
struct RhoRow {
    double gamma;
    double omega;
    double y;
    double step;
    double line;
};

struct RhoTable {
    static constexpr int kRows = 63;
    std::array<RhoRow, kRows> rows;

    double beta0() const { return rows[0].y; }
    // Exponent for square matrices (aspect 1): 1 - 2/omega(1).
    double rho_square() const { return rows[kRows - 1].step; }
};

// Linear bound rho(1-y) <= B - A*y, equivalently value(z) = B - A*(1-z) at
// aspect z in [beta0, 1].
struct LineBound {
    double slope = 0.0;     // A
    double intercept = 0.0; // B = value at z = 1

    double value_at(double z) const { return intercept - slope * (1.0 - z); }
};

// Loads the embedded table and revalidates the derived columns; throws
// table_corruption_error if the recomputed y/step columns drift by more
// than 1e-7 from the embedded values.
const RhoTable& load_table();

// Piecewise-linear interpolation of omega at aspect z within the knot hull.
double omega_interp(double z);

// Step-function upper bound on rho at aspect z: the row value at the largest
// knot y_i <= z (rho is monotone, so this dominates rho on [y_i, y_{i+1})).
double rho_step(double z);

// Recovers (A, B) from the table's own line column (linear solve over the two
// pinned rows), then verifies it reproduces the whole column and dominates
// the step function.
LineBound fit_line(const RhoTable& table);

// Cached default-fitted line over the embedded table.
const LineBound& default_line();

// Round bound for multiplying a k x n by an n x n matrix: n^B * (k/n)^A.
double rm_cost(double n, double k);

// The delta where the two detectors' predicted costs cross, solving
// 2 + delta*(rho-1) = A; numerically this sits at ~1.82408.
double delta_crossing(const LineBound& line, double rho);

constexpr double kDeltaSplit = 1.82408;

struct PredictParams {
    double n = 0;
    int h = 3;
    double t = 0;
    double x = 0;
    // Bilinear exponent sigma of the scheme actually running; <= 0 means use
    // the table's rho for square matrices.
    double sigma = 0.0;
    bool directed = false;
};

// Closed-form round predictions. Tags:
//   mm_batch     n^(rho-2) * k^2 * s^(1-rho)        (use mm_batch_rounds)
//   find_cycle   n^rho * x^-(2 + delta*(rho-1))
//   fvic         n^B * x^-A
//   main         n^B / (t^(A/(h-1.82408)) + 1)
//   main_case1   n^B / (t^(A/(2-1.82408)) + 1)      (the proof's other reading)
//   q_basic      n^(3*rho/4)
//   q_fast       (n/(t^2+1))^(3*rho/4)
double predicted_rounds(const std::string& algorithm, const PredictParams& p);

double mm_batch_rounds(double n, double k, double s, double rho);

// Which detector the cost model expects to win on this instance.
std::string predicted_faster_side(const PredictParams& p);

// Effective rho for a bilinear scheme exponent sigma: 1 - 2/sigma.
double rho_of_sigma(double sigma);

} // namespace cqc
