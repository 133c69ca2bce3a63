#include "cqc/rhobound.hpp"

#include <cmath>

#include "cqc/cycle_oracle.hpp"

namespace cqc {

namespace {

// Published (gamma, omega, y, step, line) knots, rows 0..62. The y and step
// columns are redundant (recomputed on load as an integrity check); the line
// column pins the fitted bound.
constexpr std::array<RhoRow, RhoTable::kRows> kTableRows = {{
    {0.32132067, 2.00000000, 0.66066033, 0.00000000, 0.00000000},
    {0.32132087, 2.00000000, 0.66066043, 0.00000000, 0.00000005},
    {0.32133367, 2.00000000, 0.66066683, 0.00000000, 0.00000300},
    {0.32174167, 2.00000470, 0.66087163, 0.00000235, 0.00009756},
    {0.32826999, 2.00008004, 0.66414843, 0.00004002, 0.00161048},
    {0.35386722, 2.00199552, 0.67725563, 0.00099677, 0.00766215},
    {0.40379059, 2.01062109, 0.70347003, 0.00528249, 0.01976549},
    {0.45266218, 2.02481060, 0.72968443, 0.01225329, 0.03186884},
    {0.50117496, 2.04351766, 0.75589883, 0.02129546, 0.04397218},
    {0.54983423, 2.06605377, 0.78211323, 0.03197098, 0.05607553},
    {0.59900185, 2.09210204, 0.80832763, 0.04402368, 0.06817887},
    {0.64903513, 2.12117239, 0.83454203, 0.05712520, 0.08028221},
    {0.70018485, 2.15317060, 0.86075643, 0.07113723, 0.09238556},
    {0.75268386, 2.18807362, 0.88697083, 0.08595397, 0.10448890},
    {0.77950259, 2.20669601, 0.90007803, 0.09366764, 0.11054058},
    {0.80676694, 2.22580864, 0.91318523, 0.10145016, 0.11659225},
    {0.83446870, 2.24578438, 0.92629243, 0.10944255, 0.12264392},
    {0.86265499, 2.26640564, 0.93939963, 0.11754544, 0.12869559},
    {0.89134672, 2.28776663, 0.95250683, 0.12578496, 0.13474726},
    {0.90589165, 2.29871387, 0.95906043, 0.12994826, 0.13777310},
    {0.92057056, 2.30993766, 0.96561403, 0.13417577, 0.14079894},
    {0.93539352, 2.32127159, 0.97216763, 0.13840328, 0.14382477},
    {0.94285968, 2.32698037, 0.97544443, 0.14051703, 0.14533769},
    {0.95036252, 2.33272358, 0.97872123, 0.14263309, 0.14685061},
    {0.95790024, 2.33861989, 0.98199803, 0.14479475, 0.14836353},
    {0.96547617, 2.34454608, 0.98527483, 0.14695641, 0.14987644},
    {0.97309059, 2.35050238, 0.98855163, 0.14911807, 0.15138936},
    {0.97691232, 2.35349190, 0.99019003, 0.15019890, 0.15214582},
    {0.98074379, 2.35648902, 0.99182843, 0.15127973, 0.15290228},
    {0.98458503, 2.35949380, 0.99346683, 0.15236056, 0.15365874},
    {0.98650933, 2.36099906, 0.99428603, 0.15290098, 0.15403697},
    {0.98843608, 2.36250624, 0.99510523, 0.15344139, 0.15441520},
    {0.99036530, 2.36401535, 0.99592443, 0.15398180, 0.15479343},
    {0.99229698, 2.36552639, 0.99674363, 0.15452222, 0.15517166},
    {0.99326375, 2.36628263, 0.99715323, 0.15479243, 0.15536077},
    {0.99423113, 2.36703936, 0.99756283, 0.15506263, 0.15554989},
    {0.99519913, 2.36779657, 0.99797243, 0.15533284, 0.15573900},
    {0.99616776, 2.36855427, 0.99838203, 0.15560305, 0.15592812},
    {0.99665230, 2.36893330, 0.99858683, 0.15573815, 0.15602267},
    {0.99713700, 2.36931245, 0.99879163, 0.15587326, 0.15611723},
    {0.99762186, 2.36969172, 0.99899643, 0.15600836, 0.15621179},
    {0.99810687, 2.37007112, 0.99920123, 0.15614346, 0.15630635},
    {0.99834943, 2.37026086, 0.99930363, 0.15621102, 0.15635362},
    {0.99859203, 2.37045063, 0.99940603, 0.15627857, 0.15640090},
    {0.99883467, 2.37064043, 0.99950843, 0.15634612, 0.15644818},
    {0.99907735, 2.37083027, 0.99961083, 0.15641367, 0.15649546},
    {0.99919871, 2.37092520, 0.99966203, 0.15644745, 0.15651910},
    {0.99932007, 2.37102013, 0.99971323, 0.15648122, 0.15654274},
    {0.99944144, 2.37111508, 0.99976443, 0.15651500, 0.15656638},
    {0.99956283, 2.37121003, 0.99981563, 0.15654878, 0.15659002},
    {0.99962352, 2.37125750, 0.99984123, 0.15656566, 0.15660184},
    {0.99968422, 2.37130499, 0.99986683, 0.15658255, 0.15661366},
    {0.99974492, 2.37135247, 0.99989243, 0.15659944, 0.15662548},
    {0.99980562, 2.37139995, 0.99991803, 0.15661633, 0.15663730},
    {0.99983598, 2.37142369, 0.99993083, 0.15662477, 0.15664321},
    {0.99986633, 2.37144744, 0.99994363, 0.15663322, 0.15664912},
    {0.99989668, 2.37147118, 0.99995643, 0.15664166, 0.15665503},
    {0.99992704, 2.37149493, 0.99996923, 0.15665010, 0.15666094},
    {0.99994221, 2.37150680, 0.99997563, 0.15665433, 0.15666389},
    {0.99995739, 2.37151867, 0.99998203, 0.15665855, 0.15666685},
    {0.99997257, 2.37153054, 0.99998843, 0.15666277, 0.15666980},
    {0.99998775, 2.37154242, 0.99999483, 0.15666699, 0.15667276},
    {1.00000000, 2.37155200, 1.00000000, 0.15667040, 0.15667514},
}};

// The line column is pinned by these two rows; the fit is a linear solve over
// them and validated row-by-row against the rest of the column.
constexpr int kPinLow = 1;
constexpr int kPinHigh = RhoTable::kRows - 1;

RhoTable build_table() {
    RhoTable t;
    t.rows = kTableRows;
    double prev_gamma = -1.0;
    for (const RhoRow& r : t.rows) {
        if (r.gamma <= prev_gamma) throw table_corruption_error("rho table: gamma not ascending");
        prev_gamma = r.gamma;
        double y = 1.0 - (1.0 - r.gamma) / r.omega;
        double step = 1.0 - 2.0 / r.omega;
        if (std::abs(y - r.y) > 1e-7 || std::abs(step - r.step) > 1e-7)
            throw table_corruption_error("rho table: derived column mismatch");
    }
    return t;
}

} // namespace

const RhoTable& load_table() {
    static const RhoTable table = build_table();
    return table;
}

double omega_interp(double z) {
    const RhoTable& t = load_table();
    if (z < t.rows.front().gamma || z > t.rows.back().gamma)
        throw param_error("omega_interp: argument outside the table hull");
    for (int i = RhoTable::kRows - 2; i >= 0; --i) {
        const RhoRow& lo = t.rows[i];
        if (z >= lo.gamma) {
            const RhoRow& hi = t.rows[i + 1];
            if (hi.gamma == lo.gamma) return lo.omega;
            double w = (z - lo.gamma) / (hi.gamma - lo.gamma);
            return lo.omega + w * (hi.omega - lo.omega);
        }
    }
    return t.rows.front().omega;
}

double rho_step(double z) {
    const RhoTable& t = load_table();
    if (z < t.rows.front().y || z > t.rows.back().y)
        throw param_error("rho_step: aspect outside [beta0, 1]");
    double v = t.rows.front().step;
    for (const RhoRow& r : t.rows) {
        if (r.y <= z) v = r.step;
    }
    return v;
}

LineBound fit_line(const RhoTable& table) {
    const RhoRow& lo = table.rows[kPinLow];
    const RhoRow& hi = table.rows[kPinHigh];
    LineBound line;
    line.slope = (hi.line - lo.line) / (hi.y - lo.y);
    line.intercept = hi.line - line.slope * (1.0 - hi.y);

    for (int i = 0; i < RhoTable::kRows; ++i) {
        const RhoRow& r = table.rows[i];
        if (std::abs(line.value_at(r.y) - r.line) > 1e-6)
            throw table_corruption_error("fitted line does not reproduce the table column");
        // Step dominance: the bound must sit above the step function both at
        // the knot itself and across the following interval.
        if (line.value_at(r.y) < r.step - 1e-9)
            throw table_corruption_error("fitted line dips below the step function");
        if (i + 1 < RhoTable::kRows && line.value_at(table.rows[i + 1].y) < r.step - 1e-9)
            throw table_corruption_error("fitted line violates step dominance");
    }
    return line;
}

const LineBound& default_line() {
    static const LineBound line = fit_line(load_table());
    return line;
}

double rm_cost(double n, double k) {
    const LineBound& line = default_line();
    if (k < 1 || k > n) throw param_error("rm_cost: need 1 <= k <= n");
    return std::pow(n, line.intercept) * std::pow(k / n, line.slope);
}

double delta_crossing(const LineBound& line, double rho) {
    return (2.0 - line.slope) / (1.0 - rho);
}

double rho_of_sigma(double sigma) { return 1.0 - 2.0 / sigma; }

namespace {
double effective_rho(const PredictParams& p) {
    return p.sigma > 0 ? rho_of_sigma(p.sigma) : load_table().rho_square();
}
} // namespace

double mm_batch_rounds(double n, double k, double s, double rho) {
    return std::pow(n, rho - 2.0) * k * k * std::pow(s, 1.0 - rho);
}

double predicted_rounds(const std::string& algorithm, const PredictParams& p) {
    const LineBound& line = default_line();
    const double rho = effective_rho(p);
    if (algorithm == "find_cycle") {
        double delta = compute_delta(p.h, static_cast<unsigned long long>(p.t),
                                     static_cast<int>(p.x), p.directed);
        return std::pow(p.n, rho) * std::pow(p.x, -(2.0 + delta * (rho - 1.0)));
    }
    if (algorithm == "fvic")
        return std::pow(p.n, line.intercept) * std::pow(p.x, -line.slope);
    if (algorithm == "main")
        return std::pow(p.n, line.intercept) /
               (std::pow(p.t, line.slope / (p.h - kDeltaSplit)) + 1.0);
    if (algorithm == "main_case1")
        return std::pow(p.n, line.intercept) /
               (std::pow(p.t, line.slope / (2.0 - kDeltaSplit)) + 1.0);
    if (algorithm == "q_basic") return std::pow(p.n, 3.0 * rho / 4.0);
    if (algorithm == "q_fast")
        return std::pow(p.n / (p.t * p.t + 1.0), 3.0 * rho / 4.0);
    throw param_error("predicted_rounds: unknown algorithm tag " + algorithm);
}

std::string predicted_faster_side(const PredictParams& p) {
    double fc = predicted_rounds("find_cycle", p);
    double fv = predicted_rounds("fvic", p);
    return fc <= fv ? "find_cycle" : "fvic";
}

} // namespace cqc
