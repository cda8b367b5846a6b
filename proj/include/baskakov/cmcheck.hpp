#pragma once

#include <functional>
#include <vector>

#include "baskakov/basis.hpp"
#include "baskakov/jet.hpp"

namespace baskakov {

// Sign-check tolerances: an entry below -(tol_abs + tol_rel * scale) is a
// violation; a negative entry within that band is only "numerically
// indeterminate". The scale is the largest |(-1)^m f^(m)| entry at the same
// grid point, the natural yardstick for roundoff propagated through the jet
// recurrences.
inline constexpr double kCmTolAbs = 1e-12;
inline constexpr double kCmTolRel = 1e-8;

using JetProvider = std::function<TaylorJet(double x0, int order)>;

// Jet of the alpha-form power sum at y0 (derivatives with respect to y).
// alternating selects the odd-r sign variant used by the multivariate
// Laplace representation.
TaylorJet f_alpha_jet(double alpha, int r, double y0, int order,
                      bool alternating = false);

// Jet of psi_{n,c}^{[r]} at x0 (chain-rule rescaling of f_alpha_jet for
// c > 0; direct Szasz term jets for c = 0).
TaylorJet psi_jet(const BaskakovParams& p, double x0, int order);

// Jet of (p_{n,k}^{[c]})^r at x0; requires c > 0.
TaylorJet taylor_basis_power(const BaskakovParams& p, long k, double x0,
                             int order);

// Jet of K(x/(1+x))/(1+x).
TaylorJet elliptic_profile_jet(double x0, int order);

struct CMReport {
    struct Entry {
        double x = 0.0;
        int m = 0;
        double value = 0.0;  // (-1)^m f^(m)(x)
    };
    enum class Verdict { ConsistentWithCM, ViolationFound };

    std::vector<double> grid;
    int max_order = 0;
    std::vector<std::vector<double>> min_signed;  // [grid point][m]
    std::vector<Entry> violations;
    std::vector<Entry> indeterminate;
    Verdict verdict = Verdict::ConsistentWithCM;

    double worst = 0.0;  // most negative signed entry seen (0 if none)
};

// Evaluates (-1)^m f^(m)(x) for all grid points and m <= order.
CMReport cm_check(const JetProvider& target, const std::vector<double>& grid,
                  int order);

// Same report built from the exact term-wise derivative of the c=1, r=2
// closed form; consistent-with-CM by construction, serves as the jet oracle.
CMReport cm_check_closed_c1(int n, const std::vector<double>& grid, int order);

struct LogConvexReport {
    struct Row {
        double x = 0.0;
        double value = 0.0;  // f f'' - (f')^2
        double bound = 0.0;  // -tol (f |f''| + (f')^2)
        bool ok = false;
    };
    std::vector<Row> rows;
    bool holds = true;
};

// Checks f f'' - (f')^2 >= -tol (f |f''| + (f')^2) pointwise; requires
// f > 0 on the grid.
LogConvexReport logconvex_check(const JetProvider& target,
                                const std::vector<double>& grid, double tol);

struct DecayReport {
    std::vector<double> xs;
    // magnitudes[m][i] = |f^(m)(xs[i])|
    std::vector<std::vector<double>> magnitudes;
    std::vector<bool> decreasing;   // per m: strictly decreasing along xs
    std::vector<double> last_value; // per m: |f^(m)| at the final x

    bool all_decreasing() const;
    bool below(double tol_abs, int m_from) const;  // last_value[m] < tol for m >= m_from
};

DecayReport decay_check(const JetProvider& target, int order,
                        const std::vector<double>& xs);

struct ConjectureEntry {
    double alpha = 0.0;
    int r = 0;
    CMReport::Verdict verdict = CMReport::Verdict::ConsistentWithCM;
    double worst = 0.0;
    long indeterminate = 0;
};

// Runs cm_check on f_alpha^[r] (series jets) for each (alpha, r) pair with r
// even. Reports "no violation found" evidence only; proves nothing.
std::vector<ConjectureEntry> conjecture_harness(
    const std::vector<double>& alphas, const std::vector<int>& rs,
    const std::vector<double>& grid, int order);

}  // namespace baskakov
