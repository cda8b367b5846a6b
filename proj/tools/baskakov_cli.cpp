// Command-line front end: every library module exposed as a subcommand with
// CSV/JSON table output. Exit codes: 0 = success / property holds,
// 1 = property violation, 2 = usage error, 3 = numerical failure.
#include <cinttypes>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "baskakov/basis.hpp"
#include "baskakov/closed_form.hpp"
#include "baskakov/cmcheck.hpp"
#include "baskakov/gruss.hpp"
#include "baskakov/hypergeom.hpp"
#include "baskakov/quadrature.hpp"
#include "baskakov/series.hpp"
#include "baskakov/zeros.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace baskakov;

constexpr const char* kVersion = "1.0.0";

enum ExitCode { kOk = 0, kViolation = 1, kUsage = 2, kNumerical = 3 };

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.16e", v);
    return buf;
}

std::string fmt10(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

struct Table {
    std::vector<std::string> cols;
    std::vector<std::vector<std::string>> rows;

    void row(std::vector<std::string> r) { rows.push_back(std::move(r)); }
};

// "start:stop:count[:log]" or a plain comma-separated list.
std::vector<double> parse_grid(const std::string& spec) {
    std::vector<double> out;
    if (spec.find(':') == std::string::npos) {
        std::stringstream ss(spec);
        std::string item;
        while (std::getline(ss, item, ','))
            out.push_back(std::stod(item));
        if (out.empty()) throw std::invalid_argument("empty grid spec");
        return out;
    }
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    if (parts.size() != 3 && parts.size() != 4)
        throw std::invalid_argument("grid spec must be start:stop:count[:log]");
    const double start = std::stod(parts[0]);
    const double stop = std::stod(parts[1]);
    const long count = std::stol(parts[2]);
    const bool logspace = parts.size() == 4;
    if (logspace && parts[3] != "log")
        throw std::invalid_argument("grid spec suffix must be 'log'");
    if (count < 1) throw std::invalid_argument("grid count must be >= 1");
    if (count == 1) return {start};
    if (logspace) {
        if (!(start > 0.0) || !(stop > 0.0))
            throw std::invalid_argument("log grid needs positive endpoints");
        for (long i = 0; i < count; ++i)
            out.push_back(start * std::pow(stop / start,
                                           static_cast<double>(i) / (count - 1)));
    } else {
        for (long i = 0; i < count; ++i)
            out.push_back(start + (stop - start) * static_cast<double>(i) /
                                      (count - 1));
    }
    return out;
}

void write_table(const Table& t, const std::string& path,
                 const std::string& format, const json& meta) {
    std::string payload;
    if (format == "json") {
        json j;
        j["meta"] = meta;
        j["rows"] = json::array();
        for (const auto& r : t.rows) {
            json row;
            for (size_t i = 0; i < t.cols.size(); ++i) row[t.cols[i]] = r[i];
            j["rows"].push_back(std::move(row));
        }
        payload = j.dump(2);
        payload += '\n';
    } else {
        std::ostringstream os;
        for (size_t i = 0; i < t.cols.size(); ++i)
            os << (i ? "," : "") << t.cols[i];
        os << '\n';
        for (const auto& r : t.rows) {
            for (size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
            os << '\n';
        }
        payload = os.str();
    }
    if (path.empty()) {
        std::cout << payload;
        return;
    }
    const std::string tmp = path + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open output file " + tmp);
        f << payload;
    }
    std::filesystem::rename(tmp, path);
}

json make_meta(const std::string& subcommand,
               const std::vector<std::pair<std::string, std::string>>& cfg) {
    json meta;
    meta["tool"] = "baskakov";
    meta["version"] = kVersion;
    meta["subcommand"] = subcommand;
    json c;
    for (const auto& [k, v] : cfg) c[k] = v;
    meta["config"] = std::move(c);
    return meta;
}

// Deterministic uniform [-1, 1) double from a raw mt19937_64 draw; avoids
// the implementation-defined std::uniform_real_distribution.
double unit_draw(std::mt19937_64& gen) {
    return static_cast<double>(gen() >> 11) * (2.0 / 9007199254740992.0) - 1.0;
}

struct CommonOut {
    std::string out;
    std::string format = "csv";
};

void add_output_flags(CLI::App* sc, CommonOut& o) {
    sc->add_option("--out", o.out, "output file (stdout if omitted)");
    sc->add_option("--format", o.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
}

// ---------------------------------------------------------------- eval ----

int run_eval(int n, double c, int r, const std::string& x_or_grid, bool single,
             double x_single, double rel_tol, const CommonOut& out) {
    BaskakovParams p{n, c, r};
    if (single) {
        SeriesEval ev = power_sum_series(p, x_single, rel_tol);
        if (ev.status != SeriesEval::Status::Converged) {
            std::cerr << "eval: truncation cap hit\n";
            return kNumerical;
        }
        std::cout << fmt10(ev.value) << "\n";
        return kOk;
    }
    Table t;
    t.cols = {"x", "value", "terms", "tail_bound"};
    bool capped = false;
    for (double x : parse_grid(x_or_grid)) {
        SeriesEval ev = power_sum_series(p, x, rel_tol);
        capped = capped || ev.status != SeriesEval::Status::Converged;
        t.row({fmt17(x), fmt17(ev.value), std::to_string(ev.terms_used),
               fmt17(ev.tail_bound)});
    }
    write_table(t, out.out, out.format,
                make_meta("eval", {{"n", std::to_string(n)},
                                   {"c", fmt10(c)},
                                   {"r", std::to_string(r)},
                                   {"grid", x_or_grid},
                                   {"rel_tol", fmt10(rel_tol)}}));
    if (capped) {
        std::cerr << "eval: truncation cap hit on some grid points\n";
        return kNumerical;
    }
    std::cout << "eval: " << t.rows.size() << " points\n";
    return kOk;
}

// ---------------------------------------------------------- closed-form ----

int run_closed_form(int n, const std::string& grid, bool single,
                    double x_single, const CommonOut& out) {
    if (single) {
        std::cout << fmt10(power_sum_closed_c1_r2(n, x_single)) << "\n";
        return kOk;
    }
    Table t;
    t.cols = {"x", "value"};
    for (double x : parse_grid(grid))
        t.row({fmt17(x), fmt17(power_sum_closed_c1_r2(n, x))});
    write_table(t, out.out, out.format,
                make_meta("closed-form",
                          {{"n", std::to_string(n)}, {"grid", grid}}));
    std::cout << "closed-form: " << t.rows.size() << " points\n";
    return kOk;
}

// ------------------------------------------------------------ quad-check ----

int run_quad_triple(double alpha, const std::string& grid, int radial,
                    int angular, double tol, const CommonOut& out) {
    QuadratureSpec spec{radial, angular, alpha};
    Table t;
    t.cols = {"x", "quad", "reference", "rel_err"};
    double worst = 0.0;
    for (double x : parse_grid(grid)) {
        const double quad = laplace_triple(alpha, x, spec);
        const double q = x / (1.0 + x);
        const double ref =
            std::pow(1.0 + x, -2.0 * alpha) * gauss_2f1(alpha, alpha, 1.0, q * q);
        const double rel = std::fabs(quad - ref) / std::max(std::fabs(ref), 1e-300);
        worst = std::max(worst, rel);
        t.row({fmt17(x), fmt17(quad), fmt17(ref), fmt17(rel)});
    }
    write_table(t, out.out, out.format,
                make_meta("quad-check", {{"form", "triple"},
                                         {"alpha", fmt10(alpha)},
                                         {"grid", grid},
                                         {"radial", std::to_string(radial)},
                                         {"angular", std::to_string(angular)}}));
    std::cout << "quad-check triple: worst rel err " << fmt10(worst) << "\n";
    return worst <= tol ? kOk : kViolation;
}

int run_quad_parseval(int n, const std::string& grid, int angular, double tol,
                      const CommonOut& out) {
    Table t;
    t.cols = {"x", "quad", "reference", "rel_err"};
    double worst = 0.0;
    for (double x : parse_grid(grid)) {
        const double quad = parseval_integral(n, x, angular);
        const double ref = power_sum_closed_c1_r2(n, x);
        const double rel = std::fabs(quad - ref) / std::max(std::fabs(ref), 1e-300);
        worst = std::max(worst, rel);
        t.row({fmt17(x), fmt17(quad), fmt17(ref), fmt17(rel)});
    }
    write_table(t, out.out, out.format,
                make_meta("quad-check", {{"form", "parseval"},
                                         {"n", std::to_string(n)},
                                         {"grid", grid},
                                         {"angular", std::to_string(angular)}}));
    std::cout << "quad-check parseval: worst rel err " << fmt10(worst) << "\n";
    return worst <= tol ? kOk : kViolation;
}

int run_quad_multi(double alpha, int r, double x, int radial, int angular,
                   double tol, const CommonOut& out) {
    QuadratureSpec spec{radial, angular, alpha};
    MultiResult res = laplace_multi_full(alpha, r, x, spec);
    SeriesEval ref = alpha_power_sum(alpha, r, x, 1e-13, r % 2 == 1);
    const double rel =
        std::fabs(res.value - ref.value) / std::max(std::fabs(ref.value), 1e-300);
    Table t;
    t.cols = {"x",        "quad",     "reference", "rel_err",
              "imag_rel", "min_re_g", "cost"};
    t.row({fmt17(x), fmt17(res.value), fmt17(ref.value), fmt17(rel),
           fmt17(res.imag_residual), fmt17(res.min_re_g), fmt17(res.cost)});
    write_table(t, out.out, out.format,
                make_meta("quad-check", {{"form", "multi"},
                                         {"alpha", fmt10(alpha)},
                                         {"r", std::to_string(r)},
                                         {"x", fmt10(x)},
                                         {"radial", std::to_string(radial)},
                                         {"angular", std::to_string(angular)}}));
    std::cout << "quad-check multi: rel err " << fmt10(rel) << ", imag residual "
              << fmt10(res.imag_residual) << ", min Re(g) "
              << fmt10(res.min_re_g) << "\n";
    return rel <= tol ? kOk : kViolation;
}

// -------------------------------------------------------------- cm-check ----

void cm_table(const CMReport& rep, Table& t) {
    t.cols = {"x", "m", "signed_value", "classification"};
    for (size_t gi = 0; gi < rep.grid.size(); ++gi) {
        double scale = 0.0;
        for (double v : rep.min_signed[gi]) scale = std::max(scale, std::fabs(v));
        const double cut = kCmTolAbs + kCmTolRel * scale;
        for (size_t m = 0; m < rep.min_signed[gi].size(); ++m) {
            const double v = rep.min_signed[gi][m];
            const char* cls = v >= 0.0            ? "ok"
                              : v >= -cut         ? "indeterminate"
                                                  : "violation";
            t.row({fmt17(rep.grid[gi]), std::to_string(m), fmt17(v), cls});
        }
    }
}

int run_cm_check(int n, double c, int r, int order, const std::string& grid,
                 const CommonOut& out) {
    BaskakovParams p{n, c, r};
    JetProvider prov = [p](double x, int ord) { return psi_jet(p, x, ord); };
    CMReport rep = cm_check(prov, parse_grid(grid), order);
    Table t;
    cm_table(rep, t);
    write_table(t, out.out, out.format,
                make_meta("cm-check", {{"n", std::to_string(n)},
                                       {"c", fmt10(c)},
                                       {"r", std::to_string(r)},
                                       {"order", std::to_string(order)},
                                       {"grid", grid}}));
    if (rep.verdict == CMReport::Verdict::ViolationFound) {
        const auto& v = rep.violations.front();
        std::cout << "cm-check: ViolationFound at x=" << fmt10(v.x)
                  << " m=" << v.m << " value=" << fmt10(v.value) << "\n";
        return kViolation;
    }
    std::cout << "cm-check: ConsistentWithCM (" << rep.indeterminate.size()
              << " indeterminate entries)\n";
    return kOk;
}

// -------------------------------------------------------------- logconvex ----

int run_logconvex(int n, double c, int r, const std::string& grid, double tol,
                  const CommonOut& out) {
    BaskakovParams p{n, c, r};
    JetProvider prov = [p](double x, int ord) { return psi_jet(p, x, ord); };
    LogConvexReport rep = logconvex_check(prov, parse_grid(grid), tol);
    Table t;
    t.cols = {"x", "value", "bound", "ok"};
    for (const auto& row : rep.rows)
        t.row({fmt17(row.x), fmt17(row.value), fmt17(row.bound),
               row.ok ? "1" : "0"});
    write_table(t, out.out, out.format,
                make_meta("logconvex", {{"n", std::to_string(n)},
                                        {"c", fmt10(c)},
                                        {"r", std::to_string(r)},
                                        {"grid", grid},
                                        {"tol", fmt10(tol)}}));
    std::cout << "logconvex: " << (rep.holds ? "holds" : "violated") << "\n";
    return rep.holds ? kOk : kViolation;
}

// ------------------------------------------------------------------ decay ----

int run_decay(int n, double c, int r, int order, const std::string& grid,
              double tol, int tol_from_order, const CommonOut& out) {
    BaskakovParams p{n, c, r};
    JetProvider prov = [p](double x, int ord) { return psi_jet(p, x, ord); };
    DecayReport rep = decay_check(prov, order, parse_grid(grid));
    Table t;
    t.cols = {"m", "x", "magnitude"};
    for (int m = 0; m <= order; ++m)
        for (size_t i = 0; i < rep.xs.size(); ++i)
            t.row({std::to_string(m), fmt17(rep.xs[i]),
                   fmt17(rep.magnitudes[m][i])});
    write_table(t, out.out, out.format,
                make_meta("decay", {{"n", std::to_string(n)},
                                    {"c", fmt10(c)},
                                    {"r", std::to_string(r)},
                                    {"order", std::to_string(order)},
                                    {"grid", grid},
                                    {"tol", fmt10(tol)}}));
    const bool dec = rep.all_decreasing();
    const bool thr = rep.below(tol, tol_from_order);
    std::cout << "decay: " << (dec ? "decreasing" : "NOT decreasing")
              << ", tail threshold " << (thr ? "met" : "missed")
              << " (checked m >= " << tol_from_order << ")\n";
    return (dec && thr) ? kOk : kViolation;
}

// ------------------------------------------------------------------ gruss ----

int run_gruss(int n, double c, double x, int pairs, std::uint64_t seed,
              long k_trunc, double tol, const CommonOut& out) {
    BaskakovParams p{n, c, 2};
    // Probe run with constant samples to learn the truncation index.
    auto zero = [](long) { return 0.0; };
    GrussReport probe = gruss_verify(p, x, zero, zero, k_trunc, tol);
    const long K = probe.k_trunc;

    Table t;
    t.cols = {"pair",       "lhs",   "sum_sq", "bound_tight", "bound_simple",
              "osc_f",      "osc_g", "holds_tight", "holds_simple"};
    bool all_hold = true;
    for (int pair = 0; pair < pairs; ++pair) {
        std::mt19937_64 gen(seed + 1000003ULL * static_cast<std::uint64_t>(pair));
        std::vector<double> fv(K + 1), gv(K + 1);
        for (long k = 0; k <= K; ++k) fv[k] = unit_draw(gen);
        for (long k = 0; k <= K; ++k) gv[k] = unit_draw(gen);
        GrussReport rep = gruss_verify(
            p, x, [&fv](long k) { return fv[k]; },
            [&gv](long k) { return gv[k]; }, K, tol);
        all_hold = all_hold && rep.holds_tight && rep.holds_simple;
        t.row({std::to_string(pair), fmt17(rep.lhs), fmt17(rep.sum_sq),
               fmt17(rep.bound_tight), fmt17(rep.bound_simple), fmt17(rep.osc_f),
               fmt17(rep.osc_g), rep.holds_tight ? "1" : "0",
               rep.holds_simple ? "1" : "0"});
    }
    write_table(t, out.out, out.format,
                make_meta("gruss", {{"n", std::to_string(n)},
                                    {"c", fmt10(c)},
                                    {"x", fmt10(x)},
                                    {"pairs", std::to_string(pairs)},
                                    {"seed", std::to_string(seed)},
                                    {"k_trunc", std::to_string(K)}}));
    std::cout << "gruss: " << pairs << " randomized pairs, "
              << (all_hold ? "all bounds hold" : "bound violated") << "\n";
    return all_hold ? kOk : kViolation;
}

// ------------------------------------------------------------------ zeros ----

int run_zeros(int n, const std::string& kind, const std::string& radii_spec,
              double residual_tol, const CommonOut& out) {
    const std::vector<double> radii = parse_grid(radii_spec);
    Table t;
    MeasureStats st;
    bool converged = false;
    if (kind == "psi") {
        ZeroSet zs = psi_zeros(n, residual_tol);
        converged = zs.converged;
        st = psi_measure_stats(zs, radii);
        t.cols = {"n", "re_x", "im_x", "abs_2x_plus_1", "residual"};
        for (size_t i = 0; i < zs.roots.size(); ++i) {
            const auto& x = zs.roots[i];
            t.row({std::to_string(n), fmt17(x.real()), fmt17(x.imag()),
                   fmt17(std::abs(2.0 * x + 1.0)), fmt17(zs.residuals[i])});
        }
    } else {
        ZeroSet zs = find_roots(pn_polynomial(n), residual_tol);
        converged = zs.converged;
        st = measure_stats(zs, radii);
        t.cols = {"n", "re_z", "im_z", "abs_z", "residual"};
        for (size_t i = 0; i < zs.roots.size(); ++i) {
            const auto& z = zs.roots[i];
            t.row({std::to_string(n), fmt17(z.real()), fmt17(z.imag()),
                   fmt17(std::abs(z)), fmt17(zs.residuals[i])});
        }
    }
    write_table(t, out.out, out.format,
                make_meta("zeros", {{"n", std::to_string(n)},
                                    {"kind", kind},
                                    {"radii", radii_spec},
                                    {"residual_tol", fmt10(residual_tol)}}));
    std::cout << "zeros " << kind << " n=" << n << ": radial_dev_max "
              << fmt10(st.radial_dev_max) << ", radial_dev_mean "
              << fmt10(st.radial_dev_mean) << ", angular_ks "
              << fmt10(st.angular_ks) << ", potential_err_max "
              << fmt10(st.potential_err_max) << "\n";
    if (!converged) {
        std::cerr << "zeros: residuals above tolerance\n";
        return kNumerical;
    }
    return kOk;
}

// --------------------------------------------------------------- elliptic ----

int run_elliptic(const std::string& kgrid, double tol, bool profile,
                 const std::string& xgrid, int order, const CommonOut& out) {
    if (profile) {
        JetProvider prov = [](double x, int ord) {
            return elliptic_profile_jet(x, ord);
        };
        CMReport rep = cm_check(prov, parse_grid(xgrid), order);
        Table t;
        cm_table(rep, t);
        write_table(t, out.out, out.format,
                    make_meta("elliptic", {{"profile", "1"},
                                           {"grid", xgrid},
                                           {"order", std::to_string(order)}}));
        const bool ok = rep.verdict == CMReport::Verdict::ConsistentWithCM;
        std::cout << "elliptic profile: "
                  << (ok ? "ConsistentWithCM" : "ViolationFound") << "\n";
        return ok ? kOk : kViolation;
    }
    Table t;
    t.cols = {"k", "agm", "series_2f1", "abs_diff"};
    double worst = 0.0;
    for (double k : parse_grid(kgrid)) {
        const double agm = elliptic_K_agm(k);
        const double ref = M_PI / 2.0 * gauss_2f1(0.5, 0.5, 1.0, k * k);
        const double d = std::fabs(agm - ref);
        worst = std::max(worst, d);
        t.row({fmt17(k), fmt17(agm), fmt17(ref), fmt17(d)});
    }
    write_table(t, out.out, out.format,
                make_meta("elliptic", {{"profile", "0"},
                                       {"kgrid", kgrid},
                                       {"tol", fmt10(tol)}}));
    std::cout << "elliptic identity: worst abs diff " << fmt10(worst) << "\n";
    return worst <= tol ? kOk : kViolation;
}

// ------------------------------------------------------------- conjecture ----

int run_conjecture(const std::string& alphas_spec, const std::string& rs_spec,
                   const std::string& grid, int order, const CommonOut& out) {
    std::vector<double> alphas = parse_grid(alphas_spec);
    std::vector<int> rs;
    for (double v : parse_grid(rs_spec)) rs.push_back(static_cast<int>(v));
    std::vector<ConjectureEntry> entries =
        conjecture_harness(alphas, rs, parse_grid(grid), order);
    Table t;
    t.cols = {"alpha", "r", "verdict", "worst_signed", "indeterminate"};
    bool any_violation = false;
    for (const auto& e : entries) {
        const bool ok = e.verdict == CMReport::Verdict::ConsistentWithCM;
        any_violation = any_violation || !ok;
        t.row({fmt17(e.alpha), std::to_string(e.r),
               ok ? "consistent with conjecture" : "violation found",
               fmt17(e.worst), std::to_string(e.indeterminate)});
        std::cout << "conjecture alpha=" << fmt10(e.alpha) << " r=" << e.r
                  << ": " << (ok ? "consistent with conjecture" : "VIOLATION")
                  << " (worst signed value " << fmt10(e.worst) << ")\n";
    }
    write_table(t, out.out, out.format,
                make_meta("conjecture", {{"alphas", alphas_spec},
                                         {"r_list", rs_spec},
                                         {"grid", grid},
                                         {"order", std::to_string(order)}}));
    return any_violation ? kViolation : kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Numerical toolkit for squared generalized Baskakov basis sums: "
        "series/closed-form/integral evaluation, high-order monotonicity "
        "checks, Chebyshev-Gruss bounds, and zero distribution statistics. "
        "Set BASKAKOV_THREADS to parallelize the multivariate integral."};
    app.require_subcommand(1);

    // eval
    int e_n = 1, e_r = 2;
    double e_c = 1.0, e_x = 0.0, e_rel = 1e-12;
    std::string e_grid;
    CommonOut e_out;
    auto* sc_eval = app.add_subcommand(
        "eval", "power sum by certified series (columns: x,value,terms,tail_bound)");
    sc_eval->add_option("--n", e_n, "operator index n >= 1")->required();
    sc_eval->add_option("--c", e_c, "family parameter c >= 0 (0 = Szasz limit)");
    sc_eval->add_option("--r", e_r, "power exponent r >= 1");
    auto* e_xopt = sc_eval->add_option("--x", e_x, "single evaluation point");
    sc_eval->add_option("--grid", e_grid, "x grid start:stop:count[:log]");
    sc_eval->add_option("--rel-tol", e_rel, "series relative tolerance");
    add_output_flags(sc_eval, e_out);

    // closed-form
    int cf_n = 1;
    double cf_x = 0.0;
    std::string cf_grid;
    CommonOut cf_out;
    auto* sc_cf = app.add_subcommand(
        "closed-form", "exact-coefficient closed form, c=1 r=2 (columns: x,value)");
    sc_cf->add_option("--n", cf_n, "operator index")->required();
    auto* cf_xopt = sc_cf->add_option("--x", cf_x, "single evaluation point");
    sc_cf->add_option("--grid", cf_grid, "x grid");
    add_output_flags(sc_cf, cf_out);

    // quad-check
    std::string q_form;
    double q_alpha = 1.0, q_x = 1.0, q_tol = -1.0;
    int q_n = 2, q_r = 4, q_radial = 64, q_angular = 256;
    std::string q_grid = "0,0.5,1,2,5";
    CommonOut q_out;
    auto* sc_quad = app.add_subcommand(
        "quad-check",
        "integral representations vs reference (columns: x,quad,reference,rel_err)");
    sc_quad->add_option("--form", q_form, "triple | parseval | multi")
        ->required()
        ->check(CLI::IsMember({"triple", "parseval", "multi"}));
    sc_quad->add_option("--alpha", q_alpha, "exponent alpha > 0");
    sc_quad->add_option("--n", q_n, "operator index (parseval)");
    sc_quad->add_option("--r", q_r, "power exponent (multi, 2..4)");
    sc_quad->add_option("--x", q_x, "evaluation point (multi)");
    sc_quad->add_option("--grid", q_grid, "x grid (triple/parseval)");
    sc_quad->add_option("--radial", q_radial, "radial nodes");
    sc_quad->add_option("--angular", q_angular, "angular nodes");
    sc_quad->add_option("--tol", q_tol, "pass threshold on rel err");
    add_output_flags(sc_quad, q_out);

    // cm-check
    int cm_n = 1, cm_r = 2, cm_order = 20;
    double cm_c = 1.0;
    std::string cm_grid = "0,0.5,1,2,5";
    CommonOut cm_out;
    auto* sc_cm = app.add_subcommand(
        "cm-check",
        "signed derivative table (columns: x,m,signed_value,classification)");
    sc_cm->add_option("--n", cm_n, "operator index")->required();
    sc_cm->add_option("--c", cm_c, "family parameter");
    sc_cm->add_option("--r", cm_r, "power exponent");
    sc_cm->add_option("--order", cm_order, "max derivative order M <= 60");
    sc_cm->add_option("--grid", cm_grid, "x grid");
    add_output_flags(sc_cm, cm_out);

    // logconvex
    int lc_n = 1, lc_r = 2;
    double lc_c = 1.0, lc_tol = 1e-9;
    std::string lc_grid = "0,0.5,1,2,5";
    CommonOut lc_out;
    auto* sc_lc = app.add_subcommand(
        "logconvex", "f f'' - (f')^2 sign check (columns: x,value,bound,ok)");
    sc_lc->add_option("--n", lc_n, "operator index")->required();
    sc_lc->add_option("--c", lc_c, "family parameter");
    sc_lc->add_option("--r", lc_r, "power exponent");
    sc_lc->add_option("--grid", lc_grid, "x grid");
    sc_lc->add_option("--tol", lc_tol, "relative slack");
    add_output_flags(sc_lc, lc_out);

    // decay
    int d_n = 1, d_r = 2, d_order = 5, d_from = 1;
    double d_c = 1.0, d_tol = 1e-6;
    std::string d_grid = "10,50,100,1000";
    CommonOut d_out;
    auto* sc_decay = app.add_subcommand(
        "decay", "derivative decay along increasing x (columns: m,x,magnitude)");
    sc_decay->add_option("--n", d_n, "operator index")->required();
    sc_decay->add_option("--c", d_c, "family parameter");
    sc_decay->add_option("--r", d_r, "power exponent");
    sc_decay->add_option("--order", d_order, "max derivative order");
    sc_decay->add_option("--grid", d_grid, "increasing x list");
    sc_decay->add_option("--tol", d_tol, "absolute threshold at the last x");
    sc_decay->add_option("--tol-from-order", d_from,
                         "lowest m the threshold applies to (the m=0 value "
                         "decays like 1/x and sits above any tight threshold)");
    add_output_flags(sc_decay, d_out);

    // gruss
    int g_n = 1, g_pairs = 100;
    double g_c = 1.0, g_x = 1.0, g_tol = 1e-12;
    std::uint64_t g_seed = 12345;
    long g_k = -1;
    CommonOut g_out;
    auto* sc_gruss = app.add_subcommand(
        "gruss",
        "Chebyshev functional bounds on randomized bounded samples "
        "(columns: pair,lhs,sum_sq,bound_tight,bound_simple,osc_f,osc_g,"
        "holds_tight,holds_simple)");
    sc_gruss->add_option("--n", g_n, "operator index")->required();
    sc_gruss->add_option("--c", g_c, "family parameter");
    sc_gruss->add_option("--x", g_x, "evaluation point")->required();
    sc_gruss->add_option("--pairs", g_pairs, "number of randomized pairs");
    sc_gruss->add_option("--seed", g_seed, "RNG seed");
    sc_gruss->add_option("--k-trunc", g_k,
                         "weight truncation index (-1 = automatic)");
    sc_gruss->add_option("--tol", g_tol, "bound slack");
    add_output_flags(sc_gruss, g_out);

    // zeros
    int z_n = 2;
    std::string z_kind = "psi", z_radii = "2";
    double z_tol = 1e-8;
    CommonOut z_out;
    auto* sc_zeros = app.add_subcommand(
        "zeros",
        "complex zeros and distribution stats (columns psi: "
        "n,re_x,im_x,abs_2x_plus_1,residual)");
    sc_zeros->add_option("--n", z_n, "operator index (psi: n >= 2)")->required();
    sc_zeros->add_option("--kind", z_kind, "psi | pn")
        ->check(CLI::IsMember({"psi", "pn"}));
    sc_zeros->add_option("--radii", z_radii, "test radii (> 1, comma list)");
    sc_zeros->add_option("--residual-tol", z_tol, "acceptance residual");
    add_output_flags(sc_zeros, z_out);

    // elliptic
    std::string el_kgrid = "0:0.9:10", el_xgrid = "0:5:11";
    double el_tol = 1e-11;
    bool el_profile = false;
    int el_order = 15;
    CommonOut el_out;
    auto* sc_el = app.add_subcommand(
        "elliptic",
        "AGM vs series identity (columns: k,agm,series_2f1,abs_diff); "
        "--profile switches to the monotonicity table of K(x/(1+x))/(1+x)");
    sc_el->add_option("--kgrid", el_kgrid, "modulus grid in [0,1)");
    sc_el->add_option("--tol", el_tol, "identity threshold");
    sc_el->add_flag("--profile", el_profile, "check the CM profile instead");
    sc_el->add_option("--grid", el_xgrid, "x grid for --profile");
    sc_el->add_option("--order", el_order, "derivative order for --profile");
    add_output_flags(sc_el, el_out);

    // conjecture
    std::string cj_alphas = "0.5,1,2", cj_rs = "4", cj_grid = "0:5:11";
    int cj_order = 12;
    CommonOut cj_out;
    auto* sc_cj = app.add_subcommand(
        "conjecture",
        "even-r monotonicity sweep; reports evidence only (columns: "
        "alpha,r,verdict,worst_signed,indeterminate)");
    sc_cj->add_option("--alphas", cj_alphas, "alpha list");
    sc_cj->add_option("--r-list", cj_rs, "even exponents (2, 4, 6)");
    sc_cj->add_option("--grid", cj_grid, "x grid");
    sc_cj->add_option("--order", cj_order, "derivative order M");
    add_output_flags(sc_cj, cj_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (app.got_subcommand(sc_eval)) {
            if (static_cast<bool>(*e_xopt) == !e_grid.empty())
                throw std::invalid_argument("eval: give exactly one of --x, --grid");
            return run_eval(e_n, e_c, e_r, e_grid, static_cast<bool>(*e_xopt),
                            e_x, e_rel, e_out);
        }
        if (app.got_subcommand(sc_cf)) {
            if (static_cast<bool>(*cf_xopt) == !cf_grid.empty())
                throw std::invalid_argument(
                    "closed-form: give exactly one of --x, --grid");
            return run_closed_form(cf_n, cf_grid, static_cast<bool>(*cf_xopt),
                                   cf_x, cf_out);
        }
        if (app.got_subcommand(sc_quad)) {
            // Per-form defaults unless the user set the node counts.
            const bool rad_set = sc_quad->count("--radial") > 0;
            const bool ang_set = sc_quad->count("--angular") > 0;
            if (q_form == "triple")
                return run_quad_triple(q_alpha, q_grid, q_radial, q_angular,
                                       q_tol < 0 ? 1e-6 : q_tol, q_out);
            if (q_form == "parseval")
                return run_quad_parseval(q_n, q_grid, ang_set ? q_angular : 512,
                                         q_tol < 0 ? 1e-10 : q_tol, q_out);
            return run_quad_multi(q_alpha, q_r, q_x, rad_set ? q_radial : 12,
                                  ang_set ? q_angular : 32,
                                  q_tol < 0 ? 1e-5 : q_tol, q_out);
        }
        if (app.got_subcommand(sc_cm))
            return run_cm_check(cm_n, cm_c, cm_r, cm_order, cm_grid, cm_out);
        if (app.got_subcommand(sc_lc))
            return run_logconvex(lc_n, lc_c, lc_r, lc_grid, lc_tol, lc_out);
        if (app.got_subcommand(sc_decay))
            return run_decay(d_n, d_c, d_r, d_order, d_grid, d_tol, d_from,
                             d_out);
        if (app.got_subcommand(sc_gruss))
            return run_gruss(g_n, g_c, g_x, g_pairs, g_seed, g_k, g_tol, g_out);
        if (app.got_subcommand(sc_zeros))
            return run_zeros(z_n, z_kind, z_radii, z_tol, z_out);
        if (app.got_subcommand(sc_el))
            return run_elliptic(el_kgrid, el_tol, el_profile, el_xgrid,
                                el_order, el_out);
        if (app.got_subcommand(sc_cj))
            return run_conjecture(cj_alphas, cj_rs, cj_grid, cj_order, cj_out);
        return kUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kNumerical;
    }
}
