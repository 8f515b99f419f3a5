// semistab: certified resolvent norms, semigroup envelopes and randomized
// inequality suites for positive-semigroup counterexample studies.
//
// Exit codes: 0 success, 1 an asserted bound failed (a machine-readable
// violation record goes to stdout), 2 usage or input error.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "semistab/direct_sum.hpp"
#include "semistab/dynamics.hpp"
#include "semistab/lattice.hpp"
#include "semistab/mode_operator.hpp"
#include "semistab/numlin.hpp"
#include "semistab/quadrature.hpp"
#include "semistab/shift_block.hpp"

using namespace semistab;
using nlohmann::json;

namespace {

struct CommonOpts {
    std::uint64_t seed = 1;
    std::string format;  // "csv" or "json"; empty means subcommand default
    std::string out;
    bool tol_report = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--seed", opts.seed, "RNG seed recorded in the output");
    cmd->add_option("--format", opts.format, "Output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", opts.out,
                    "Output path (relative paths resolve against SEMISTAB_OUT_DIR)");
    cmd->add_flag("--tol-report", opts.tol_report,
                  "Attach the tolerance thresholds used by this run");
}

std::string resolve_out(const std::string& path) {
    if (path.empty() || path.front() == '/') return path;
    const char* dir = std::getenv("SEMISTAB_OUT_DIR");
    if (dir == nullptr || *dir == '\0') return path;
    std::string full(dir);
    if (full.back() != '/') full.push_back('/');
    return full + path;
}

// Writes the artifact to --out (or stdout) and returns the stream used for
// human-readable side notes, which must not corrupt a piped artifact.
std::ostream& emit(const std::string& content, const std::string& out) {
    if (out.empty()) {
        std::cout << content;
        if (!content.empty() && content.back() != '\n') std::cout << '\n';
        return std::cerr;
    }
    const std::string path = resolve_out(out);
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write output path: " + path);
    f << content;
    if (!f) throw std::runtime_error("cannot write output path: " + path);
    return std::cout;
}

int violation(const std::string& subcommand, const std::string& reason, json detail) {
    json v;
    v["violation"] = {{"subcommand", subcommand}, {"reason", reason}, {"detail", std::move(detail)}};
    std::cout << v.dump() << '\n';
    return 1;
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot read input file: " + path);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

json with_tolerances(const std::string& text, const CommonOpts& opts, json tolerances) {
    json j = json::parse(text);
    j["seed"] = opts.seed;
    if (opts.tol_report) j["tolerances"] = std::move(tolerances);
    return j;
}

// ---------------------------------------------------------------- shift ----

struct ShiftArgs {
    CommonOpts common;
    std::size_t m = 2;
    double re = 1.0, im = 0.0;
};

int run_shift(const ShiftArgs& a) {
    const auto rep = shiftblock::shift_bounds_report(a.m, Complex{a.re, a.im});
    json j = with_tolerances(rep.to_json(), a.common,
                             {{"bound_slack", 1e-9}, {"unit_circle_window", 1e-12}});
    j["m"] = a.m;
    j["lambda"] = {a.re, a.im};
    emit(j.dump(), a.common.out)
        << "shift m=" << a.m << " norm=" << fmt_double(rep.norm)
        << (rep.violated ? " BOUND VIOLATED" : " within closed-form bounds") << '\n';
    if (rep.violated)
        return violation("shift", "resolvent norm escaped the closed-form bounds",
                         json::parse(rep.to_json()));
    return 0;
}

// ------------------------------------------------------------------- bm ----

struct BmArgs {
    CommonOpts common;
    std::size_t m = 1;
    double re = 1.0, im = 0.0;
    double exp_t = -1.0;
    long window = -1;
};

int run_bm(const BmArgs& a) {
    const modeop::ModeOperator op{a.m};
    if (a.window >= 0) {
        const auto pts = modeop::bm_spectrum_points(op, a.window);
        json j;
        j["m"] = a.m;
        j["window"] = a.window;
        auto arr = json::array();
        for (const auto& z : pts) arr.push_back({z.real(), z.imag()});
        j["points"] = std::move(arr);
        emit(j.dump(), a.common.out) << "bm spectrum points: " << pts.size() << '\n';
        return 0;
    }
    if (a.exp_t >= 0.0) {
        const double nrm = modeop::bm_exp_norm(op, a.exp_t);
        const double envelope = std::exp(5.0 * a.exp_t) + 1e-9;
        json j;
        j["m"] = a.m;
        j["t"] = a.exp_t;
        j["norm"] = nrm;
        j["envelope_e5t"] = envelope;
        j["within_envelope"] = nrm <= envelope;
        if (a.common.tol_report) j["tolerances"] = {{"envelope_slack", 1e-9}};
        emit(j.dump(), a.common.out)
            << "bm exp norm=" << fmt_double(nrm) << " envelope=" << fmt_double(envelope) << '\n';
        if (nrm > envelope)
            return violation("bm", "semigroup norm escaped the e^{5t} envelope", j);
        return 0;
    }
    const auto rep = modeop::bm_resolvent_norm(op, Complex{a.re, a.im});
    json j = with_tolerances(rep.to_json(), a.common, {{"exclusion_radius", 1e-8}});
    emit(j.dump(), a.common.out)
        << "bm norm=" << fmt_double(rep.norm) << " certified=" << (rep.certified ? "true" : "false")
        << '\n';
    return 0;
}

// ----------------------------------------------------------------- dsum ----

struct DsumArgs {
    CommonOpts common;
    std::size_t m_max = 8;
    double re = 1.0, im = 0.0;
    bool enclosure = false;
    double re_min = -2.0, re_max = 3.0;
    std::size_t re_steps = 6;
    double im_min = -2.5, im_max = 2.5;
    std::size_t im_steps = 6;
};

int run_dsum(const DsumArgs& a) {
    const directsum::DirectSumOperator op{a.m_max};
    if (!a.enclosure) {
        const auto rep = directsum::d_resolvent_norm(op, Complex{a.re, a.im});
        json j = with_tolerances(rep.to_json(), a.common,
                                 {{"exclusion_radius", 1e-8}, {"certified_means", "true norm in [norm, max(norm, tail_bound)]"}});
        emit(j.dump(), a.common.out)
            << "dsum norm=" << fmt_double(rep.norm) << " attained M=" << rep.attained.block_m
            << " certified=" << (rep.certified ? "true" : "false") << '\n';
        return 0;
    }
    std::vector<Complex> grid;
    for (std::size_t i = 0; i < a.re_steps; ++i) {
        const double re = a.re_steps == 1
                              ? a.re_min
                              : a.re_min + (a.re_max - a.re_min) * i / double(a.re_steps - 1);
        for (std::size_t k = 0; k < a.im_steps; ++k) {
            const double im = a.im_steps == 1
                                  ? a.im_min
                                  : a.im_min + (a.im_max - a.im_min) * k / double(a.im_steps - 1);
            grid.push_back(Complex{re, im});
        }
    }
    const auto table = directsum::spectrum_enclosure_report(op, grid);
    const bool csv = a.common.format.empty() ? true : a.common.format == "csv";
    std::ostream& note = emit(csv ? table.to_csv() : table.to_json(), a.common.out);
    std::size_t skipped = 0, uncertified = 0;
    for (const auto& row : table.rows) {
        if (row.status == directsum::CertStatus::skipped) ++skipped;
        if (row.status == directsum::CertStatus::uncertified) ++uncertified;
    }
    note << "enclosure scan: " << table.rows.size() << " points, " << skipped
         << " skipped (inside enclosure margin 0.1), " << uncertified << " uncertified\n";
    return 0;
}

// ------------------------------------------------------- counterexample ----

struct CounterexampleArgs {
    CommonOpts common;
    std::size_t m_max = 16;
};

int run_counterexample(const CounterexampleArgs& a) {
    const auto table = directsum::blowup_scan(directsum::DirectSumOperator{a.m_max});
    const bool csv = a.common.format.empty() ? true : a.common.format == "csv";
    std::ostream& note = emit(csv ? table.to_csv() : table.to_json(), a.common.out);
    note << table.interpretation << '\n';
    if (a.common.tol_report) note << "tolerance: running max >= sqrt(k) - 1e-9, all rows certified\n";
    if (!directsum::blowup_growth_holds(table, 1e-9)) {
        json detail;
        detail["m_max"] = a.m_max;
        return violation("counterexample",
                         "running max fell below sqrt(k) or a row lost certification", detail);
    }
    return 0;
}

// -------------------------------------------------- inequality suites ------

int run_krivine(const CommonOpts& common, std::size_t trials) {
    const auto rep = lattice::krivine_suite(trials, common.seed);
    const auto dual = lattice::dual_consistency_suite(trials, common.seed);
    json j = json::parse(rep.to_json());
    j["dual_worst_rel_gap"] = dual.worst_rel_gap;
    if (common.tol_report)
        j["tolerances"] = {{"margin_floor", -1e-10}, {"dual_rel_gap", 1e-10}};
    emit(j.dump(), common.out) << "krivine worst margin " << fmt_double(rep.worst_margin)
                               << " (floor -1e-10)\n";
    if (rep.worst_margin < -1e-10)
        return violation("krivine", "p-norm inequality margin below -1e-10", j);
    if (dual.worst_rel_gap > 1e-10)
        return violation("krivine", "dual representation missed pvector_norm", j);
    return 0;
}

int run_minkowski(const CommonOpts& common, std::size_t trials) {
    const auto rep = lattice::minkowski_suite(trials, common.seed);
    json j = json::parse(rep.to_json());
    if (common.tol_report) j["tolerances"] = {{"margin_floor", -1e-10}};
    emit(j.dump(), common.out) << "minkowski worst margin " << fmt_double(rep.worst_margin)
                               << " (floor -1e-10)\n";
    if (rep.worst_margin < -1e-10)
        return violation("minkowski", "integral Minkowski margin below -1e-10", j);
    return 0;
}

// -------------------------------------------------------------- laplace ----

struct LaplaceArgs {
    CommonOpts common;
    std::size_t trials = 100;
    std::string matrix_path;
    double re = 1.0, im = 0.0;
    std::size_t steps = 4096;
};

int run_laplace(const LaplaceArgs& a) {
    if (!a.matrix_path.empty()) {
        const CMatrix m = CMatrix::from_json(read_file(a.matrix_path));
        const auto spec = dynamics::GeneratorSpec::make(
            m, dynamics::PositivityClass::metzler_positive_semigroup);
        const Complex lambda{a.re, a.im};
        const double s = numlin::spectral_bound(m);
        const double horizon = 23.5 / (lambda.real() - s);
        std::vector<double> g(m.rows(), 1.0);
        const double rel = dynamics::laplace_check(spec, lambda, g, horizon, a.steps);
        json j;
        j["rel_error"] = rel;
        j["lambda"] = {a.re, a.im};
        j["horizon"] = horizon;
        j["steps"] = a.steps;
        if (a.common.tol_report) j["tolerances"] = {{"rel_error_max", 1e-6}};
        emit(j.dump(), a.common.out) << "laplace rel error " << fmt_double(rel) << '\n';
        return rel <= 1e-6 ? 0 : violation("laplace", "quadrature missed the resolvent", j);
    }
    const auto rep = dynamics::laplace_suite(a.trials, a.common.seed);
    json j = with_tolerances(rep.to_json(), a.common, {{"rel_error_max", 1e-6}});
    emit(j.dump(), a.common.out) << "laplace worst rel error " << fmt_double(rep.worst_rel_error)
                                 << " (max 1e-6)\n";
    if (rep.worst_rel_error > 1e-6)
        return violation("laplace", "quadrature missed the resolvent", j);
    return 0;
}

// ---------------------------------------------------------- convolution ----

struct ConvolutionArgs {
    CommonOpts common;
    std::size_t trials = 100;
    double p = 2.0;
    std::string matrix_path;
    std::string f_path;
    double horizon = 4.0 * 3.14159265358979323846;
    std::size_t t_points = 64;
};

int run_convolution(const ConvolutionArgs& a) {
    if (!a.matrix_path.empty()) {
        const CMatrix m = CMatrix::from_json(read_file(a.matrix_path));
        const auto spec = dynamics::GeneratorSpec::make(
            m, dynamics::PositivityClass::metzler_positive_semigroup);
        dynamics::StepFunction f =
            a.f_path.empty()
                ? dynamics::StepFunction::make({0.0, quad::kTwoPi},
                                               {std::vector<double>(m.rows(), 1.0)})
                : dynamics::StepFunction::from_json(read_file(a.f_path));
        const auto res = dynamics::convolution_margin(spec, f, a.horizon, a.p, a.t_points);
        json j = with_tolerances(res.to_json(), a.common, {{"margin_floor", "-tol_quad"}});
        emit(j.dump(), a.common.out)
            << "convolution margin " << fmt_double(res.margin) << " +- " << fmt_double(res.tol_quad)
            << '\n';
        if (res.margin < -res.tol_quad)
            return violation("convolution", "margin below the reported quadrature tolerance", j);
        return 0;
    }
    const auto rep = dynamics::convolution_suite(a.trials, a.common.seed, a.p);
    json j = with_tolerances(rep.to_json(), a.common, {{"margin_floor", "-tol_quad per trial"}});
    emit(j.dump(), a.common.out) << "convolution worst slack " << fmt_double(rep.worst_slack)
                                 << " (must be >= 0)\n";
    if (rep.worst_slack < 0.0)
        return violation("convolution", "margin below the reported quadrature tolerance", j);
    return 0;
}

// --------------------------------------------------------- hyperbolicity ---

struct HyperbolicityArgs {
    CommonOpts common;
    std::size_t trials = 25;
    std::string matrix_path;
    long n_modes = 32;
    double p = 2.0;
    std::size_t families = 48;
    std::size_t quad_points = 0;
};

int run_hyperbolicity(const HyperbolicityArgs& a) {
    if (!a.matrix_path.empty()) {
        const CMatrix m = CMatrix::from_json(read_file(a.matrix_path));
        const auto rep = dynamics::hyperbolicity_constant(dynamics::GeneratorSpec::make(m),
                                                          a.n_modes, a.p, a.quad_points,
                                                          a.families, a.common.seed);
        json j = with_tolerances(rep.to_json(), a.common,
                                 {{"ratio_window", "[0.98, 1 + 1e-8]"}, {"spectrum_margin", 1e-6}});
        emit(j.dump(), a.common.out)
            << "hyperbolicity spectrum_clear=" << (rep.spectrum_clear ? "true" : "false") << '\n';
        if (rep.spectrum_clear && a.p == 2.0) {
            const double ratio = *rep.c_lower / *rep.c_exact_p2;
            if (ratio < 0.98 || ratio > 1.0 + 1e-8)
                return violation("hyperbolicity", "randomized lower bound left [0.98, 1+1e-8]", j);
        }
        return 0;
    }
    const auto rep =
        dynamics::hyperbolicity_suite(a.trials, a.common.seed, a.n_modes, a.families);
    json j = with_tolerances(rep.to_json(), a.common, {{"ratio_window", "[0.98, 1 + 1e-8]"}});
    emit(j.dump(), a.common.out) << "hyperbolicity ratio range [" << fmt_double(rep.min_ratio)
                                 << ", " << fmt_double(rep.max_ratio) << "]\n";
    if (rep.min_ratio < 0.98 || rep.max_ratio > 1.0 + 1e-8)
        return violation("hyperbolicity", "randomized lower bound left [0.98, 1+1e-8]", j);
    return 0;
}

// --------------------------------------------------------------- growth ----

struct GrowthArgs {
    CommonOpts common;
    std::string matrix_path;
    std::size_t random_trials = 0;
    double t_max = 200.0;
    std::size_t samples = 64;
};

int run_growth(const GrowthArgs& a) {
    const double tol = std::max(0.05, 10.0 / a.t_max);
    if (a.random_trials > 0) {
        const auto rep = dynamics::growth_suite(a.random_trials, a.common.seed, a.t_max, a.samples);
        json j = with_tolerances(rep.to_json(), a.common, {{"deviation_max", tol}});
        emit(j.dump(), a.common.out) << "growth worst deviation " << fmt_double(rep.worst_deviation)
                                     << " (max " << fmt_double(tol) << ")\n";
        if (rep.worst_deviation > tol)
            return violation("growth", "omega_hat drifted from the spectral bound", j);
        return 0;
    }
    if (a.matrix_path.empty())
        throw std::runtime_error("growth needs --matrix FILE or --random-trials N");
    const CMatrix m = CMatrix::from_json(read_file(a.matrix_path));
    const auto est = dynamics::growth_estimate(dynamics::GeneratorSpec::make(m), a.t_max, a.samples);
    json j = with_tolerances(est.to_json(), a.common, {{"deviation_max", tol}});
    emit(j.dump(), a.common.out) << "growth omega_hat=" << fmt_double(est.omega_hat)
                                 << " s=" << fmt_double(est.s_value) << '\n';
    if (std::abs(est.omega_hat - est.s_value) > tol)
        return violation("growth", "omega_hat drifted from the spectral bound", j);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"certified resolvent norms, semigroup envelopes and inequality suites"};
    app.require_subcommand(1);

    ShiftArgs shift_args;
    auto* shift_cmd = app.add_subcommand("shift", "shift-block resolvent bounds at one lambda");
    shift_cmd->add_option("--m", shift_args.m, "block dimension")->required()->check(CLI::PositiveNumber);
    shift_cmd->add_option("--lambda-re", shift_args.re, "Re(lambda)");
    shift_cmd->add_option("--lambda-im", shift_args.im, "Im(lambda)");
    add_common(shift_cmd, shift_args.common);

    BmArgs bm_args;
    auto* bm_cmd = app.add_subcommand("bm", "mode-operator resolvent report, exp norm or spectrum");
    bm_cmd->add_option("--m", bm_args.m, "block dimension")->required()->check(CLI::PositiveNumber);
    bm_cmd->add_option("--lambda-re", bm_args.re, "Re(lambda)");
    bm_cmd->add_option("--lambda-im", bm_args.im, "Im(lambda)");
    bm_cmd->add_option("--exp-t", bm_args.exp_t, "report ||e^{tB_M}|| at this t instead");
    bm_cmd->add_option("--spectrum-window", bm_args.window, "list spectrum points up to this mode");
    add_common(bm_cmd, bm_args.common);

    DsumArgs dsum_args;
    auto* dsum_cmd = app.add_subcommand("dsum", "direct-sum resolvent report or enclosure scan");
    dsum_cmd->add_option("--m-max", dsum_args.m_max, "number of blocks")->required()->check(CLI::PositiveNumber);
    dsum_cmd->add_option("--lambda-re", dsum_args.re, "Re(lambda)");
    dsum_cmd->add_option("--lambda-im", dsum_args.im, "Im(lambda)");
    dsum_cmd->add_flag("--enclosure", dsum_args.enclosure, "scan a grid instead of one point");
    dsum_cmd->add_option("--re-min", dsum_args.re_min);
    dsum_cmd->add_option("--re-max", dsum_args.re_max);
    dsum_cmd->add_option("--re-steps", dsum_args.re_steps)->check(CLI::PositiveNumber);
    dsum_cmd->add_option("--im-min", dsum_args.im_min);
    dsum_cmd->add_option("--im-max", dsum_args.im_max);
    dsum_cmd->add_option("--im-steps", dsum_args.im_steps)->check(CLI::PositiveNumber);
    add_common(dsum_cmd, dsum_args.common);

    CounterexampleArgs cx_args;
    auto* cx_cmd =
        app.add_subcommand("counterexample", "blow-up scan of the direct sum along Re(lambda) = 1");
    cx_cmd->add_option("--m-max", cx_args.m_max, "number of blocks and rows")
        ->required()
        ->check(CLI::Range(std::size_t{4}, std::size_t{4096}));
    add_common(cx_cmd, cx_args.common);

    CommonOpts krivine_common;
    std::size_t krivine_trials = 500;
    auto* krivine_cmd = app.add_subcommand("krivine", "lattice p-norm inequality suite");
    krivine_cmd->add_option("--trials", krivine_trials)->check(CLI::PositiveNumber);
    add_common(krivine_cmd, krivine_common);

    CommonOpts minkowski_common;
    std::size_t minkowski_trials = 200;
    auto* minkowski_cmd = app.add_subcommand("minkowski", "integral Minkowski inequality suite");
    minkowski_cmd->add_option("--trials", minkowski_trials)->check(CLI::PositiveNumber);
    add_common(minkowski_cmd, minkowski_common);

    LaplaceArgs laplace_args;
    auto* laplace_cmd =
        app.add_subcommand("laplace", "resolvent vs Laplace quadrature (suite or --matrix)");
    laplace_cmd->add_option("--trials", laplace_args.trials)->check(CLI::PositiveNumber);
    laplace_cmd->add_option("--matrix", laplace_args.matrix_path, "matrix JSON file (single check)");
    laplace_cmd->add_option("--lambda-re", laplace_args.re);
    laplace_cmd->add_option("--lambda-im", laplace_args.im);
    laplace_cmd->add_option("--steps", laplace_args.steps)->check(CLI::PositiveNumber);
    add_common(laplace_cmd, laplace_args.common);

    ConvolutionArgs conv_args;
    auto* conv_cmd =
        app.add_subcommand("convolution", "convolution inequality margin (suite or --matrix)");
    conv_cmd->add_option("--trials", conv_args.trials)->check(CLI::PositiveNumber);
    conv_cmd->add_option("--p", conv_args.p)->check(CLI::Range(1.0, 64.0));
    conv_cmd->add_option("--matrix", conv_args.matrix_path, "matrix JSON file (single margin)");
    conv_cmd->add_option("--f", conv_args.f_path, "step function JSON file");
    conv_cmd->add_option("--horizon", conv_args.horizon)->check(CLI::PositiveNumber);
    conv_cmd->add_option("--t-points", conv_args.t_points)->check(CLI::PositiveNumber);
    add_common(conv_cmd, conv_args.common);

    HyperbolicityArgs hyp_args;
    auto* hyp_cmd = app.add_subcommand(
        "hyperbolicity", "mode-sum constant: randomized lower bound vs p = 2 exact value");
    hyp_cmd->add_option("--trials", hyp_args.trials)->check(CLI::PositiveNumber);
    hyp_cmd->add_option("--matrix", hyp_args.matrix_path, "matrix JSON file (single report)");
    hyp_cmd->add_option("--n-modes", hyp_args.n_modes)->check(CLI::NonNegativeNumber);
    hyp_cmd->add_option("--p", hyp_args.p)->check(CLI::Range(1.0, 64.0));
    hyp_cmd->add_option("--families", hyp_args.families)->check(CLI::PositiveNumber);
    hyp_cmd->add_option("--quad", hyp_args.quad_points, "t-grid size (0 = automatic)");
    add_common(hyp_cmd, hyp_args.common);

    GrowthArgs growth_args;
    auto* growth_cmd =
        app.add_subcommand("growth", "growth-bound estimate against the spectral bound");
    growth_cmd->add_option("--matrix", growth_args.matrix_path, "matrix JSON file");
    growth_cmd->add_option("--random-trials", growth_args.random_trials, "random-generator suite");
    growth_cmd->add_option("--t-max", growth_args.t_max)->check(CLI::PositiveNumber);
    growth_cmd->add_option("--samples", growth_args.samples)->check(CLI::PositiveNumber);
    add_common(growth_cmd, growth_args.common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (shift_cmd->parsed()) return run_shift(shift_args);
        if (bm_cmd->parsed()) return run_bm(bm_args);
        if (dsum_cmd->parsed()) return run_dsum(dsum_args);
        if (cx_cmd->parsed()) return run_counterexample(cx_args);
        if (krivine_cmd->parsed()) return run_krivine(krivine_common, krivine_trials);
        if (minkowski_cmd->parsed()) return run_minkowski(minkowski_common, minkowski_trials);
        if (laplace_cmd->parsed()) return run_laplace(laplace_args);
        if (conv_cmd->parsed()) return run_convolution(conv_args);
        if (hyp_cmd->parsed()) return run_hyperbolicity(hyp_args);
        if (growth_cmd->parsed()) return run_growth(growth_args);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
