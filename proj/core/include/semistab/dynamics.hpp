#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "semistab/complex_matrix.hpp"

namespace semistab::dynamics {

enum class PositivityClass { metzler_positive_semigroup, general };

/// A finite semigroup generator together with its verified positivity class.
/// Metzler (real entries, off-diagonal >= 0) is exactly the class whose
/// exponentials are entrywise nonnegative.
class GeneratorSpec {
public:
    /// Classifies the matrix automatically.
    static GeneratorSpec make(CMatrix a);
    /// Verifies the requested class; throws when the matrix does not satisfy it.
    static GeneratorSpec make(CMatrix a, PositivityClass requested);

    const CMatrix& matrix() const { return a_; }
    std::size_t dim() const { return a_.rows(); }
    PositivityClass positivity() const { return class_; }
    bool is_metzler() const { return class_ == PositivityClass::metzler_positive_semigroup; }

    /// A - sigma*I. Real shifts preserve the positivity class; shifts with a
    /// nonzero imaginary part (the rotation substitution) yield a general
    /// generator.
    GeneratorSpec shifted(Complex sigma) const;

private:
    GeneratorSpec(CMatrix a, PositivityClass c) : a_(std::move(a)), class_(c) {}
    CMatrix a_;
    PositivityClass class_;
};

struct GrowthEstimate {
    std::vector<std::pair<double, double>> samples;  // (t, log ||e^{tA}||)
    double omega_hat = 0.0;
    double s_value = 0.0;

    std::string to_json() const;
};

/// omega_hat is the least-squares slope of log ||e^{tA}|| over the top half
/// of the t grid, s_value the spectral bound. For a finite matrix the two
/// agree within max(0.05, 10/t_max) once the grid is long enough.
GrowthEstimate growth_estimate(const GeneratorSpec& spec, double t_max, std::size_t n_samples);

/// Relative error between the composite-quadrature value of
/// int_0^T e^{s(A - lambda)} g ds and the direct resolvent solve.
/// Uses composite 8-point Gauss-Legendre panels; `steps` counts integrand
/// evaluations. Requires the metzler class, Re(lambda) >= s(A) + 0.1 and a
/// horizon long enough that the dropped tail is below 1e-10.
double laplace_check(const GeneratorSpec& spec, Complex lambda, const std::vector<double>& g,
                     double horizon, std::size_t steps);

/// Vector-valued step function on [0, 2pi), extended 2pi-periodically.
/// values[i] applies on [breaks[i], breaks[i+1]).
struct StepFunction {
    std::vector<double> breaks;
    std::vector<std::vector<double>> values;

    static StepFunction make(std::vector<double> breaks, std::vector<std::vector<double>> values);
    static StepFunction from_json(const std::string& text);
    std::string to_json() const;

    std::size_t dim() const { return values.front().size(); }
    std::size_t pieces() const { return values.size(); }
    /// Periodic lookup.
    const std::vector<double>& at(double t) const;
};

struct ConvolutionResult {
    double margin = 0.0;  // rhs - lhs
    double lhs = 0.0;
    double rhs = 0.0;
    double tol_quad = 0.0;  // reported quadrature error bound, never absorbed

    std::string to_json() const;
};

/// rhs - lhs for
///   lhs = (int_0^{2pi} || int_0^N e^{sA} f(t-s) ds ||_p^p dt)^{1/p},
///   rhs = ||A^{-1}||_{p->p} (int_0^{2pi} ||f(t)||_p^p dt)^{1/p},
/// with ||A^{-1}|| from the Boyd power method on -A^{-1} >= 0. Both time
/// integrals are composite trapezoid with panels split at the step breaks;
/// tol_quad is a Richardson estimate from a doubled grid.
ConvolutionResult convolution_margin(const GeneratorSpec& spec, const StepFunction& f,
                                     double horizon, double p, std::size_t t_points);

struct HyperbolicityReport {
    bool spectrum_clear = false;
    std::optional<double> c_lower;
    std::optional<double> c_exact_p2;  // p = 2 only
    double quad_error = 0.0;

    std::string to_json() const;
};

/// Lower bound on the best constant c in the mode-sum inequality
///   int ||sum (ik - A)^{-1} v_k e^{ikt}||^p dt <= c^p int ||sum v_k e^{ikt}||^p dt
/// over seeded random coefficient families, with the p = 2 Parseval value
/// max_k ||(ik - A)^{-1}||_2 computed exactly and its maximizing direction
/// injected as the deterministic first family.
HyperbolicityReport hyperbolicity_constant(const GeneratorSpec& spec, long n_modes, double p,
                                           std::size_t quad_points, std::size_t trials,
                                           std::uint64_t seed);

// Seeded randomized suites shared by the CLI and the acceptance tests.

struct LaplaceSuiteReport {
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    double worst_rel_error = 0.0;
    std::string to_json() const;
};
LaplaceSuiteReport laplace_suite(std::size_t trials, std::uint64_t seed);

struct ConvolutionSuiteReport {
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    double p = 2.0;
    double worst_margin = 0.0;  // min over trials of raw margin
    double max_tol = 0.0;       // max reported quadrature tolerance
    double worst_slack = 0.0;   // min over trials of margin + tol_quad
    std::string to_json() const;
};
ConvolutionSuiteReport convolution_suite(std::size_t trials, std::uint64_t seed, double p);

struct HyperbolicitySuiteReport {
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    double min_ratio = 0.0;  // c_lower / c_exact_p2 across trials
    double max_ratio = 0.0;
    std::string to_json() const;
};
HyperbolicitySuiteReport hyperbolicity_suite(std::size_t trials, std::uint64_t seed,
                                             long n_modes, std::size_t families);

struct GrowthSuiteReport {
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    double worst_deviation = 0.0;  // max |omega_hat - s_value|
    double tolerance = 0.0;
    std::string to_json() const;
};
GrowthSuiteReport growth_suite(std::size_t trials, std::uint64_t seed, double t_max,
                               std::size_t n_samples);

}  // namespace semistab::dynamics
