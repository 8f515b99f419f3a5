#pragma once

#include <array>
#include <cmath>
#include <cstddef>

#include "semistab/complex_matrix.hpp"

namespace semistab::quad {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

/// 8-point Gauss-Legendre rule mapped to [0, 1]; weights sum to 1.
inline constexpr std::array<double, 8> kGl8Nodes = {
    0.01985507175123188415821957, 0.10166676129318663020422303,
    0.23723379504183550709113047, 0.40828267875217509753026193,
    0.59171732124782490246973807, 0.76276620495816449290886953,
    0.89833323870681336979577697, 0.98014492824876811584178043,
};

inline constexpr std::array<double, 8> kGl8Weights = {
    0.05061426814518812957626567, 0.11119051722668723527217800,
    0.15685332293894364366898110, 0.18134189168918099148257522,
    0.18134189168918099148257522, 0.15685332293894364366898110,
    0.11119051722668723527217800, 0.05061426814518812957626567,
};

/// l_p norm of a complex vector, p in [1, inf).
inline double lp_norm(const CVector& v, double p) {
    double m = 0.0;
    for (const auto& x : v) m = std::max(m, std::abs(x));
    if (m == 0.0) return 0.0;
    double s = 0.0;
    for (const auto& x : v) s += std::pow(std::abs(x) / m, p);
    return m * std::pow(s, 1.0 / p);
}

inline double lp_norm(const std::vector<double>& v, double p) {
    double m = 0.0;
    for (const double x : v) m = std::max(m, std::abs(x));
    if (m == 0.0) return 0.0;
    double s = 0.0;
    for (const double x : v) s += std::pow(std::abs(x) / m, p);
    return m * std::pow(s, 1.0 / p);
}

}  // namespace semistab::quad
