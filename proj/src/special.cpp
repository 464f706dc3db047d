#include "lplab/special.hpp"

#include <cmath>
#include <stdexcept>

namespace lplab {

namespace {
// Lanczos coefficients for g = 7, n = 9 (Godfrey's tabulation).
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};
} // namespace

double gamma_fn(double x) {
    if (!(x > 0.0)) throw std::domain_error("gamma_fn: requires x > 0");
    if (x < 0.5) {
        // reflection keeps the series argument away from 0
        return M_PI / (std::sin(M_PI * x) * gamma_fn(1.0 - x));
    }
    x -= 1.0;
    double a = kLanczos[0];
    const double t = x + kLanczosG + 0.5;
    for (int i = 1; i < 9; ++i) a += kLanczos[i] / (x + i);
    return std::sqrt(2.0 * M_PI) * std::pow(t, x + 0.5) * std::exp(-t) * a;
}

double kappa(double s) {
    if (!(s > 0.0)) throw std::domain_error("kappa: requires s > 0");
    return std::pow(M_PI, s / 2.0) / gamma_fn(s / 2.0 + 1.0);
}

} // namespace lplab
