#include "lplab/means.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lplab {

MeanSpec MeanSpec::finite(double a) {
    if (!std::isfinite(a)) throw std::domain_error("MeanSpec::finite: alpha must be finite");
    if (a == 0.0) return zero();
    return {Kind::finite, a};
}

std::string MeanSpec::str() const {
    switch (kind) {
        case Kind::zero: return "0";
        case Kind::plus_inf: return "+inf";
        case Kind::minus_inf: return "-inf";
        case Kind::finite: return std::to_string(alpha);
    }
    return "?";
}

double alpha_mean(double a, double b, double lambda, const MeanSpec& spec) {
    if (!(lambda > 0.0 && lambda < 1.0))
        throw std::domain_error("alpha_mean: lambda must lie in (0, 1)");
    if (a < 0.0 || b < 0.0) throw std::domain_error("alpha_mean: a, b must be >= 0");
    if (a == 0.0 || b == 0.0) return 0.0;
    switch (spec.kind) {
        case MeanSpec::Kind::zero:
            return std::pow(a, 1.0 - lambda) * std::pow(b, lambda);
        case MeanSpec::Kind::plus_inf:
            return std::max(a, b);
        case MeanSpec::Kind::minus_inf:
            return std::min(a, b);
        case MeanSpec::Kind::finite: {
            const double al = spec.alpha;
            return std::pow((1.0 - lambda) * std::pow(a, al) + lambda * std::pow(b, al),
                            1.0 / al);
        }
    }
    return 0.0;
}

MeanSpec bbl_conclusion_index(const MeanSpec& alpha, int n) {
    if (n < 1) throw std::domain_error("bbl_conclusion_index: n must be >= 1");
    switch (alpha.kind) {
        case MeanSpec::Kind::zero:
            return MeanSpec::zero();
        case MeanSpec::Kind::plus_inf:
            return MeanSpec::finite(1.0 / n);
        case MeanSpec::Kind::minus_inf:
            throw std::domain_error("bbl_conclusion_index: alpha must be >= -1/n");
        case MeanSpec::Kind::finite: {
            const double a = alpha.alpha;
            if (a < -1.0 / n - 1e-15)
                throw std::domain_error("bbl_conclusion_index: alpha must be >= -1/n");
            const double denom = n * a + 1.0;
            if (std::abs(denom) <= 1e-15) return MeanSpec::minus_inf();  // boundary alpha = -1/n
            return MeanSpec::finite(a / denom);
        }
    }
    return MeanSpec::zero();
}

} // namespace lplab
