#ifndef LPLAB_MEANS_HPP
#define LPLAB_MEANS_HPP

#include <string>

namespace lplab {

/// Order parameter of the weighted power mean M_alpha(a, b, lambda),
/// with exact sentinels for 0 and +-infinity.
struct MeanSpec {
    enum class Kind { finite, zero, plus_inf, minus_inf };

    Kind kind = Kind::zero;
    double alpha = 0.0;  // meaningful only for Kind::finite

    static MeanSpec finite(double a);
    static MeanSpec zero() { return {Kind::zero, 0.0}; }
    static MeanSpec plus_inf() { return {Kind::plus_inf, 0.0}; }
    static MeanSpec minus_inf() { return {Kind::minus_inf, 0.0}; }

    std::string str() const;
};

/// M_alpha(a, b, lambda): ((1-l)a^alpha + l b^alpha)^{1/alpha} for finite
/// alpha != 0, the geometric mean at alpha = 0, max/min at +-infinity,
/// and 0 whenever ab = 0. Requires lambda in (0, 1).
double alpha_mean(double a, double b, double lambda, const MeanSpec& spec);

/// Conclusion index alpha/(n*alpha + 1) of the Borell-Brascamp-Lieb
/// inequality, with the conventions 0 -> 0, +inf -> 1/n, -1/n -> -inf.
MeanSpec bbl_conclusion_index(const MeanSpec& alpha, int n);

} // namespace lplab

#endif
