#ifndef LPLAB_VERIFIERS_HPP
#define LPLAB_VERIFIERS_HPP

#include <optional>

#include "lplab/fn_ops.hpp"
#include "lplab/means.hpp"
#include "lplab/report.hpp"
#include "lplab/sets.hpp"

namespace lplab {

/// tolerance = a * grid spacing + b * lambda-grid spacing + 3 * MC stderr.
/// The coefficients a, b are calibrated once on the closed-form segment and
/// indicator cases (see tests) and recorded in every report.
struct TolerancePolicy {
    double a = 2.0;
    double b = 2.0;

    double operator()(double grid_spacing, double lambda_spacing, double mc_stderr = 0.0) const {
        return a * grid_spacing + b * lambda_spacing + 3.0 * mc_stderr;
    }
};

/// Brunn-Minkowski: V((1-l)K + lL)^{1/n} >= (1-l)V(K)^{1/n} + lV(L)^{1/n}.
VerificationReport verify_bm(const DiscreteSet& K, const DiscreteSet& L, double lambda,
                             std::int64_t samples, RandomSource rng);

/// Prekopa-Leindler. The hypothesis h((1-l)x + ly) >= f(x)^{1-l} g(y)^l is
/// sampled over support-node pairs; violations beyond `hypothesis_tol`
/// (default: an interpolation allowance derived from the grids) yield
/// verdict hypothesis_failed.
VerificationReport verify_pl(const GridFunction& f, const GridFunction& g, const GridFunction& h,
                             double lambda, std::optional<double> hypothesis_tol = std::nullopt);

/// Borell-Brascamp-Lieb with mean order alpha >= -1/n; alpha = 0 reproduces
/// verify_pl exactly.
VerificationReport verify_bbl(const GridFunction& f, const GridFunction& g,
                              const GridFunction& h, double lambda, const MeanSpec& alpha,
                              std::optional<double> hypothesis_tol = std::nullopt);

/// L_p Brunn-Minkowski for compact sets:
/// V(K +_p L)^{p/n} >= V(K)^{p/n} + V(L)^{p/n}. The left side uses the hull
/// of the pointwise sum, an upper bound for nonconvex samples (recorded in
/// the report metadata).
VerificationReport verify_lp_bm(const DiscreteSet& K, const DiscreteSet& L, double p,
                                int lambda_resolution, std::int64_t samples, RandomSource rng);

/// Inputs of the main functional L_p Brunn-Minkowski check.
struct Thm15Config {
    double p = 2.0;
    double s = 1.0;
    double mu = 1.0;
    double omega = 1.0;
    GridFunction f;
    GridFunction g;
    std::vector<int> resolutions = {65, 129, 257};        // output-grid nodes, nested
    std::vector<int> lambda_resolutions;                  // defaults to 2r - 1 per entry

    void validate() const;
    int lambda_resolution_for(std::size_t i) const;
};

/// Output grid covering supp([mu x f] (+)_p [omega x g]) at `resolution`
/// nodes per axis, with the box computed from the actual coefficient pairs
/// so the boundary nodes are reachable.
Grid thm15_out_grid(const Thm15Config& cfg, int resolution, int lambda_resolution);

/// The minimal h satisfying the inequality's hypothesis (from below, up to
/// discretization): [mu x_{p,s} f] (+)_{p,s} [omega x_{p,s} g].
GridFunction construct_h_thm15(const Thm15Config& cfg, const Grid& out_grid,
                               int lambda_resolution);

/// (int h)^{p/(n+s)} >= mu (int f)^{p/(n+s)} + omega (int g)^{p/(n+s)},
/// with a refinement sweep over cfg.resolutions recorded in the metadata.
/// The discrete h is a pointwise lower bound of the true extremal h, so a
/// passing margin certifies the inequality from the safe side.
VerificationReport verify_thm15(const Thm15Config& cfg);

/// GridFunctions resampled onto a refined grid of the same box
/// (multilinear interpolation; exact at persisting nodes).
GridFunction resample(const GridFunction& f, int resolution);

enum class Lemma31Condition { convex_M, origin_supports };

/// s-concavity of f (+)_{M,s} g, valid when the coefficient set is convex
/// or when both supports contain the origin (with a dominating pair).
VerificationReport check_lemma31(const GridFunction& f, const GridFunction& g,
                                 const CoefficientSet& M, const SParam& s,
                                 Lemma31Condition condition);

/// Forward lift inclusion K_f (+)_M K_g subset K_{f (+)_{M,s} g} by point
/// sampling, plus the reverse interior approximability fraction.
VerificationReport check_lemma32(const GridFunction& f, const GridFunction& g,
                                 const CoefficientSet& M, int s, std::int64_t n_samples,
                                 RandomSource rng);

struct STildeResult {
    double estimate = 0.0;
    bool limit_ok = false;
    std::vector<std::pair<double, double>> quotients;  // (epsilon, quotient)
};

/// S~_{p,s}(f; g) = (p/(n+s)) lim_{e->0+} (int[f (+)_{p,s} (e x g)] - int f)/e,
/// by difference quotients at the given epsilons (strictly decreasing, >= 3)
/// and linear extrapolation of the last two to 0. Each epsilon gets its own
/// output box (the exact reachable support) at `resolution` nodes per axis.
STildeResult s_tilde(const GridFunction& f, const GridFunction& g, double p, const SParam& s,
                     const std::vector<double>& epsilons, int resolution,
                     int lambda_resolution);

/// Functional L_p Minkowski inequality:
/// S~_{p,s}(f; g) >= (int f)^{1 - p/(n+s)} (int g)^{p/(n+s)}.
VerificationReport verify_lp_minkowski(const GridFunction& f, const GridFunction& g, double p,
                                       const SParam& s, const std::vector<double>& epsilons,
                                       int resolution, int lambda_resolution);

} // namespace lplab

#endif
