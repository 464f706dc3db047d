#ifndef LPLAB_FN_OPS_HPP
#define LPLAB_FN_OPS_HPP

#include "lplab/grid_function.hpp"
#include "lplab/montecarlo.hpp"
#include "lplab/sets.hpp"

namespace lplab {

/// Concavity order s > 0; lifts to R^{n+s} require an integer s.
struct SParam {
    double s = 1.0;
    bool is_integer = false;

    explicit SParam(double s_);
    static SParam integer(int s_);
};

struct ConcavityCheck {
    bool s_concave = false;
    bool support_convex = false;
    /// Worst signed violation of lambda*f(x)^{1/s} + (1-lambda)*f(y)^{1/s}
    /// - f(lambda x + (1-lambda) y)^{1/s}; positive means a violation.
    double worst_violation = 0.0;
};

/// Samples pairs of support nodes (exhaustive in 1-D up to a budget,
/// seeded-random otherwise) and checks support convexity plus concavity of
/// f^{1/s} against `tol`.
ConcavityCheck is_s_concave(const GridFunction& f, const SParam& s, double tol,
                            std::uint64_t seed = 2024);

/// [lambda x_{p,s} f](x) = lambda^{s/p} f(lambda^{-1/p} x). The box is
/// rescaled by lambda^{1/p} so node values map exactly, no interpolation.
GridFunction scale_fn(const GridFunction& f, double lambda, double p, const SParam& s);

/// Bounding box of supp(f) (+)_M supp(g), from the actual coefficient pairs.
Box m_sum_support_box(const GridFunction& f, const GridFunction& g, const CoefficientSet& M);

/// Sup-convolution [f (+)_{M,s} g](z) = sup {(a f(x)^{1/s} + b g(y)^{1/s})^s
/// : z = ax + by, (a,b) in M}; 0 where z is not expressible. Per output node
/// the inner variable is solved from z (y = (z - ax)/b over support nodes x
/// of f, and symmetrically), accepting decompositions within half a grid
/// spacing of the closed supports.
GridFunction sup_conv_m(const GridFunction& f, const GridFunction& g, const CoefficientSet& M,
                        const SParam& s, const Grid& out_grid);

/// Oracle: scatter every (a,b,x-node,y-node) combination onto the nearest
/// output node. Quartic cost; for small instances and tests only.
GridFunction sup_conv_m_bruteforce(const GridFunction& f, const GridFunction& g,
                                   const CoefficientSet& M, const SParam& s,
                                   const Grid& out_grid);

/// f (+)_{p,s} g, i.e. sup_conv_m over the L_p coefficient curve
/// (classical Minkowski coefficients when p = 1).
GridFunction sup_conv_p(const GridFunction& f, const GridFunction& g, double p, const SParam& s,
                        int lambda_resolution, const Grid& out_grid);

/// The body K_f in R^{n+s}: (x, y) with x in supp f and |y| <= f(x)^{1/s}.
struct LiftedBody {
    GridFunction f;
    int s = 1;

    LiftedBody(GridFunction f_, int s_);

    int ambient_dim() const { return f.dim() + s; }
    /// Box supp(f) x [-m, m]^s with m = max f ^{1/s}; hosts all of K_f.
    Box bounding_box() const;
};

bool lift_membership(const LiftedBody& L, const Point& point);

/// Relaxed membership used by inclusion checks: the x-part may miss the
/// support by `spacings` grid spacings and |y| may exceed the local radius
/// by the same allowance.
bool lift_membership_tol(const LiftedBody& L, const Point& point, double spacings);

/// Monte Carlo volume of K_f; agrees with kappa_s * integral(f) for
/// s-concave f.
McEstimate lift_volume(const LiftedBody& L, std::int64_t samples, RandomSource rng);

} // namespace lplab

#endif
