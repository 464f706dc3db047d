#ifndef LPLAB_SETS_HPP
#define LPLAB_SETS_HPP

#include <string>
#include <vector>

#include "lplab/montecarlo.hpp"
#include "lplab/rng.hpp"

namespace lplab {

/// Finite point cloud in R^n. Duplicates within 1e-12 are merged.
struct DiscreteSet {
    std::vector<Point> points;
    int n = 0;

    DiscreteSet() = default;
    explicit DiscreteSet(std::vector<Point> pts);

    std::size_t size() const { return points.size(); }
    Box bounding_box() const;

    /// Evenly spaced samples of a box, endpoints included.
    static DiscreteSet sample_box(const Box& box, int per_axis);
    /// Samples of a 1-D segment [a, b].
    static DiscreteSet sample_segment(double a, double b, int count);
};

/// Vertex-represented convex body. Construction keeps only the extreme
/// points of the hull of the input.
class ConvexPolytope {
  public:
    explicit ConvexPolytope(std::vector<Point> pts);

    const std::vector<Point>& vertices() const { return vertices_; }
    int dim() const { return n_; }

  private:
    std::vector<Point> vertices_;
    int n_ = 0;
};

/// h_K(u) = max over vertices of u . v.
double support_function(const ConvexPolytope& K, const Point& u);

/// Coefficient set M subset of R^2, a,b >= 0, for M-addition.
struct CoefficientSet {
    std::vector<std::pair<double, double>> pairs;
    std::string descriptor;

    static CoefficientSet explicit_pairs(std::vector<std::pair<double, double>> pairs);
    /// The classical Minkowski coefficient set {(1, 1)}.
    static CoefficientSet classical();
    /// Minkowski combination {(1 - lambda, lambda)}.
    static CoefficientSet minkowski(double lambda);
    /// Samples of {(a,b) : a^q + b^q = 1, a,b >= 0}, q the Hoelder conjugate
    /// of p, parameterized a = (1-l)^{1/q}, b = l^{1/q} on a lambda grid that
    /// always contains {0, 1/2, 1}. For p = 1 the set degenerates to {(1,1)}.
    static CoefficientSet lp_curve(double p, int lambda_resolution);

    bool symmetric(double tol = 1e-12) const;
};

/// Hoelder conjugate q of p >= 1; +inf for p = 1.
double holder_conjugate(double p);

/// K (+)_M L = {ax + by : (a,b) in M, x in A, y in B}, deduplicated to 1e-12.
DiscreteSet m_add(const DiscreteSet& A, const DiscreteSet& B, const CoefficientSet& M);

/// Pointwise L_p sum via the lambda-parameterized coefficient curve.
/// p = 1 delegates to classical Minkowski addition.
DiscreteSet lp_pointwise_sum(const DiscreteSet& A, const DiscreteSet& B, double p,
                             int lambda_resolution);

struct SupportValue {
    Point direction;
    double value;
};

/// Per-direction (h_K^p + h_L^p)^{1/p} for bodies containing the origin.
/// Throws std::domain_error naming the offending direction if some support
/// value is negative.
std::vector<SupportValue> lp_support_sum(const ConvexPolytope& K, const ConvexPolytope& L,
                                         double p, const std::vector<Point>& directions);

/// Membership of p in conv(points), by LP feasibility (phase-1 simplex).
bool in_convex_hull(const Point& p, const std::vector<Point>& points, double tol = 1e-9);

/// Volume of conv(A): exact in n = 1 (interval length) and n = 2 (shoelace,
/// stderr 0); Monte Carlo with hull-membership tests otherwise.
McEstimate volume_hull(const DiscreteSet& A, std::int64_t samples, RandomSource rng);

} // namespace lplab

#endif
