#include "lplab/sets.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace lplab {

namespace {

constexpr double kDedupTol = 1e-12;

bool lex_less(const Point& a, const Point& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < b[i]) return true;
        if (a[i] > b[i]) return false;
    }
    return false;
}

bool close(const Point& a, const Point& b, double tol) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::abs(a[i] - b[i]) > tol) return false;
    return true;
}

std::vector<Point> dedup(std::vector<Point> pts, double tol) {
    std::sort(pts.begin(), pts.end(), lex_less);
    std::vector<Point> out;
    for (auto& p : pts)
        if (out.empty() || !close(out.back(), p, tol)) out.push_back(std::move(p));
    return out;
}

double cross2(const Point& o, const Point& a, const Point& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// Andrew's monotone chain; collinear points dropped.
std::vector<Point> hull2d(std::vector<Point> pts) {
    pts = dedup(std::move(pts), kDedupTol);
    const std::size_t n = pts.size();
    if (n < 3) return pts;
    std::vector<Point> h(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        while (k >= 2 && cross2(h[k - 2], h[k - 1], pts[i]) <= 1e-14) --k;
        h[k++] = pts[i];
    }
    const std::size_t lower = k + 1;
    for (std::size_t i = n - 1; i-- > 0;) {
        while (k >= lower && cross2(h[k - 2], h[k - 1], pts[i]) <= 1e-14) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return h;
}

double shoelace(const std::vector<Point>& hull) {
    double a = 0.0;
    const std::size_t n = hull.size();
    if (n < 3) return 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const Point& p = hull[i];
        const Point& q = hull[(i + 1) % n];
        a += p[0] * q[1] - q[0] * p[1];
    }
    return std::abs(a) * 0.5;
}

// Phase-1 simplex feasibility for Ax = b, x >= 0.
bool lp_equality_feasible(std::vector<std::vector<double>> A, std::vector<double> b,
                          double tol) {
    const std::size_t rows = A.size();
    const std::size_t cols = A.empty() ? 0 : A[0].size();
    for (std::size_t i = 0; i < rows; ++i) {
        if (b[i] < 0.0) {
            b[i] = -b[i];
            for (auto& v : A[i]) v = -v;
        }
    }
    // tableau with artificial basis; objective row drives sum of artificials to 0
    const std::size_t width = cols + rows + 1;
    std::vector<std::vector<double>> T(rows + 1, std::vector<double>(width, 0.0));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) T[i][j] = A[i][j];
        T[i][cols + i] = 1.0;
        T[i][width - 1] = b[i];
    }
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < width; ++j) T[rows][j] += T[i][j];
    for (std::size_t i = 0; i < rows; ++i) T[rows][cols + i] = 0.0;

    const std::size_t max_iter = 200 * (rows + cols) + 200;
    for (std::size_t iter = 0; iter < max_iter; ++iter) {
        // Bland's rule: smallest improving column among structural variables
        std::size_t enter = width;
        for (std::size_t j = 0; j < cols; ++j) {
            if (T[rows][j] > 1e-10) {
                enter = j;
                break;
            }
        }
        if (enter == width) break;
        std::size_t leave = rows;
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < rows; ++i) {
            if (T[i][enter] > 1e-12) {
                const double ratio = T[i][width - 1] / T[i][enter];
                if (ratio < best - 1e-14) {
                    best = ratio;
                    leave = i;
                }
            }
        }
        if (leave == rows) break;  // unbounded improvement cannot happen in phase 1
        const double piv = T[leave][enter];
        for (auto& v : T[leave]) v /= piv;
        for (std::size_t i = 0; i <= rows; ++i) {
            if (i == leave) continue;
            const double m = T[i][enter];
            if (m == 0.0) continue;
            for (std::size_t j = 0; j < width; ++j) T[i][j] -= m * T[leave][j];
        }
    }
    return T[rows][width - 1] <= tol;
}

} // namespace

DiscreteSet::DiscreteSet(std::vector<Point> pts) {
    if (pts.empty()) throw std::domain_error("DiscreteSet: must be nonempty");
    n = static_cast<int>(pts[0].size());
    for (const auto& p : pts) {
        if (static_cast<int>(p.size()) != n)
            throw std::invalid_argument("DiscreteSet: mixed dimensions");
        for (double v : p)
            if (!std::isfinite(v)) throw std::domain_error("DiscreteSet: non-finite coordinate");
    }
    points = dedup(std::move(pts), kDedupTol);
}

Box DiscreteSet::bounding_box() const {
    std::vector<double> lo(n, std::numeric_limits<double>::infinity());
    std::vector<double> hi(n, -std::numeric_limits<double>::infinity());
    for (const auto& p : points) {
        for (int i = 0; i < n; ++i) {
            lo[i] = std::min(lo[i], p[i]);
            hi[i] = std::max(hi[i], p[i]);
        }
    }
    for (int i = 0; i < n; ++i) {
        if (!(lo[i] < hi[i])) {  // flat axis; widen so Box stays valid
            lo[i] -= 1e-9;
            hi[i] += 1e-9;
        }
    }
    return Box(std::move(lo), std::move(hi));
}

DiscreteSet DiscreteSet::sample_box(const Box& box, int per_axis) {
    Grid g(box, per_axis);
    std::vector<Point> pts;
    pts.reserve(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) pts.push_back(g.node(i));
    return DiscreteSet(std::move(pts));
}

DiscreteSet DiscreteSet::sample_segment(double a, double b, int count) {
    return sample_box(Box({a}, {b}), count);
}

ConvexPolytope::ConvexPolytope(std::vector<Point> pts) {
    if (pts.empty()) throw std::domain_error("ConvexPolytope: must be nonempty");
    n_ = static_cast<int>(pts[0].size());
    pts = dedup(std::move(pts), kDedupTol);
    if (n_ == 1) {
        double lo = pts[0][0], hi = pts[0][0];
        for (const auto& p : pts) {
            lo = std::min(lo, p[0]);
            hi = std::max(hi, p[0]);
        }
        vertices_ = {Point{lo}};
        if (hi > lo) vertices_.push_back(Point{hi});
    } else if (n_ == 2) {
        vertices_ = hull2d(std::move(pts));
    } else {
        // keep v iff v is not in the hull of the remaining points
        for (std::size_t i = 0; i < pts.size(); ++i) {
            std::vector<Point> others;
            others.reserve(pts.size() - 1);
            for (std::size_t j = 0; j < pts.size(); ++j)
                if (j != i) others.push_back(pts[j]);
            if (others.empty() || !in_convex_hull(pts[i], others)) vertices_.push_back(pts[i]);
        }
    }
    if (vertices_.empty()) vertices_ = {pts[0]};
}

double support_function(const ConvexPolytope& K, const Point& u) {
    if (static_cast<int>(u.size()) != K.dim())
        throw std::invalid_argument("support_function: dimension mismatch");
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& v : K.vertices()) {
        double d = 0.0;
        for (int i = 0; i < K.dim(); ++i) d += u[i] * v[i];
        best = std::max(best, d);
    }
    return best;
}

double holder_conjugate(double p) {
    if (p < 1.0) throw std::domain_error("holder_conjugate: requires p >= 1");
    if (p == 1.0) return std::numeric_limits<double>::infinity();
    return p / (p - 1.0);
}

CoefficientSet CoefficientSet::explicit_pairs(std::vector<std::pair<double, double>> pairs) {
    if (pairs.empty()) throw std::domain_error("CoefficientSet: must be nonempty");
    bool all_zero = true;
    for (auto [a, b] : pairs) {
        if (a < 0.0 || b < 0.0 || !std::isfinite(a) || !std::isfinite(b))
            throw std::domain_error("CoefficientSet: coefficients must be finite and >= 0");
        if (a > 0.0 || b > 0.0) all_zero = false;
    }
    if (all_zero) throw std::domain_error("CoefficientSet: must differ from {(0,0)}");
    CoefficientSet M;
    M.pairs = std::move(pairs);
    M.descriptor = "explicit";
    return M;
}

CoefficientSet CoefficientSet::classical() {
    CoefficientSet M = explicit_pairs({{1.0, 1.0}});
    M.descriptor = "classical";
    return M;
}

CoefficientSet CoefficientSet::minkowski(double lambda) {
    if (lambda < 0.0 || lambda > 1.0)
        throw std::domain_error("CoefficientSet::minkowski: lambda must be in [0,1]");
    CoefficientSet M = explicit_pairs({{1.0 - lambda, lambda}});
    M.descriptor = "minkowski(" + std::to_string(lambda) + ")";
    return M;
}

CoefficientSet CoefficientSet::lp_curve(double p, int lambda_resolution) {
    if (p < 1.0) throw std::domain_error("lp_curve: requires p >= 1");
    if (lambda_resolution < 2) throw std::domain_error("lp_curve: resolution must be >= 2");
    if (p == 1.0) {
        CoefficientSet M = classical();
        M.descriptor = "lp_curve(1)";
        return M;
    }
    const double q = holder_conjugate(p);
    std::vector<double> lambdas;
    lambdas.reserve(lambda_resolution + 1);
    for (int i = 0; i < lambda_resolution; ++i)
        lambdas.push_back(static_cast<double>(i) / (lambda_resolution - 1));
    if (lambda_resolution % 2 == 0) lambdas.push_back(0.5);  // the grid must contain 1/2
    std::sort(lambdas.begin(), lambdas.end());
    std::vector<std::pair<double, double>> pairs;
    pairs.reserve(lambdas.size());
    for (double l : lambdas)
        pairs.emplace_back(std::pow(1.0 - l, 1.0 / q), std::pow(l, 1.0 / q));
    CoefficientSet M = explicit_pairs(std::move(pairs));
    M.descriptor = "lp_curve(" + std::to_string(p) + "," + std::to_string(lambda_resolution) + ")";
    return M;
}

bool CoefficientSet::symmetric(double tol) const {
    for (auto [a, b] : pairs) {
        bool found = false;
        for (auto [c, d] : pairs) {
            if (std::abs(a - d) <= tol && std::abs(b - c) <= tol) {
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

DiscreteSet m_add(const DiscreteSet& A, const DiscreteSet& B, const CoefficientSet& M) {
    if (A.n != B.n) throw std::domain_error("m_add: dimension mismatch");
    std::vector<Point> out;
    out.reserve(M.pairs.size() * A.size() * B.size());
    Point z(A.n);
    for (auto [a, b] : M.pairs) {
        for (const auto& x : A.points) {
            for (const auto& y : B.points) {
                for (int i = 0; i < A.n; ++i) z[i] = a * x[i] + b * y[i];
                out.push_back(z);
            }
        }
    }
    return DiscreteSet(std::move(out));
}

DiscreteSet lp_pointwise_sum(const DiscreteSet& A, const DiscreteSet& B, double p,
                             int lambda_resolution) {
    if (p < 1.0) throw std::domain_error("lp_pointwise_sum: requires p >= 1");
    return m_add(A, B, CoefficientSet::lp_curve(p, lambda_resolution));
}

std::vector<SupportValue> lp_support_sum(const ConvexPolytope& K, const ConvexPolytope& L,
                                         double p, const std::vector<Point>& directions) {
    if (p < 1.0) throw std::domain_error("lp_support_sum: requires p >= 1");
    std::vector<SupportValue> out;
    out.reserve(directions.size());
    for (std::size_t d = 0; d < directions.size(); ++d) {
        const double hk = support_function(K, directions[d]);
        const double hl = support_function(L, directions[d]);
        if (hk < 0.0 || hl < 0.0) {
            std::ostringstream msg;
            msg << "lp_support_sum: body does not contain the origin; h < 0 in direction " << d
                << " (";
            for (std::size_t i = 0; i < directions[d].size(); ++i)
                msg << (i ? "," : "") << directions[d][i];
            msg << ")";
            throw std::domain_error(msg.str());
        }
        const double v = (p == 1.0) ? hk + hl
                                    : std::pow(std::pow(hk, p) + std::pow(hl, p), 1.0 / p);
        out.push_back({directions[d], v});
    }
    return out;
}

bool in_convex_hull(const Point& p, const std::vector<Point>& points, double tol) {
    if (points.empty()) return false;
    const std::size_t n = p.size();
    std::vector<std::vector<double>> A(n + 1, std::vector<double>(points.size()));
    std::vector<double> b(n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < points.size(); ++j) A[i][j] = points[j][i];
        b[i] = p[i];
    }
    for (std::size_t j = 0; j < points.size(); ++j) A[n][j] = 1.0;
    b[n] = 1.0;
    return lp_equality_feasible(std::move(A), std::move(b), tol);
}

McEstimate volume_hull(const DiscreteSet& A, std::int64_t samples, RandomSource rng) {
    McEstimate out;
    if (A.n == 1) {
        double lo = A.points[0][0], hi = lo;
        for (const auto& p : A.points) {
            lo = std::min(lo, p[0]);
            hi = std::max(hi, p[0]);
        }
        out.estimate = hi - lo;
        return out;
    }
    if (A.n == 2) {
        out.estimate = shoelace(hull2d(A.points));
        return out;
    }
    const Box box = A.bounding_box();
    return mc_volume([&A](const Point& x) { return in_convex_hull(x, A.points); }, box, samples,
                     rng);
}

} // namespace lplab
