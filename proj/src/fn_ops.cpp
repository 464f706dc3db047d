#include "lplab/fn_ops.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace lplab {

namespace {

constexpr double kCoeffEps = 1e-15;

double norm2(const double* v, int len) {
    double acc = 0.0;
    for (int i = 0; i < len; ++i) acc += v[i] * v[i];
    return std::sqrt(acc);
}

struct SupportSample {
    Point point;
    double root;  // value^{1/s}
};

std::vector<SupportSample> support_samples(const GridFunction& f, double inv_s) {
    std::vector<SupportSample> out;
    out.reserve(f.support_nodes().size());
    for (std::size_t idx : f.support_nodes())
        out.push_back({f.grid().node(idx), std::pow(f.value(idx), inv_s)});
    return out;
}

} // namespace

SParam::SParam(double s_) : s(s_) {
    if (!(s > 0.0)) throw std::domain_error("SParam: s must be > 0");
    is_integer = (s == std::floor(s));
}

SParam SParam::integer(int s_) {
    if (s_ < 1) throw std::domain_error("SParam::integer: s must be >= 1");
    SParam p(static_cast<double>(s_));
    p.is_integer = true;
    return p;
}

ConcavityCheck is_s_concave(const GridFunction& f, const SParam& s, double tol,
                            std::uint64_t seed) {
    const auto& supp = f.support_nodes();
    if (supp.empty()) throw std::domain_error("is_s_concave: empty support");
    const Grid& g = f.grid();
    const int n = g.dim();
    const double inv_s = 1.0 / s.s;

    ConcavityCheck out;
    out.support_convex = true;

    // gaps along grid lines break support convexity
    for (int axis = 0; axis < n && out.support_convex; ++axis) {
        std::vector<int> idx(n, 0);
        // iterate over all lines: vary every index except `axis`
        std::size_t lines = 1;
        for (int i = 0; i < n; ++i)
            if (i != axis) lines *= static_cast<std::size_t>(g.shape[i]);
        for (std::size_t line = 0; line < lines && out.support_convex; ++line) {
            std::size_t rem = line;
            for (int i = n - 1; i >= 0; --i) {
                if (i == axis) continue;
                idx[i] = static_cast<int>(rem % g.shape[i]);
                rem /= g.shape[i];
            }
            int first = -1, last = -1;
            bool gap = false;
            for (int k = 0; k < g.shape[axis]; ++k) {
                idx[axis] = k;
                const bool pos = f.value(g.flat(idx)) > 0.0;
                if (pos) {
                    if (first < 0) first = k;
                    if (last >= 0 && last < k - 1) gap = true;
                    last = k;
                }
            }
            if (gap) out.support_convex = false;
        }
    }

    // pair sampling: exhaustive when affordable, seeded-random otherwise
    const std::size_t m = supp.size();
    const bool exhaustive = m * m <= 250000;
    RandomSource rng(seed);
    const std::size_t random_pairs = 100000;
    const double lambdas[] = {0.25, 0.5, 0.75};

    auto check_pair = [&](std::size_t ia, std::size_t ib) {
        const Point x = g.node(supp[ia]);
        const Point y = g.node(supp[ib]);
        const double fx = std::pow(f.value(supp[ia]), inv_s);
        const double fy = std::pow(f.value(supp[ib]), inv_s);
        Point z(n);
        for (double l : lambdas) {
            for (int i = 0; i < n; ++i) z[i] = l * x[i] + (1.0 - l) * y[i];
            if (!f.in_support(z)) {
                out.support_convex = false;
                continue;
            }
            const double fz = std::pow(f.interpolate(z), inv_s);
            const double violation = l * fx + (1.0 - l) * fy - fz;
            out.worst_violation = std::max(out.worst_violation, violation);
        }
    };

    if (exhaustive) {
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j) check_pair(i, j);
    } else {
        for (std::size_t k = 0; k < random_pairs; ++k) {
            const std::size_t i = static_cast<std::size_t>(rng.uniform01() * m);
            const std::size_t j = static_cast<std::size_t>(rng.uniform01() * m);
            check_pair(std::min(i, m - 1), std::min(j, m - 1));
        }
    }

    out.s_concave = out.support_convex && out.worst_violation <= tol;
    return out;
}

GridFunction scale_fn(const GridFunction& f, double lambda, double p, const SParam& s) {
    if (!(lambda > 0.0)) throw std::domain_error("scale_fn: lambda must be > 0");
    if (p < 1.0) throw std::domain_error("scale_fn: requires p >= 1");
    const double box_scale = std::pow(lambda, 1.0 / p);
    const double value_scale = std::pow(lambda, s.s / p);
    const Grid& g = f.grid();
    std::vector<double> lo(g.dim()), hi(g.dim());
    for (int i = 0; i < g.dim(); ++i) {
        lo[i] = g.box.lo[i] * box_scale;
        hi[i] = g.box.hi[i] * box_scale;
    }
    std::vector<double> vals(f.values());
    for (double& v : vals) v *= value_scale;
    return GridFunction(Grid(Box(std::move(lo), std::move(hi)), g.shape), std::move(vals));
}

Box m_sum_support_box(const GridFunction& f, const GridFunction& g, const CoefficientSet& M) {
    const auto bf = f.support_box();
    const auto bg = g.support_box();
    if (!bf || !bg) throw std::domain_error("m_sum_support_box: empty support");
    const int n = f.dim();
    std::vector<double> lo(n, std::numeric_limits<double>::infinity());
    std::vector<double> hi(n, -std::numeric_limits<double>::infinity());
    for (auto [a, b] : M.pairs) {
        for (int i = 0; i < n; ++i) {
            lo[i] = std::min(lo[i], a * bf->lo[i] + b * bg->lo[i]);
            hi[i] = std::max(hi[i], a * bf->hi[i] + b * bg->hi[i]);
        }
    }
    for (int i = 0; i < n; ++i) {
        if (!(lo[i] < hi[i])) {
            lo[i] -= 1e-9;
            hi[i] += 1e-9;
        }
    }
    return Box(std::move(lo), std::move(hi));
}

GridFunction sup_conv_m(const GridFunction& f, const GridFunction& g, const CoefficientSet& M,
                        const SParam& s, const Grid& out_grid) {
    if (f.support_nodes().empty() || g.support_nodes().empty())
        throw std::domain_error("sup_conv_m: empty support");
    if (f.dim() != g.dim() || out_grid.dim() != f.dim())
        throw std::domain_error("sup_conv_m: dimension mismatch");

    const Box need = m_sum_support_box(f, g, M);
    const double slack = 0.5 * out_grid.max_spacing() + 1e-9;
    for (int i = 0; i < out_grid.dim(); ++i) {
        if (out_grid.box.lo[i] > need.lo[i] + slack || out_grid.box.hi[i] < need.hi[i] - slack)
            throw std::invalid_argument("sup_conv_m: out_grid does not cover the M-sum support");
    }

    const int n = f.dim();
    const double inv_s = 1.0 / s.s;
    const auto fs = support_samples(f, inv_s);
    const auto gs = support_samples(g, inv_s);

    std::vector<double> vals(out_grid.size(), 0.0);
    Point y(n), x(n);
    for (std::size_t zi = 0; zi < out_grid.size(); ++zi) {
        const Point z = out_grid.node(zi);
        double best = 0.0;
        for (auto [a, b] : M.pairs) {
            if (a <= kCoeffEps && b <= kCoeffEps) continue;
            if (b > kCoeffEps) {
                for (const auto& xs : fs) {
                    for (int i = 0; i < n; ++i) y[i] = (z[i] - a * xs.point[i]) / b;
                    if (!g.in_support(y)) continue;
                    const double gy = std::max(g.interpolate(y), 0.0);
                    best = std::max(best, a * xs.root + b * std::pow(gy, inv_s));
                }
            }
            if (a > kCoeffEps) {
                for (const auto& ys : gs) {
                    for (int i = 0; i < n; ++i) x[i] = (z[i] - b * ys.point[i]) / a;
                    if (!f.in_support(x)) continue;
                    const double fx = std::max(f.interpolate(x), 0.0);
                    best = std::max(best, a * std::pow(fx, inv_s) + b * ys.root);
                }
            }
        }
        vals[zi] = std::pow(best, s.s);
    }
    return GridFunction(out_grid, std::move(vals));
}

GridFunction sup_conv_m_bruteforce(const GridFunction& f, const GridFunction& g,
                                   const CoefficientSet& M, const SParam& s,
                                   const Grid& out_grid) {
    if (f.support_nodes().empty() || g.support_nodes().empty())
        throw std::domain_error("sup_conv_m_bruteforce: empty support");
    const int n = f.dim();
    const double inv_s = 1.0 / s.s;
    const auto fs = support_samples(f, inv_s);
    const auto gs = support_samples(g, inv_s);

    std::vector<double> roots(out_grid.size(), 0.0);
    Point z(n);
    for (auto [a, b] : M.pairs) {
        if (a <= kCoeffEps && b <= kCoeffEps) continue;
        for (const auto& xs : fs) {
            for (const auto& ys : gs) {
                for (int i = 0; i < n; ++i) z[i] = a * xs.point[i] + b * ys.point[i];
                const auto idx = out_grid.nearest(z);
                const Point node = out_grid.node(idx);
                bool within = true;
                for (int i = 0; i < n; ++i)
                    if (std::abs(z[i] - node[i]) > 0.5 * out_grid.spacing(i) + 1e-12)
                        within = false;
                if (!within) continue;
                const std::size_t flat = out_grid.flat(idx);
                roots[flat] = std::max(roots[flat], a * xs.root + b * ys.root);
            }
        }
    }
    for (double& r : roots) r = std::pow(r, s.s);
    return GridFunction(out_grid, std::move(roots));
}

GridFunction sup_conv_p(const GridFunction& f, const GridFunction& g, double p, const SParam& s,
                        int lambda_resolution, const Grid& out_grid) {
    return sup_conv_m(f, g, CoefficientSet::lp_curve(p, lambda_resolution), s, out_grid);
}

LiftedBody::LiftedBody(GridFunction f_, int s_) : f(std::move(f_)), s(s_) {
    if (s < 1) throw std::domain_error("LiftedBody: s must be a positive integer");
    if (f.support_nodes().empty()) throw std::domain_error("LiftedBody: empty support");
}

Box LiftedBody::bounding_box() const {
    const Box supp = *f.support_box();
    const Grid& g = f.grid();
    const int n = f.dim();
    std::vector<double> lo(n + s), hi(n + s);
    for (int i = 0; i < n; ++i) {
        // one extra spacing: the interpolant stays positive past the last
        // positive node, up to the neighboring zero node
        lo[i] = std::max(g.box.lo[i], supp.lo[i] - g.spacing(i));
        hi[i] = std::min(g.box.hi[i], supp.hi[i] + g.spacing(i));
    }
    const double radius = std::pow(f.max_value(), 1.0 / s);
    for (int j = 0; j < s; ++j) {
        lo[n + j] = -radius;
        hi[n + j] = radius;
    }
    return Box(std::move(lo), std::move(hi));
}

bool lift_membership(const LiftedBody& L, const Point& point) {
    const int n = L.f.dim();
    if (static_cast<int>(point.size()) != n + L.s)
        throw std::domain_error("lift_membership: dimension mismatch");
    const Point x(point.begin(), point.begin() + n);
    if (!L.f.in_support(x)) return false;
    const double radius = std::pow(L.f.interpolate(x), 1.0 / L.s);
    return norm2(point.data() + n, L.s) <= radius;
}

bool lift_membership_tol(const LiftedBody& L, const Point& point, double spacings) {
    const int n = L.f.dim();
    if (static_cast<int>(point.size()) != n + L.s)
        throw std::domain_error("lift_membership_tol: dimension mismatch");
    const Grid& g = L.f.grid();
    const double allowance = spacings * g.max_spacing();
    const Point x(point.begin(), point.begin() + n);
    if (!g.box.contains(x, allowance)) return false;

    // local radius: the largest value within `spacings` nodes of x
    double local = L.f.grid().box.contains(x) ? L.f.interpolate(x) : 0.0;
    const auto center = g.nearest(x);
    const int reach = static_cast<int>(std::ceil(spacings)) + 1;
    std::vector<int> idx(n);
    std::vector<int> lo(n), hi(n);
    std::size_t count = 1;
    for (int i = 0; i < n; ++i) {
        lo[i] = std::max(center[i] - reach, 0);
        hi[i] = std::min(center[i] + reach, g.shape[i] - 1);
        count *= static_cast<std::size_t>(hi[i] - lo[i] + 1);
        idx[i] = lo[i];
    }
    for (std::size_t k = 0; k < count; ++k) {
        const Point node = g.node(idx);
        bool near = true;
        for (int i = 0; i < n; ++i)
            if (std::abs(node[i] - x[i]) > allowance + 0.5 * g.spacing(i)) near = false;
        if (near) local = std::max(local, L.f.value(g.flat(idx)));
        for (int i = n - 1; i >= 0; --i) {
            if (++idx[i] <= hi[i]) break;
            idx[i] = lo[i];
        }
    }
    if (local <= 0.0) return false;
    const double radius = std::pow(local, 1.0 / L.s) + allowance;
    return norm2(point.data() + n, L.s) <= radius;
}

McEstimate lift_volume(const LiftedBody& L, std::int64_t samples, RandomSource rng) {
    return mc_volume([&L](const Point& pt) { return lift_membership(L, pt); }, L.bounding_box(),
                     samples, rng);
}

} // namespace lplab
