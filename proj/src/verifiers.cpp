#include "lplab/verifiers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace lplab {

namespace {

const TolerancePolicy kPolicy{};

std::string digest_set(const DiscreteSet& A) {
    Digest d;
    d.add("n", static_cast<double>(A.n));
    for (const auto& p : A.points) d.add_doubles("pt", p);
    return d.hex();
}

void digest_fn(Digest& d, const std::string& tag, const GridFunction& f) {
    d.add(tag + ".dim", static_cast<double>(f.dim()));
    d.add_doubles(tag + ".lo", f.grid().box.lo);
    d.add_doubles(tag + ".hi", f.grid().box.hi);
    std::vector<double> shape(f.grid().shape.begin(), f.grid().shape.end());
    d.add_doubles(tag + ".shape", shape);
    d.add_doubles(tag + ".values", f.values());
}

double root_n(double v, double inv_exp) { return v > 0.0 ? std::pow(v, inv_exp) : 0.0; }

// d/dv of v^e, used for first-order stderr propagation
double pow_sens(double v, double e) { return v > 0.0 ? e * std::pow(v, e - 1.0) : 0.0; }

std::string seq_to_string(const std::vector<double>& xs) {
    std::ostringstream os;
    for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? " " : "") << format_double(xs[i]);
    return os.str();
}

} // namespace

VerificationReport verify_bm(const DiscreteSet& K, const DiscreteSet& L, double lambda,
                             std::int64_t samples, RandomSource rng) {
    if (K.n != L.n) throw std::domain_error("verify_bm: dimension mismatch");
    if (!(lambda > 0.0 && lambda < 1.0))
        throw std::domain_error("verify_bm: lambda must lie in (0, 1)");
    const int n = K.n;
    const DiscreteSet combo = m_add(K, L, CoefficientSet::minkowski(lambda));
    const McEstimate vc = volume_hull(combo, samples, rng.substream(0));
    const McEstimate vk = volume_hull(K, samples, rng.substream(1));
    const McEstimate vl = volume_hull(L, samples, rng.substream(2));

    const double inv_n = 1.0 / n;
    const double lhs = root_n(vc.estimate, inv_n);
    const double rhs = (1.0 - lambda) * root_n(vk.estimate, inv_n) + lambda * root_n(vl.estimate, inv_n);
    const double sigma = pow_sens(vc.estimate, inv_n) * vc.stderr_ +
                         (1.0 - lambda) * pow_sens(vk.estimate, inv_n) * vk.stderr_ +
                         lambda * pow_sens(vl.estimate, inv_n) * vl.stderr_;
    const bool used_mc = vc.stderr_ > 0.0 || vk.stderr_ > 0.0 || vl.stderr_ > 0.0;
    const double allowance = used_mc ? 0.005 * std::max(1.0, lhs) : 1e-9;

    VerificationReport r;
    r.name = "brunn_minkowski";
    Digest d;
    d.add("K", digest_set(K)).add("L", digest_set(L)).add("lambda", lambda);
    r.inputs_digest = d.hex();
    r.metadata["lambda"] = format_double(lambda);
    r.metadata["samples"] = std::to_string(samples);
    r.metadata["seed"] = std::to_string(rng.seed());
    r.set_outcome(lhs, rhs, 3.0 * sigma + allowance);
    return r;
}

namespace {

// shared hypothesis sampler + conclusion for PL (alpha = 0) and BBL
VerificationReport verify_bbl_impl(const std::string& name, const GridFunction& f,
                                   const GridFunction& g, const GridFunction& h, double lambda,
                                   const MeanSpec& alpha, std::optional<double> hypothesis_tol) {
    if (f.support_nodes().empty() || g.support_nodes().empty())
        throw std::domain_error(name + ": empty support");
    if (f.dim() != g.dim() || f.dim() != h.dim())
        throw std::domain_error(name + ": dimension mismatch");
    if (!(lambda > 0.0 && lambda < 1.0))
        throw std::domain_error(name + ": lambda must lie in (0, 1)");
    const int n = f.dim();
    const MeanSpec index = bbl_conclusion_index(alpha, n);  // throws when alpha < -1/n

    const double htol = hypothesis_tol.value_or(
        0.5 * h.max_value() * h.grid().max_spacing() + 1e-12);

    const auto& sf = f.support_nodes();
    const auto& sg = g.support_nodes();
    const bool exhaustive = sf.size() * sg.size() <= 4000000;
    RandomSource rng(777);
    const std::size_t random_pairs = 200000;

    double worst = 0.0;
    Point z(n);
    auto check = [&](std::size_t fi, std::size_t gi) {
        const Point x = f.grid().node(sf[fi]);
        const Point y = g.grid().node(sg[gi]);
        for (int i = 0; i < n; ++i) z[i] = (1.0 - lambda) * x[i] + lambda * y[i];
        const double needed = alpha_mean(f.value(sf[fi]), g.value(sg[gi]), lambda, alpha);
        const double have = h.grid().box.contains(z) ? h.interpolate(z) : 0.0;
        worst = std::max(worst, needed - have);
    };
    if (exhaustive) {
        for (std::size_t i = 0; i < sf.size(); ++i)
            for (std::size_t j = 0; j < sg.size(); ++j) check(i, j);
    } else {
        for (std::size_t k = 0; k < random_pairs; ++k)
            check(static_cast<std::size_t>(rng.uniform01() * sf.size()),
                  static_cast<std::size_t>(rng.uniform01() * sg.size()));
    }

    VerificationReport r;
    r.name = name;
    Digest d;
    digest_fn(d, "f", f);
    digest_fn(d, "g", g);
    digest_fn(d, "h", h);
    d.add("lambda", lambda).add("alpha", alpha.str());
    r.inputs_digest = d.hex();
    r.metadata["alpha"] = alpha.str();
    r.metadata["conclusion_index"] = index.str();
    r.metadata["hypothesis_tol"] = format_double(htol);
    r.metadata["hypothesis_worst_violation"] = format_double(worst);
    r.metadata["lambda"] = format_double(lambda);

    const double If = f.integrate();
    const double Ig = g.integrate();
    const double lhs = h.integrate();
    const double rhs = alpha_mean(If, Ig, lambda, index);
    const double tol = 1e-8 * (1.0 + std::abs(lhs));
    r.set_outcome(lhs, rhs, tol);
    if (worst > htol) r.verdict = Verdict::hypothesis_failed;
    return r;
}

} // namespace

VerificationReport verify_pl(const GridFunction& f, const GridFunction& g, const GridFunction& h,
                             double lambda, std::optional<double> hypothesis_tol) {
    return verify_bbl_impl("prekopa_leindler", f, g, h, lambda, MeanSpec::zero(),
                           hypothesis_tol);
}

VerificationReport verify_bbl(const GridFunction& f, const GridFunction& g,
                              const GridFunction& h, double lambda, const MeanSpec& alpha,
                              std::optional<double> hypothesis_tol) {
    return verify_bbl_impl("borell_brascamp_lieb", f, g, h, lambda, alpha, hypothesis_tol);
}

VerificationReport verify_lp_bm(const DiscreteSet& K, const DiscreteSet& L, double p,
                                int lambda_resolution, std::int64_t samples, RandomSource rng) {
    if (K.n != L.n) throw std::domain_error("verify_lp_bm: dimension mismatch");
    if (p < 1.0) throw std::domain_error("verify_lp_bm: p must be >= 1");
    const int n = K.n;
    const DiscreteSet sum = lp_pointwise_sum(K, L, p, lambda_resolution);
    const McEstimate vs = volume_hull(sum, samples, rng.substream(0));
    const McEstimate vk = volume_hull(K, samples, rng.substream(1));
    const McEstimate vl = volume_hull(L, samples, rng.substream(2));

    const double e = p / n;
    const double lhs = root_n(vs.estimate, e);
    const double rhs = root_n(vk.estimate, e) + root_n(vl.estimate, e);
    const double sigma = pow_sens(vs.estimate, e) * vs.stderr_ +
                         pow_sens(vk.estimate, e) * vk.stderr_ +
                         pow_sens(vl.estimate, e) * vl.stderr_;
    const double lambda_spacing =
        (p == 1.0) ? 0.0 : 1.0 / (lambda_resolution - 1);
    const bool used_mc = vs.stderr_ > 0.0 || vk.stderr_ > 0.0 || vl.stderr_ > 0.0;
    const double allowance = used_mc ? 0.005 * std::max(1.0, lhs) : 1e-9;

    VerificationReport r;
    r.name = "lp_brunn_minkowski";
    Digest d;
    d.add("K", digest_set(K)).add("L", digest_set(L)).add("p", p);
    d.add("lambda_resolution", static_cast<double>(lambda_resolution));
    r.inputs_digest = d.hex();
    r.metadata["p"] = format_double(p);
    r.metadata["lambda_resolution"] = std::to_string(lambda_resolution);
    r.metadata["samples"] = std::to_string(samples);
    r.metadata["seed"] = std::to_string(rng.seed());
    r.metadata["lhs_note"] = "hull upper bound for nonconvex samples";
    r.set_outcome(lhs, rhs, kPolicy(0.0, lambda_spacing, 0.0) + 3.0 * sigma + allowance);
    return r;
}

void Thm15Config::validate() const {
    if (p < 1.0) throw std::domain_error("Thm15Config: p must be >= 1");
    if (!(s > 0.0) || !(mu > 0.0) || !(omega > 0.0))
        throw std::domain_error("Thm15Config: s, mu, omega must be > 0");
    if (f.support_nodes().empty() || g.support_nodes().empty())
        throw std::domain_error("Thm15Config: f, g must have nonempty supports");
    if (resolutions.empty()) throw std::invalid_argument("Thm15Config: no resolutions");
    for (std::size_t i = 1; i < resolutions.size(); ++i)
        if (resolutions[i] != 2 * resolutions[i - 1] - 1)
            throw std::invalid_argument("Thm15Config: resolutions must be nested (r' = 2r - 1)");
    if (!lambda_resolutions.empty() && lambda_resolutions.size() != resolutions.size())
        throw std::invalid_argument("Thm15Config: lambda_resolutions size mismatch");
}

int Thm15Config::lambda_resolution_for(std::size_t i) const {
    if (!lambda_resolutions.empty()) return lambda_resolutions[i];
    return 2 * resolutions[i] - 1;
}

Grid thm15_out_grid(const Thm15Config& cfg, int resolution, int lambda_resolution) {
    const SParam sp(cfg.s);
    const GridFunction fm = scale_fn(cfg.f, cfg.mu, cfg.p, sp);
    const GridFunction gw = scale_fn(cfg.g, cfg.omega, cfg.p, sp);
    const Box box =
        m_sum_support_box(fm, gw, CoefficientSet::lp_curve(cfg.p, lambda_resolution));
    return Grid(box, resolution);
}

GridFunction construct_h_thm15(const Thm15Config& cfg, const Grid& out_grid,
                               int lambda_resolution) {
    const SParam sp(cfg.s);
    const GridFunction fm = scale_fn(cfg.f, cfg.mu, cfg.p, sp);
    const GridFunction gw = scale_fn(cfg.g, cfg.omega, cfg.p, sp);
    return sup_conv_p(fm, gw, cfg.p, sp, lambda_resolution, out_grid);
}

GridFunction resample(const GridFunction& f, int resolution) {
    Grid g(f.grid().box, resolution);
    return GridFunction::sample(g, [&f](const Point& p) { return f.interpolate(p); });
}

VerificationReport verify_thm15(const Thm15Config& cfg) {
    cfg.validate();
    const int n = cfg.f.dim();
    const double e = cfg.p / (n + cfg.s);

    std::vector<double> lhs_seq, margin_seq;
    double lhs = 0.0, rhs = 0.0, grid_spacing = 0.0, lambda_spacing = 0.0;
    for (std::size_t i = 0; i < cfg.resolutions.size(); ++i) {
        const int res = cfg.resolutions[i];
        const int lres = cfg.lambda_resolution_for(i);
        Thm15Config step = cfg;
        step.f = resample(cfg.f, res);
        step.g = resample(cfg.g, res);
        const Grid out = thm15_out_grid(step, res, lres);
        const GridFunction h = construct_h_thm15(step, out, lres);
        lhs = root_n(h.integrate(), e);
        rhs = cfg.mu * root_n(step.f.integrate(), e) + cfg.omega * root_n(step.g.integrate(), e);
        lhs_seq.push_back(lhs);
        margin_seq.push_back(lhs - rhs);
        grid_spacing = out.max_spacing();
        lambda_spacing = 1.0 / (lres - 1);
    }

    VerificationReport r;
    r.name = "thm15_functional_lp_bm";
    Digest d;
    digest_fn(d, "f", cfg.f);
    digest_fn(d, "g", cfg.g);
    d.add("p", cfg.p).add("s", cfg.s).add("mu", cfg.mu).add("omega", cfg.omega);
    r.inputs_digest = d.hex();
    r.metadata["p"] = format_double(cfg.p);
    r.metadata["s"] = format_double(cfg.s);
    r.metadata["mu"] = format_double(cfg.mu);
    r.metadata["omega"] = format_double(cfg.omega);
    r.metadata["lhs_sweep"] = seq_to_string(lhs_seq);
    r.metadata["margin_sweep"] = seq_to_string(margin_seq);
    r.metadata["note"] = "discrete h underestimates the extremal h; margins approach >= 0 from below";
    r.set_outcome(lhs, rhs, kPolicy(grid_spacing, lambda_spacing));
    return r;
}

VerificationReport check_lemma31(const GridFunction& f, const GridFunction& g,
                                 const CoefficientSet& M, const SParam& s,
                                 Lemma31Condition condition) {
    VerificationReport r;
    r.name = "lemma31_s_concavity";
    Digest d;
    digest_fn(d, "f", f);
    digest_fn(d, "g", g);
    for (auto [a, b] : M.pairs) d.add("Ma", a).add("Mb", b);
    d.add("s", s.s).add("condition", condition == Lemma31Condition::convex_M ? "convex_M" : "origin_supports");
    r.inputs_digest = d.hex();
    r.metadata["condition"] =
        condition == Lemma31Condition::convex_M ? "convex_M" : "origin_supports";
    r.metadata["s"] = format_double(s.s);

    const double pre_tol = 2.0 * std::max(f.grid().max_spacing(), g.grid().max_spacing());
    const auto cf = is_s_concave(f, s, pre_tol);
    const auto cg = is_s_concave(g, s, pre_tol);
    bool condition_holds = true;
    if (condition == Lemma31Condition::origin_supports) {
        const Point origin_f(f.dim(), 0.0);
        condition_holds = f.in_support(origin_f) && g.in_support(origin_f);
    } else {
        // finite M must be Hausdorff-close to its own convex hull
        double diam = 0.0;
        for (auto [a, b] : M.pairs)
            for (auto [c, dd] : M.pairs) diam = std::max(diam, std::hypot(a - c, b - dd));
        const double hull_tol = 0.02 * (1.0 + diam);
        RandomSource rng(4242);
        double worst = 0.0;
        for (int k = 0; k < 500; ++k) {
            // random pairwise convex combination; for segment- and
            // curve-shaped M these sweep the hull boundary where gaps live
            const auto& A = M.pairs[static_cast<std::size_t>(rng.uniform01() * M.pairs.size())];
            const auto& B = M.pairs[static_cast<std::size_t>(rng.uniform01() * M.pairs.size())];
            const double t = rng.uniform01();
            const double qa = (1.0 - t) * A.first + t * B.first;
            const double qb = (1.0 - t) * A.second + t * B.second;
            double best = std::numeric_limits<double>::infinity();
            for (auto [a, b] : M.pairs) best = std::min(best, std::hypot(a - qa, b - qb));
            worst = std::max(worst, best);
        }
        condition_holds = worst <= hull_tol;
        r.metadata["hull_gap"] = format_double(worst);
    }
    if (!cf.s_concave || !cg.s_concave || !condition_holds) {
        r.verdict = Verdict::precondition_failed;
        r.metadata["precondition"] = !cf.s_concave   ? "f not s-concave"
                                     : !cg.s_concave ? "g not s-concave"
                                                     : "selected condition does not hold";
        return r;
    }

    const int out_res = 2 * std::max(f.grid().shape[0], g.grid().shape[0]) - 1;
    const Box out_box = m_sum_support_box(f, g, M);
    const GridFunction h = sup_conv_m(f, g, M, s, Grid(out_box, out_res));
    const double spacing = h.grid().max_spacing();
    const double tol = 2.0 * std::pow(spacing, std::min(1.0, 1.0 / s.s));
    const auto ch = is_s_concave(h, s, tol);
    r.metadata["worst_violation"] = format_double(ch.worst_violation);
    r.metadata["support_convex"] = ch.support_convex ? "true" : "false";
    r.set_outcome(-ch.worst_violation, 0.0, tol);
    if (!ch.support_convex) r.verdict = Verdict::violated;
    return r;
}

VerificationReport check_lemma32(const GridFunction& f, const GridFunction& g,
                                 const CoefficientSet& M, int s, std::int64_t n_samples,
                                 RandomSource rng) {
    if (s < 1) throw std::domain_error("check_lemma32: s must be a positive integer");
    const int n = f.dim();
    const LiftedBody Kf(f, s), Kg(g, s);
    const Box out_box = m_sum_support_box(f, g, M);
    const int out_res = 2 * std::max(f.grid().shape[0], g.grid().shape[0]) - 1;
    const GridFunction h = sup_conv_m(f, g, M, SParam(static_cast<double>(s)),
                                      Grid(out_box, out_res));
    const LiftedBody Kh(h, s);

    auto sample_lift_point = [&](const LiftedBody& L, RandomSource& r2) {
        const Box bb = L.bounding_box();
        Point x(n);
        for (int tries = 0; tries < 1000; ++tries) {
            for (int i = 0; i < n; ++i) x[i] = r2.uniform(bb.lo[i], bb.hi[i]);
            if (L.f.in_support(x)) break;
        }
        const double radius = std::pow(std::max(L.f.interpolate(x), 0.0), 1.0 / L.s);
        Point pt(n + s, 0.0);
        for (int i = 0; i < n; ++i) pt[i] = x[i];
        // uniform direction via rejection in the cube, then uniform radius
        if (radius > 0.0) {
            Point y(s);
            double nrm;
            do {
                nrm = 0.0;
                for (int j = 0; j < s; ++j) {
                    y[j] = r2.uniform(-1.0, 1.0);
                    nrm += y[j] * y[j];
                }
            } while (nrm > 1.0);
            for (int j = 0; j < s; ++j) pt[n + j] = radius * y[j];
        }
        return pt;
    };

    RandomSource fw = rng.substream(1);
    std::int64_t failures = 0;
    Point combo(n + s);
    for (std::int64_t k = 0; k < n_samples; ++k) {
        const Point u = sample_lift_point(Kf, fw);
        const Point v = sample_lift_point(Kg, fw);
        const auto& [a, b] = M.pairs[static_cast<std::size_t>(fw.uniform01() * M.pairs.size())];
        for (int i = 0; i < n + s; ++i) combo[i] = a * u[i] + b * v[i];
        if (!lift_membership_tol(Kh, combo, 1.0)) ++failures;
    }

    // reverse: interior points of K_h should be approximable by M-combinations
    RandomSource rv = rng.substream(2);
    const double delta = h.grid().max_spacing();
    std::int64_t rev_total = 0, rev_fail = 0;
    const std::int64_t rev_samples = std::min<std::int64_t>(n_samples, 2000);
    const Box hb = Kh.bounding_box();
    const double inv_s = 1.0 / s;
    for (std::int64_t k = 0; k < rev_samples; ++k) {
        Point z(n);
        for (int i = 0; i < n; ++i) z[i] = rv.uniform(hb.lo[i], hb.hi[i]);
        if (!h.in_support(z)) continue;
        const double radius = std::pow(std::max(h.interpolate(z), 0.0), inv_s);
        if (radius <= delta) continue;  // too thin to host an interior point
        const double ynorm = rv.uniform01() * (radius - delta);
        ++rev_total;
        bool ok = false;
        Point y(n);
        for (const auto& [a, b] : M.pairs) {
            if (b <= 1e-15) {
                if (a > 1e-15) {
                    Point x(n);
                    for (int i = 0; i < n; ++i) x[i] = z[i] / a;
                    if (f.in_support(x) &&
                        a * std::pow(std::max(f.interpolate(x), 0.0), inv_s) + delta >= ynorm)
                        ok = true;
                }
            } else {
                for (std::size_t xi : f.support_nodes()) {
                    const Point x = f.grid().node(xi);
                    for (int i = 0; i < n; ++i) y[i] = (z[i] - a * x[i]) / b;
                    if (!g.in_support(y)) continue;
                    const double root = a * std::pow(f.value(xi), inv_s) +
                                        b * std::pow(std::max(g.interpolate(y), 0.0), inv_s);
                    if (root + delta >= ynorm) {
                        ok = true;
                        break;
                    }
                }
            }
            if (ok) break;
        }
        if (!ok) ++rev_fail;
    }

    VerificationReport r;
    r.name = "lemma32_lift_inclusion";
    Digest d;
    digest_fn(d, "f", f);
    digest_fn(d, "g", g);
    for (auto [a, b] : M.pairs) d.add("Ma", a).add("Mb", b);
    d.add("s", static_cast<double>(s));
    r.inputs_digest = d.hex();
    r.metadata["s"] = std::to_string(s);
    r.metadata["samples"] = std::to_string(n_samples);
    r.metadata["seed"] = std::to_string(rng.seed());
    r.metadata["forward_failures"] = std::to_string(failures);
    r.metadata["reverse_checked"] = std::to_string(rev_total);
    r.metadata["reverse_failure_fraction"] =
        format_double(rev_total > 0 ? static_cast<double>(rev_fail) / rev_total : 0.0);
    const double success =
        1.0 - static_cast<double>(failures) / static_cast<double>(std::max<std::int64_t>(n_samples, 1));
    r.set_outcome(success, 1.0, 0.0);
    return r;
}

STildeResult s_tilde(const GridFunction& f, const GridFunction& g, double p, const SParam& s,
                     const std::vector<double>& epsilons, int resolution,
                     int lambda_resolution) {
    if (epsilons.size() < 3)
        throw std::invalid_argument("s_tilde: need at least 3 epsilon values");
    for (std::size_t i = 0; i < epsilons.size(); ++i) {
        if (!(epsilons[i] > 0.0 && epsilons[i] <= 1.0))
            throw std::domain_error("s_tilde: epsilons must lie in (0, 1]");
        if (i > 0 && !(epsilons[i] < epsilons[i - 1]))
            throw std::invalid_argument("s_tilde: epsilons must be strictly decreasing");
    }
    const int n = f.dim();
    const double factor = p / (n + s.s);
    const double If = f.integrate();
    const CoefficientSet M = CoefficientSet::lp_curve(p, lambda_resolution);

    STildeResult out;
    for (double eps : epsilons) {
        const GridFunction ge = scale_fn(g, eps, p, s);
        const Box box = m_sum_support_box(f, ge, M);
        const GridFunction h = sup_conv_m(f, ge, M, s, Grid(box, resolution));
        out.quotients.emplace_back(eps, factor * (h.integrate() - If) / eps);
    }

    // the quotient sequence must be monotone (up to noise) for the limit to exist
    const double tol = 1e-3 * (1.0 + std::abs(out.quotients.back().second));
    int up = 0, down = 0;
    for (std::size_t i = 1; i < out.quotients.size(); ++i) {
        const double d = out.quotients[i].second - out.quotients[i - 1].second;
        if (d > tol) ++up;
        if (d < -tol) ++down;
    }
    out.limit_ok = !(up > 0 && down > 0);

    const auto& [e0, q0] = out.quotients[out.quotients.size() - 2];
    const auto& [e1, q1] = out.quotients.back();
    out.estimate = q1 - e1 * (q0 - q1) / (e0 - e1);  // linear extrapolation to 0+
    return out;
}

VerificationReport verify_lp_minkowski(const GridFunction& f, const GridFunction& g, double p,
                                       const SParam& s, const std::vector<double>& epsilons,
                                       int resolution, int lambda_resolution) {
    const STildeResult st = s_tilde(f, g, p, s, epsilons, resolution, lambda_resolution);
    const int n = f.dim();
    const double e = p / (n + s.s);
    const double If = f.integrate();
    const double Ig = g.integrate();
    const double rhs = std::pow(If, 1.0 - e) * std::pow(Ig, e);

    VerificationReport r;
    r.name = "functional_lp_minkowski";
    Digest d;
    digest_fn(d, "f", f);
    digest_fn(d, "g", g);
    d.add("p", p).add("s", s.s);
    d.add_doubles("epsilons", epsilons);
    r.inputs_digest = d.hex();
    r.metadata["p"] = format_double(p);
    r.metadata["s"] = format_double(s.s);
    std::vector<double> qs;
    for (auto [eps, q] : st.quotients) {
        qs.push_back(eps);
        qs.push_back(q);
    }
    r.metadata["quotient_table"] = seq_to_string(qs);
    r.set_outcome(st.estimate, rhs,
                  kPolicy(f.grid().max_spacing(), 1.0 / (lambda_resolution - 1)));
    if (!st.limit_ok) r.verdict = Verdict::no_limit;
    return r;
}

} // namespace lplab
