#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "lplab/geometry.hpp"
#include "lplab/grid_function.hpp"
#include "lplab/montecarlo.hpp"
#include "lplab/rng.hpp"
#include "lplab/special.hpp"

using namespace lplab;

TEST_CASE("box basics") {
    Box b({0.0, -1.0}, {2.0, 1.0});
    CHECK(b.dim() == 2);
    CHECK(b.volume() == doctest::Approx(4.0));
    CHECK(b.contains({1.0, 0.0}));
    CHECK(!b.contains({2.1, 0.0}));
    CHECK(b.contains({2.05, 0.0}, 0.1));
    CHECK_THROWS_AS(Box({1.0}, {1.0}), std::domain_error);
    CHECK_THROWS_AS(Box({0.0}, {1.0, 2.0}), std::invalid_argument);
}

TEST_CASE("grid indexing roundtrip") {
    Grid g(Box({0.0, 0.0}, {1.0, 2.0}), {3, 5});
    CHECK(g.size() == 15);
    CHECK(g.spacing(0) == doctest::Approx(0.5));
    CHECK(g.spacing(1) == doctest::Approx(0.5));
    for (std::size_t i = 0; i < g.size(); ++i) CHECK(g.flat(g.multi(i)) == i);
    const Point p = g.node({2, 4});
    CHECK(p[0] == doctest::Approx(1.0));
    CHECK(p[1] == doctest::Approx(2.0));
    CHECK(g.nearest({0.26, 1.3}) == std::vector<int>{1, 3});
}

TEST_CASE("grid refinement relation") {
    Grid coarse(Box({0.0}, {1.0}), 5);
    CHECK(coarse.refines_to(Grid(Box({0.0}, {1.0}), 9)));
    CHECK(!coarse.refines_to(Grid(Box({0.0}, {1.0}), 10)));
    CHECK(!coarse.refines_to(Grid(Box({0.0}, {2.0}), 9)));
}

TEST_CASE("rng reproducible and uniform in range") {
    RandomSource a(42), b(42);
    for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
    RandomSource r(7);
    for (int i = 0; i < 1000; ++i) {
        const double u = r.uniform01();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
    }
    // frozen first draw so cross-platform drift would be caught
    RandomSource f(1);
    CHECK(f.next_u64() == 0x910a2dec89025cc1ULL);
}

TEST_CASE("rng substreams differ and are stable") {
    RandomSource base(99);
    RandomSource s0 = base.substream(0);
    RandomSource s1 = base.substream(1);
    CHECK(s0.next_u64() != s1.next_u64());
    CHECK(base.substream(0).seed() == base.substream(0).seed());
}

TEST_CASE("gamma and ball volumes") {
    CHECK(gamma_fn(0.5) == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-13));
    CHECK(gamma_fn(1.0) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(gamma_fn(5.0) == doctest::Approx(24.0).epsilon(1e-13));
    CHECK(kappa(1.0) == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(kappa(2.0) == doctest::Approx(M_PI).epsilon(1e-13));
    CHECK(kappa(3.0) == doctest::Approx(4.0 * M_PI / 3.0).epsilon(1e-13));
    CHECK_THROWS_AS(kappa(0.0), std::domain_error);
    // kappa_s = kappa_{s-2} * 2 pi / s
    for (double s : {3.0, 4.5, 7.0, 10.0})
        CHECK(kappa(s) == doctest::Approx(kappa(s - 2.0) * 2.0 * M_PI / s).epsilon(1e-12));
}

TEST_CASE("grid function interpolation") {
    Grid g(Box({0.0}, {1.0}), 5);
    GridFunction f = GridFunction::sample(g, [](const Point& p) { return p[0]; });
    CHECK(f.interpolate({0.5}) == doctest::Approx(0.5));
    CHECK(f.interpolate({0.3}) == doctest::Approx(0.3));   // linear, so exact
    CHECK(f.interpolate({-0.1}) == 0.0);
    CHECK(f.interpolate({1.1}) == 0.0);
    CHECK(f.max_value() == doctest::Approx(1.0));
    CHECK_THROWS_AS(GridFunction(g, std::vector<double>(5, -1.0)), std::domain_error);
}

TEST_CASE("grid function 2d interpolation is multilinear") {
    Grid g(Box({0.0, 0.0}, {1.0, 1.0}), 3);
    GridFunction f = GridFunction::sample(g, [](const Point& p) { return p[0] + 2.0 * p[1]; });
    CHECK(f.interpolate({0.25, 0.75}) == doctest::Approx(0.25 + 1.5));
}

TEST_CASE("trapezoid integral") {
    Grid g(Box({0.0}, {1.0}), 101);
    GridFunction lin = GridFunction::sample(g, [](const Point& p) { return p[0]; });
    CHECK(lin.integrate() == doctest::Approx(0.5).epsilon(1e-12));  // exact for linear
    GridFunction sq = GridFunction::sample(g, [](const Point& p) { return p[0] * p[0]; });
    CHECK(sq.integrate() == doctest::Approx(1.0 / 3.0).epsilon(1e-4));
    // linearity
    GridFunction sum = GridFunction::sample(g, [](const Point& p) { return p[0] + p[0] * p[0]; });
    CHECK(sum.integrate() == doctest::Approx(lin.integrate() + sq.integrate()).epsilon(1e-12));
    CHECK(integrate_grid(lin) == doctest::Approx(lin.integrate()));
}

TEST_CASE("trapezoid integral 2d") {
    Grid g(Box({0.0, 0.0}, {2.0, 3.0}), 9);
    GridFunction one = GridFunction::sample(g, [](const Point&) { return 1.0; });
    CHECK(one.integrate() == doctest::Approx(6.0).epsilon(1e-12));
}

TEST_CASE("support queries") {
    Grid g(Box({0.0}, {1.0}), 5);
    std::vector<double> v(5, 0.0);
    v[2] = 1.0;  // positive only at x = 0.5
    GridFunction f(g, v);
    CHECK(f.support_nodes().size() == 1);
    CHECK(f.in_support({0.5}));
    CHECK(f.in_support({0.4}));    // interpolated positive
    CHECK(f.in_support({0.26}));   // within half a spacing of the node? no, via interp
    CHECK(!f.in_support({0.1}));
    const auto sb = f.support_box();
    REQUIRE(sb.has_value());
    CHECK(sb->lo[0] <= 0.5);
    CHECK(sb->hi[0] >= 0.5);
}

TEST_CASE("mc volume of a known region") {
    const Box box({0.0, 0.0}, {1.0, 1.0});
    auto disk = [](const Point& p) {
        const double dx = p[0] - 0.5, dy = p[1] - 0.5;
        return dx * dx + dy * dy <= 0.25;
    };
    const McEstimate e = mc_volume(disk, box, 200000, RandomSource(11));
    CHECK(std::abs(e.estimate - M_PI / 4.0) <= 4.0 * e.stderr_);
    CHECK(e.stderr_ == doctest::Approx(std::sqrt((e.estimate) * (1.0 - e.estimate) /
                                                 e.samples))
                           .epsilon(1e-9));
    // determinism
    const McEstimate e2 = mc_volume(disk, box, 200000, RandomSource(11));
    CHECK(e.estimate == e2.estimate);
    CHECK(e.hits == e2.hits);
}

TEST_CASE("refinement sweep validates nesting") {
    auto task = [](int r) { return 1.0 / r; };
    const auto rows = refinement_sweep(task, {5, 9, 17});
    CHECK(rows.size() == 3);
    CHECK(rows[2].first == 17);
    CHECK_THROWS_AS(refinement_sweep(task, {5, 10}), std::invalid_argument);
    CHECK_THROWS_AS(refinement_sweep(task, {9, 5}), std::invalid_argument);
}
