#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "lplab/sets.hpp"

using namespace lplab;

namespace {

bool subset_of(const DiscreteSet& A, const DiscreteSet& B, double tol = 1e-9) {
    for (const auto& p : A.points) {
        bool found = false;
        for (const auto& q : B.points) {
            double d = 0.0;
            for (std::size_t i = 0; i < p.size(); ++i) d = std::max(d, std::abs(p[i] - q[i]));
            if (d <= tol) {
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

} // namespace

TEST_CASE("discrete set dedup and sampling") {
    DiscreteSet A({{0.0}, {1.0}, {1.0 + 1e-14}, {0.5}});
    CHECK(A.size() == 3);
    const DiscreteSet seg = DiscreteSet::sample_segment(0.0, 2.0, 5);
    CHECK(seg.size() == 5);
    CHECK(seg.points.front()[0] == doctest::Approx(0.0));
    CHECK(seg.points.back()[0] == doctest::Approx(2.0));
    const Box bb = seg.bounding_box();
    CHECK(bb.lo[0] == doctest::Approx(0.0));
    CHECK(bb.hi[0] == doctest::Approx(2.0));
}

TEST_CASE("polytope keeps extreme points only") {
    ConvexPolytope sq({{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0.5, 0.5}, {0.25, 0.25}});
    CHECK(sq.vertices().size() == 4);
    ConvexPolytope seg({{0.0}, {0.3}, {1.0}});
    CHECK(seg.vertices().size() == 2);
}

TEST_CASE("support function of a square") {
    ConvexPolytope sq({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    CHECK(support_function(sq, {1.0, 0.0}) == doctest::Approx(1.0));
    CHECK(support_function(sq, {-1.0, 0.0}) == doctest::Approx(0.0));
    CHECK(support_function(sq, {1.0, 1.0}) == doctest::Approx(2.0));
    // positive homogeneity
    CHECK(support_function(sq, {2.0, 2.0}) == doctest::Approx(4.0));
}

TEST_CASE("holder conjugate") {
    CHECK(std::isinf(holder_conjugate(1.0)));
    CHECK(holder_conjugate(2.0) == doctest::Approx(2.0));
    CHECK(holder_conjugate(1.5) == doctest::Approx(3.0));
    CHECK_THROWS_AS(holder_conjugate(0.5), std::domain_error);
}

TEST_CASE("coefficient curves") {
    const CoefficientSet m1 = CoefficientSet::lp_curve(1.0, 101);
    REQUIRE(m1.pairs.size() == 1);
    CHECK(m1.pairs[0].first == doctest::Approx(1.0));
    CHECK(m1.pairs[0].second == doctest::Approx(1.0));

    const CoefficientSet m2 = CoefficientSet::lp_curve(2.0, 129);
    CHECK(m2.symmetric());
    // endpoints and the symmetric midpoint are always present
    bool has10 = false, has01 = false, hasMid = false;
    for (auto [a, b] : m2.pairs) {
        if (std::abs(a - 1.0) < 1e-12 && std::abs(b) < 1e-12) has10 = true;
        if (std::abs(a) < 1e-12 && std::abs(b - 1.0) < 1e-12) has01 = true;
        if (std::abs(a - std::sqrt(0.5)) < 1e-12 && std::abs(b - std::sqrt(0.5)) < 1e-12)
            hasMid = true;
        CHECK(a * a + b * b == doctest::Approx(1.0).epsilon(1e-12));
    }
    CHECK(has10);
    CHECK(has01);
    CHECK(hasMid);
}

TEST_CASE("m_add with classical coefficients is the Minkowski sum") {
    DiscreteSet A({{0.0}, {1.0}});
    DiscreteSet B({{0.0}, {2.0}});
    const DiscreteSet S = m_add(A, B, CoefficientSet::classical());
    CHECK(S.size() == 4);  // {0,1,2,3}
    CHECK(subset_of(DiscreteSet({{0.0}, {1.0}, {2.0}, {3.0}}), S));
}

TEST_CASE("m_add is monotone in the coefficient set") {
    DiscreteSet A({{0.0}, {1.0}});
    DiscreteSet B({{0.5}, {2.0}});
    const CoefficientSet small = CoefficientSet::explicit_pairs({{0.5, 0.5}});
    const CoefficientSet big = CoefficientSet::explicit_pairs({{0.5, 0.5}, {1.0, 1.0}});
    CHECK(subset_of(m_add(A, B, small), m_add(A, B, big)));
}

TEST_CASE("m_add symmetry for symmetric M") {
    DiscreteSet A({{0.0}, {1.0}});
    DiscreteSet B({{0.0}, {2.0}, {3.0}});
    const CoefficientSet M = CoefficientSet::lp_curve(2.0, 33);
    const DiscreteSet AB = m_add(A, B, M);
    const DiscreteSet BA = m_add(B, A, M);
    CHECK(AB.size() == BA.size());
    CHECK(subset_of(AB, BA));
}

TEST_CASE("p = 1 pointwise sum reduces to Minkowski addition") {
    DiscreteSet A({{0.0}, {1.0}});
    DiscreteSet B({{0.0}, {2.0}});
    const DiscreteSet S = lp_pointwise_sum(A, B, 1.0, 999);
    const DiscreteSet M = m_add(A, B, CoefficientSet::classical());
    CHECK(S.size() == M.size());
    CHECK(subset_of(S, M));
}

TEST_CASE("support form and pointwise form of the L_p sum agree") {
    // both bodies have nonnegative support functions (origin inside)
    const std::vector<Point> kv = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    const std::vector<Point> lv = {{-1, -1}, {1, -1}, {1, 1}, {-1, 1}};
    const ConvexPolytope K(kv), L(lv);
    for (double p : {1.0, 1.5, 2.0, 3.0}) {
        const DiscreteSet sum = lp_pointwise_sum(DiscreteSet(kv), DiscreteSet(lv), p, 4097);
        const ConvexPolytope hull(sum.points);
        std::vector<Point> dirs;
        for (int k = 0; k < 72; ++k)
            dirs.push_back({std::cos(2.0 * M_PI * k / 72), std::sin(2.0 * M_PI * k / 72)});
        const auto table = lp_support_sum(K, L, p, dirs);
        for (const auto& sv : table) {
            const double hp = support_function(hull, sv.direction);
            CHECK(hp == doctest::Approx(sv.value).epsilon(5e-4));
            CHECK(hp <= sv.value + 1e-9);  // sampled curve stays inside
        }
    }
}

TEST_CASE("lp_support_sum rejects bodies without the origin") {
    const ConvexPolytope K({{1.0, 1.0}, {2.0, 1.0}, {1.0, 2.0}});
    const ConvexPolytope L({{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}});
    CHECK_THROWS_AS(lp_support_sum(K, L, 2.0, {{-1.0, -1.0}}), std::domain_error);
}

TEST_CASE("convex hull membership lp") {
    const std::vector<Point> tri = {{0, 0}, {1, 0}, {0, 1}};
    CHECK(in_convex_hull({0.2, 0.2}, tri));
    CHECK(in_convex_hull({0.5, 0.5}, tri));       // boundary
    CHECK(!in_convex_hull({0.6, 0.6}, tri));
    CHECK(!in_convex_hull({-0.1, 0.0}, tri));
    const std::vector<Point> tet = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    CHECK(in_convex_hull({0.2, 0.2, 0.2}, tet));
    CHECK(!in_convex_hull({0.4, 0.4, 0.4}, tet));
}

TEST_CASE("hull volumes") {
    const DiscreteSet seg({{0.0}, {0.25}, {2.0}});
    const McEstimate v1 = volume_hull(seg, 10, RandomSource(1));
    CHECK(v1.estimate == doctest::Approx(2.0));
    CHECK(v1.stderr_ == 0.0);

    const DiscreteSet sq({{0, 0}, {2, 0}, {2, 2}, {0, 2}, {1, 1}});
    const McEstimate v2 = volume_hull(sq, 10, RandomSource(1));
    CHECK(v2.estimate == doctest::Approx(4.0));
    CHECK(v2.stderr_ == 0.0);

    const DiscreteSet cube({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1},
                            {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}});
    const McEstimate v3 = volume_hull(cube, 20000, RandomSource(5));
    CHECK(v3.estimate == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("interval Brunn-Minkowski closed form via m_add") {
    // [0,1] + [0,2] under (1-l, l) has length (1-l) + 2l
    const DiscreteSet K = DiscreteSet::sample_segment(0.0, 1.0, 9);
    const DiscreteSet L = DiscreteSet::sample_segment(0.0, 2.0, 9);
    const DiscreteSet S = m_add(K, L, CoefficientSet::minkowski(0.25));
    const McEstimate v = volume_hull(S, 10, RandomSource(1));
    CHECK(v.estimate == doctest::Approx(0.75 + 2.0 * 0.25));
}
