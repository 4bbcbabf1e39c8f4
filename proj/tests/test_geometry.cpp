#include <algorithm>
#include <set>

#include "doctest.h"
#include "lacuna/dense.hpp"
#include "support.hpp"

using namespace lacuna;
using namespace testing_support;

namespace {

Direction D(std::vector<Integer> v) { return Direction::normalize(std::move(v)); }

std::set<std::vector<Integer>> as_set(const DirectionSet& s) {
    std::set<std::vector<Integer>> out;
    for (const auto& d : s.members) out.insert(d.coords());
    return out;
}

}  // namespace

TEST_CASE("normalize_direction") {
    CHECK(D({-2, 4}).coords() == std::vector<Integer>{1, -2});
    CHECK(D({0, -3}).coords() == std::vector<Integer>{0, 1});
    CHECK(D({3, 5}).coords() == std::vector<Integer>{3, 5});
    CHECK(normalize_direction({6, -9, 12}).coords() == std::vector<Integer>{2, -3, 4});
    CHECK_THROWS_AS(D({0, 0}), ZeroVector);
}

TEST_CASE("delta3") {
    CHECK(as_set(delta3(P("1 + x^2*y + x^4*y^2", 2))) == std::set<std::vector<Integer>>{{2, 1}});
    CHECK(as_set(delta3(P("1 + x + y", 2))) == std::set<std::vector<Integer>>{{1, 0}, {0, 1}, {1, -1}});
    CHECK(delta3(P("3*x^5*y - 2*y^7", 2)).size() == 1);
    CHECK_THROWS_AS(delta3(P("x", 2)), TooFewTerms);
}

TEST_CASE("line_partition") {
    const std::vector<ExponentVector> pts{{0, 0}, {2, 1}, {4, 2}, {1, 3}};
    const auto groups = line_partition(pts, D({2, 1}));
    CHECK(groups == std::vector<std::vector<std::size_t>>{{0, 1, 2}, {3}});
    CHECK(line_partition({{5, 5}}, D({1, 0})).size() == 1);

    const auto sq = P("1 + x + y + x*y", 2).support();
    auto g = line_partition(sq, D({1, 0}));
    CHECK(g.size() == 2);
    for (const auto& grp : g) {
        REQUIRE(grp.size() == 2);
        CHECK(sq[grp[0]][1] == sq[grp[1]][1]);
    }
}

TEST_CASE("line_partition groups are collinear and maximal") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        Gen g(seed);
        const auto f = g.poly(3, 12, 4);
        if (f.size() < 2) continue;
        const auto d = D({g.range(-2, 2), g.range(-2, 2), g.range(1, 2)});
        const auto pts = f.support();
        const auto groups = line_partition(pts, d);
        std::size_t total = 0;
        for (const auto& grp : groups) total += grp.size();
        CHECK(total == pts.size());
        auto on_line = [&](const ExponentVector& a, const ExponentVector& b) {
            // b - a parallel to d
            for (std::size_t i = 0; i < 3; ++i) {
                for (std::size_t j = i + 1; j < 3; ++j) {
                    if ((b[i] - a[i]) * d[j] != (b[j] - a[j]) * d[i]) return false;
                }
            }
            return true;
        };
        for (std::size_t x = 0; x < groups.size(); ++x) {
            for (auto idx : groups[x]) CHECK(on_line(pts[groups[x][0]], pts[idx]));
            for (std::size_t y = x + 1; y < groups.size(); ++y) CHECK_FALSE(on_line(pts[groups[x][0]], pts[groups[y][0]]));
        }
    }
}

TEST_CASE("delta1") {
    CHECK(as_set(delta1(P("1 + x + y + x*y", 2))) == std::set<std::vector<Integer>>{{1, 0}, {0, 1}});
    CHECK(as_set(delta1(P("x^3 - 7*y^2", 2))) == std::set<std::vector<Integer>>{{3, -2}});
    CHECK(as_set(delta1(P("1 + x + x^2", 2))) == std::set<std::vector<Integer>>{{1, 0}});
    CHECK(delta1(P("1 + x + y", 2)).size() == 0);
    CHECK_THROWS_AS(delta1(P("x", 1)), TooFewTerms);
}

TEST_CASE("delta1 pairwise strategy agrees with the reference strategy") {
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        Gen g(seed);
        const std::size_t n = static_cast<std::size_t>(g.range(2, 4));
        // products of a few short factors give supports with many collinear pairs
        LacunaryPoly f = g.poly(n, 2, 2);
        for (int j = 0; j < 2; ++j) {
            auto h = g.poly(n, static_cast<std::size_t>(g.range(2, 3)), 2);
            if (!h.is_zero()) f = multiply(f, h);
        }
        if (f.size() < 2) continue;
        CHECK(as_set(delta1(f)) == as_set(delta1_from_delta3(f)));
    }
}

TEST_CASE("hull2d classification") {
    const auto t = hull2d(P("1 + x + y", 2));
    CHECK(t.vertices.size() == 3);
    CHECK(t.edges_of(HullPart::Lower).size() == 1);
    CHECK(t.edges_of(HullPart::Upper).size() == 1);
    CHECK(t.edges_of(HullPart::Vertical).size() == 1);

    const auto c = hull2d(P("y^2 + x*y + x^3", 2));
    const auto lower = c.edges_of(HullPart::Lower);
    REQUIRE(lower.size() == 2);
    CHECK(lower[0].from == Point2{0, 2});
    CHECK(lower[0].to == Point2{1, 1});
    CHECK(lower[1].from == Point2{1, 1});
    CHECK(lower[1].to == Point2{3, 0});

    const auto m = hull2d(P("x^4*y", 2));
    CHECK(m.vertices.size() == 1);
    CHECK(m.edges.empty());

    const auto s = hull2d(P("1 + x*y + x^2*y^2", 2));
    CHECK(s.vertices.size() == 2);
    REQUIRE(s.edges.size() == 1);
    CHECK(s.edges[0].lower);
    CHECK(s.edges[0].upper);
}

TEST_CASE("hull vertices are strictly convex and counter-clockwise") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        Gen g(seed);
        const auto f = g.poly(2, 15, 30);
        const auto& v = hull2d(f).vertices;
        if (v.size() < 3) continue;
        for (std::size_t i = 0; i < v.size(); ++i) {
            const auto& a = v[i];
            const auto& b = v[(i + 1) % v.size()];
            const auto& c = v[(i + 2) % v.size()];
            const Integer cross = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
            CHECK(cross > 0);
        }
        // every support point lies inside or on the hull
        for (const auto& p : f.support()) {
            for (std::size_t i = 0; i < v.size(); ++i) {
                const auto& a = v[i];
                const auto& b = v[(i + 1) % v.size()];
                CHECK((b.x - a.x) * (p[1] - a.y) - (b.y - a.y) * (p[0] - a.x) >= 0);
            }
        }
    }
}

TEST_CASE("delta2") {
    CHECK(as_set(delta2_bivariate(P("1 + x + y + x*y", 2))) == std::set<std::vector<Integer>>{{1, 0}, {0, 1}});
    CHECK(delta2_bivariate(P("1 + x + y", 2)).size() == 0);
    CHECK(delta2_bivariate(P("1 + x*y + x^2*y^2", 2)).size() == 0);
    CHECK_THROWS_AS(delta2_bivariate(P("1 + x + y + z", 3)), UnsupportedArity);
}

TEST_CASE("edge valuations") {
    auto values = [](const std::vector<Valuation>& v) {
        std::set<Rational> s;
        for (const auto& x : v) s.insert(x.value);
        return s;
    };
    CHECK(values(edge_valuations(P("y^2 + x*y + x^3", 2), HullPart::Lower)) == std::set<Rational>{1, 2});
    CHECK(values(edge_valuations(P("1 + x + y", 2), HullPart::Lower)) == std::set<Rational>{0});
    CHECK(edge_valuations(P("x^2*y", 2), HullPart::Lower).empty());
}

TEST_CASE("delta chain on two-dimensional supports") {
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        Gen g(seed);
        auto f = multiply(g.poly(2, 3, 3), g.poly(2, 3, 3));
        if (f.size() < 2 || collinear(f)) continue;
        const auto d1 = as_set(delta1(f));
        const auto d2 = as_set(delta2_bivariate(f));
        const auto d3 = as_set(delta3(f));
        CHECK(std::includes(d2.begin(), d2.end(), d1.begin(), d1.end()));
        CHECK(std::includes(d3.begin(), d3.end(), d2.begin(), d2.end()));
        CHECK(d3.size() <= f.size() * (f.size() - 1) / 2);
    }
}

TEST_CASE("Ostrowski: edges of a product come from the factors") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        Gen g(seed);
        const auto a = g.poly(2, 5, 10);
        const auto b = g.poly(2, 5, 10);
        if (a.is_zero() || b.is_zero()) continue;
        const auto prod = multiply(a, b);
        std::set<std::vector<Integer>> dirs;
        for (const auto& e : hull2d(a).edges) dirs.insert(e.direction.coords());
        for (const auto& e : hull2d(b).edges) dirs.insert(e.direction.coords());
        for (const auto& e : hull2d(prod).edges) CHECK(dirs.count(e.direction.coords()) == 1);
    }
}
