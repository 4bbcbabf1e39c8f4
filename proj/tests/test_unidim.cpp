#include "doctest.h"
#include "lacuna/unidim.hpp"
#include "support.hpp"

using namespace lacuna;
using namespace testing_support;

namespace {

Direction D(std::vector<Integer> v) { return Direction::normalize(std::move(v)); }

// Unidimensional test engine answering from a fixed table, to check how the
// reduction combines component answers.
class TableEngine : public UnivariateFactorEngine {
public:
    std::vector<Factor> factor(const LacunaryPoly& p, const Integer& cap) const override {
        ++calls;
        return DenseUnivariateEngine().factor(p, cap);
    }
    unsigned multiplicity(const LacunaryPoly& q, const LacunaryPoly& p) const override {
        return DenseUnivariateEngine().multiplicity(q, p);
    }
    mutable int calls = 0;
};

class FailingEngine : public UnivariateFactorEngine {
public:
    std::vector<Factor> factor(const LacunaryPoly&, const Integer&) const override {
        throw EngineLimitation("out of reach");
    }
    unsigned multiplicity(const LacunaryPoly&, const LacunaryPoly&) const override { return 0; }
};

}  // namespace

TEST_CASE("components") {
    const auto dec = components(P("1 + x + y + x*y", 2), D({1, 0}));
    REQUIRE(dec.components.size() == 2);
    CHECK(sum_all(dec.components, 2) == P("1 + x + y + x*y", 2));
    CHECK(((dec.components[0] == P("x*y + y", 2) && dec.components[1] == P("x + 1", 2)) ||
           (dec.components[1] == P("x*y + y", 2) && dec.components[0] == P("x + 1", 2))));

    CHECK(components(P("1 + x*y^2 + x^2*y^4", 2), D({1, 2})).components.size() == 1);
    CHECK(components(P("1 + x + y", 2), D({1, 1})).components.size() == 3);
    CHECK_THROWS_AS(components(LacunaryPoly(2), D({1, 1})), ZeroPolynomial);
}

TEST_CASE("project") {
    const auto p = project(P("x^2*y + x^3*y^3 + x^4*y^5", 2), D({1, 2}));
    CHECK(p.poly == P("1 + x + x^2", 1));
    CHECK(p.anchor == ExponentVector{2, 1});

    const auto b = project(P("x + y", 2), D({1, -1}));
    CHECK(b.poly == P("1 + x", 1));
    CHECK(b.anchor == ExponentVector{0, 1});

    const auto c = project(P("3*x^2*y^7 - 5*x^3*y^8", 2), D({1, 1}));
    CHECK(c.poly == P("3 - 5*x", 1));
    CHECK(c.anchor == ExponentVector{2, 7});

    CHECK_THROWS_AS(project(P("1 + x + y", 2), D({1, 0})), NotUnidimensional);
    CHECK_THROWS_AS(project(P("1 + x + x^2", 2), D({0, 1})), DirectionMismatch);
}

TEST_CASE("lift") {
    CHECK(lift(P("1 + x + x^2", 1), D({1, 2})) == P("1 + x*y^2 + x^2*y^4", 2));
    CHECK(lift(P("1 + x", 1), D({1, -1})) == P("y + x", 2));
    CHECK(lift(P("1 + x", 1), D({1, 0})) == P("1 + x", 2));
    CHECK_THROWS_AS(lift(P("x^3", 1), D({1, 0})), NotLiftable);
    CHECK_THROWS_AS(lift(P("5", 1), D({1, 0})), NotLiftable);
}

TEST_CASE("projection_degree_bound") {
    CHECK(projection_degree_bound({3, 5}, D({1, 2})) == Integer(2));
    CHECK_FALSE(projection_degree_bound({1, 1}, D({2, 1})).has_value());
    CHECK(projection_degree_bound({7, 7}, D({1, 0})) == Integer(7));
    CHECK(projection_degree_bound({4, 0}, D({1, 0})) == Integer(4));
}

TEST_CASE("round trips between projection and lifting") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        Gen g(seed);
        const std::size_t n = static_cast<std::size_t>(g.range(1, 4));
        std::vector<Integer> dv(n);
        for (auto& x : dv) x = g.range(-3, 3);
        if (std::all_of(dv.begin(), dv.end(), [](const Integer& x) { return x == 0; })) dv[0] = 1;
        const auto d = D(dv);
        auto u = g.poly(1, 6, 12);
        if (u.size() < 2) continue;
        u = normalize_mval(u).first;
        const auto f = shift(lift(u, d), ExponentVector(n, g.range(0, 5)));
        const auto p = project(f, d);
        CHECK(p.poly == u);
        CHECK(lift(p.poly, d) == normalize_mval(f).first);
        CHECK(shift(lift(p.poly, d), normalize_mval(f).second) == f);

        // closure under products of the same direction
        auto w = g.poly(1, 4, 6);
        if (w.size() >= 2) {
            const auto prod = multiply(lift(u, d), lift(normalize_mval(w).first, d));
            CHECK(components(prod, d).components.size() == 1);
        }
    }
}

TEST_CASE("unidimensional factors: worked examples") {
    const DenseUnivariateEngine engine;
    const auto r = unidimensional_factors(P("1 + x + y + x*y", 2), {1, 1}, engine);
    REQUIRE(r.size() == 2);
    CHECK(r[0].factor == P("x + 1", 2));
    CHECK(r[1].factor == P("y + 1", 2));
    CHECK(r[0].multiplicity == 1);

    const auto big = multiply(pw(P("x + y", 2), 2), P("1 + x^1000000000000000000000000000000", 2));
    const auto s = unidimensional_factors(big, {1, 1}, engine);
    REQUIRE(s.size() == 1);
    CHECK(s[0].factor == P("x + y", 2));
    CHECK(s[0].multiplicity == 2);

    CHECK_THROWS_AS(unidimensional_factors(P("x^2*y", 2), {1, 1}, engine), MonomialInput);
}

TEST_CASE("unidimensional factors: screening and unresolved directions") {
    const auto f = multiply(P("1 + x + y", 2), pw(P("x - 2", 2), 3));
    for (auto kind : {DeltaKind::One, DeltaKind::Three}) {
        const auto r = unidimensional_factors(f, {2, 2}, DenseUnivariateEngine(), UnidimOptions{kind});
        REQUIRE(r.size() == 1);
        CHECK(r[0].factor == P("x - 2", 2));
        CHECK(r[0].multiplicity == 3);
    }
    TableEngine table;
    unidimensional_factors(P("1 + x + y + x*y", 2), {1, 1}, table);
    CHECK(table.calls == 2);

    std::vector<Direction> unresolved;
    const auto r = unidimensional_factors(P("1 + x + y + x*y", 2), {1, 1}, FailingEngine(), {}, &unresolved);
    CHECK(r.empty());
    CHECK(unresolved.size() == 2);
    CHECK_THROWS_AS(unidimensional_factors(P("1 + x + y + x*y", 2), {1, 1}, FailingEngine()), EngineLimitation);
}

TEST_CASE("engine past the dense guard finds rational roots") {
    const DenseUnivariateEngine engine(1 << 10);
    const Integer e("100000000000000000000000000000000000000001");
    // (1 + z)^2 (z^e - 3) (2z - 3) with odd e
    auto p = multiply(pw(P("1 + x", 1), 2), add(LacunaryPoly::monomial(1, 1, {e}), LacunaryPoly::constant(1, -3)));
    p = multiply(p, P("2*x - 3", 1));
    const auto r = engine.factor(p, 1);
    REQUIRE(r.size() == 2);
    CHECK(format_poly(r[0].poly) == "x + 1");
    CHECK(r[0].multiplicity == 2);
    CHECK(format_poly(r[1].poly) == "2*x - 3");
    CHECK(r[1].multiplicity == 1);
    CHECK_THROWS_AS(engine.factor(p, 2), EngineLimitation);
    CHECK(engine.multiplicity(P("x + 1", 1), p) == 2);
    CHECK(engine.multiplicity(P("x - 1", 1), p) == 0);
}

TEST_CASE("factors found divide the input (dense oracle)") {
    const DenseUnivariateEngine engine;
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        Gen g(seed);
        const auto d = D({g.range(0, 2), g.range(1, 2)});
        auto u = normalize_mval(g.poly(1, 3, 2)).first;
        if (u.size() < 2) continue;
        auto f = multiply(lift(u, d), g.poly(2, 4, 4));
        if (f.size() < 2 || f.is_monomial()) continue;
        f = normalize_mval(f).first;
        if (f.is_constant()) continue;
        for (const auto& r : unidimensional_factors(f, {4, 4}, engine)) {
            CHECK(r.multiplicity == oracle_mult(r.factor, f));
        }
    }
}
