#include <algorithm>

#include "doctest.h"
#include "lacuna/driver.hpp"
#include "support.hpp"

using namespace lacuna;
using namespace testing_support;

namespace {

const Integer kE50("100000000000000000000000000000000000000000000000000");

std::vector<std::pair<std::string, unsigned>> listed(const std::vector<FactorWithMultiplicity>& v) {
    std::vector<std::pair<std::string, unsigned>> out;
    for (const auto& f : v) out.emplace_back(format_poly(f.factor), f.multiplicity);
    return out;
}

LacunaryPoly one_plus(std::size_t n, const ExponentVector& e) {
    return add(LacunaryPoly::constant(n, 1), LacunaryPoly::monomial(n, 1, e));
}

// Irreducible, non-collinear, of bidegree at most caps.
std::optional<LacunaryPoly> random_multidimensional(Gen& g, long dx, long dy) {
    const auto q = g.boxed({dx, dy}, 0.6, 6);
    if (q.size() < 3 || collinear(q) || mval(q) != ExponentVector{0, 0}) return std::nullopt;
    const auto fl = factor_bivariate(DensePoly::from_lacunary(q));
    if (fl.factors.size() != 1 || fl.factors[0].multiplicity != 1) return std::nullopt;
    return fl.factors[0].factor.to_lacunary();
}

}  // namespace

TEST_CASE("huge exponent with a repeated multidimensional factor") {
    const auto f = multiply(pw(P("1 + x + y", 2), 2), one_plus(2, {kE50, 0}));
    const auto r = bounded_degree_factors(f, {1, 1});
    CHECK(listed(r.multidimensional) == std::vector<std::pair<std::string, unsigned>>{{"x + y + 1", 2}});
    CHECK(r.unidimensional.empty());
    CHECK(r.monomial == ExponentVector{0, 0});
    REQUIRE(r.certificates.size() == 1);
    CHECK(r.certificates[0].mode == CertificateMode::Probabilistic);
}

TEST_CASE("monomial and unidimensional factors") {
    const auto f = multiply(P("x^3*y", 2), multiply(P("1 + x", 2), P("1 + y", 2)));
    const auto r = bounded_degree_factors(f, {1, 1});
    CHECK(r.monomial == ExponentVector{3, 1});
    CHECK(listed(r.unidimensional) == std::vector<std::pair<std::string, unsigned>>{{"x + 1", 1}, {"y + 1", 1}});
    CHECK(r.multidimensional.empty());
    for (const auto& c : r.certificates) CHECK(c.mode == CertificateMode::Exact);
}

TEST_CASE("irreducible input reports itself") {
    const auto f = P("y^2 + x*y + x^3", 2);
    const auto r = bounded_degree_factors(f, {3, 2});
    CHECK(listed(r.multidimensional) == std::vector<std::pair<std::string, unsigned>>{{"x^3 + x*y + y^2", 1}});
    CHECK(bounded_degree_factors(f, {2, 2}).multidimensional.empty());
}

TEST_CASE("stage switches and errors") {
    const auto f = multiply(multiply(P("1 + x", 2), P("1 + x + y", 2)), one_plus(2, {kE50, 1}));
    FactorOptions only_uni;
    only_uni.multidimensional = false;
    const auto a = bounded_degree_factors(f, {1, 1}, only_uni);
    CHECK(listed(a.unidimensional) == std::vector<std::pair<std::string, unsigned>>{{"x + 1", 1}});
    CHECK(a.multidimensional.empty());
    FactorOptions only_multi;
    only_multi.unidimensional = false;
    const auto b = bounded_degree_factors(f, {1, 1}, only_multi);
    CHECK(b.unidimensional.empty());
    CHECK(listed(b.multidimensional) == std::vector<std::pair<std::string, unsigned>>{{"x + y + 1", 1}});

    CHECK_THROWS_AS(bounded_degree_factors(LacunaryPoly(2), {1, 1}), ZeroPolynomial);
    CHECK_THROWS_AS(bounded_degree_factors(f, {1}), ArityMismatch);
    CHECK(bounded_degree_factors(P("7*x^2*y", 2), {1, 1}).monomial == ExponentVector{2, 1});
}

TEST_CASE("three variables leave a residual instance") {
    const auto f = multiply(P("1 + x + y + z", 3), one_plus(3, {kE50, 0, 0}));
    const auto r = bounded_degree_factors(f, {1, 1, 1});
    REQUIRE(r.residual.size() == 1);
    CHECK(format_poly(r.residual[0].to_lacunary()) == "x + y + z + 1");
}

TEST_CASE("guard exceeded in the multidimensional stage") {
    FactorOptions o;
    o.unidimensional = false;
    o.dense_guard = 4;
    const auto f = multiply(P("1 + x^3 + y^3 + x*y", 2), one_plus(2, {kE50, 0}));
    CHECK_THROWS_AS(bounded_degree_factors(f, {3, 3}, o), GuardExceeded);
}

TEST_CASE("verify_factors") {
    const auto f = multiply(P("x^2", 2), multiply(pw(P("x + y", 2), 2), one_plus(2, {Integer("1000000000000000000000000000000"), 0})));
    const auto v = verify_factors(f, {{P("x + y", 2), 2}, {P("x + y", 2), 3}, {P("x - y", 2), 1}, {P("x", 2), 2}, {P("x^2*y + x*y^2", 2), 1}},
                                  8, 0);
    REQUIRE(v.size() == 5);
    CHECK(v[0].match());
    CHECK_FALSE(v[1].match());
    CHECK(v[1].found == 2);
    CHECK(v[2].found == 0);
    CHECK(v[3].match());
    CHECK(v[4].found == 0);
    CHECK_THROWS_AS(verify_factors(f, {{P("3", 2), 1}}, 8, 0), PreconditionError);
}

TEST_CASE("json layout") {
    const auto f = multiply(P("x^3*y", 2), multiply(P("1 + x", 2), P("1 + y", 2)));
    const auto j = to_json(bounded_degree_factors(f, {1, 1}), -1);
    CHECK(j.rfind("{\"monomial\":{\"x1\":\"3\",\"x2\":\"1\"},\"unidimensional\":[{\"poly\":\"x + 1\",\"mult\":1}", 0) == 0);
    const auto keys = {"\"multidimensional\"", "\"residual\"", "\"unresolved\"", "\"certificates\"", "\"warnings\"", "\"meta\""};
    std::size_t at = 0;
    for (const char* k : keys) {
        const auto p = j.find(k);
        REQUIRE(p != std::string::npos);
        CHECK(p > at);
        at = p;
    }
}

TEST_CASE("reports are deterministic") {
    const auto f = multiply(pw(P("1 + x + y", 2), 2), multiply(P("1 + y", 2), one_plus(2, {kE50, 3})));
    FactorOptions o;
    o.seed = 42;
    const auto a = to_json(bounded_degree_factors(f, {1, 1}, o));
    const auto b = to_json(bounded_degree_factors(f, {1, 1}, o));
    CHECK(a == b);
}

TEST_CASE("completeness on seeded fixtures") {
    int done = 0;
    for (std::uint64_t seed = 0; done < 200 && seed < 5000; ++seed) {
        Gen g(seed);
        const long dx = g.range(1, 2);
        const long dy = g.range(1, 2);
        std::vector<std::pair<LacunaryPoly, unsigned>> want;
        const long parts = g.range(1, 2);
        LacunaryPoly f = LacunaryPoly::constant(2, g.nonzero(5));
        for (long i = 0; i < parts; ++i) {
            auto q = random_multidimensional(g, dx, dy);
            if (!q) continue;
            if (std::any_of(want.begin(), want.end(), [&](const auto& w) { return w.first == *q; })) continue;
            const unsigned m = static_cast<unsigned>(g.range(1, 2));
            want.emplace_back(*q, m);
            f = multiply(f, pw(*q, m));
        }
        if (want.empty()) continue;
        // Three terms that are far apart and not collinear: no unidimensional
        // factor and no bounded-degree multidimensional factor.
        const Integer a = Integer(g.range(1, 1000)) * Integer("100000000000000000000") + 1;
        const Integer b = Integer(g.range(1, 1000)) * Integer("100000000000000000000") + 3;
        const auto h = add(one_plus(2, {a, 0}), LacunaryPoly::monomial(2, g.nonzero(4), {0, b}));
        const ExponentVector mono{g.range(0, 3), g.range(0, 3)};
        f = shift(multiply(f, h), mono);

        FactorOptions o;
        o.seed = seed;
        const auto r = bounded_degree_factors(f, {dx, dy}, o);
        std::vector<std::pair<std::string, unsigned>> expect;
        for (const auto& [q, m] : want) expect.emplace_back(format_poly(q), m);
        std::sort(expect.begin(), expect.end());
        CHECK(listed(r.multidimensional) == expect);
        CHECK(r.unidimensional.empty());
        CHECK(r.monomial == mono);
        ++done;
    }
    CHECK(done == 200);
}
