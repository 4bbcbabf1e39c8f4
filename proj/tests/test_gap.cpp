#include "doctest.h"
#include "lacuna/dense.hpp"
#include "lacuna/gap.hpp"
#include "support.hpp"

using namespace lacuna;
using namespace testing_support;

namespace {

std::vector<std::string> shown(const PartitionResult& r) {
    std::vector<std::string> out;
    for (const auto& s : r.summands) out.push_back(format_poly(s));
    return out;
}

bool disjoint_and_sums_to(const PartitionResult& r, const LacunaryPoly& f) {
    std::size_t terms = 0;
    for (const auto& s : r.summands) {
        if (s.is_zero()) return false;
        terms += s.size();
    }
    return terms == f.size() && sum_all(r.summands, f.nvars()) == f;
}

// A few small clusters placed far apart; exercises every splitting path.
LacunaryPoly clustered(Gen& g, std::size_t n, long spread, long clusters = 3) {
    LacunaryPoly f(n);
    for (long c = 0; c < clusters; ++c) {
        ExponentVector off(n);
        for (auto& e : off) e = g.range(0, spread);
        f = add(f, shift(g.poly(n, static_cast<std::size_t>(g.range(1, 4)), 3), off));
    }
    return f;
}

}  // namespace

TEST_CASE("gamma") {
    CHECK(gamma(1, {5, 7}) == 0);
    CHECK(gamma(3, {1, 1}) == 16);
    CHECK(gamma(2, {2, 3}) == 24);
    CHECK_THROWS_AS(gamma(0, {1, 1}), PreconditionError);
    CHECK(gamma_v(1, {1, 1}, 1) == 0);
    CHECK(gamma_v(2, {1, 1}, 1) == 2);
    for (std::size_t l1 = 1; l1 <= 1000; l1 += 7) {
        for (std::size_t l2 = 1; l2 <= 1000; l2 += 11) {
            CHECK(gamma(l1, {2, 3}) + gamma(l2, {2, 3}) <= gamma(l1 + l2, {2, 3}));
        }
    }
    for (std::size_t l = 1; l <= 60; ++l) {
        for (int num = -6; num <= 6; ++num) {
            const Rational v(num, 3);
            CHECK(gamma_v(l, {2, 2}, v) <= Rational(gamma(l, {2, 2})));
        }
    }
}

TEST_CASE("no_gap") {
    CHECK(no_gap(P("x^5*y^9", 2), {1, 1}, 3));
    CHECK_FALSE(no_gap(P("x + y + x^21 + x^20*y", 2), {1, 1}, 1));
    CHECK(no_gap(P("x + y", 2), {1, 1}, 1));
    CHECK(no_gap(P("x + y + x^2 + y^2", 2), {1, 1}, 1));
    CHECK_FALSE(no_gap(P("x + y + x^7", 2), {1, 1}, 1));
    CHECK_FALSE(no_gap(P("1 + x", 2), {1, 1}, 0));
}

TEST_CASE("partition") {
    const auto f = P("x + y + x^21 + x^20*y", 2);
    CHECK(shown(partition(f, {1, 1}, 1)) == std::vector<std::string>{"x + y", "x^21 + x^20*y"});
    CHECK(shown(partition(P("1 + x + x^200*y", 2), {1, 1}, 0)) == std::vector<std::string>{"1", "x", "x^200*y"});
    CHECK(partition(P("x + y", 2), {1, 1}, 1).summands.size() == 1);
    CHECK_THROWS_AS(partition(P("x", 1), {1, 1}, 0), ArityMismatch);

    Trace trace;
    partition(f, {1, 1}, 1, &trace);
    CHECK_FALSE(trace.empty());
}

TEST_CASE("partition properties") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        Gen g(seed);
        const auto f = clustered(g, 2, g.coin() ? 60 : 5000);
        if (f.is_zero()) continue;
        const GapParams p{g.range(1, 3), g.range(1, 3)};
        const Rational v(g.range(-6, 6), g.range(1, 3));
        const auto r = partition(f, p, v);
        CHECK(disjoint_and_sums_to(r, f));
        for (const auto& s : r.summands) {
            CHECK(no_gap(s, p, v));
            CHECK(partition(s, p, v).summands.size() == 1);
        }
    }
}

TEST_CASE("bipartition") {
    const auto f = multiply(P("1 + x + y", 2), P("1 + x^30", 2));
    CHECK(shown(bipartition(f, {1, 1}, 0, kVertical)) ==
          std::vector<std::string>{"x + y + 1", "x^31 + x^30*y + x^30"});
    CHECK_THROWS_AS(bipartition(f, {1, 1}, 2, Rational(2)), EqualValuations);
    CHECK(bipartition(P("y^2 + x*y + x^3", 2), {3, 2}, 1, Rational(2)).summands.size() == 1);
}

TEST_CASE("bipartition properties and span bounds") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        Gen g(seed);
        const auto f = clustered(g, 2, 3000, 4);
        if (f.is_zero()) continue;
        const GapParams p{g.range(1, 3), g.range(1, 3)};
        const Rational v1(g.range(-3, 3), g.range(1, 2));
        std::optional<Rational> v2;
        if (g.coin(0.7)) {
            v2 = Rational(g.range(-3, 3), g.range(1, 2));
            if (*v2 == v1) continue;
        }
        const auto r = bipartition(f, p, v1, v2);
        CHECK(disjoint_and_sums_to(r, f));
        for (const auto& s : r.summands) {
            CHECK(bipartition(s, p, v1, v2).summands.size() == 1);
            CHECK(no_gap(s, p, v1));
            if (v2) CHECK(no_gap(s, p, *v2));
        }
    }
}

TEST_CASE("span bounds for directions within the bidegree") {
    // Valuations taken from directions (p, q) with |p| <= dx and |q1| + |q2| <= dy.
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        Gen g(seed);
        const Integer dx = g.range(1, 3);
        const Integer dy = g.range(2, 3);
        const long q1 = g.range(1, dy.get_si() - 1);
        const long q2 = g.range(1, dy.get_si() - q1);
        const Rational v1(-g.range(-dx.get_si(), dx.get_si()), q1);
        const Rational v2(-g.range(-dx.get_si(), dx.get_si()), q2);
        if (v1 == v2) continue;
        const auto f = clustered(g, 2, 2000, 5);
        if (f.is_zero()) continue;
        const GapParams p{dx, dy};
        for (const auto& s : bipartition(f, p, v1, v2).summands) {
            const Integer g_l = gamma(s.size(), p);
            const Integer xs = span(s, 0);
            const Integer ys = span(s, 1);
            CHECK(xs <= dx * dy * g_l);
            CHECK(2 * ys <= dy * dy * g_l);
        }
    }
}

TEST_CASE("boundsval") {
    const auto a = boundsval(normalize_direction({1, -1}), normalize_direction({2, -1}), {2, 2});
    CHECK(a.v1 == 1);
    CHECK(a.v2 == 2);
    CHECK(a.inverse_gap == 1);
    CHECK(a.spread == 3);
    CHECK(a.applicable);
    CHECK(a.holds);
    const auto b = boundsval(normalize_direction({0, 1}), normalize_direction({1, -1}), {2, 2});
    CHECK(b.v1 == 0);
    CHECK(b.v2 == 1);
    CHECK(b.inverse_gap == 1);
    CHECK(b.spread == 1);
    CHECK_THROWS_AS(boundsval(normalize_direction({1, -1}), normalize_direction({2, -2}), {2, 2}), ParallelDirections);
    CHECK_THROWS_AS(boundsval(normalize_direction({1, 0}), normalize_direction({1, -1}), {2, 2}), PreconditionError);
}

TEST_CASE("reduce_bivariate") {
    const auto f = multiply(P("1 + x + y", 2), P("1 + x^50", 2));
    const auto passes = reduce_bivariate(f, {1, 1});
    REQUIRE_FALSE(passes.empty());
    bool isolated = false;
    for (const auto& r : passes) {
        CHECK(disjoint_and_sums_to(r, f));
        bool all = r.summands.size() == 2;
        for (const auto& s : r.summands) all = all && normalize_mval(s).first == P("1 + x + y", 2);
        isolated = isolated || all;
    }
    CHECK(isolated);

    const auto h = P("y^2 + x*y + x^3", 2);
    for (const auto& r : reduce_bivariate(h, {3, 2})) CHECK(r.summands.size() == 1);

    // every edge of x^7 + y^7 + ... is too steep for bidegree (1,1)
    CHECK(reduce_bivariate(P("x^7 + y^5", 2), {1, 1}).empty());
    CHECK_THROWS_AS(reduce_bivariate(P("x^3*y", 2), {1, 1}), MonomialInput);
}

TEST_CASE("univariate_partition") {
    const Integer e(1000000);
    const auto f = add(P("x + y", 3), LacunaryPoly::monomial(3, 1, {e, 0, 1}));
    const auto r = univariate_partition(f, 16, 0);
    REQUIRE(r.summands.size() == 2);
    CHECK(r.summands[0] == P("x + y", 3));
    CHECK(r.summands[1] == LacunaryPoly::monomial(3, 1, {e, 0, 1}));
    CHECK(univariate_partition(f, e, 0).summands.size() == 1);
    CHECK(univariate_partition(P("x*y + x*z^9 + x", 3), 0, 0).summands.size() == 1);
    CHECK_THROWS_AS(univariate_partition(f, 16, 3), BadIndex);

    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        Gen g(seed);
        const auto h = clustered(g, 3, 500, 4);
        if (h.is_zero()) continue;
        const Integer delta = g.range(0, 40);
        const std::size_t i = static_cast<std::size_t>(g.range(0, 2));
        const auto rr = univariate_partition(h, delta, i);
        CHECK(disjoint_and_sums_to(rr, h));
        for (const auto& s : rr.summands) CHECK(span(s, i) <= Integer(s.size() - 1) * delta);
    }
}

TEST_CASE("multivariate_partition") {
    const auto f = multiply(P("1 + x + y", 2), add(LacunaryPoly::constant(2, 1), LacunaryPoly::monomial(2, 1, {1000, 0})));
    const auto r = multivariate_partition(f, {1, 1});
    REQUIRE(r.summands.size() == 2);
    for (const auto& s : r.summands) CHECK(s == P("x + y + 1", 2));
    REQUIRE(r.shifts.size() == 2);

    const auto small = P("1 + x + y + x^3*y^2", 2);
    CHECK(multivariate_partition(small, {1, 1}).summands.size() == 1);
    CHECK_THROWS_AS(multivariate_partition(P("x^4 + 1", 1), {1}), UnsupportedArity);
    CHECK_THROWS_AS(multivariate_partition(P("x^4*y", 2), {1, 1}), MonomialInput);
    CHECK(multivariate_delta(6, {1, 1}, 0) == 100);
}

TEST_CASE("multivariate_partition properties") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        Gen g(seed);
        const std::size_t n = static_cast<std::size_t>(g.range(2, 4));
        const auto f = clustered(g, n, 100000, 4);
        if (f.size() < 2 || f.is_constant()) continue;
        if (normalize_mval(f).first.is_constant()) continue;
        ExponentVector caps(n);
        for (auto& c : caps) c = g.range(1, 2);
        const auto r = multivariate_partition(f, caps);
        REQUIRE(r.shifts.size() == r.summands.size());
        LacunaryPoly back(n);
        std::size_t terms = 0;
        for (std::size_t t = 0; t < r.summands.size(); ++t) {
            back = add(back, shift(r.summands[t], r.shifts[t]));
            terms += r.summands[t].size();
            CHECK(mval(r.summands[t]) == ExponentVector(n, 0));
            const std::size_t k = r.summands[t].size();
            for (std::size_t i = 0; i < n; ++i) {
                CHECK(span(r.summands[t], i) <= Integer(k) * multivariate_delta(k, caps, i));
            }
        }
        CHECK(back == f);
        CHECK(terms == f.size());
        for (const auto& s : r.summands) {
            if (s.size() > 1) CHECK(multivariate_partition(s, caps).summands.size() == 1);
        }
    }
}

TEST_CASE("partition keeps multiplicities of bounded-degree factors") {
    int checked = 0;
    for (std::uint64_t seed = 0; checked < 200 && seed < 2000; ++seed) {
        Gen g(seed);
        const auto q = g.boxed({2, 2}, 0.5, 5);
        if (q.size() < 3 || collinear(q)) continue;
        const auto fl = factor_bivariate(DensePoly::from_lacunary(normalize_mval(q).first));
        if (fl.factors.size() != 1 || fl.factors[0].multiplicity != 1) continue;
        const auto gq = fl.factors[0].factor.to_lacunary();
        const auto vals = edge_valuations(gq, HullPart::Lower);
        if (vals.empty()) continue;
        const Rational v = vals[static_cast<std::size_t>(g.range(0, static_cast<long>(vals.size()) - 1))].value;

        LacunaryPoly f(2);
        for (int c = 0; c < 3; ++c) {
            auto piece = g.poly(2, 2, 2, 4);
            if (piece.is_zero()) continue;
            const unsigned m = static_cast<unsigned>(g.range(0, 2));
            piece = multiply(piece, pw(gq, m));
            f = add(f, shift(piece, {g.range(0, 300), g.range(0, 300)}));
        }
        if (f.is_zero()) continue;
        const auto r = partition(f, {2, 2}, v);
        const auto gd = DensePoly::from_lacunary(gq);
        unsigned lo = ~0u;
        for (const auto& s : r.summands) lo = std::min(lo, divides_mult(gd, densify(s).poly));
        CHECK(divides_mult(gd, densify(f).poly) == lo);
        ++checked;
    }
    CHECK(checked == 200);
}
