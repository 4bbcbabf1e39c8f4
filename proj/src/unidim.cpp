#include "lacuna/unidim.hpp"

#include <algorithm>
#include <set>

namespace lacuna {

namespace {

std::vector<Integer> diff(const ExponentVector& a, const ExponentVector& b) {
    std::vector<Integer> d(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
    return d;
}

// mu with v = mu * d, or nullopt when v is not an integer multiple of d.
std::optional<Integer> multiple_of(const std::vector<Integer>& v, const Direction& d) {
    std::size_t i = 0;
    while (d[i] == 0) ++i;
    if (!mpz_divisible_p(v[i].get_mpz_t(), d[i].get_mpz_t())) return std::nullopt;
    Integer mu = v[i] / d[i];
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (v[j] != mu * d[j]) return std::nullopt;
    }
    return mu;
}

}  // namespace

UnidimDecomposition components(const LacunaryPoly& f, const Direction& d) {
    if (f.is_zero()) throw ZeroPolynomial("components of the zero polynomial");
    if (d.size() != f.nvars()) throw ArityMismatch("direction length differs from variable count");
    const auto groups = line_partition(f.support(), d);
    UnidimDecomposition out{d, {}};
    for (const auto& g : groups) {
        std::vector<Term> terms;
        for (auto idx : g) terms.push_back(f.terms()[idx]);
        out.components.push_back(LacunaryPoly::from_sorted_terms(f.nvars(), std::move(terms)));
    }
    return out;
}

Projection project(const LacunaryPoly& f, const Direction& d) {
    if (d.size() != f.nvars()) throw ArityMismatch("direction length differs from variable count");
    if (f.size() < 2) throw NotUnidimensional("a projection needs at least two terms");
    const auto& t = f.terms();
    const Direction own = Direction::normalize(diff(t[1].exp, t[0].exp));
    std::vector<Integer> mus;
    mus.reserve(t.size());
    for (const auto& term : t) {
        const auto v = diff(term.exp, t[0].exp);
        if (auto mu = multiple_of(v, d)) {
            mus.push_back(*mu);
            continue;
        }
        bool collinear = true;
        for (std::size_t j = 1; j < t.size() && collinear; ++j) {
            collinear = multiple_of(diff(t[j].exp, t[0].exp), own).has_value();
        }
        if (collinear) throw DirectionMismatch("support is collinear to " + to_string(own) + ", not " + to_string(d));
        throw NotUnidimensional("support is not collinear");
    }
    const Integer low = *std::min_element(mus.begin(), mus.end());
    ExponentVector anchor(f.nvars());
    for (std::size_t i = 0; i < anchor.size(); ++i) anchor[i] = t[0].exp[i] + low * d[i];
    std::vector<Term> terms;
    for (std::size_t j = 0; j < t.size(); ++j) terms.push_back(Term{t[j].coef, ExponentVector{mus[j] - low}});
    return Projection{LacunaryPoly::from_terms(1, std::move(terms)), std::move(anchor)};
}

LacunaryPoly lift(const LacunaryPoly& g, const Direction& d) {
    if (g.nvars() != 1) throw ArityMismatch("lift takes a univariate polynomial");
    if (g.size() < 2) throw NotLiftable("cannot lift a constant or a monomial");
    if (g.terms().back().exp[0] != 0) throw PreconditionError("lift needs a polynomial of valuation 0");
    const std::size_t n = d.size();
    std::vector<Term> terms;
    for (const auto& t : g.terms()) {
        ExponentVector e(n);
        for (std::size_t i = 0; i < n; ++i) e[i] = t.exp[0] * d[i];
        terms.push_back(Term{t.coef, std::move(e)});
    }
    ExponentVector low = terms.front().exp;
    for (const auto& t : terms) {
        for (std::size_t i = 0; i < n; ++i) {
            if (t.exp[i] < low[i]) low[i] = t.exp[i];
        }
    }
    for (auto& t : terms) {
        for (std::size_t i = 0; i < n; ++i) t.exp[i] -= low[i];
    }
    return LacunaryPoly::from_terms(n, std::move(terms));
}

std::optional<Integer> projection_degree_bound(const ExponentVector& bounds, const Direction& d) {
    if (bounds.size() != d.size()) throw ArityMismatch("bounds length differs from direction length");
    std::optional<Integer> best;
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (d[i] == 0) continue;
        if (sgn(bounds[i]) < 0) throw PreconditionError("negative degree bound");
        const Integer q = bounds[i] / abs(d[i]);
        if (!best || q < *best) best = q;
    }
    if (!best || *best == 0) return std::nullopt;
    return best;
}

namespace {

Integer degree_of(const LacunaryPoly& p) { return p.is_zero() ? Integer(0) : p.leading().exp[0]; }

bool fits(const LacunaryPoly& p, std::size_t guard) {
    return degree_of(p) < Integer(static_cast<unsigned long>(guard));
}

// Multiplicity of the root r in {1, -1} of p, from exact derivative values.
unsigned unit_root_multiplicity(const LacunaryPoly& p, int r) {
    unsigned m = 0;
    for (;; ++m) {
        Integer num = 0;
        Rational s = 0;
        for (const auto& t : p.terms()) {
            const Integer& e = t.exp[0];
            if (e < m) continue;
            Integer ff = 1;
            for (unsigned i = 0; i < m; ++i) ff *= e - i;
            Rational c = t.coef * Rational(ff);
            if (r < 0 && mpz_odd_p(Integer(e - m).get_mpz_t())) c = -c;
            s += c;
        }
        if (s != 0) return m;
        if (m > p.size()) return m;  // a k-nomial vanishes to order < k at a unit
    }
}

std::vector<Integer> divisors(const Integer& n) {
    const Integer a = abs(n);
    if (mpz_sizeinbase(a.get_mpz_t(), 2) > 48) {
        throw EngineLimitation("coefficient too large to enumerate rational root candidates");
    }
    std::vector<Integer> out;
    Integer i = 1;
    for (; i * i <= a; ++i) {
        if (a % i == 0) {
            out.push_back(i);
            if (i * i != a) out.push_back(a / i);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

LacunaryPoly linear(const Rational& r) {
    // a*Z - b for r = b/a
    std::vector<Term> t;
    t.push_back(Term{Rational(r.get_den()), ExponentVector{1}});
    t.push_back(Term{Rational(-r.get_num()), ExponentVector{0}});
    return primitive_integral(LacunaryPoly::from_terms(1, std::move(t)));
}

}  // namespace

std::vector<UnivariateFactorEngine::Factor> DenseUnivariateEngine::factor(const LacunaryPoly& p,
                                                                          const Integer& cap) const {
    std::vector<Factor> out;
    if (p.nvars() != 1) throw ArityMismatch("univariate engine takes univariate input");
    if (p.is_constant() || sgn(cap) <= 0) return out;
    if (fits(p, guard_)) {
        const DensePoly d = DensePoly::from_lacunary(p, guard_);
        const Integer deg = degree_of(p);
        const unsigned c = cap >= deg ? static_cast<unsigned>(deg.get_ui()) : static_cast<unsigned>(cap.get_ui());
        for (const auto& f : factor_univariate(d, c).factors) {
            const LacunaryPoly q = f.factor.to_lacunary();
            if (degree_of(q) <= cap) out.push_back(Factor{q, f.multiplicity});
        }
        return out;
    }
    if (cap != 1) {
        throw EngineLimitation("projection of degree " + degree_of(p).get_str() +
                               " exceeds the dense guard and the degree cap exceeds 1");
    }
    // Linear factors only: rational roots b/a with a | lc, b | constant term.
    const LacunaryPoly P = primitive_integral(p);
    const Integer lc = P.leading().coef.get_num();
    const Integer c0 = P.terms().back().coef.get_num();
    std::set<Rational> roots;
    for (const auto& a : divisors(lc)) {
        for (const auto& b : divisors(c0)) {
            Rational r(b, a);
            r.canonicalize();
            roots.insert(r);
            roots.insert(-r);
        }
    }
    for (const auto& r : roots) {
        const LacunaryPoly q = linear(r);
        const unsigned m = multiplicity(q, p);
        if (m > 0) out.push_back(Factor{q, m});
    }
    return out;
}

unsigned DenseUnivariateEngine::multiplicity(const LacunaryPoly& q, const LacunaryPoly& p) const {
    if (q.nvars() != 1 || p.nvars() != 1) throw ArityMismatch("univariate engine takes univariate input");
    if (fits(p, guard_) && fits(q, guard_)) {
        return divides_mult(DensePoly::from_lacunary(q, guard_), DensePoly::from_lacunary(p, guard_));
    }
    if (q.size() == 2 && degree_of(q) == 1 && abs(q.terms()[0].coef) == abs(q.terms()[1].coef)) {
        const int r = sgn(q.terms()[0].coef) == sgn(q.terms()[1].coef) ? -1 : 1;
        return unit_root_multiplicity(p, r);
    }
    if (!fits(q, guard_)) throw EngineLimitation("candidate factor exceeds the dense guard");
    return verify_multiplicity(p, DensePoly::from_lacunary(q, guard_), trials_, seed_);
}

std::vector<FactorWithMultiplicity> unidimensional_factors(const LacunaryPoly& f,
                                                           const ExponentVector& bounds,
                                                           const UnivariateFactorEngine& engine,
                                                           const UnidimOptions& options,
                                                           std::vector<Direction>* unresolved) {
    if (f.is_zero()) throw ZeroPolynomial("unidimensional factors of the zero polynomial");
    if (f.is_monomial()) throw MonomialInput("unidimensional factors of a monomial");
    if (bounds.size() != f.nvars()) throw ArityMismatch("bounds length differs from variable count");
    const DirectionSet dirs = options.screen == DeltaKind::Three ? delta3(f) : delta1(f);

    std::vector<FactorWithMultiplicity> out;
    for (const auto& d : dirs.members) {
        const auto cap = projection_degree_bound(bounds, d);
        if (!cap) continue;
        const UnidimDecomposition dec = components(f, d);
        if (std::any_of(dec.components.begin(), dec.components.end(),
                        [](const LacunaryPoly& c) { return c.size() < 2; })) {
            continue;
        }
        std::vector<LacunaryPoly> projs;
        for (const auto& c : dec.components) projs.push_back(project(c, d).poly);
        std::size_t smallest = 0;
        for (std::size_t t = 1; t < projs.size(); ++t) {
            if (degree_of(projs[t]) < degree_of(projs[smallest])) smallest = t;
        }
        try {
            for (const auto& cand : engine.factor(projs[smallest], *cap)) {
                unsigned m = cand.multiplicity;
                for (std::size_t t = 0; t < projs.size() && m > 0; ++t) {
                    if (t != smallest) m = std::min(m, engine.multiplicity(cand.poly, projs[t]));
                }
                if (m > 0) out.push_back(FactorWithMultiplicity{lift(cand.poly, d), m, FactorKind::Unidimensional});
            }
        } catch (const EngineLimitation&) {
            if (!unresolved) throw;
            unresolved->push_back(d);
        }
    }
    std::sort(out.begin(), out.end(), [](const FactorWithMultiplicity& a, const FactorWithMultiplicity& b) {
        return format_poly(a.factor) < format_poly(b.factor);
    });
    return out;
}

}  // namespace lacuna
