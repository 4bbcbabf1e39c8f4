#pragma once

// Seeded generators and a brute-force divisibility oracle shared by the tests.
// The oracle works on LacunaryPoly directly (lex long division) and shares no
// code with the dense engine.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "lacuna/core.hpp"
#include "lacuna/geometry.hpp"

namespace testing_support {

using namespace lacuna;

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed * 0x9E3779B97F4A7C15ull + 12345) {}

    long range(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
    bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }
    long nonzero(long bound) {
        long c = 0;
        while (c == 0) c = range(-bound, bound);
        return c;
    }

    // Up to k random terms with exponents in [0, maxexp] and coefficients in [-cb, cb] \ {0}.
    LacunaryPoly poly(std::size_t n, std::size_t k, long maxexp, long cb = 9) {
        std::vector<Term> t;
        for (std::size_t j = 0; j < k; ++j) {
            ExponentVector e(n);
            for (auto& x : e) x = range(0, maxexp);
            t.push_back(Term{Rational(nonzero(cb)), e});
        }
        return LacunaryPoly::from_terms(n, std::move(t));
    }

    // Random polynomial with a prescribed degree box; every exponent tuple
    // is kept with probability density.
    LacunaryPoly boxed(const std::vector<long>& degs, double density, long cb = 9) {
        const std::size_t n = degs.size();
        std::vector<Term> t;
        std::vector<long> e(n, 0);
        for (;;) {
            if (coin(density)) {
                ExponentVector ev(n);
                for (std::size_t i = 0; i < n; ++i) ev[i] = e[i];
                t.push_back(Term{Rational(nonzero(cb)), ev});
            }
            std::size_t i = 0;
            while (i < n && e[i] == degs[i]) e[i++] = 0;
            if (i == n) break;
            ++e[i];
        }
        return LacunaryPoly::from_terms(n, std::move(t));
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

inline LacunaryPoly P(const char* s, std::size_t n) { return parse_poly(s, n); }

inline LacunaryPoly mul(const LacunaryPoly& a, const LacunaryPoly& b) { return multiply(a, b); }

inline LacunaryPoly pw(const LacunaryPoly& a, unsigned e) { return power(a, e); }

inline LacunaryPoly sum_all(const std::vector<LacunaryPoly>& v, std::size_t n) {
    LacunaryPoly s(n);
    for (const auto& x : v) s = add(s, x);
    return s;
}

// Exact quotient f / g by lex long division; nullopt when g does not divide f.
// A leading term of the running remainder that the leading term of g does
// not divide proves non-divisibility, since {g} is a Groebner basis.
inline std::optional<LacunaryPoly> oracle_divide(const LacunaryPoly& f, const LacunaryPoly& g,
                                                 std::size_t max_steps = 2000000) {
    if (g.is_zero()) return std::nullopt;
    const std::size_t n = f.nvars();
    LacunaryPoly r = f;
    std::vector<Term> q;
    const Term& lg = g.leading();
    for (std::size_t step = 0; !r.is_zero(); ++step) {
        if (step > max_steps) return std::nullopt;
        const Term& lr = r.leading();
        ExponentVector e(n);
        for (std::size_t i = 0; i < n; ++i) {
            e[i] = lr.exp[i] - lg.exp[i];
            if (sgn(e[i]) < 0) return std::nullopt;
        }
        const Rational c = lr.coef / lg.coef;
        q.push_back(Term{c, e});
        r = subtract(r, shift(scale(g, c), e));
    }
    return LacunaryPoly::from_terms(n, std::move(q));
}

inline unsigned oracle_mult(const LacunaryPoly& g, LacunaryPoly f, unsigned cap = 64) {
    unsigned m = 0;
    while (m < cap) {
        auto q = oracle_divide(f, g);
        if (!q) break;
        f = std::move(*q);
        ++m;
    }
    return m;
}

inline bool collinear(const LacunaryPoly& f) {
    if (f.size() < 3) return true;
    std::vector<Integer> d(f.nvars());
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = f.terms()[1].exp[i] - f.terms()[0].exp[i];
    for (std::size_t j = 2; j < f.size(); ++j) {
        for (std::size_t a = 0; a < d.size(); ++a) {
            for (std::size_t b = a + 1; b < d.size(); ++b) {
                const Integer ea = f.terms()[j].exp[a] - f.terms()[0].exp[a];
                const Integer eb = f.terms()[j].exp[b] - f.terms()[0].exp[b];
                if (ea * d[b] != eb * d[a]) return false;
            }
        }
    }
    return true;
}

inline Integer span(const LacunaryPoly& f, std::size_t i) { return mdeg(f)[i] - mval(f)[i]; }

}  // namespace testing_support
