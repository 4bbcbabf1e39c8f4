// Monte Carlo divisibility of a lacunary f by a dense g. All variables but
// one are specialized at random points modulo a random prime P; f is then
// reduced modulo the specialized g (or a power of it) in F_P[y] by repeated
// squaring, so the huge exponents never materialize.

#include <random>

#include "dense/internal.hpp"
#include "dense/modular.hpp"

namespace lacuna {

namespace {

using namespace detail;

struct Setup {
    MPoly g;              // primitive integral
    LacunaryPoly f;       // integral
    std::size_t v = 0;    // variable kept symbolic
};

Setup prepare(const LacunaryPoly& f, const DensePoly& g) {
    if (g.nvars() != f.nvars()) throw ArityMismatch("variable counts differ");
    if (g.is_constant()) throw PreconditionError("verification needs a non-constant factor");
    if (f.is_zero()) throw ZeroPolynomial("verification of the zero polynomial");
    Setup s;
    s.g = normalize(to_mpoly(g));
    std::int64_t best = 0;
    for (std::size_t i = 0; i < s.g.n; ++i) {
        if (s.g.degree(i) > best) {
            best = s.g.degree(i);
            s.v = i;
        }
    }
    Integer den = 1;
    for (const auto& t : f.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coef.get_den_mpz_t());
    s.f = scale(f, Rational(den));
    return s;
}

struct Trial {
    u64 p = 0;
    std::vector<u64> point;
    ModPoly g;  // specialized, degree preserved
};

Trial draw(const Setup& s, std::mt19937_64& rng) {
    for (;;) {
        Trial t;
        t.p = random_prime(rng);
        std::uniform_int_distribution<u64> dist(1, t.p - 1);
        for (int attempt = 0; attempt < 8; ++attempt) {
            t.point.assign(s.g.n, 0);
            for (auto& x : t.point) x = dist(rng);
            t.g.assign(static_cast<std::size_t>(s.g.degree(s.v)) + 1, 0);
            for (const auto& [m, c] : s.g.terms) {
                u64 x = reduce(c.get_num(), t.p);
                for (std::size_t i = 0; i < s.g.n; ++i) {
                    if (i != s.v && m[i] != 0) x = mul_mod(x, pow_mod(t.point[i], static_cast<u64>(m[i]), t.p), t.p);
                }
                t.g[m[s.v]] = add_mod(t.g[m[s.v]], x, t.p);
            }
            trim(t.g);
            if (degree(t.g) == s.g.degree(s.v)) return t;
        }
    }
}

// f at the trial point, reduced modulo the polynomial mod.
ModPoly reduce_f(const Setup& s, const Trial& t, const ModPoly& mod) {
    ModPoly acc;
    const u64 order = t.p - 1;
    for (const auto& term : s.f.terms()) {
        u64 x = reduce(term.coef.get_num(), t.p);
        for (std::size_t i = 0; i < s.g.n; ++i) {
            if (i == s.v) continue;
            const u64 e = mpz_fdiv_ui(term.exp[i].get_mpz_t(), order);
            x = mul_mod(x, pow_mod(t.point[i], e, t.p), t.p);
        }
        if (x == 0) continue;
        acc = add(acc, scale(x_power_mod(term.exp[s.v], mod, t.p), x, t.p), t.p);
    }
    return rem(acc, mod, t.p);
}

}  // namespace

bool verify_divisibility(const LacunaryPoly& f, const DensePoly& g, unsigned trials, std::uint64_t seed) {
    const Setup s = prepare(f, g);
    std::mt19937_64 rng(seed);
    for (unsigned i = 0; i < trials; ++i) {
        const Trial t = draw(s, rng);
        if (!reduce_f(s, t, t.g).empty()) return false;
    }
    return true;
}

unsigned verify_multiplicity(const LacunaryPoly& f, const DensePoly& g, unsigned trials,
                             std::uint64_t seed, unsigned max_mult) {
    const Setup s = prepare(f, g);
    std::mt19937_64 rng(seed);
    unsigned best = max_mult;
    for (unsigned i = 0; i < trials && best > 0; ++i) {
        const Trial t = draw(s, rng);
        ModPoly power{1};
        unsigned m = 0;
        while (m < best) {
            power = mul(power, t.g, t.p);
            if (!reduce_f(s, t, power).empty()) break;
            ++m;
        }
        best = m;
    }
    return best;
}

}  // namespace lacuna
