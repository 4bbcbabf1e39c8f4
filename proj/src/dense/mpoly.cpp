#include "dense/mpoly.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "dense/modular.hpp"

namespace lacuna::detail {

MPoly MPoly::constant(std::size_t nvars, const mpq_class& c) {
    MPoly p(nvars);
    if (c != 0) p.terms.emplace(Mono(nvars, 0), c);
    return p;
}

MPoly MPoly::variable(std::size_t nvars, std::size_t i) {
    MPoly p(nvars);
    Mono m(nvars, 0);
    m[i] = 1;
    p.terms.emplace(std::move(m), 1);
    return p;
}

bool MPoly::is_constant() const {
    if (terms.empty()) return true;
    if (terms.size() > 1) return false;
    const Mono& m = terms.begin()->first;
    return std::all_of(m.begin(), m.end(), [](std::int64_t e) { return e == 0; });
}

std::int64_t MPoly::degree(std::size_t v) const {
    std::int64_t d = -1;
    for (const auto& [m, c] : terms) d = std::max(d, m[v]);
    return d;
}

std::int64_t MPoly::min_degree(std::size_t v) const {
    if (terms.empty()) return -1;
    std::int64_t d = terms.begin()->first[v];
    for (const auto& [m, c] : terms) d = std::min(d, m[v]);
    return d;
}

std::int64_t MPoly::total_degree() const {
    std::int64_t d = -1;
    for (const auto& [m, c] : terms) {
        std::int64_t s = 0;
        for (auto e : m) s += e;
        d = std::max(d, s);
    }
    return d;
}

std::vector<std::size_t> MPoly::active() const {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < n; ++v) {
        if (degree(v) > 0) out.push_back(v);
    }
    return out;
}

void MPoly::add_term(const Mono& m, const mpq_class& c) {
    if (c == 0) return;
    auto it = terms.find(m);
    if (it == terms.end()) {
        terms.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms.erase(it);
}

MPoly operator+(const MPoly& a, const MPoly& b) {
    MPoly r = a;
    for (const auto& [m, c] : b.terms) r.add_term(m, c);
    return r;
}

MPoly operator-(const MPoly& a, const MPoly& b) {
    MPoly r = a;
    for (const auto& [m, c] : b.terms) r.add_term(m, -c);
    return r;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly r(a.n);
    Mono m(a.n);
    for (const auto& [ma, ca] : a.terms) {
        for (const auto& [mb, cb] : b.terms) {
            for (std::size_t i = 0; i < a.n; ++i) m[i] = ma[i] + mb[i];
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

MPoly scale(const MPoly& a, const mpq_class& c) {
    if (c == 0) return MPoly(a.n);
    MPoly r = a;
    for (auto& [m, x] : r.terms) x *= c;
    return r;
}

MPoly shift_mono(const MPoly& a, const Mono& s) {
    MPoly r(a.n);
    for (const auto& [m, c] : a.terms) {
        Mono e = m;
        for (std::size_t i = 0; i < a.n; ++i) e[i] += s[i];
        r.terms.emplace_hint(r.terms.end(), std::move(e), c);
    }
    return r;
}

MPoly pow(const MPoly& a, unsigned e) {
    MPoly r = MPoly::constant(a.n, 1);
    for (unsigned i = 0; i < e; ++i) r = r * a;
    return r;
}

std::optional<MPoly> exact_div(const MPoly& a, const MPoly& b) {
    if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
    const std::size_t n = a.n;
    MPoly q(n);
    if (a.is_zero()) return q;
    // A quotient must fit this box.
    Mono hi(n), lo(n);
    for (std::size_t i = 0; i < n; ++i) {
        hi[i] = a.degree(i) - b.degree(i);
        lo[i] = a.min_degree(i) - b.min_degree(i);
        if (hi[i] < lo[i]) return std::nullopt;
    }
    MPoly r = a;
    const Mono lb = b.terms.begin()->first;
    const mpq_class lc = b.terms.begin()->second;
    Mono qm(n), e(n);
    while (!r.is_zero()) {
        const auto& [m, c] = *r.terms.begin();
        for (std::size_t i = 0; i < n; ++i) {
            qm[i] = m[i] - lb[i];
            if (qm[i] < lo[i] || qm[i] > hi[i]) return std::nullopt;
        }
        const mpq_class qc = c / lc;
        q.terms.emplace(qm, qc);
        for (const auto& [mb, cb] : b.terms) {
            for (std::size_t i = 0; i < n; ++i) e[i] = mb[i] + qm[i];
            r.add_term(e, -qc * cb);
        }
    }
    return q;
}

std::map<std::int64_t, MPoly> coeffs_in(const MPoly& a, std::size_t v) {
    std::map<std::int64_t, MPoly> out;
    for (const auto& [m, c] : a.terms) {
        Mono e = m;
        e[v] = 0;
        auto it = out.try_emplace(m[v], MPoly(a.n)).first;
        it->second.terms.emplace(std::move(e), c);
    }
    return out;
}

MPoly lead_coeff_in(const MPoly& a, std::size_t v) {
    const std::int64_t d = a.degree(v);
    MPoly r(a.n);
    for (const auto& [m, c] : a.terms) {
        if (m[v] != d) continue;
        Mono e = m;
        e[v] = 0;
        r.terms.emplace(std::move(e), c);
    }
    return r;
}

MPoly derivative(const MPoly& a, std::size_t v) {
    MPoly r(a.n);
    for (const auto& [m, c] : a.terms) {
        if (m[v] == 0) continue;
        Mono e = m;
        e[v] -= 1;
        r.add_term(e, c * m[v]);
    }
    return r;
}

MPoly evaluate(const MPoly& a, std::size_t v, const mpq_class& x) {
    MPoly r(a.n);
    for (const auto& [m, c] : a.terms) {
        Mono e = m;
        e[v] = 0;
        mpq_class p = 1;
        for (std::int64_t i = 0; i < m[v]; ++i) p *= x;
        r.add_term(e, c * p);
    }
    return r;
}

MPoly taylor_shift(const MPoly& a, std::size_t v, const mpq_class& x) {
    if (x == 0) return a;
    MPoly r(a.n);
    for (const auto& [m, c] : a.terms) {
        const std::int64_t d = m[v];
        // (y + x)^d = sum_k binom(d, k) x^(d-k) y^k
        std::vector<mpq_class> xp(static_cast<std::size_t>(d) + 1);
        xp[0] = 1;
        for (std::int64_t i = 1; i <= d; ++i) xp[i] = xp[i - 1] * x;
        mpz_class binom = 1;
        Mono e = m;
        for (std::int64_t k = 0; k <= d; ++k) {
            e[v] = k;
            r.add_term(e, c * mpq_class(binom) * xp[d - k]);
            binom = binom * (d - k) / (k + 1);
        }
    }
    return r;
}

MPoly swap_vars(const MPoly& a, std::size_t i, std::size_t j) {
    MPoly r(a.n);
    for (const auto& [m, c] : a.terms) {
        Mono e = m;
        std::swap(e[i], e[j]);
        r.terms.emplace(std::move(e), c);
    }
    return r;
}

MPoly normalize(const MPoly& a) {
    if (a.is_zero()) return a;
    mpz_class den = 1, num = 0;
    for (const auto& [m, c] : a.terms) {
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
    }
    mpq_class f(den, num);
    f.canonicalize();
    if (a.leading_coeff() < 0) f = -f;
    if (f == 1) return a;
    return scale(a, f);
}

namespace {

MPoly prem(MPoly r, const MPoly& b, std::size_t v) {
    const std::int64_t db = b.degree(v);
    const MPoly lb = lead_coeff_in(b, v);
    while (!r.is_zero()) {
        const std::int64_t dr = r.degree(v);
        if (dr < db) break;
        const MPoly lr = lead_coeff_in(r, v);
        Mono s(r.n, 0);
        s[v] = dr - db;
        r = lb * r - lr * shift_mono(b, s);
        r = normalize(r);
    }
    return r;
}

MPoly primitive_in(const MPoly& a, std::size_t v) {
    const MPoly c = content_in(a, v);
    if (c.is_constant()) return normalize(a);
    return normalize(*exact_div(a, c));
}

}  // namespace

MPoly content_in(const MPoly& a, std::size_t v) {
    MPoly g(a.n);
    for (const auto& [d, c] : coeffs_in(a, v)) {
        g = gcd(g, c);
        if (g.is_constant()) return MPoly::constant(a.n, 1);
    }
    return g;
}

MPoly gcd(const MPoly& a, const MPoly& b) {
    if (a.is_zero()) return normalize(b);
    if (b.is_zero()) return normalize(a);
    std::size_t v = a.n;
    for (std::size_t i = 0; i < a.n; ++i) {
        if (a.degree(i) > 0 || b.degree(i) > 0) {
            v = i;
            break;
        }
    }
    if (v == a.n) return MPoly::constant(a.n, 1);
    if (a.degree(v) == 0) return gcd(a, content_in(b, v));
    if (b.degree(v) == 0) return gcd(content_in(a, v), b);

    const MPoly ca = content_in(a, v);
    const MPoly cb = content_in(b, v);
    const MPoly c = gcd(ca, cb);
    MPoly A = ca.is_constant() ? normalize(a) : normalize(*exact_div(a, ca));
    MPoly B = cb.is_constant() ? normalize(b) : normalize(*exact_div(b, cb));
    if (A.degree(v) < B.degree(v)) std::swap(A, B);
    for (;;) {
        MPoly R = prem(A, B, v);
        if (R.is_zero()) break;
        if (R.degree(v) == 0) {
            B = MPoly::constant(a.n, 1);
            break;
        }
        A = std::move(B);
        B = primitive_in(R, v);
    }
    return normalize(c * B);
}

std::vector<SquarefreePart> yun(const MPoly& a, std::size_t v) {
    std::vector<SquarefreePart> out;
    const MPoly da = derivative(a, v);
    const MPoly b = gcd(a, da);
    MPoly c = *exact_div(a, b);
    MPoly d = *exact_div(da, b) - derivative(c, v);
    for (unsigned i = 1; c.degree(v) > 0; ++i) {
        const MPoly y = gcd(c, d);
        if (!y.is_constant()) out.push_back(SquarefreePart{normalize(y), i});
        c = *exact_div(c, y);
        d = *exact_div(d, y) - derivative(c, v);
    }
    return out;
}

namespace {

mpz_class common_denominator(const MPoly& a) {
    mpz_class den = 1;
    for (const auto& [m, c] : a.terms) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    return den;
}

// Specialization of a (integral) at r in all variables but v, modulo p.
ModPoly specialize(const MPoly& a, std::size_t v, const std::vector<u64>& r, u64 p) {
    ModPoly out(static_cast<std::size_t>(std::max<std::int64_t>(a.degree(v), 0)) + 1, 0);
    for (const auto& [m, c] : a.terms) {
        u64 x = reduce(c.get_num(), p);
        for (std::size_t i = 0; i < a.n; ++i) {
            if (i != v && m[i] != 0) x = mul_mod(x, pow_mod(r[i], static_cast<u64>(m[i]), p), p);
        }
        out[static_cast<std::size_t>(m[v])] = add_mod(out[static_cast<std::size_t>(m[v])], x, p);
    }
    trim(out);
    return out;
}

}  // namespace

bool modular_nondivisibility(const MPoly& a, const MPoly& b, std::uint64_t seed) {
    std::size_t v = b.n;
    std::int64_t best = 0;
    for (std::size_t i = 0; i < b.n; ++i) {
        if (b.degree(i) > best) {
            best = b.degree(i);
            v = i;
        }
    }
    if (v == b.n) return false;
    const MPoly B = normalize(b);
    const MPoly A = scale(a, mpq_class(common_denominator(a)));
    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < 2; ++trial) {
        const u64 p = random_prime(rng);
        std::uniform_int_distribution<u64> dist(1, p - 1);
        std::vector<u64> r(b.n, 0);
        for (auto& x : r) x = dist(rng);
        const ModPoly bs = specialize(B, v, r, p);
        if (degree(bs) != B.degree(v)) continue;
        if (!rem(specialize(A, v, r, p), bs, p).empty()) return true;
    }
    return false;
}

}  // namespace lacuna::detail
