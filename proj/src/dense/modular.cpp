#include "dense/modular.hpp"

#include <algorithm>
#include <stdexcept>

namespace lacuna::detail {

u64 pow_mod(u64 a, u64 e, u64 p) {
    u64 r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mul_mod(r, a, p);
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    return r;
}

u64 pow_mod(u64 a, const mpz_class& e, u64 p) {
    u64 r = 1 % p;
    a %= p;
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        r = mul_mod(r, r, p);
        if (mpz_tstbit(e.get_mpz_t(), i)) r = mul_mod(r, a, p);
    }
    return r;
}

u64 inv_mod(u64 a, u64 p) {
    if (a % p == 0) throw std::domain_error("inverse of zero modulo p");
    return pow_mod(a, p - 2, p);
}

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

u64 random_prime(std::mt19937_64& rng) {
    std::uniform_int_distribution<u64> dist(1ULL << 61, (1ULL << 62) - 1);
    for (;;) {
        const u64 c = dist(rng) | 1;
        if (is_prime_u64(c)) return c;
    }
}

u64 reduce(const mpz_class& a, u64 p) {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), mpz_class(std::to_string(p)).get_mpz_t());
    return std::stoull(r.get_str());
}

u64 reduce(const mpq_class& a, u64 p) {
    const u64 num = reduce(a.get_num(), p);
    const u64 den = reduce(a.get_den(), p);
    return mul_mod(num, inv_mod(den, p), p);
}

void trim(ModPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

ModPoly add(const ModPoly& a, const ModPoly& b, u64 p) {
    ModPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = add_mod(r[i], b[i], p);
    trim(r);
    return r;
}

ModPoly sub(const ModPoly& a, const ModPoly& b, u64 p) {
    ModPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = sub_mod(r[i], b[i], p);
    trim(r);
    return r;
}

ModPoly mul(const ModPoly& a, const ModPoly& b, u64 p) {
    if (a.empty() || b.empty()) return {};
    ModPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            r[i + j] = add_mod(r[i + j], mul_mod(a[i], b[j], p), p);
        }
    }
    trim(r);
    return r;
}

ModPoly scale(const ModPoly& a, u64 c, u64 p) {
    ModPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = mul_mod(a[i], c, p);
    trim(r);
    return r;
}

void divrem(const ModPoly& a, const ModPoly& b, u64 p, ModPoly& q, ModPoly& r) {
    if (b.empty()) throw std::domain_error("polynomial division by zero");
    r = a;
    trim(r);
    if (r.size() < b.size()) {
        q.clear();
        return;
    }
    q.assign(r.size() - b.size() + 1, 0);
    const u64 inv = inv_mod(b.back(), p);
    for (std::size_t i = r.size(); i-- >= b.size();) {
        const u64 c = mul_mod(r[i], inv, p);
        const std::size_t shift = i + 1 - b.size();
        q[shift] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            r[shift + j] = sub_mod(r[shift + j], mul_mod(c, b[j], p), p);
        }
    }
    trim(q);
    trim(r);
}

ModPoly rem(const ModPoly& a, const ModPoly& b, u64 p) {
    ModPoly q, r;
    divrem(a, b, p, q, r);
    return r;
}

ModPoly monic(const ModPoly& a, u64 p) {
    if (a.empty()) return a;
    return scale(a, inv_mod(a.back(), p), p);
}

ModPoly gcd(ModPoly a, ModPoly b, u64 p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        ModPoly r = rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a, p);
}

ModPoly ext_gcd(const ModPoly& a, const ModPoly& b, u64 p, ModPoly& s, ModPoly& t) {
    ModPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
    trim(r0);
    trim(r1);
    while (!r1.empty()) {
        ModPoly q, r;
        divrem(r0, r1, p, q, r);
        ModPoly s2 = sub(s0, mul(q, s1, p), p);
        ModPoly t2 = sub(t0, mul(q, t1, p), p);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.empty()) {
        s = s0;
        t = t0;
        return r0;
    }
    const u64 inv = inv_mod(r0.back(), p);
    s = scale(s0, inv, p);
    t = scale(t0, inv, p);
    return scale(r0, inv, p);
}

ModPoly derivative(const ModPoly& a, u64 p) {
    if (a.size() <= 1) return {};
    ModPoly r(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = mul_mod(a[i], i % p, p);
    trim(r);
    return r;
}

ModPoly mul_mod_poly(const ModPoly& a, const ModPoly& b, const ModPoly& m, u64 p) {
    return rem(mul(a, b, p), m, p);
}

ModPoly pow_mod_poly(const ModPoly& base, const mpz_class& e, const ModPoly& m, u64 p) {
    ModPoly r = rem(ModPoly{1}, m, p);
    const ModPoly b = rem(base, m, p);
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    if (e == 0) return r;
    for (std::size_t i = bits; i-- > 0;) {
        r = mul_mod_poly(r, r, m, p);
        if (mpz_tstbit(e.get_mpz_t(), i)) r = mul_mod_poly(r, b, m, p);
    }
    return r;
}

ModPoly x_power_mod(const mpz_class& e, const ModPoly& m, u64 p) {
    return pow_mod_poly(ModPoly{0, 1}, e, m, p);
}

namespace {

// Splits a product of distinct monic irreducibles of degree d.
void equal_degree(const ModPoly& f, int d, u64 p, std::mt19937_64& rng, std::vector<ModPoly>& out) {
    const int n = degree(f);
    if (n <= d) {
        out.push_back(f);
        return;
    }
    std::uniform_int_distribution<u64> coef(0, p - 1);
    // (p^d - 1) / 2
    mpz_class e;
    mpz_ui_pow_ui(e.get_mpz_t(), 0, 0);
    e = mpz_class(std::to_string(p));
    mpz_pow_ui(e.get_mpz_t(), e.get_mpz_t(), static_cast<unsigned long>(d));
    e = (e - 1) / 2;
    for (;;) {
        ModPoly a(static_cast<std::size_t>(n));
        for (auto& c : a) c = coef(rng);
        trim(a);
        if (degree(a) < 1) continue;
        ModPoly b = pow_mod_poly(a, e, f, p);
        b = sub(b, ModPoly{1}, p);
        ModPoly g = gcd(f, b, p);
        if (degree(g) > 0 && degree(g) < n) {
            ModPoly q, r;
            divrem(f, g, p, q, r);
            equal_degree(g, d, p, rng, out);
            equal_degree(monic(q, p), d, p, rng, out);
            return;
        }
    }
}

}  // namespace

std::vector<ModPoly> factor_squarefree_monic(const ModPoly& f, u64 p, std::mt19937_64& rng) {
    std::vector<ModPoly> out;
    if (degree(f) < 1) return out;
    ModPoly rest = f;
    ModPoly h{0, 1};
    const ModPoly x{0, 1};
    const mpz_class pz(std::to_string(p));
    for (int d = 1; 2 * d <= degree(rest); ++d) {
        h = pow_mod_poly(h, pz, rest, p);
        ModPoly g = gcd(rest, sub(h, x, p), p);
        if (degree(g) > 0) {
            equal_degree(g, d, p, rng, out);
            ModPoly q, r;
            divrem(rest, g, p, q, r);
            rest = monic(q, p);
            h = rem(h, rest, p);
        }
    }
    if (degree(rest) > 0) out.push_back(rest);
    std::sort(out.begin(), out.end(), [](const ModPoly& a, const ModPoly& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
    });
    return out;
}

}  // namespace lacuna::detail
