// Univariate factorization over Q: squarefree split, factorization modulo a
// small prime, multifactor Hensel lifting and subset recombination.

#include <algorithm>
#include <random>

#include "dense/internal.hpp"
#include "dense/modular.hpp"

namespace lacuna::detail {

namespace {

using ZPoly = std::vector<mpz_class>;  // low to high

void ztrim(ZPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    ztrim(r);
    return r;
}

void zmod(ZPoly& a, const mpz_class& m) {
    for (auto& c : a) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    ztrim(a);
}

void zsymmetric(ZPoly& a, const mpz_class& m) {
    const mpz_class half = m / 2;
    for (auto& c : a) {
        mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
        if (c > half) c -= m;
    }
    ztrim(a);
}

std::optional<ZPoly> zdiv_exact(const ZPoly& a, const ZPoly& b) {
    if (a.size() < b.size()) {
        if (a.empty()) return ZPoly{};
        return std::nullopt;
    }
    ZPoly r = a;
    ZPoly q(a.size() - b.size() + 1, 0);
    const mpz_class& lb = b.back();
    for (std::size_t i = r.size(); i-- >= b.size();) {
        if (r[i] == 0) continue;
        if (!mpz_divisible_p(r[i].get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
        const std::size_t s = i + 1 - b.size();
        mpz_divexact(q[s].get_mpz_t(), r[i].get_mpz_t(), lb.get_mpz_t());
        for (std::size_t j = 0; j < b.size(); ++j) r[s + j] -= q[s] * b[j];
    }
    for (const auto& c : r) {
        if (c != 0) return std::nullopt;
    }
    ztrim(q);
    return q;
}

ZPoly zprimitive(ZPoly a) {
    mpz_class g = 0;
    for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 0) return a;
    if (a.back() < 0) g = -g;
    for (auto& c : a) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return a;
}

ModPoly to_mod(const ZPoly& a, u64 p) {
    ModPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = reduce(a[i], p);
    trim(r);
    return r;
}

ZPoly from_mod(const ModPoly& a) {
    ZPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = mpz_class(std::to_string(a[i]));
    return r;
}

ZPoly to_zpoly(const MPoly& f, std::size_t v) {
    ZPoly r(static_cast<std::size_t>(f.degree(v)) + 1, 0);
    for (const auto& [m, c] : f.terms) r[static_cast<std::size_t>(m[v])] = c.get_num();
    return r;
}

MPoly from_zpoly(const ZPoly& a, std::size_t n, std::size_t v) {
    MPoly r(n);
    Mono m(n, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        m[v] = static_cast<std::int64_t>(i);
        r.add_term(m, mpq_class(a[i]));
    }
    return r;
}

// F = u * w mod p^k from F = u0 * w0 mod p; u0 monic, w0 with leading
// coefficient lc(F).
void lift_pair(const ZPoly& F, const ModPoly& u0, const ModPoly& w0, u64 p, unsigned k, ZPoly& u,
               ZPoly& w) {
    ModPoly s, t;
    ext_gcd(u0, w0, p, s, t);
    u = from_mod(u0);
    w = from_mod(w0);
    w.back() = F.back();
    const mpz_class pz(std::to_string(p));
    mpz_class pj = pz;
    for (unsigned j = 1; j < k; ++j) {
        ZPoly e = F;
        const ZPoly uw = zmul(u, w);
        e.resize(std::max(e.size(), uw.size()), 0);
        for (std::size_t i = 0; i < uw.size(); ++i) e[i] -= uw[i];
        for (auto& c : e) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), pj.get_mpz_t());
        ztrim(e);
        const ModPoly em = to_mod(e, p);
        ModPoly q, a;
        divrem(mul(em, t, p), u0, p, q, a);
        const ModPoly b = add(mul(em, s, p), mul(q, w0, p), p);
        const ZPoly az = from_mod(a), bz = from_mod(b);
        const mpz_class next = pj * pz;
        for (std::size_t i = 0; i < az.size(); ++i) u[i] += pj * az[i];
        for (std::size_t i = 0; i < bz.size(); ++i) w[i] += pj * bz[i];
        for (auto& c : u) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), next.get_mpz_t());
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
            mpz_fdiv_r(w[i].get_mpz_t(), w[i].get_mpz_t(), next.get_mpz_t());
        }
        pj = next;
    }
}

// Monic lifts of gs with F = lc(F) * prod mod p^k.
std::vector<ZPoly> lift_all(const ZPoly& F, const std::vector<ModPoly>& gs, std::size_t first,
                            u64 p, unsigned k, const mpz_class& pk) {
    if (first + 1 == gs.size()) {
        mpz_class inv;
        mpz_invert(inv.get_mpz_t(), F.back().get_mpz_t(), pk.get_mpz_t());
        ZPoly r = F;
        for (auto& c : r) c *= inv;
        zmod(r, pk);
        return {r};
    }
    ModPoly w0{reduce(F.back(), p)};
    for (std::size_t i = first + 1; i < gs.size(); ++i) w0 = mul(w0, gs[i], p);
    ZPoly u, w;
    lift_pair(F, gs[first], w0, p, k, u, w);
    std::vector<ZPoly> out{u};
    auto rest = lift_all(w, gs, first + 1, p, k, pk);
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
}

mpz_class coefficient_bound(const ZPoly& F) {
    mpz_class sq = 0;
    for (const auto& c : F) sq += c * c;
    mpz_class norm;
    mpz_sqrt(norm.get_mpz_t(), sq.get_mpz_t());
    norm += 1;
    mpz_class b = 2 * abs(F.back()) * norm;
    mpz_mul_2exp(b.get_mpz_t(), b.get_mpz_t(), F.size() - 1);
    return b;
}

constexpr std::size_t kSubsetBudget = 200000;

std::vector<MFactor> zassenhaus(const ZPoly& F0, std::size_t n, std::size_t v,
                                std::optional<unsigned> cap) {
    const std::size_t deg = F0.size() - 1;
    if (deg == 1) return {MFactor{from_zpoly(F0, n, v), 1, true}};

    u64 p = 17;
    ModPoly fm;
    for (;; p += 2) {
        if (!is_prime_u64(p) || reduce(F0.back(), p) == 0) continue;
        fm = to_mod(F0, p);
        if (degree(gcd(fm, derivative(fm, p), p)) == 0) break;
    }
    std::mt19937_64 rng(p);
    const std::vector<ModPoly> gs = factor_squarefree_monic(monic(fm, p), p, rng);
    if (gs.size() == 1) return {MFactor{from_zpoly(F0, n, v), 1, true}};

    const mpz_class bound = coefficient_bound(F0);
    const mpz_class pz(std::to_string(p));
    mpz_class pk = pz;
    unsigned k = 1;
    while (pk <= bound) {
        pk *= pz;
        ++k;
    }
    const std::vector<ZPoly> lifted = lift_all(F0, gs, 0, p, k, pk);

    std::vector<MFactor> found;
    std::vector<std::size_t> rem(lifted.size());
    for (std::size_t i = 0; i < rem.size(); ++i) rem[i] = i;
    ZPoly F = F0;
    bool pruned = false;
    std::size_t tested = 0;

    for (std::size_t s = 1; s < rem.size(); ++s) {
        if (!cap && 2 * s > rem.size()) break;
        if (cap) {
            std::vector<std::size_t> degs;
            for (auto i : rem) degs.push_back(lifted[i].size() - 1);
            std::sort(degs.begin(), degs.end());
            std::size_t low = 0;
            for (std::size_t i = 0; i < s; ++i) low += degs[i];
            if (low > *cap) {
                if (2 * s <= rem.size()) pruned = true;
                break;
            }
        }
        bool hit = false;
        std::vector<std::size_t> idx(s);
        for (std::size_t i = 0; i < s; ++i) idx[i] = i;
        for (;;) {
            std::size_t dsum = 0;
            for (auto i : idx) dsum += lifted[rem[i]].size() - 1;
            if (cap && dsum > *cap) {
                if (2 * s <= rem.size()) pruned = true;
            } else if (++tested > kSubsetBudget) {
                pruned = true;
                break;
            } else {
                ZPoly H{F.back()};
                for (auto i : idx) {
                    H = zmul(H, lifted[rem[i]]);
                    zmod(H, pk);
                }
                zsymmetric(H, pk);
                const mpz_class lead_const = F.back() * F.front();
                if (H.front() != 0 &&
                    mpz_divisible_p(lead_const.get_mpz_t(), H.front().get_mpz_t())) {
                    H = zprimitive(H);
                    if (auto q = zdiv_exact(F, H)) {
                        found.push_back(MFactor{from_zpoly(H, n, v), 1, true});
                        F = *q;
                        std::vector<std::size_t> next;
                        for (std::size_t i = 0; i < rem.size(); ++i) {
                            if (std::find(idx.begin(), idx.end(), i) == idx.end()) {
                                next.push_back(rem[i]);
                            }
                        }
                        rem = std::move(next);
                        hit = true;
                        break;
                    }
                }
            }
            // next combination
            std::size_t i = s;
            while (i > 0 && idx[i - 1] == rem.size() - s + i - 1) --i;
            if (i == 0) break;
            ++idx[i - 1];
            for (std::size_t j = i; j < s; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (tested > kSubsetBudget) break;
        if (hit) --s;  // retry the same size on the smaller remainder
    }
    if (F.size() > 1) {
        const std::size_t d = F.size() - 1;
        const bool certified = !pruned || (cap && d <= 2 * *cap + 1) || rem.size() <= 1;
        found.push_back(MFactor{from_zpoly(F, n, v), 1, certified});
    }
    return found;
}

}  // namespace

std::vector<MFactor> factor_squarefree_univariate(const MPoly& F, std::size_t v,
                                                  std::optional<unsigned> cap) {
    ZPoly z = to_zpoly(normalize(F), v);
    std::vector<MFactor> out;
    if (z.front() == 0) {
        // squarefree, so at most one factor of the variable
        z.erase(z.begin());
        out.push_back(MFactor{MPoly::variable(F.n, v), 1, true});
        if (z.size() == 1) return out;
    }
    auto rest = zassenhaus(z, F.n, v, cap);
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
}

MFactorization factor_univariate_in(const MPoly& f, std::size_t v, std::optional<unsigned> cap) {
    MFactorization out;
    if (f.is_zero()) {
        out.unit = 0;
        return out;
    }
    MPoly F = normalize(f);
    out.unit = f.leading_coeff() / F.leading_coeff();
    if (f.is_constant()) {
        out.unit = f.leading_coeff();
        return out;
    }
    const std::int64_t low = F.min_degree(v);
    if (low > 0) {
        out.factors.push_back(MFactor{MPoly::variable(f.n, v), static_cast<unsigned>(low), true});
        Mono s(f.n, 0);
        s[v] = -low;
        F = shift_mono(F, s);
    }
    if (F.degree(v) > 0) {
        for (const auto& part : yun(F, v)) {
            for (auto& fac : factor_squarefree_univariate(part.poly, v, cap)) {
                fac.mult = part.mult;
                fac.poly = normalize(fac.poly);
                out.factors.push_back(std::move(fac));
            }
        }
    }
    std::sort(out.factors.begin(), out.factors.end(), [](const MFactor& a, const MFactor& b) {
        if (a.poly.total_degree() != b.poly.total_degree()) {
            return a.poly.total_degree() < b.poly.total_degree();
        }
        return a.poly.terms < b.poly.terms;
    });
    return out;
}

}  // namespace lacuna::detail
