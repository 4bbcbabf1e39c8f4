// Bivariate factorization over Q: contents, squarefree split, specialization
// of one variable at a lucky integer, univariate factorization of the image,
// Hensel lifting in powers of the specialized variable and recombination by
// trial division.

#include <algorithm>

#include "dense/internal.hpp"

namespace lacuna::detail {

namespace {

using QPoly = std::vector<mpq_class>;  // low to high
using Series = std::vector<QPoly>;     // coefficient of t^j at index j

void qtrim(QPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

QPoly qadd(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    qtrim(r);
    return r;
}

QPoly qsub(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    qtrim(r);
    return r;
}

QPoly qmul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    qtrim(r);
    return r;
}

void qdivrem(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
    r = a;
    qtrim(r);
    q.clear();
    if (r.size() < b.size()) return;
    q.assign(r.size() - b.size() + 1, 0);
    for (std::size_t i = r.size(); i-- >= b.size();) {
        if (r[i] == 0) continue;
        const std::size_t s = i + 1 - b.size();
        q[s] = r[i] / b.back();
        for (std::size_t j = 0; j < b.size(); ++j) r[s + j] -= q[s] * b[j];
    }
    qtrim(q);
    qtrim(r);
}

// s*a + t*b = 1 for coprime a, b.
void qext_gcd(const QPoly& a, const QPoly& b, QPoly& s, QPoly& t) {
    QPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
        QPoly q, r;
        qdivrem(r0, r1, q, r);
        QPoly s2 = qsub(s0, qmul(q, s1)), t2 = qsub(t0, qmul(q, t1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    const mpq_class inv = 1 / r0[0];
    s = s0;
    t = t0;
    for (auto& c : s) c *= inv;
    for (auto& c : t) c *= inv;
}

QPoly qmonic(QPoly a) {
    const mpq_class lc = a.back();
    for (auto& c : a) c /= lc;
    return a;
}

// Series coefficients of f in (t = variable tv, y = variable yv).
Series to_series(const MPoly& f, std::size_t tv, std::size_t yv, std::size_t N) {
    Series s(N);
    for (const auto& [m, c] : f.terms) {
        const auto j = static_cast<std::size_t>(m[tv]);
        if (j >= N) continue;
        auto& row = s[j];
        const auto k = static_cast<std::size_t>(m[yv]);
        if (row.size() <= k) row.resize(k + 1, 0);
        row[k] += c;
    }
    for (auto& row : s) qtrim(row);
    return s;
}

MPoly from_series(const Series& s, std::size_t n, std::size_t tv, std::size_t yv) {
    MPoly r(n);
    Mono m(n, 0);
    for (std::size_t j = 0; j < s.size(); ++j) {
        for (std::size_t k = 0; k < s[j].size(); ++k) {
            m[tv] = static_cast<std::int64_t>(j);
            m[yv] = static_cast<std::int64_t>(k);
            r.add_term(m, s[j][k]);
        }
    }
    return r;
}

Series series_mul(const Series& a, const Series& b, std::size_t N) {
    Series r(N);
    for (std::size_t i = 0; i < a.size() && i < N; ++i) {
        if (a[i].empty()) continue;
        for (std::size_t j = 0; j < b.size() && i + j < N; ++j) {
            if (b[j].empty()) continue;
            r[i + j] = qadd(r[i + j], qmul(a[i], b[j]));
        }
    }
    return r;
}

// Coefficient j of a*b.
QPoly product_coeff(const Series& a, const Series& b, std::size_t j) {
    QPoly r;
    for (std::size_t i = 0; i <= j; ++i) {
        if (i < a.size() && j - i < b.size()) r = qadd(r, qmul(a[i], b[j - i]));
    }
    return r;
}

void lift_pair(const Series& T, const QPoly& u0, const QPoly& w0, std::size_t N, Series& u,
               Series& w) {
    QPoly s, t;
    qext_gcd(u0, w0, s, t);
    u.assign(N, {});
    w.assign(N, {});
    u[0] = u0;
    w[0] = w0;
    for (std::size_t j = 1; j < N; ++j) {
        const QPoly e = qsub(T[j], product_coeff(u, w, j));
        if (e.empty()) continue;
        QPoly q, a;
        qdivrem(qmul(e, t), u0, q, a);
        u[j] = a;
        w[j] = qadd(qmul(e, s), qmul(q, w0));
    }
}

std::vector<Series> lift_all(const Series& T, const std::vector<QPoly>& us, std::size_t first,
                             std::size_t N) {
    if (first + 1 == us.size()) return {T};
    QPoly w0{1};
    for (std::size_t i = first + 1; i < us.size(); ++i) w0 = qmul(w0, us[i]);
    Series u, w;
    lift_pair(T, us[first], w0, N, u, w);
    std::vector<Series> out{u};
    auto rest = lift_all(w, us, first + 1, N);
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
}

// Inverse of the power series c (c[0] != 0) modulo t^N.
std::vector<mpq_class> series_inverse(const std::vector<mpq_class>& c, std::size_t N) {
    std::vector<mpq_class> inv(N, 0);
    inv[0] = 1 / c[0];
    for (std::size_t j = 1; j < N; ++j) {
        mpq_class s = 0;
        for (std::size_t i = 1; i <= j && i < c.size(); ++i) s += c[i] * inv[j - i];
        inv[j] = -s * inv[0];
    }
    return inv;
}

struct Image {
    std::size_t tv, yv;  // specialized and main variable
    mpq_class point;
    std::vector<MFactor> factors;
};

std::optional<Image> find_image(const MPoly& P, std::size_t tv, std::size_t yv) {
    const MPoly lc = lead_coeff_in(P, yv);
    std::optional<Image> best;
    int lucky = 0;
    for (int i = 0; i < 40 && lucky < 3; ++i) {
        const long a = (i % 2 == 1) ? (i + 1) / 2 : -(i / 2);  // 0, 1, -1, 2, -2, ...
        const mpq_class pt(a);
        if (evaluate(lc, tv, pt).is_zero()) continue;
        const MPoly img = evaluate(P, tv, pt);
        if (img.degree(yv) != P.degree(yv)) continue;
        if (gcd(img, derivative(img, yv)).degree(yv) > 0) continue;
        ++lucky;
        auto facs = factor_squarefree_univariate(normalize(img), yv, std::nullopt);
        if (!best || facs.size() < best->factors.size()) best = Image{tv, yv, pt, std::move(facs)};
        if (best->factors.size() == 1) break;
    }
    return best;
}

constexpr std::size_t kSubsetBudget = 20000;

std::vector<MFactor> factor_squarefree_bivariate(const MPoly& P, std::size_t vx, std::size_t vy,
                                                 std::optional<std::pair<unsigned, unsigned>> caps) {
    if (P.degree(vx) <= 0) return factor_squarefree_univariate(P, vy, std::nullopt);
    if (P.degree(vy) <= 0) return factor_squarefree_univariate(P, vx, std::nullopt);

    std::optional<Image> img = find_image(P, vx, vy);
    if (!img || img->factors.size() > 1) {
        auto other = find_image(P, vy, vx);
        if (other && (!img || other->factors.size() < img->factors.size())) img = std::move(other);
    }
    if (!img) throw UnluckySpecialization("no lucky specialization point found");
    if (img->factors.size() == 1) return {MFactor{normalize(P), 1, true}};

    const std::size_t tv = img->tv, yv = img->yv;
    std::optional<unsigned> cap;
    if (caps) cap = yv == vy ? caps->second : caps->first;

    MPoly G = taylor_shift(P, tv, img->point);
    const MPoly L = lead_coeff_in(G, yv);
    const std::size_t N = static_cast<std::size_t>(G.degree(tv) + L.degree(tv)) + 1;

    // T = G / lc_y(G), monic in y.
    std::vector<mpq_class> lser(N, 0);
    for (const auto& [m, c] : L.terms) {
        if (static_cast<std::size_t>(m[tv]) < N) lser[m[tv]] = c;
    }
    const auto linv = series_inverse(lser, N);
    Series lin(N);
    for (std::size_t j = 0; j < N; ++j) {
        if (linv[j] != 0) lin[j] = QPoly{linv[j]};
    }
    const Series T = series_mul(to_series(G, tv, yv, N), lin, N);

    std::vector<QPoly> us;
    for (const auto& f : img->factors) {
        QPoly q(static_cast<std::size_t>(f.poly.degree(yv)) + 1, 0);
        for (const auto& [m, c] : f.poly.terms) q[m[yv]] = c;
        us.push_back(qmonic(q));
    }
    const std::vector<Series> lifted = lift_all(T, us, 0, N);

    std::vector<MFactor> found;
    std::vector<std::size_t> rem(lifted.size());
    for (std::size_t i = 0; i < rem.size(); ++i) rem[i] = i;
    bool pruned = false;
    std::size_t tested = 0;
    const mpq_class back = -img->point;

    for (std::size_t s = 1; s < rem.size(); ++s) {
        if (!cap && 2 * s > rem.size()) break;
        bool hit = false;
        std::vector<std::size_t> idx(s);
        for (std::size_t i = 0; i < s; ++i) idx[i] = i;
        for (;;) {
            std::size_t dsum = 0;
            for (auto i : idx) dsum += us[rem[i]].size() - 1;
            if (cap && dsum > *cap) {
                if (2 * s <= rem.size()) pruned = true;
            } else if (++tested > kSubsetBudget) {
                pruned = true;
                break;
            } else {
                const MPoly Lc = lead_coeff_in(G, yv);
                Series H = to_series(Lc, tv, yv, N);
                for (auto i : idx) H = series_mul(H, lifted[rem[i]], N);
                MPoly h = from_series(H, G.n, tv, yv);
                const MPoly c = content_in(h, yv);
                if (!c.is_constant()) h = *exact_div(h, c);
                h = normalize(h);
                if (!modular_nondivisibility(G, h, 7)) {
                    if (auto q = exact_div(G, h)) {
                        found.push_back(MFactor{normalize(taylor_shift(h, tv, back)), 1, true});
                        G = *q;
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
            std::size_t i = s;
            while (i > 0 && idx[i - 1] == rem.size() - s + i - 1) --i;
            if (i == 0) break;
            ++idx[i - 1];
            for (std::size_t j = i; j < s; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (tested > kSubsetBudget) break;
        if (hit) --s;
    }
    if (!G.is_constant()) {
        const auto d = static_cast<unsigned>(G.degree(yv));
        const bool certified = !pruned || (cap && d <= 2 * *cap + 1) || rem.size() <= 1;
        found.push_back(MFactor{normalize(taylor_shift(G, tv, back)), 1, certified});
    }
    return found;
}

void append_univariate(MFactorization& out, const MPoly& c, std::size_t v) {
    if (c.is_constant()) return;
    auto sub = factor_univariate_in(c, v, std::nullopt);
    for (auto& f : sub.factors) out.factors.push_back(std::move(f));
}

}  // namespace

MFactorization factor_bivariate_in(const MPoly& f, std::size_t vx, std::size_t vy,
                                   std::optional<std::pair<unsigned, unsigned>> caps) {
    MFactorization out;
    MPoly F = normalize(f);
    out.unit = f.leading_coeff() / F.leading_coeff();
    if (F.is_constant()) return out;

    Mono low(F.n, 0);
    for (std::size_t v : {vx, vy}) {
        low[v] = F.min_degree(v);
        if (low[v] > 0) {
            out.factors.push_back(MFactor{MPoly::variable(F.n, v), static_cast<unsigned>(low[v]), true});
            low[v] = -low[v];
        }
    }
    F = shift_mono(F, low);

    const MPoly cx = content_in(F, vy);  // in vx only
    if (!cx.is_constant()) F = *exact_div(F, cx);
    append_univariate(out, cx, vx);
    const MPoly cy = content_in(F, vx);  // in vy only
    if (!cy.is_constant()) F = *exact_div(F, cy);
    append_univariate(out, cy, vy);
    F = normalize(F);

    if (!F.is_constant()) {
        for (const auto& part : yun(F, vy)) {
            for (auto& fac : factor_squarefree_bivariate(part.poly, vx, vy, caps)) {
                fac.mult = part.mult;
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
