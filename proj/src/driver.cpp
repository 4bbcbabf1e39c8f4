#include "lacuna/driver.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace lacuna {

namespace {

bool collinear_support(const LacunaryPoly& f) {
    if (f.size() < 3) return true;
    const auto& t = f.terms();
    const std::size_t n = f.nvars();
    std::vector<Integer> d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = t[1].exp[i] - t[0].exp[i];
    for (std::size_t j = 2; j < t.size(); ++j) {
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = a + 1; b < n; ++b) {
                const Integer ea = t[j].exp[a] - t[0].exp[a];
                const Integer eb = t[j].exp[b] - t[0].exp[b];
                if (ea * d[b] != eb * d[a]) return false;
            }
        }
    }
    return true;
}

bool within_caps(const LacunaryPoly& f, const ExponentVector& caps) {
    const ExponentVector m = mdeg(f);
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] > caps[i]) return false;
    }
    return true;
}

unsigned to_cap(const Integer& c) {
    return c.fits_uint_p() ? static_cast<unsigned>(c.get_ui()) : ~0u;
}

class Verifier {
public:
    Verifier(const LacunaryPoly& g, const FactorOptions& o) : g_(g), o_(o) {
        if (dense_size(g, o.dense_guard)) dense_ = densify(g, o.dense_guard).poly;
    }

    std::pair<unsigned, CertificateMode> multiplicity(const LacunaryPoly& h) const {
        const DensePoly hd = DensePoly::from_lacunary(h, o_.dense_guard);
        if (dense_) return {divides_mult(hd, *dense_), CertificateMode::Exact};
        return {verify_multiplicity(g_, hd, o_.trials, o_.seed), CertificateMode::Probabilistic};
    }

private:
    const LacunaryPoly& g_;
    const FactorOptions& o_;
    std::optional<DensePoly> dense_;
};

// gcd of the summands that fit the guard. Summands past the guard are
// skipped: the gcd of a subset is still a multiple of the full one and every
// candidate is verified against f afterwards.
std::optional<DensePoly> summand_gcd(const std::vector<LacunaryPoly>& summands, std::size_t guard,
                                     const std::string& pass) {
    std::vector<std::pair<std::size_t, LacunaryPoly>> fitting;
    for (const auto& s : summands) {
        auto [h, shift] = normalize_mval(s);
        if (h.is_constant()) return std::nullopt;
        if (auto size = dense_size(h, guard)) fitting.emplace_back(*size, std::move(h));
    }
    if (fitting.empty()) {
        throw GuardExceeded("multidimensional stage, pass " + pass + ": no summand fits the dense guard of " +
                            std::to_string(guard) + " coefficients");
    }
    std::stable_sort(fitting.begin(), fitting.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    DensePoly g = normalize(densify(fitting.front().second, guard).poly);
    for (std::size_t i = 1; i < fitting.size() && !g.is_constant(); ++i) {
        g = gcd_multivariate(g, densify(fitting[i].second, guard).poly);
    }
    if (g.is_constant()) return std::nullopt;
    return g;
}

struct Candidate {
    LacunaryPoly poly;
    unsigned mult = 0;
    bool certified = true;
};

void collect(const DensePoly& g, const ExponentVector& caps, std::map<std::string, Candidate>& found,
             std::vector<DensePoly>& residual) {
    const auto active = g.active_variables();
    if (active.size() < 2) return;
    if (active.size() > 2) {
        residual.push_back(g);
        return;
    }
    const auto fl = factor_bivariate(g, std::make_pair(to_cap(caps[active[0]]), to_cap(caps[active[1]])));
    for (const auto& df : fl.factors) {
        LacunaryPoly p = df.factor.to_lacunary();
        if (collinear_support(p) || !within_caps(p, caps)) continue;
        auto& c = found[format_poly(p)];
        if (c.mult == 0) c.poly = std::move(p);
        c.mult = std::max(c.mult, df.multiplicity);
        c.certified = c.certified && df.certified;
    }
}

void sort_factors(std::vector<FactorWithMultiplicity>& v) {
    std::sort(v.begin(), v.end(), [](const FactorWithMultiplicity& a, const FactorWithMultiplicity& b) {
        return format_poly(a.factor) < format_poly(b.factor);
    });
}

}  // namespace

FactorReport bounded_degree_factors(const LacunaryPoly& f, const ExponentVector& caps, const FactorOptions& options) {
    if (f.is_zero()) throw ZeroPolynomial("factors of the zero polynomial");
    if (caps.size() != f.nvars()) throw ArityMismatch("bounds length differs from variable count");
    for (const auto& c : caps) {
        if (sgn(c) < 0) throw PreconditionError("negative degree bound");
    }
    const std::size_t n = f.nvars();
    FactorReport report;
    report.nvars = n;
    report.seed = options.seed;
    report.trials = options.trials;
    report.guard = options.dense_guard;

    auto [g, shift] = normalize_mval(f);
    report.monomial = shift;
    if (g.is_constant()) return report;

    const Verifier verifier(g, options);
    auto certify = [&](const LacunaryPoly& h, unsigned claimed, FactorKind kind,
                       std::vector<FactorWithMultiplicity>& into) {
        const auto [m, mode] = verifier.multiplicity(h);
        if (m == 0) {
            report.warnings.push_back("candidate " + format_poly(h) + " failed verification and was dropped");
            return;
        }
        if (m != claimed) {
            report.warnings.push_back("candidate " + format_poly(h) + ": reduction gave multiplicity " +
                                      std::to_string(claimed) + ", verification gave " + std::to_string(m));
        }
        into.push_back(FactorWithMultiplicity{h, m, kind});
        report.certificates.push_back(Certificate{h, m, mode, mode == CertificateMode::Exact ? 0u : options.trials,
                                                  options.seed});
    };

    if (options.unidimensional) {
        const DenseUnivariateEngine engine(options.dense_guard, options.trials, options.seed);
        const auto uni = unidimensional_factors(g, caps, engine, UnidimOptions{options.screen}, &report.unresolved);
        for (const auto& u : uni) certify(u.factor, u.multiplicity, FactorKind::Unidimensional, report.unidimensional);
        sort_factors(report.unidimensional);
        for (const auto& d : report.unresolved) {
            report.warnings.push_back("direction " + to_string(d) + " left unresolved by the univariate engine");
        }
    }

    const auto positive = std::count_if(caps.begin(), caps.end(), [](const Integer& c) { return sgn(c) > 0; });
    if (options.multidimensional && n >= 2 && positive >= 2) {
        ExponentVector clamped = caps;
        for (auto& c : clamped) c = std::max(c, Integer(1));

        std::vector<PartitionResult> passes;
        if (n == 2) passes = reduce_bivariate(g, GapParams{clamped[0], clamped[1]}, options.trace);
        else passes.push_back(multivariate_partition(g, clamped, options.trace));

        std::map<std::string, Candidate> found;
        for (const auto& pass : passes) {
            const auto gcd = summand_gcd(pass.summands, options.dense_guard, pass.pass);
            if (options.trace) {
                options.trace->push_back(pass.pass + ": " + std::to_string(pass.summands.size()) + " summands, gcd " +
                                         (gcd ? format_poly(gcd->to_lacunary()) : std::string("1")));
            }
            if (gcd) collect(*gcd, caps, found, report.residual);
        }
        for (const auto& [key, c] : found) {
            if (!c.certified) {
                report.warnings.push_back("factor " + key + " is not certified irreducible (recombination budget)");
            }
            certify(c.poly, c.mult, FactorKind::Multidimensional, report.multidimensional);
        }
        sort_factors(report.multidimensional);
        std::sort(report.residual.begin(), report.residual.end(), [](const DensePoly& a, const DensePoly& b) {
            return format_poly(a.to_lacunary()) < format_poly(b.to_lacunary());
        });
        report.residual.erase(std::unique(report.residual.begin(), report.residual.end()), report.residual.end());
    }
    return report;
}

std::vector<ClaimVerdict> verify_factors(const LacunaryPoly& f, const std::vector<Claim>& claims, unsigned trials,
                                         std::uint64_t seed, std::size_t guard) {
    if (f.is_zero()) throw ZeroPolynomial("verification against the zero polynomial");
    FactorOptions o;
    o.trials = trials;
    o.seed = seed;
    o.dense_guard = guard;
    // X^a h with h free of monomial content: the two parts are coprime, so
    // the multiplicity is the smaller of the two.
    const auto [g, fval] = normalize_mval(f);
    const Verifier verifier(g, o);
    std::vector<ClaimVerdict> out;
    for (const auto& c : claims) {
        if (c.factor.nvars() != f.nvars()) throw ArityMismatch("claimed factor has a different variable count");
        if (c.factor.is_zero() || c.factor.is_constant()) throw PreconditionError("claimed factor must be non-constant");
        const auto [h, hval] = normalize_mval(c.factor);
        unsigned m = ~0u;
        CertificateMode mode = CertificateMode::Exact;
        for (std::size_t i = 0; i < hval.size(); ++i) {
            if (sgn(hval[i]) == 0) continue;
            const Integer q = fval[i] / hval[i];
            m = std::min<unsigned>(m, q.fits_uint_p() ? static_cast<unsigned>(q.get_ui()) : ~0u);
        }
        if (!h.is_constant() && m > 0) {
            const auto [mh, modeh] = verifier.multiplicity(h);
            m = std::min(m, mh);
            mode = modeh;
        }
        out.push_back(ClaimVerdict{c.factor, c.multiplicity, m, mode});
    }
    return out;
}

}  // namespace lacuna
