#include <algorithm>
#include <map>

#include "dense/internal.hpp"

namespace lacuna {

using detail::Mono;
using detail::MPoly;

DensePoly::DensePoly(std::size_t nvars, std::vector<std::size_t> degrees)
    : n_(nvars), deg_(std::move(degrees)) {
    if (deg_.size() != n_) throw ArityMismatch("degree vector has wrong length");
    std::size_t total = 1;
    for (auto d : deg_) total *= d + 1;
    coeffs_.assign(total, Coefficient(0));
}

std::size_t DensePoly::index(const std::vector<std::size_t>& exp) const {
    if (exp.size() != n_) throw ArityMismatch("exponent has wrong length");
    std::size_t idx = 0;
    for (std::size_t i = 0; i < n_; ++i) {
        if (exp[i] > deg_[i]) throw BadIndex("exponent outside the dense box");
        idx = idx * (deg_[i] + 1) + exp[i];
    }
    return idx;
}

const Coefficient& DensePoly::at(const std::vector<std::size_t>& exp) const {
    return coeffs_[index(exp)];
}

void DensePoly::set(const std::vector<std::size_t>& exp, const Coefficient& c) {
    coeffs_[index(exp)] = c;
}

bool DensePoly::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Coefficient& c) { return c == 0; });
}

bool DensePoly::is_constant() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        if (coeffs_[i] != 0) return false;
    }
    return true;
}

std::vector<std::size_t> DensePoly::active_variables() const {
    DensePoly t = *this;
    t.trim();
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n_; ++i) {
        if (t.deg_[i] > 0) out.push_back(i);
    }
    return out;
}

void DensePoly::trim() { *this = detail::to_dense(detail::to_mpoly(*this)); }

bool DensePoly::operator==(const DensePoly& o) const {
    return detail::to_mpoly(*this) == detail::to_mpoly(o);
}

DensePoly DensePoly::from_lacunary(const LacunaryPoly& f, std::size_t guard) {
    const std::size_t n = f.nvars();
    const ExponentVector top = mdeg(f);
    std::vector<std::size_t> degs(n);
    Integer total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        total *= top[i] + 1;
        if (total > Integer(static_cast<unsigned long>(guard))) {
            throw GuardExceeded("dense box exceeds guard " + std::to_string(guard));
        }
        degs[i] = top[i].get_ui();
    }
    DensePoly d(n, degs);
    std::vector<std::size_t> e(n);
    for (const auto& t : f.terms()) {
        for (std::size_t i = 0; i < n; ++i) e[i] = t.exp[i].get_ui();
        d.set(e, t.coef);
    }
    return d;
}

LacunaryPoly DensePoly::to_lacunary() const {
    std::vector<Term> terms;
    std::vector<std::size_t> e(n_, 0);
    for (std::size_t idx = 0; idx < coeffs_.size(); ++idx) {
        if (coeffs_[idx] != 0) {
            ExponentVector ev(n_);
            for (std::size_t i = 0; i < n_; ++i) ev[i] = static_cast<unsigned long>(e[i]);
            terms.push_back(Term{coeffs_[idx], std::move(ev)});
        }
        for (std::size_t i = n_; i-- > 0;) {
            if (++e[i] <= deg_[i]) break;
            e[i] = 0;
        }
    }
    return LacunaryPoly::from_terms(n_, std::move(terms));
}

namespace detail {

MPoly to_mpoly(const DensePoly& f) {
    MPoly r(f.nvars());
    const std::size_t n = f.nvars();
    Mono e(n, 0);
    const auto& c = f.coeffs();
    for (std::size_t idx = 0; idx < c.size(); ++idx) {
        if (c[idx] != 0) r.terms.emplace(e, c[idx]);
        for (std::size_t i = n; i-- > 0;) {
            if (++e[i] <= static_cast<std::int64_t>(f.degrees()[i])) break;
            e[i] = 0;
        }
    }
    return r;
}

DensePoly to_dense(const MPoly& f) {
    std::vector<std::size_t> degs(f.n, 0);
    for (std::size_t i = 0; i < f.n; ++i) {
        degs[i] = static_cast<std::size_t>(std::max<std::int64_t>(f.degree(i), 0));
    }
    DensePoly d(f.n, degs);
    std::vector<std::size_t> e(f.n);
    for (const auto& [m, c] : f.terms) {
        for (std::size_t i = 0; i < f.n; ++i) e[i] = static_cast<std::size_t>(m[i]);
        d.set(e, c);
    }
    return d;
}

FactorList to_factor_list(const MFactorization& m) {
    FactorList out;
    out.unit = m.unit;
    for (const auto& f : m.factors) out.factors.push_back(DenseFactor{to_dense(f.poly), f.mult, f.certified});
    return out;
}

}  // namespace detail

Densified densify(const LacunaryPoly& f, std::size_t guard) {
    if (f.is_zero()) throw ZeroPolynomial("densify of the zero polynomial");
    auto [g, v] = normalize_mval(f);
    return Densified{DensePoly::from_lacunary(g, guard), std::move(v)};
}

std::optional<std::size_t> dense_size(const LacunaryPoly& f, std::size_t guard) {
    if (f.is_zero()) return 1;
    const ExponentVector hi = mdeg(f), lo = mval(f);
    Integer total = 1;
    for (std::size_t i = 0; i < hi.size(); ++i) {
        total *= hi[i] - lo[i] + 1;
        if (total > Integer(static_cast<unsigned long>(guard))) return std::nullopt;
    }
    return total.get_ui();
}

unsigned divides_mult(const DensePoly& g, const DensePoly& f) {
    if (g.is_constant()) throw PreconditionError("divides_mult needs a non-constant divisor");
    if (f.is_zero()) throw ZeroPolynomial("divides_mult of the zero polynomial");
    const MPoly G = detail::to_mpoly(g);
    MPoly F = detail::to_mpoly(f);
    unsigned m = 0;
    for (;;) {
        if (detail::modular_nondivisibility(F, G, m)) break;
        auto q = detail::exact_div(F, G);
        if (!q) break;
        F = std::move(*q);
        ++m;
    }
    return m;
}

std::optional<DensePoly> exact_quotient(const DensePoly& f, const DensePoly& g) {
    auto q = detail::exact_div(detail::to_mpoly(f), detail::to_mpoly(g));
    if (!q) return std::nullopt;
    return detail::to_dense(*q);
}

DensePoly multiply(const DensePoly& f, const DensePoly& g) {
    if (f.nvars() != g.nvars()) throw ArityMismatch("variable counts differ");
    return detail::to_dense(detail::to_mpoly(f) * detail::to_mpoly(g));
}

DensePoly gcd_multivariate(const DensePoly& f, const DensePoly& g) {
    if (f.nvars() != g.nvars()) throw ArityMismatch("variable counts differ");
    if (f.is_zero() && g.is_zero()) throw ZeroPolynomial("gcd of two zero polynomials");
    return detail::to_dense(detail::gcd(detail::to_mpoly(f), detail::to_mpoly(g)));
}

DensePoly normalize(const DensePoly& f) { return detail::to_dense(detail::normalize(detail::to_mpoly(f))); }

namespace {

void squarefree_parts(const MPoly& F, std::map<unsigned, MPoly>& parts) {
    const auto act = F.active();
    if (act.empty()) return;
    const std::size_t v = act.front();
    const MPoly c = detail::content_in(F, v);
    const MPoly P = c.is_constant() ? F : detail::normalize(*detail::exact_div(F, c));
    for (const auto& part : detail::yun(P, v)) {
        auto it = parts.try_emplace(part.mult, MPoly::constant(F.n, 1)).first;
        it->second = it->second * part.poly;
    }
    squarefree_parts(c, parts);
}

std::vector<std::size_t> require_active(const DensePoly& f, std::size_t most, const char* what) {
    const auto act = f.active_variables();
    if (act.empty()) throw PreconditionError(std::string(what) + " needs a non-constant polynomial");
    if (act.size() > most) {
        throw UnsupportedArity(std::string(what) + " accepts at most " + std::to_string(most) +
                               " active variables");
    }
    return act;
}

}  // namespace

FactorList squarefree_decompose(const DensePoly& f) {
    if (f.is_constant()) throw PreconditionError("squarefree_decompose needs a non-constant polynomial");
    const MPoly F0 = detail::to_mpoly(f);
    const MPoly F = detail::normalize(F0);
    std::map<unsigned, MPoly> parts;
    squarefree_parts(F, parts);
    FactorList out;
    out.unit = F0.leading_coeff() / F.leading_coeff();
    for (auto& [i, p] : parts) out.factors.push_back(DenseFactor{detail::to_dense(detail::normalize(p)), i, true});
    return out;
}

FactorList factor_univariate(const DensePoly& f, std::optional<unsigned> degree_cap) {
    const auto act = require_active(f, 1, "factor_univariate");
    return detail::to_factor_list(detail::factor_univariate_in(detail::to_mpoly(f), act[0], degree_cap));
}

FactorList factor_bivariate(const DensePoly& f, std::optional<std::pair<unsigned, unsigned>> caps) {
    const auto act = require_active(f, 2, "factor_bivariate");
    const MPoly F = detail::to_mpoly(f);
    if (act.size() == 1) {
        return detail::to_factor_list(detail::factor_univariate_in(F, act[0], std::nullopt));
    }
    return detail::to_factor_list(detail::factor_bivariate_in(F, act[0], act[1], caps));
}

DensePoly expand(const FactorList& fl, std::size_t nvars) {
    MPoly r = MPoly::constant(nvars, fl.unit);
    for (const auto& f : fl.factors) r = r * detail::pow(detail::to_mpoly(f.factor), f.multiplicity);
    return detail::to_dense(r);
}

}  // namespace lacuna
