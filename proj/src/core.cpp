#include "lacuna/core.hpp"

#include <algorithm>
#include <cassert>

namespace lacuna {

int compare_lex(const ExponentVector& a, const ExponentVector& b) {
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        const int c = cmp(a[i], b[i]);
        if (c != 0) return c < 0 ? -1 : 1;
    }
    if (a.size() == b.size()) return 0;
    return a.size() < b.size() ? -1 : 1;
}

namespace {

void check_arity(const LacunaryPoly& f, const LacunaryPoly& g) {
    if (f.nvars() != g.nvars()) {
        throw ArityMismatch("variable counts differ: " + std::to_string(f.nvars()) + " vs " +
                            std::to_string(g.nvars()));
    }
}

// Sort descending and merge equal exponents in place.
void canonicalize(std::vector<Term>& terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return compare_lex(a.exp, b.exp) > 0; });
    std::size_t out = 0;
    for (std::size_t i = 0; i < terms.size();) {
        std::size_t j = i + 1;
        Coefficient c = terms[i].coef;
        while (j < terms.size() && terms[j].exp == terms[i].exp) {
            c += terms[j].coef;
            ++j;
        }
        if (c != 0) {
            if (out != i) terms[out].exp = std::move(terms[i].exp);
            terms[out].coef = c;
            ++out;
        }
        i = j;
    }
    terms.resize(out);
}

}  // namespace

LacunaryPoly LacunaryPoly::from_terms(std::size_t nvars, std::vector<Term> terms) {
    for (auto& t : terms) {
        if (t.exp.size() != nvars) throw ArityMismatch("exponent vector has wrong length");
        for (const auto& e : t.exp) {
            if (sgn(e) < 0) throw PreconditionError("negative exponent in term");
        }
        t.coef.canonicalize();
    }
    canonicalize(terms);
    LacunaryPoly p(nvars);
    p.terms_ = std::move(terms);
    return p;
}

LacunaryPoly LacunaryPoly::from_sorted_terms(std::size_t nvars, std::vector<Term> terms) {
#ifndef NDEBUG
    for (std::size_t i = 0; i < terms.size(); ++i) {
        assert(terms[i].coef != 0);
        assert(terms[i].exp.size() == nvars);
        if (i > 0) assert(compare_lex(terms[i - 1].exp, terms[i].exp) > 0);
    }
#endif
    LacunaryPoly p(nvars);
    p.terms_ = std::move(terms);
    return p;
}

LacunaryPoly LacunaryPoly::constant(std::size_t nvars, const Coefficient& c) {
    return monomial(nvars, c, ExponentVector(nvars, 0));
}

LacunaryPoly LacunaryPoly::monomial(std::size_t nvars, const Coefficient& c, ExponentVector exp) {
    std::vector<Term> terms;
    terms.push_back(Term{c, std::move(exp)});
    return from_terms(nvars, std::move(terms));
}

bool LacunaryPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    for (const auto& e : terms_.front().exp) {
        if (e != 0) return false;
    }
    return true;
}

std::vector<ExponentVector> LacunaryPoly::support() const {
    std::vector<ExponentVector> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.push_back(t.exp);
    return out;
}

LacunaryPoly add(const LacunaryPoly& f, const LacunaryPoly& g) {
    check_arity(f, g);
    const auto& a = f.terms();
    const auto& b = g.terms();
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        int c;
        if (i == a.size()) c = -1;
        else if (j == b.size()) c = 1;
        else c = compare_lex(a[i].exp, b[j].exp);
        if (c > 0) {
            out.push_back(a[i++]);
        } else if (c < 0) {
            out.push_back(b[j++]);
        } else {
            Coefficient s = a[i].coef + b[j].coef;
            if (s != 0) out.push_back(Term{s, a[i].exp});
            ++i;
            ++j;
        }
    }
    return LacunaryPoly::from_sorted_terms(f.nvars(), std::move(out));
}

LacunaryPoly negate(const LacunaryPoly& f) {
    std::vector<Term> out = f.terms();
    for (auto& t : out) t.coef = -t.coef;
    return LacunaryPoly::from_sorted_terms(f.nvars(), std::move(out));
}

LacunaryPoly subtract(const LacunaryPoly& f, const LacunaryPoly& g) { return add(f, negate(g)); }

LacunaryPoly scale(const LacunaryPoly& f, const Coefficient& c) {
    if (c == 0) return LacunaryPoly(f.nvars());
    std::vector<Term> out = f.terms();
    for (auto& t : out) {
        t.coef *= c;
        t.coef.canonicalize();
    }
    return LacunaryPoly::from_sorted_terms(f.nvars(), std::move(out));
}

LacunaryPoly multiply(const LacunaryPoly& f, const LacunaryPoly& g, std::size_t guard) {
    check_arity(f, g);
    if (f.is_zero() || g.is_zero()) return LacunaryPoly(f.nvars());
    const std::size_t n = f.nvars();
    if (f.size() > guard / g.size()) {
        throw GuardExceeded("product of " + std::to_string(f.size()) + " by " +
                            std::to_string(g.size()) + " terms exceeds guard " +
                            std::to_string(guard));
    }
    std::vector<Term> out;
    out.reserve(f.size() * g.size());
    for (const auto& a : f.terms()) {
        for (const auto& b : g.terms()) {
            ExponentVector e(n);
            for (std::size_t i = 0; i < n; ++i) e[i] = a.exp[i] + b.exp[i];
            out.push_back(Term{a.coef * b.coef, std::move(e)});
        }
    }
    canonicalize(out);
    return LacunaryPoly::from_sorted_terms(n, std::move(out));
}

LacunaryPoly power(const LacunaryPoly& f, unsigned e, std::size_t guard) {
    LacunaryPoly result = LacunaryPoly::constant(f.nvars(), 1);
    for (unsigned i = 0; i < e; ++i) result = multiply(result, f, guard);
    return result;
}

LacunaryPoly shift(const LacunaryPoly& f, const ExponentVector& by) {
    if (by.size() != f.nvars()) throw ArityMismatch("shift vector has wrong length");
    std::vector<Term> out = f.terms();
    for (auto& t : out) {
        for (std::size_t i = 0; i < by.size(); ++i) {
            t.exp[i] += by[i];
            if (sgn(t.exp[i]) < 0) throw PreconditionError("shift makes an exponent negative");
        }
    }
    return LacunaryPoly::from_sorted_terms(f.nvars(), std::move(out));
}

ExponentVector mdeg(const LacunaryPoly& f) {
    ExponentVector d(f.nvars(), 0);
    for (const auto& t : f.terms()) {
        for (std::size_t i = 0; i < d.size(); ++i) {
            if (t.exp[i] > d[i]) d[i] = t.exp[i];
        }
    }
    return d;
}

ExponentVector mval(const LacunaryPoly& f) {
    if (f.is_zero()) return ExponentVector(f.nvars(), 0);
    ExponentVector v = f.terms().front().exp;
    for (const auto& t : f.terms()) {
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (t.exp[i] < v[i]) v[i] = t.exp[i];
        }
    }
    return v;
}

std::pair<LacunaryPoly, ExponentVector> normalize_mval(const LacunaryPoly& f) {
    if (f.is_zero()) throw ZeroPolynomial("normalize_mval of the zero polynomial");
    ExponentVector v = mval(f);
    ExponentVector neg(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) neg[i] = -v[i];
    return {shift(f, neg), std::move(v)};
}

PolyStats stats(const LacunaryPoly& f) {
    PolyStats s;
    s.k = f.size();
    s.mdeg = mdeg(f);
    s.mval = mval(f);
    s.total_degree = 0;
    s.lacunary_size = 0;
    std::size_t max_bits = 0;
    for (const auto& t : f.terms()) {
        Integer deg = 0;
        for (const auto& e : t.exp) {
            deg += e;
            max_bits = std::max(max_bits, mpz_sizeinbase(e.get_mpz_t(), 2));
        }
        if (deg > s.total_degree) s.total_degree = deg;
    }
    for (const auto& t : f.terms()) {
        s.lacunary_size += Integer(static_cast<unsigned long>(f.nvars() * max_bits));
        s.lacunary_size +=
            static_cast<unsigned long>(mpz_sizeinbase(t.coef.get_num_mpz_t(), 2));
        s.lacunary_size +=
            static_cast<unsigned long>(mpz_sizeinbase(t.coef.get_den_mpz_t(), 2));
    }
    return s;
}

LacunaryPoly swap_variables(const LacunaryPoly& f, std::size_t i, std::size_t j) {
    if (i >= f.nvars() || j >= f.nvars()) throw BadIndex("variable index out of range");
    std::vector<Term> out = f.terms();
    for (auto& t : out) std::swap(t.exp[i], t.exp[j]);
    return LacunaryPoly::from_terms(f.nvars(), std::move(out));
}

LacunaryPoly reverse_variable(const LacunaryPoly& f, std::size_t i) {
    if (i >= f.nvars()) throw BadIndex("variable index out of range");
    const Integer top = mdeg(f)[i];
    std::vector<Term> out = f.terms();
    for (auto& t : out) t.exp[i] = top - t.exp[i];
    return LacunaryPoly::from_terms(f.nvars(), std::move(out));
}

LacunaryPoly derivative(const LacunaryPoly& f, std::size_t i, unsigned order) {
    if (i >= f.nvars()) throw BadIndex("variable index out of range");
    std::vector<Term> out;
    for (const auto& t : f.terms()) {
        if (t.exp[i] < order) continue;
        Term d = t;
        for (unsigned r = 0; r < order; ++r) d.coef *= Rational(Integer(t.exp[i] - r));
        d.exp[i] -= order;
        out.push_back(std::move(d));
    }
    // Distinct exponents stay distinct and ordered after a uniform shift.
    return LacunaryPoly::from_sorted_terms(f.nvars(), std::move(out));
}

LacunaryPoly primitive_integral(const LacunaryPoly& f) {
    if (f.is_zero()) return f;
    Integer den = 1, num = 0;
    for (const auto& t : f.terms()) {
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coef.get_den_mpz_t());
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), t.coef.get_num_mpz_t());
    }
    Rational factor(den, num);
    factor.canonicalize();
    if (f.leading().coef < 0) factor = -factor;
    return scale(f, factor);
}

std::string to_string(const ExponentVector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].get_str();
    }
    return s + ")";
}

}  // namespace lacuna
