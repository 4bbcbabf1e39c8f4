#pragma once

// Canonical lacunary (supersparse) polynomials over Q with arbitrary-precision
// exponents.

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lacuna/errors.hpp"

namespace lacuna {

using Integer = mpz_class;
using Rational = mpq_class;

// The coefficient field. Everything downstream goes through this alias so a
// number-field type can replace it later.
using Coefficient = Rational;

// Nonnegative exponents, one per variable.
using ExponentVector = std::vector<Integer>;

inline constexpr std::size_t kDefaultProductGuard = std::size_t{1} << 22;

struct Term {
    Coefficient coef;
    ExponentVector exp;

    bool operator==(const Term& other) const { return coef == other.coef && exp == other.exp; }
};

// Lexicographic comparison, variable 1 most significant: <0, 0, >0.
int compare_lex(const ExponentVector& a, const ExponentVector& b);

// Strict weak order putting the lex-largest exponent first.
struct DescendingLex {
    bool operator()(const ExponentVector& a, const ExponentVector& b) const {
        return compare_lex(a, b) > 0;
    }
};

class LacunaryPoly {
public:
    LacunaryPoly() = default;
    explicit LacunaryPoly(std::size_t nvars) : n_(nvars) {}

    // Merges equal exponents, drops zero coefficients and sorts.
    static LacunaryPoly from_terms(std::size_t nvars, std::vector<Term> terms);
    static LacunaryPoly constant(std::size_t nvars, const Coefficient& c);
    static LacunaryPoly monomial(std::size_t nvars, const Coefficient& c, ExponentVector exp);
    // Terms already canonical (sorted, distinct, nonzero); checked in debug builds only.
    static LacunaryPoly from_sorted_terms(std::size_t nvars, std::vector<Term> terms);

    std::size_t nvars() const noexcept { return n_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_monomial() const noexcept { return terms_.size() == 1; }
    bool is_constant() const;

    const Term& leading() const { return terms_.front(); }
    std::vector<ExponentVector> support() const;

    bool operator==(const LacunaryPoly& other) const {
        return n_ == other.n_ && terms_ == other.terms_;
    }
    bool operator!=(const LacunaryPoly& other) const { return !(*this == other); }

private:
    std::size_t n_ = 0;
    std::vector<Term> terms_;
};

struct PolyStats {
    std::size_t k = 0;
    ExponentVector mdeg;
    ExponentVector mval;
    Integer total_degree;
    Integer lacunary_size;  // bits
};

LacunaryPoly add(const LacunaryPoly& f, const LacunaryPoly& g);
LacunaryPoly subtract(const LacunaryPoly& f, const LacunaryPoly& g);
LacunaryPoly negate(const LacunaryPoly& f);
LacunaryPoly scale(const LacunaryPoly& f, const Coefficient& c);
LacunaryPoly multiply(const LacunaryPoly& f, const LacunaryPoly& g,
                      std::size_t guard = kDefaultProductGuard);
LacunaryPoly power(const LacunaryPoly& f, unsigned e, std::size_t guard = kDefaultProductGuard);

// f * X^shift.
LacunaryPoly shift(const LacunaryPoly& f, const ExponentVector& by);

// (f / X^mval(f), mval(f)).
std::pair<LacunaryPoly, ExponentVector> normalize_mval(const LacunaryPoly& f);

ExponentVector mdeg(const LacunaryPoly& f);
ExponentVector mval(const LacunaryPoly& f);
PolyStats stats(const LacunaryPoly& f);

// Exchange variables i and j (0-based).
LacunaryPoly swap_variables(const LacunaryPoly& f, std::size_t i, std::size_t j);
// X_i^{deg_i f} * f(..., 1/X_i, ...).
LacunaryPoly reverse_variable(const LacunaryPoly& f, std::size_t i);
// order-th partial derivative in variable i, computed termwise.
LacunaryPoly derivative(const LacunaryPoly& f, std::size_t i, unsigned order = 1);
// Common denominator scaling so all coefficients are integers with gcd 1 and
// the leading coefficient is positive.
LacunaryPoly primitive_integral(const LacunaryPoly& f);

// Text I/O. Variables are x1..xn; x, y, z alias x1, x2, x3 when n <= 3.
LacunaryPoly parse_poly(std::string_view text, std::size_t nvars);
// Largest variable index mentioned in text (aliases count as 1..3), at least 1.
std::size_t infer_arity(std::string_view text);
std::string format_poly(const LacunaryPoly& f);
std::string variable_name(std::size_t index, std::size_t nvars);

std::string to_string(const ExponentVector& v);

}  // namespace lacuna
