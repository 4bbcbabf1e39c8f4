#pragma once

// Sparse multivariate polynomials over Q with machine-size exponents. This is
// the working representation of the dense engine; DensePoly converts to and
// from it.

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

namespace lacuna::detail {

using Mono = std::vector<std::int64_t>;

struct MPoly {
    std::size_t n = 0;
    std::map<Mono, mpq_class, std::greater<Mono>> terms;  // lex-largest first

    MPoly() = default;
    explicit MPoly(std::size_t nvars) : n(nvars) {}

    static MPoly constant(std::size_t nvars, const mpq_class& c);
    static MPoly variable(std::size_t nvars, std::size_t i);

    bool is_zero() const { return terms.empty(); }
    bool is_constant() const;
    std::int64_t degree(std::size_t v) const;  // -1 for zero
    std::int64_t min_degree(std::size_t v) const;
    std::int64_t total_degree() const;
    std::vector<std::size_t> active() const;
    const mpq_class& leading_coeff() const { return terms.begin()->second; }

    void add_term(const Mono& m, const mpq_class& c);
    bool operator==(const MPoly& o) const { return n == o.n && terms == o.terms; }
};

MPoly operator+(const MPoly& a, const MPoly& b);
MPoly operator-(const MPoly& a, const MPoly& b);
MPoly operator*(const MPoly& a, const MPoly& b);
MPoly scale(const MPoly& a, const mpq_class& c);
MPoly shift_mono(const MPoly& a, const Mono& m);
MPoly pow(const MPoly& a, unsigned e);

// Exact quotient, or nullopt when b does not divide a.
std::optional<MPoly> exact_div(const MPoly& a, const MPoly& b);

// Coefficients of a as a polynomial in variable v; keys are v-degrees and the
// values have v-exponent zero.
std::map<std::int64_t, MPoly> coeffs_in(const MPoly& a, std::size_t v);
MPoly lead_coeff_in(const MPoly& a, std::size_t v);
MPoly derivative(const MPoly& a, std::size_t v);
// a with variable v replaced by the constant c.
MPoly evaluate(const MPoly& a, std::size_t v, const mpq_class& c);
// a(..., x_v + c, ...).
MPoly taylor_shift(const MPoly& a, std::size_t v, const mpq_class& c);
MPoly swap_vars(const MPoly& a, std::size_t i, std::size_t j);

// Primitive integral associate with positive leading coefficient (0 stays 0).
MPoly normalize(const MPoly& a);
// (normalized gcd of the coefficients in v, a divided by it).
MPoly content_in(const MPoly& a, std::size_t v);
MPoly gcd(const MPoly& a, const MPoly& b);

struct SquarefreePart {
    MPoly poly;
    unsigned mult;
};
// Yun's algorithm in variable v; a primitive in v with positive v-degree.
// Returns the nonconstant parts, normalized.
std::vector<SquarefreePart> yun(const MPoly& a, std::size_t v);

// Cheap modular proof that b does not divide a. True means "certainly not".
bool modular_nondivisibility(const MPoly& a, const MPoly& b, std::uint64_t seed);

}  // namespace lacuna::detail
