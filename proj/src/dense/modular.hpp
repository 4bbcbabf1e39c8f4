#pragma once

// Word-size modular arithmetic and dense univariate polynomials over F_p.
// Internal to the dense engine.

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <vector>

namespace lacuna::detail {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mul_mod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }
inline u64 add_mod(u64 a, u64 b, u64 p) {
    const u64 s = a + b;
    return (s >= p || s < a) ? s - p : s;
}
inline u64 sub_mod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + (p - b); }
u64 pow_mod(u64 a, u64 e, u64 p);
u64 pow_mod(u64 a, const mpz_class& e, u64 p);
u64 inv_mod(u64 a, u64 p);  // p prime, a != 0

bool is_prime_u64(u64 n);
// Uniform prime in [2^61, 2^62).
u64 random_prime(std::mt19937_64& rng);

// a mod p for an arbitrary integer, in [0, p).
u64 reduce(const mpz_class& a, u64 p);
// a mod p for a rational whose denominator is invertible mod p.
u64 reduce(const mpq_class& a, u64 p);

// Dense polynomial over F_p, coefficients low to high, no trailing zeros.
using ModPoly = std::vector<u64>;

void trim(ModPoly& a);
inline int degree(const ModPoly& a) { return static_cast<int>(a.size()) - 1; }
ModPoly add(const ModPoly& a, const ModPoly& b, u64 p);
ModPoly sub(const ModPoly& a, const ModPoly& b, u64 p);
ModPoly mul(const ModPoly& a, const ModPoly& b, u64 p);
ModPoly scale(const ModPoly& a, u64 c, u64 p);
// Quotient and remainder; b nonzero.
void divrem(const ModPoly& a, const ModPoly& b, u64 p, ModPoly& q, ModPoly& r);
ModPoly rem(const ModPoly& a, const ModPoly& b, u64 p);
ModPoly monic(const ModPoly& a, u64 p);
ModPoly gcd(ModPoly a, ModPoly b, u64 p);
// s*a + t*b = g (monic gcd).
ModPoly ext_gcd(const ModPoly& a, const ModPoly& b, u64 p, ModPoly& s, ModPoly& t);
ModPoly derivative(const ModPoly& a, u64 p);
ModPoly mul_mod_poly(const ModPoly& a, const ModPoly& b, const ModPoly& m, u64 p);
// base^e mod m, for arbitrary-precision e.
ModPoly pow_mod_poly(const ModPoly& base, const mpz_class& e, const ModPoly& m, u64 p);
ModPoly x_power_mod(const mpz_class& e, const ModPoly& m, u64 p);

// Monic irreducible factors of a squarefree monic polynomial (p odd).
std::vector<ModPoly> factor_squarefree_monic(const ModPoly& f, u64 p, std::mt19937_64& rng);

}  // namespace lacuna::detail
