#ifndef SCENIC_FFPOLY_HPP
#define SCENIC_FFPOLY_HPP

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "scenic/intpoly.hpp"

namespace scenic {

/* Dense polynomial over the prime field F_p, canonical residues in [0, p),
 * ascending by exponent. p must be an odd-sized machine word at most; all
 * coefficient arithmetic goes through double-width intermediates. */
struct ModPoly {
    uint64_t p = 2;
    std::vector<uint64_t> coeffs{0};

    ModPoly() = default;
    /* Checks primality of p by trial division for p below 2^20; larger
     * moduli are only meant to come from the sieve (from_prime below). */
    ModPoly(uint64_t p, std::vector<uint64_t> coeffs);

    /* Skips the primality check; for moduli produced by primes_up_to. */
    static ModPoly from_prime(uint64_t p, std::vector<uint64_t> coeffs);

    static ModPoly zero(uint64_t p) { return from_prime(p, {0}); }
    static ModPoly one(uint64_t p) { return from_prime(p, {1}); }
    static ModPoly x(uint64_t p) { return from_prime(p, {0, 1}); }

    int degree() const { return is_zero() ? -1 : static_cast<int>(coeffs.size()) - 1; }
    bool is_zero() const { return coeffs.size() == 1 && coeffs[0] == 0; }
    bool is_monic() const { return !is_zero() && coeffs.back() == 1; }

    /* coefficient CSV with a "mod p" suffix, e.g. "1,1,0,1 mod 2" */
    std::string to_string() const;

    bool operator==(const ModPoly& o) const { return p == o.p && coeffs == o.coeffs; }

    void normalize();
};

/* Multiset of (degree, multiplicity) pairs from distinct-degree
 * factorization, sorted ascending by degree. When the input was not
 * squarefree, squarefree=false and pairs is empty. */
struct FactorShape {
    std::vector<std::pair<int, int>> pairs;
    bool squarefree = false;

    bool operator==(const FactorShape& o) const {
        return pairs == o.pairs && squarefree == o.squarefree;
    }
    std::string to_string() const;
};

/* Coefficientwise canonical reduction of an integer polynomial mod p. */
ModPoly reduce(const IntPoly& f, uint64_t p);

/* Canonical integer lift with coefficients in [0, p). */
IntPoly lift_canonical(const ModPoly& g);

ModPoly mod_add(const ModPoly& a, const ModPoly& b);
ModPoly mod_sub(const ModPoly& a, const ModPoly& b);
ModPoly mod_mul(const ModPoly& a, const ModPoly& b);
ModPoly mod_rem(const ModPoly& a, const ModPoly& b);
std::pair<ModPoly, ModPoly> mod_divmod(const ModPoly& a, const ModPoly& b);
/* monic gcd */
ModPoly mod_gcd(ModPoly a, ModPoly b);
ModPoly mod_derivative(const ModPoly& a);
/* base^e mod m by repeated squaring */
ModPoly mod_powmod(const ModPoly& base, uint64_t e, const ModPoly& m);

/* Rabin's irreducibility test: g irreducible iff x^(p^d) = x (mod g) and
 * gcd(x^(p^(d/q)) - x, g) = 1 for every prime q | d. Requires monic g of
 * degree >= 1 (errc::not_monic otherwise). */
bool is_irreducible(const ModPoly& g);

/* Distinct-degree factorization shape of a monic g. Non-squarefree inputs
 * are reported (squarefree=false), not factored. Equal-degree splitting is
 * deliberately not performed; only the shape is needed. */
FactorShape ddf(const ModPoly& g);

/* Monic irreducible of exact degree m by rejection sampling; deterministic
 * given the generator state. Throws errc::retry_limit_exceeded after 64*m
 * attempts (never expected). */
ModPoly random_irreducible(uint64_t p, int m, std::mt19937_64& rng);

/* All primes <= n by Eratosthenes. */
std::vector<uint64_t> primes_up_to(uint64_t n);
bool is_small_prime(uint64_t p);

/* Uniform value in [0, n) from raw generator output; unlike
 * std::uniform_int_distribution this is identical across implementations,
 * which the seeded-reproducibility contract needs. */
uint64_t uniform_below(std::mt19937_64& rng, uint64_t n);

} // namespace scenic

#endif
