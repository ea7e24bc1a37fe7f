#ifndef SCENIC_INTPOLY_HPP
#define SCENIC_INTPOLY_HPP

#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "scenic/error.hpp"

namespace scenic {

using Int = mpz_class;
using Rat = mpq_class;

/* Dense univariate polynomial over Z, coefficients ascending by exponent.
 * The zero polynomial is stored as the single coefficient 0; for any other
 * value the leading entry is nonzero. Values are immutable after
 * construction, so they can be shared freely across threads. */
class IntPoly {
public:
    IntPoly() : coeffs_{Int(0)} {}
    explicit IntPoly(std::vector<Int> coeffs);

    /* Comma-separated ascending coefficients ("133,65,...,1"). Whitespace is
     * ignored, a leading '+' per entry is allowed. Throws errc::parse_error. */
    static IntPoly from_csv(std::string_view text);

    /* c * x^k */
    static IntPoly monomial(int k, Int c = 1);

    /* degree of the zero polynomial is -1 */
    int degree() const { return is_zero() ? -1 : static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == 0; }
    bool is_monic() const { return !is_zero() && leading() == 1; }
    const Int& leading() const { return coeffs_.back(); }

    /* coefficient of x^i; zero beyond the stored range */
    const Int& coeff(size_t i) const;
    size_t size() const { return coeffs_.size(); }
    const std::vector<Int>& coeffs() const { return coeffs_; }

    std::string to_csv() const;
    /* "x^8 - 10x^7 + ... + 133" for human-readable output */
    std::string to_pretty() const;

    IntPoly derivative() const;
    /* gcd of all coefficients, nonnegative; 0 for the zero polynomial */
    Int content() const;
    IntPoly primitive_part() const;

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const Int& c, const IntPoly& a);
    IntPoly operator-() const;
    bool operator==(const IntPoly& o) const { return coeffs_ == o.coeffs_; }

private:
    std::vector<Int> coeffs_;
    void normalize();
};

/* Exact evaluation by Horner's rule. */
Rat eval(const IntPoly& f, const Rat& x);
Int eval(const IntPoly& f, const Int& x);

/* True iff gcd(f, f') is constant over Q, i.e. f has no repeated roots.
 * Computed with a fraction-free primitive pseudo-remainder gcd. The zero
 * polynomial is reported as not squarefree. */
bool squarefree_part_check(const IntPoly& f);

/* gcd over Z up to sign, primitive pseudo-remainder sequence; result is
 * primitive with positive leading coefficient. */
IntPoly primitive_gcd(const IntPoly& f, const IntPoly& g);

/* Quotient f/g when g divides f exactly over Z; throws std::invalid_argument
 * when it does not. */
IntPoly exact_divide(const IntPoly& f, const IntPoly& g);

/* Exact number of distinct real roots of a squarefree f, by the sign
 * variation difference of the integer Sturm chain at -inf/+inf. Throws
 * errc::not_squarefree for zero or non-squarefree input. */
int sturm_real_root_count(const IntPoly& f);

/* B = 1 + max |a_i| over the non-leading coefficients of a monic f; every
 * complex root has modulus < B. Throws errc::not_monic. */
Rat cauchy_bound(const IntPoly& f);

/* Resultant via fraction-free (Bareiss) elimination of the Sylvester matrix. */
Int resultant(const IntPoly& f, const IntPoly& g);

/* disc(f) = (-1)^(d(d-1)/2) Res(f, f') / lc(f), exact. Requires deg f >= 1. */
Int discriminant(const IntPoly& f);

} // namespace scenic

#endif
