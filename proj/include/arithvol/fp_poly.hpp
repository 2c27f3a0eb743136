#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace arithvol {

/* Polynomials over F_p for a prime p < 2^62, coefficient of x^i at index i,
 * normalized (no zero leading coefficient). */
class FpPoly
{
  public:
    using coeff = std::uint64_t;

    FpPoly(std::uint64_t p, std::vector<coeff> c = {});

    /* reduction of an integer polynomial */
    static FpPoly reduce(std::uint64_t p, std::vector<mpz_class> const & f);
    static FpPoly x(std::uint64_t p);
    static FpPoly constant(std::uint64_t p, coeff c);

    std::uint64_t modulus() const { return p_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    coeff operator[](size_t i) const { return i < c_.size() ? c_[i] : 0; }
    std::vector<coeff> const & coefficients() const { return c_; }

    FpPoly monic() const;
    FpPoly derivative() const;

    friend FpPoly operator+(FpPoly const & a, FpPoly const & b);
    friend FpPoly operator-(FpPoly const & a, FpPoly const & b);
    friend FpPoly operator*(FpPoly const & a, FpPoly const & b);
    friend FpPoly operator/(FpPoly const & a, FpPoly const & b);
    friend FpPoly operator%(FpPoly const & a, FpPoly const & b);
    bool operator==(FpPoly const & o) const = default;

    static void divmod(FpPoly const & a, FpPoly const & b, FpPoly & q, FpPoly & r);

  private:
    std::uint64_t p_;
    std::vector<coeff> c_;

    void trim();
};

FpPoly gcd(FpPoly a, FpPoly b);
/* base^e mod m */
FpPoly powmod(FpPoly const & base, mpz_class const & e, FpPoly const & m);

struct FpFactor {
    FpPoly factor;     // monic irreducible
    int multiplicity;
};

/* Complete factorization of a monic polynomial into monic irreducibles,
 * sorted by (degree, multiplicity, coefficients from the constant term up). */
std::vector<FpFactor> factor(FpPoly const & f);

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t invmod(std::uint64_t a, std::uint64_t p);

} // namespace arithvol
