#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace arithvol {

/* Dense polynomials, coefficient of x^i at index i.  A normalized polynomial
 * has a nonzero leading coefficient; the zero polynomial is empty. */
using ZPoly = std::vector<mpz_class>;
using QPoly = std::vector<mpq_class>;

struct polynomial_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/* degree of a normalized polynomial, -1 for zero */
int degree(ZPoly const & f);
int degree(QPoly const & f);

void normalize(ZPoly & f);
void normalize(QPoly & f);

QPoly to_rational(ZPoly const & f);
QPoly derivative(QPoly const & f);
ZPoly derivative(ZPoly const & f);

/* Euclidean division over Q; throws on division by zero */
void divmod(QPoly const & a, QPoly const & b, QPoly & q, QPoly & r);
QPoly remainder(QPoly const & a, QPoly const & b);
/* monic gcd over Q */
QPoly gcd(QPoly a, QPoly b);

bool is_monic(ZPoly const & f);
bool is_squarefree(ZPoly const & f);

/* Res(a, b) computed by the Euclidean remainder sequence over Q */
mpq_class resultant(QPoly const & a, QPoly const & b);

/* (-1)^{n(n-1)/2} Res(f, f') / lc(f); requires degree >= 1 */
mpz_class discriminant(ZPoly const & f);

/* canonical Sturm chain f, f', -rem(...), ... */
std::vector<QPoly> sturm_chain(ZPoly const & f);

/* number of distinct real roots of a squarefree polynomial */
int count_real_roots(ZPoly const & f);

struct Signature {
    int r1 = 0;
    int r2 = 0;
    bool operator==(Signature const &) const = default;
};

/* Signature of the field Q[x]/(f).  f must be monic, squarefree and of
 * degree >= 1; violations raise polynomial_error with the reason. */
Signature signature(ZPoly const & f);

std::string to_string(ZPoly const & f, char var = 'x');

} // namespace arithvol
