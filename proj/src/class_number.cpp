#include "arithvol/numfield.hpp"

#include <cmath>
#include <stdexcept>

namespace arithvol {

static bool squarefree(long m)
{
    for (long q = 2; q * q <= m; ++q)
        if (m % (q * q) == 0)
            return false;
    return true;
}

bool is_fundamental_discriminant(long d)
{
    if (d == 0 || d == 1)
        return false;
    long r = ((d % 4) + 4) % 4;
    long a = std::labs(d);
    if (r == 1)
        return squarefree(a);
    if (r != 0)
        return false;
    long m = d / 4;
    long rm = ((m % 4) + 4) % 4;
    return (rm == 2 || rm == 3) && squarefree(std::labs(m));
}

/*
 * Reduced forms (a, b, c) with b^2 - 4ac = d satisfy |b| <= a <= c, so
 * 3a^2 <= |d|.  Forms on the boundary (|b| = a or a = c) are counted only
 * with b >= 0.
 */
long class_number_oracle(long d)
{
    if (d >= 0)
        throw std::domain_error("class_number_oracle: discriminant must be negative");
    if (!is_fundamental_discriminant(d))
        throw std::domain_error("class_number_oracle: " + std::to_string(d)
                                + " is not a fundamental discriminant");
    long const D = -d;
    long h = 0;
    for (long a = 1; 3 * a * a <= D; ++a) {
        for (long b = -a + 1; b <= a; ++b) {
            long num = b * b + D;
            if (num % (4 * a))
                continue;
            long c = num / (4 * a);
            if (c < a)
                continue;
            if (c == a && b < 0)
                continue;
            ++h;
        }
    }
    return h;
}

} // namespace arithvol
