#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace arithvol {

/*
 * A real number known to lie in [lo, hi].
 *
 * Every arithmetic operation rounds its result outward by one ulp on each
 * side, which is enough to contain the exact result given IEEE round-to-
 * nearest for + - * / and sqrt.  Transcendental functions (exp, log, pow)
 * are widened by libm_ulps ulps; glibc documents errors below one ulp for
 * these on x86_64, so the margin is generous.
 */
struct BoundedValue {
    double lo = 0.0;
    double hi = 0.0;

    static constexpr int libm_ulps = 4;

    BoundedValue() = default;
    BoundedValue(double l, double h);

    static BoundedValue point(double x) { return {x, x}; }
    static BoundedValue exact(mpz_class const & z);
    static BoundedValue exact(mpq_class const & q);

    /* Enclosures of mathematical constants. */
    static BoundedValue pi();

    double width() const { return hi - lo; }
    double mid() const { return lo + (hi - lo) / 2; }
    bool contains(double x) const { return lo <= x && x <= hi; }
    bool contains(BoundedValue const & o) const { return lo <= o.lo && o.hi <= hi; }
    bool positive() const { return lo > 0; }

    /* widen by a relative amount on both sides (used for approximations
     * with a documented relative error, e.g. the gamma function) */
    BoundedValue widened_relative(double rel) const;

    std::string to_string() const;
};

BoundedValue operator+(BoundedValue const & a, BoundedValue const & b);
BoundedValue operator-(BoundedValue const & a, BoundedValue const & b);
BoundedValue operator*(BoundedValue const & a, BoundedValue const & b);
BoundedValue operator/(BoundedValue const & a, BoundedValue const & b);

BoundedValue sqrt(BoundedValue const & a);
BoundedValue exp(BoundedValue const & a);
BoundedValue log(BoundedValue const & a);
/* a^e for a > 0 and real e */
BoundedValue pow(BoundedValue const & a, double e);
BoundedValue pow(BoundedValue const & a, long e);

/* one-ulp moves */
double next_down(double x);
double next_up(double x);

} // namespace arithvol
