#include "arithvol/bounded_value.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

namespace arithvol {

double next_down(double x)
{
    return std::nextafter(x, -std::numeric_limits<double>::infinity());
}

double next_up(double x)
{
    return std::nextafter(x, std::numeric_limits<double>::infinity());
}

namespace {

double down_by(double x, int ulps)
{
    for (int i = 0; i < ulps; ++i)
        x = next_down(x);
    return x;
}

double up_by(double x, int ulps)
{
    for (int i = 0; i < ulps; ++i)
        x = next_up(x);
    return x;
}

BoundedValue outward(double lo, double hi, int ulps = 1)
{
    return {down_by(lo, ulps), up_by(hi, ulps)};
}

} // namespace

BoundedValue::BoundedValue(double l, double h)
    : lo(l)
    , hi(h)
{
    if (!(lo <= hi))
        throw std::invalid_argument("BoundedValue: lo > hi");
}

BoundedValue BoundedValue::exact(mpq_class const & q)
{
    double d = q.get_d();
    int c = cmp(mpq_class(d), q);
    if (c == 0)
        return point(d);
    if (c < 0)
        return {d, next_up(d)};
    return {next_down(d), d};
}

BoundedValue BoundedValue::exact(mpz_class const & z)
{
    return exact(mpq_class(z));
}

BoundedValue BoundedValue::pi()
{
    /* the double nearest to pi is below pi */
    return {std::numbers::pi, next_up(std::numbers::pi)};
}

BoundedValue BoundedValue::widened_relative(double rel) const
{
    return outward(lo - std::abs(lo) * rel, hi + std::abs(hi) * rel);
}

std::string BoundedValue::to_string() const
{
    char buf[80];
    std::snprintf(buf, sizeof buf, "[%.12g, %.12g]", lo, hi);
    return buf;
}

BoundedValue operator+(BoundedValue const & a, BoundedValue const & b)
{
    return outward(a.lo + b.lo, a.hi + b.hi);
}

BoundedValue operator-(BoundedValue const & a, BoundedValue const & b)
{
    return outward(a.lo - b.hi, a.hi - b.lo);
}

BoundedValue operator*(BoundedValue const & a, BoundedValue const & b)
{
    double const p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    auto [mn, mx] = std::minmax_element(p, p + 4);
    return outward(*mn, *mx);
}

BoundedValue operator/(BoundedValue const & a, BoundedValue const & b)
{
    if (b.lo <= 0 && b.hi >= 0)
        throw std::domain_error("BoundedValue: division by an interval containing 0");
    double const q[4] = {a.lo / b.lo, a.lo / b.hi, a.hi / b.lo, a.hi / b.hi};
    auto [mn, mx] = std::minmax_element(q, q + 4);
    return outward(*mn, *mx);
}

BoundedValue sqrt(BoundedValue const & a)
{
    if (a.lo < 0)
        throw std::domain_error("BoundedValue: sqrt of negative value");
    return outward(std::sqrt(a.lo), std::sqrt(a.hi));
}

BoundedValue exp(BoundedValue const & a)
{
    return outward(std::exp(a.lo), std::exp(a.hi), BoundedValue::libm_ulps);
}

BoundedValue log(BoundedValue const & a)
{
    if (a.lo <= 0)
        throw std::domain_error("BoundedValue: log of non-positive value");
    return outward(std::log(a.lo), std::log(a.hi), BoundedValue::libm_ulps);
}

BoundedValue pow(BoundedValue const & a, double e)
{
    if (a.lo <= 0)
        throw std::domain_error("BoundedValue: pow needs a positive base");
    double x = std::pow(a.lo, e);
    double y = std::pow(a.hi, e);
    if (x > y)
        std::swap(x, y);
    BoundedValue r = outward(x, y, BoundedValue::libm_ulps);
    /* pow never rounds below 0 */
    r.lo = std::max(r.lo, 0.0);
    return r;
}

BoundedValue pow(BoundedValue const & a, long e)
{
    if (e < 0)
        return BoundedValue::point(1.0) / pow(a, -e);
    BoundedValue r = BoundedValue::point(1.0);
    BoundedValue b = a;
    while (e) {
        if (e & 1)
            r = r * b;
        e >>= 1;
        if (e)
            b = b * b;
    }
    return r;
}

} // namespace arithvol
