#include "arithvol/fp_poly.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace arithvol {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p)
{
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

static std::uint64_t powmod_u(std::uint64_t a, std::uint64_t e, std::uint64_t p)
{
    std::uint64_t r = 1 % p;
    while (e) {
        if (e & 1)
            r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p)
{
    if (a % p == 0)
        throw std::domain_error("inverse of zero mod p");
    /* p is prime */
    return powmod_u(a % p, p - 2, p);
}

FpPoly::FpPoly(std::uint64_t p, std::vector<coeff> c)
    : p_(p)
    , c_(std::move(c))
{
    if (p < 2 || p >= (std::uint64_t(1) << 62))
        throw std::invalid_argument("FpPoly: modulus out of range");
    for (auto & x : c_)
        x %= p_;
    trim();
}

void FpPoly::trim()
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

FpPoly FpPoly::reduce(std::uint64_t p, std::vector<mpz_class> const & f)
{
    std::vector<coeff> c;
    c.reserve(f.size());
    mpz_class pp(static_cast<unsigned long>(p));
    for (auto const & a : f) {
        mpz_class r;
        mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), pp.get_mpz_t());
        c.push_back(r.get_ui());
    }
    return {p, std::move(c)};
}

FpPoly FpPoly::x(std::uint64_t p)
{
    return {p, {0, 1}};
}

FpPoly FpPoly::constant(std::uint64_t p, coeff c)
{
    return {p, {c}};
}

FpPoly FpPoly::monic() const
{
    if (c_.empty())
        return *this;
    coeff inv = invmod(c_.back(), p_);
    std::vector<coeff> c = c_;
    for (auto & x : c)
        x = mulmod(x, inv, p_);
    return {p_, std::move(c)};
}

FpPoly FpPoly::derivative() const
{
    std::vector<coeff> d;
    for (size_t i = 1; i < c_.size(); ++i)
        d.push_back(mulmod(c_[i], i % p_, p_));
    return {p_, std::move(d)};
}

FpPoly operator+(FpPoly const & a, FpPoly const & b)
{
    std::vector<FpPoly::coeff> c(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < c.size(); ++i) {
        c[i] = a[i] + b[i];
        if (c[i] >= a.p_)
            c[i] -= a.p_;
    }
    return {a.p_, std::move(c)};
}

FpPoly operator-(FpPoly const & a, FpPoly const & b)
{
    std::vector<FpPoly::coeff> c(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < c.size(); ++i)
        c[i] = a[i] >= b[i] ? a[i] - b[i] : a[i] + a.p_ - b[i];
    return {a.p_, std::move(c)};
}

FpPoly operator*(FpPoly const & a, FpPoly const & b)
{
    if (a.is_zero() || b.is_zero())
        return {a.p_};
    std::vector<FpPoly::coeff> c(a.c_.size() + b.c_.size() - 1, 0);
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j)
            c[i + j] = (c[i + j] + mulmod(a.c_[i], b.c_[j], a.p_)) % a.p_;
    return {a.p_, std::move(c)};
}

void FpPoly::divmod(FpPoly const & a, FpPoly const & b, FpPoly & q, FpPoly & r)
{
    if (b.is_zero())
        throw std::domain_error("FpPoly: division by zero");
    std::uint64_t p = a.p_;
    std::vector<coeff> rem = a.c_;
    int db = b.degree();
    std::vector<coeff> quo(std::max(0, a.degree() - db + 1), 0);
    coeff inv = invmod(b.c_.back(), p);
    for (int k = a.degree() - db; k >= 0; --k) {
        coeff t = mulmod(rem[k + db], inv, p);
        quo[k] = t;
        if (t == 0)
            continue;
        for (int i = 0; i <= db; ++i) {
            coeff s = mulmod(t, b.c_[i], p);
            rem[k + i] = rem[k + i] >= s ? rem[k + i] - s : rem[k + i] + p - s;
        }
    }
    q = FpPoly(p, std::move(quo));
    r = FpPoly(p, std::move(rem));
}

FpPoly operator/(FpPoly const & a, FpPoly const & b)
{
    FpPoly q(a.p_), r(a.p_);
    FpPoly::divmod(a, b, q, r);
    return q;
}

FpPoly operator%(FpPoly const & a, FpPoly const & b)
{
    FpPoly q(a.p_), r(a.p_);
    FpPoly::divmod(a, b, q, r);
    return r;
}

FpPoly gcd(FpPoly a, FpPoly b)
{
    while (!b.is_zero()) {
        FpPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

FpPoly powmod(FpPoly const & base, mpz_class const & e, FpPoly const & m)
{
    FpPoly r = FpPoly::constant(base.modulus(), 1) % m;
    FpPoly b = base % m;
    for (long i = static_cast<long>(mpz_sizeinbase(e.get_mpz_t(), 2)) - 1; i >= 0; --i) {
        r = (r * r) % m;
        if (mpz_tstbit(e.get_mpz_t(), i))
            r = (r * b) % m;
    }
    return r;
}

namespace {

FpPoly pth_root(FpPoly const & f)
{
    std::uint64_t p = f.modulus();
    std::vector<FpPoly::coeff> c;
    for (size_t i = 0; i < f.coefficients().size(); i += p)
        c.push_back(f.coefficients()[i]);
    return {p, std::move(c)};
}

void squarefree_decomposition(FpPoly const & f, int scale, std::vector<FpFactor> & out)
{
    std::uint64_t p = f.modulus();
    FpPoly df = f.derivative();
    if (df.is_zero()) {
        if (f.degree() > 0)
            squarefree_decomposition(pth_root(f), scale * static_cast<int>(p), out);
        return;
    }
    FpPoly c = gcd(f, df);
    FpPoly w = f / c;
    int i = 1;
    while (!w.is_one()) {
        FpPoly y = gcd(w, c);
        FpPoly fac = (w / y).monic();
        if (fac.degree() > 0)
            out.push_back({fac, i * scale});
        w = y;
        c = c / y;
        ++i;
    }
    if (c.degree() > 0)
        squarefree_decomposition(pth_root(c.monic()), scale * static_cast<int>(p), out);
}

/* (product of all degree-d factors, d) for a squarefree monic f */
std::vector<std::pair<FpPoly, int>> distinct_degree(FpPoly g)
{
    std::uint64_t p = g.modulus();
    std::vector<std::pair<FpPoly, int>> res;
    FpPoly const x = FpPoly::x(p);
    FpPoly h = x % g;
    mpz_class pe(static_cast<unsigned long>(p));
    for (int i = 1; g.degree() >= 2 * i; ++i) {
        h = powmod(h, pe, g);
        FpPoly d = gcd(g, h - x);
        if (!d.is_one()) {
            res.emplace_back(d, i);
            g = g / d;
            h = h % g;
        }
    }
    if (g.degree() > 0)
        res.emplace_back(g.monic(), g.degree());
    return res;
}

void equal_degree(FpPoly const & h, int d, std::mt19937_64 & rng, std::vector<FpPoly> & out)
{
    if (h.degree() == d) {
        out.push_back(h);
        return;
    }
    std::uint64_t p = h.modulus();
    std::uniform_int_distribution<std::uint64_t> coin(0, p - 1);
    mpz_class half;
    if (p != 2) {
        mpz_ui_pow_ui(half.get_mpz_t(), p, d);
        half = (half - 1) / 2;
    }
    for (;;) {
        std::vector<FpPoly::coeff> c(h.degree());
        for (auto & x : c)
            x = coin(rng);
        FpPoly a(p, std::move(c));
        if (a.degree() < 1)
            continue;
        FpPoly b(p);
        if (p == 2) {
            /* absolute trace of a in F_{2^d} */
            FpPoly t = a % h;
            b = t;
            for (int j = 1; j < d; ++j) {
                t = (t * t) % h;
                b = b + t;
            }
        } else {
            b = powmod(a, half, h) - FpPoly::constant(p, 1);
        }
        FpPoly g = gcd(h, b);
        if (g.degree() > 0 && g.degree() < h.degree()) {
            equal_degree(g, d, rng, out);
            equal_degree((h / g).monic(), d, rng, out);
            return;
        }
    }
}

} // namespace

std::vector<FpFactor> factor(FpPoly const & f)
{
    if (f.degree() < 0 || f.coefficients().back() != 1)
        throw std::invalid_argument("factor: polynomial must be monic");
    std::vector<FpFactor> sqf;
    squarefree_decomposition(f, 1, sqf);

    /* fixed seed: the splitting is randomized, the sorted result is not */
    std::mt19937_64 rng(0x5eed ^ f.modulus());
    std::vector<FpFactor> out;
    for (auto const & [g, mult] : sqf) {
        for (auto const & [h, d] : distinct_degree(g)) {
            std::vector<FpPoly> irr;
            equal_degree(h, d, rng, irr);
            for (auto & q : irr)
                out.push_back({std::move(q), mult});
        }
    }
    std::sort(out.begin(), out.end(), [](FpFactor const & a, FpFactor const & b) {
        if (a.factor.degree() != b.factor.degree())
            return a.factor.degree() < b.factor.degree();
        if (a.multiplicity != b.multiplicity)
            return a.multiplicity < b.multiplicity;
        return a.factor.coefficients() < b.factor.coefficients();
    });
    return out;
}

} // namespace arithvol
