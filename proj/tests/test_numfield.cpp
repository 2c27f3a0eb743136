#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"

#include "arithvol/numfield.hpp"

#include <cmath>
#include <numbers>

using namespace arithvol;
using arithvol::testing::field;
using arithvol::testing::starter;
using arithvol::testing::zpoly;

namespace {

double const zeta2 = std::numbers::pi * std::numbers::pi / 6;

double catalan()
{
    // alternating series, error below the first omitted term
    double g = 0;
    for (long k = 2000000; k >= 0; --k)
        g += (k % 2 ? -1.0 : 1.0) / (double(2 * k + 1) * double(2 * k + 1));
    return g;
}

/* Kronecker symbol (d / m) for a discriminant d */
int kronecker(long d, long m)
{
    if (m == 0)
        return std::abs(d) == 1;
    int r = 1;
    while (m % 2 == 0) {
        m /= 2;
        if (d % 2 == 0)
            return 0;
        long t = ((d % 8) + 8) % 8;
        if (t == 3 || t == 5)
            r = -r;
    }
    // Jacobi symbol (d / m) for odd m
    long a = ((d % m) + m) % m, n = m;
    while (a) {
        while (a % 2 == 0) {
            a /= 2;
            if (n % 8 == 3 || n % 8 == 5)
                r = -r;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3)
            r = -r;
        a %= n;
    }
    return n == 1 ? r : 0;
}

long signed_disc(NumberField const & k)
{
    return k.r1() == 0 ? -k.d_k().get_si() : k.d_k().get_si();
}

/* L(2, chi_d) summed to N terms; tail below 1/N */
double l2(long d, long N = 4000000)
{
    double s = 0;
    for (long m = N; m >= 1; --m)
        s += kronecker(d, m) / (double(m) * double(m));
    return s;
}

/* ideals of a quadratic field with norm <= X: sum over m <= X of sum_{e | m} chi(e) */
std::uint64_t quadratic_ideal_count(long d, long X)
{
    long total = 0;
    for (long e = 1; e <= X; ++e)
        total += kronecker(d, e) * (X / e);
    return total;
}

std::uint64_t gaussian_count(long X)
{
    long pts = 0;
    for (long a = -X; a <= X; ++a)
        for (long b = -X; b <= X; ++b)
            if ((a || b) && a * a + b * b <= X)
                ++pts;
    return pts / 4;   // four units
}

/* h(d) = -(w / 2|d|) sum_{m < |d|} chi(m) m */
long analytic_class_number(long d)
{
    long D = -d, s = 0;
    for (long m = 1; m < D; ++m)
        s += kronecker(d, m) * m;
    long w = d == -3 ? 6 : d == -4 ? 4 : 2;
    return -w * s / (2 * D);
}

/* all primitive reduced forms of discriminant d, searched over a box */
long brute_force_forms(long d)
{
    long D = -d, h = 0;
    for (long a = 1; a * a <= D; ++a)
        for (long b = -a; b <= a; ++b) {
            if ((b * b - d) % (4 * a))
                continue;
            long c = (b * b - d) / (4 * a);
            if (c < a)
                continue;
            if ((b < 0) && (-b == a || a == c))
                continue;
            if (std::gcd(std::gcd(a, std::labs(b)), c) != 1)
                continue;
            ++h;
        }
    return h;
}

RawField raw_gaussian()
{
    RawField r;
    r.label = "Qi";
    r.poly = zpoly({1, 0, 1});
    r.r1 = 0;
    r.r2 = 1;
    r.d_k = 4;
    r.h_k = 1;
    r.reg_k = 1;
    r.omega_k = 4;
    return r;
}

/* x^2 - 5 has index 2 in the ring of integers of Q(sqrt 5) */
RawField raw_sqrt5_nonmonogenic()
{
    RawField r;
    r.label = "Qsqrt5-index2";
    r.poly = zpoly({-5, 0, 1});
    r.r1 = 2;
    r.r2 = 0;
    r.d_k = 5;
    r.h_k = 1;
    r.reg_k = 0.48121182505960344;
    r.omega_k = 2;
    r.index_sq = 4;
    r.bad_prime_splittings[2] = {SplittingEntry{1, 2}};
    return r;
}

} // namespace

TEST_CASE("validate_field accepts certified records")
{
    CHECK_NOTHROW(validate_field(raw_gaussian()));
    RawField r;
    r.label = "Qsqrt5";
    r.poly = zpoly({-1, -1, 1});
    r.r1 = 2;
    r.d_k = 5;
    r.h_k = 1;
    r.reg_k = 0.4812;
    r.omega_k = 2;
    CHECK_NOTHROW(validate_field(r));
}

TEST_CASE("validate_field reports every violated invariant")
{
    RawField r = raw_gaussian();
    r.r1 = 1;
    try {
        validate_field(r);
        FAIL("expected invalid_field");
    } catch (invalid_field const & e) {
        CHECK(e.label == "Qi");
        CHECK(std::string(e.what()).find("signature mismatch") != std::string::npos);
    }

    r = raw_gaussian();
    r.d_k = 8;
    r.omega_k = 3;
    r.h_k = 0;
    try {
        validate_field(r);
        FAIL("expected invalid_field");
    } catch (invalid_field const & e) {
        CHECK(e.problems.size() == 3);
    }

    r = raw_gaussian();
    r.index_sq = 2;
    CHECK_THROWS_AS(validate_field(r), invalid_field);

    r = raw_gaussian();
    r.poly = zpoly({1, 0, 2});
    CHECK_THROWS_AS(validate_field(r), invalid_field);

    r = raw_sqrt5_nonmonogenic();
    r.bad_prime_splittings[2] = {SplittingEntry{1, 1}};
    CHECK_THROWS_AS(validate_field(r), invalid_field);
}

TEST_CASE("starter corpus signatures and discriminants are consistent")
{
    for (auto const & k : starter().fields) {
        CAPTURE(k->label());
        CHECK(signature(k->poly()) == Signature{k->r1(), k->r2()});
        CHECK(abs(discriminant(k->poly())) == k->d_k() * k->index_sq());
    }
    CHECK(starter().fields.size() >= 12);
}

TEST_CASE("splitting in Q(i)")
{
    auto const & k = field("Qi");
    auto s2 = split_prime(k, 2);
    REQUIRE(s2.size() == 1);
    CHECK(s2[0].e == 2);
    CHECK(s2[0].f == 1);
    CHECK(s2[0].norm == 2);
    CHECK(s2[0].name() == "(2, x + 1)^2");

    auto s3 = split_prime(k, 3);
    REQUIRE(s3.size() == 1);
    CHECK(s3[0].e == 1);
    CHECK(s3[0].f == 2);
    CHECK(s3[0].norm == 9);

    auto s5 = split_prime(k, 5);
    REQUIRE(s5.size() == 2);
    for (int i = 0; i < 2; ++i) {
        CHECK(s5[i].e == 1);
        CHECK(s5[i].f == 1);
        CHECK(s5[i].norm == 5);
        CHECK(s5[i].index == i);
    }
    CHECK_THROWS(split_prime(k, 9));
}

TEST_CASE("sum of e f equals the degree")
{
    for (auto const & k : starter().fields)
        for (auto p : rational_primes_up_to(200)) {
            int total = 0;
            for (auto const & q : split_prime(*k, p))
                total += q.e * q.f;
            CHECK(total == k->degree());
        }
}

TEST_CASE("index divisors use the certified splitting")
{
    auto k = validate_field(raw_sqrt5_nonmonogenic());
    auto s2 = split_prime(k, 2);
    REQUIRE(s2.size() == 1);
    CHECK(s2[0].norm == 4);

    RawField r = raw_sqrt5_nonmonogenic();
    r.bad_prime_splittings.clear();
    auto bare = validate_field(r);
    CHECK_THROWS_AS(split_prime(bare, 2), unsplittable_prime);
    CHECK_THROWS_AS(dedekind_zeta(bare, 2.0, 100), unsplittable_prime);

    // same field as x^2 - x - 1
    auto a = dedekind_zeta(k, 2.0, 1000);
    auto b = dedekind_zeta(field("Qsqrt5"), 2.0, 1000);
    CHECK(a.lo == doctest::Approx(b.lo).epsilon(1e-14));
    CHECK(a.hi == doctest::Approx(b.hi).epsilon(1e-14));
}

TEST_CASE("zeta of Q with a single Euler factor")
{
    auto z = dedekind_zeta(field("Q"), 2.0, 2);
    CHECK(z.lo == doctest::Approx(4.0 / 3).epsilon(1e-15));
    CHECK(z.hi == doctest::Approx(4.0 / 3 * std::exp(0.5)).epsilon(1e-15));
    CHECK(z.contains(zeta2));
}

TEST_CASE("zeta enclosures against known constants")
{
    auto zq = dedekind_zeta(field("Q"), 2.0, 10000);
    CHECK(zq.contains(zeta2));
    CHECK(zq.width() <= 1.7e-4);

    double target = zeta2 * catalan();
    auto zi = dedekind_zeta(field("Qi"), 2.0, 10000);
    CHECK(zi.contains(target));
    CHECK(zi.width() <= 4e-4);
}

TEST_CASE("quadratic zeta values factor as zeta(2) L(2, chi)")
{
    for (auto const & k : starter().fields) {
        if (k->degree() != 2)
            continue;
        CAPTURE(k->label());
        double v = zeta2 * l2(signed_disc(*k));
        auto z = dedekind_zeta(*k, 2.0, 10000);
        CHECK(z.lo <= v + 1e-6);
        CHECK(v - 1e-6 <= z.hi);
    }
}

TEST_CASE("zeta enclosures shrink monotonically with P")
{
    for (auto const & k : starter().fields) {
        BoundedValue prev = dedekind_zeta(*k, 2.0, 2);
        for (std::uint64_t P : {10, 100, 1000, 10000}) {
            auto z = dedekind_zeta(*k, 2.0, P);
            CHECK(z.lo >= prev.lo);
            CHECK(z.hi <= prev.hi);
            prev = z;
        }
    }
}

TEST_CASE("zeta at other s")
{
    double riemann15 = 2.6123753486854883;
    auto z = dedekind_zeta(field("Q"), 1.5, 10000);
    CHECK(z.contains(riemann15));
    CHECK_THROWS(dedekind_zeta(field("Q"), 1.0, 100));
    CHECK_THROWS(dedekind_zeta(field("Q"), 2.0, 1));
}

TEST_CASE("ideal counts")
{
    CHECK(count_ideals(field("Q"), 10) == 10);
    CHECK(count_ideals(field("Qi"), 5) == 5);
    CHECK(count_ideals(field("Qi"), 0.5) == 0);
    for (long X = 1; X <= 300; X += 7)
        CHECK(count_ideals(field("Qi"), X) == gaussian_count(X));
    for (auto const & k : starter().fields) {
        if (k->degree() != 2)
            continue;
        CAPTURE(k->label());
        for (long X : {1, 10, 100, 1000})
            CHECK(count_ideals(*k, X) == quadratic_ideal_count(signed_disc(*k), X));
    }
}

TEST_CASE("class number oracle")
{
    CHECK(class_number_oracle(-4) == 1);
    CHECK(class_number_oracle(-23) == 3);
    CHECK(class_number_oracle(-3) == 1);
    CHECK(class_number_oracle(-20) == 2);
    for (auto const & k : starter().fields)
        if (k->is_imaginary_quadratic())
            CHECK(class_number_oracle(-k->d_k().get_si()) == k->h_k().get_si());
    int checked = 0;
    for (long d = 3; d <= 500; ++d) {
        if (!is_fundamental_discriminant(-d))
            continue;
        CAPTURE(d);
        long h = class_number_oracle(-d);
        CHECK(h == brute_force_forms(-d));
        CHECK(h == analytic_class_number(-d));
        ++checked;
    }
    CHECK(checked > 100);
}

TEST_CASE("fundamental discriminants")
{
    CHECK(is_fundamental_discriminant(-3));
    CHECK(is_fundamental_discriminant(-4));
    CHECK(is_fundamental_discriminant(-8));
    CHECK_FALSE(is_fundamental_discriminant(-12));
    CHECK_FALSE(is_fundamental_discriminant(-16));
    CHECK_FALSE(is_fundamental_discriminant(-5));
}
