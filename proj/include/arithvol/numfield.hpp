#pragma once

#include "arithvol/bounded_value.hpp"
#include "arithvol/poly.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace arithvol {

/* A prime of k above the rational prime p.  Primes above the same p are
 * told apart by their position in split_prime's canonical output. */
struct PrimeIdeal {
    std::uint64_t p = 0;
    int e = 1;                      // ramification index
    int f = 1;                      // residue degree
    mpz_class norm;                 // p^f
    int index = 0;                  // position in split_prime(field, p)
    /* Dedekind factor of the defining polynomial mod p, constant term
     * first; empty when the splitting came from corpus data */
    std::vector<std::uint64_t> residue_factor;

    bool same_prime(PrimeIdeal const & o) const { return p == o.p && index == o.index; }
    std::string name() const;
};

/* one prime above p as supplied by the corpus for index divisors */
struct SplittingEntry {
    int e = 1;
    int f = 1;
};

/* A corpus record before validation. */
struct RawField {
    std::string label;
    ZPoly poly;
    int r1 = 0;
    int r2 = 0;
    mpz_class d_k;
    mpz_class h_k;
    double reg_k = 0;
    int omega_k = 0;
    mpz_class index_sq = 1;
    std::map<std::uint64_t, std::vector<SplittingEntry>> bad_prime_splittings;
};

struct invalid_field : std::runtime_error {
    std::string label;
    std::vector<std::string> problems;
    invalid_field(std::string label, std::vector<std::string> problems);
};

/* Raised by split_prime (and everything built on it) when p divides the
 * index of Z[theta] and the corpus gives no splitting for p. */
struct unsplittable_prime : std::runtime_error {
    std::uint64_t p;
    unsplittable_prime(std::string const & label, std::uint64_t p);
};

/*
 * A number field k = Q[x]/(f) whose invariants have been cross-checked.
 * Instances only come out of validate_field and are immutable.
 */
class NumberField
{
  public:
    std::string const & label() const { return raw_.label; }
    ZPoly const & poly() const { return raw_.poly; }
    int degree() const { return static_cast<int>(raw_.poly.size()) - 1; }
    int r1() const { return raw_.r1; }
    int r2() const { return raw_.r2; }
    mpz_class const & d_k() const { return raw_.d_k; }
    mpz_class const & h_k() const { return raw_.h_k; }
    double reg_k() const { return raw_.reg_k; }
    int omega_k() const { return raw_.omega_k; }
    mpz_class const & index_sq() const { return raw_.index_sq; }
    mpz_class const & poly_discriminant() const { return disc_; }
    RawField const & raw() const { return raw_; }

    bool is_imaginary_quadratic() const { return degree() == 2 && r1() == 0; }
    /* true when Dedekind's criterion cannot be used at p */
    bool index_divisible_by(std::uint64_t p) const;

  private:
    friend NumberField validate_field(RawField const &);
    NumberField(RawField raw, mpz_class disc)
        : raw_(std::move(raw))
        , disc_(std::move(disc))
    {
    }

    RawField raw_;
    mpz_class disc_;
};

using FieldPtr = std::shared_ptr<NumberField const>;

/* Checks every invariant and reports all violations at once. */
NumberField validate_field(RawField const & raw);

std::vector<PrimeIdeal> split_prime(NumberField const & k, std::uint64_t p);

/* all prime ideals above rational primes <= bound, ascending norm */
std::vector<PrimeIdeal> primes_up_to(NumberField const & k, std::uint64_t bound);

std::vector<std::uint64_t> rational_primes_up_to(std::uint64_t bound);
bool is_prime(std::uint64_t n);

/*
 * Enclosure of zeta_k(s) from the Euler product over primes above p <= P.
 * The lower endpoint is the truncated product; the upper endpoint
 * multiplies by exp(n T(P,s)) with T(P,2) = 1/P and, for other s,
 * T(P,s) = P^{1-s} / ((s-1)(1-2^{-s})).
 */
BoundedValue dedekind_zeta(NumberField const & k, double s, std::uint64_t prime_bound);

/* the tail majorant T(P, s) used above, rounded up */
double zeta_tail_majorant(std::uint64_t prime_bound, double s);

/* number of integral ideals of norm <= x, the unit ideal included */
std::uint64_t count_ideals(NumberField const & k, double x);

/* class number of Q(sqrt d) for a negative fundamental discriminant d,
 * by counting reduced forms */
long class_number_oracle(long d);
bool is_fundamental_discriminant(long d);

} // namespace arithvol
