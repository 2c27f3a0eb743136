#pragma once

#include "arithvol/numfield.hpp"

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace arithvol {

/* finite ramified prime as written in a corpus: the index-th entry of
 * split_prime(k, p) */
struct RamifiedPrimeSpec {
    std::uint64_t p = 0;
    int index = 0;
    bool operator==(RamifiedPrimeSpec const &) const = default;
};

struct invalid_algebra : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/*
 * A quaternion algebra B over k, given by its ramification.  Real places
 * are numbered 0..r1-1; B is M_2(R) at the real places not listed in
 * ram_inf and M_2(C) at every complex place.
 */
class QuaternionAlgebra
{
  public:
    NumberField const & field() const { return *field_; }
    FieldPtr const & field_ptr() const { return field_; }
    std::string const & label() const { return label_; }
    std::vector<int> const & ram_inf() const { return ram_inf_; }
    std::vector<PrimeIdeal> const & ram_f() const { return ram_f_; }

    /* ramified / split real places */
    int r() const { return static_cast<int>(ram_inf_.size()); }
    int s() const { return field_->r1() - r(); }
    /* factors of PGL_2(R)^a x PGL_2(C)^b */
    int a() const { return s(); }
    int b() const { return field_->r2(); }

    bool cocompact() const { return !ram_inf_.empty() || !ram_f_.empty(); }
    bool totally_definite() const { return a() + b() == 0; }
    bool is_ramified(PrimeIdeal const & q) const;

  private:
    friend QuaternionAlgebra validate_algebra(FieldPtr, std::vector<int>, std::vector<RamifiedPrimeSpec>,
                                              std::string);
    QuaternionAlgebra() = default;

    FieldPtr field_;
    std::string label_;
    std::vector<int> ram_inf_;
    std::vector<PrimeIdeal> ram_f_;
};

QuaternionAlgebra validate_algebra(FieldPtr field, std::vector<int> ram_inf,
                                   std::vector<RamifiedPrimeSpec> ram_f, std::string label = {});

/* Phi(D) = N(D) prod_{p | D} (1 - 1/N(p)) */
mpq_class phi_discriminant(std::vector<PrimeIdeal> const & ram_f);
mpq_class phi_discriminant(QuaternionAlgebra const & alg);

/* ramified primes of norm 2 */
int omega2(QuaternionAlgebra const & alg);

struct TypeNumberBound {
    mpz_class coarse;   // 2^{r1} h_k, degree of the narrow class field
    double refined;     // 242 (1.22)^{r1} d_k^{3/4}
};

TypeNumberBound type_number_bound(QuaternionAlgebra const & alg);
TypeNumberBound type_number_bound(NumberField const & k);

} // namespace arithvol
