#include "arithvol/quatalg.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace arithvol {

bool QuaternionAlgebra::is_ramified(PrimeIdeal const & q) const
{
    return std::any_of(ram_f_.begin(), ram_f_.end(), [&](PrimeIdeal const & x) { return x.same_prime(q); });
}

QuaternionAlgebra validate_algebra(FieldPtr field, std::vector<int> ram_inf, std::vector<RamifiedPrimeSpec> ram_f,
                                   std::string label)
{
    if (!field)
        throw invalid_algebra("algebra '" + label + "': no base field");
    auto fail = [&](std::string const & why) {
        return invalid_algebra("algebra '" + label + "' over '" + field->label() + "': " + why);
    };

    std::set<int> seen_places;
    for (int v : ram_inf) {
        if (v < 0 || v >= field->r1())
            throw fail("real place index " + std::to_string(v) + " out of range (r1 = "
                       + std::to_string(field->r1()) + ")");
        if (!seen_places.insert(v).second)
            throw fail("duplicate real place " + std::to_string(v));
    }

    std::vector<PrimeIdeal> primes;
    for (auto const & spec : ram_f) {
        if (!is_prime(spec.p))
            throw fail(std::to_string(spec.p) + " is not a rational prime");
        auto above = split_prime(*field, spec.p);
        if (spec.index < 0 || spec.index >= static_cast<int>(above.size()))
            throw fail("no prime with index " + std::to_string(spec.index) + " above " + std::to_string(spec.p)
                       + " (" + std::to_string(above.size()) + " primes)");
        PrimeIdeal const & q = above[spec.index];
        for (auto const & x : primes)
            if (x.same_prime(q))
                throw fail("duplicate ramified prime " + q.name());
        primes.push_back(q);
    }

    if ((ram_inf.size() + primes.size()) % 2)
        throw fail("parity violation: |Ram_inf| + |Ram_f| = " + std::to_string(ram_inf.size() + primes.size())
                   + " is odd");

    std::sort(ram_inf.begin(), ram_inf.end());
    std::stable_sort(primes.begin(), primes.end(), [](PrimeIdeal const & x, PrimeIdeal const & y) {
        return x.norm != y.norm ? x.norm < y.norm : (x.p != y.p ? x.p < y.p : x.index < y.index);
    });

    QuaternionAlgebra alg;
    alg.field_ = std::move(field);
    alg.label_ = std::move(label);
    alg.ram_inf_ = std::move(ram_inf);
    alg.ram_f_ = std::move(primes);
    return alg;
}

mpq_class phi_discriminant(std::vector<PrimeIdeal> const & ram_f)
{
    mpq_class phi = 1;
    for (auto const & q : ram_f)
        phi *= mpq_class(q.norm) * (1 - mpq_class(1, q.norm));
    return phi;
}

mpq_class phi_discriminant(QuaternionAlgebra const & alg)
{
    return phi_discriminant(alg.ram_f());
}

int omega2(QuaternionAlgebra const & alg)
{
    return static_cast<int>(
        std::count_if(alg.ram_f().begin(), alg.ram_f().end(), [](PrimeIdeal const & q) { return q.norm == 2; }));
}

TypeNumberBound type_number_bound(NumberField const & k)
{
    TypeNumberBound t;
    mpz_mul_2exp(t.coarse.get_mpz_t(), k.h_k().get_mpz_t(), k.r1());
    t.refined = 242.0 * std::pow(1.22, k.r1()) * std::pow(k.d_k().get_d(), 0.75);
    return t;
}

TypeNumberBound type_number_bound(QuaternionAlgebra const & alg)
{
    return type_number_bound(alg.field());
}

} // namespace arithvol
