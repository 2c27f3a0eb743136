#include "arithvol/covolume.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace arithvol {

namespace {

mpz_class pow_ui(unsigned long base, unsigned long e)
{
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, e);
    return r;
}

/* d^{3/2} */
BoundedValue d_three_halves(mpz_class const & d)
{
    return sqrt(BoundedValue::exact(mpz_class(d * d * d)));
}

} // namespace

CovolumeResult covolume_gamma1(QuaternionAlgebra const & alg, BoundedValue const & zeta2)
{
    NumberField const & k = alg.field();
    CovolumeResult res;
    res.inputs = {k.d_k(), alg.s(), k.r1(), k.r2(), phi_discriminant(alg)};

    /* rational part 2 4^s Phi / (4^{r1} 8^{r2}), then pi^{s - 2 r1 - 2 r2} */
    mpq_class rational = 2 * mpq_class(pow_ui(4, alg.s())) * res.inputs.phi
        / mpq_class(pow_ui(4, k.r1()) * pow_ui(8, k.r2()));
    rational.canonicalize();
    long pi_exponent = alg.s() - 2L * k.r1() - 2L * k.r2();

    res.value = BoundedValue::exact(rational) * d_three_halves(k.d_k())
        * pow(BoundedValue::pi(), pi_exponent) * zeta2;
    return res;
}

BoundedValue covolume_floor(NumberField const & k)
{
    mpq_class rational(1, pow_ui(4, k.r1()) * pow_ui(8, k.r2()));
    return BoundedValue::exact(rational) * d_three_halves(k.d_k())
        * pow(BoundedValue::pi(), -2L * (k.r1() + k.r2()));
}

mpz_class index_bound_gamma(QuaternionAlgebra const & alg)
{
    mpz_class r;
    mpz_mul_2exp(r.get_mpz_t(), alg.field().h_k().get_mpz_t(),
                 alg.field().degree() + alg.ram_f().size());
    return r;
}

MinimalCovolumeBound minimal_covolume_lower(QuaternionAlgebra const & alg, BoundedValue const & zeta2)
{
    NumberField const & k = alg.field();
    MinimalCovolumeBound m;
    m.exact_form = covolume_gamma1(alg, zeta2).value / BoundedValue::exact(index_bound_gamma(alg));
    m.simplified = std::pow(k.d_k().get_d(), 0.75) / std::pow(75.0, k.degree());
    m.contract_holds = m.exact_form.lo >= m.simplified;
    return m;
}

SLevelSet make_s_level_set(QuaternionAlgebra const & alg, std::vector<PrimeIdeal> primes)
{
    for (size_t i = 0; i < primes.size(); ++i) {
        if (alg.is_ramified(primes[i]))
            throw invalid_s_set("S contains the ramified prime " + primes[i].name());
        for (size_t j = 0; j < i; ++j)
            if (primes[i].same_prime(primes[j]))
                throw invalid_s_set("S lists " + primes[i].name() + " twice");
    }
    return SLevelSet{std::move(primes)};
}

IndexInterval gamma_S_index_interval(SLevelSet const & S)
{
    mpz_class hi = 1;
    for (auto const & q : S.primes)
        hi *= q.norm + 1;
    mpz_class two_m;
    mpz_ui_pow_ui(two_m.get_mpz_t(), 2, S.primes.size());
    mpq_class lo(hi, two_m);
    lo.canonicalize();
    return {lo, mpq_class(hi)};
}

SEnumeration enumerate_S_sets(QuaternionAlgebra const & alg, double x, std::size_t limit)
{
    SEnumeration out;
    if (!(x >= 1))
        return out;
    NumberField const & k = alg.field();
    auto bound = static_cast<std::uint64_t>(std::floor(std::min(x, 1e18)));

    std::vector<PrimeIdeal> free_primes, eligible;
    for (auto & q : primes_up_to(k, std::max<std::uint64_t>(bound, 2))) {
        if (alg.is_ramified(q))
            continue;
        if (q.norm == 2)
            free_primes.push_back(std::move(q));
        else if (q.norm <= bound)
            eligible.push_back(std::move(q));
    }
    out.free_norm2_primes = static_cast<int>(free_primes.size());
    std::uint64_t const free_subsets = std::uint64_t(1) << free_primes.size();

    std::vector<PrimeIdeal> current;
    mpz_class constrained = 0;
    auto materialize = [&] {
        for (std::uint64_t mask = 0; mask < free_subsets; ++mask) {
            if (out.sets.size() >= limit) {
                out.truncated = true;
                return;
            }
            SLevelSet S;
            for (size_t i = 0; i < free_primes.size(); ++i)
                if (mask >> i & 1)
                    S.primes.push_back(free_primes[i]);
            S.primes.insert(S.primes.end(), current.begin(), current.end());
            out.sets.push_back(std::move(S));
        }
    };

    std::function<void(size_t, std::uint64_t)> dfs = [&](size_t i, std::uint64_t rem) {
        ++constrained;
        materialize();
        for (size_t j = i; j < eligible.size() && eligible[j].norm <= rem; ++j) {
            current.push_back(eligible[j]);
            dfs(j + 1, rem / eligible[j].norm.get_ui());
            current.pop_back();
        }
    };
    dfs(0, bound);

    out.count = constrained * mpz_class(static_cast<unsigned long>(free_subsets));
    if (out.count > out.sets.size())
        out.truncated = true;
    return out;
}

} // namespace arithvol
