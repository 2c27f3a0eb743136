#pragma once

#include "arithvol/bounded_value.hpp"
#include "arithvol/quatalg.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace arithvol {

struct CovolumeInputs {
    mpz_class d_k;
    int s = 0;
    int r1 = 0;
    int r2 = 0;
    mpq_class phi;
};

struct CovolumeResult {
    BoundedValue value;
    CovolumeInputs inputs;
};

/*
 * vol(H / Gamma^1_O) = 2 (4 pi)^s d_k^{3/2} zeta_k(2) Phi(D) / ((4 pi^2)^{r1} (8 pi^2)^{r2})
 * evaluated over the zeta_k(2) enclosure.
 */
CovolumeResult covolume_gamma1(QuaternionAlgebra const & alg, BoundedValue const & zeta2);

/* d_k^{3/2} / ((4 pi^2)^{r1} (8 pi^2)^{r2}), the covolume floor obtained
 * from zeta_k(2), Phi(D), (4 pi)^s >= 1 */
BoundedValue covolume_floor(NumberField const & k);

/* 2^{n + |Ram_f|} h_k, an upper bound for [Gamma_O : Gamma^1_O] */
mpz_class index_bound_gamma(QuaternionAlgebra const & alg);

struct MinimalCovolumeBound {
    BoundedValue exact_form;   // covolume_gamma1 / index_bound_gamma
    double simplified = 0;     // d_k^{3/4} / 75^n
    bool contract_holds = false;   // exact_form.lo >= simplified
};

MinimalCovolumeBound minimal_covolume_lower(QuaternionAlgebra const & alg, BoundedValue const & zeta2);

/* A set S of finite primes disjoint from Ram_f. */
struct SLevelSet {
    std::vector<PrimeIdeal> primes;

    /* the unknown exponent m lies in [0, max_m()] */
    int max_m() const { return static_cast<int>(primes.size()); }
};

struct invalid_s_set : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/* checks distinctness and disjointness from Ram_f */
SLevelSet make_s_level_set(QuaternionAlgebra const & alg, std::vector<PrimeIdeal> primes);

struct IndexInterval {
    mpq_class lo;   // m = |S|
    mpq_class hi;   // m = 0
};

/* range of [Gamma_O : Gamma_{S,O}] = 2^{-m} prod_{p in S} (N(p) + 1) */
IndexInterval gamma_S_index_interval(SLevelSet const & S);

struct SEnumeration {
    mpz_class count;
    std::vector<SLevelSet> sets;       // at most `limit` of them
    bool truncated = false;
    int free_norm2_primes = 0;         // norm-2 primes outside Ram_f
};

inline constexpr std::size_t default_s_set_limit = 10000;

/*
 * All finite sets S of primes outside Ram_f with
 * prod_{p in S, N(p) != 2} N(p) <= x.  Norm-2 primes enter freely.
 */
SEnumeration enumerate_S_sets(QuaternionAlgebra const & alg, double x,
                              std::size_t limit = default_s_set_limit);

} // namespace arithvol
