#pragma once

#include "arithvol/bounded_value.hpp"
#include "arithvol/covolume.hpp"
#include "arithvol/numfield.hpp"
#include "arithvol/quatalg.hpp"

#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace arithvol {

inline constexpr double euler_gamma = 0.57721566490153286061;

struct BoundsConfig {
    double C = 4.5;                      // constant in log d_k >= r1 + n(gamma + log 4 pi) - C
    double C1 = std::exp(4.5);           // V C1 >= d_k^{1/2}; always e^C
    double gamma_euler = euler_gamma;
    double epsilon = 0.5;
    double brauer_siegel_s = 1.5;
    std::uint64_t prime_bound = 10000;   // Euler product truncation for zeta values

    static BoundsConfig with_constant(double C);
    /* throws std::invalid_argument naming the broken invariant */
    void validate() const;
};

/* Gamma(x) for x > 0: exact closed forms at integers and half-integers,
 * std::tgamma elsewhere with a relative enclosure of gamma_rel_error */
inline constexpr double gamma_rel_error = 1e-12;
BoundedValue gamma_function(double x);

/*
 * omega_k s (s-1) Gamma(s)^{r2} Gamma(s/2)^{r1} zeta_k(s) d_k^{s/2}
 *   / (2^{r1} Reg_k 2^{r2 s} pi^{n s / 2})
 */
BoundedValue brauer_siegel_class_bound(NumberField const & k, double s, BoundedValue const & zeta_s);

struct CheckedBound {
    double value = 0;
    bool holds = false;    // the certified invariant respects the bound
};

/* 0.0031 omega_k exp(0.241 n + 0.497 r1); holds: Reg_k >= value */
CheckedBound friedman_regulator_lower(NumberField const & k);
/* 242 d_k^{3/4} / 1.64^{r1}; holds: h_k <= value */
CheckedBound class_number_bound(NumberField const & k);

struct OdlyzkoResult {
    bool holds = false;
    double minimal_C = 0;   // r1 + n (gamma + log 4 pi) - log d_k
    double lhs = 0;         // log d_k
    double rhs = 0;         // r1 + n (gamma + log 4 pi) - C
};

OdlyzkoResult odlyzko_check(NumberField const & k, BoundsConfig const & config);

/* (pi^2/6)^n X^2 */
double ideal_count_upper(int n, double x);

enum class Relation { less_equal, greater_equal };

char const * to_string(Relation r);

struct ChainLink {
    std::string name;
    std::string description;
    double lhs = 0;
    double rhs = 0;
    Relation relation = Relation::less_equal;
    double slack = 0;
    bool holds = false;
    /* false when a hypothesis of this step is not met for the given data;
     * holds is still the honest numeric verdict */
    bool in_range = true;
    std::string note;
};

/* lhs relation rhs up to slack = 1e-12 max(1, |lhs|, |rhs|) */
ChainLink make_link(std::string name, std::string description, double lhs, Relation rel, double rhs,
                    bool in_range = true, std::string note = {});

inline constexpr double chain_relative_slack = 1e-12;

struct ChainReport {
    std::string chain;
    std::vector<ChainLink> links;
    /* named intermediate values (thresholds, X, ratios) */
    std::map<std::string, double> quantities;
    std::vector<std::string> notes;
    double volume = 0;
    BoundsConfig config;
    std::string field_label;
    std::string algebra_label;

    bool verdict() const;            // every link holds
    bool verdict_in_range() const;   // every link whose hypotheses are met holds
    int flagged() const;             // links out of hypothesis range
    ChainLink const * find(std::string const & name) const;
};

ChainReport vigneras_chain(QuaternionAlgebra const & alg, double V, BoundsConfig const & config);
ChainReport minimal_chain(QuaternionAlgebra const & alg, double V, BoundsConfig const & config);
ChainReport maximal_chain(QuaternionAlgebra const & alg, double V, BoundsConfig const & config);

} // namespace arithvol
