#include "arithvol/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace arithvol {

BoundsConfig BoundsConfig::with_constant(double C)
{
    BoundsConfig c;
    c.C = C;
    c.C1 = std::exp(C);
    return c;
}

void BoundsConfig::validate() const
{
    if (!(C > 0))
        throw std::invalid_argument("BoundsConfig: C must be positive");
    if (!(std::abs(C1 - std::exp(C)) <= 1e-9 * std::exp(C)))
        throw std::invalid_argument("BoundsConfig: C1 must equal e^C");
    if (!(epsilon > 0))
        throw std::invalid_argument("BoundsConfig: epsilon must be positive");
    if (!(brauer_siegel_s > 1))
        throw std::invalid_argument("BoundsConfig: Brauer-Siegel point s must exceed 1");
    if (prime_bound < 2)
        throw std::invalid_argument("BoundsConfig: prime bound must be >= 2");
}

BoundedValue gamma_function(double x)
{
    if (!(x > 0))
        throw std::domain_error("gamma_function: argument must be positive");
    double twice = 2 * x;
    if (twice == std::floor(twice) && twice <= 60) {
        auto k = static_cast<unsigned long>(std::floor(x));
        if (x == std::floor(x)) {
            mpz_class f;
            mpz_fac_ui(f.get_mpz_t(), k - 1);
            return BoundedValue::exact(f);
        }
        /* Gamma(k + 1/2) = sqrt(pi) (2k)! / (4^k k!) */
        mpz_class num, den, kf;
        mpz_fac_ui(num.get_mpz_t(), 2 * k);
        mpz_fac_ui(kf.get_mpz_t(), k);
        mpz_ui_pow_ui(den.get_mpz_t(), 4, k);
        den *= kf;
        return sqrt(BoundedValue::pi()) * BoundedValue::exact(mpq_class(num, den));
    }
    return BoundedValue::point(std::tgamma(x)).widened_relative(gamma_rel_error);
}

BoundedValue brauer_siegel_class_bound(NumberField const & k, double s, BoundedValue const & zeta_s)
{
    if (!(s > 1))
        throw std::domain_error("brauer_siegel_class_bound: s must exceed 1");
    using BV = BoundedValue;
    int const n = k.degree(), r1 = k.r1(), r2 = k.r2();
    BV const S = BV::point(s);
    BV num = BV::point(k.omega_k()) * S * (S - BV::point(1.0)) * pow(gamma_function(s), long(r2))
        * pow(gamma_function(s / 2), long(r1)) * zeta_s * pow(BV::exact(k.d_k()), s / 2);
    BV den = pow(BV::point(2.0), long(r1)) * BV::point(k.reg_k()) * pow(BV::point(2.0), r2 * s)
        * pow(BV::pi(), n * s / 2);
    return num / den;
}

CheckedBound friedman_regulator_lower(NumberField const & k)
{
    double v = 0.0031 * k.omega_k() * std::exp(0.241 * k.degree() + 0.497 * k.r1());
    return {v, k.reg_k() >= v};
}

CheckedBound class_number_bound(NumberField const & k)
{
    double v = 242.0 * std::pow(k.d_k().get_d(), 0.75) / std::pow(1.64, k.r1());
    return {v, k.h_k().get_d() <= v};
}

OdlyzkoResult odlyzko_check(NumberField const & k, BoundsConfig const & config)
{
    OdlyzkoResult r;
    double logd = std::log(k.d_k().get_d());
    double main = k.r1() + k.degree() * (config.gamma_euler + std::log(4 * std::numbers::pi));
    r.lhs = logd;
    r.rhs = main - config.C;
    r.minimal_C = main - logd;
    r.holds = r.lhs >= r.rhs;
    return r;
}

double ideal_count_upper(int n, double x)
{
    if (n < 1)
        throw std::domain_error("ideal_count_upper: degree must be >= 1");
    if (x < 0)
        throw std::domain_error("ideal_count_upper: X must be >= 0");
    return std::pow(std::numbers::pi * std::numbers::pi / 6, n) * x * x;
}

char const * to_string(Relation r)
{
    return r == Relation::less_equal ? "<=" : ">=";
}

ChainLink make_link(std::string name, std::string description, double lhs, Relation rel, double rhs,
                    bool in_range, std::string note)
{
    ChainLink l;
    l.name = std::move(name);
    l.description = std::move(description);
    l.lhs = lhs;
    l.rhs = rhs;
    l.relation = rel;
    l.slack = chain_relative_slack * std::max({1.0, std::abs(lhs), std::abs(rhs)});
    if (std::isnan(lhs) || std::isnan(rhs))
        l.holds = false;
    else if (rel == Relation::less_equal)
        l.holds = lhs <= rhs + l.slack;
    else
        l.holds = lhs >= rhs - l.slack;
    l.in_range = in_range;
    l.note = std::move(note);
    return l;
}

bool ChainReport::verdict() const
{
    return std::all_of(links.begin(), links.end(), [](ChainLink const & l) { return l.holds; });
}

bool ChainReport::verdict_in_range() const
{
    return std::all_of(links.begin(), links.end(), [](ChainLink const & l) { return !l.in_range || l.holds; });
}

int ChainReport::flagged() const
{
    return static_cast<int>(std::count_if(links.begin(), links.end(), [](ChainLink const & l) { return !l.in_range; }));
}

ChainLink const * ChainReport::find(std::string const & name) const
{
    for (auto const & l : links)
        if (l.name == name)
            return &l;
    return nullptr;
}

namespace {

using enum Relation;

ChainReport start_report(char const * chain, QuaternionAlgebra const & alg, double V, BoundsConfig const & config)
{
    config.validate();
    if (!(V > 0) || !std::isfinite(V))
        throw std::domain_error(std::string(chain) + " chain: V must be positive");
    ChainReport rep;
    rep.chain = chain;
    rep.volume = V;
    rep.config = config;
    rep.field_label = alg.field().label();
    rep.algebra_label = alg.label();
    if (!alg.cocompact())
        rep.notes.push_back("B is unramified everywhere (B = M_2(k)); the lattices are not cocompact");
    if (alg.totally_definite())
        rep.notes.push_back("B is ramified at every archimedean place; there is no symmetric space");
    return rep;
}

std::string fmt(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

} // namespace

ChainReport vigneras_chain(QuaternionAlgebra const & alg, double V, BoundsConfig const & config)
{
    ChainReport rep = start_report("vigneras", alg, V, config);
    NumberField const & k = alg.field();
    int const r1 = k.r1();
    double const d = k.d_k().get_d();
    TypeNumberBound type = type_number_bound(k);

    rep.links.push_back(make_link("L1", "2^r1 h_k <= 242 (1.22)^r1 d_k^(3/4)", type.coarse.get_d(), less_equal,
                                  type.refined));

    double f_r1 = std::exp(4.0 * r1 - config.C);
    rep.quantities["f(r1)"] = f_r1;
    /* L2 follows from the discriminant bound with the configured C */
    OdlyzkoResult od = odlyzko_check(k, config);
    std::string od_note = od.holds ? ""
                                   : "discriminant bound with C = " + fmt(config.C)
            + " fails for this field (minimal C = " + fmt(od.minimal_C) + ")";
    auto L2 = make_link("L2", "log d_k >= 4 r1 - C  (d_k >= f(r1))", std::log(d), greater_equal, 4.0 * r1 - config.C,
                        od.holds, od_note);
    rep.links.push_back(L2);

    rep.quantities["(1.22)^r1"] = std::pow(1.22, r1);
    rep.quantities["f(r1)^(1/4)"] = std::pow(f_r1, 0.25);
    bool L3_range = r1 > 1 && L2.holds;
    std::string L3_note;
    if (r1 <= 1)
        L3_note = "outside the r1 > 1 hypothesis of (1.22)^r1 <= f(r1)^(1/4)";
    else if (!L2.holds)
        L3_note = "d_k >= f(r1) fails for this field";
    rep.links.push_back(make_link("L3", "242 (1.22)^r1 d_k^(3/4) <= 242 d_k", type.refined, less_equal, 242.0 * d,
                                  L3_range, L3_note));

    rep.links.push_back(make_link("L4", "V C1 >= d_k^(1/2)", V * config.C1, greater_equal, std::sqrt(d), od.holds,
                                  od_note));
    rep.links.push_back(make_link("L5", "242 d_k <= 242 C1^2 V^2", 242.0 * d, less_equal,
                                  242.0 * config.C1 * config.C1 * V * V, od.holds, od_note));

    double threshold = std::pow(242.0 * config.C1 * config.C1, 1.0 / config.epsilon);
    rep.quantities["V0"] = threshold;
    bool L6_range = V >= threshold;
    rep.links.push_back(make_link("L6", "242 C1^2 V^2 <= V^(2+epsilon), asymptotic: needs V >= V0",
                                  242.0 * config.C1 * config.C1 * V * V, less_equal, std::pow(V, 2 + config.epsilon),
                                  L6_range, L6_range ? "" : "asymptotic, not yet in range (V0 = " + fmt(threshold) + ")"));
    return rep;
}

ChainReport minimal_chain(QuaternionAlgebra const & alg, double V, BoundsConfig const & config)
{
    ChainReport rep = start_report("minimal", alg, V, config);
    NumberField const & k = alg.field();
    int const n = k.degree(), r1 = k.r1();
    double const d = k.d_k().get_d();

    BoundedValue zeta2 = dedekind_zeta(k, 2.0, config.prime_bound);
    MinimalCovolumeBound mcl = minimal_covolume_lower(alg, zeta2);
    rep.quantities["exact_form.lo"] = mcl.exact_form.lo;
    rep.quantities["exact_form.hi"] = mcl.exact_form.hi;
    rep.quantities["simplified"] = mcl.simplified;

    rep.links.push_back(make_link("M1", "V >= 2(4pi)^s d_k^(3/2) zeta_k(2) Phi(D) / ((4pi^2)^r1 (8pi^2)^r2 2^(n+|Ram_f|) h_k)",
                                  V, greater_equal, mcl.exact_form.lo));
    rep.links.push_back(make_link("M2", "V >= d_k^(3/4) / 75^n", V, greater_equal, mcl.simplified));

    /* n <= 3 log V is where the chain needs V large; when it fails the
     * remaining links are outside their domain */
    double v_needed = std::exp(n / 3.0);
    rep.quantities["e^(n/3)"] = v_needed;
    std::string short_note = V <= 1 ? "V <= 1 makes n <= 3 log V impossible; the chain requires larger V"
                                    : "3 log V < n; the chain requires V >= e^(n/3) = " + fmt(v_needed);
    auto M3 = make_link("M3", "n <= 3 log V", n, less_equal, 3 * std::log(V));
    if (!M3.holds) {
        M3.in_range = false;
        M3.note = short_note;
    }
    rep.links.push_back(M3);

    bool downstream = M3.holds;
    std::string down_note = downstream ? "" : short_note;
    rep.links.push_back(make_link("M4", "d_k <= V^22", d, less_equal, std::pow(V, 22), downstream, down_note));
    rep.links.push_back(make_link("M5", "242 (1.22)^r1 <= 242 V^(3/4)", 242.0 * std::pow(1.22, r1), less_equal,
                                  242.0 * std::pow(V, 0.75), downstream, down_note));
    rep.links.push_back(make_link("M6", "242 (1.22)^r1 d_k^(3/4) <= 242 V^18", type_number_bound(k).refined,
                                  less_equal, 242.0 * std::pow(V, 18), downstream, down_note));
    return rep;
}

ChainReport maximal_chain(QuaternionAlgebra const & alg, double V, BoundsConfig const & config)
{
    ChainReport rep = start_report("maximal", alg, V, config);
    NumberField const & k = alg.field();
    int const n = k.degree(), r1 = k.r1();
    double const d = k.d_k().get_d();
    double const zeta_rational = std::pow(std::numbers::pi * std::numbers::pi / 6, n);

    BoundedValue zeta2 = dedekind_zeta(k, 2.0, config.prime_bound);
    double const vprime[2] = {minimal_covolume_lower(alg, zeta2).exact_form.lo, covolume_gamma1(alg, zeta2).value.hi};
    rep.quantities["V'.lo"] = vprime[0];
    rep.quantities["V'.hi"] = vprime[1];

    double X = V * V * V / std::pow(d, 3.0 / 22);
    rep.quantities["X"] = X;
    SEnumeration sets = enumerate_S_sets(alg, X);
    double count = sets.count.get_d();
    double bound = ideal_count_upper(n, X);
    double with_norm2 = bound * std::ldexp(1.0, sets.free_norm2_primes);
    rep.quantities["S_count"] = count;
    rep.quantities["ideal_count_upper"] = bound;
    rep.quantities["K1_ratio"] = bound > 0 ? count / bound : 0;
    rep.quantities["norm2_primes_outside_Ram_f"] = sets.free_norm2_primes;
    rep.quantities["ideal_count_upper_with_norm2_factor"] = with_norm2;
    if (X < 1)
        rep.notes.push_back("degenerate X < 1: no set S qualifies");

    rep.links.push_back(make_link("K1", "#S-sets with prod_{N(p) != 2} N(p) <= X  <=  (pi^2/6)^n X^2", count,
                                  less_equal, bound));
    rep.links.push_back(make_link("K1b", "#S-sets <= 2^(#norm-2 primes outside Ram_f) (pi^2/6)^n X^2", count,
                                  less_equal, with_norm2));
    rep.links.push_back(make_link("K2",
                                  "242 (1.22)^r1 d_k^(3/4) #S-sets <= 242 (1.22)^r1 (pi^2/6)^n d_k^(21/44) V^6",
                                  type_number_bound(k).refined * count, less_equal,
                                  242.0 * std::pow(1.22, r1) * zeta_rational * std::pow(d, 21.0 / 44) * std::pow(V, 6)));

    char const * tag[2] = {"lo", "hi"};
    for (int i = 0; i < 2; ++i) {
        double vp = vprime[i];
        std::string suffix = std::string("[") + tag[i] + "]";
        auto K3 = make_link("K3" + suffix, "e^n <= V'^3", std::exp(double(n)), less_equal, vp * vp * vp);
        if (!K3.holds) {
            K3.in_range = false;
            K3.note = vp <= 1 ? "V' <= 1: 3 log V' >= n cannot hold; the chain requires larger V'"
                              : "3 log V' < n; the chain requires V' >= e^(n/3) = " + fmt(std::exp(n / 3.0));
        }
        rep.links.push_back(K3);
        rep.links.push_back(make_link("K4" + suffix, "d_k^(21/44) <= V'^(21/2)", std::pow(d, 21.0 / 44), less_equal,
                                      std::pow(vp, 10.5), K3.holds,
                                      K3.holds ? "" : "relies on 3 log V' >= n, which fails here"));
        bool K5_range = V >= 1 && vp <= V;
        std::string K5_note;
        if (V < 1)
            K5_note = "V < 1: V'^(27/2) V^6 <= V^20 needs V >= 1";
        else if (vp > V)
            K5_note = "V' > V: the step uses V' <= V";
        rep.links.push_back(make_link("K5" + suffix, "242 V'^(27/2) V^6 <= 242 V^20",
                                      242.0 * std::pow(vp, 13.5) * std::pow(V, 6), less_equal, 242.0 * std::pow(V, 20),
                                      K5_range, K5_note));
    }
    return rep;
}

} // namespace arithvol
