#include "arithvol/numfield.hpp"
#include "arithvol/fp_poly.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

namespace arithvol {

std::string PrimeIdeal::name() const
{
    std::string s = "(" + std::to_string(p);
    if (residue_factor.empty())
        return s + ")#" + std::to_string(index);
    ZPoly g;
    for (auto c : residue_factor)
        g.emplace_back(static_cast<unsigned long>(c));
    return s + ", " + to_string(g) + ")" + (e > 1 ? "^" + std::to_string(e) : "");
}

static std::string join(std::vector<std::string> const & v)
{
    std::string s;
    for (auto const & x : v)
        s += (s.empty() ? "" : "; ") + x;
    return s;
}

invalid_field::invalid_field(std::string l, std::vector<std::string> p)
    : std::runtime_error("field '" + l + "' invalid: " + join(p))
    , label(std::move(l))
    , problems(std::move(p))
{
}

unsplittable_prime::unsplittable_prime(std::string const & label, std::uint64_t q)
    : std::runtime_error("field '" + label + "': index-divisor prime without certified splitting: p = "
                         + std::to_string(q))
    , p(q)
{
}

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

std::vector<std::uint64_t> rational_primes_up_to(std::uint64_t bound)
{
    std::vector<std::uint64_t> primes;
    if (bound < 2)
        return primes;
    std::vector<bool> composite(bound + 1, false);
    for (std::uint64_t i = 2; i <= bound; ++i) {
        if (composite[i])
            continue;
        primes.push_back(i);
        for (std::uint64_t j = i * i; j <= bound; j += i)
            composite[j] = true;
    }
    return primes;
}

NumberField validate_field(RawField const & raw0)
{
    RawField raw = raw0;
    normalize(raw.poly);
    std::vector<std::string> problems;
    int n = degree(raw.poly);

    bool poly_ok = true;
    if (n < 1) {
        problems.push_back("polynomial has degree < 1");
        poly_ok = false;
    } else if (!is_monic(raw.poly)) {
        problems.push_back("polynomial is not monic");
        poly_ok = false;
    } else if (!is_squarefree(raw.poly)) {
        problems.push_back("polynomial is not squarefree");
        poly_ok = false;
    }

    if (raw.r1 < 0 || raw.r2 < 0)
        problems.push_back("negative signature entry");
    else if (n >= 1 && raw.r1 + 2 * raw.r2 != n)
        problems.push_back("degree mismatch: n = " + std::to_string(n) + " but r1 + 2 r2 = "
                           + std::to_string(raw.r1 + 2 * raw.r2));

    mpz_class disc = 0;
    if (poly_ok) {
        Signature sig = signature(raw.poly);
        if (sig.r1 != raw.r1 || sig.r2 != raw.r2)
            problems.push_back("signature mismatch: Sturm count gives (" + std::to_string(sig.r1) + ", "
                               + std::to_string(sig.r2) + "), record says (" + std::to_string(raw.r1) + ", "
                               + std::to_string(raw.r2) + ")");
        disc = discriminant(raw.poly);
        int expected_sign = (raw.r2 & 1) ? -1 : 1;
        if (sgn(disc) != expected_sign)
            problems.push_back("discriminant sign mismatch: disc(f) = " + disc.get_str()
                               + " but (-1)^r2 = " + std::to_string(expected_sign));
    }

    if (raw.d_k < 1)
        problems.push_back("d_k must be a positive integer");
    if (raw.index_sq < 1) {
        problems.push_back("index_sq must be a positive integer");
    } else {
        if (!mpz_perfect_square_p(raw.index_sq.get_mpz_t()))
            problems.push_back("index_sq = " + raw.index_sq.get_str() + " is not a perfect square");
        if (poly_ok && raw.d_k >= 1 && abs(disc) != raw.index_sq * raw.d_k)
            problems.push_back("discriminant mismatch: |disc(f)| = " + mpz_class(abs(disc)).get_str()
                               + " but index_sq * d_k = " + mpz_class(raw.index_sq * raw.d_k).get_str());
    }

    if (raw.h_k < 1)
        problems.push_back("h_k must be >= 1");
    if (raw.omega_k < 2 || (raw.omega_k & 1))
        problems.push_back("omega_k must be even and >= 2");
    if (!(raw.reg_k > 0) || !std::isfinite(raw.reg_k))
        problems.push_back("reg_k must be positive");

    for (auto const & [p, entries] : raw.bad_prime_splittings) {
        std::string where = "splitting data for p = " + std::to_string(p);
        if (!is_prime(p)) {
            problems.push_back(where + ": not a prime");
            continue;
        }
        int total = 0;
        bool bad = entries.empty();
        for (auto const & s : entries) {
            if (s.e < 1 || s.f < 1)
                bad = true;
            total += s.e * s.f;
        }
        if (bad)
            problems.push_back(where + ": entries need e >= 1 and f >= 1");
        else if (total != n)
            problems.push_back(where + ": sum of e*f is " + std::to_string(total) + ", expected "
                               + std::to_string(n));
    }

    if (!problems.empty())
        throw invalid_field(raw.label, std::move(problems));
    return NumberField(std::move(raw), std::move(disc));
}

bool NumberField::index_divisible_by(std::uint64_t p) const
{
    return mpz_divisible_ui_p(raw_.index_sq.get_mpz_t(), p) != 0;
}

std::vector<PrimeIdeal> split_prime(NumberField const & k, std::uint64_t p)
{
    if (!is_prime(p))
        throw std::invalid_argument("split_prime: " + std::to_string(p) + " is not prime");
    std::vector<PrimeIdeal> out;
    auto const & bad = k.raw().bad_prime_splittings;
    if (auto it = bad.find(p); it != bad.end()) {
        for (auto const & s : it->second) {
            PrimeIdeal q;
            q.p = p;
            q.e = s.e;
            q.f = s.f;
            mpz_ui_pow_ui(q.norm.get_mpz_t(), p, s.f);
            out.push_back(std::move(q));
        }
        std::stable_sort(out.begin(), out.end(), [](PrimeIdeal const & a, PrimeIdeal const & b) {
            return a.f != b.f ? a.f < b.f : a.e < b.e;
        });
    } else {
        if (k.index_divisible_by(p))
            throw unsplittable_prime(k.label(), p);
        for (auto & [g, mult] : factor(FpPoly::reduce(p, k.poly()))) {
            PrimeIdeal q;
            q.p = p;
            q.e = mult;
            q.f = g.degree();
            mpz_ui_pow_ui(q.norm.get_mpz_t(), p, q.f);
            q.residue_factor = g.coefficients();
            out.push_back(std::move(q));
        }
    }
    int index = 0;
    for (auto & q : out)
        q.index = index++;
    return out;
}

std::vector<PrimeIdeal> primes_up_to(NumberField const & k, std::uint64_t bound)
{
    std::vector<PrimeIdeal> all;
    for (auto p : rational_primes_up_to(bound))
        for (auto & q : split_prime(k, p))
            all.push_back(std::move(q));
    std::stable_sort(all.begin(), all.end(),
                     [](PrimeIdeal const & a, PrimeIdeal const & b) { return a.norm < b.norm; });
    return all;
}

double zeta_tail_majorant(std::uint64_t prime_bound, double s)
{
    auto P = BoundedValue::exact(mpz_class(static_cast<unsigned long>(prime_bound)));
    if (s == 2.0)
        return (BoundedValue::point(1.0) / P).hi;
    auto one = BoundedValue::point(1.0);
    auto tail = pow(P, 1.0 - s)
        / ((BoundedValue::point(s) - one) * (one - pow(BoundedValue::point(2.0), -s)));
    return tail.hi;
}

BoundedValue dedekind_zeta(NumberField const & k, double s, std::uint64_t prime_bound)
{
    if (!(s > 1))
        throw std::domain_error("dedekind_zeta: s must be > 1");
    if (prime_bound < 2)
        throw std::domain_error("dedekind_zeta: prime bound must be >= 2");

    auto const one = BoundedValue::point(1.0);
    BoundedValue product = one;
    for (auto const & q : primes_up_to(k, prime_bound)) {
        BoundedValue factor;
        if (s == 2.0) {
            mpz_class n2 = q.norm * q.norm;
            factor = BoundedValue::exact(mpq_class(n2, n2 - 1));
        } else {
            factor = one / (one - pow(BoundedValue::exact(q.norm), -s));
        }
        product = product * factor;
    }
    double tail = zeta_tail_majorant(prime_bound, s);
    auto growth = exp(BoundedValue::point(k.degree()) * BoundedValue::point(tail));
    /* each omitted Euler factor is >= 1, so the truncated product is a
     * lower bound */
    return {std::max(1.0, product.lo), (product * growth).hi};
}

std::uint64_t count_ideals(NumberField const & k, double x)
{
    if (!(x >= 1))
        return 0;
    auto bound = static_cast<std::uint64_t>(std::floor(x));
    std::vector<std::uint64_t> norms;
    for (auto const & q : primes_up_to(k, bound))
        if (q.norm <= bound)
            norms.push_back(q.norm.get_ui());

    std::function<std::uint64_t(size_t, std::uint64_t)> dfs = [&](size_t i, std::uint64_t rem) {
        std::uint64_t c = 1;
        for (size_t j = i; j < norms.size() && norms[j] <= rem; ++j)
            for (std::uint64_t q = norms[j]; q <= rem; q *= norms[j]) {
                c += dfs(j + 1, rem / q);
                if (q > rem / norms[j])
                    break;
            }
        return c;
    };
    return dfs(0, bound);
}

} // namespace arithvol
