#include "arithvol/poly.hpp"

#include <utility>

namespace arithvol {

int degree(ZPoly const & f)
{
    return static_cast<int>(f.size()) - 1;
}

int degree(QPoly const & f)
{
    return static_cast<int>(f.size()) - 1;
}

void normalize(ZPoly & f)
{
    while (!f.empty() && f.back() == 0)
        f.pop_back();
}

void normalize(QPoly & f)
{
    while (!f.empty() && f.back() == 0)
        f.pop_back();
}

QPoly to_rational(ZPoly const & f)
{
    QPoly r(f.begin(), f.end());
    normalize(r);
    return r;
}

QPoly derivative(QPoly const & f)
{
    QPoly d;
    for (size_t i = 1; i < f.size(); ++i)
        d.push_back(f[i] * static_cast<unsigned long>(i));
    normalize(d);
    return d;
}

ZPoly derivative(ZPoly const & f)
{
    ZPoly d;
    for (size_t i = 1; i < f.size(); ++i)
        d.push_back(f[i] * static_cast<unsigned long>(i));
    normalize(d);
    return d;
}

void divmod(QPoly const & a, QPoly const & b, QPoly & q, QPoly & r)
{
    if (b.empty())
        throw polynomial_error("polynomial division by zero");
    r = a;
    normalize(r);
    int db = degree(b);
    q.assign(std::max(0, degree(r) - db + 1), 0);
    while (degree(r) >= db) {
        int shift = degree(r) - db;
        mpq_class c = r.back() / b.back();
        q[shift] = c;
        for (int i = 0; i <= db; ++i)
            r[shift + i] -= c * b[i];
        /* the leading term cancels exactly */
        r.pop_back();
        normalize(r);
    }
    normalize(q);
}

QPoly remainder(QPoly const & a, QPoly const & b)
{
    QPoly q, r;
    divmod(a, b, q, r);
    return r;
}

QPoly gcd(QPoly a, QPoly b)
{
    normalize(a);
    normalize(b);
    while (!b.empty()) {
        QPoly r = remainder(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        mpq_class lc = a.back();
        for (auto & c : a)
            c /= lc;
    }
    return a;
}

bool is_monic(ZPoly const & f)
{
    return !f.empty() && f.back() == 1;
}

bool is_squarefree(ZPoly const & f)
{
    QPoly q = to_rational(f);
    return degree(gcd(q, derivative(q))) == 0;
}

mpq_class resultant(QPoly const & a0, QPoly const & b0)
{
    QPoly a = a0, b = b0;
    normalize(a);
    normalize(b);
    if (a.empty() || b.empty())
        return 0;
    mpq_class acc = 1;
    for (;;) {
        int da = degree(a), db = degree(b);
        if (db == 0) {
            mpq_class p = 1;
            for (int i = 0; i < da; ++i)
                p *= b[0];
            return acc * p;
        }
        QPoly r = remainder(a, b);
        if (r.empty())
            return 0;
        /* Res(a,b) = (-1)^{da db} lc(b)^{da - dr} Res(b, r) */
        if ((da & 1) && (db & 1))
            acc = -acc;
        for (int i = 0; i < da - degree(r); ++i)
            acc *= b.back();
        a = std::move(b);
        b = std::move(r);
    }
}

mpz_class discriminant(ZPoly const & f0)
{
    ZPoly f = f0;
    normalize(f);
    int n = degree(f);
    if (n < 1)
        throw polynomial_error("discriminant of a constant polynomial");
    if (n == 1)
        return 1;
    QPoly q = to_rational(f);
    mpq_class d = resultant(q, derivative(q)) / q.back();
    if ((n * (n - 1) / 2) & 1)
        d = -d;
    if (d.get_den() != 1)
        throw std::logic_error("discriminant is not an integer");
    return d.get_num();
}

std::vector<QPoly> sturm_chain(ZPoly const & f)
{
    std::vector<QPoly> chain;
    chain.push_back(to_rational(f));
    chain.push_back(derivative(chain[0]));
    while (!chain.back().empty() && degree(chain.back()) > 0) {
        QPoly r = remainder(chain[chain.size() - 2], chain.back());
        if (r.empty())
            break;
        for (auto & c : r)
            c = -c;
        chain.push_back(std::move(r));
    }
    return chain;
}

namespace {

/* sign changes of the chain at +infinity (at_plus) or -infinity */
int sign_changes_at_infinity(std::vector<QPoly> const & chain, bool at_plus)
{
    int changes = 0, last = 0;
    for (auto const & p : chain) {
        if (p.empty())
            continue;
        int s = sgn(p.back());
        if (!at_plus && (degree(p) & 1))
            s = -s;
        if (last != 0 && s != last)
            ++changes;
        last = s;
    }
    return changes;
}

} // namespace

int count_real_roots(ZPoly const & f)
{
    auto chain = sturm_chain(f);
    return sign_changes_at_infinity(chain, false) - sign_changes_at_infinity(chain, true);
}

Signature signature(ZPoly const & f0)
{
    ZPoly f = f0;
    normalize(f);
    if (degree(f) < 1)
        throw polynomial_error("polynomial has degree < 1");
    if (!is_monic(f))
        throw polynomial_error("polynomial is not monic");
    if (!is_squarefree(f))
        throw polynomial_error("polynomial is not squarefree");
    int r1 = count_real_roots(f);
    return {r1, (degree(f) - r1) / 2};
}

std::string to_string(ZPoly const & f, char var)
{
    if (f.empty())
        return "0";
    std::string s;
    for (int i = degree(f); i >= 0; --i) {
        mpz_class const & c = f[i];
        if (c == 0)
            continue;
        mpz_class a = abs(c);
        if (s.empty())
            s += c < 0 ? "-" : "";
        else
            s += c < 0 ? " - " : " + ";
        if (i == 0 || a != 1)
            s += a.get_str();
        if (i >= 1)
            s += var;
        if (i >= 2)
            s += "^" + std::to_string(i);
    }
    return s;
}

} // namespace arithvol
