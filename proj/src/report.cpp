#include "arithvol/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace arithvol::report {

namespace {

/* exact value of m * 10^e */
mpq_class decimal_value(mpz_class const & m, long e)
{
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(e)));
    mpq_class q = e >= 0 ? mpq_class(m * p) : mpq_class(m, p);
    q.canonicalize();
    return q;
}

double round_positive(double x, int dir)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*e", significant_digits - 1, x);
    /* buf = "d.ddddddddddde+XX" */
    std::string s(buf);
    auto epos = s.find('e');
    std::string digits = s.substr(0, 1) + s.substr(2, epos - 2);
    long exponent = std::strtol(s.c_str() + epos + 1, nullptr, 10) - (significant_digits - 1);
    mpz_class m(digits, 10);
    mpq_class exact(x);
    mpq_class value = decimal_value(m, exponent);

    mpz_class const lo_m = mpz_class("1" + std::string(significant_digits - 1, '0'), 10);
    mpz_class const hi_m = lo_m * 10;
    if (dir < 0 && value > exact) {
        m -= 1;
        if (m < lo_m) {
            m = hi_m - 1;
            exponent -= 1;
        }
    } else if (dir > 0 && value < exact) {
        m += 1;
        if (m >= hi_m) {
            m = lo_m;
            exponent += 1;
        }
    }
    std::string out = m.get_str() + "e" + std::to_string(exponent);
    return std::strtod(out.c_str(), nullptr);
}

} // namespace

double round_sig(double x, int dir)
{
    if (x == 0 || !std::isfinite(x))
        return x;
    if (x < 0)
        return -round_positive(-x, -dir);
    return round_positive(x, dir);
}

ojson number(double x)
{
    if (!std::isfinite(x))
        return std::isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf");
    return round_sig(x);
}

ojson integer(mpz_class const & z)
{
    if (mpz_fits_slong_p(z.get_mpz_t()))
        return z.get_si();
    return z.get_str();
}

ojson rational(mpq_class const & q)
{
    if (q.get_den() == 1)
        return integer(q.get_num());
    return q.get_str();
}

ojson interval(BoundedValue const & v)
{
    return ojson::array({round_sig(v.lo, -1), round_sig(v.hi, 1)});
}

ojson chain_to_json(ChainReport const & rep)
{
    ojson j;
    j["chain"] = rep.chain;
    j["field"] = rep.field_label;
    j["algebra"] = rep.algebra_label;
    j["volume"] = number(rep.volume);
    j["config"] = {{"C", number(rep.config.C)},
                   {"C1", number(rep.config.C1)},
                   {"gamma", number(rep.config.gamma_euler)},
                   {"epsilon", number(rep.config.epsilon)},
                   {"prime_bound", rep.config.prime_bound}};
    ojson links = ojson::array();
    for (auto const & l : rep.links) {
        ojson x;
        x["name"] = l.name;
        x["description"] = l.description;
        x["lhs"] = number(l.lhs);
        x["relation"] = to_string(l.relation);
        x["rhs"] = number(l.rhs);
        x["slack"] = round_sig(l.slack, 1);
        x["holds"] = l.holds;
        x["in_range"] = l.in_range;
        if (!l.note.empty())
            x["note"] = l.note;
        links.push_back(x);
    }
    j["links"] = links;
    ojson q = ojson::object();
    for (auto const & [k, v] : rep.quantities)
        q[k] = number(v);
    j["quantities"] = q;
    j["notes"] = rep.notes;
    j["verdict"] = rep.verdict();
    j["verdict_in_range"] = rep.verdict_in_range();
    j["flagged"] = rep.flagged();
    return j;
}

namespace {

std::string scalar(ojson const & v)
{
    if (v.is_string())
        return v.get<std::string>();
    return v.dump();
}

void flatten(ojson const & v, std::string const & path, std::vector<std::pair<std::string, std::string>> & rows)
{
    if (v.is_object()) {
        if (v.empty())
            rows.emplace_back(path, "{}");
        for (auto const & [k, x] : v.items())
            flatten(x, path.empty() ? k : path + "." + k, rows);
    } else if (v.is_array()) {
        bool leaf_pair = v.size() == 2 && v[0].is_number() && v[1].is_number();
        if (leaf_pair || v.empty()) {
            rows.emplace_back(path, v.dump());
            return;
        }
        for (size_t i = 0; i < v.size(); ++i)
            flatten(v[i], path + "[" + std::to_string(i) + "]", rows);
    } else {
        rows.emplace_back(path, scalar(v));
    }
}

std::string csv_field(std::string const & s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"')
            q += '"';
        q += c;
    }
    return q + "\"";
}

} // namespace

std::string render(ojson const & doc, Format format)
{
    if (format == Format::json)
        return doc.dump(2) + "\n";
    std::vector<std::pair<std::string, std::string>> rows;
    flatten(doc, "", rows);
    std::string out;
    if (format == Format::csv) {
        out = "path,value\n";
        for (auto const & [k, v] : rows)
            out += csv_field(k) + "," + csv_field(v) + "\n";
    } else {
        for (auto const & [k, v] : rows)
            out += k + " = " + v + "\n";
    }
    return out;
}

} // namespace arithvol::report
