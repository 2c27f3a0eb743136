#include "arithvol/corpus.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace arithvol {

using json = nlohmann::json;

namespace {

std::string describe(std::vector<CorpusIssue> const & issues)
{
    std::string s = "corpus validation failed:";
    for (auto const & i : issues)
        s += "\n  " + i.location + (i.label.empty() ? "" : " '" + i.label + "'") + ": " + i.message;
    return s;
}

[[noreturn]] void parse_fail(std::string const & where, std::string const & what)
{
    throw corpus_parse_error(where + ": " + what);
}

mpz_class to_mpz(json const & v, std::string const & where)
{
    if (v.is_number_integer())
        return v.is_number_unsigned() ? mpz_class(std::to_string(v.get<std::uint64_t>()))
                                      : mpz_class(std::to_string(v.get<std::int64_t>()));
    if (v.is_string()) {
        mpz_class z;
        if (z.set_str(v.get<std::string>(), 10) == 0)
            return z;
    }
    parse_fail(where, "expected an integer (number or decimal string)");
}

int to_int(json const & v, std::string const & where)
{
    if (!v.is_number_integer())
        parse_fail(where, "expected an integer");
    auto x = v.get<std::int64_t>();
    if (x < -(1 << 30) || x > (1 << 30))
        parse_fail(where, "integer out of range");
    return static_cast<int>(x);
}

json const & require(json const & obj, char const * key, std::string const & where)
{
    auto it = obj.find(key);
    if (it == obj.end())
        parse_fail(where, std::string("missing key '") + key + "'");
    return *it;
}

void check_keys(json const & obj, std::set<std::string> const & known, std::string const & where, bool strict,
                std::vector<std::string> & warnings)
{
    for (auto const & [key, value] : obj.items()) {
        if (known.count(key))
            continue;
        std::string msg = where + ": unknown key '" + key + "'";
        if (strict)
            throw corpus_parse_error(msg);
        warnings.push_back(msg);
    }
}

RawField parse_field(json const & obj, std::string const & where, bool strict, std::vector<std::string> & warnings)
{
    if (!obj.is_object())
        parse_fail(where, "expected an object");
    check_keys(obj,
               {"label", "poly", "r1", "r2", "d_k", "h_k", "reg_k", "omega_k", "index_sq", "bad_prime_splittings"},
               where, strict, warnings);
    RawField f;
    auto const & label = require(obj, "label", where);
    if (!label.is_string())
        parse_fail(where + ".label", "expected a string");
    f.label = label.get<std::string>();

    auto const & poly = require(obj, "poly", where);
    if (!poly.is_array())
        parse_fail(where + ".poly", "expected a coefficient list, constant term first");
    for (size_t i = 0; i < poly.size(); ++i)
        f.poly.push_back(to_mpz(poly[i], where + ".poly[" + std::to_string(i) + "]"));

    f.r1 = to_int(require(obj, "r1", where), where + ".r1");
    f.r2 = to_int(require(obj, "r2", where), where + ".r2");
    f.d_k = to_mpz(require(obj, "d_k", where), where + ".d_k");
    f.h_k = to_mpz(require(obj, "h_k", where), where + ".h_k");
    auto const & reg = require(obj, "reg_k", where);
    if (!reg.is_number())
        parse_fail(where + ".reg_k", "expected a number");
    f.reg_k = reg.get<double>();
    f.omega_k = to_int(require(obj, "omega_k", where), where + ".omega_k");
    if (obj.contains("index_sq"))
        f.index_sq = to_mpz(obj["index_sq"], where + ".index_sq");

    if (obj.contains("bad_prime_splittings")) {
        auto const & bad = obj["bad_prime_splittings"];
        std::string w = where + ".bad_prime_splittings";
        if (!bad.is_object())
            parse_fail(w, "expected an object keyed by rational prime");
        for (auto const & [key, entries] : bad.items()) {
            std::uint64_t p = 0;
            try {
                size_t used = 0;
                p = std::stoull(key, &used);
                if (used != key.size())
                    throw std::invalid_argument(key);
            } catch (std::exception const &) {
                parse_fail(w, "key '" + key + "' is not a rational prime");
            }
            if (!entries.is_array())
                parse_fail(w + "." + key, "expected a list of {e, f}");
            std::vector<SplittingEntry> list;
            for (auto const & e : entries) {
                if (!e.is_object())
                    parse_fail(w + "." + key, "expected {e, f} objects");
                check_keys(e, {"e", "f"}, w + "." + key, strict, warnings);
                list.push_back({to_int(require(e, "e", w), w + ".e"), to_int(require(e, "f", w), w + ".f")});
            }
            f.bad_prime_splittings[p] = std::move(list);
        }
    }
    return f;
}

RawAlgebra parse_algebra(json const & obj, std::string const & where, bool strict,
                         std::vector<std::string> & warnings)
{
    if (!obj.is_object())
        parse_fail(where, "expected an object");
    check_keys(obj, {"label", "field", "ram_inf", "ram_f"}, where, strict, warnings);
    RawAlgebra a;
    auto const & label = require(obj, "label", where);
    auto const & field = require(obj, "field", where);
    if (!label.is_string() || !field.is_string())
        parse_fail(where, "label and field must be strings");
    a.label = label.get<std::string>();
    a.field = field.get<std::string>();
    if (obj.contains("ram_inf")) {
        if (!obj["ram_inf"].is_array())
            parse_fail(where + ".ram_inf", "expected a list of real place indices");
        for (auto const & v : obj["ram_inf"])
            a.ram_inf.push_back(to_int(v, where + ".ram_inf"));
    }
    if (obj.contains("ram_f")) {
        if (!obj["ram_f"].is_array())
            parse_fail(where + ".ram_f", "expected a list of [p, index] pairs");
        for (auto const & v : obj["ram_f"]) {
            if (!v.is_array() || v.size() != 2)
                parse_fail(where + ".ram_f", "expected [p, index] pairs");
            int p = to_int(v[0], where + ".ram_f");
            if (p < 2)
                parse_fail(where + ".ram_f", "prime must be >= 2");
            a.ram_f.push_back({static_cast<std::uint64_t>(p), to_int(v[1], where + ".ram_f")});
        }
    }
    return a;
}

} // namespace

corpus_validation_error::corpus_validation_error(std::vector<CorpusIssue> i)
    : std::runtime_error(describe(i))
    , issues(std::move(i))
{
}

FieldPtr CorpusFile::find_field(std::string const & label) const
{
    for (auto const & f : fields)
        if (f->label() == label)
            return f;
    return nullptr;
}

QuaternionAlgebra const * CorpusFile::find_algebra(std::string const & label) const
{
    for (auto const & a : algebras)
        if (a.label() == label)
            return &a;
    return nullptr;
}

CorpusFile parse_corpus(json const & doc, bool strict)
{
    if (!doc.is_object())
        throw corpus_parse_error("corpus: top level must be an object");
    CorpusFile corpus;
    check_keys(doc, {"version", "fields", "algebras"}, "corpus", strict, corpus.warnings);
    auto const & version = require(doc, "version", "corpus");
    if (!version.is_string())
        parse_fail("corpus.version", "expected a string");
    corpus.version = version.get<std::string>();
    if (corpus.version != corpus_format_version)
        throw corpus_parse_error("corpus.version: unsupported format version '" + corpus.version + "'");

    auto const & fields = require(doc, "fields", "corpus");
    if (!fields.is_array())
        parse_fail("corpus.fields", "expected a list");

    std::vector<CorpusIssue> issues;
    std::set<std::string> labels;
    for (size_t i = 0; i < fields.size(); ++i) {
        std::string where = "fields[" + std::to_string(i) + "]";
        RawField raw = parse_field(fields[i], where, strict, corpus.warnings);
        if (!labels.insert(raw.label).second) {
            issues.push_back({where, raw.label, "duplicate label"});
            continue;
        }
        try {
            corpus.fields.push_back(std::make_shared<NumberField const>(validate_field(raw)));
        } catch (invalid_field const & e) {
            for (auto const & p : e.problems)
                issues.push_back({where, raw.label, p});
        }
    }

    if (doc.contains("algebras")) {
        auto const & algebras = doc["algebras"];
        if (!algebras.is_array())
            parse_fail("corpus.algebras", "expected a list");
        for (size_t i = 0; i < algebras.size(); ++i) {
            std::string where = "algebras[" + std::to_string(i) + "]";
            RawAlgebra raw = parse_algebra(algebras[i], where, strict, corpus.warnings);
            if (!labels.insert(raw.label).second) {
                issues.push_back({where, raw.label, "duplicate label"});
                continue;
            }
            FieldPtr field = corpus.find_field(raw.field);
            if (!field) {
                issues.push_back({where, raw.label, "unknown or invalid field '" + raw.field + "'"});
                continue;
            }
            try {
                corpus.algebras.push_back(validate_algebra(field, raw.ram_inf, raw.ram_f, raw.label));
                corpus.raw_algebras.push_back(raw);
            } catch (std::exception const & e) {
                issues.push_back({where, raw.label, e.what()});
            }
        }
    }

    if (!issues.empty())
        throw corpus_validation_error(std::move(issues));
    return corpus;
}

CorpusFile ingest_corpus(std::string const & path, bool strict)
{
    std::ifstream in(path);
    if (!in)
        throw corpus_parse_error(path + ": cannot open corpus file");
    json doc;
    try {
        doc = json::parse(in);
    } catch (json::parse_error const & e) {
        throw corpus_parse_error(path + ": " + e.what());
    }
    return parse_corpus(doc, strict);
}

nlohmann::ordered_json normalized_corpus(CorpusFile const & corpus)
{
    using ojson = nlohmann::ordered_json;
    auto integer = [](mpz_class const & z) -> ojson {
        if (mpz_fits_slong_p(z.get_mpz_t()))
            return z.get_si();
        return z.get_str();
    };
    ojson out;
    out["version"] = corpus.version;
    out["fields"] = ojson::array();
    for (auto const & f : corpus.fields) {
        auto const & raw = f->raw();
        ojson j;
        j["label"] = raw.label;
        j["poly"] = ojson::array();
        for (auto const & c : raw.poly)
            j["poly"].push_back(integer(c));
        j["r1"] = raw.r1;
        j["r2"] = raw.r2;
        j["d_k"] = integer(raw.d_k);
        j["h_k"] = integer(raw.h_k);
        j["reg_k"] = raw.reg_k;
        j["omega_k"] = raw.omega_k;
        j["index_sq"] = integer(raw.index_sq);
        if (!raw.bad_prime_splittings.empty()) {
            ojson bad = ojson::object();
            for (auto const & [p, entries] : raw.bad_prime_splittings) {
                ojson list = ojson::array();
                for (auto const & e : entries)
                    list.push_back({{"e", e.e}, {"f", e.f}});
                bad[std::to_string(p)] = list;
            }
            j["bad_prime_splittings"] = bad;
        }
        out["fields"].push_back(j);
    }
    out["algebras"] = ojson::array();
    for (auto const & a : corpus.raw_algebras) {
        ojson j;
        j["label"] = a.label;
        j["field"] = a.field;
        j["ram_inf"] = a.ram_inf;
        j["ram_f"] = ojson::array();
        for (auto const & r : a.ram_f)
            j["ram_f"].push_back({r.p, r.index});
        out["algebras"].push_back(j);
    }
    return out;
}

} // namespace arithvol
