#include "arithvol/cli.hpp"
#include "arithvol/bounds.hpp"
#include "arithvol/corpus.hpp"
#include "arithvol/covolume.hpp"
#include "arithvol/report.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <numbers>
#include <optional>
#include <sstream>

namespace arithvol::cli {

using report::ojson;

std::string starter_corpus_path()
{
#ifdef ARITHVOL_STARTER_CORPUS
    return ARITHVOL_STARTER_CORPUS;
#else
    return "data/starter_corpus.json";
#endif
}

namespace {

struct Options {
    std::string corpus = starter_corpus_path();
    std::string label;
    std::string algebra;
    std::uint64_t prime_bound = 10000;
    std::optional<double> volume;
    double epsilon = 0.5;
    double constant_C = 4.5;
    bool strict = false;
    std::string format = "json";
    std::optional<double> s;
    std::vector<double> xs;
    std::string write;

    BoundsConfig config() const
    {
        BoundsConfig c = BoundsConfig::with_constant(constant_C);
        c.epsilon = epsilon;
        c.prime_bound = prime_bound;
        if (s)
            c.brauer_siegel_s = *s;
        return c;
    }
};

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* counts of check outcomes over a whole report */
struct Tally {
    int holds = 0;
    int fails = 0;
    int flagged = 0;
    int errors = 0;

    ojson check(std::string const & name, bool ok, ojson detail = ojson::object())
    {
        ok ? ++holds : ++fails;
        ojson c;
        c["name"] = name;
        c["holds"] = ok;
        for (auto const & [k, v] : detail.items())
            c[k] = v;
        return c;
    }

    void chain(ChainReport const & rep)
    {
        for (auto const & l : rep.links) {
            if (!l.in_range)
                ++flagged;
            else if (l.holds)
                ++holds;
            else
                ++fails;
        }
    }
};

std::vector<FieldPtr> select_fields(CorpusFile const & corpus, Options const & o)
{
    if (!o.label.empty()) {
        auto f = corpus.find_field(o.label);
        if (!f)
            throw usage_error("no field labelled '" + o.label + "' in the corpus");
        return {f};
    }
    auto fields = corpus.fields;
    std::sort(fields.begin(), fields.end(), [](FieldPtr const & a, FieldPtr const & b) { return a->label() < b->label(); });
    return fields;
}

std::vector<QuaternionAlgebra const *> select_algebras(CorpusFile const & corpus, Options const & o)
{
    if (!o.algebra.empty()) {
        auto a = corpus.find_algebra(o.algebra);
        if (!a)
            throw usage_error("no algebra labelled '" + o.algebra + "' in the corpus");
        return {a};
    }
    std::vector<QuaternionAlgebra const *> out;
    for (auto const & a : corpus.algebras)
        if (o.label.empty() || a.field().label() == o.label)
            out.push_back(&a);
    std::sort(out.begin(), out.end(), [](auto a, auto b) { return a->label() < b->label(); });
    return out;
}

ojson field_header(NumberField const & k)
{
    ojson j;
    j["label"] = k.label();
    j["poly"] = to_string(k.poly());
    j["degree"] = k.degree();
    j["r1"] = k.r1();
    j["r2"] = k.r2();
    j["d_k"] = report::integer(k.d_k());
    return j;
}

ojson algebra_header(QuaternionAlgebra const & alg)
{
    ojson j;
    j["algebra"] = alg.label();
    j["field"] = alg.field().label();
    j["ram_inf"] = alg.ram_inf();
    ojson primes = ojson::array();
    for (auto const & q : alg.ram_f())
        primes.push_back({{"prime", q.name()}, {"p", q.p}, {"e", q.e}, {"f", q.f}, {"norm", report::integer(q.norm)}});
    j["ram_f"] = primes;
    j["s"] = alg.s();
    j["a"] = alg.a();
    j["b"] = alg.b();
    j["cocompact"] = alg.cocompact();
    return j;
}

/* the invariant table shared by `field info` and `corpus verify` */
ojson field_checks(NumberField const & k, Tally & t)
{
    ojson checks = ojson::array();
    Signature sig = signature(k.poly());
    checks.push_back(t.check("sturm_signature", sig == Signature{k.r1(), k.r2()},
                             {{"sturm", {sig.r1, sig.r2}}, {"record", {k.r1(), k.r2()}}}));
    mpz_class disc = discriminant(k.poly());
    checks.push_back(t.check("discriminant", abs(disc) == k.index_sq() * k.d_k(),
                             {{"poly_discriminant", report::integer(disc)}, {"index_sq", report::integer(k.index_sq())}}));
    checks.push_back(t.check("discriminant_sign", sgn(disc) == ((k.r2() & 1) ? -1 : 1)));
    if (k.is_imaginary_quadratic() && k.d_k().fits_slong_p()) {
        long oracle = class_number_oracle(-k.d_k().get_si());
        checks.push_back(t.check("class_number_oracle", oracle == k.h_k(),
                                 {{"reduced_forms", oracle}, {"h_k", report::integer(k.h_k())}}));
    }
    auto fr = friedman_regulator_lower(k);
    checks.push_back(t.check("friedman_regulator", fr.holds,
                             {{"lower_bound", report::number(fr.value)}, {"reg_k", report::number(k.reg_k())}}));
    auto cb = class_number_bound(k);
    checks.push_back(t.check("class_number_bound", cb.holds, {{"bound", report::number(cb.value)}}));
    return checks;
}

ojson cmd_field_info(CorpusFile const & corpus, Options const & o, Tally & t)
{
    ojson results = ojson::array();
    for (auto const & k : select_fields(corpus, o)) {
        ojson j = field_header(*k);
        j["h_k"] = report::integer(k->h_k());
        j["reg_k"] = report::number(k->reg_k());
        j["omega_k"] = k->omega_k();
        j["index_sq"] = report::integer(k->index_sq());
        j["poly_discriminant"] = report::integer(k->poly_discriminant());
        j["checks"] = field_checks(*k, t);
        /* not a certified invariant: tallied by `bounds odlyzko` instead */
        auto od = odlyzko_check(*k, o.config());
        j["discriminant_bound"] = {{"C", report::number(o.config().C)},
                                   {"minimal_C", report::number(od.minimal_C)},
                                   {"holds", od.holds}};
        results.push_back(j);
    }
    return results;
}

ojson cmd_field_zeta(CorpusFile const & corpus, Options const & o, Tally & t)
{
    double s = o.s.value_or(2.0);
    ojson results = ojson::array();
    for (auto const & k : select_fields(corpus, o)) {
        ojson j = field_header(*k);
        BoundedValue z = dedekind_zeta(*k, s, o.prime_bound);
        double zeta_pow = std::pow(std::riemann_zeta(s), k->degree());
        j["s"] = report::number(s);
        j["prime_bound"] = o.prime_bound;
        j["zeta"] = report::interval(z);
        j["width"] = report::number(z.width());
        j["tail_majorant"] = report::number(zeta_tail_majorant(o.prime_bound, s));
        j["checks"] = ojson::array({t.check("zeta_below_riemann_power", z.lo <= zeta_pow,
                                            {{"zeta(s)^n", report::number(zeta_pow)}})});
        results.push_back(j);
    }
    return results;
}

ojson cmd_ideals_count(CorpusFile const & corpus, Options const & o, Tally & t)
{
    std::vector<double> xs = o.xs.empty() ? std::vector<double>{1, 10, 100, 1000} : o.xs;
    ojson results = ojson::array();
    for (auto const & k : select_fields(corpus, o)) {
        for (double x : xs) {
            ojson j = field_header(*k);
            std::uint64_t count = count_ideals(*k, x);
            double bound = ideal_count_upper(k->degree(), std::max(0.0, x));
            j["X"] = report::number(x);
            j["count"] = count;
            j["upper_bound"] = report::number(bound);
            j["checks"] = ojson::array({t.check("count_below_bound", double(count) <= bound)});
            results.push_back(j);
        }
    }
    return results;
}

ojson cmd_algebra_covolume(CorpusFile const & corpus, Options const & o, Tally & t)
{
    ojson results = ojson::array();
    for (auto const * alg : select_algebras(corpus, o)) {
        NumberField const & k = alg->field();
        ojson j = algebra_header(*alg);
        BoundedValue zeta2 = dedekind_zeta(k, 2.0, o.prime_bound);
        CovolumeResult cov = covolume_gamma1(*alg, zeta2);
        MinimalCovolumeBound mcl = minimal_covolume_lower(*alg, zeta2);
        BoundedValue floor = covolume_floor(k);
        mpq_class phi = cov.inputs.phi;
        int w2 = omega2(*alg);

        j["prime_bound"] = o.prime_bound;
        j["phi"] = report::rational(phi);
        j["omega2"] = w2;
        j["zeta2"] = report::interval(zeta2);
        j["covolume_gamma1"] = report::interval(cov.value);
        j["covolume_floor"] = report::interval(floor);
        j["index_bound"] = report::integer(index_bound_gamma(*alg));
        j["minimal_covolume_lower"] = {{"exact_form", report::interval(mcl.exact_form)},
                                       {"simplified", report::number(mcl.simplified)}};

        mpz_class two_r;
        mpz_ui_pow_ui(two_r.get_mpz_t(), 2, alg->ram_f().size());
        mpq_class half_w2(1, mpz_class(1) << w2);
        ojson checks = ojson::array();
        checks.push_back(t.check("floor_below_covolume", floor.hi <= cov.value.lo));
        checks.push_back(t.check("minimal_contract", mcl.contract_holds));
        checks.push_back(t.check("minimal_below_gamma1", mcl.exact_form.hi <= cov.value.hi));
        checks.push_back(t.check("phi_over_2^ram_f", phi / mpq_class(two_r) >= half_w2));
        checks.push_back(t.check("zeta2_norm2_refinement", zeta2.lo >= std::pow(4.0 / 3.0, w2)));
        j["checks"] = checks;
        results.push_back(j);
    }
    return results;
}

ojson cmd_algebra_typebound(CorpusFile const & corpus, Options const & o, Tally & t)
{
    ojson results = ojson::array();
    for (auto const * alg : select_algebras(corpus, o)) {
        NumberField const & k = alg->field();
        ojson j = algebra_header(*alg);
        TypeNumberBound tb = type_number_bound(*alg);
        double f_r1 = std::exp(4.0 * k.r1() - o.constant_C);
        bool in_range = k.d_k().get_d() >= f_r1;
        j["coarse"] = report::integer(tb.coarse);
        j["refined"] = report::number(tb.refined);
        j["f(r1)"] = report::number(f_r1);
        j["d_k_at_least_f(r1)"] = in_range;
        bool ordered = tb.coarse.get_d() <= tb.refined;
        if (in_range) {
            j["checks"] = ojson::array({t.check("coarse_below_refined", ordered)});
        } else {
            ++t.flagged;
            j["checks"] = ojson::array({{{"name", "coarse_below_refined"}, {"holds", ordered}, {"in_range", false}}});
        }
        results.push_back(j);
    }
    return results;
}

ojson cmd_lemma31(CorpusFile const & corpus, Options const & o, Tally & t)
{
    BoundsConfig cfg = o.config();
    double s = cfg.brauer_siegel_s;
    ojson results = ojson::array();
    for (auto const & k : select_fields(corpus, o)) {
        ojson j = field_header(*k);
        double h = k->h_k().get_d();
        int n = k->degree();
        auto cb = class_number_bound(*k);
        auto fr = friedman_regulator_lower(*k);
        BoundedValue zeta_s = dedekind_zeta(*k, s, o.prime_bound);
        BoundedValue bs = brauer_siegel_class_bound(*k, s, zeta_s);
        double zeta_pow = std::pow(std::riemann_zeta(s), n);
        BoundedValue bs_pow = brauer_siegel_class_bound(*k, s, BoundedValue::point(zeta_pow));

        /* the s = 1.5 estimate with zeta(1.5) < 2.62, and the bound before
         * dropping 2^{3 r2 / 2} */
        double intermediate = 3 * k->omega_k() * std::pow(2.62, n) * std::pow(k->d_k().get_d(), 0.75)
            / (4 * k->reg_k() * std::pow(2.0, 1.5 * k->r2()) * std::pow(std::numbers::pi, 0.75 * n));
        double sharp = 242 * std::pow(k->d_k().get_d(), 0.75) / (std::pow(1.64, k->r1()) * std::pow(2.0, 1.5 * k->r2()));

        j["h_k"] = report::integer(k->h_k());
        j["s"] = report::number(s);
        j["zeta_s"] = report::interval(zeta_s);
        j["brauer_siegel"] = report::interval(bs);
        j["brauer_siegel_with_zeta_power"] = report::interval(bs_pow);
        j["class_number_bound"] = report::number(cb.value);
        j["friedman_lower"] = report::number(fr.value);
        ojson checks = ojson::array();
        checks.push_back(t.check("h_below_class_number_bound", cb.holds));
        checks.push_back(t.check("h_below_brauer_siegel", h <= bs.hi));
        checks.push_back(t.check("zeta_power_dominates", bs_pow.hi >= bs.lo));
        checks.push_back(t.check("friedman_regulator", fr.holds));
        checks.push_back(t.check("h_below_s15_estimate", h <= intermediate, {{"value", report::number(intermediate)}}));
        checks.push_back(t.check("h_below_sharp_form", h <= sharp, {{"value", report::number(sharp)}}));
        j["checks"] = checks;
        results.push_back(j);
    }
    return results;
}

ojson cmd_odlyzko(CorpusFile const & corpus, Options const & o, Tally & t, ojson & extra)
{
    BoundsConfig cfg = o.config();
    ojson results = ojson::array();
    double worst = -INFINITY;
    std::string worst_label;
    ojson failing = ojson::array();
    for (auto const & k : select_fields(corpus, o)) {
        ojson j = field_header(*k);
        auto od = odlyzko_check(*k, cfg);
        j["C"] = report::number(cfg.C);
        j["lhs_log_d_k"] = report::number(od.lhs);
        j["rhs"] = report::number(od.rhs);
        j["minimal_C"] = report::number(od.minimal_C);
        j["checks"] = ojson::array({t.check("odlyzko", od.holds)});
        if (!od.holds)
            failing.push_back(k->label());
        if (od.minimal_C > worst) {
            worst = od.minimal_C;
            worst_label = k->label();
        }
        results.push_back(j);
    }
    extra["minimal_valid_C"] = report::number(worst);
    extra["minimal_valid_C_attained_by"] = worst_label;
    extra["failing_fields"] = failing;
    return results;
}

ojson cmd_chain(CorpusFile const & corpus, Options const & o, Tally & t,
                std::function<ChainReport(QuaternionAlgebra const &, double, BoundsConfig const &)> const & chain)
{
    BoundsConfig cfg = o.config();
    ojson results = ojson::array();
    for (auto const * alg : select_algebras(corpus, o)) {
        double V;
        std::string source;
        if (o.volume) {
            V = *o.volume;
            source = "user";
        } else {
            V = covolume_gamma1(*alg, dedekind_zeta(alg->field(), 2.0, o.prime_bound)).value.hi;
            source = "covolume_gamma1.hi";
        }
        ChainReport rep = chain(*alg, V, cfg);
        t.chain(rep);
        ojson j = report::chain_to_json(rep);
        j["volume_source"] = source;
        results.push_back(j);
    }
    return results;
}

ojson cmd_corpus_verify(CorpusFile const & corpus, Options const & o, Tally & t, ojson & extra)
{
    ojson results = ojson::array();
    for (auto const & k : corpus.fields) {
        ojson j = field_header(*k);
        j["kind"] = "field";
        j["checks"] = field_checks(*k, t);
        results.push_back(j);
    }
    for (auto const & alg : corpus.algebras) {
        ojson j = algebra_header(alg);
        j["kind"] = "algebra";
        j["phi"] = report::rational(phi_discriminant(alg));
        j["omega2"] = omega2(alg);
        j["checks"] = ojson::array({t.check("parity", (alg.ram_inf().size() + alg.ram_f().size()) % 2 == 0)});
        results.push_back(j);
    }
    ojson normalized = normalized_corpus(corpus);
    extra["warnings"] = corpus.warnings;
    extra["normalized_corpus"] = normalized;
    if (!o.write.empty()) {
        std::ofstream out(o.write);
        if (!out)
            throw std::runtime_error("cannot write " + o.write);
        out << normalized.dump(2) << "\n";
    }
    return results;
}

ojson options_echo(std::string const & command, Options const & o)
{
    ojson j;
    j["corpus"] = o.corpus;
    if (!o.label.empty())
        j["label"] = o.label;
    if (!o.algebra.empty())
        j["algebra"] = o.algebra;
    j["prime_bound"] = o.prime_bound;
    if (o.volume)
        j["volume"] = *o.volume;
    j["epsilon"] = o.epsilon;
    j["constant_C"] = o.constant_C;
    if (o.s)
        j["s"] = *o.s;
    if (!o.xs.empty())
        j["X"] = o.xs;
    j["strict"] = o.strict;
    j["format"] = o.format;
    (void)command;
    return j;
}

} // namespace

CommandResult run_command(std::vector<std::string> const & argv)
{
    CommandResult res;
    Options o;
    std::string command;

    CLI::App app{"Arithmetic invariants and inequality-chain checks for quaternion algebras over number fields",
                 "arithvol"};
    app.require_subcommand(1);

    using Handler = std::function<ojson(CorpusFile const &, Tally &, ojson &)>;
    std::vector<std::pair<CLI::App *, std::pair<std::string, Handler>>> leaves;

    auto leaf = [&](CLI::App * parent, std::string const & name, std::string const & help, Handler h) {
        CLI::App * sub = parent->add_subcommand(name, help);
        sub->add_option("--corpus", o.corpus, "corpus JSON file")->capture_default_str();
        sub->add_option("--label", o.label, "field label");
        sub->add_option("--algebra", o.algebra, "algebra label");
        sub->add_option("--prime-bound", o.prime_bound, "Euler product prime bound P")->capture_default_str();
        sub->add_option("--volume", o.volume, "covolume V supplied to chain checks");
        sub->add_option("--epsilon", o.epsilon, "epsilon of the V^(2+epsilon) bound")->capture_default_str();
        sub->add_option("--constant-C", o.constant_C, "discriminant bound constant C")->capture_default_str();
        sub->add_flag("--strict", o.strict, "fail on flagged links and unknown corpus keys");
        sub->add_option("--format", o.format, "output format")
            ->check(CLI::IsMember({"json", "csv", "text"}))
            ->capture_default_str();
        leaves.push_back({sub, {parent->get_name() + " " + name, std::move(h)}});
        return sub;
    };

    auto field = app.add_subcommand("field", "number field invariants");
    field->require_subcommand(1);
    leaf(field, "info", "validated invariants and cross-checks",
         [&](auto const & c, Tally & t, ojson &) { return cmd_field_info(c, o, t); });
    leaf(field, "zeta", "rigorous enclosure of zeta_k(s)",
         [&](auto const & c, Tally & t, ojson &) { return cmd_field_zeta(c, o, t); })
        ->add_option("--s", o.s, "evaluation point s > 1 (default 2)");

    auto ideals = app.add_subcommand("ideals", "integral ideal counts");
    ideals->require_subcommand(1);
    leaf(ideals, "count", "exact count of ideals of norm <= X against (pi^2/6)^n X^2",
         [&](auto const & c, Tally & t, ojson &) { return cmd_ideals_count(c, o, t); })
        ->add_option("--x", o.xs, "norm bounds X (default 1 10 100 1000)");

    auto algebra = app.add_subcommand("algebra", "quaternion algebra invariants");
    algebra->require_subcommand(1);
    leaf(algebra, "covolume", "covolume of Gamma^1_O and the minimal covolume bounds",
         [&](auto const & c, Tally & t, ojson &) { return cmd_algebra_covolume(c, o, t); });
    leaf(algebra, "typebound", "type number upper bounds",
         [&](auto const & c, Tally & t, ojson &) { return cmd_algebra_typebound(c, o, t); });

    auto bounds = app.add_subcommand("bounds", "inequality checks");
    bounds->require_subcommand(1);
    leaf(bounds, "lemma31", "class number bounds",
         [&](auto const & c, Tally & t, ojson &) { return cmd_lemma31(c, o, t); })
        ->add_option("--s", o.s, "Brauer-Siegel point s > 1 (default 1.5)");
    leaf(bounds, "odlyzko", "discriminant lower bound with constant C",
         [&](auto const & c, Tally & t, ojson & extra) { return cmd_odlyzko(c, o, t, extra); });
    leaf(bounds, "vigneras", "V^(2+epsilon) chain",
         [&](auto const & c, Tally & t, ojson &) { return cmd_chain(c, o, t, vigneras_chain); });
    leaf(bounds, "minimal", "242 V^18 chain",
         [&](auto const & c, Tally & t, ojson &) { return cmd_chain(c, o, t, minimal_chain); });
    leaf(bounds, "maximal", "242 V^20 chain",
         [&](auto const & c, Tally & t, ojson &) { return cmd_chain(c, o, t, maximal_chain); });

    auto corpus_cmd = app.add_subcommand("corpus", "corpus maintenance");
    corpus_cmd->require_subcommand(1);
    leaf(corpus_cmd, "verify", "validate every record and emit the normalized corpus",
         [&](auto const & c, Tally & t, ojson & extra) { return cmd_corpus_verify(c, o, t, extra); })
        ->add_option("--write", o.write, "write the normalized corpus to this path");

    std::ostringstream out, err;
    try {
        std::vector<std::string> args(argv.rbegin(), argv.rend());
        app.parse(args);
    } catch (CLI::ParseError const & e) {
        int code = app.exit(e, out, err);
        res.out = out.str();
        res.err = err.str();
        res.status = code == 0 ? success : hard_error;
        if (res.status != success)
            res.err += "\n" + app.help("", CLI::AppFormatMode::Normal);
        return res;
    }

    Handler const * handler = nullptr;
    for (auto const & [sub, named] : leaves)
        if (sub->parsed()) {
            command = named.first;
            handler = &named.second;
        }
    if (!handler) {
        res.err = app.help();
        res.status = hard_error;
        return res;
    }

    report::Format fmt = o.format == "csv" ? report::Format::csv
        : o.format == "text"               ? report::Format::text
                                           : report::Format::json;

    ojson doc;
    doc["command"] = command;
    doc["options"] = options_echo(command, o);
    Tally tally;
    ojson extra = ojson::object();
    try {
        o.config().validate();
        CorpusFile corpus = ingest_corpus(o.corpus, o.strict);
        for (auto const & w : corpus.warnings)
            err << "warning: " << w << "\n";
        doc["results"] = (*handler)(corpus, tally, extra);
    } catch (corpus_validation_error const & e) {
        res.err = err.str() + e.what() + std::string("\n");
        res.status = validation_failure;
        return res;
    } catch (std::exception const & e) {
        res.err = err.str() + "error: " + e.what() + "\n";
        res.status = hard_error;
        return res;
    }

    for (auto const & [k, v] : extra.items())
        doc[k] = v;
    int status = tally.errors ? hard_error
        : (o.strict && (tally.fails || tally.flagged)) ? chain_failure
                                                         : success;
    doc["summary"] = {{"holds", tally.holds}, {"fails", tally.fails}, {"flagged", tally.flagged},
                      {"errors", tally.errors}};
    doc["exit_status"] = status;
    res.out = report::render(doc, fmt);
    res.err = err.str();
    res.status = status;
    return res;
}

} // namespace arithvol::cli
