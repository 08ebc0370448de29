// rbeta: command line front end.
//
//   rbeta eval-h    (--c LIST --d LIST --z Z | --kind K --params LIST) [--closed-form]
//   rbeta eval-psi  --q Q --a LIST --b LIST --z Z
//   rbeta integrate --m M --a LIST --b LIST --t T [--weight gm:<m>] [--q Q --w LIST]
//   rbeta verify    --suite NAME [--seed N] [--draws N] [--tol ID=ABS:REL] [--out PATH] [--format json|csv]
//
// exit: 0 ok, 1 failed record, 2 bad input, 3 math domain, 4 io

#include <cstdio>
#include <iostream>

#include <CLI11.hpp>

#include <rbeta/rbeta.hpp>

using namespace rbeta;
using json = nlohmann::ordered_json;

namespace {

struct Common {
    std::string format = "text";
    std::string out;
    double tol_abs = 1e-12, tol_rel = 1e-10;
};

void emit(const Common& o, const json& j) {
    std::string text;
    if (o.format == "json") {
        text = j.dump(2) + "\n";
    } else if (o.format == "csv") {
        std::string head, row;
        for (auto it = j.begin(); it != j.end(); ++it) {
            std::string sep = it == j.begin() ? "" : ",";
            head += sep + it.key();
            row += sep + csv_escape(it->is_string() ? it->get<std::string>() : it->dump());
        }
        text = head + "\n" + row + "\n";
    } else {
        for (auto it = j.begin(); it != j.end(); ++it)
            text += it.key() + ": " + (it->is_string() ? it->get<std::string>() : it->dump()) + "\n";
    }
    if (o.out.empty())
        std::cout << text;
    else
        write_atomic(o.out, text);
}

// complex values print as strings in all formats; "a+bi" reads back through parse_complex
json cval(Complex z) { return format_complex(z); }

void add_common(CLI::App* sub, Common& o) {
    sub->add_option("--format", o.format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--out", o.out, "write output to PATH instead of stdout");
    sub->add_option("--abs-tol", o.tol_abs, "absolute error budget");
    sub->add_option("--rel-tol", o.tol_rel, "relative error budget");
}

int eval_h(const std::string& c, const std::string& d, const std::string& z, bool closed, std::string kind,
           const std::string& params, const std::string& method, const Common& o) {
    // --kind/--params alone describe the series too
    const bool by_kind = !kind.empty() && z.empty();
    if (z.empty() && !by_kind) throw ParseError("give --c, --d and --z, or --kind with --params");
    BilateralSeriesSpec spec;
    if (by_kind) {
        auto k = h_kind_from_name(kind);
        if (!k) throw ParseError("unknown kind '" + kind + "'");
        std::vector<Complex> p = parse_complex_list(params);
        if (p.size() != h_kind_info(*k).arity)
            throw ParseError(kind + " takes " + std::to_string(h_kind_info(*k).arity) + " parameters");
        spec = h_series_for(*k, p);
    } else {
        spec = {parse_complex_list(c), parse_complex_list(d), parse_complex(z)};
    }
    json j;
    if (closed) {
        std::vector<Complex> p;
        if (kind.empty()) {
            // infer from the series shape
            if (spec.c.size() == 1 && spec.d.size() == 1) {
                p = {spec.c[0], spec.d[0]};
                if (std::abs(spec.z + 1.0) < 1e-15) kind = "OneH1_minus1";
                else if (std::abs(spec.z - 1.0) < 1e-15) kind = "OneH1_plus1";
                else if (std::abs(std::abs(spec.z) - 1.0) < 1e-14) {
                    kind = "OneH1_minus_exp";
                    p.push_back(-std::arg(-spec.z));
                }
            } else if (spec.c.size() == 2 && spec.d.size() == 2 && std::abs(spec.z - 1.0) < 1e-15) {
                kind = "Gauss2H2";
                p = {spec.c[0], spec.c[1], spec.d[0], spec.d[1]};
            }
            if (kind.empty()) throw ParseError("cannot infer a closed form for this series; pass --kind and --params");
        } else {
            p = parse_complex_list(params);
        }
        auto k = h_kind_from_name(kind);
        if (!k) throw ParseError("unknown kind '" + kind + "'");
        if (p.size() != h_kind_info(*k).arity)
            throw ParseError(kind + " takes " + std::to_string(h_kind_info(*k).arity) + " parameters");
        j["kind"] = kind;
        j["value"] = cval(closed_form_H(*k, p));
        BilateralSeriesSpec s = h_series_for(*k, p);
        j["class"] = to_string(classify(s).tag);
        emit(o, j);
        return 0;
    }
    ConvergenceClass cc = classify(spec);
    if (!cc.convergent) throw DivergentError(cc.reason);
    SummationMethod m = method == "levin" ? SummationMethod::levin : SummationMethod::asymptotic;
    SeriesValue v = eval_H(spec, Tolerance(o.tol_abs, o.tol_rel), m);
    j["value"] = cval(v.value);
    j["est_error"] = v.est_error;
    j["terms_used"] = v.terms_used;
    j["class"] = to_string(cc.tag);
    j["sigma"] = cval(cc.sigma);
    emit(o, j);
    return 0;
}

int eval_psi_cmd(const std::string& q, const std::string& a, const std::string& b, const std::string& z,
                 const Common& o) {
    QSeriesSpec spec{QBase(parse_complex(q)), parse_complex_list(a), parse_complex_list(b), parse_complex(z)};
    SeriesValue v = eval_psi(spec, Tolerance(o.tol_abs, o.tol_rel));
    json j;
    j["value"] = cval(v.value);
    j["est_error"] = v.est_error;
    j["terms_used"] = v.terms_used;
    emit(o, j);
    return 0;
}

std::vector<TrigTerm> parse_weight(const std::string& w) {
    if (w.empty() || w == "none") return {};
    if (w.rfind("gm:", 0) == 0) {
        std::size_t used = 0;
        int m = 0;
        try {
            m = std::stoi(w.substr(3), &used);
        } catch (...) {
            used = 0;
        }
        if (used == 0 || used != w.size() - 3 || m < 0) throw ParseError("bad weight '" + w + "'");
        return weight_g(m);
    }
    throw ParseError("unknown weight '" + w + "' (use gm:<m> or none)");
}

int integrate_cmd(int m, const std::string& a, const std::string& b, const std::string& t, const std::string& weight,
                  const std::string& q, const std::string& w, const Common& o) {
    json j;
    QuadratureResult r;
    if (!q.empty()) {
        QIntegrandSpec s{QBase(parse_complex(q)), m, parse_complex_list(a), parse_complex_list(b),
                         parse_complex_list(w), parse_complex(t)};
        if (s.w.empty()) s.w.assign(std::size_t(m), 1.0);
        try {
            validate(s);
        } catch (const PreconditionError& e) {
            throw ParseError(e.what());
        }
        r = q_integrate(s, Tolerance(o.tol_abs, o.tol_rel));
    } else {
        if (!w.empty()) throw ParseError("--w needs --q");
        Complex tt = parse_complex(t);
        if (tt.imag() != 0.0) throw ParseError("--t must be real for the classical integral");
        IntegrandSpec s{m, parse_complex_list(a), parse_complex_list(b), tt.real(), parse_weight(weight)};
        try {
            validate(s);
        } catch (const PreconditionError& e) {
            throw ParseError(e.what());
        }
        r = integrate(s, Tolerance(o.tol_abs, o.tol_rel));
    }
    j["value"] = cval(r.value);
    j["est_error"] = r.est_error;
    j["panels"] = r.panels;
    j["truncation_X"] = r.truncation_X;
    emit(o, j);
    return 0;
}

std::pair<std::string, Tolerance> parse_tol(const std::string& s) {
    auto eq = s.find('=');
    auto colon = s.find(':', eq == std::string::npos ? 0 : eq);
    if (eq == std::string::npos || eq == 0 || colon == std::string::npos)
        throw ParseError("--tol wants ID=ABS:REL, got '" + s + "'");
    double ab, re;
    if (!detail::parse_real(s.substr(eq + 1, colon - eq - 1), ab) || !detail::parse_real(s.substr(colon + 1), re))
        throw ParseError("--tol wants ID=ABS:REL, got '" + s + "'");
    try {
        return {s.substr(0, eq), Tolerance(ab, re)};
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
}

int verify_cmd(SuiteConfig cfg, const std::vector<std::string>& tols, bool quiet) {
    for (const auto& t : tols) cfg.tol.insert(parse_tol(t));
    SuiteReport rep = run_suite(cfg);
    std::string text = render_report(rep);
    if (cfg.output_path.empty())
        std::cout << text;
    else
        write_atomic(cfg.output_path, text);
    if (!quiet)
        std::fprintf(stderr, "%s: %zu/%zu passed, max rel gap %.3g\n", cfg.suite.c_str(), rep.summary.passed,
                     rep.summary.total, rep.summary.max_rel_gap);
    for (const auto& r : rep.records)
        if (!r.pass && !quiet) std::fprintf(stderr, "  FAIL %s  abs %.3g rel %.3g  %s\n", r.identity_id.c_str(), r.abs_gap, r.rel_gap, r.note.c_str());
    return rep.summary.failed ? 1 : 0;
}

int exit_code_for(const Error& e) {
    const std::string& k = e.kind();
    if (k == "ParseError" || k == "PreconditionError" || k == "UnknownSuite") return 2;
    if (k == "IoError") return 4;
    return 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bilateral series, Ramanujan-type integrals and their q-analogues"};
    app.require_subcommand(1);

    Common o;
    std::string c, d, z, kind, params, method = "asymptotic";
    bool closed = false;
    auto* eh = app.add_subcommand("eval-h", "sum a bilateral pHq series");
    eh->add_option("--c", c, "numerator parameters, comma separated");
    eh->add_option("--d", d, "denominator parameters, comma separated");
    eh->add_option("--z", z, "argument (with --c and --d; or use --kind and --params)");
    eh->add_flag("--closed-form", closed, "use a summation formula instead of summing");
    eh->add_option("--kind", kind, "summation formula name (see --list-kinds)");
    eh->add_option("--params", params, "parameters of --kind");
    eh->add_option("--method", method, "unit-circle tails: asymptotic or levin")
        ->check(CLI::IsMember({"asymptotic", "levin"}));
    add_common(eh, o);

    std::string q, a, b, pz;
    auto* ep = app.add_subcommand("eval-psi", "sum a bilateral basic series r psi r");
    ep->add_option("--q", q, "base, 0 < |q| < 1")->required();
    ep->add_option("--a", a, "numerator parameters")->required();
    ep->add_option("--b", b, "denominator parameters")->required();
    ep->add_option("--z", pz, "argument")->required();
    add_common(ep, o);

    int m = 1;
    std::string ia, ib, it = "0", weight, iq, iw;
    auto* in = app.add_subcommand("integrate", "integral over the real line of 1/prod Gamma(..)Gamma(..) or its q-analogue");
    in->add_option("--m", m, "number of gamma pairs")->required()->check(CLI::PositiveNumber);
    in->add_option("--a", ia, "a_1..a_m")->required();
    in->add_option("--b", ib, "b_1..b_m")->required();
    in->add_option("--t", it, "frequency");
    in->add_option("--weight", weight, "gm:<m> multiplies by sin(m pi x)/sin(pi x)");
    in->add_option("--q", iq, "switch to the q-integrand with this base");
    in->add_option("--w", iw, "w_1..w_m for the q-integrand (default all 1)");
    add_common(in, o);

    SuiteConfig cfg;
    std::vector<std::string> tols;
    bool quiet = false;
    auto* vf = app.add_subcommand("verify", "run a verification suite");
    vf->add_option("--suite", cfg.suite, "classical-core, classical-beta, q-core, q-beta or limits")->required();
    vf->add_option("--seed", cfg.seed, "random seed");
    vf->add_option("--draws", cfg.draws_per_identity, "draws per identity (default: per identity)")
        ->check(CLI::PositiveNumber);
    vf->add_option("--tol", tols, "override a tolerance, ID=ABS:REL");
    vf->add_option("--out", cfg.output_path, "report path");
    vf->add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    vf->add_flag("--quiet", quiet, "no summary on stderr");

    app.add_subcommand("list-kinds", "print the summation formula names");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*eh) return eval_h(c, d, z, closed, kind, params, method, o);
        if (*ep) return eval_psi_cmd(q, a, b, pz, o);
        if (*in) return integrate_cmd(m, ia, ib, it, weight, iq, iw, o);
        if (*vf) return verify_cmd(cfg, tols, quiet);
        for (const auto& k : h_kinds()) std::printf("%s (%zu parameters)\n", k.name, k.arity);
        return 0;
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s: %s\n", e.kind().c_str(), e.what());
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    }
}
