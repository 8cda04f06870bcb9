#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "liepi/badtrees.hpp"
#include "liepi/dsl.hpp"
#include "liepi/evaluate.hpp"
#include "liepi/formulas.hpp"
#include "liepi/presets.hpp"
#include "liepi/spaces.hpp"
#include "liepi/tideal.hpp"

using json = nlohmann::ordered_json;
using namespace liepi;

namespace {

struct Options {
    std::string grading;
    std::string format = "text";
    std::string outfile;
    std::string generators_file;
    std::string poly;
    std::string pair;
    long max_m = 5;
    int max_len = 0;
    int which = 1;
    int workers = 0;
    long cap = default_entry_cap;
};

int resolve_workers(int cli_value) {
    if (cli_value > 0) return cli_value;
    if (const char* env = std::getenv("PI_WORKERS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1 && v <= 1024) return static_cast<int>(v);
    }
    return 1;
}

ComputeOptions compute_options(const Options& opt) {
    ComputeOptions c;
    c.workers = resolve_workers(opt.workers);
    c.cap = opt.cap;
    return c;
}

json integer_json(const Integer& z) {
    if (z.fits_slong_p()) return json(z.get_si());
    return json(z.get_str());
}

void emit(const std::string& text, const std::string& outfile) {
    if (outfile.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(outfile, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open output file " + outfile);
    f << text;
}

std::string degrees_str(const DegreeTuple& a) {
    std::string s = "(";
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) s += ",";
        s += a[i].to_string();
    }
    return s + ")";
}

json degrees_json(const DegreeTuple& a) {
    json out = json::array();
    for (const auto& d : a) out.push_back(d.to_string());
    return out;
}

std::string grading_label(const ResolvedGrading& g, const std::string& request) {
    return g.name.empty() ? request : g.name;
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot read " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::string eta_display(const Preset& p) {
    const auto& eta = p.elementary ? p.elementary->eta : p.t2->base.eta;
    std::string s = p.t2 ? "t2(" : "(";
    for (std::size_t i = 0; i < eta.size(); ++i) {
        if (i) s += ",";
        s += eta[i].to_string();
    }
    return s + ")";
}

int cmd_gradings(const Options& opt) {
    std::string text;
    json roots = json::array();
    std::string csv = "name,group,n,dim\n";
    for (const auto& name : preset_names()) {
        Preset p = get_preset(name);
        std::string comps;
        json jcomps = json::array();
        for (const auto& d : p.algebra.support()) {
            if (!comps.empty()) comps += ",";
            long dim = static_cast<long>(p.algebra.component(d).size());
            comps += d.to_string() + ":" + std::to_string(dim);
            jcomps.push_back({{"degree", d.to_string()}, {"dim", dim}});
        }
        std::string group = p.algebra.group->to_string();
        text += name + "\n  group " + group + "  eta " + eta_display(p) + "\n  components " +
                comps + "\n";
        roots.push_back({{"name", name},
                         {"group", group},
                         {"n", p.algebra.n},
                         {"type2", p.t2.has_value()},
                         {"eta", [&] {
                              json e = json::array();
                              const auto& eta =
                                  p.elementary ? p.elementary->eta : p.t2->base.eta;
                              for (const auto& d : eta) e.push_back(d.to_string());
                              return e;
                          }()},
                         {"components", jcomps}});
        csv += name + "," + group + "," + std::to_string(p.algebra.n) + "," +
               std::to_string(p.algebra.dim()) + "\n";
    }
    if (opt.format == "json")
        emit(json{{"schema", 1}, {"gradings", roots}}.dump(2) + "\n", opt.outfile);
    else if (opt.format == "csv")
        emit(csv, opt.outfile);
    else
        emit(text, opt.outfile);
    return 0;
}

int cmd_codim(const Options& opt) {
    ResolvedGrading g = resolve_grading(opt.grading);
    ComputeOptions copts = compute_options(opt);
    std::string label = grading_label(g, opt.grading);
    std::string text = "grading " + label + "\n";
    std::string csv = "m,c_m\n";
    json values = json::array();
    for (long m = 1; m <= opt.max_m; ++m) {
        CodimReport r = codimension(g.algebra, m, copts);
        text += "c_" + std::to_string(m) + " = " + r.total.get_str() + "\n";
        csv += std::to_string(m) + "," + r.total.get_str() + "\n";
        json multisets = json::array();
        for (const auto& rec : r.by_multiset)
            multisets.push_back({{"degrees", degrees_json(rec.degrees)},
                                 {"dim", rec.dim},
                                 {"orderings", integer_json(rec.orderings)}});
        values.push_back(
            {{"m", m}, {"total", integer_json(r.total)}, {"multisets", multisets}});
    }
    if (opt.format == "json")
        emit(json{{"schema", 1}, {"grading", label}, {"codimensions", values}}.dump(2) + "\n",
             opt.outfile);
    else if (opt.format == "csv")
        emit(csv, opt.outfile);
    else
        emit(text, opt.outfile);
    return 0;
}

int cmd_check(const Options& opt) {
    ResolvedGrading g = resolve_grading(opt.grading);
    MultilinearPolynomial f = parse_polynomial(opt.poly, g.algebra.group, g.aliases);
    IdentityVerdict v = check_identity(f, g.algebra);
    std::string label = grading_label(g, opt.grading);
    std::string text;
    json jwitness;
    if (v.identity) {
        text = "identity\n";
    } else {
        text = "not an identity\n";
        jwitness = json::object();
        for (const auto& [var, b] : v.witness) {
            const auto& [mat, deg] = g.algebra.basis[static_cast<std::size_t>(b)];
            text += "  x" + std::to_string(var) + " <- " + mat.to_string() + " (degree " +
                    deg.to_string() + ")\n";
            jwitness["x" + std::to_string(var)] = mat.to_string();
        }
    }
    if (opt.format == "json")
        emit(json{{"schema", 1},
                  {"grading", label},
                  {"polynomial", polynomial_to_string(f)},
                  {"identity", v.identity},
                  {"witness", jwitness}}
                     .dump(2) +
                 "\n",
             opt.outfile);
    else
        emit(text, opt.outfile);
    return v.identity ? 0 : 1;
}

std::string report_text(const BasisReport& r) {
    std::string text;
    for (const auto& v : r.verdicts)
        text += "m=" + std::to_string(v.m) + " degrees=" + degrees_str(v.degrees) +
                " free=" + std::to_string(v.free_dim) +
                " consequence=" + std::to_string(v.consequence_dim) +
                " algebra=" + std::to_string(v.algebra_dim) + (v.ok ? " ok" : " MISMATCH") +
                "\n";
    text += r.ok ? "verified\n" : "verification FAILED\n";
    return text;
}

json report_json(const BasisReport& r) {
    json verdicts = json::array();
    for (const auto& v : r.verdicts)
        verdicts.push_back({{"m", v.m},
                            {"degrees", degrees_json(v.degrees)},
                            {"free_dim", v.free_dim},
                            {"consequence_dim", v.consequence_dim},
                            {"algebra_dim", v.algebra_dim},
                            {"ok", v.ok}});
    return verdicts;
}

std::string report_csv(const BasisReport& r) {
    std::string csv = "m,degrees,free_dim,consequence_dim,algebra_dim,ok\n";
    for (const auto& v : r.verdicts) {
        std::string degs;
        for (std::size_t i = 0; i < v.degrees.size(); ++i) {
            if (i) degs += " ";
            degs += v.degrees[i].to_string();
        }
        csv += std::to_string(v.m) + "," + degs + "," + std::to_string(v.free_dim) + "," +
               std::to_string(v.consequence_dim) + "," + std::to_string(v.algebra_dim) + "," +
               (v.ok ? "1" : "0") + "\n";
    }
    return csv;
}

int emit_report(const Options& opt, const std::string& label, const BasisReport& r,
                json extra = json::object()) {
    if (opt.format == "json") {
        json root{{"schema", 1}, {"grading", label}};
        for (auto& [k, v] : extra.items()) root[k] = v;
        root["ok"] = r.ok;
        root["verdicts"] = report_json(r);
        emit(root.dump(2) + "\n", opt.outfile);
    } else if (opt.format == "csv") {
        emit(report_csv(r), opt.outfile);
    } else {
        emit(report_text(r), opt.outfile);
    }
    return r.ok ? 0 : 1;
}

int cmd_verify(const Options& opt) {
    ResolvedGrading g = resolve_grading(opt.grading);
    std::string label = grading_label(g, opt.grading);
    GeneratorSet s;
    if (!opt.generators_file.empty()) {
        s = parse_generator_file(read_file(opt.generators_file), g.algebra.group, g.aliases);
    } else if (!g.name.empty() && has_builtin_generators(g.name)) {
        s = builtin_generators(g.name);
    } else {
        throw std::invalid_argument("no built-in generator set for " + label +
                                    "; pass --generators FILE");
    }
    BasisReport r = verify_basis(s, g.algebra, opt.max_m, compute_options(opt));
    return emit_report(opt, label, r, json{{"max_m", opt.max_m}});
}

int cmd_badtrees(const Options& opt) {
    ResolvedGrading g = resolve_grading(opt.grading);
    if (!g.elementary)
        throw std::invalid_argument("tree classification needs an elementary grading");
    const ElementaryGrading& eg = *g.elementary;
    int maxlen = opt.max_len > 0 ? opt.max_len : eg.n;
    std::string label = grading_label(g, opt.grading);
    std::vector<GroupElement> support = elementary_algebra(eg).support();

    std::string text, csv = "tree,length,good,witness\n";
    json trees = json::array();
    for (const auto& t : enumerate_trees(support, maxlen)) {
        auto w = tree_witness(t, eg);
        std::string units;
        json jw;
        if (w) {
            jw = json::array();
            for (const auto& [i, j] : *w) {
                if (!units.empty()) units += " ";
                units += "e" + std::to_string(i) + std::to_string(j);
                jw.push_back("e" + std::to_string(i) + std::to_string(j));
            }
        }
        text += t.to_string() + (w ? " good  " + units : " bad") + "\n";
        csv += t.to_string() + "," + std::to_string(t.length()) + "," + (w ? "1" : "0") +
               "," + units + "\n";
        trees.push_back({{"tree", t.to_string()},
                         {"length", t.length()},
                         {"good", w.has_value()},
                         {"witness", jw}});
    }
    if (opt.format == "json")
        emit(json{{"schema", 1}, {"grading", label}, {"max_len", maxlen}, {"trees", trees}}
                     .dump(2) +
                 "\n",
             opt.outfile);
    else if (opt.format == "csv")
        emit(csv, opt.outfile);
    else
        emit(text, opt.outfile);
    return 0;
}

int cmd_conjecture(const Options& opt) {
    ComputeOptions copts = compute_options(opt);
    if (opt.which == 3) {
        std::size_t colon = opt.pair.find(':');
        if (opt.pair.empty() || colon == std::string::npos)
            throw std::invalid_argument("--which 3 needs --pair FINE:COARSE");
        ResolvedGrading fine = resolve_grading(opt.pair.substr(0, colon));
        ResolvedGrading coarse = resolve_grading(opt.pair.substr(colon + 1));
        std::vector<Integer> deltas =
            coarsening_delta(fine.algebra, coarse.algebra, opt.max_m, copts);
        std::string text, csv = "m,delta\n";
        json jd = json::array();
        for (std::size_t k = 0; k < deltas.size(); ++k) {
            long m = static_cast<long>(k) + 1;
            text += "m=" + std::to_string(m) + " delta=" + deltas[k].get_str() + "\n";
            csv += std::to_string(m) + "," + deltas[k].get_str() + "\n";
            jd.push_back({{"m", m}, {"delta", integer_json(deltas[k])}});
        }
        if (opt.format == "json")
            emit(json{{"schema", 1}, {"pair", opt.pair}, {"deltas", jd}}.dump(2) + "\n",
                 opt.outfile);
        else if (opt.format == "csv")
            emit(csv, opt.outfile);
        else
            emit(text, opt.outfile);
        return 0;
    }

    ResolvedGrading g = resolve_grading(opt.grading);
    std::string label = grading_label(g, opt.grading);
    if (opt.which == 1) {
        if (!g.elementary)
            throw std::invalid_argument("this check needs an elementary grading");
        BasisReport r = bad_tree_check(*g.elementary, opt.max_m, copts);
        return emit_report(opt, label, r, json{{"which", 1}, {"max_m", opt.max_m}});
    }
    int maxlen = opt.max_len > 0 ? opt.max_len : g.algebra.n;
    BasisReport r = monomial_identity_check(g.algebra, maxlen, opt.max_m, copts);
    return emit_report(opt, label, r,
                       json{{"which", 2}, {"max_len", maxlen}, {"max_m", opt.max_m}});
}

int cmd_compare(const Options& opt) {
    ComputeOptions copts = compute_options(opt);
    std::vector<std::string> names;
    if (opt.grading == "all")
        names = closed_form_names();
    else
        names.push_back(opt.grading);

    bool all_match = true;
    std::string text, csv = "grading,m,computed,formula,match,ratio\n";
    json blocks = json::array();
    for (const auto& name : names) {
        if (!has_closed_form(name))
            throw std::invalid_argument("no closed form for grading " + name);
        Preset p = get_preset(name);
        std::vector<CompareRow> rows = compare_with_formula(name, p.algebra, opt.max_m, copts);
        std::vector<Integer> cm;
        for (const auto& r : rows) cm.push_back(r.computed);
        std::vector<Rational> ratios = asymptotic_ratios(cm, p.eta_distinct);

        text += "grading " + name + "\n";
        json jrows = json::array();
        for (std::size_t k = 0; k < rows.size(); ++k) {
            const auto& r = rows[k];
            if (!r.match) all_match = false;
            std::string ratio = ratios[k].get_str();
            text += "  m=" + std::to_string(r.m) + " computed=" + r.computed.get_str() +
                    " formula=" + r.formula.get_str() +
                    (r.match ? " match" : " MISMATCH") + " ratio=" + ratio + "\n";
            csv += name + "," + std::to_string(r.m) + "," + r.computed.get_str() + "," +
                   r.formula.get_str() + "," + (r.match ? "1" : "0") + "," + ratio + "\n";
            jrows.push_back({{"m", r.m},
                             {"computed", integer_json(r.computed)},
                             {"formula", integer_json(r.formula)},
                             {"match", r.match},
                             {"ratio", ratio}});
        }
        blocks.push_back({{"grading", name}, {"rows", jrows}});
    }
    if (opt.format == "json")
        emit(json{{"schema", 1}, {"comparisons", blocks}}.dump(2) + "\n", opt.outfile);
    else if (opt.format == "csv")
        emit(csv, opt.outfile);
    else
        emit(text, opt.outfile);
    return all_match ? 0 : 1;
}

void diagnostic(const ParseError& e) {
    json d{{"message", e.what()},
           {"span", {{"begin", e.span.begin}, {"end", e.span.end}}},
           {"hint", e.hint}};
    std::cerr << d.dump() << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"graded polynomial identities of upper triangular matrix Lie algebras"};
    app.require_subcommand(1);
    Options opt;
    int rc = 0;

    auto add_common = [&](CLI::App* sub, bool compute) {
        sub->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"text", "json", "csv"}));
        sub->add_option("-o,--output", opt.outfile, "write output to a file");
        if (compute) {
            sub->add_option("--workers", opt.workers,
                            "worker threads (default: PI_WORKERS or 1)");
            sub->add_option("--cap", opt.cap, "stored nonzero budget per dimension");
        }
    };

    auto* gradings = app.add_subcommand("gradings", "list the built-in gradings");
    add_common(gradings, false);
    gradings->callback([&] { rc = cmd_gradings(opt); });

    auto* codim = app.add_subcommand("codim", "graded codimension sequence");
    codim->add_option("--grading", opt.grading, "preset or ut(n; ...) over GROUP")->required();
    codim->add_option("--max-m", opt.max_m, "largest multilinear degree")
        ->check(CLI::Range(1l, 12l));
    add_common(codim, true);
    codim->callback([&] { rc = cmd_codim(opt); });

    auto* check = app.add_subcommand("check", "test one polynomial for being an identity");
    check->add_option("--grading", opt.grading, "preset or ut(n; ...) over GROUP")->required();
    check->add_option("--poly", opt.poly, "polynomial to test")->required();
    add_common(check, false);
    check->callback([&] { rc = cmd_check(opt); });

    auto* verify = app.add_subcommand("verify-basis",
                                      "check a generating set against the algebra");
    verify->add_option("--grading", opt.grading, "preset or ut(n; ...) over GROUP")->required();
    verify->add_option("--generators", opt.generators_file,
                       "generator file (default: the built-in set)");
    verify->add_option("--max-m", opt.max_m, "largest multilinear degree")
        ->check(CLI::Range(1l, 9l));
    add_common(verify, true);
    verify->callback([&] { rc = cmd_verify(opt); });

    auto* badtrees = app.add_subcommand("badtrees", "classify degree trees");
    badtrees->add_option("--grading", opt.grading, "elementary grading")->required();
    badtrees->add_option("--max-len", opt.max_len, "largest tree length (default n)")
        ->check(CLI::Range(1, 8));
    add_common(badtrees, false);
    badtrees->callback([&] { rc = cmd_badtrees(opt); });

    auto* conjecture = app.add_subcommand("conjecture", "evidence for the open conjectures");
    conjecture->add_option("--which", opt.which, "1 bad trees, 2 monomial identities, 3 coarsening")
        ->required()
        ->check(CLI::Range(1, 3));
    conjecture->add_option("--grading", opt.grading, "grading for --which 1 or 2");
    conjecture->add_option("--pair", opt.pair, "FINE:COARSE gradings for --which 3");
    conjecture->add_option("--max-m", opt.max_m, "largest multilinear degree")
        ->check(CLI::Range(1l, 9l));
    conjecture->add_option("--max-len", opt.max_len, "largest block count for --which 2")
        ->check(CLI::Range(1, 8));
    add_common(conjecture, true);
    conjecture->callback([&] { rc = cmd_conjecture(opt); });

    auto* compare = app.add_subcommand("compare", "computed codimensions against closed forms");
    compare->alias("codim-table");
    compare->add_option("--grading", opt.grading, "closed-form grading name, or all")
        ->required();
    compare->add_option("--max-m", opt.max_m, "largest multilinear degree")
        ->check(CLI::Range(1l, 12l));
    add_common(compare, true);
    compare->callback([&] { rc = cmd_compare(opt); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const ParseError& e) {
        diagnostic(e);
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}
