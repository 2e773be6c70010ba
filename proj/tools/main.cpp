#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "suites.hpp"
#include "unischubert/determinants.hpp"
#include "unischubert/errors.hpp"
#include "unischubert/locus.hpp"
#include "unischubert/poly_io.hpp"
#include "unischubert/product_rule.hpp"
#include "unischubert/ring.hpp"
#include "unischubert/schubert.hpp"
#include "unischubert/specialize.hpp"

using namespace unischubert;
using nlohmann::json;

namespace {

enum class Format { Text, Latex, Json };

struct Common {
    std::string format = "text";
    int n = -1;

    Format fmt() const
    {
        if (format == "latex") return Format::Latex;
        if (format == "json") return Format::Json;
        return Format::Text;
    }
};

void add_common(CLI::App* app, Common& c, bool with_n = true)
{
    app->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "latex", "json"}));
    if (with_n) app->add_option("--n", c.n, "Ambient n (default: word length - 1)")->check(CLI::NonNegativeNumber);
}

int ambient(const Common& c, const Permutation& w)
{
    const int n = c.n >= 0 ? c.n : w.size() - 1;
    if (w.trimmed().size() > n + 1) throw DomainError(w.to_string() + " is not in S_" + std::to_string(n + 1));
    return n;
}

std::string render(const Polynomial& p, Format f, const VariableNamer& namer = {})
{
    switch (f) {
    case Format::Latex: return to_latex(p, namer);
    case Format::Json: return to_json(p).dump();
    default: return to_text(p, namer);
    }
}

std::string join(const std::vector<int>& v, char sep = ',')
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? std::string(1, sep) : "") + std::to_string(v[i]);
    return s;
}

void print_expansion(const std::map<Permutation, Polynomial>& e, Format f)
{
    if (f == Format::Json) {
        json out = json::array();
        for (const auto& [w, c] : e) out.push_back({{"w", w.to_string()}, {"coeff", to_json(c)}});
        std::cout << out.dump() << '\n';
        return;
    }
    if (e.empty()) std::cout << "0\n";
    for (const auto& [w, c] : e) {
        if (f == Format::Latex)
            std::cout << '(' << to_latex(c) << ")\\,\\frak{S}_{" << join(w.word(), ' ') << "}\n";
        else
            std::cout << '[' << w.to_string() << "] " << to_text(c) << '\n';
    }
}

Polynomial single_polynomial(const Permutation& w, int n, const std::string& method)
{
    if (method == "elementary") return universal_single(w, n).to_polynomial();
    if (method == "inductive") return universal_single_inductive(w, n).to_polynomial();
    return universal_cy(w, n).to_polynomial();
}

// Rows of S_w(c,d) for S_{n+1}, by decreasing length, then by word.
void golden_table(int n, Format f)
{
    auto perms = all_permutations(n + 1);
    std::stable_sort(perms.begin(), perms.end(), [](const Permutation& a, const Permutation& b) { return a.length() > b.length(); });
    json rows = json::array();
    for (const auto& w : perms) {
        const Polynomial p = universal_double(w, n);
        switch (f) {
        case Format::Json: rows.push_back({{"w", w.to_string()}, {"poly", to_json(p)}}); break;
        case Format::Latex: std::cout << "\\frak{S}_{" << join(w.word(), ' ') << "} &= " << to_latex(p) << " \\\\\n"; break;
        default: std::cout << w.to_string() << '\t' << to_text(p) << '\n';
        }
    }
    if (f == Format::Json) std::cout << rows.dump() << '\n';
}

void print_suite(const cli::SuiteResult& r, Format f)
{
    if (f == Format::Json) {
        std::cout << cli::to_json(r).dump() << '\n';
        return;
    }
    std::cout << r.name << " (n=" << r.n << "): " << r.checked << " checks, ";
    if (r.ok()) {
        std::cout << "ok\n";
        return;
    }
    std::cout << r.failures.size() << " failures\n";
    for (const auto& msg : r.failures) std::cout << "  " << msg << '\n';
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Universal Schubert polynomials"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    // single
    Common single_opts;
    std::string single_w, single_method = "inductive", single_form = "c";
    auto* single = app.add_subcommand("single", "Universal single polynomial S_w(c)");
    single->add_option("w", single_w, "Permutation, comma separated")->required();
    single->add_option("--method", single_method, "Construction")->check(CLI::IsMember({"elementary", "inductive", "cy"}));
    single->add_option("--form", single_form, "Variables of the output")->check(CLI::IsMember({"c", "g"}));
    add_common(single, single_opts);

    // double
    Common double_opts;
    std::string double_w;
    bool double_all = false;
    auto* dbl = app.add_subcommand("double", "Universal double polynomial S_w(c,d), or the table for S_{n+1}");
    dbl->add_option("w", double_w, "Permutation, comma separated");
    dbl->add_flag("--all", double_all, "Print every w in S_{n+1}");
    add_common(dbl, double_opts);

    // specialize
    Common spec_opts;
    std::string spec_w, spec_target, spec_route = "A";
    bool spec_double = false;
    auto* spec = app.add_subcommand("specialize", "Specialize S_w(c) or S_w(c,d)");
    spec->add_option("w", spec_w, "Permutation, comma separated")->required();
    spec->add_option("--target", spec_target, "classical, classical-d, g-form, quantum, zero-y or flags=n1,..,nl")->required();
    spec->add_option("--route", spec_route, "Partial-flag route")->check(CLI::IsMember({"A", "B"}));
    spec->add_flag("--double", spec_double, "Start from S_w(c,d)");
    add_common(spec, spec_opts);

    // locus
    Common locus_opts;
    std::string locus_w, ranks_e, ranks_f;
    bool interval_mode = false;
    auto* locus = app.add_subcommand("locus", "Degeneracy locus class in the Chern classes of the flags");
    locus->add_option("w", locus_w, "Permutation, comma separated")->required();
    locus->add_option("--ranks-e", ranks_e, "Ranks a_1 < ... < a_r")->required();
    locus->add_option("--ranks-f", ranks_f, "Ranks b_1 < ... < b_s")->required();
    locus->add_flag("--interval-mode", interval_mode, "Allow D'(w) outside A x B");
    add_common(locus, locus_opts);

    // expand
    Common expand_opts;
    std::string expand_poly;
    bool expand_ring = false;
    auto* expand = app.add_subcommand("expand", "Expand a polynomial in universal Schubert polynomials");
    expand->add_option("poly", expand_poly, "Polynomial in the c_i(j) (or x, g with --ring)")->required();
    expand->add_flag("--ring", expand_ring, "Expand in R_n over the g_i[j], j >= 1");
    add_common(expand, expand_opts);

    // product-rule
    Common pr_opts;
    int pr_i = 0, pr_j = 0, pr_k = 0;
    auto* pr = app.add_subcommand("product-rule", "Expansion of c_i(k) c_j(k)");
    pr->add_option("--i", pr_i)->required()->check(CLI::NonNegativeNumber);
    pr->add_option("--j", pr_j)->required()->check(CLI::NonNegativeNumber);
    pr->add_option("--k", pr_k)->required()->check(CLI::NonNegativeNumber);
    add_common(pr, pr_opts, false);

    // search-det19
    Common det_opts;
    std::string det_w;
    bool det_all = false;
    auto* det = app.add_subcommand("search-det19", "Search row-constant determinants D_a(b) equal to S_w(c)");
    det->add_option("w", det_w, "Permutation, comma separated")->required();
    det->add_flag("--all", det_all, "Report every sigma");
    add_common(det, det_opts);

    // ring
    Common ring_opts;
    std::string ring_action;
    std::vector<std::string> ring_args;
    int ring_jobs = 1;
    auto* ring = app.add_subcommand("ring", "Computations in R_n");
    ring->add_option("action", ring_action, "normal-form P | multiply U V | inner P Q | omega P | check orthogonality|vanishing|staircase")
        ->required()
        ->check(CLI::IsMember({"normal-form", "multiply", "inner", "omega", "check"}));
    ring->add_option("args", ring_args, "Arguments of the action");
    ring->add_option("--jobs", ring_jobs)->check(CLI::PositiveNumber);
    add_common(ring, ring_opts);

    // verify
    Common verify_opts;
    std::string verify_suite;
    int verify_jobs = 1;
    std::vector<std::string> suite_names{"all"};
    for (const auto& s : cli::suites()) suite_names.push_back(s.name);
    auto* verify = app.add_subcommand("verify", "Run an identity suite; exit 2 on failure");
    verify->add_option("suite", verify_suite, "Suite name")->required()->check(CLI::IsMember(suite_names));
    verify->add_option("--jobs", verify_jobs)->check(CLI::PositiveNumber);
    add_common(verify, verify_opts);

    // census
    Common census_opts;
    int census_jobs = 1;
    auto* census = app.add_subcommand("census", "Row-constant determinant search over S_{n+1}");
    census->add_option("--jobs", census_jobs)->check(CLI::PositiveNumber);
    add_common(census, census_opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n\n" << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
        return 1;
    }

    try {
        if (*single) {
            const auto w = Permutation::parse(single_w);
            const int n = ambient(single_opts, w);
            Polynomial p = single_polynomial(w, n, single_method);
            if (single_form == "g") p = to_g_form(p);
            std::cout << render(p, single_opts.fmt()) << '\n';
        } else if (*dbl) {
            if (double_all || double_w.empty()) {
                if (double_opts.n < 0) throw DomainError("double --all needs --n");
                golden_table(double_opts.n, double_opts.fmt());
            } else {
                const auto w = Permutation::parse(double_w);
                std::cout << render(universal_double(w, ambient(double_opts, w)), double_opts.fmt()) << '\n';
            }
        } else if (*spec) {
            const auto w = Permutation::parse(spec_w);
            const int n = ambient(spec_opts, w);
            Polynomial out;
            if (spec_target.rfind("flags=", 0) == 0) {
                if (spec_double) throw DomainError("partial-flag specialization is defined for S_w(c) only");
                const auto N = FlagProfile::parse(spec_target.substr(6));
                out = partial_flag_specialize(w, N, spec_route == "A" ? FlagRoute::A : FlagRoute::B);
            } else {
                const auto map = SpecializationMap::parse(spec_target);
                out = map.apply(spec_double ? universal_double(w, n) : universal_single_inductive(w, n).to_polynomial());
            }
            std::cout << render(out, spec_opts.fmt()) << '\n';
        } else if (*locus) {
            const auto w = Permutation::parse(locus_w);
            const auto f = locus_formula(w, RankProfile::parse(ranks_e, ranks_f), interval_mode, ambient(locus_opts, w));
            std::cout << render(f.value, locus_opts.fmt(), locus_opts.fmt() == Format::Json ? VariableNamer{} : f.namer()) << '\n';
        } else if (*expand) {
            if (expand_opts.n < 0) throw DomainError("expand needs --n");
            const Polynomial p = parse_polynomial(expand_poly);
            if (expand_ring) {
                RingContext ctx(expand_opts.n);
                print_expansion(ctx.schubert_expand(ctx.normal_form(p)), expand_opts.fmt());
            } else {
                print_expansion(schubert_expand_M(MElement::from_polynomial(p, expand_opts.n)), expand_opts.fmt());
            }
        } else if (*pr) {
            const auto r = product_rule(pr_i, pr_j, pr_k);
            if (pr_opts.fmt() == Format::Json) {
                std::cout << to_json(r).dump() << '\n';
            } else {
                std::cout << render(r.left, pr_opts.fmt()) << " =\n";
                for (const auto& term : r.right)
                    std::cout << "  + (" << render(term.coeff, pr_opts.fmt()) << ") S[" << term.w.to_string() << "]\n";
                std::cout << (r.equal ? "holds" : "FAILS") << " in g-variables; classical shadow "
                          << (r.classical_ok ? "holds" : "FAILS") << '\n';
            }
            if (!r.equal || !r.classical_ok) return 2;
        } else if (*det) {
            const auto w = Permutation::parse(det_w);
            const auto found = row_determinant_search(w, ambient(det_opts, w), det_all);
            if (det_opts.fmt() == Format::Json) {
                json out = json::array();
                for (const auto& m : found) out.push_back({{"sigma", m.sigma.word()}, {"spec", to_json(m.spec)}});
                std::cout << out.dump() << '\n';
            } else if (found.empty()) {
                std::cout << "none\n";
            } else {
                for (const auto& m : found)
                    std::cout << "sigma=" << m.sigma.to_string() << "  D_{" << join(m.spec.a, ' ') << "}(" << join(m.spec.b, ' ') << ")\n";
            }
        } else if (*ring) {
            if (ring_opts.n < 1) throw DomainError("ring needs --n >= 1");
            const int n = ring_opts.n;
            auto need = [&](std::size_t k) {
                if (ring_args.size() != k)
                    throw DomainError("ring " + ring_action + " takes " + std::to_string(k) + " argument(s)");
            };
            RingContext ctx(n);
            const Format f = ring_opts.fmt();
            if (ring_action == "normal-form") {
                need(1);
                const auto e = ctx.normal_form(parse_polynomial(ring_args[0]));
                std::cout << (f == Format::Json ? to_json(e).dump() : render(e.to_polynomial(), f)) << '\n';
            } else if (ring_action == "multiply") {
                need(2);
                print_expansion(ctx.multiply_expand(Permutation::parse(ring_args[0]), Permutation::parse(ring_args[1])), f);
            } else if (ring_action == "inner") {
                need(2);
                const auto p = parse_polynomial(ring_args[0]), q = parse_polynomial(ring_args[1]);
                const auto value = ctx.inner_product(p, q);
                if (value != ctx.inner_product_via_top_class(p, q))
                    throw VerificationError("inner product routes disagree");
                std::cout << render(value, f) << '\n';
            } else if (ring_action == "omega") {
                need(1);
                std::cout << render(omega(parse_polynomial(ring_args[0]), n), f) << '\n';
            } else {
                need(1);
                const auto* s = cli::find_suite(ring_args[0]);
                if (!s || (ring_args[0] != "orthogonality" && ring_args[0] != "vanishing" && ring_args[0] != "staircase"))
                    throw DomainError("unknown ring check '" + ring_args[0] + "'");
                const auto r = s->run(n, ring_jobs);
                print_suite(r, f);
                if (!r.ok()) return 2;
            }
        } else if (*verify) {
            bool ok = true;
            for (const auto& s : cli::suites()) {
                if (verify_suite != "all" && verify_suite != s.name) continue;
                const auto r = s.run(verify_opts.n >= 0 ? verify_opts.n : s.default_n, verify_jobs);
                print_suite(r, verify_opts.fmt());
                ok = ok && r.ok();
            }
            if (!ok) return 2;
        } else if (*census) {
            const int n = census_opts.n >= 0 ? census_opts.n : 4;
            const auto records = row_determinant_census(n, census_jobs);
            if (census_opts.fmt() == Format::Json) {
                std::cout << to_json(records).dump() << '\n';
            } else {
                std::size_t found = 0;
                for (const auto& r : records) {
                    std::cout << r.w.to_string() << '\t';
                    if (r.match) {
                        ++found;
                        std::cout << "D_{" << join(r.match->spec.a, ' ') << "}(" << join(r.match->spec.b, ' ') << ")\n";
                    } else {
                        std::cout << "none\n";
                    }
                }
                std::cout << found << " of " << records.size() << " have a determinantal expression\n";
            }
        }
    } catch (const VerificationError& e) {
        std::cerr << "verification failed: " << e.what() << '\n';
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
