// Command-line surface: compute normal forms, quasi-derivations and central
// elements, and run the verification suites.

#include "glshift/glshift.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace glshift;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct ComputeOptions {
    int d = 2;
    std::string op;
    std::vector<std::string> args;
    int i = 1, j = 1, k = 1, n = 1;
    std::string xi;
    std::string variant = "hat";
    std::string format = "text";
};

struct VerifyOptions {
    int d = 2;
    std::string suite;
    std::vector<std::string> xi;
    int p_max = -1;  // -1: per-suite default
    std::string pair = "all";
    bool with_sigma_seeds = false;
    std::string elem;  // centralizer: check this element instead of the family
    long long budget = kDefaultTermBudget;
    std::string format = "text";
};

Variant parse_variant(const std::string& name) {
    if (name == "hat") return Variant::hat;
    if (name == "bar") return Variant::bar;
    throw CLI::ValidationError("--variant must be 'hat' or 'bar'");
}

ShiftMatrix default_xi(int d) {
    std::vector<Rational> diag;
    for (int i = d; i >= 1; --i) diag.emplace_back(i);
    return ShiftMatrix::diagonal(diag);
}

std::vector<ShiftMatrix> resolve_xis(const VerifyOptions& opt) {
    std::vector<ShiftMatrix> out;
    for (const auto& text : opt.xi) out.push_back(parse_shift_matrix(text, opt.d));
    if (out.empty()) out.push_back(default_xi(opt.d));
    return out;
}

void emit_element(const UEAElement& e, const std::string& format) {
    if (format == "json")
        std::cout << to_json(e).dump() << "\n";
    else
        std::cout << print_element(e) << "\n";
}

// Element arguments are inline text, or @path to read the text from a file.
std::string element_text(const std::string& arg) {
    if (arg.empty() || arg.front() != '@') return arg;
    std::ifstream in(arg.substr(1));
    if (!in) throw CLI::ValidationError("cannot open element file '" + arg.substr(1) + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

int run_compute(const ComputeOptions& opt) {
    const auto need_args = [&](std::size_t count) {
        if (opt.args.size() != count)
            throw CLI::ValidationError("operation '" + opt.op + "' expects " +
                                       std::to_string(count) + " element argument(s)");
    };
    const auto element_arg = [&](std::size_t index) {
        return parse_element(element_text(opt.args[index]), opt.d);
    };
    if (opt.op == "normal-order") {
        need_args(1);
        emit_element(element_arg(0), opt.format);
    } else if (opt.op == "multiply") {
        need_args(2);
        emit_element(element_arg(0) * element_arg(1), opt.format);
    } else if (opt.op == "commutator") {
        need_args(2);
        emit_element(commutator(element_arg(0), element_arg(1)), opt.format);
    } else if (opt.op == "qderiv") {
        need_args(1);
        emit_element(quasi_derive(parse_variant(opt.variant), opt.i, opt.j, element_arg(0)),
                     opt.format);
    } else if (opt.op == "dderiv") {
        need_args(1);
        if (opt.xi.empty()) throw CLI::ValidationError("dderiv requires --xi");
        emit_element(directional_derive(parse_shift_matrix(opt.xi, opt.d), element_arg(0),
                                        parse_variant(opt.variant)),
                     opt.format);
    } else if (opt.op == "symmetrize") {
        need_args(1);
        emit_element(symmetrize(parse_sym_element(element_text(opt.args[0]), opt.d)), opt.format);
    } else if (opt.op == "tau") {
        need_args(0);
        emit_element(tau(opt.k, opt.d), opt.format);
    } else if (opt.op == "power-entry") {
        need_args(0);
        emit_element(power_entry(opt.n, opt.i, opt.j, opt.d), opt.format);
    } else if (opt.op == "t-hat") {
        need_args(0);
        if (opt.xi.empty()) throw CLI::ValidationError("t-hat requires --xi");
        emit_element(t_hat(parse_shift_matrix(opt.xi, opt.d), opt.i), opt.format);
    } else {
        throw CLI::ValidationError(
            "unknown operation '" + opt.op +
            "' (expected one of: normal-order multiply commutator qderiv dderiv symmetrize tau "
            "power-entry t-hat)");
    }
    return kExitOk;
}

void merge_into(Report& total, const Report& part, const std::string& prefix) {
    for (const auto& kv : part.config) total.config.push_back(kv);
    for (const auto& check : part.checks)
        total.checks.push_back({prefix + check.id, check.pass, check.witness});
}

std::string xi_label(const ShiftMatrix& xi) {
    std::string out = "xi=[";
    for (int i = 1; i <= xi.dim(); ++i) {
        if (i > 1) out += ';';
        for (int j = 1; j <= xi.dim(); ++j) {
            if (j > 1) out += ',';
            out += xi.at(i, j).str();
        }
    }
    return out + "] ";
}

std::vector<VariantPair> resolve_pairings(const std::string& pair) {
    if (pair == "all")
        return {VariantPair::hat_hat, VariantPair::hat_bar, VariantPair::bar_bar};
    if (pair == "hat-hat") return {VariantPair::hat_hat};
    if (pair == "hat-bar") return {VariantPair::hat_bar};
    if (pair == "bar-bar") return {VariantPair::bar_bar};
    throw CLI::ValidationError("--pair must be one of: all hat-hat hat-bar bar-bar");
}

int run_verify(const VerifyOptions& opt) {
    const int d = opt.d;
    Report total;
    total.suite = opt.suite;
    total.config.emplace_back("d", std::to_string(d));

    if (opt.suite == "theorem1") {
        const int p_max = opt.p_max < 0 ? 2 : opt.p_max;
        auto seeds = tau_seeds(d);
        if (opt.with_sigma_seeds)
            for (auto& s : sigma_seeds(d)) seeds.push_back(std::move(s));
        for (const auto& xi : resolve_xis(opt))
            for (VariantPair pairing : resolve_pairings(opt.pair)) {
                TheoremOneConfig cfg{xi, seeds, p_max, pairing, opt.budget};
                merge_into(total, verify_theorem1(cfg), xi_label(xi));
            }
    } else if (opt.suite == "eq9") {
        for (const auto& xi : resolve_xis(opt))
            for (int i = 1; i <= d; ++i) {
                const Eq9Result r = verify_eq9(xi, i);
                total.checks.push_back(
                    {xi_label(xi) + "eq9 i=" + std::to_string(i) + " expected=" + r.expected.str(),
                     r.pass,
                     r.pass ? std::nullopt : std::optional<UEAElement>(r.computed)});
            }
    } else if (opt.suite == "lemma1") {
        const int n_max = opt.p_max < 0 ? d + 1 : opt.p_max;
        for (const auto& xi : resolve_xis(opt))
            for (int i = 1; i <= d; ++i)
                for (int n = 0; n <= n_max; ++n)
                    total.checks.push_back({xi_label(xi) + "lemma1 i=" + std::to_string(i) +
                                                " n=" + std::to_string(n),
                                            verify_lemma1(xi, i, n), std::nullopt});
    } else if (opt.suite == "centralizer") {
        const int p_max = opt.p_max < 0 ? 2 : opt.p_max;
        for (const auto& xi : resolve_xis(opt)) {
            if (!opt.elem.empty()) {
                merge_into(total, verify_centralizer(xi, parse_element(opt.elem, d), opt.budget),
                           xi_label(xi) + "elem ");
                continue;
            }
            const ShiftFamily fam =
                build_shift_family(xi, tau_seeds(d), p_max, Variant::hat, opt.budget);
            for (std::size_t s = 0; s < fam.seeds.size(); ++s)
                for (int p = 0; p <= p_max; ++p)
                    merge_into(total, verify_centralizer(xi, fam.elements[s][p], opt.budget),
                               xi_label(xi) + fam.seeds[s].first + "^" + std::to_string(p) + " ");
        }
    } else if (opt.suite == "invariant-module") {
        for (const auto& xi : resolve_xis(opt))
            for (int i = 1; i <= d; ++i)
                for (int k = 1; k <= d; ++k)
                    total.checks.push_back(
                        {xi_label(xi) + "invariant-module i=" + std::to_string(i) + " tau" +
                             std::to_string(k),
                         verify_invariant_module(xi, i, tau(k, d)), std::nullopt});
    } else if (opt.suite == "classical-shift") {
        const int p_max = opt.p_max < 0 ? 4 : opt.p_max;
        const auto gens = char_poly_generators(d);
        for (const auto& xi : resolve_xis(opt))
            for (std::size_t a = 0; a < gens.size(); ++a)
                for (std::size_t b = a; b < gens.size(); ++b)
                    for (int p = 0; p <= p_max; ++p)
                        for (int q = 0; p + q <= p_max; ++q)
                            total.checks.push_back(
                                {xi_label(xi) + "classical {d^" + std::to_string(p) + " I" +
                                     std::to_string(a + 1) + ", d^" + std::to_string(q) + " I" +
                                     std::to_string(b + 1) + "}",
                                 classical_shift_check(xi, p, q, gens[a], gens[b]), std::nullopt});
    } else {
        throw CLI::ValidationError(
            "unknown suite '" + opt.suite +
            "' (expected one of: theorem1 eq9 lemma1 centralizer invariant-module classical-shift)");
    }

    if (opt.format == "json") {
        std::cout << to_json(total).dump(2) << "\n";
    } else {
        std::size_t passed = 0;
        for (const auto& check : total.checks) {
            std::cout << (check.pass ? "pass  " : "FAIL  ") << check.id << "\n";
            if (check.pass) ++passed;
        }
        std::cout << passed << "/" << total.checks.size() << " checks passed\n";
    }
    return total.all_pass() ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact symbolic computation in the universal enveloping algebra U(gl_d)"};
    app.require_subcommand(1);

    ComputeOptions copt;
    CLI::App* compute = app.add_subcommand("compute", "Evaluate one operation and print the result");
    compute->add_option("--d", copt.d, "ambient dimension d")->required()->check(CLI::PositiveNumber);
    compute->add_option("op", copt.op, "operation name")->required();
    compute->add_option("args", copt.args, "element arguments in the text grammar");
    compute->add_option("--i", copt.i, "row index");
    compute->add_option("--j", copt.j, "column index");
    compute->add_option("--k", copt.k, "trace order");
    compute->add_option("--n", copt.n, "power");
    compute->add_option("--xi", copt.xi, "shift matrix, diag:a,b,... or full:[[...]]");
    compute->add_option("--variant", copt.variant, "quasi-derivation variant: hat or bar");
    compute->add_option("--format", copt.format, "output format: text or json");

    VerifyOptions vopt;
    CLI::App* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("--d", vopt.d, "ambient dimension d")->required()->check(CLI::PositiveNumber);
    verify->add_option("suite", vopt.suite, "suite name")->required();
    verify->add_option("--xi", vopt.xi, "shift matrix (repeatable)");
    verify->add_option("--pmax", vopt.p_max, "maximum derivation order");
    verify->add_option("--pair", vopt.pair, "variant pairing: all hat-hat hat-bar bar-bar");
    verify->add_flag("--with-sigma-seeds", vopt.with_sigma_seeds,
                     "add symmetrized characteristic-polynomial seeds");
    verify->add_option("--elem", vopt.elem,
                       "centralizer: check this element instead of the generated family");
    verify->add_option("--budget", vopt.budget, "term-count ceiling")
        ->envname("GLSHIFT_TERM_BUDGET")
        ->check(CLI::PositiveNumber);
    verify->add_option("--format", vopt.format, "output format: text or json");

    try {
        app.parse(argc, argv);
        if (compute->parsed()) return run_compute(copt);
        return run_verify(vopt);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    } catch (const glshift::BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const glshift::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
