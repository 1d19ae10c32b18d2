#pragma once

// Argument-shift data in U(gl_d) and the executable verification suites:
// commutativity of iterated quasi-derivations of central elements, the
// centralizer conditions, and the supporting trace identities.

#include "glshift/classical.hpp"
#include "glshift/matrix_calc.hpp"
#include "glshift/pbw.hpp"
#include "glshift/quasideriv.hpp"
#include "glshift/shift_matrix.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace glshift {

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr long long kDefaultTermBudget = 1'000'000;

// T_i(xi) = sum_{j != i} e[j,i] e[i,j] / (xi_i - xi_j), for regular diagonal xi.
inline UEAElement t_hat(const ShiftMatrix& xi, int i) {
    const int d = xi.dim();
    if (i < 1 || i > d) throw std::invalid_argument("t_hat: index out of range");
    if (!xi.is_regular_diagonal())
        throw std::invalid_argument("t_hat: xi must be diagonal with pairwise-distinct entries");
    UEAElement out = UEAElement::zero(d);
    for (int j = 1; j <= d; ++j) {
        if (j == i) continue;
        const Rational denom = xi.at(i, i) - xi.at(j, j);
        out += UEAElement::generator(d, j, i) * UEAElement::generator(d, i, j) * (Rational(1) / denom);
    }
    return out;
}

// p-fold directional quasi-derivation of a central seed.
inline UEAElement iterate_shift(const ShiftMatrix& xi, const UEAElement& f, int p,
                                Variant variant = Variant::hat) {
    if (p < 0) throw std::invalid_argument("iterate_shift: order must be >= 0");
    if (xi.dim() != f.dim()) throw std::invalid_argument("iterate_shift: dimension mismatch");
    if (!is_central(f)) throw std::invalid_argument("iterate_shift: seed is not central");
    UEAElement out = f;
    for (int t = 0; t < p; ++t) out = directional_derive(xi, out, variant);
    return out;
}

using NamedElement = std::pair<std::string, UEAElement>;

// tau_1..tau_d, the default seed set.
inline std::vector<NamedElement> tau_seeds(int dim) {
    std::vector<NamedElement> out;
    for (int k = 1; k <= dim; ++k) out.emplace_back("tau" + std::to_string(k), tau(k, dim));
    return out;
}

// Symmetrized characteristic-polynomial generators sigma(I_2)..sigma(I_d).
inline std::vector<NamedElement> sigma_seeds(int dim) {
    std::vector<NamedElement> out;
    const auto gens = char_poly_generators(dim);
    for (int k = 2; k <= dim; ++k)
        out.emplace_back("sigmaI" + std::to_string(k),
                         symmetrize(gens[static_cast<std::size_t>(k) - 1]));
    return out;
}

struct ShiftFamily {
    ShiftMatrix xi;
    std::vector<NamedElement> seeds;
    int max_order = 0;
    Variant variant = Variant::hat;
    // elements[s][p] = p-fold directional derivative of seeds[s].
    std::vector<std::vector<UEAElement>> elements;
};

inline ShiftFamily build_shift_family(const ShiftMatrix& xi, std::vector<NamedElement> seeds,
                                      int max_order, Variant variant,
                                      long long term_budget = kDefaultTermBudget) {
    ShiftFamily fam{xi, std::move(seeds), max_order, variant, {}};
    for (const auto& [name, seed] : fam.seeds) {
        if (!is_central(seed))
            throw std::invalid_argument("shift family seed '" + name + "' is not central");
        std::vector<UEAElement> chain{seed};
        for (int p = 1; p <= max_order; ++p) {
            chain.push_back(directional_derive(xi, chain.back(), variant));
            if (static_cast<long long>(chain.back().term_count()) > term_budget)
                throw BudgetExceeded("shift family element exceeds the term budget");
        }
        fam.elements.push_back(std::move(chain));
    }
    return fam;
}

struct CheckResult {
    std::string id;
    bool pass = false;
    std::optional<UEAElement> witness;  // the nonzero element, when failing
};

struct Report {
    std::string suite;
    std::vector<std::pair<std::string, std::string>> config;
    std::vector<CheckResult> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

enum class VariantPair { hat_hat, hat_bar, bar_bar };

inline const char* variant_pair_name(VariantPair p) {
    switch (p) {
        case VariantPair::hat_hat: return "hat-hat";
        case VariantPair::hat_bar: return "hat-bar";
        default: return "bar-bar";
    }
}

namespace detail {

// Number of PBW monomials of degree <= maxdeg in d*d variables, i.e.
// binom(d*d + maxdeg, maxdeg); used as a per-commutator size estimate.
inline Integer pbw_monomial_count(int dim, int maxdeg) {
    Integer count = 1;
    for (int t = 1; t <= maxdeg; ++t) {
        count *= dim * dim + t;
        count /= t;
    }
    return count;
}

inline void append_commutator_check(Report& report, const std::string& id, const UEAElement& a,
                                    const UEAElement& b, long long term_budget) {
    UEAElement c = commutator(a, b);
    if (static_cast<long long>(c.term_count()) > term_budget)
        throw BudgetExceeded("commutator exceeds the term budget");
    CheckResult r{id, c.is_zero(), std::nullopt};
    if (!r.pass) r.witness = std::move(c);
    report.checks.push_back(std::move(r));
}

}  // namespace detail

struct TheoremOneConfig {
    ShiftMatrix xi;
    std::vector<NamedElement> seeds;
    int p_max = 2;
    VariantPair pairing = VariantPair::hat_hat;
    long long term_budget = kDefaultTermBudget;
};

// Checks that all pairs of iterated directional quasi-derivations of the
// central seeds commute, for orders p + q <= p_max under the chosen variant
// pairing.  Refuses configurations whose estimated total term count exceeds
// the budget before doing any heavy work.
inline Report verify_theorem1(const TheoremOneConfig& cfg) {
    const int d = cfg.xi.dim();
    if (cfg.p_max < 0) throw std::invalid_argument("verify_theorem1: p_max must be >= 0");

    int max_deg = 0;
    for (const auto& [name, seed] : cfg.seeds) max_deg = std::max(max_deg, seed.degree());

    const long long n_pairs = static_cast<long long>(cfg.seeds.size()) * cfg.seeds.size() *
                              ((cfg.p_max + 1) * (cfg.p_max + 2) / 2);
    const Integer estimate = Integer(n_pairs) * detail::pbw_monomial_count(d, 2 * max_deg);
    if (estimate > cfg.term_budget)
        throw BudgetExceeded("verify_theorem1: estimated term count " + estimate.str() +
                             " exceeds the budget of " + std::to_string(cfg.term_budget));

    Report report;
    report.suite = "theorem1";
    report.config = {{"d", std::to_string(d)},
                     {"p_max", std::to_string(cfg.p_max)},
                     {"pairing", variant_pair_name(cfg.pairing)}};
    for (const auto& [name, seed] : cfg.seeds) report.config.emplace_back("seed", name);

    const Variant first = cfg.pairing == VariantPair::bar_bar ? Variant::bar : Variant::hat;
    const Variant second = cfg.pairing == VariantPair::hat_hat ? Variant::hat : Variant::bar;

    const ShiftFamily fam_a = build_shift_family(cfg.xi, cfg.seeds, cfg.p_max, first,
                                                 cfg.term_budget);
    const ShiftFamily fam_b = first == second
                                  ? fam_a
                                  : build_shift_family(cfg.xi, cfg.seeds, cfg.p_max, second,
                                                       cfg.term_budget);
    const bool symmetric = first == second;

    for (std::size_t sa = 0; sa < fam_a.seeds.size(); ++sa)
        for (std::size_t sb = symmetric ? sa : 0; sb < fam_b.seeds.size(); ++sb)
            for (int p = 0; p <= cfg.p_max; ++p)
                for (int q = 0; q + p <= cfg.p_max; ++q) {
                    if (symmetric && sa == sb && q < p) continue;
                    const std::string id = "[" + std::string(variant_name(first)) + "^" +
                                           std::to_string(p) + " " + fam_a.seeds[sa].first + ", " +
                                           variant_name(second) + "^" + std::to_string(q) + " " +
                                           fam_b.seeds[sb].first + "]";
                    detail::append_commutator_check(report, id, fam_a.elements[sa][p],
                                                    fam_b.elements[sb][q], cfg.term_budget);
                }
    return report;
}

// Necessary conditions for membership in the shift subalgebra:
// x must commute with every diagonal generator and with every T_i(xi).
inline Report verify_centralizer(const ShiftMatrix& xi, const UEAElement& x,
                                 long long term_budget = kDefaultTermBudget) {
    if (!xi.is_regular_diagonal())
        throw std::invalid_argument("verify_centralizer: xi must be regular diagonal");
    const int d = xi.dim();
    Report report;
    report.suite = "centralizer";
    report.config = {{"d", std::to_string(d)}};
    for (int i = 1; i <= d; ++i)
        detail::append_commutator_check(report, "diagonal e[" + std::to_string(i) + "," +
                                        std::to_string(i) + "]",
                                        UEAElement::generator(d, i, i), x, term_budget);
    for (int i = 1; i <= d; ++i)
        detail::append_commutator_check(report, "t_hat i=" + std::to_string(i), t_hat(xi, i), x,
                                        term_budget);
    return report;
}

struct Eq9Result {
    UEAElement computed;
    Rational expected;
    bool pass = false;
};

// The directional derivative of T_i(xi) is the scalar
// sum_{j != i} xi_j / (xi_i - xi_j).
inline Eq9Result verify_eq9(const ShiftMatrix& xi, int i) {
    const int d = xi.dim();
    const UEAElement computed = directional_derive(xi, t_hat(xi, i));
    Rational expected = 0;
    for (int j = 1; j <= d; ++j) {
        if (j == i) continue;
        expected += xi.at(j, j) / (xi.at(i, i) - xi.at(j, j));
    }
    const bool pass = computed == UEAElement::scalar(d, expected);
    return {computed, std::move(expected), pass};
}

namespace detail {

inline UEAElement trace_xi_bracket(const ShiftMatrix& xi, const ElementMatrix& m,
                                   const ElementMatrix& n) {
    return (xi * matrix_commutator(m, n)).trace();
}

}  // namespace detail

// tr(xi [D(T_i(xi)), (e^n)^T]) == 0.
inline bool verify_lemma1(const ShiftMatrix& xi, int i, int n) {
    if (n < 0) throw std::invalid_argument("verify_lemma1: n must be >= 0");
    const ElementMatrix dt = matrix_quasi_derive(t_hat(xi, i));
    const ElementMatrix pw = power_matrix(n, xi.dim()).transpose();
    return detail::trace_xi_bracket(xi, dt, pw).is_zero();
}

// The module { x : tr(xi [D(T_i(xi)), D x]) = 0 } is stable under the
// directional quasi-derivation.  Membership of x is a checked precondition.
inline bool verify_invariant_module(const ShiftMatrix& xi, int i, const UEAElement& x) {
    if (xi.dim() != x.dim())
        throw std::invalid_argument("verify_invariant_module: dimension mismatch");
    const ElementMatrix dt = matrix_quasi_derive(t_hat(xi, i));
    const auto in_module = [&](const UEAElement& y) {
        return detail::trace_xi_bracket(xi, dt, matrix_quasi_derive(y)).is_zero();
    };
    if (!in_module(x))
        throw std::invalid_argument("verify_invariant_module: x is outside the module");
    return in_module(directional_derive(xi, x));
}

}  // namespace glshift
