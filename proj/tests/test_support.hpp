#pragma once

// Deterministic random generators shared by the test suites.

#include "glshift/glshift.hpp"

#include <random>
#include <vector>

namespace glshift::support {

inline Word random_word(std::mt19937& rng, int dim, int max_len) {
    std::uniform_int_distribution<int> len_dist(0, max_len);
    std::uniform_int_distribution<int> letter_dist(0, dim * dim - 1);
    Word w(static_cast<std::size_t>(len_dist(rng)));
    for (auto& code : w) code = static_cast<Letter>(letter_dist(rng));
    return w;
}

inline Rational random_coeff(std::mt19937& rng) {
    std::uniform_int_distribution<int> num_dist(-4, 4);
    std::uniform_int_distribution<int> den_dist(1, 3);
    int num = num_dist(rng);
    if (num == 0) num = 1;
    return Rational(num, den_dist(rng));
}

inline UEAElement random_element(std::mt19937& rng, int dim, int max_terms, int max_len) {
    std::uniform_int_distribution<int> term_dist(1, max_terms);
    UEAElement out = UEAElement::zero(dim);
    const int terms = term_dist(rng);
    for (int t = 0; t < terms; ++t)
        out += normal_order_word(random_word(rng, dim, max_len), dim) * random_coeff(rng);
    return out;
}

inline SymElement random_sym_element(std::mt19937& rng, int dim, int max_terms, int max_deg) {
    std::uniform_int_distribution<int> term_dist(1, max_terms);
    std::uniform_int_distribution<int> deg_dist(0, max_deg);
    std::uniform_int_distribution<int> letter_dist(0, dim * dim - 1);
    SymElement out = SymElement::zero(dim);
    const int terms = term_dist(rng);
    for (int t = 0; t < terms; ++t) {
        Monomial m(static_cast<std::size_t>(dim) * dim, 0);
        const int deg = deg_dist(rng);
        for (int u = 0; u < deg; ++u) ++m[letter_dist(rng)];
        out.add_term(std::move(m), random_coeff(rng));
    }
    return out;
}

// Normal-orders a single word by resolving a *randomly chosen* out-of-order
// adjacent pair at each step; used as the confluence oracle against the
// library's leftmost-first strategy.
inline UEAElement normal_order_random_strategy(const Word& word, int dim, std::mt19937& rng) {
    std::vector<std::pair<Word, Rational>> pending{{word, Rational(1)}};
    UEAElement out = UEAElement::zero(dim);
    TermMap done;
    while (!pending.empty()) {
        std::uniform_int_distribution<std::size_t> pick(0, pending.size() - 1);
        const std::size_t at = pick(rng);
        auto [w, c] = pending[at];
        pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(at));

        std::vector<std::size_t> inversions;
        for (std::size_t k = 0; k + 1 < w.size(); ++k)
            if (w[k] > w[k + 1]) inversions.push_back(k);
        if (inversions.empty()) {
            detail::add_term(done, w, c);
            continue;
        }
        std::uniform_int_distribution<std::size_t> ipick(0, inversions.size() - 1);
        const std::size_t k = inversions[ipick(rng)];
        const GenIndex a = decode_gen(w[k], dim);
        const GenIndex b = decode_gen(w[k + 1], dim);

        Word swapped = w;
        std::swap(swapped[k], swapped[k + 1]);
        pending.emplace_back(std::move(swapped), c);
        if (b.row == a.col) {
            Word shorter(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
            shorter.push_back(encode_gen({a.row, b.col}, dim));
            shorter.insert(shorter.end(), w.begin() + static_cast<std::ptrdiff_t>(k) + 2, w.end());
            pending.emplace_back(std::move(shorter), c);
        }
        if (a.row == b.col) {
            Word shorter(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
            shorter.push_back(encode_gen({b.row, a.col}, dim));
            shorter.insert(shorter.end(), w.begin() + static_cast<std::ptrdiff_t>(k) + 2, w.end());
            pending.emplace_back(std::move(shorter), -c);
        }
    }
    return out + UEAElement::from_terms(dim, std::move(done));
}

// Index action of a permutation of 1..d on generators, extended to words.
inline UEAElement apply_permutation(const UEAElement& f, const std::vector<int>& perm) {
    detail::WorkList work;
    for (const auto& [w, c] : f.terms()) {
        Word pw;
        pw.reserve(w.size());
        for (Letter code : w) {
            const GenIndex g = decode_gen(code, f.dim());
            pw.push_back(encode_gen({perm[static_cast<std::size_t>(g.row) - 1],
                                     perm[static_cast<std::size_t>(g.col) - 1]},
                                    f.dim()));
        }
        detail::add_work(work, std::move(pw), c);
    }
    return UEAElement::from_terms(f.dim(), detail::normalize(f.dim(), std::move(work)));
}

}  // namespace glshift::support
