#pragma once

// Term representation and the PBW normal-ordering engine for the universal
// enveloping algebra U(gl_d).
//
// Elements are finite rational-linear combinations of normal words in the
// generators e[i,j].  A word is normal when its letters are weakly increasing
// in the generator order (lexicographic on (row, col)); by the PBW theorem the
// normal form of an element is unique, so equality of term maps decides
// equality in the algebra.

#include "glshift/rational.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace glshift {

// Generator label e[row, col], 1-based, valid range 1..d in both slots.
struct GenIndex {
    int row = 1;
    int col = 1;

    friend auto operator<=>(const GenIndex&, const GenIndex&) = default;
};

// Letters are stored as flat codes (row-1)*d + (col-1); the numeric order of
// codes coincides with the lexicographic generator order.
using Letter = std::uint16_t;
using Word = std::vector<Letter>;

inline Letter encode_gen(GenIndex g, int dim) {
    if (g.row < 1 || g.row > dim || g.col < 1 || g.col > dim)
        throw std::invalid_argument("generator index out of range for dimension");
    return static_cast<Letter>((g.row - 1) * dim + (g.col - 1));
}

inline GenIndex decode_gen(Letter code, int dim) {
    return GenIndex{static_cast<int>(code) / dim + 1, static_cast<int>(code) % dim + 1};
}

// Canonical term order: longer words first, then lexicographic.  This is also
// the serialization order, and it makes the filtration degree the length of
// the first term.
struct TermOrder {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() > b.size();
        return a < b;
    }
};

using TermMap = std::map<Word, Rational, TermOrder>;

namespace detail {

// Worklist order for rewriting: pop the largest word under (length, lex).
// Each rewrite step replaces a word by strictly smaller ones, so the loop
// terminates and duplicate intermediate words merge their coefficients.
struct RewriteOrder {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() > b.size();
        return a > b;
    }
};

using WorkList = std::map<Word, Rational, RewriteOrder>;

inline void add_term(TermMap& terms, const Word& w, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

inline void add_work(WorkList& work, Word w, Rational c) {
    if (c == 0) return;
    auto [it, inserted] = work.emplace(std::move(w), std::move(c));
    if (!inserted) {
        it->second += c;
        if (it->second == 0) work.erase(it);
    }
}

// Normal-orders every word in the worklist.  The leftmost out-of-order
// adjacent pair e[i,j] e[p,q] (with e[p,q] < e[i,j]) is rewritten by
//   e[i,j] e[p,q] = e[p,q] e[i,j] + d(p,j) e[i,q] - d(i,q) e[p,j],
// the instantiated commutation relation of gl_d.
inline TermMap normalize(int dim, WorkList work) {
    TermMap out;
    while (!work.empty()) {
        auto node = work.extract(work.begin());
        const Word& w = node.key();
        const Rational& c = node.mapped();

        std::size_t k = 0;
        const std::size_t n = w.size();
        while (k + 1 < n && w[k] <= w[k + 1]) ++k;
        if (k + 1 >= n) {
            add_term(out, w, c);
            continue;
        }

        const GenIndex a = decode_gen(w[k], dim);      // e[i,j]
        const GenIndex b = decode_gen(w[k + 1], dim);  // e[p,q]

        Word swapped = w;
        std::swap(swapped[k], swapped[k + 1]);
        add_work(work, std::move(swapped), c);

        if (b.row == a.col) {  // d(p,j): contract to e[i,q]
            Word shorter;
            shorter.reserve(n - 1);
            shorter.assign(w.begin(), w.begin() + k);
            shorter.push_back(encode_gen({a.row, b.col}, dim));
            shorter.insert(shorter.end(), w.begin() + k + 2, w.end());
            add_work(work, std::move(shorter), c);
        }
        if (a.row == b.col) {  // d(i,q): contract to e[p,j], negated
            Word shorter;
            shorter.reserve(n - 1);
            shorter.assign(w.begin(), w.begin() + k);
            shorter.push_back(encode_gen({b.row, a.col}, dim));
            shorter.insert(shorter.end(), w.begin() + k + 2, w.end());
            add_work(work, std::move(shorter), -c);
        }
    }
    return out;
}

}  // namespace detail

class UEAElement {
public:
    explicit UEAElement(int dim) : dim_(check_dim(dim)) {}

    static UEAElement zero(int dim) { return UEAElement(dim); }

    static UEAElement scalar(int dim, Rational value) {
        UEAElement e(dim);
        if (value != 0) e.terms_.emplace(Word{}, std::move(value));
        return e;
    }

    static UEAElement one(int dim) { return scalar(dim, 1); }

    static UEAElement generator(int dim, int row, int col) {
        UEAElement e(dim);
        e.terms_.emplace(Word{encode_gen({row, col}, dim)}, 1);
        return e;
    }

    // Takes ownership of an already-normal term map; coefficients must be nonzero.
    static UEAElement from_terms(int dim, TermMap terms) {
        UEAElement e(dim);
        e.terms_ = std::move(terms);
        return e;
    }

    int dim() const { return dim_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Filtration degree: max word length, -1 for the zero element.
    int degree() const {
        return terms_.empty() ? -1 : static_cast<int>(terms_.begin()->first.size());
    }

    bool is_scalar() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
    }

    // The coefficient of the empty word.
    Rational scalar_part() const {
        auto it = terms_.find(Word{});
        return it == terms_.end() ? Rational(0) : it->second;
    }

    Rational coefficient(const Word& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    friend bool operator==(const UEAElement& a, const UEAElement& b) {
        return a.dim_ == b.dim_ && a.terms_ == b.terms_;
    }

    UEAElement& operator+=(const UEAElement& other) {
        check_same_dim(other);
        for (const auto& [w, c] : other.terms_) detail::add_term(terms_, w, c);
        return *this;
    }

    UEAElement& operator-=(const UEAElement& other) {
        check_same_dim(other);
        for (const auto& [w, c] : other.terms_) detail::add_term(terms_, w, -c);
        return *this;
    }

    UEAElement& operator*=(const Rational& s) {
        if (s == 0) {
            terms_.clear();
        } else {
            for (auto& [w, c] : terms_) c *= s;
        }
        return *this;
    }

    friend UEAElement operator+(UEAElement a, const UEAElement& b) { return a += b; }
    friend UEAElement operator-(UEAElement a, const UEAElement& b) { return a -= b; }
    friend UEAElement operator-(UEAElement a) {
        for (auto& [w, c] : a.terms_) c = -c;
        return a;
    }
    friend UEAElement operator*(UEAElement a, const Rational& s) { return a *= s; }
    friend UEAElement operator*(const Rational& s, UEAElement a) { return a *= s; }

    friend UEAElement operator*(const UEAElement& a, const UEAElement& b) {
        a.check_same_dim(b);
        detail::WorkList work;
        for (const auto& [wa, ca] : a.terms_) {
            for (const auto& [wb, cb] : b.terms_) {
                Word concat;
                concat.reserve(wa.size() + wb.size());
                concat.insert(concat.end(), wa.begin(), wa.end());
                concat.insert(concat.end(), wb.begin(), wb.end());
                detail::add_work(work, std::move(concat), ca * cb);
            }
        }
        return from_terms(a.dim_, detail::normalize(a.dim_, std::move(work)));
    }

    UEAElement& operator*=(const UEAElement& other) { return *this = *this * other; }

    // Restriction to the words of maximal length (zero element stays zero).
    UEAElement top_part() const {
        UEAElement out(dim_);
        if (terms_.empty()) return out;
        const std::size_t top = terms_.begin()->first.size();
        for (const auto& [w, c] : terms_) {
            if (w.size() != top) break;  // TermOrder keeps longest words first
            out.terms_.emplace(w, c);
        }
        return out;
    }

    std::size_t term_count() const { return terms_.size(); }

private:
    static int check_dim(int dim) {
        if (dim < 1) throw std::invalid_argument("dimension must be >= 1");
        return dim;
    }

    void check_same_dim(const UEAElement& other) const {
        if (dim_ != other.dim_)
            throw std::invalid_argument("dimension mismatch between elements");
    }

    int dim_;
    TermMap terms_;
};

// PBW normal form of an arbitrary word of generators.
inline UEAElement normal_order(std::span<const GenIndex> word, int dim) {
    detail::WorkList work;
    Word w;
    w.reserve(word.size());
    for (GenIndex g : word) w.push_back(encode_gen(g, dim));
    detail::add_work(work, std::move(w), 1);
    return UEAElement::from_terms(dim, detail::normalize(dim, std::move(work)));
}

inline UEAElement normal_order(std::initializer_list<GenIndex> word, int dim) {
    return normal_order(std::span<const GenIndex>(word.begin(), word.size()), dim);
}

inline UEAElement normal_order_word(Word w, int dim) {
    detail::WorkList work;
    detail::add_work(work, std::move(w), 1);
    return UEAElement::from_terms(dim, detail::normalize(dim, std::move(work)));
}

inline UEAElement commutator(const UEAElement& a, const UEAElement& b) {
    return a * b - b * a;
}

inline int filtration_degree(const UEAElement& a) { return a.degree(); }

// Central <=> commutes with every generator.
inline bool is_central(const UEAElement& f) {
    for (int i = 1; i <= f.dim(); ++i)
        for (int j = 1; j <= f.dim(); ++j)
            if (!commutator(f, UEAElement::generator(f.dim(), i, j)).is_zero())
                return false;
    return true;
}

}  // namespace glshift
