#pragma once

// The symmetric algebra S(gl_d): commutative polynomials in the generators,
// the Lie-Poisson bracket, the classical shift derivative, symmetrization
// into U(gl_d), and the characteristic-polynomial generators I_k.

#include "glshift/pbw.hpp"
#include "glshift/shift_matrix.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace glshift {

// Commutative monomial: exponent of every generator code, length d*d.
using Monomial = std::vector<std::uint16_t>;

inline int monomial_degree(const Monomial& m) {
    int deg = 0;
    for (auto e : m) deg += e;
    return deg;
}

// Total degree descending, then lexicographic descending on exponents; this
// coincides with the (length, lex) order of the expanded sorted words, so the
// commutative and noncommutative serializations line up visually.
struct MonoOrder {
    bool operator()(const Monomial& a, const Monomial& b) const {
        const int da = monomial_degree(a), db = monomial_degree(b);
        if (da != db) return da > db;
        return a > b;
    }
};

using SymTermMap = std::map<Monomial, Rational, MonoOrder>;

class SymElement {
public:
    explicit SymElement(int dim) : dim_(check_dim(dim)) {}

    static SymElement zero(int dim) { return SymElement(dim); }

    static SymElement scalar(int dim, Rational value) {
        SymElement e(dim);
        if (value != 0) e.terms_.emplace(Monomial(static_cast<std::size_t>(dim) * dim, 0),
                                         std::move(value));
        return e;
    }

    static SymElement one(int dim) { return scalar(dim, 1); }

    static SymElement generator(int dim, int row, int col) {
        SymElement e(dim);
        Monomial m(static_cast<std::size_t>(dim) * dim, 0);
        m[encode_gen({row, col}, dim)] = 1;
        e.terms_.emplace(std::move(m), 1);
        return e;
    }

    static SymElement from_terms(int dim, SymTermMap terms) {
        SymElement e(dim);
        e.terms_ = std::move(terms);
        return e;
    }

    int dim() const { return dim_; }
    const SymTermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    int degree() const { return terms_.empty() ? -1 : monomial_degree(terms_.begin()->first); }

    bool is_homogeneous() const {
        return terms_.empty() ||
               monomial_degree(terms_.begin()->first) == monomial_degree(terms_.rbegin()->first);
    }

    friend bool operator==(const SymElement& a, const SymElement& b) {
        return a.dim_ == b.dim_ && a.terms_ == b.terms_;
    }

    SymElement& operator+=(const SymElement& other) {
        check_same_dim(other);
        for (const auto& [m, c] : other.terms_) add_term(m, c);
        return *this;
    }

    SymElement& operator-=(const SymElement& other) {
        check_same_dim(other);
        for (const auto& [m, c] : other.terms_) add_term(m, -c);
        return *this;
    }

    SymElement& operator*=(const Rational& s) {
        if (s == 0) {
            terms_.clear();
        } else {
            for (auto& [m, c] : terms_) c *= s;
        }
        return *this;
    }

    friend SymElement operator+(SymElement a, const SymElement& b) { return a += b; }
    friend SymElement operator-(SymElement a, const SymElement& b) { return a -= b; }
    friend SymElement operator-(SymElement a) {
        for (auto& [m, c] : a.terms_) c = -c;
        return a;
    }
    friend SymElement operator*(SymElement a, const Rational& s) { return a *= s; }
    friend SymElement operator*(const Rational& s, SymElement a) { return a *= s; }

    friend SymElement operator*(const SymElement& a, const SymElement& b) {
        a.check_same_dim(b);
        SymElement out(a.dim_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m = ma;
                for (std::size_t k = 0; k < m.size(); ++k)
                    m[k] = static_cast<std::uint16_t>(m[k] + mb[k]);
                out.add_term(std::move(m), ca * cb);
            }
        return out;
    }

    SymElement& operator*=(const SymElement& other) { return *this = *this * other; }

    void add_term(Monomial m, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(std::move(m), c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

private:
    static int check_dim(int dim) {
        if (dim < 1) throw std::invalid_argument("dimension must be >= 1");
        return dim;
    }

    void check_same_dim(const SymElement& other) const {
        if (dim_ != other.dim_)
            throw std::invalid_argument("dimension mismatch between elements");
    }

    int dim_;
    SymTermMap terms_;
};

// d/d e[row,col].
inline SymElement partial_derivative(const SymElement& f, int row, int col) {
    const Letter code = encode_gen({row, col}, f.dim());
    SymElement out(f.dim());
    for (const auto& [m, c] : f.terms()) {
        if (m[code] == 0) continue;
        Monomial dm = m;
        --dm[code];
        out.add_term(std::move(dm), c * m[code]);
    }
    return out;
}

// Lie-Poisson bracket: biderivation extending
//   {e[i,j], e[p,q]} = d(p,j) e[i,q] - d(i,q) e[p,j].
inline SymElement poisson_bracket(const SymElement& f, const SymElement& g) {
    if (f.dim() != g.dim()) throw std::invalid_argument("poisson_bracket: dimension mismatch");
    const int d = f.dim();
    std::vector<SymElement> df, dg;
    df.reserve(static_cast<std::size_t>(d) * d);
    dg.reserve(static_cast<std::size_t>(d) * d);
    for (int i = 1; i <= d; ++i)
        for (int j = 1; j <= d; ++j) {
            df.push_back(partial_derivative(f, i, j));
            dg.push_back(partial_derivative(g, i, j));
        }
    auto slot = [d](int i, int j) { return static_cast<std::size_t>(i - 1) * d + (j - 1); };

    SymElement out(d);
    for (int i = 1; i <= d; ++i)
        for (int j = 1; j <= d; ++j) {
            const SymElement& fi = df[slot(i, j)];
            if (fi.is_zero()) continue;
            for (int p = 1; p <= d; ++p)
                for (int q = 1; q <= d; ++q) {
                    const SymElement& gp = dg[slot(p, q)];
                    if (gp.is_zero()) continue;
                    if (p == j) out += fi * gp * SymElement::generator(d, i, q);
                    if (i == q) out -= fi * gp * SymElement::generator(d, p, j);
                }
        }
    return out;
}

// Constant-coefficient shift derivative: sends e[p,q] to xi(q,p).
inline SymElement classical_derive(const ShiftMatrix& xi, const SymElement& f) {
    if (xi.dim() != f.dim()) throw std::invalid_argument("classical_derive: dimension mismatch");
    SymElement out(f.dim());
    for (int p = 1; p <= f.dim(); ++p)
        for (int q = 1; q <= f.dim(); ++q) {
            const Rational& w = xi.at(q, p);
            if (w == 0) continue;
            out += partial_derivative(f, p, q) * w;
        }
    return out;
}

inline bool is_poisson_central(const SymElement& f) {
    for (int i = 1; i <= f.dim(); ++i)
        for (int j = 1; j <= f.dim(); ++j)
            if (!poisson_bracket(f, SymElement::generator(f.dim(), i, j)).is_zero()) return false;
    return true;
}

// Symmetrization map into U(gl_d): a monomial of degree n maps to the average
// of all n! orderings of its letters.  Degree is capped at 8; the factorial
// sum is the whole point of the map, so no shortcut is taken.
inline UEAElement symmetrize(const SymElement& f) {
    const int dim = f.dim();
    detail::WorkList work;
    for (const auto& [m, c] : f.terms()) {
        const int n = monomial_degree(m);
        if (n > 8) throw std::invalid_argument("symmetrize: monomial degree above the cap of 8");
        Word letters;
        letters.reserve(static_cast<std::size_t>(n));
        Rational repeats = 1;  // product of exponent factorials
        for (std::size_t code = 0; code < m.size(); ++code)
            for (int rep = 1; rep <= m[code]; ++rep) {
                letters.push_back(static_cast<Letter>(code));
                repeats *= rep;
            }
        Rational factorial = 1;
        for (int t = 2; t <= n; ++t) factorial *= t;
        const Rational weight = c * repeats / factorial;

        // next_permutation enumerates every distinct arrangement exactly once.
        Word arrangement = letters;
        do {
            detail::add_work(work, arrangement, weight);
        } while (std::next_permutation(arrangement.begin(), arrangement.end()));
    }
    return UEAElement::from_terms(dim, detail::normalize(dim, std::move(work)));
}

// Coefficients I_1..I_d of the universal characteristic polynomial,
// I_k = sum of the principal k x k minors of the generator matrix.
inline std::vector<SymElement> char_poly_generators(int dim) {
    if (dim < 1) throw std::invalid_argument("char_poly_generators: dimension must be >= 1");
    if (dim > 4) throw std::invalid_argument("char_poly_generators: dimension capped at 4");

    std::vector<SymElement> out;
    for (int k = 1; k <= dim; ++k) {
        SymElement ik(dim);
        std::vector<int> subset(static_cast<std::size_t>(k));
        for (int t = 0; t < k; ++t) subset[static_cast<std::size_t>(t)] = t + 1;
        while (true) {
            // Leibniz expansion of the minor on rows/cols `subset`.
            std::vector<int> perm(static_cast<std::size_t>(k));
            for (int t = 0; t < k; ++t) perm[static_cast<std::size_t>(t)] = t;
            do {
                int inversions = 0;
                for (int u = 0; u < k; ++u)
                    for (int v = u + 1; v < k; ++v)
                        if (perm[static_cast<std::size_t>(u)] > perm[static_cast<std::size_t>(v)])
                            ++inversions;
                SymElement prod = SymElement::one(dim);
                for (int t = 0; t < k; ++t)
                    prod *= SymElement::generator(
                        dim, subset[static_cast<std::size_t>(t)],
                        subset[static_cast<std::size_t>(perm[static_cast<std::size_t>(t)])]);
                ik += inversions % 2 == 0 ? prod : -prod;
            } while (std::next_permutation(perm.begin(), perm.end()));

            int pos = k - 1;
            while (pos >= 0 && subset[static_cast<std::size_t>(pos)] == dim - (k - 1 - pos)) --pos;
            if (pos < 0) break;
            ++subset[static_cast<std::size_t>(pos)];
            for (int t = pos + 1; t < k; ++t)
                subset[static_cast<std::size_t>(t)] = subset[static_cast<std::size_t>(t - 1)] + 1;
        }
        out.push_back(std::move(ik));
    }
    return out;
}

// Image of the top-filtration part in the associated graded algebra.
inline SymElement top_symbol(const UEAElement& f) {
    if (f.is_zero()) throw std::invalid_argument("top_symbol: zero element has no top symbol");
    SymElement out(f.dim());
    const std::size_t top = f.terms().begin()->first.size();
    for (const auto& [w, c] : f.terms()) {
        if (w.size() != top) break;
        Monomial m(static_cast<std::size_t>(f.dim()) * f.dim(), 0);
        for (Letter code : w) ++m[code];
        out.add_term(std::move(m), c);
    }
    return out;
}

// The iterated shift derivatives of Poisson-central elements must
// Poisson-commute; returns whether they do, exactly.
inline bool classical_shift_check(const ShiftMatrix& xi, int p, int q, const SymElement& f,
                                  const SymElement& g) {
    if (p < 0 || q < 0) throw std::invalid_argument("classical_shift_check: orders must be >= 0");
    if (!is_poisson_central(f) || !is_poisson_central(g))
        throw std::invalid_argument("classical_shift_check: inputs must be Poisson-central");
    SymElement fp = f;
    for (int t = 0; t < p; ++t) fp = classical_derive(xi, fp);
    SymElement gq = g;
    for (int t = 0; t < q; ++t) gq = classical_derive(xi, gq);
    return poisson_bracket(fp, gq).is_zero();
}

}  // namespace glshift
