#pragma once

// Calculus of the generator matrix e: entries of its powers, the central
// traces tau_k = tr(e^k), xi-twisted traces, and the closed commutator
// identities for power entries used as oracles by the test suites.

#include "glshift/pbw.hpp"
#include "glshift/shift_matrix.hpp"

#include <stdexcept>
#include <vector>

namespace glshift {

// d x d matrix with entries in U(gl_d).
class ElementMatrix {
public:
    explicit ElementMatrix(int dim)
        : dim_(dim), entries_(static_cast<std::size_t>(dim) * dim, UEAElement::zero(dim)) {
        if (dim < 1) throw std::invalid_argument("dimension must be >= 1");
    }

    static ElementMatrix identity(int dim) {
        ElementMatrix m(dim);
        for (int i = 1; i <= dim; ++i) m.at(i, i) = UEAElement::one(dim);
        return m;
    }

    int dim() const { return dim_; }

    UEAElement& at(int row, int col) { return entries_[index(row, col)]; }
    const UEAElement& at(int row, int col) const { return entries_[index(row, col)]; }

    ElementMatrix transpose() const {
        ElementMatrix m(dim_);
        for (int i = 1; i <= dim_; ++i)
            for (int j = 1; j <= dim_; ++j) m.at(j, i) = at(i, j);
        return m;
    }

    UEAElement trace() const {
        UEAElement t = UEAElement::zero(dim_);
        for (int i = 1; i <= dim_; ++i) t += at(i, i);
        return t;
    }

    friend bool operator==(const ElementMatrix& a, const ElementMatrix& b) {
        return a.dim_ == b.dim_ && a.entries_ == b.entries_;
    }

    friend ElementMatrix operator+(ElementMatrix a, const ElementMatrix& b) {
        a.check_same_dim(b);
        for (std::size_t k = 0; k < a.entries_.size(); ++k) a.entries_[k] += b.entries_[k];
        return a;
    }

    friend ElementMatrix operator-(ElementMatrix a, const ElementMatrix& b) {
        a.check_same_dim(b);
        for (std::size_t k = 0; k < a.entries_.size(); ++k) a.entries_[k] -= b.entries_[k];
        return a;
    }

    friend ElementMatrix operator*(const ElementMatrix& a, const ElementMatrix& b) {
        a.check_same_dim(b);
        ElementMatrix out(a.dim_);
        for (int i = 1; i <= a.dim_; ++i)
            for (int j = 1; j <= a.dim_; ++j) {
                UEAElement sum = UEAElement::zero(a.dim_);
                for (int k = 1; k <= a.dim_; ++k) sum += a.at(i, k) * b.at(k, j);
                out.at(i, j) = std::move(sum);
            }
        return out;
    }

    friend ElementMatrix operator*(const UEAElement& s, ElementMatrix m) {
        for (auto& e : m.entries_) e = s * e;
        return m;
    }

    friend ElementMatrix operator*(ElementMatrix m, const Rational& s) {
        for (auto& e : m.entries_) e *= s;
        return m;
    }

    bool is_zero() const {
        for (const auto& e : entries_)
            if (!e.is_zero()) return false;
        return true;
    }

private:
    void check_same_dim(const ElementMatrix& other) const {
        if (dim_ != other.dim_) throw std::invalid_argument("matrix dimension mismatch");
    }

    std::size_t index(int row, int col) const {
        if (row < 1 || row > dim_ || col < 1 || col > dim_)
            throw std::out_of_range("element matrix index out of range");
        return static_cast<std::size_t>(row - 1) * dim_ + (col - 1);
    }

    int dim_;
    std::vector<UEAElement> entries_;
};

// Left multiplication by a numeric matrix: (xi * M)(i,j) = sum_k xi(i,k) M(k,j).
inline ElementMatrix operator*(const ShiftMatrix& xi, const ElementMatrix& m) {
    if (xi.dim() != m.dim()) throw std::invalid_argument("matrix dimension mismatch");
    ElementMatrix out(m.dim());
    for (int i = 1; i <= m.dim(); ++i)
        for (int j = 1; j <= m.dim(); ++j) {
            UEAElement sum = UEAElement::zero(m.dim());
            for (int k = 1; k <= m.dim(); ++k) sum += m.at(k, j) * xi.at(i, k);
            out.at(i, j) = std::move(sum);
        }
    return out;
}

inline ElementMatrix matrix_commutator(const ElementMatrix& a, const ElementMatrix& b) {
    return a * b - b * a;
}

// The matrix e of generators: entry (i,j) is e[i,j].
inline ElementMatrix generator_matrix(int dim) {
    ElementMatrix m(dim);
    for (int i = 1; i <= dim; ++i)
        for (int j = 1; j <= dim; ++j) m.at(i, j) = UEAElement::generator(dim, i, j);
    return m;
}

// Entry (i,j) of e^n, computed by expanding the defining word sum
//   (e^n)^i_j = sum e[i,k1] e[k1,k2] ... e[k_{n-1},j]
// and normal-ordering it.  n = 0 gives the identity matrix entry.
inline UEAElement power_entry(int n, int i, int j, int dim) {
    if (n < 0) throw std::invalid_argument("power_entry: exponent must be >= 0");
    if (i < 1 || i > dim || j < 1 || j > dim)
        throw std::invalid_argument("power_entry: index out of range");
    if (n == 0) return i == j ? UEAElement::one(dim) : UEAElement::zero(dim);

    detail::WorkList work;
    std::vector<int> path(static_cast<std::size_t>(n) + 1);
    path.front() = i;
    path.back() = j;
    // Enumerate the n-1 intermediate indices.
    std::vector<int> mid(static_cast<std::size_t>(n > 0 ? n - 1 : 0), 1);
    while (true) {
        for (std::size_t t = 0; t < mid.size(); ++t) path[t + 1] = mid[t];
        Word w;
        w.reserve(static_cast<std::size_t>(n));
        for (int t = 0; t < n; ++t)
            w.push_back(encode_gen({path[static_cast<std::size_t>(t)],
                                    path[static_cast<std::size_t>(t) + 1]},
                                   dim));
        detail::add_work(work, std::move(w), 1);

        std::size_t pos = 0;
        while (pos < mid.size() && mid[pos] == dim) mid[pos++] = 1;
        if (pos == mid.size()) break;
        ++mid[pos];
    }
    return UEAElement::from_terms(dim, detail::normalize(dim, std::move(work)));
}

inline ElementMatrix power_matrix(int n, int dim) {
    ElementMatrix m(dim);
    for (int i = 1; i <= dim; ++i)
        for (int j = 1; j <= dim; ++j) m.at(i, j) = power_entry(n, i, j, dim);
    return m;
}

// tau_k = tr(e^k), a generator of the center of U(gl_d).
inline UEAElement tau(int k, int dim) {
    if (k < 1) throw std::invalid_argument("tau: order must be >= 1");
    UEAElement t = UEAElement::zero(dim);
    for (int i = 1; i <= dim; ++i) t += power_entry(k, i, i, dim);
    return t;
}

// tr(xi (e^k)^T) = sum_{i,j} xi(i,j) (e^k)^i_j; for k = 0 this is tr(xi) * 1.
inline UEAElement xi_twisted_trace(const ShiftMatrix& xi, int k, int dim) {
    if (xi.dim() != dim) throw std::invalid_argument("xi dimension mismatch");
    if (k < 0) throw std::invalid_argument("xi_twisted_trace: order must be >= 0");
    UEAElement t = UEAElement::zero(dim);
    for (int i = 1; i <= dim; ++i)
        for (int j = 1; j <= dim; ++j) {
            if (xi.at(i, j) == 0) continue;
            t += power_entry(k, i, j, dim) * xi.at(i, j);
        }
    return t;
}

// Closed form of [(e^p)^i_j, e[k,l]]: d(k,j) (e^p)^i_l - (e^p)^k_j d(i,l).
inline UEAElement power_commutator_oracle_3(int p, int i, int j, int k, int l, int dim) {
    if (p < 0) throw std::invalid_argument("power_commutator_oracle_3: p must be >= 0");
    UEAElement out = UEAElement::zero(dim);
    if (k == j) out += power_entry(p, i, l, dim);
    if (i == l) out -= power_entry(p, k, j, dim);
    return out;
}

// Closed form of [(e^m)^i_j, (e^n)^k_l]:
//   sum_{a=1}^{min(m,n)} ( (e^{a-1})^k_j (e^{m+n-a})^i_l - (e^{m+n-a})^k_j (e^{a-1})^i_l ).
inline UEAElement power_commutator_oracle_4(int m, int n, int i, int j, int k, int l, int dim) {
    if (m < 0 || n < 0) throw std::invalid_argument("power_commutator_oracle_4: m,n must be >= 0");
    UEAElement out = UEAElement::zero(dim);
    const int amax = m < n ? m : n;
    for (int a = 1; a <= amax; ++a) {
        out += power_entry(a - 1, k, j, dim) * power_entry(m + n - a, i, l, dim);
        out -= power_entry(m + n - a, k, j, dim) * power_entry(a - 1, i, l, dim);
    }
    return out;
}

}  // namespace glshift
