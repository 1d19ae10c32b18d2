#pragma once

#include "glshift/rational.hpp"

#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace glshift {

// Numeric d x d rational matrix; plays the role of the shift direction xi.
class ShiftMatrix {
public:
    explicit ShiftMatrix(int dim)
        : dim_(check_dim(dim)), entries_(static_cast<std::size_t>(dim) * dim, Rational(0)) {}

    static ShiftMatrix identity(int dim) {
        ShiftMatrix m(dim);
        for (int i = 1; i <= dim; ++i) m.at(i, i) = 1;
        return m;
    }

    static ShiftMatrix diagonal(const std::vector<Rational>& diag) {
        ShiftMatrix m(static_cast<int>(diag.size()));
        for (int i = 1; i <= m.dim_; ++i) m.at(i, i) = diag[static_cast<std::size_t>(i) - 1];
        return m;
    }

    static ShiftMatrix diagonal(std::initializer_list<long> diag) {
        std::vector<Rational> d;
        for (long v : diag) d.emplace_back(v);
        return diagonal(d);
    }

    static ShiftMatrix from_rows(const std::vector<std::vector<Rational>>& rows) {
        ShiftMatrix m(static_cast<int>(rows.size()));
        for (int i = 1; i <= m.dim_; ++i) {
            const auto& row = rows[static_cast<std::size_t>(i) - 1];
            if (static_cast<int>(row.size()) != m.dim_)
                throw std::invalid_argument("shift matrix rows must be square");
            for (int j = 1; j <= m.dim_; ++j) m.at(i, j) = row[static_cast<std::size_t>(j) - 1];
        }
        return m;
    }

    int dim() const { return dim_; }

    Rational& at(int row, int col) { return entries_[index(row, col)]; }
    const Rational& at(int row, int col) const { return entries_[index(row, col)]; }

    bool is_diagonal() const {
        for (int i = 1; i <= dim_; ++i)
            for (int j = 1; j <= dim_; ++j)
                if (i != j && at(i, j) != 0) return false;
        return true;
    }

    // Diagonal with pairwise-distinct diagonal entries; required wherever
    // 1/(xi_i - xi_j) appears.
    bool is_regular_diagonal() const {
        if (!is_diagonal()) return false;
        for (int i = 1; i <= dim_; ++i)
            for (int j = i + 1; j <= dim_; ++j)
                if (at(i, i) == at(j, j)) return false;
        return true;
    }

    ShiftMatrix transpose() const {
        ShiftMatrix m(dim_);
        for (int i = 1; i <= dim_; ++i)
            for (int j = 1; j <= dim_; ++j) m.at(j, i) = at(i, j);
        return m;
    }

    Rational trace() const {
        Rational t = 0;
        for (int i = 1; i <= dim_; ++i) t += at(i, i);
        return t;
    }

    friend bool operator==(const ShiftMatrix& a, const ShiftMatrix& b) {
        return a.dim_ == b.dim_ && a.entries_ == b.entries_;
    }

private:
    static int check_dim(int dim) {
        if (dim < 1) throw std::invalid_argument("dimension must be >= 1");
        return dim;
    }

    std::size_t index(int row, int col) const {
        if (row < 1 || row > dim_ || col < 1 || col > dim_)
            throw std::out_of_range("shift matrix index out of range");
        return static_cast<std::size_t>(row - 1) * dim_ + (col - 1);
    }

    int dim_;
    std::vector<Rational> entries_;
};

// Conjugation of xi by a permutation of 1..d: entry (i,j) -> (perm[i], perm[j]).
inline ShiftMatrix permute(const ShiftMatrix& xi, const std::vector<int>& perm) {
    ShiftMatrix out(xi.dim());
    for (int i = 1; i <= xi.dim(); ++i)
        for (int j = 1; j <= xi.dim(); ++j)
            out.at(perm[static_cast<std::size_t>(i) - 1], perm[static_cast<std::size_t>(j) - 1]) =
                xi.at(i, j);
    return out;
}

}  // namespace glshift
