/*
   Copyright 2026 The skewpbw authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef SKEWPBW_MATRIX_HPP
#define SKEWPBW_MATRIX_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "field.hpp"

namespace skewpbw {

/*
 * Dense exact matrices over a coefficient field, with just enough linear
 * algebra for the rest of the library: reduced row echelon form, rank, and
 * right nullspace bases.  Over Q the forward elimination is fraction-free
 * (Bareiss) on a common-denominator-cleared integer copy; over F_p it is
 * plain Gauss-Jordan on raw residues.  Everything returned is exact and
 * canonical (the RREF of a matrix is unique, and nullspace vectors are the
 * standard free-column vectors read off from it).
 */

class ExactMatrix {
public:
    ExactMatrix(const FieldSpec& field, std::size_t rows, std::size_t cols)
        : field_(field), rows_(rows), cols_(cols),
          data_(rows * cols, FieldElement::zero(field)) {}

    static ExactMatrix from_rows(const FieldSpec& field,
                                 const std::vector<std::vector<FieldElement>>& rows) {
        const std::size_t cols = rows.empty() ? 0 : rows.front().size();
        ExactMatrix m(field, rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) throw Error("ragged rows in matrix literal");
            for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
        }
        return m;
    }

    const FieldSpec& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    FieldElement& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const FieldElement& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<FieldElement> row(std::size_t i) const {
        return std::vector<FieldElement>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                                         data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
    }

    bool operator==(const ExactMatrix& o) const {
        return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

private:
    FieldSpec field_;
    std::size_t rows_, cols_;
    std::vector<FieldElement> data_;
};

struct RrefResult {
    ExactMatrix matrix;                     // the (unique) reduced row echelon form
    std::vector<std::size_t> pivot_columns; // ascending
};

namespace detail {

inline RrefResult rref_prime(const ExactMatrix& m) {
    const std::int64_t p = m.field().p();
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::int64_t> a(rows * cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) a[i * cols + j] = m.at(i, j).residue();

    auto inv_mod = [p](std::int64_t x) {
        std::int64_t t = 0, nt = 1, r = p, nr = x;
        while (nr != 0) {
            const std::int64_t q = r / nr;
            std::int64_t tmp = t - q * nt; t = nt; nt = tmp;
            tmp = r - q * nr; r = nr; nr = tmp;
        }
        return t < 0 ? t + p : t;
    };

    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pr = r;
        while (pr < rows && a[pr * cols + c] == 0) ++pr;
        if (pr == rows) continue;
        if (pr != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(a[r * cols + j], a[pr * cols + j]);
        const std::int64_t inv = inv_mod(a[r * cols + c]);
        for (std::size_t j = c; j < cols; ++j) a[r * cols + j] = (a[r * cols + j] * inv) % p;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            const std::int64_t f = a[i * cols + c];
            if (f == 0) continue;
            for (std::size_t j = c; j < cols; ++j) {
                std::int64_t v = (a[i * cols + j] - f * a[r * cols + j]) % p;
                if (v < 0) v += p;
                a[i * cols + j] = v;
            }
        }
        pivots.push_back(c);
        ++r;
    }

    ExactMatrix out(m.field(), rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            out.at(i, j) = FieldElement::from_integer(m.field(), a[i * cols + j]);
    return {std::move(out), std::move(pivots)};
}

inline RrefResult rref_rationals(const ExactMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();

    // Clear denominators row by row; row scaling changes neither the row
    // space nor the RREF.
    std::vector<std::vector<BigInt>> a(rows, std::vector<BigInt>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        BigInt l = 1;
        for (std::size_t j = 0; j < cols; ++j)
            l = boost::multiprecision::lcm(l, denominator(m.at(i, j).rational_value()));
        for (std::size_t j = 0; j < cols; ++j)
            a[i][j] = numerator(BigRational(m.at(i, j).rational_value() * l));
    }

    // Fraction-free (one-step Bareiss) forward elimination to echelon form.
    std::vector<std::size_t> pivots;
    BigInt prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pr = r;
        while (pr < rows && a[pr][c] == 0) ++pr;
        if (pr == rows) continue;
        if (pr != r) std::swap(a[r], a[pr]);
        const BigInt piv = a[r][c];
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                a[i][j] = (piv * a[i][j] - a[i][c] * a[r][j]) / prev; // exact division
            a[i][c] = 0;
        }
        prev = piv;
        pivots.push_back(c);
        ++r;
    }

    // Back substitution in rationals: normalize pivots to 1, eliminate above.
    std::vector<std::vector<BigRational>> q(rows, std::vector<BigRational>(cols, BigRational(0)));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) q[i][j] = BigRational(a[i][j]);
    for (std::size_t k = pivots.size(); k-- > 0;) {
        const std::size_t pc = pivots[k];
        const BigRational piv = q[k][pc];
        for (std::size_t j = pc; j < cols; ++j) q[k][j] /= piv;
        for (std::size_t i = 0; i < k; ++i) {
            const BigRational f = q[i][pc];
            if (f == 0) continue;
            for (std::size_t j = pc; j < cols; ++j) q[i][j] -= f * q[k][j];
        }
    }

    ExactMatrix out(m.field(), rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (q[i][j] != 0)
                out.at(i, j) = FieldElement::from_ratio(m.field(), numerator(q[i][j]),
                                                        denominator(q[i][j]));
    return {std::move(out), std::move(pivots)};
}

} // namespace detail

inline RrefResult rref(const ExactMatrix& m) {
    return m.field().is_prime_field() ? detail::rref_prime(m) : detail::rref_rationals(m);
}

inline std::size_t rank(const ExactMatrix& m) { return rref(m).pivot_columns.size(); }

// Basis of { v : m v = 0 }, one vector per free column, in ascending free
// column order; vector for free column f has entry 1 at f and -rref[r][f] at
// each pivot column (the textbook canonical basis).  Empty for injective m.
inline std::vector<std::vector<FieldElement>> nullspace_basis(const ExactMatrix& m) {
    const RrefResult rr = rref(m);
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (auto c : rr.pivot_columns) is_pivot[c] = true;

    std::vector<std::vector<FieldElement>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<FieldElement> v(cols, FieldElement::zero(m.field()));
        v[f] = FieldElement::one(m.field());
        for (std::size_t r = 0; r < rr.pivot_columns.size(); ++r)
            v[rr.pivot_columns[r]] = -rr.matrix.at(r, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace skewpbw

#endif // SKEWPBW_MATRIX_HPP
