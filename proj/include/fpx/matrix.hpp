#ifndef FPX_MATRIX_HPP
#define FPX_MATRIX_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fpx/errors.hpp"
#include "fpx/polynomial.hpp"

namespace fpx {

// Dense rectangular matrix of polynomials over a common F_p[x_1..x_n].
class PolyMatrix {
  public:
    PolyMatrix(std::size_t rows, std::size_t cols, std::uint32_t modulus, std::size_t dimension)
        : rows_(rows), cols_(cols), p_(modulus), n_(dimension),
          e_(rows * cols, Polynomial(modulus, dimension)) {
        if (rows < 1 || cols < 1) throw std::invalid_argument("PolyMatrix: empty shape");
    }

    static PolyMatrix identity(std::size_t size, std::uint32_t modulus, std::size_t dimension) {
        PolyMatrix out(size, size, modulus, dimension);
        for (std::size_t i = 0; i < size; ++i)
            out.at(i, i) = Polynomial::constant(modulus, dimension, 1);
        return out;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::uint32_t modulus() const noexcept { return p_; }
    std::size_t dimension() const noexcept { return n_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Polynomial& at(std::size_t i, std::size_t j) {
        check_index(i, j);
        return e_[i * cols_ + j];
    }
    const Polynomial& at(std::size_t i, std::size_t j) const {
        check_index(i, j);
        return e_[i * cols_ + j];
    }

    PolyMatrix transpose() const {
        PolyMatrix out(cols_, rows_, p_, n_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
        return out;
    }

    PolyMatrix operator*(const PolyMatrix& o) const {
        if (p_ != o.p_ || n_ != o.n_)
            throw std::invalid_argument("PolyMatrix: modulus/dimension mismatch");
        if (cols_ != o.rows_) throw std::invalid_argument("PolyMatrix: shape mismatch");
        PolyMatrix out(rows_, o.cols_, p_, n_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < o.cols_; ++j) {
                Polynomial acc(p_, n_);
                for (std::size_t k = 0; k < cols_; ++k) acc += at(i, k) * o.at(k, j);
                out.at(i, j) = std::move(acc);
            }
        return out;
    }

    friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

  private:
    void check_index(std::size_t i, std::size_t j) const {
        if (i >= rows_ || j >= cols_) throw std::out_of_range("PolyMatrix: index out of range");
    }

    std::size_t rows_, cols_;
    std::uint32_t p_;
    std::size_t n_;
    std::vector<Polynomial> e_;
};

// Exact determinant by fraction-free (Bareiss) elimination. At stage k every
// entry is a (k+1)-minor of the pivoted input, so the division by the
// previous pivot is exact in F_p[X]. The pivot is the nonzero column entry
// with the fewest terms, which curbs intermediate swell.
inline Polynomial det_fraction_free(const PolyMatrix& M) {
    if (!M.is_square()) throw std::invalid_argument("det_fraction_free: matrix not square");
    const std::size_t size = M.rows();
    const std::uint32_t p = M.modulus();
    const std::size_t n = M.dimension();
    std::vector<std::vector<Polynomial>> m(size);
    for (std::size_t i = 0; i < size; ++i) {
        m[i].reserve(size);
        for (std::size_t j = 0; j < size; ++j) m[i].push_back(M.at(i, j));
    }
    bool negate = false;
    Polynomial prev = Polynomial::constant(p, n, 1);
    for (std::size_t k = 0; k + 1 < size; ++k) {
        std::size_t pivot = size;
        for (std::size_t i = k; i < size; ++i) {
            if (m[i][k].is_zero()) continue;
            if (pivot == size || m[i][k].term_count() < m[pivot][k].term_count()) pivot = i;
        }
        if (pivot == size) return Polynomial(p, n); // zero column: singular
        if (pivot != k) {
            std::swap(m[pivot], m[k]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < size; ++i) {
            for (std::size_t j = k + 1; j < size; ++j) {
                Polynomial num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                if (prev.is_one()) {
                    m[i][j] = std::move(num);
                } else {
                    auto q = try_exact_quotient(num, prev);
                    if (!q) throw invariant_violation("det_fraction_free: inexact division");
                    m[i][j] = std::move(*q);
                }
            }
            m[i][k] = Polynomial(p, n);
        }
        prev = m[k][k];
    }
    Polynomial det = std::move(m[size - 1][size - 1]);
    return negate ? -det : det;
}

// Reference determinant by Laplace expansion along the first row. Reserved
// for cross-checking; capped at size 6.
inline Polynomial det_cofactor(const PolyMatrix& M) {
    if (!M.is_square()) throw std::invalid_argument("det_cofactor: matrix not square");
    if (M.rows() > 6) throw std::invalid_argument("det_cofactor: oracle capped at size 6");
    const std::uint32_t p = M.modulus();
    const std::size_t n = M.dimension();
    std::vector<std::size_t> cols(M.cols());
    for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = j;
    auto expand = [&](auto&& self, std::size_t row, std::vector<std::size_t>& active) -> Polynomial {
        if (active.empty()) return Polynomial::constant(p, n, 1);
        Polynomial acc(p, n);
        for (std::size_t j = 0; j < active.size(); ++j) {
            const Polynomial& entry = M.at(row, active[j]);
            if (entry.is_zero()) continue;
            std::vector<std::size_t> rest;
            rest.reserve(active.size() - 1);
            for (std::size_t t = 0; t < active.size(); ++t)
                if (t != j) rest.push_back(active[t]);
            Polynomial sub = entry * self(self, row + 1, rest);
            if (j % 2 == 0)
                acc += sub;
            else
                acc -= sub;
        }
        return acc;
    };
    return expand(expand, 0, cols);
}

namespace detail {

// Determinant with the second, independent route engaged in checking builds:
// with FPX_CHECK_DETERMINANTS defined, small determinants are recomputed by
// cofactor expansion and compared exactly.
inline Polynomial checked_det(const PolyMatrix& M) {
    Polynomial d = det_fraction_free(M);
#ifdef FPX_CHECK_DETERMINANTS
    if (M.rows() <= 6 && det_cofactor(M) != d)
        throw invariant_violation("checked_det: elimination and cofactor routes disagree");
#endif
    return d;
}

} // namespace detail

// Classical adjugate; adj(M) * M = M * adj(M) = det(M) * I over F_p[X], with
// no invertibility assumption.
inline PolyMatrix adjugate(const PolyMatrix& M) {
    if (!M.is_square()) throw std::invalid_argument("adjugate: matrix not square");
    const std::size_t size = M.rows();
    PolyMatrix adj(size, size, M.modulus(), M.dimension());
    if (size == 1) {
        adj.at(0, 0) = Polynomial::constant(M.modulus(), M.dimension(), 1);
        return adj;
    }
    for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = 0; j < size; ++j) {
            // adj_{ij} is the (j, i) cofactor
            PolyMatrix minor(size - 1, size - 1, M.modulus(), M.dimension());
            for (std::size_t r = 0, mr = 0; r < size; ++r) {
                if (r == j) continue;
                for (std::size_t c = 0, mc = 0; c < size; ++c) {
                    if (c == i) continue;
                    minor.at(mr, mc) = M.at(r, c);
                    ++mc;
                }
                ++mr;
            }
            Polynomial d = det_fraction_free(minor);
            adj.at(i, j) = ((i + j) % 2 == 0) ? std::move(d) : -d;
        }
    }
    return adj;
}

} // namespace fpx

#endif // FPX_MATRIX_HPP
