#pragma once

#include "atlas/integer.hpp"

#include <cstddef>
#include <vector>

namespace atlas {

/// Dense row-major matrix of arbitrary-precision integers. Zero-sized
/// dimensions are allowed so that rank-0 lattices need no special casing.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

    static IntMatrix identity(std::size_t n);
    /// Matrix whose columns are the given points (all of dimension `dim`).
    static IntMatrix from_columns(std::size_t dim, const std::vector<Point>& columns);
    static IntMatrix from_rows(std::size_t cols, const std::vector<Point>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Point row(std::size_t r) const;
    Point column(std::size_t c) const;
    IntMatrix transposed() const;
    IntMatrix row_block(std::size_t first, std::size_t count) const;
    IntMatrix column_block(std::size_t first, std::size_t count) const;

    Point apply(const Point& x) const;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    /// row[dst] += factor * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
    void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor);
    void negate_row(std::size_t r);
    void negate_col(std::size_t c);

    bool is_zero() const;
    bool operator==(const IntMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

/// Exact determinant by fraction-free (Bareiss) elimination.
Integer determinant(const IntMatrix& m);

/// Rank over the rationals.
std::size_t rank(const IntMatrix& m);

/// Inverse of a unimodular matrix; raises InvariantViolation otherwise.
IntMatrix unimodular_inverse(const IntMatrix& m);

struct SmithDecomposition {
    IntMatrix u;
    IntMatrix d;
    IntMatrix v;
};

/// u * m * v == d with u, v unimodular and d diagonal, d_1 | d_2 | ..., d_i >= 0.
SmithDecomposition smith_decompose(const IntMatrix& m);

struct HermiteForm {
    IntMatrix h;         ///< row-style Hermite normal form
    IntMatrix transform; ///< unimodular, transform * m == h
};

/// Row-style Hermite normal form: echelon, positive pivots, entries above each
/// pivot reduced into [0, pivot). Zero rows sink to the bottom.
HermiteForm hermite_form(const IntMatrix& m);

/// A sublattice of Z^ambient_rank, stored by a basis matrix whose columns are
/// linearly independent generators.
class Sublattice {
public:
    Sublattice() = default;
    Sublattice(std::size_t ambient_rank, IntMatrix basis);

    /// Lattice generated by arbitrary (possibly dependent) vectors.
    static Sublattice generated_by(std::size_t ambient_rank, const std::vector<Point>& generators);
    static Sublattice zero(std::size_t ambient_rank) { return Sublattice(ambient_rank, IntMatrix(ambient_rank, 0)); }
    static Sublattice full(std::size_t ambient_rank)
    {
        return Sublattice(ambient_rank, IntMatrix::identity(ambient_rank));
    }

    std::size_t ambient_rank() const { return ambient_rank_; }
    std::size_t rank() const { return basis_.cols(); }
    const IntMatrix& basis() const { return basis_; }

    bool contains(const Point& x) const;
    bool operator==(const Sublattice&) const = default;

private:
    std::size_t ambient_rank_ = 0;
    IntMatrix basis_;
};

/// The saturation: all lattice points of the rational span of `s`.
Sublattice saturate(const Sublattice& s);

/// Surjection Z^n -> Z^(n - rank) whose kernel is saturate(s); HNF-normalized.
IntMatrix quotient_map(std::size_t ambient_rank, const Sublattice& s);

/// rank(s) x n matrix restricting to an isomorphism saturate(s) -> Z^rank(s).
IntMatrix unimodular_coordinates(const Sublattice& s);

} // namespace atlas
