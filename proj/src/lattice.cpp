#include "atlas/lattice.hpp"

#include "atlas/error.hpp"

#include <utility>

namespace atlas {

namespace {

Integer floor_div(const Integer& a, const Integer& b)
{
    Integer q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

} // namespace

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows)
{
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        check_invariant(r.size() == cols_, "ragged matrix literal");
        for (long long v : r) data_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_columns(std::size_t dim, const std::vector<Point>& columns)
{
    IntMatrix m(dim, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        check_invariant(columns[c].size() == dim, "column dimension mismatch");
        for (std::size_t r = 0; r < dim; ++r) m(r, c) = columns[c][r];
    }
    return m;
}

IntMatrix IntMatrix::from_rows(std::size_t cols, const std::vector<Point>& rows)
{
    IntMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        check_invariant(rows[r].size() == cols, "row dimension mismatch");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

Point IntMatrix::row(std::size_t r) const
{
    return Point(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                 data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Point IntMatrix::column(std::size_t c) const
{
    Point p(rows_);
    for (std::size_t r = 0; r < rows_; ++r) p[r] = (*this)(r, c);
    return p;
}

IntMatrix IntMatrix::transposed() const
{
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

IntMatrix IntMatrix::row_block(std::size_t first, std::size_t count) const
{
    IntMatrix b(count, cols_);
    for (std::size_t r = 0; r < count; ++r)
        for (std::size_t c = 0; c < cols_; ++c) b(r, c) = (*this)(first + r, c);
    return b;
}

IntMatrix IntMatrix::column_block(std::size_t first, std::size_t count) const
{
    IntMatrix b(rows_, count);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < count; ++c) b(r, c) = (*this)(r, first + c);
    return b;
}

Point IntMatrix::apply(const Point& x) const
{
    check_invariant(x.size() == cols_, "matrix-vector dimension mismatch");
    Point y(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        Integer acc = 0;
        for (std::size_t c = 0; c < cols_; ++c)
            if (x[c] != 0) acc += (*this)(r, c) * x[c];
        y[r] = std::move(acc);
    }
    return y;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b)
{
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b)
{
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor)
{
    if (factor == 0) return;
    for (std::size_t c = 0; c < cols_; ++c)
        if ((*this)(src, c) != 0) (*this)(dst, c) += factor * (*this)(src, c);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor)
{
    if (factor == 0) return;
    for (std::size_t r = 0; r < rows_; ++r)
        if ((*this)(r, src) != 0) (*this)(r, dst) += factor * (*this)(r, src);
}

void IntMatrix::negate_row(std::size_t r)
{
    for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

void IntMatrix::negate_col(std::size_t c)
{
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = -(*this)(r, c);
}

bool IntMatrix::is_zero() const
{
    for (const auto& v : data_)
        if (v != 0) return false;
    return true;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b)
{
    check_invariant(a.cols() == b.rows(), "matrix product dimension mismatch");
    IntMatrix p(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) p(i, j) += a(i, k) * b(k, j);
        }
    return p;
}

Integer determinant(const IntMatrix& m)
{
    check_invariant(m.rows() == m.cols(), "determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign > 0 ? a(n - 1, n - 1) : Integer(-a(n - 1, n - 1));
}

std::size_t rank(const IntMatrix& m)
{
    IntMatrix a = m;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && a(p, c) == 0) ++p;
        if (p == a.rows()) continue;
        a.swap_rows(r, p);
        for (std::size_t i = r + 1; i < a.rows(); ++i) {
            if (a(i, c) == 0) continue;
            Integer f = a(i, c);
            Integer g = a(r, c);
            for (std::size_t j = c; j < a.cols(); ++j) a(i, j) = a(i, j) * g - a(r, j) * f;
        }
        ++r;
    }
    return r;
}

HermiteForm hermite_form(const IntMatrix& m)
{
    IntMatrix h = m;
    IntMatrix t = IntMatrix::identity(m.rows());
    std::size_t p = 0;
    for (std::size_t c = 0; c < h.cols() && p < h.rows(); ++c) {
        while (true) {
            std::size_t best = h.rows();
            for (std::size_t i = p; i < h.rows(); ++i)
                if (h(i, c) != 0 && (best == h.rows() || abs_value(h(i, c)) < abs_value(h(best, c)))) best = i;
            if (best == h.rows()) break;
            h.swap_rows(p, best);
            t.swap_rows(p, best);
            bool clean = true;
            for (std::size_t i = p + 1; i < h.rows(); ++i) {
                if (h(i, c) == 0) continue;
                Integer q = h(i, c) / h(p, c);
                h.add_row_multiple(i, p, -q);
                t.add_row_multiple(i, p, -q);
                if (h(i, c) != 0) clean = false;
            }
            if (clean) break;
        }
        if (h(p, c) == 0) continue;
        if (h(p, c) < 0) {
            h.negate_row(p);
            t.negate_row(p);
        }
        for (std::size_t i = 0; i < p; ++i) {
            Integer q = floor_div(h(i, c), h(p, c));
            h.add_row_multiple(i, p, -q);
            t.add_row_multiple(i, p, -q);
        }
        ++p;
    }
    return {std::move(h), std::move(t)};
}

IntMatrix unimodular_inverse(const IntMatrix& m)
{
    check_invariant(m.rows() == m.cols(), "inverse of a non-square matrix");
    HermiteForm hf = hermite_form(m);
    check_invariant(hf.h == IntMatrix::identity(m.rows()), "matrix is not unimodular");
    return hf.transform;
}

SmithDecomposition smith_decompose(const IntMatrix& m)
{
    IntMatrix d = m;
    IntMatrix u = IntMatrix::identity(m.rows());
    IntMatrix v = IntMatrix::identity(m.cols());
    const std::size_t steps = std::min(m.rows(), m.cols());
    for (std::size_t t = 0; t < steps; ++t) {
        while (true) {
            std::size_t br = d.rows(), bc = d.cols();
            for (std::size_t i = t; i < d.rows(); ++i)
                for (std::size_t j = t; j < d.cols(); ++j)
                    if (d(i, j) != 0 && (br == d.rows() || abs_value(d(i, j)) < abs_value(d(br, bc)))) {
                        br = i;
                        bc = j;
                    }
            if (br == d.rows()) break;
            d.swap_rows(t, br);
            u.swap_rows(t, br);
            d.swap_cols(t, bc);
            v.swap_cols(t, bc);

            bool clean = true;
            for (std::size_t i = t + 1; i < d.rows(); ++i) {
                if (d(i, t) == 0) continue;
                Integer q = d(i, t) / d(t, t);
                d.add_row_multiple(i, t, -q);
                u.add_row_multiple(i, t, -q);
                if (d(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < d.cols(); ++j) {
                if (d(t, j) == 0) continue;
                Integer q = d(t, j) / d(t, t);
                d.add_col_multiple(j, t, -q);
                v.add_col_multiple(j, t, -q);
                if (d(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            // The pivot must divide the whole remaining block.
            bool divides = true;
            for (std::size_t i = t + 1; i < d.rows() && divides; ++i)
                for (std::size_t j = t + 1; j < d.cols(); ++j)
                    if (d(i, j) % d(t, t) != 0) {
                        d.add_row_multiple(t, i, 1);
                        u.add_row_multiple(t, i, 1);
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (d(t, t) < 0) {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    return {std::move(u), std::move(d), std::move(v)};
}

Sublattice::Sublattice(std::size_t ambient_rank, IntMatrix basis) : ambient_rank_(ambient_rank), basis_(std::move(basis))
{
    check_invariant(basis_.rows() == ambient_rank_, "sublattice basis has wrong ambient dimension");
    check_invariant(atlas::rank(basis_) == basis_.cols(), "sublattice basis columns are dependent");
}

Sublattice Sublattice::generated_by(std::size_t ambient_rank, const std::vector<Point>& generators)
{
    if (generators.empty()) return zero(ambient_rank);
    IntMatrix h = hermite_form(IntMatrix::from_rows(ambient_rank, generators)).h;
    std::vector<Point> basis;
    for (std::size_t r = 0; r < h.rows(); ++r) {
        Point row = h.row(r);
        bool nonzero = false;
        for (const auto& x : row) nonzero = nonzero || x != 0;
        if (nonzero) basis.push_back(std::move(row));
    }
    return Sublattice(ambient_rank, IntMatrix::from_columns(ambient_rank, basis));
}

bool Sublattice::contains(const Point& x) const
{
    check_invariant(x.size() == ambient_rank_, "point dimension mismatch");
    IntMatrix h = hermite_form(basis_.transposed()).h;
    Point rest = x;
    for (std::size_t r = 0; r < h.rows(); ++r) {
        std::size_t c = 0;
        while (c < h.cols() && h(r, c) == 0) ++c;
        if (c == h.cols()) break;
        if (rest[c] % h(r, c) != 0) return false;
        Integer q = rest[c] / h(r, c);
        for (std::size_t j = 0; j < h.cols(); ++j) rest[j] -= q * h(r, j);
    }
    for (const auto& v : rest)
        if (v != 0) return false;
    return true;
}

namespace {

// Rows of the left SNF factor split the ambient lattice as sat(s) + complement.
IntMatrix left_factor(const Sublattice& s) { return smith_decompose(s.basis()).u; }

IntMatrix normalized_rows(const IntMatrix& m)
{
    if (m.rows() == 0) return m;
    return hermite_form(m).h;
}

} // namespace

Sublattice saturate(const Sublattice& s)
{
    if (s.rank() == 0) return s;
    IntMatrix uinv = unimodular_inverse(left_factor(s));
    IntMatrix cols = uinv.column_block(0, s.rank());
    IntMatrix canonical = hermite_form(cols.transposed()).h.transposed();
    return Sublattice(s.ambient_rank(), canonical.column_block(0, s.rank()));
}

IntMatrix quotient_map(std::size_t ambient_rank, const Sublattice& s)
{
    check_invariant(s.ambient_rank() == ambient_rank, "quotient_map: ambient rank mismatch");
    if (s.rank() == 0) return IntMatrix::identity(ambient_rank);
    IntMatrix u = left_factor(s);
    return normalized_rows(u.row_block(s.rank(), ambient_rank - s.rank()));
}

IntMatrix unimodular_coordinates(const Sublattice& s)
{
    if (s.rank() == 0) return IntMatrix(0, s.ambient_rank());
    IntMatrix u = left_factor(s);
    return normalized_rows(u.row_block(0, s.rank()));
}

} // namespace atlas
