#include "osswb/linalg.hpp"

#include <utility>

#include "osswb/errors.hpp"

namespace osswb {

RatMatrix::RatMatrix(int rows, int cols)
    : rows_(rows), cols_(cols),
      data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), Rational(0)) {
    if (rows < 0 || cols < 0) throw DimensionMismatch("negative matrix dimension");
}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
    data_.reserve(static_cast<std::size_t>(rows_) * static_cast<std::size_t>(cols_));
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != cols_)
            throw DimensionMismatch("ragged initializer for RatMatrix");
        for (const auto& v : row) data_.push_back(v);
    }
}

RatMatrix RatMatrix::identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::operator+(const RatMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw DimensionMismatch("matrix addition shape mismatch");
    RatMatrix r(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] + o.data_[k];
    return r;
}

RatMatrix RatMatrix::operator-(const RatMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw DimensionMismatch("matrix subtraction shape mismatch");
    RatMatrix r(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] - o.data_[k];
    return r;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
    if (cols_ != o.rows_) throw DimensionMismatch("matrix product shape mismatch");
    RatMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(i, k);
            if (a == 0) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const Rational& b = o(k, j);
                if (b != 0) r(i, j) += a * b;
            }
        }
    return r;
}

RatMatrix RatMatrix::operator*(const Rational& c) const {
    RatMatrix r(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] * c;
    return r;
}

bool RatMatrix::operator==(const RatMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

RatMatrix RatMatrix::transposed() const {
    RatMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

bool RatMatrix::is_zero() const {
    for (const auto& v : data_)
        if (v != 0) return false;
    return true;
}

bool RatMatrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

std::vector<Rational> RatMatrix::apply(const std::vector<Rational>& x) const {
    if (static_cast<int>(x.size()) != cols_)
        throw DimensionMismatch("vector length does not match matrix columns");
    std::vector<Rational> y(static_cast<std::size_t>(rows_), Rational(0));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if ((*this)(i, j) != 0) y[static_cast<std::size_t>(i)] += (*this)(i, j) * x[static_cast<std::size_t>(j)];
    return y;
}

namespace {

// Row-wise denominator clearing; scaling rows leaves rank unchanged.
std::vector<std::vector<Integer>> to_integer_rows(const RatMatrix& m) {
    std::vector<std::vector<Integer>> rows(static_cast<std::size_t>(m.rows()));
    for (int i = 0; i < m.rows(); ++i) {
        Integer l = 1;
        for (int j = 0; j < m.cols(); ++j) l = lcm(l, denominator(m(i, j)));
        auto& row = rows[static_cast<std::size_t>(i)];
        row.resize(static_cast<std::size_t>(m.cols()));
        for (int j = 0; j < m.cols(); ++j)
            row[static_cast<std::size_t>(j)] =
                numerator(m(i, j)) * (l / denominator(m(i, j)));
    }
    return rows;
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(RatMatrix& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int p = -1;
        // first nonzero entry in column order: deterministic elimination trace
        for (int i = r; i < m.rows(); ++i)
            if (m(i, c) != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        Rational inv = Rational(1) / m(r, c);
        for (int j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            Rational f = m(i, c);
            for (int j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

int rank(const RatMatrix& m) {
    auto a = to_integer_rows(m);
    const int rows = m.rows(), cols = m.cols();
    Integer prev = 1;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(a[static_cast<std::size_t>(p)], a[static_cast<std::size_t>(r)]);
        const auto& pr = a[static_cast<std::size_t>(r)];
        for (int i = r + 1; i < rows; ++i) {
            auto& row = a[static_cast<std::size_t>(i)];
            for (int j = c + 1; j < cols; ++j)
                row[static_cast<std::size_t>(j)] =
                    (pr[static_cast<std::size_t>(c)] * row[static_cast<std::size_t>(j)] -
                     row[static_cast<std::size_t>(c)] * pr[static_cast<std::size_t>(j)]) /
                    prev;  // exact by the Bareiss identity
            row[static_cast<std::size_t>(c)] = 0;
        }
        prev = pr[static_cast<std::size_t>(c)];
        ++r;
    }
    return r;
}

Rational det(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("determinant of non-square matrix");
    RatMatrix a = m;
    const int n = a.rows();
    Rational d(1);
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int i = c; i < n; ++i)
            if (a(i, c) != 0) {
                p = i;
                break;
            }
        if (p < 0) return Rational(0);
        if (p != c) {
            for (int j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
            d = -d;
        }
        d *= a(c, c);
        Rational inv = Rational(1) / a(c, c);
        for (int i = c + 1; i < n; ++i) {
            if (a(i, c) == 0) continue;
            Rational f = a(i, c) * inv;
            for (int j = c; j < n; ++j) a(i, j) -= f * a(c, j);
        }
    }
    return d;
}

RatMatrix solve(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows() != a.cols()) throw DimensionMismatch("solve requires a square system");
    if (a.rows() != b.rows()) throw DimensionMismatch("right-hand side row mismatch");
    const int n = a.rows(), k = b.cols();
    RatMatrix aug(n, n + k);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug(i, j) = a(i, j);
        for (int j = 0; j < k; ++j) aug(i, n + j) = b(i, j);
    }
    auto pivots = rref(aug);
    if (static_cast<int>(pivots.size()) < n || (n > 0 && pivots.back() >= n))
        throw SingularMatrix("coefficient matrix is singular");
    RatMatrix x(n, k);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < k; ++j) x(i, j) = aug(i, n + j);
    return x;
}

RatMatrix inverse(const RatMatrix& a) { return solve(a, RatMatrix::identity(a.rows())); }

std::vector<std::vector<Rational>> kernel_basis(const RatMatrix& m) {
    RatMatrix r = m;
    auto pivots = rref(r);
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
    for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<std::vector<Rational>> basis;
    for (int free = 0; free < m.cols(); ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        std::vector<Rational> v(static_cast<std::size_t>(m.cols()), Rational(0));
        v[static_cast<std::size_t>(free)] = 1;
        for (std::size_t pi = 0; pi < pivots.size(); ++pi)
            v[static_cast<std::size_t>(pivots[pi])] = -r(static_cast<int>(pi), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

CongruenceDiagonalization congruence_diagonalization(const RatMatrix& g) {
    if (!g.is_symmetric()) throw NotSymmetric("congruence requires a symmetric matrix");
    RatMatrix d = g;
    const int n = d.rows();
    RatMatrix basis = RatMatrix::identity(n);
    auto swap_rc = [&](int i, int j) {
        for (int c = 0; c < n; ++c) std::swap(d(i, c), d(j, c));
        for (int r = 0; r < n; ++r) std::swap(d(r, i), d(r, j));
        for (int r = 0; r < n; ++r) std::swap(basis(r, i), basis(r, j));
    };
    for (int k = 0; k < n; ++k) {
        if (d(k, k) == 0) {
            int j = -1;
            for (int i = k + 1; i < n; ++i)
                if (d(i, i) != 0) {
                    j = i;
                    break;
                }
            if (j >= 0) {
                swap_rc(k, j);
            } else {
                // all remaining diagonal entries vanish; split a hyperbolic pair
                int a = -1, b = -1;
                for (int i = k; i < n && a < 0; ++i)
                    for (int l = i + 1; l < n; ++l)
                        if (d(i, l) != 0) {
                            a = i;
                            b = l;
                            break;
                        }
                if (a < 0) break;  // remaining block is zero
                // congruence: row/col a += row/col b gives diagonal 2*d(a,b)
                for (int c = 0; c < n; ++c) d(a, c) += d(b, c);
                for (int r = 0; r < n; ++r) d(r, a) += d(r, b);
                for (int r = 0; r < n; ++r) basis(r, a) += basis(r, b);
                if (a != k) swap_rc(a, k);
            }
        }
        if (d(k, k) == 0) continue;
        const Rational p = d(k, k);
        for (int i = k + 1; i < n; ++i) {
            if (d(i, k) == 0) continue;
            Rational f = d(i, k) / p;
            for (int c = 0; c < n; ++c) d(i, c) -= f * d(k, c);
            for (int r = 0; r < n; ++r) d(r, i) -= f * d(r, k);
            for (int r = 0; r < n; ++r) basis(r, i) -= f * basis(r, k);
        }
    }
    CongruenceDiagonalization result{std::move(basis), {}};
    result.diagonal.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) result.diagonal.push_back(d(i, i));
    return result;
}

Signature sylvester_signature(const RatMatrix& g) {
    auto cd = congruence_diagonalization(g);
    Signature sig;
    for (const auto& v : cd.diagonal) {
        if (v > 0)
            ++sig.positives;
        else if (v < 0)
            ++sig.negatives;
        else
            ++sig.zeros;
    }
    return sig;
}

}  // namespace osswb
