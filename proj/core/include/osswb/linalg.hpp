#pragma once

#include <initializer_list>
#include <vector>

#include "osswb/rational.hpp"

namespace osswb {

// Dense matrix over Rational, row-major.
class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(int rows, int cols);
    RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static RatMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& operator()(int i, int j) { return data_[idx(i, j)]; }
    const Rational& operator()(int i, int j) const { return data_[idx(i, j)]; }

    RatMatrix operator+(const RatMatrix& o) const;
    RatMatrix operator-(const RatMatrix& o) const;
    RatMatrix operator*(const RatMatrix& o) const;
    RatMatrix operator*(const Rational& c) const;
    bool operator==(const RatMatrix& o) const;
    bool operator!=(const RatMatrix& o) const { return !(*this == o); }

    RatMatrix transposed() const;
    bool is_zero() const;
    bool is_symmetric() const;

    std::vector<Rational> apply(const std::vector<Rational>& x) const;

private:
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
               static_cast<std::size_t>(j);
    }
    int rows_, cols_;
    std::vector<Rational> data_;
};

// Inertia counts of a symmetric bilinear form.  Reported as (negatives,
// positives) so that a form the literature calls signature (p,q) with p
// timelike directions reads off directly.
struct Signature {
    int negatives = 0;
    int positives = 0;
    int zeros = 0;

    bool operator==(const Signature& o) const = default;
};

// Exact rank via fraction-free (Bareiss) elimination on denominator-cleared rows.
int rank(const RatMatrix& m);

Rational det(const RatMatrix& m);  // throws DimensionMismatch unless square

// Exact X with A X = B; throws SingularMatrix when det A = 0.
RatMatrix solve(const RatMatrix& a, const RatMatrix& b);

RatMatrix inverse(const RatMatrix& a);

// Basis of the null space; size = cols - rank.
std::vector<std::vector<Rational>> kernel_basis(const RatMatrix& m);

// Congruence diagonalization of a symmetric matrix: basis^T * g * basis is
// diagonal with the returned diagonal entries.  Throws NotSymmetric.
struct CongruenceDiagonalization {
    RatMatrix basis;
    std::vector<Rational> diagonal;
};
CongruenceDiagonalization congruence_diagonalization(const RatMatrix& g);

// Inertia via symmetric congruence diagonalization (Sylvester's law makes
// the result independent of the congruence path).  Throws NotSymmetric.
Signature sylvester_signature(const RatMatrix& g);

}  // namespace osswb
