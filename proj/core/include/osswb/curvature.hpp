#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "osswb/linalg.hpp"
#include "osswb/rational.hpp"

namespace osswb {

// Nondegenerate symmetric bilinear form on a frame.  The Gram inverse is
// computed at construction, so degeneracy is rejected immediately and
// Jacobi operators never re-factor.
class InnerProduct {
public:
    explicit InnerProduct(RatMatrix gram);  // throws NotSymmetric, SingularMatrix

    int dim() const { return gram_.rows(); }
    const RatMatrix& gram() const { return gram_; }
    const RatMatrix& gram_inverse() const { return gram_inv_; }
    Signature signature() const { return sylvester_signature(gram_); }

    Rational pairing(const std::vector<Rational>& x, const std::vector<Rational>& y) const;

private:
    RatMatrix gram_;
    RatMatrix gram_inv_;
};

// Degree-4 covariant tensor with the curvature symmetries.  Storage keeps a
// single canonical representative per orbit of {swap first pair (sign),
// swap second pair (sign), exchange pairs}; antisymmetry and pair symmetry
// are therefore structural, and only the first Bianchi identity needs an
// explicit check.
class CurvatureTensor {
public:
    using Key = std::array<int, 4>;

    explicit CurvatureTensor(int dim);

    int dim() const { return dim_; }
    bool is_zero() const { return entries_.empty(); }

    Rational get(int a, int b, int c, int d) const;
    // Overwrite; throws InvalidInput for a nonzero value on a degenerate
    // index pair (a==b or c==d), which antisymmetry forces to zero.
    void set(int a, int b, int c, int d, const Rational& v);
    void add(int a, int b, int c, int d, const Rational& v);

    // Canonical representative entries only (the serialization contract).
    const std::map<Key, Rational>& entries() const { return entries_; }

    CurvatureTensor operator+(const CurvatureTensor& o) const;
    CurvatureTensor operator*(const Rational& c) const;
    bool operator==(const CurvatureTensor& o) const;
    bool operator!=(const CurvatureTensor& o) const { return !(*this == o); }

    // (canonical key, sign); sign 0 marks a degenerate pair.
    static std::pair<Key, int> canonicalize(const Key& k);

private:
    void check_range(const Key& k) const;

    int dim_;
    std::map<Key, Rational> entries_;
};

struct SymmetryViolation {
    std::string identity;  // "antisymmetry12" | "antisymmetry34" | "pair" | "bianchi"
    std::array<int, 4> idx;
};

// First Bianchi over all index tuples (the other identities hold by
// storage construction); empty result means pass.
std::vector<SymmetryViolation> validate_curvature_symmetries(const CurvatureTensor& r);

// Validator for raw entry lists (e.g. hand-written files) where nothing is
// structural: checks all three identities against the literal entries.
std::vector<SymmetryViolation> validate_raw_entries(
    int dim, const std::vector<std::pair<std::array<int, 4>, Rational>>& entries);

// Constant-sectional-curvature tensor on an s-dimensional span:
// R(a,b,c,d) = delta_ad delta_bc - delta_ac delta_bd.
CurvatureTensor csc_tensor(int s);

// R_phi(x,y,z,w) = phi(x,w)phi(y,z) - phi(x,z)phi(y,w) for symmetric phi;
// phi = identity recovers csc_tensor.
CurvatureTensor gram_tensor(const RatMatrix& phi);

// Inner product on the 3s frame {U,V,T}: U-U block g_ab, U-V coupling
// identity, T block -identity; signature (2s, s).
InnerProduct nil3_inner_product(int s, const RatMatrix& g_ab);

// Curvature on the 3s frame from two tensors on the U-span: the all-U block
// carries r1, every pattern with exactly one T index carries r2, everything
// else vanishes.  Throws InvalidInput if either input fails validation.
CurvatureTensor nil3_curvature(const CurvatureTensor& r1, const CurvatureTensor& r2);

// Jacobi operator J(x): g(J(x)y, z) = R(y, x, x, z).
struct JacobiMatrix {
    std::vector<Rational> direction;
    RatMatrix op;
};

// Amortizes the per-tensor setup (nonzero tuple expansion) across many
// directions.
class JacobiBuilder {
public:
    JacobiBuilder(const CurvatureTensor& r, const InnerProduct& g);
    RatMatrix operator()(const std::vector<Rational>& x) const;

private:
    struct Nz {
        int y, p, q, z;
        Rational val;
    };
    const InnerProduct& g_;
    int dim_;
    std::vector<Nz> nonzeros_;
};

JacobiMatrix jacobi(const CurvatureTensor& r, const InnerProduct& g,
                    const std::vector<Rational>& x);

std::vector<Rational> frame_vector(int dim, int index);

}  // namespace osswb
