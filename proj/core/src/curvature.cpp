#include "osswb/curvature.hpp"

#include <algorithm>

#include "osswb/errors.hpp"

namespace osswb {

InnerProduct::InnerProduct(RatMatrix gram) : gram_(std::move(gram)) {
    if (!gram_.is_symmetric()) throw NotSymmetric("inner product Gram matrix must be symmetric");
    gram_inv_ = inverse(gram_);  // throws SingularMatrix when degenerate
}

Rational InnerProduct::pairing(const std::vector<Rational>& x,
                               const std::vector<Rational>& y) const {
    auto gy = gram_.apply(y);
    if (x.size() != gy.size()) throw DimensionMismatch("pairing dimension mismatch");
    Rational total(0);
    for (std::size_t i = 0; i < x.size(); ++i) total += x[i] * gy[i];
    return total;
}

CurvatureTensor::CurvatureTensor(int dim) : dim_(dim) {
    if (dim < 1) throw InvalidInput("tensor dimension must be positive");
}

std::pair<CurvatureTensor::Key, int> CurvatureTensor::canonicalize(const Key& k) {
    auto [a, b, c, d] = k;
    if (a == b || c == d) return {k, 0};
    int sign = 1;
    if (a > b) {
        std::swap(a, b);
        sign = -sign;
    }
    if (c > d) {
        std::swap(c, d);
        sign = -sign;
    }
    if (std::array{c, d} < std::array{a, b}) {
        std::swap(a, c);
        std::swap(b, d);
    }
    return {Key{a, b, c, d}, sign};
}

void CurvatureTensor::check_range(const Key& k) const {
    for (int i : k)
        if (i < 0 || i >= dim_) throw DimensionMismatch("tensor index out of range");
}

Rational CurvatureTensor::get(int a, int b, int c, int d) const {
    Key k{a, b, c, d};
    check_range(k);
    auto [ck, sign] = canonicalize(k);
    if (sign == 0) return Rational(0);
    auto it = entries_.find(ck);
    if (it == entries_.end()) return Rational(0);
    return sign > 0 ? it->second : -it->second;
}

void CurvatureTensor::set(int a, int b, int c, int d, const Rational& v) {
    Key k{a, b, c, d};
    check_range(k);
    auto [ck, sign] = canonicalize(k);
    if (sign == 0) {
        if (v != 0)
            throw InvalidInput("antisymmetry forces a zero value on a repeated index pair");
        return;
    }
    if (v == 0) {
        entries_.erase(ck);
        return;
    }
    entries_[ck] = sign > 0 ? v : -v;
}

void CurvatureTensor::add(int a, int b, int c, int d, const Rational& v) {
    if (v == 0) return;
    Key k{a, b, c, d};
    check_range(k);
    auto [ck, sign] = canonicalize(k);
    if (sign == 0)
        throw InvalidInput("antisymmetry forces a zero value on a repeated index pair");
    auto it = entries_.find(ck);
    if (it == entries_.end()) {
        entries_.emplace(ck, sign > 0 ? v : -v);
        return;
    }
    it->second += sign > 0 ? v : -v;
    if (it->second == 0) entries_.erase(it);
}

CurvatureTensor CurvatureTensor::operator+(const CurvatureTensor& o) const {
    if (dim_ != o.dim_) throw DimensionMismatch("tensor addition dimension mismatch");
    CurvatureTensor r(*this);
    for (const auto& [k, v] : o.entries_) {
        auto it = r.entries_.find(k);
        if (it == r.entries_.end()) {
            r.entries_.emplace(k, v);
        } else {
            it->second += v;
            if (it->second == 0) r.entries_.erase(it);
        }
    }
    return r;
}

CurvatureTensor CurvatureTensor::operator*(const Rational& c) const {
    CurvatureTensor r(dim_);
    if (c == 0) return r;
    for (const auto& [k, v] : entries_) r.entries_.emplace(k, v * c);
    return r;
}

bool CurvatureTensor::operator==(const CurvatureTensor& o) const {
    return dim_ == o.dim_ && entries_ == o.entries_;
}

std::vector<SymmetryViolation> validate_curvature_symmetries(const CurvatureTensor& r) {
    std::vector<SymmetryViolation> out;
    const int n = r.dim();
    for (int a = 0; a < n && out.size() < 100; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b; c < n; ++c)
                for (int d = 0; d < n; ++d) {
                    if (r.get(a, b, c, d) + r.get(b, c, a, d) + r.get(c, a, b, d) != 0)
                        out.push_back({"bianchi", {a, b, c, d}});
                }
    return out;
}

std::vector<SymmetryViolation> validate_raw_entries(
    int dim, const std::vector<std::pair<std::array<int, 4>, Rational>>& entries) {
    std::map<std::array<int, 4>, Rational> raw;
    for (const auto& [k, v] : entries) {
        for (int i : k)
            if (i < 0 || i >= dim) throw DimensionMismatch("tensor index out of range");
        raw[k] += v;
    }
    auto at = [&](int a, int b, int c, int d) -> Rational {
        auto it = raw.find({a, b, c, d});
        return it == raw.end() ? Rational(0) : it->second;
    };
    std::vector<SymmetryViolation> out;
    for (int a = 0; a < dim && out.size() < 100; ++a)
        for (int b = 0; b < dim; ++b)
            for (int c = 0; c < dim; ++c)
                for (int d = 0; d < dim; ++d) {
                    if (at(a, b, c, d) != -at(b, a, c, d))
                        out.push_back({"antisymmetry12", {a, b, c, d}});
                    if (at(a, b, c, d) != -at(a, b, d, c))
                        out.push_back({"antisymmetry34", {a, b, c, d}});
                    if (at(a, b, c, d) != at(c, d, a, b))
                        out.push_back({"pair", {a, b, c, d}});
                    if (at(a, b, c, d) + at(b, c, a, d) + at(c, a, b, d) != 0)
                        out.push_back({"bianchi", {a, b, c, d}});
                }
    return out;
}

CurvatureTensor csc_tensor(int s) {
    if (s < 1) throw InvalidInput("csc_tensor requires s >= 1");
    CurvatureTensor r(s);
    for (int a = 0; a < s; ++a)
        for (int b = a + 1; b < s; ++b) {
            // only R(a,b,b,a) = 1 (and its orbit) survives the deltas
            r.set(a, b, b, a, Rational(1));
        }
    return r;
}

CurvatureTensor gram_tensor(const RatMatrix& phi) {
    if (!phi.is_symmetric()) throw NotSymmetric("gram_tensor requires a symmetric matrix");
    const int s = phi.rows();
    CurvatureTensor r(s);
    for (int a = 0; a < s; ++a)
        for (int b = a + 1; b < s; ++b)
            for (int c = a; c < s; ++c)
                for (int d = c + 1; d < s; ++d) {
                    CurvatureTensor::Key k{a, b, c, d};
                    if (CurvatureTensor::canonicalize(k).first != k) continue;
                    r.set(a, b, c, d, phi(a, d) * phi(b, c) - phi(a, c) * phi(b, d));
                }
    return r;
}

InnerProduct nil3_inner_product(int s, const RatMatrix& g_ab) {
    if (s < 2) throw InvalidInput("family inner product requires s >= 2");
    if (g_ab.rows() != s || g_ab.cols() != s)
        throw DimensionMismatch("U-block must be s x s");
    if (!g_ab.is_symmetric()) throw NotSymmetric("U-block must be symmetric");
    RatMatrix g(3 * s, 3 * s);
    for (int a = 0; a < s; ++a) {
        for (int b = 0; b < s; ++b) g(a, b) = g_ab(a, b);
        g(a, s + a) = 1;
        g(s + a, a) = 1;
        g(2 * s + a, 2 * s + a) = -1;
    }
    return InnerProduct(std::move(g));
}

CurvatureTensor nil3_curvature(const CurvatureTensor& r1, const CurvatureTensor& r2) {
    const int s = r1.dim();
    if (r2.dim() != s) throw DimensionMismatch("U-span tensors must share a dimension");
    if (!validate_curvature_symmetries(r1).empty() ||
        !validate_curvature_symmetries(r2).empty())
        throw InvalidInput("inputs must be valid algebraic curvature tensors");
    const int n = 3 * s;
    // value of the full tensor at a raw index tuple
    auto value_at = [&](const CurvatureTensor::Key& k) -> Rational {
        int t_count = 0, u_count = 0;
        std::array<int, 4> u{};
        for (int i = 0; i < 4; ++i) {
            if (k[i] < s) {
                u[i] = k[i];
                ++u_count;
            } else if (k[i] >= 2 * s) {
                u[i] = k[i] - 2 * s;
                ++t_count;
            }
        }
        if (u_count == 4) return r1.get(u[0], u[1], u[2], u[3]);
        if (t_count == 1 && u_count == 3) return r2.get(u[0], u[1], u[2], u[3]);
        return Rational(0);
    };
    CurvatureTensor r(n);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = a; c < n; ++c)
                for (int d = c + 1; d < n; ++d) {
                    CurvatureTensor::Key k{a, b, c, d};
                    if (CurvatureTensor::canonicalize(k).first != k) continue;
                    r.set(a, b, c, d, value_at(k));
                }
    return r;
}

JacobiBuilder::JacobiBuilder(const CurvatureTensor& r, const InnerProduct& g)
    : g_(g), dim_(r.dim()) {
    if (g.dim() != dim_) throw DimensionMismatch("tensor and inner product dimensions differ");
    for (int y = 0; y < dim_; ++y)
        for (int p = 0; p < dim_; ++p)
            for (int q = 0; q < dim_; ++q)
                for (int z = 0; z < dim_; ++z) {
                    Rational v = r.get(y, p, q, z);
                    if (v != 0) nonzeros_.push_back({y, p, q, z, std::move(v)});
                }
}

RatMatrix JacobiBuilder::operator()(const std::vector<Rational>& x) const {
    if (static_cast<int>(x.size()) != dim_)
        throw DimensionMismatch("direction vector has wrong length");
    // bilinear form M[y][z] = R(y, x, x, z); symmetric by the pair identity
    RatMatrix m(dim_, dim_);
    for (const auto& nz : nonzeros_) {
        const Rational& xp = x[static_cast<std::size_t>(nz.p)];
        if (xp == 0) continue;
        const Rational& xq = x[static_cast<std::size_t>(nz.q)];
        if (xq == 0) continue;
        m(nz.y, nz.z) += nz.val * xp * xq;
    }
    return g_.gram_inverse() * m;
}

JacobiMatrix jacobi(const CurvatureTensor& r, const InnerProduct& g,
                    const std::vector<Rational>& x) {
    JacobiBuilder build(r, g);
    return JacobiMatrix{x, build(x)};
}

std::vector<Rational> frame_vector(int dim, int index) {
    std::vector<Rational> v(static_cast<std::size_t>(dim), Rational(0));
    v[static_cast<std::size_t>(index)] = 1;
    return v;
}

}  // namespace osswb
