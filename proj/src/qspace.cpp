#include "quatop/qspace.hpp"

#include <cmath>

#include "quatop/errors.hpp"
#include "quatop/kernels.hpp"

namespace quatop {

QVector QVector::operator+(const QVector& o) const {
    if (size() != o.size()) throw ShapeError("QVector size mismatch in +");
    QVector r(size());
    for (std::size_t i = 0; i < size(); ++i) r.comps_[i] = comps_[i] + o.comps_[i];
    return r;
}

QVector QVector::operator-(const QVector& o) const {
    if (size() != o.size()) throw ShapeError("QVector size mismatch in -");
    QVector r(size());
    for (std::size_t i = 0; i < size(); ++i) r.comps_[i] = comps_[i] - o.comps_[i];
    return r;
}

QVector QVector::operator*(const Quaternion& q) const {
    QVector r(size());
    const double s[4] = {q.w, q.x, q.y, q.z};
    kernels::active().qscale_right(data(), s, r.data(), size());
    return r;
}

QVector QVector::operator*(double s) const {
    QVector r(size());
    for (std::size_t i = 0; i < size(); ++i) r.comps_[i] = comps_[i] * s;
    return r;
}

Quaternion inner(const QVector& u, const QVector& v) {
    if (u.size() != v.size()) throw ShapeError("QVector size mismatch in inner product");
    double out[4];
    kernels::active().qdot_conj(u.data(), v.data(), u.size(), out);
    return {out[0], out[1], out[2], out[3]};
}

double norm_sq(const QVector& u) {
    return kernels::active().sumsq(u.data(), 4 * u.size());
}

double norm(const QVector& u) { return std::sqrt(norm_sq(u)); }

double Basis::gram_residual(const std::vector<QVector>& vectors) {
    double worst = 0.0;
    for (std::size_t r = 0; r < vectors.size(); ++r) {
        for (std::size_t s = 0; s < vectors.size(); ++s) {
            Quaternion g = inner(vectors[r], vectors[s]);
            if (r == s) g = g - Quaternion::one();
            worst = std::max(worst, modulus(g));
        }
    }
    return worst;
}

Basis::Basis(std::vector<QVector> vectors, double tol) : vectors_(std::move(vectors)) {
    if (vectors_.empty()) throw ShapeError("empty basis");
    const std::size_t n = vectors_[0].size();
    for (const auto& v : vectors_)
        if (v.size() != n) throw ShapeError("basis vectors of unequal length");
    if (gram_residual(vectors_) > tol)
        throw PreconditionError("basis is not orthonormal within tolerance");
}

Basis Basis::standard(std::size_t n) {
    std::vector<QVector> vs;
    vs.reserve(n);
    for (std::size_t r = 0; r < n; ++r) vs.push_back(QVector::unit(n, r));
    return Basis(std::move(vs));
}

std::vector<Quaternion> fourier_expand(const QVector& x, const Basis& basis) {
    std::vector<Quaternion> coeffs;
    coeffs.reserve(basis.dimension());
    for (const auto& phi : basis.vectors()) coeffs.push_back(inner(phi, x));
    return coeffs;
}

QVector fourier_reconstruct(const std::vector<Quaternion>& coeffs, const Basis& basis) {
    if (coeffs.size() != basis.dimension())
        throw ShapeError("coefficient count does not match basis dimension");
    QVector x(basis[0].size());
    for (std::size_t r = 0; r < coeffs.size(); ++r) x = x + basis[r] * coeffs[r];
    return x;
}

Basis gram_schmidt(const std::vector<QVector>& vectors, double rank_tol) {
    if (vectors.empty()) throw ShapeError("empty input to gram_schmidt");
    std::vector<QVector> out;
    out.reserve(vectors.size());
    for (const auto& v : vectors) {
        QVector w = v;
        for (int pass = 0; pass < 2; ++pass) {
            for (const auto& e : out) w = w - e * inner(e, w);
        }
        const double n = norm(w);
        if (n < rank_tol)
            throw PreconditionError("gram_schmidt: numerically dependent input");
        out.push_back(w * (1.0 / n));
    }
    return Basis(std::move(out));
}

}  // namespace quatop
