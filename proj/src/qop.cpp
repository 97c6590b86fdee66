#include "quatop/qop.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <numeric>

#include "quatop/errors.hpp"
#include "quatop/kernels.hpp"

namespace quatop {

QMatrix::QMatrix(std::size_t n, std::vector<Quaternion> entries)
    : n_(n), entries_(std::move(entries)) {
    if (entries_.size() != n * n) throw ShapeError("QMatrix entry count != n*n");
}

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n);
    for (std::size_t r = 0; r < n; ++r) m.at(r, r) = Quaternion::one();
    return m;
}

QMatrix QMatrix::diagonal(const std::vector<Quaternion>& d) {
    QMatrix m(d.size());
    for (std::size_t r = 0; r < d.size(); ++r) m.at(r, r) = d[r];
    return m;
}

QMatrix QMatrix::operator+(const QMatrix& o) const {
    if (n_ != o.n_) throw ShapeError("QMatrix dim mismatch in +");
    QMatrix r(n_);
    for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = entries_[i] + o.entries_[i];
    return r;
}

QMatrix QMatrix::operator-(const QMatrix& o) const {
    if (n_ != o.n_) throw ShapeError("QMatrix dim mismatch in -");
    QMatrix r(n_);
    for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = entries_[i] - o.entries_[i];
    return r;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
    if (n_ != o.n_) throw ShapeError("QMatrix dim mismatch in *");
    QMatrix c(n_);
    const auto& k = kernels::active();
    // C.row(r) += A_{rs} * B.row(s), rows contiguous for the kernel.
    for (std::size_t r = 0; r < n_; ++r) {
        double* crow = reinterpret_cast<double*>(c.entries_.data() + r * n_);
        for (std::size_t s = 0; s < n_; ++s) {
            const Quaternion& a = at(r, s);
            const double sv[4] = {a.w, a.x, a.y, a.z};
            k.qscale_acc_left(sv, o.row_data(s), crow, n_);
        }
    }
    return c;
}

QMatrix QMatrix::operator*(double s) const {
    QMatrix r(n_);
    for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = entries_[i] * s;
    return r;
}

QVector QMatrix::apply(const QVector& x) const {
    if (x.size() != n_) throw ShapeError("QMatrix/QVector dim mismatch");
    QVector y(n_);
    const auto& k = kernels::active();
    for (std::size_t r = 0; r < n_; ++r) {
        double out[4];
        k.qdot(row_data(r), x.data(), n_, out);
        y[r] = {out[0], out[1], out[2], out[3]};
    }
    return y;
}

QVector QMatrix::column(std::size_t s) const {
    QVector c(n_);
    for (std::size_t r = 0; r < n_; ++r) c[r] = at(r, s);
    return c;
}

QMatrix adjoint(const QMatrix& t) {
    QMatrix a(t.dim());
    for (std::size_t r = 0; r < t.dim(); ++r)
        for (std::size_t s = 0; s < t.dim(); ++s) a.at(r, s) = conj(t.at(s, r));
    return a;
}

double hs_norm(const QMatrix& t) {
    return std::sqrt(kernels::active().sumsq(
        reinterpret_cast<const double*>(t.entries().data()), 4 * t.entries().size()));
}

OperatorClass classify(const QMatrix& t, double tol) {
    const QMatrix ts = adjoint(t);
    const double scale = std::max(1.0, hs_norm(t) * hs_norm(t));
    OperatorClass c;
    c.self_adjoint = hs_norm(t - ts) < tol * std::max(1.0, hs_norm(t));
    c.anti_self_adjoint = hs_norm(t + ts) < tol * std::max(1.0, hs_norm(t));
    const QMatrix tts = t * ts;
    const QMatrix tst = ts * t;
    c.normal = hs_norm(tts - tst) < tol * scale;
    c.unitary = c.normal && hs_norm(tts - QMatrix::identity(t.dim())) < tol * scale;
    return c;
}

QMatrix delta_q(const QMatrix& t, const Quaternion& q) {
    return t * t - t * (2.0 * q.w) + QMatrix::identity(t.dim()) * norm_sq(q);
}

// ---- embedding -----------------------------------------------------------

namespace {

struct FrameCoeffs {
    std::complex<double> a;  // alpha + i beta  (the C_m part)
    std::complex<double> b;  // gamma + i delta (the C_m * n part)
};

inline FrameCoeffs frame_coeffs(const Quaternion& q, const SliceFrame& f) {
    const double beta = q.x * f.m.x + q.y * f.m.y + q.z * f.m.z;
    const double gamma = q.x * f.n.x + q.y * f.n.y + q.z * f.n.z;
    const double delta = q.x * f.mn.x + q.y * f.mn.y + q.z * f.mn.z;
    return {{q.w, beta}, {gamma, delta}};
}

inline Quaternion from_frame(const std::complex<double>& a, const std::complex<double>& b,
                             const SliceFrame& f) {
    return Quaternion{a.real(), 0, 0, 0} + f.m * a.imag() + f.n * b.real() + f.mn * b.imag();
}

}  // namespace

ComplexMatrix embed(const QMatrix& t, const UnitImaginary& m) {
    const SliceFrame f(m);
    const std::size_t n = t.dim();
    ComplexMatrix out(2 * n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t s = 0; s < n; ++s) {
            const FrameCoeffs c = frame_coeffs(t.at(r, s), f);
            out(r, s) = c.a;
            out(r, s + n) = c.b;
            out(r + n, s) = -std::conj(c.b);
            out(r + n, s + n) = std::conj(c.a);
        }
    }
    return out;
}

QMatrix unembed(const ComplexMatrix& mtx, const UnitImaginary& m, double tol) {
    if (mtx.rows() != mtx.cols() || mtx.rows() % 2 != 0)
        throw ShapeError("unembed: matrix must be 2n x 2n");
    const std::size_t n = static_cast<std::size_t>(mtx.rows()) / 2;
    const double scale = std::max(1.0, mtx.cwiseAbs().maxCoeff());
    const SliceFrame f(m);
    QMatrix out(n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t s = 0; s < n; ++s) {
            const std::complex<double> a = mtx(r, s);
            const std::complex<double> b = mtx(r, s + n);
            if (std::abs(mtx(r + n, s) + std::conj(b)) > tol * scale ||
                std::abs(mtx(r + n, s + n) - std::conj(a)) > tol * scale)
                throw FormatError("unembed: block symmetry pattern violated");
            out.at(r, s) = from_frame(a, b, f);
        }
    }
    return out;
}

ComplexVector embed_vector(const QVector& x, const UnitImaginary& m) {
    const SliceFrame f(m);
    const std::size_t n = x.size();
    ComplexVector v(2 * n);
    for (std::size_t s = 0; s < n; ++s) {
        const FrameCoeffs c = frame_coeffs(x[s], f);
        v(s) = c.a;
        v(s + n) = -std::conj(c.b);
    }
    return v;
}

QVector unembed_vector(const ComplexVector& v, const UnitImaginary& m) {
    if (v.size() % 2 != 0) throw ShapeError("unembed_vector: length must be even");
    const SliceFrame f(m);
    const std::size_t n = static_cast<std::size_t>(v.size()) / 2;
    QVector x(n);
    for (std::size_t s = 0; s < n; ++s)
        x[s] = from_frame(v(s), -std::conj(v(s + n)), f);
    return x;
}

ComplexVector partner(const ComplexVector& v) {
    const std::size_t n = static_cast<std::size_t>(v.size()) / 2;
    ComplexVector p(v.size());
    for (std::size_t s = 0; s < n; ++s) {
        p(s) = std::conj(v(s + n));
        p(s + n) = -std::conj(v(s));
    }
    return p;
}

double op_norm(const QMatrix& t) {
    if (t.dim() == 0) return 0.0;
    const ComplexMatrix m = embed(t, UnitImaginary::canonical());
    Eigen::BDCSVD<ComplexMatrix> svd(m);
    return svd.singularValues()(0);
}

// ---- right eigendecomposition -------------------------------------------

RightEigenDecomposition right_eigendecompose(const QMatrix& t, const UnitImaginary& m) {
    const std::size_t n = t.dim();
    if (n == 0) throw ShapeError("empty matrix");
    if (!classify(t).normal)
        throw PreconditionError("right_eigendecompose requires a normal operator");

    const ComplexMatrix mtx = embed(t, m);
    Eigen::ComplexSchur<ComplexMatrix> schur(mtx, true);
    if (schur.info() != Eigen::Success) throw NumericalError("complex Schur failed");
    const ComplexMatrix& tri = schur.matrixT();
    const ComplexMatrix& q = schur.matrixU();

    const double scale = std::max(1.0, mtx.norm());
    const double offdiag =
        (tri - ComplexMatrix(tri.diagonal().asDiagonal())).norm();
    if (offdiag > 1e-8 * scale)
        throw NumericalError("Schur form of normal embedding not diagonal; residual " +
                             std::to_string(offdiag));

    // Candidates, all moved to the closed upper half plane.
    struct Candidate {
        std::complex<double> lambda;
        ComplexVector vec;
    };
    std::vector<Candidate> cand;
    cand.reserve(2 * n);
    for (std::size_t i = 0; i < 2 * n; ++i) {
        std::complex<double> lambda = tri(i, i);
        ComplexVector u = q.col(i);
        if (lambda.imag() < 0) {
            u = partner(u);
            lambda = std::conj(lambda);
        }
        cand.push_back({lambda, std::move(u)});
    }
    std::vector<std::size_t> order(cand.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (cand[a].lambda.real() != cand[b].lambda.real())
            return cand[a].lambda.real() < cand[b].lambda.real();
        return cand[a].lambda.imag() < cand[b].lambda.imag();
    });

    // Symplectic Gram-Schmidt: keep a candidate only if it is independent of
    // the chosen vectors AND their partner images (the same quaternionic
    // line appears twice among the 2n complex eigenvectors).
    std::vector<ComplexVector> chosen, partners;
    std::vector<std::complex<double>> lambdas;
    for (const std::size_t idx : order) {
        if (chosen.size() == n) break;
        ComplexVector r = cand[idx].vec;
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t c = 0; c < chosen.size(); ++c) {
                r -= chosen[c] * chosen[c].dot(r);
                r -= partners[c] * partners[c].dot(r);
            }
        }
        const double rn = r.norm();
        if (rn < 0.3) continue;
        r /= rn;
        partners.push_back(partner(r));
        chosen.push_back(std::move(r));
        lambdas.push_back(cand[idx].lambda);
    }
    if (chosen.size() != n)
        throw NumericalError("symplectic basis extraction found " +
                             std::to_string(chosen.size()) + " of " + std::to_string(n) +
                             " vectors");

    RightEigenDecomposition out;
    out.unitary = QMatrix(n);
    out.eigenvalues.reserve(n);
    for (std::size_t c = 0; c < n; ++c) {
        const QVector v = unembed_vector(chosen[c], m);
        for (std::size_t r = 0; r < n; ++r) out.unitary.at(r, c) = v[r];
        out.eigenvalues.emplace_back(lambdas[c].real(), lambdas[c].imag(), m);
    }

    // Residual |T V - V diag(lambda)| relative to scale.
    QMatrix tv = t * out.unitary;
    for (std::size_t c = 0; c < n; ++c) {
        const Quaternion lam = out.eigenvalues[c].as_quaternion();
        for (std::size_t r = 0; r < n; ++r) tv.at(r, c) -= out.unitary.at(r, c) * lam;
    }
    out.residual = hs_norm(tv) / std::max(1.0, hs_norm(t));
    if (out.residual > 1e-8)
        throw NumericalError("right eigendecomposition residual " +
                             std::to_string(out.residual) + " exceeds 1e-8");
    return out;
}

QMatrix z_transform(const QMatrix& t) {
    // I + T*T is self-adjoint positive definite; inverse square root via
    // its right eigendecomposition (real eigenvalues >= 1).
    const QMatrix s = QMatrix::identity(t.dim()) + adjoint(t) * t;
    const RightEigenDecomposition eig = right_eigendecompose(s, UnitImaginary::canonical());
    std::vector<Quaternion> d(t.dim());
    for (std::size_t r = 0; r < t.dim(); ++r)
        d[r] = Quaternion{1.0 / std::sqrt(eig.eigenvalues[r].alpha)};
    const QMatrix inv_sqrt =
        eig.unitary * QMatrix::diagonal(d) * adjoint(eig.unitary);
    return t * inv_sqrt;
}

QMatrix z_inverse(const QMatrix& z) {
    if (op_norm(z) >= 1.0)
        throw std::domain_error("z_inverse requires a strict contraction");
    const QMatrix s = QMatrix::identity(z.dim()) - adjoint(z) * z;
    const RightEigenDecomposition eig = right_eigendecompose(s, UnitImaginary::canonical());
    std::vector<Quaternion> d(z.dim());
    for (std::size_t r = 0; r < z.dim(); ++r)
        d[r] = Quaternion{1.0 / std::sqrt(eig.eigenvalues[r].alpha)};
    const QMatrix inv_sqrt =
        eig.unitary * QMatrix::diagonal(d) * adjoint(eig.unitary);
    return z * inv_sqrt;
}

}  // namespace quatop
