#ifndef QUATOP_QSPACE_HPP
#define QUATOP_QSPACE_HPP

#include <vector>

#include "quatop/quat.hpp"

namespace quatop {

/// A vector in the right H-module H^n. Scalars multiply on the right.
class QVector {
  public:
    QVector() = default;
    explicit QVector(std::size_t n) : comps_(n) {}
    explicit QVector(std::vector<Quaternion> comps) : comps_(std::move(comps)) {}

    static QVector unit(std::size_t n, std::size_t r) {
        QVector e(n);
        e.comps_[r] = Quaternion::one();
        return e;
    }

    std::size_t size() const { return comps_.size(); }
    const Quaternion& operator[](std::size_t r) const { return comps_[r]; }
    Quaternion& operator[](std::size_t r) { return comps_[r]; }
    const std::vector<Quaternion>& components() const { return comps_; }
    const double* data() const { return reinterpret_cast<const double*>(comps_.data()); }
    double* data() { return reinterpret_cast<double*>(comps_.data()); }

    QVector operator+(const QVector& o) const;
    QVector operator-(const QVector& o) const;
    /// Right scalar multiple u * q.
    QVector operator*(const Quaternion& q) const;
    QVector operator*(double s) const;

  private:
    std::vector<Quaternion> comps_;
};

static_assert(sizeof(Quaternion) == 4 * sizeof(double));

/// <u,v> = sum_r conj(u_r) v_r; conjugate-linear in the first slot,
/// right-linear in the second.
Quaternion inner(const QVector& u, const QVector& v);

double norm(const QVector& u);
double norm_sq(const QVector& u);

/// An orthonormal set spanning H^n over H.
class Basis {
  public:
    explicit Basis(std::vector<QVector> vectors, double tol = 1e-10);

    static Basis standard(std::size_t n);

    std::size_t dimension() const { return vectors_.size(); }
    const QVector& operator[](std::size_t r) const { return vectors_[r]; }
    const std::vector<QVector>& vectors() const { return vectors_; }

    /// Largest deviation of the Gram matrix from the identity.
    static double gram_residual(const std::vector<QVector>& vectors);

  private:
    std::vector<QVector> vectors_;
};

/// Fourier coefficients c_r = <phi_r, x>.
std::vector<Quaternion> fourier_expand(const QVector& x, const Basis& basis);

/// x = sum_r phi_r c_r (coefficients on the right).
QVector fourier_reconstruct(const std::vector<Quaternion>& coeffs, const Basis& basis);

/// Modified Gram-Schmidt over the right H-module, one re-orthogonalization
/// pass. Throws PreconditionError when the input is numerically dependent.
Basis gram_schmidt(const std::vector<QVector>& vectors, double rank_tol = 1e-10);

}  // namespace quatop

#endif  // QUATOP_QSPACE_HPP
