#ifndef QUATOP_QOP_HPP
#define QUATOP_QOP_HPP

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "quatop/qspace.hpp"
#include "quatop/quat.hpp"

namespace quatop {

/// A bounded right H-linear operator on H^n as an n x n quaternionic
/// matrix, (Tx)_r = sum_s entries[r][s] * x_s. Immutable in spirit:
/// operations return new matrices.
class QMatrix {
  public:
    QMatrix() = default;
    explicit QMatrix(std::size_t n) : n_(n), entries_(n * n) {}
    QMatrix(std::size_t n, std::vector<Quaternion> entries);

    static QMatrix identity(std::size_t n);
    static QMatrix diagonal(const std::vector<Quaternion>& d);

    std::size_t dim() const { return n_; }
    const Quaternion& at(std::size_t r, std::size_t s) const { return entries_[r * n_ + s]; }
    Quaternion& at(std::size_t r, std::size_t s) { return entries_[r * n_ + s]; }
    const std::vector<Quaternion>& entries() const { return entries_; }
    const double* row_data(std::size_t r) const {
        return reinterpret_cast<const double*>(entries_.data() + r * n_);
    }

    QMatrix operator+(const QMatrix& o) const;
    QMatrix operator-(const QMatrix& o) const;
    QMatrix operator*(const QMatrix& o) const;
    QMatrix operator*(double s) const;
    QVector apply(const QVector& x) const;

    QVector column(std::size_t s) const;

  private:
    std::size_t n_ = 0;
    std::vector<Quaternion> entries_;
};

/// (T*)_{rs} = conj(T_{sr}).
QMatrix adjoint(const QMatrix& t);

struct OperatorClass {
    bool self_adjoint = false;
    bool anti_self_adjoint = false;
    bool normal = false;
    bool unitary = false;
};

/// Flags decided by Frobenius residuals below 1e-10 * max(1, |T|_2^2).
OperatorClass classify(const QMatrix& t, double tol = 1e-10);

/// Largest singular value of the complex embedding.
double op_norm(const QMatrix& t);
/// Entrywise Frobenius norm; equals (sum_r |T phi_r|^2)^(1/2) in any
/// orthonormal basis.
double hs_norm(const QMatrix& t);

/// T^2 - T (q + conj q) + I |q|^2; depends on q only through Re q and |q|.
QMatrix delta_q(const QMatrix& t, const Quaternion& q);

/// Z_T = T (I + T*T)^(-1/2); always a strict contraction.
QMatrix z_transform(const QMatrix& t);
/// Inverse bounded transform; requires |Z| < 1.
QMatrix z_inverse(const QMatrix& z);

// ---- complex adjoint embedding ------------------------------------------

using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// chi(T): the 2n x 2n complex matrix [[A, B], [-conj B, conj A]] where
/// T = A + B n in the orthonormal frame (1, m, n, mn). A *-algebra
/// monomorphism; the computational route to norms and spectra.
ComplexMatrix embed(const QMatrix& t, const UnitImaginary& m);

/// Inverse of embed; rejects matrices violating the block symmetry.
QMatrix unembed(const ComplexMatrix& mtx, const UnitImaginary& m, double tol = 1e-10);

/// Quaternionic vector -> C^{2n} compatible with embed: embed(T) * vec(x) = vec(Tx).
ComplexVector embed_vector(const QVector& x, const UnitImaginary& m);
QVector unembed_vector(const ComplexVector& v, const UnitImaginary& m);

/// The antiunitary partner map induced by right multiplication with the
/// frame vector n: eigenvectors for lambda map to eigenvectors for conj(lambda).
ComplexVector partner(const ComplexVector& v);

// ---- structured right eigendecomposition --------------------------------

struct RightEigenDecomposition {
    QMatrix unitary;                     // columns v_r, orthonormal over H
    std::vector<SlicePoint> eigenvalues; // lambda_r in C_m^+, T v_r = v_r lambda_r
    double residual = 0.0;               // |T V - V diag(lambda)|_2 scale-relative
};

/// Unitary right eigendecomposition T = V diag(lambda) V* of a normal
/// operator, eigenvalues reported in C_m^+ sorted by (alpha, beta).
RightEigenDecomposition right_eigendecompose(const QMatrix& t, const UnitImaginary& m);

}  // namespace quatop

#endif  // QUATOP_QOP_HPP
