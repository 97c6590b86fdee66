#ifndef QUATOP_SLICE_HPP
#define QUATOP_SLICE_HPP

#include <string>
#include <vector>

#include "quatop/qop.hpp"

namespace quatop {

/// An anti-self-adjoint unitary J together with an orthonormal H-basis
/// {e_r} of H_+^{Jm} (J e_r = e_r m), stored as the columns of a
/// quaternionic unitary.
struct SliceStructure {
    QMatrix j;
    UnitImaginary m = UnitImaginary::canonical();
    QMatrix plus_basis;  // columns e_r

    QVector basis_vector(std::size_t r) const { return plus_basis.column(r); }
    std::size_t dim() const { return j.dim(); }
};

/// An n x n matrix over the slice plane C_m: the matrix of T restricted
/// to H_+^{Jm} in the plus basis.
struct SliceMatrix {
    UnitImaginary axis = UnitImaginary::canonical();
    ComplexMatrix a;  // entry (alpha + i beta) stands for alpha + m beta

    std::size_t dim() const { return static_cast<std::size_t>(a.rows()); }
    /// Entry as a quaternion in C_m.
    Quaternion entry(std::size_t r, std::size_t s) const {
        return Quaternion{a(r, s).real()} + axis.as_quaternion() * a(r, s).imag();
    }
};

/// Constructs an anti-self-adjoint unitary commuting with the normal
/// operator t, J = V diag(m) V* from the right eigendecomposition;
/// plus_basis = eigenvector columns. J is not unique; consumers rely
/// only on the invariant contract.
SliceStructure find_J(const QMatrix& t, const UnitImaginary& m);
SliceStructure find_J(const QMatrix& t);

/// Largest residual over the three J invariants plus the basis relation
/// J e_r = e_r m; used by tests and the audit path.
double slice_structure_residual(const SliceStructure& s);

/// (T+)_{sr} = <e_s, T e_r>, asserted to lie in C_m. Requires JT = TJ
/// within 1e-8 * max(1, |T|).
SliceMatrix restrict_to_slice(const QMatrix& t, const SliceStructure& s);

/// The unique right H-linear extension: T~ e_r = sum_s e_s A_{sr}.
QMatrix extend_from_slice(const SliceMatrix& a, const SliceStructure& s);

struct TransferReport {
    bool ok = true;
    double hs_gap = 0.0;           // | |T|_2 - |T+|_2 |
    bool hs_transfer = false;      // hs norms agree within 1e-9
    bool normality_transfer = false;
    bool diagonal_transfer = true; // only meaningful for diagonal input
    std::vector<std::string> failures;
};

/// Checks the compact/HS/diagonal transfer contracts between T and T+.
TransferReport transfer_checks(const QMatrix& t, const SliceStructure& s);

/// The theorem says the slice basis IS an H-basis of H^n; verifies the
/// membership condition |J e - e m| < 1e-9 and returns the same vectors
/// as a Basis over H^n.
Basis basis_transfer(const std::vector<QVector>& plus_vectors, const SliceStructure& s);

}  // namespace quatop

#endif  // QUATOP_SLICE_HPP
