#include "quatop/slice.hpp"

#include <cmath>

#include "quatop/errors.hpp"

namespace quatop {

SliceStructure find_J(const QMatrix& t, const UnitImaginary& m) {
    const OperatorClass cls = classify(t);
    if (!cls.normal) throw PreconditionError("find_J requires a normal operator");
    const RightEigenDecomposition eig = right_eigendecompose(t, m);

    std::vector<Quaternion> md(t.dim(), m.as_quaternion());
    SliceStructure s;
    s.m = m;
    s.plus_basis = eig.unitary;
    s.j = eig.unitary * QMatrix::diagonal(md) * adjoint(eig.unitary);

    const double scale = std::max(1.0, op_norm(t));
    const double comm = hs_norm(s.j * t - t * s.j);
    if (comm > 1e-8 * scale)
        throw NumericalError("find_J commutation residual " + std::to_string(comm));
    return s;
}

SliceStructure find_J(const QMatrix& t) { return find_J(t, UnitImaginary::canonical()); }

double slice_structure_residual(const SliceStructure& s) {
    const std::size_t n = s.dim();
    const QMatrix js = adjoint(s.j);
    double worst = hs_norm(js + s.j);                                   // J* = -J
    worst = std::max(worst, hs_norm(js * s.j - QMatrix::identity(n)));  // J*J = I
    worst = std::max(worst, hs_norm(s.j * s.j + QMatrix::identity(n)));  // J^2 = -I
    const Quaternion mq = s.m.as_quaternion();
    for (std::size_t r = 0; r < n; ++r) {
        const QVector e = s.basis_vector(r);
        worst = std::max(worst, norm(s.j.apply(e) - e * mq));
    }
    return worst;
}

SliceMatrix restrict_to_slice(const QMatrix& t, const SliceStructure& s) {
    if (t.dim() != s.dim()) throw ShapeError("restrict: dimension mismatch");
    const double comm = hs_norm(s.j * t - t * s.j);
    if (comm > 1e-8 * std::max(1.0, op_norm(t)))
        throw PreconditionError("restrict: T does not commute with J (residual " +
                                std::to_string(comm) + ")");

    const SliceFrame f(s.m);
    const QMatrix g = adjoint(s.plus_basis) * t * s.plus_basis;
    SliceMatrix out;
    out.axis = s.m;
    out.a.resize(t.dim(), t.dim());
    double leak = 0.0;
    for (std::size_t r = 0; r < t.dim(); ++r) {
        for (std::size_t c = 0; c < t.dim(); ++c) {
            const Quaternion& q = g.at(r, c);
            const double beta = q.x * f.m.x + q.y * f.m.y + q.z * f.m.z;
            const double gamma = q.x * f.n.x + q.y * f.n.y + q.z * f.n.z;
            const double delta = q.x * f.mn.x + q.y * f.mn.y + q.z * f.mn.z;
            leak = std::max(leak, std::hypot(gamma, delta));
            out.a(r, c) = {q.w, beta};
        }
    }
    if (leak > 1e-9 * std::max(1.0, hs_norm(t)))
        throw NumericalError("restrict: entry leaks outside C_m by " + std::to_string(leak));
    return out;
}

QMatrix extend_from_slice(const SliceMatrix& a, const SliceStructure& s) {
    if (a.dim() != s.dim()) throw ShapeError("extend: dimension mismatch");
    if (!(a.axis == s.m)) throw ShapeError("extend: slice axis mismatch");
    QMatrix aq(a.dim());
    for (std::size_t r = 0; r < a.dim(); ++r)
        for (std::size_t c = 0; c < a.dim(); ++c) aq.at(r, c) = a.entry(r, c);
    return s.plus_basis * aq * adjoint(s.plus_basis);
}

TransferReport transfer_checks(const QMatrix& t, const SliceStructure& s) {
    TransferReport rep;
    const SliceMatrix tp = restrict_to_slice(t, s);

    const double hs_t = hs_norm(t);
    const double hs_tp = tp.a.norm();
    rep.hs_gap = std::abs(hs_t - hs_tp);
    rep.hs_transfer = rep.hs_gap < 1e-9 * std::max(1.0, hs_t);
    if (!rep.hs_transfer)
        rep.failures.push_back("HS norm transfer gap " + std::to_string(rep.hs_gap));

    const bool t_normal = classify(t).normal;
    const ComplexMatrix comm = tp.a * tp.a.adjoint() - tp.a.adjoint() * tp.a;
    const bool tp_normal = comm.norm() < 1e-10 * std::max(1.0, hs_tp * hs_tp);
    rep.normality_transfer = (t_normal == tp_normal);
    if (!rep.normality_transfer) rep.failures.push_back("normality did not transfer");

    // Diagonal transfer: if T is diagonal in the plus basis, T+ must be
    // diagonal with the same C_m^+ entries, and conversely.
    const QMatrix g = adjoint(s.plus_basis) * t * s.plus_basis;
    double off_t = 0.0, off_tp = 0.0;
    for (std::size_t r = 0; r < t.dim(); ++r)
        for (std::size_t c = 0; c < t.dim(); ++c)
            if (r != c) {
                off_t = std::max(off_t, modulus(g.at(r, c)));
                off_tp = std::max(off_tp, std::abs(tp.a(r, c)));
            }
    const double dtol = 1e-9 * std::max(1.0, hs_t);
    rep.diagonal_transfer = (off_t < dtol) == (off_tp < dtol);
    if (!rep.diagonal_transfer) rep.failures.push_back("diagonality did not transfer");

    rep.ok = rep.failures.empty();
    return rep;
}

Basis basis_transfer(const std::vector<QVector>& plus_vectors, const SliceStructure& s) {
    const Quaternion mq = s.m.as_quaternion();
    for (const QVector& e : plus_vectors) {
        const double res = norm(s.j.apply(e) - e * mq);
        if (res > 1e-9)
            throw PreconditionError("basis_transfer: vector not in H_+^{Jm} (residual " +
                                    std::to_string(res) + ")");
    }
    // Same data; the orthonormality check over H runs in the constructor.
    return Basis(plus_vectors);
}

}  // namespace quatop
