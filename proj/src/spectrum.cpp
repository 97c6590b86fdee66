#include "quatop/spectrum.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <sstream>

#include "quatop/errors.hpp"

namespace quatop {

SpectrumReport spherical_spectrum(const QMatrix& t, const UnitImaginary& m,
                                  double cluster_tol) {
    const std::size_t n = t.dim();
    if (n == 0) throw ShapeError("empty matrix");
    SpectrumReport rep;
    rep.axis = m;
    rep.input_normal = classify(t).normal;

    const ComplexMatrix mtx = embed(t, m);
    Eigen::ComplexEigenSolver<ComplexMatrix> es(mtx, true);
    if (es.info() != Eigen::Success) throw NumericalError("complex eigensolver failed");

    // Fold the 2n eigenvalues onto the closed upper half plane; each sphere
    // appears with twice its quaternionic multiplicity.
    struct Folded {
        double alpha, beta, residual;
    };
    std::vector<Folded> pts;
    pts.reserve(2 * n);
    for (std::size_t i = 0; i < 2 * n; ++i) {
        const std::complex<double> lam = es.eigenvalues()(i);
        ComplexVector v = es.eigenvectors().col(i);
        const double res = (mtx * v - lam * v).norm() / std::max(1.0, std::abs(lam));
        pts.push_back({lam.real(), std::abs(lam.imag()), res});
    }
    std::sort(pts.begin(), pts.end(), [](const Folded& a, const Folded& b) {
        return a.alpha != b.alpha ? a.alpha < b.alpha : a.beta < b.beta;
    });

    for (std::size_t i = 0; i < pts.size();) {
        std::size_t j = i + 1;
        double alpha = pts[i].alpha, beta = pts[i].beta, res = pts[i].residual;
        while (j < pts.size() && std::abs(pts[j].alpha - pts[i].alpha) < cluster_tol &&
               std::abs(pts[j].beta - pts[i].beta) < cluster_tol) {
            alpha += pts[j].alpha;
            beta += pts[j].beta;
            res = std::max(res, pts[j].residual);
            ++j;
        }
        const int count = static_cast<int>(j - i);
        EigenSphere sph;
        sph.alpha = alpha / count;
        sph.beta = std::max(0.0, beta / count);
        sph.multiplicity = (count + 1) / 2;  // folded pairs
        sph.residual = res;
        rep.spheres.push_back(sph);
        i = j;
    }
    return rep;
}

SpectrumReport spherical_spectrum(const QMatrix& t) {
    return spherical_spectrum(t, UnitImaginary::canonical());
}

bool delta_q_singular(const QMatrix& t, const SlicePoint& p) {
    const QMatrix d = delta_q(t, p.as_quaternion());
    const ComplexMatrix m = embed(d, p.axis);
    Eigen::BDCSVD<ComplexMatrix> svd(m);
    const auto& sv = svd.singularValues();
    const double smax = sv(0);
    const double smin = sv(sv.size() - 1);
    return smin < 1e-8 * std::max(1.0, smax);
}

std::vector<SlicePoint> delta_q_oracle(const QMatrix& t, const std::vector<SlicePoint>& grid) {
    std::vector<SlicePoint> flagged;
    for (const SlicePoint& p : grid) {
        if (p.beta < 0) throw PreconditionError("delta_q_oracle grid point below C_m^+");
        if (delta_q_singular(t, p)) flagged.push_back(p);
    }
    return flagged;
}

Circularization circularize(const std::vector<SlicePoint>& k, double tol) {
    Circularization omega;
    omega.tol = tol;
    omega.points.reserve(k.size());
    for (const SlicePoint& p : k)
        omega.points.emplace_back(p.alpha, std::abs(p.beta), p.axis);
    return omega;
}

bool sphere_membership(const Quaternion& q, const Circularization& omega) {
    const double alpha = q.w;
    const double beta = imag_modulus(q);
    for (const SlicePoint& p : omega.points)
        if (std::hypot(alpha - p.alpha, beta - p.beta) <= omega.tol) return true;
    return false;
}

SpectrumRelationReport slice_spectrum_relation(const QMatrix& t, const SliceStructure& s,
                                               double tol) {
    SpectrumRelationReport rep;
    const SliceMatrix tp = restrict_to_slice(t, s);
    Eigen::ComplexEigenSolver<ComplexMatrix> es(tp.a, false);
    if (es.info() != Eigen::Success) throw NumericalError("complex eigensolver failed");

    std::vector<std::pair<double, double>> slice_eigs;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
        slice_eigs.emplace_back(es.eigenvalues()(i).real(), es.eigenvalues()(i).imag());

    const SpectrumReport sph = spherical_spectrum(t, s.m);
    std::vector<std::pair<double, double>> reps;
    for (const EigenSphere& e : sph.spheres)
        for (int c = 0; c < e.multiplicity; ++c) reps.emplace_back(e.alpha, e.beta);

    // Greedy one-to-one matching within tol, both directions.
    std::vector<bool> used(reps.size(), false);
    for (const auto& [a, b] : slice_eigs) {
        bool matched = false;
        for (std::size_t i = 0; i < reps.size(); ++i) {
            if (!used[i] && std::hypot(a - reps[i].first, b - reps[i].second) <= tol) {
                used[i] = true;
                matched = true;
                break;
            }
        }
        if (!matched) {
            std::ostringstream os;
            os << "sigma(T+) point (" << a << ", " << b << ") has no spherical match";
            rep.unmatched.push_back(os.str());
        }
    }
    for (std::size_t i = 0; i < reps.size(); ++i) {
        if (!used[i]) {
            std::ostringstream os;
            os << "spherical representative (" << reps[i].first << ", " << reps[i].second
               << ") not found in sigma(T+)";
            rep.unmatched.push_back(os.str());
        }
    }
    rep.ok = rep.unmatched.empty();
    return rep;
}

}  // namespace quatop
