#ifndef QUATOP_SPECTRUM_HPP
#define QUATOP_SPECTRUM_HPP

#include <string>
#include <vector>

#include "quatop/slice.hpp"

namespace quatop {

/// One similarity sphere [alpha + S beta] of the spherical spectrum,
/// stored by its unique C_m^+ representative.
struct EigenSphere {
    double alpha = 0.0;
    double beta = 0.0;  // >= 0; a single point when beta == 0
    int multiplicity = 0;
    double residual = 0.0;
};

struct SpectrumReport {
    UnitImaginary axis = UnitImaginary::canonical();
    std::vector<EigenSphere> spheres;  // sorted lexicographically by (alpha, beta)
    bool input_normal = true;
};

/// Spherical spectrum via the complex embedding: the 2n eigenvalues fold
/// onto C_m^+ in conjugate pairs; clustered representatives carry half
/// the folded count as quaternionic multiplicity.
SpectrumReport spherical_spectrum(const QMatrix& t, const UnitImaginary& m,
                                  double cluster_tol = 1e-8);
SpectrumReport spherical_spectrum(const QMatrix& t);

/// Grid points where Delta_q(T) is singular (smallest singular value of
/// the embedding below 1e-8 * max(1, |Delta_q|)).
std::vector<SlicePoint> delta_q_oracle(const QMatrix& t, const std::vector<SlicePoint>& grid);

bool delta_q_singular(const QMatrix& t, const SlicePoint& p);

/// Omega_K as a finite list of (alpha, beta >= 0) representatives.
struct Circularization {
    std::vector<SlicePoint> points;
    double tol = 1e-8;
};

Circularization circularize(const std::vector<SlicePoint>& k, double tol = 1e-8);

/// true iff standard_rep(q) lies within tol of a representative of Omega.
bool sphere_membership(const Quaternion& q, const Circularization& omega);

struct SpectrumRelationReport {
    bool ok = true;
    std::vector<std::string> unmatched;  // offending points, both directions
};

/// Checks sigma_S(T) = Omega_{sigma(T+)}: the complex spectrum of the
/// restriction must match the spherical-spectrum representatives within tol.
SpectrumRelationReport slice_spectrum_relation(const QMatrix& t, const SliceStructure& s,
                                               double tol = 1e-8);

}  // namespace quatop

#endif  // QUATOP_SPECTRUM_HPP
