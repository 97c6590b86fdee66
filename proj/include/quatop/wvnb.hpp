#ifndef QUATOP_WVNB_HPP
#define QUATOP_WVNB_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "quatop/slice.hpp"

namespace quatop {

/// A finite-length curve in C_m^+ coordinates (alpha, beta), parameterized
/// by arc length from its start.
struct Curve {
    enum class Kind { Segment, CircularArc, Polyline };
    Kind kind = Kind::Segment;
    // segment
    double p0[2] = {0, 0}, p1[2] = {0, 0};
    // circular arc: beta-plane circle swept from angle0 to angle1
    double center[2] = {0, 0};
    double radius = 1.0;
    double angle0 = 0.0, angle1 = 0.0;
    // polyline
    std::vector<std::array<double, 2>> vertices;

    static Curve segment(double a0, double b0, double a1, double b1);
    static Curve circular_arc(double ca, double cb, double r, double t0, double t1);
    static Curve polyline(std::vector<std::array<double, 2>> vs);

    double length() const;
    /// Point at arc length s (clamped to [0, length]).
    std::array<double, 2> point_at(double s) const;
    /// Arc-length parameter of the closest point; second = distance.
    std::pair<double, double> project(double alpha, double beta) const;
};

// The snap nets are input-independent: the same (epsilon, level) always
// yields the same representative family, which is what makes the snapped
// diagonal stable under growing truncations.

/// Planar lattice net over (alpha, beta >= 0): level-l representatives at
/// integer multiples of epsilon * 2^-(l+1), anchored at the origin.
struct PlanarNet {
    double epsilon = 1.0;

    double spacing(int level) const;
    /// Nearest representative; beta is clamped into the upper half plane.
    std::array<double, 2> snap(double alpha, double beta, int level) const;
};

/// Arc-length-uniform net on a curve, anchored at the curve start.
struct CurveNet {
    Curve curve;
    double epsilon = 1.0;

    double spacing(int level) const;
    std::array<double, 2> snap(double alpha, double beta, int level) const;
};

enum class DecompositionMode { OpNorm, Hs };

/// N = U diag(d) U* + K with |K| (or |K|_2) below epsilon and the d_r
/// constrained to an input-independent net.
struct Decomposition {
    QMatrix u;
    std::vector<Quaternion> d;
    QMatrix k;
    double epsilon = 0.0;
    DecompositionMode mode = DecompositionMode::OpNorm;
    UnitImaginary axis = UnitImaginary::canonical();
    std::vector<int> levels;  // net level used per diagonal entry
    std::optional<Curve> curve;
    double op_norm_k = 0.0;
    double hs_norm_k = 0.0;
};

/// Operator-norm split: eigenvalues of the slice restriction snapped to
/// the level-0 planar net, guaranteeing |K| <= epsilon * sqrt(2)/4.
Decomposition decompose_op_norm(const QMatrix& n, double epsilon, const UnitImaginary& m);

/// Hilbert-Schmidt split for spectra on a rectifiable curve: the r-th
/// eigenvalue (ordered by curve parameter) is snapped at a level whose
/// displacement is at most epsilon * 2^-((r+2)/2), so |K|_2 < epsilon.
Decomposition decompose_hs(const QMatrix& n, double epsilon, const Curve& curve,
                           const UnitImaginary& m);

struct VerifyEntry {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyReport {
    bool ok = true;
    std::vector<VerifyEntry> entries;
};

/// Independent audit of every Decomposition invariant, including net
/// membership of the diagonal entries at their declared levels.
VerifyReport verify(const QMatrix& n, const Decomposition& dec);

// ---- truncation harness --------------------------------------------------

/// Defines a diagonal model on l^2(H) plus an optional banded perturbation;
/// finite sections are materialized per size.
struct OpDescriptor {
    enum class DiagKind { Linear, CircleExp, Values };
    DiagKind diag_kind = DiagKind::Linear;
    double scale = 1.0;    // Linear: d_r = scale * r + offset (1-based)
    double offset = 0.0;
    std::vector<Quaternion> values;  // Values: explicit entries

    struct Band {
        std::size_t offset = 1;
        Quaternion coeff;
        double decay = 2.0;  // entry r scales by (r+1)^-decay
    };
    std::optional<Band> band;

    QMatrix section(std::size_t n, const UnitImaginary& m) const;
};

struct TruncationRow {
    std::size_t n = 0;
    bool normal = true;
    double op_norm_k = 0.0;
    double hs_norm_k = 0.0;
    bool prefix_stable = true;
};

struct TruncationTable {
    std::vector<TruncationRow> rows;
    std::string to_csv() const;  // header n,op_norm_K,hs_norm_K,prefix_stable
};

TruncationTable truncation_study(const OpDescriptor& desc, const std::vector<std::size_t>& sizes,
                                 double epsilon, DecompositionMode mode,
                                 const std::optional<Curve>& curve, const UnitImaginary& m);

}  // namespace quatop

#endif  // QUATOP_WVNB_HPP
