#include "quatop/wvnb.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "quatop/errors.hpp"

namespace quatop {

// ---- curves --------------------------------------------------------------

Curve Curve::segment(double a0, double b0, double a1, double b1) {
    Curve c;
    c.kind = Kind::Segment;
    c.p0[0] = a0;
    c.p0[1] = b0;
    c.p1[0] = a1;
    c.p1[1] = b1;
    return c;
}

Curve Curve::circular_arc(double ca, double cb, double r, double t0, double t1) {
    if (r <= 0 || t1 <= t0) throw std::domain_error("invalid circular arc");
    Curve c;
    c.kind = Kind::CircularArc;
    c.center[0] = ca;
    c.center[1] = cb;
    c.radius = r;
    c.angle0 = t0;
    c.angle1 = t1;
    return c;
}

Curve Curve::polyline(std::vector<std::array<double, 2>> vs) {
    if (vs.size() < 2) throw std::domain_error("polyline needs at least two vertices");
    Curve c;
    c.kind = Kind::Polyline;
    c.vertices = std::move(vs);
    return c;
}

double Curve::length() const {
    switch (kind) {
        case Kind::Segment:
            return std::hypot(p1[0] - p0[0], p1[1] - p0[1]);
        case Kind::CircularArc:
            return radius * (angle1 - angle0);
        case Kind::Polyline: {
            double len = 0.0;
            for (std::size_t i = 1; i < vertices.size(); ++i)
                len += std::hypot(vertices[i][0] - vertices[i - 1][0],
                                  vertices[i][1] - vertices[i - 1][1]);
            return len;
        }
    }
    return 0.0;
}

std::array<double, 2> Curve::point_at(double s) const {
    const double len = length();
    s = std::clamp(s, 0.0, len);
    switch (kind) {
        case Kind::Segment: {
            const double t = len > 0 ? s / len : 0.0;
            return {p0[0] + t * (p1[0] - p0[0]), p0[1] + t * (p1[1] - p0[1])};
        }
        case Kind::CircularArc: {
            const double phi = angle0 + s / radius;
            return {center[0] + radius * std::cos(phi), center[1] + radius * std::sin(phi)};
        }
        case Kind::Polyline: {
            double acc = 0.0;
            for (std::size_t i = 1; i < vertices.size(); ++i) {
                const double seg = std::hypot(vertices[i][0] - vertices[i - 1][0],
                                              vertices[i][1] - vertices[i - 1][1]);
                if (s <= acc + seg || i + 1 == vertices.size()) {
                    const double t = seg > 0 ? (s - acc) / seg : 0.0;
                    return {vertices[i - 1][0] + t * (vertices[i][0] - vertices[i - 1][0]),
                            vertices[i - 1][1] + t * (vertices[i][1] - vertices[i - 1][1])};
                }
                acc += seg;
            }
            return vertices.back();
        }
    }
    return {0, 0};
}

namespace {

std::pair<double, double> project_segment(double a0, double b0, double a1, double b1,
                                          double alpha, double beta) {
    const double dx = a1 - a0, dy = b1 - b0;
    const double len2 = dx * dx + dy * dy;
    double t = len2 > 0 ? ((alpha - a0) * dx + (beta - b0) * dy) / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    const double px = a0 + t * dx, py = b0 + t * dy;
    return {t * std::sqrt(len2), std::hypot(alpha - px, beta - py)};
}

}  // namespace

std::pair<double, double> Curve::project(double alpha, double beta) const {
    switch (kind) {
        case Kind::Segment:
            return project_segment(p0[0], p0[1], p1[0], p1[1], alpha, beta);
        case Kind::CircularArc: {
            const double vx = alpha - center[0], vy = beta - center[1];
            const double rho = std::hypot(vx, vy);
            if (rho == 0.0) return {0.0, radius};
            double rel = std::atan2(vy, vx) - angle0;
            const double two_pi = 2.0 * M_PI;
            rel -= two_pi * std::floor(rel / two_pi);  // [0, 2pi)
            const double sweep = angle1 - angle0;
            if (rel <= sweep) return {rel * radius, std::abs(rho - radius)};
            // off the sweep: nearer endpoint
            const auto ep0 = point_at(0.0);
            const auto ep1 = point_at(length());
            const double d0 = std::hypot(alpha - ep0[0], beta - ep0[1]);
            const double d1 = std::hypot(alpha - ep1[0], beta - ep1[1]);
            return d0 <= d1 ? std::make_pair(0.0, d0) : std::make_pair(length(), d1);
        }
        case Kind::Polyline: {
            double best_s = 0.0, best_d = std::numeric_limits<double>::infinity();
            double acc = 0.0;
            for (std::size_t i = 1; i < vertices.size(); ++i) {
                const auto [s, d] =
                    project_segment(vertices[i - 1][0], vertices[i - 1][1], vertices[i][0],
                                    vertices[i][1], alpha, beta);
                if (d < best_d) {
                    best_d = d;
                    best_s = acc + s;
                }
                acc += std::hypot(vertices[i][0] - vertices[i - 1][0],
                                  vertices[i][1] - vertices[i - 1][1]);
            }
            return {best_s, best_d};
        }
    }
    return {0, 0};
}

// ---- nets ----------------------------------------------------------------

double PlanarNet::spacing(int level) const {
    return epsilon * std::pow(2.0, -(level + 1));
}

std::array<double, 2> PlanarNet::snap(double alpha, double beta, int level) const {
    const double h = spacing(level);
    double sb = h * std::round(beta / h);
    if (sb <= 0.0) sb = 0.0;
    return {h * std::round(alpha / h), sb};
}

double CurveNet::spacing(int level) const {
    return epsilon * std::pow(2.0, -(level + 1));
}

std::array<double, 2> CurveNet::snap(double alpha, double beta, int level) const {
    const double h = spacing(level);
    const double s = curve.project(alpha, beta).first;
    const double snapped = std::clamp(h * std::round(s / h), 0.0, curve.length());
    return curve.point_at(snapped);
}

// ---- decompositions ------------------------------------------------------

namespace {

struct SliceDiagonalization {
    SliceStructure s;
    ComplexMatrix w;                         // unitary over C_m
    std::vector<std::complex<double>> eigs;  // w diagonalizes the restriction
};

// find_J -> restrict -> unitary diagonalization of the complex normal
// restriction. Column order is left to the caller.
SliceDiagonalization slice_diagonalize(const QMatrix& n, const UnitImaginary& m) {
    SliceDiagonalization out;
    out.s = find_J(n, m);
    const SliceMatrix np = restrict_to_slice(n, out.s);
    Eigen::ComplexSchur<ComplexMatrix> schur(np.a, true);
    if (schur.info() != Eigen::Success) throw NumericalError("complex Schur failed");
    const double offdiag =
        (schur.matrixT() - ComplexMatrix(schur.matrixT().diagonal().asDiagonal())).norm();
    if (offdiag > 1e-8 * std::max(1.0, np.a.norm()))
        throw NumericalError("restriction not numerically normal; Schur residual " +
                             std::to_string(offdiag));
    out.w = schur.matrixU();
    out.eigs.resize(n.dim());
    for (std::size_t r = 0; r < n.dim(); ++r) out.eigs[r] = schur.matrixT()(r, r);
    return out;
}

// U = plus_basis * W with W read as a C_m quaternion matrix.
QMatrix compose_unitary(const SliceStructure& s, const ComplexMatrix& w) {
    SliceMatrix wm;
    wm.axis = s.m;
    wm.a = w;
    QMatrix wq(s.dim());
    for (std::size_t r = 0; r < s.dim(); ++r)
        for (std::size_t c = 0; c < s.dim(); ++c) wq.at(r, c) = wm.entry(r, c);
    return s.plus_basis * wq;
}

void finish(Decomposition& dec, const QMatrix& n) {
    dec.k = n - dec.u * QMatrix::diagonal(dec.d) * adjoint(dec.u);
    dec.op_norm_k = op_norm(dec.k);
    dec.hs_norm_k = hs_norm(dec.k);
}

}  // namespace

Decomposition decompose_op_norm(const QMatrix& n, double epsilon, const UnitImaginary& m) {
    if (epsilon <= 0) throw std::domain_error("epsilon must be positive");
    SliceDiagonalization sd = slice_diagonalize(n, m);

    std::vector<std::size_t> order(n.dim());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const auto &la = sd.eigs[a], &lb = sd.eigs[b];
        return la.real() != lb.real() ? la.real() < lb.real() : la.imag() < lb.imag();
    });

    const PlanarNet net{epsilon};
    Decomposition dec;
    dec.epsilon = epsilon;
    dec.mode = DecompositionMode::OpNorm;
    dec.axis = m;
    dec.d.reserve(n.dim());
    dec.levels.assign(n.dim(), 0);

    ComplexMatrix w(n.dim(), n.dim());
    const Quaternion mq = m.as_quaternion();
    for (std::size_t c = 0; c < n.dim(); ++c) {
        w.col(c) = sd.w.col(order[c]);
        const auto [sa, sb] = net.snap(sd.eigs[order[c]].real(), sd.eigs[order[c]].imag(), 0);
        dec.d.push_back(Quaternion{sa} + mq * sb);
    }
    dec.u = compose_unitary(sd.s, w);
    finish(dec, n);
    return dec;
}

Decomposition decompose_hs(const QMatrix& n, double epsilon, const Curve& curve,
                           const UnitImaginary& m) {
    if (epsilon <= 0) throw std::domain_error("epsilon must be positive");
    SliceDiagonalization sd = slice_diagonalize(n, m);

    // Precondition: the whole spectrum lies on the curve (within 1e-6).
    std::vector<double> params(n.dim());
    std::ostringstream offenders;
    bool off_curve = false;
    for (std::size_t r = 0; r < n.dim(); ++r) {
        const auto [s, dist] = curve.project(sd.eigs[r].real(), sd.eigs[r].imag());
        params[r] = s;
        if (dist > 1e-6) {
            off_curve = true;
            offenders << " (" << sd.eigs[r].real() << "," << sd.eigs[r].imag() << ")";
        }
    }
    if (off_curve)
        throw PreconditionError("decompose_hs: spectrum off the curve:" + offenders.str());

    std::vector<std::size_t> order(n.dim());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return params[a] < params[b]; });

    const CurveNet net{curve, epsilon};
    Decomposition dec;
    dec.epsilon = epsilon;
    dec.mode = DecompositionMode::Hs;
    dec.axis = m;
    dec.curve = curve;
    dec.d.reserve(n.dim());
    dec.levels.reserve(n.dim());

    ComplexMatrix w(n.dim(), n.dim());
    const Quaternion mq = m.as_quaternion();
    for (std::size_t r = 0; r < n.dim(); ++r) {
        w.col(r) = sd.w.col(order[r]);
        // displacement budget epsilon * 2^-((r+2)/2); arc snap error <= h/2
        const double target = epsilon * std::pow(2.0, -(static_cast<double>(r) + 2.0) / 2.0);
        int level = 0;
        while (net.spacing(level) / 2.0 > target && level < 900) ++level;
        const auto [sa, sb] =
            net.snap(sd.eigs[order[r]].real(), sd.eigs[order[r]].imag(), level);
        dec.d.push_back(Quaternion{sa} + mq * sb);
        dec.levels.push_back(level);
    }
    dec.u = compose_unitary(sd.s, w);
    finish(dec, n);
    return dec;
}

// ---- audit ---------------------------------------------------------------

VerifyReport verify(const QMatrix& n, const Decomposition& dec) {
    VerifyReport rep;
    auto add = [&rep](std::string name, bool pass, std::string detail) {
        rep.entries.push_back({std::move(name), pass, std::move(detail)});
        rep.ok = rep.ok && rep.entries.back().pass;
    };
    const std::size_t dim = n.dim();
    const double n_scale = std::max(1.0, hs_norm(n));

    const double unit_res = hs_norm(adjoint(dec.u) * dec.u - QMatrix::identity(dim));
    add("unitarity", unit_res < 1e-9, "|U*U - I| = " + std::to_string(unit_res));

    const QMatrix recon = dec.u * QMatrix::diagonal(dec.d) * adjoint(dec.u) + dec.k;
    const double recon_res = hs_norm(n - recon);
    add("reconstruction", recon_res < 1e-9 * n_scale,
        "|N - (U diag(d) U* + K)| = " + std::to_string(recon_res));

    const double op_k = op_norm(dec.k);
    const double hs_k = hs_norm(dec.k);
    if (dec.mode == DecompositionMode::OpNorm)
        add("norm_bound", op_k < dec.epsilon,
            "|K| = " + std::to_string(op_k) + " vs epsilon " + std::to_string(dec.epsilon));
    else
        add("norm_bound", hs_k < dec.epsilon,
            "|K|_2 = " + std::to_string(hs_k) + " vs epsilon " + std::to_string(dec.epsilon));

    // D = N - K must be diagonal in basis U.
    const QMatrix g = adjoint(dec.u) * (n - dec.k) * dec.u;
    double off = 0.0;
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c)
            if (r != c) off = std::max(off, modulus(g.at(r, c)));
    add("diagonality", off < 1e-8 * n_scale, "off-diagonal residual " + std::to_string(off));

    // Diagonal entries: C_m^+ values drawn from the declared net.
    const SliceFrame f(dec.axis);
    bool on_net = true, in_plane = true;
    std::string net_detail;
    for (std::size_t r = 0; r < dim; ++r) {
        const Quaternion& q = dec.d[r];
        const double beta = q.x * f.m.x + q.y * f.m.y + q.z * f.m.z;
        const double leak = std::hypot(q.x * f.n.x + q.y * f.n.y + q.z * f.n.z,
                                       q.x * f.mn.x + q.y * f.mn.y + q.z * f.mn.z);
        if (leak > 1e-12 * std::max(1.0, modulus(q)) || beta < 0.0) in_plane = false;

        const int level = dec.levels.empty() ? 0 : dec.levels[r];
        std::array<double, 2> snapped;
        if (dec.mode == DecompositionMode::Hs && dec.curve)
            snapped = CurveNet{*dec.curve, dec.epsilon}.snap(q.w, beta, level);
        else
            snapped = PlanarNet{dec.epsilon}.snap(q.w, beta, level);
        const double gap = std::hypot(snapped[0] - q.w, snapped[1] - beta);
        if (gap > 1e-12 * std::max(1.0, modulus(q))) {
            on_net = false;
            net_detail = "entry " + std::to_string(r) + " off-net by " + std::to_string(gap);
        }
    }
    add("entries_in_upper_slice", in_plane, in_plane ? "" : "entry leaves C_m^+");
    add("entries_on_net", on_net, net_detail);

    return rep;
}

// ---- truncation harness --------------------------------------------------

QMatrix OpDescriptor::section(std::size_t n, const UnitImaginary& m) const {
    const Quaternion mq = m.as_quaternion();
    QMatrix out(n);
    for (std::size_t r = 0; r < n; ++r) {
        switch (diag_kind) {
            case DiagKind::Linear:
                out.at(r, r) = Quaternion{scale * static_cast<double>(r + 1) + offset};
                break;
            case DiagKind::CircleExp: {
                const double theta = M_PI / static_cast<double>(r + 1);
                out.at(r, r) = Quaternion{std::cos(theta)} + mq * std::sin(theta);
                break;
            }
            case DiagKind::Values:
                if (r >= values.size())
                    throw ShapeError("descriptor value list shorter than section size");
                out.at(r, r) = values[r];
                break;
        }
    }
    if (band) {
        for (std::size_t r = 0; r + band->offset < n; ++r) {
            const double w = std::pow(static_cast<double>(r + 1), -band->decay);
            out.at(r, r + band->offset) += band->coeff * w;
            out.at(r + band->offset, r) += conj(band->coeff) * w;
        }
    }
    return out;
}

std::string TruncationTable::to_csv() const {
    std::ostringstream os;
    os << "n,op_norm_K,hs_norm_K,prefix_stable\n";
    os.precision(17);
    for (const TruncationRow& row : rows) {
        os << row.n << "," << row.op_norm_k << "," << row.hs_norm_k << ","
           << (row.prefix_stable ? "true" : "false") << "\n";
    }
    return os.str();
}

TruncationTable truncation_study(const OpDescriptor& desc, const std::vector<std::size_t>& sizes,
                                 double epsilon, DecompositionMode mode,
                                 const std::optional<Curve>& curve, const UnitImaginary& m) {
    if (sizes.empty()) throw std::domain_error("truncation_study: empty size list");
    if (!std::is_sorted(sizes.begin(), sizes.end()))
        throw std::domain_error("truncation_study: sizes must be ascending");
    if (mode == DecompositionMode::Hs && !curve)
        throw std::domain_error("HS mode requires a curve");

    TruncationTable table;
    std::vector<Quaternion> prev_d;
    for (const std::size_t n : sizes) {
        TruncationRow row;
        row.n = n;
        const QMatrix sec = desc.section(n, m);
        if (!classify(sec).normal) {
            row.normal = false;
            table.rows.push_back(row);
            continue;
        }
        const Decomposition dec = mode == DecompositionMode::OpNorm
                                      ? decompose_op_norm(sec, epsilon, m)
                                      : decompose_hs(sec, epsilon, *curve, m);
        row.op_norm_k = dec.op_norm_k;
        row.hs_norm_k = dec.hs_norm_k;
        // The net is input-independent, so the snapped prefix must repeat
        // exactly across growing sections.
        const std::size_t common = std::min(prev_d.size(), dec.d.size());
        for (std::size_t r = 0; r < common; ++r)
            if (!(prev_d[r] == dec.d[r])) row.prefix_stable = false;
        prev_d = dec.d;
        table.rows.push_back(row);
    }
    return table;
}

}  // namespace quatop
