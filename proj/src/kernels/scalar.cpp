// Scalar reference kernels. Association order is the contract: the SIMD
// variants must reproduce these sums term for term.

#include "quatop/kernels.hpp"

namespace quatop::kernels {
namespace {

inline void mul1(const double* p, const double* q, double* r) {
    const double pw = p[0], px = p[1], py = p[2], pz = p[3];
    const double qw = q[0], qx = q[1], qy = q[2], qz = q[3];
    r[0] = ((pw * qw - px * qx) - py * qy) - pz * qz;
    r[1] = ((pw * qx + px * qw) + py * qz) - pz * qy;
    r[2] = ((pw * qy - px * qz) + py * qw) + pz * qx;
    r[3] = ((pw * qz + px * qy) - py * qx) + pz * qw;
}

void qmul(const double* a, const double* b, double* c, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) mul1(a + 4 * i, b + 4 * i, c + 4 * i);
}

void qdot_conj(const double* a, const double* b, std::size_t n, double out[4]) {
    double acc[4] = {0, 0, 0, 0};
    for (std::size_t i = 0; i < n; ++i) {
        const double ca[4] = {a[4 * i], -a[4 * i + 1], -a[4 * i + 2], -a[4 * i + 3]};
        double t[4];
        mul1(ca, b + 4 * i, t);
        acc[0] += t[0];
        acc[1] += t[1];
        acc[2] += t[2];
        acc[3] += t[3];
    }
    for (int j = 0; j < 4; ++j) out[j] = acc[j];
}

void qdot(const double* a, const double* b, std::size_t n, double out[4]) {
    double acc[4] = {0, 0, 0, 0};
    for (std::size_t i = 0; i < n; ++i) {
        double t[4];
        mul1(a + 4 * i, b + 4 * i, t);
        acc[0] += t[0];
        acc[1] += t[1];
        acc[2] += t[2];
        acc[3] += t[3];
    }
    for (int j = 0; j < 4; ++j) out[j] = acc[j];
}

void qscale_acc_left(const double s[4], const double* b, double* c, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        double t[4];
        mul1(s, b + 4 * i, t);
        c[4 * i] += t[0];
        c[4 * i + 1] += t[1];
        c[4 * i + 2] += t[2];
        c[4 * i + 3] += t[3];
    }
}

void qscale_right(const double* a, const double s[4], double* c, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) mul1(a + 4 * i, s, c + 4 * i);
}

// Four interleaved accumulators combined as (a0+a1)+(a2+a3); this exact
// order is what the vector variants reproduce lane for lane.
double sumsq(const double* a, std::size_t n4) {
    double acc[4] = {0, 0, 0, 0};
    std::size_t i = 0;
    for (; i + 4 <= n4; i += 4) {
        acc[0] += a[i] * a[i];
        acc[1] += a[i + 1] * a[i + 1];
        acc[2] += a[i + 2] * a[i + 2];
        acc[3] += a[i + 3] * a[i + 3];
    }
    for (std::size_t j = 0; i + j < n4; ++j) acc[j] += a[i + j] * a[i + j];
    return (acc[0] + acc[1]) + (acc[2] + acc[3]);
}

}  // namespace

const Ops& scalar_ops() {
    static const Ops ops{"scalar", qmul, qdot_conj, qdot, qscale_acc_left, qscale_right, sumsq};
    return ops;
}

}  // namespace quatop::kernels
