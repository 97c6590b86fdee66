// AVX2 kernels. One quaternion occupies one ymm register [w,x,y,z];
// the Hamilton product is four broadcast-multiply terms summed in the
// same association order as the scalar reference, so the two variants
// agree bitwise (contraction is disabled for kernel sources).

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include "quatop/kernels.hpp"

namespace quatop::kernels {
namespace {

inline __m256d mul1(__m256d p, __m256d q) {
    const __m256d s1 = _mm256_setr_pd(-0.0, 0.0, -0.0, 0.0);
    const __m256d s2 = _mm256_setr_pd(-0.0, 0.0, 0.0, -0.0);
    const __m256d s3 = _mm256_setr_pd(-0.0, -0.0, 0.0, 0.0);
    const __m256d pw = _mm256_permute4x64_pd(p, 0x00);
    const __m256d px = _mm256_permute4x64_pd(p, 0x55);
    const __m256d py = _mm256_permute4x64_pd(p, 0xAA);
    const __m256d pz = _mm256_permute4x64_pd(p, 0xFF);
    const __m256d t0 = _mm256_mul_pd(pw, q);
    const __m256d t1 =
        _mm256_mul_pd(px, _mm256_xor_pd(_mm256_permute4x64_pd(q, 0xB1), s1));
    const __m256d t2 =
        _mm256_mul_pd(py, _mm256_xor_pd(_mm256_permute4x64_pd(q, 0x4E), s2));
    const __m256d t3 =
        _mm256_mul_pd(pz, _mm256_xor_pd(_mm256_permute4x64_pd(q, 0x1B), s3));
    return _mm256_add_pd(_mm256_add_pd(_mm256_add_pd(t0, t1), t2), t3);
}

inline __m256d conj1(__m256d q) {
    return _mm256_xor_pd(q, _mm256_setr_pd(0.0, -0.0, -0.0, -0.0));
}

void qmul(const double* a, const double* b, double* c, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const __m256d r = mul1(_mm256_loadu_pd(a + 4 * i), _mm256_loadu_pd(b + 4 * i));
        _mm256_storeu_pd(c + 4 * i, r);
    }
}

void qdot_conj(const double* a, const double* b, std::size_t n, double out[4]) {
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t i = 0; i < n; ++i) {
        acc = _mm256_add_pd(
            acc, mul1(conj1(_mm256_loadu_pd(a + 4 * i)), _mm256_loadu_pd(b + 4 * i)));
    }
    _mm256_storeu_pd(out, acc);
}

void qdot(const double* a, const double* b, std::size_t n, double out[4]) {
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t i = 0; i < n; ++i) {
        acc = _mm256_add_pd(
            acc, mul1(_mm256_loadu_pd(a + 4 * i), _mm256_loadu_pd(b + 4 * i)));
    }
    _mm256_storeu_pd(out, acc);
}

void qscale_acc_left(const double s[4], const double* b, double* c, std::size_t n) {
    const __m256d sv = _mm256_loadu_pd(s);
    for (std::size_t i = 0; i < n; ++i) {
        const __m256d r = mul1(sv, _mm256_loadu_pd(b + 4 * i));
        _mm256_storeu_pd(c + 4 * i, _mm256_add_pd(_mm256_loadu_pd(c + 4 * i), r));
    }
}

void qscale_right(const double* a, const double s[4], double* c, std::size_t n) {
    const __m256d sv = _mm256_loadu_pd(s);
    for (std::size_t i = 0; i < n; ++i) {
        _mm256_storeu_pd(c + 4 * i, mul1(_mm256_loadu_pd(a + 4 * i), sv));
    }
}

double sumsq(const double* a, std::size_t n4) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n4; i += 4) {
        const __m256d v = _mm256_loadu_pd(a + i);
        acc = _mm256_add_pd(acc, _mm256_mul_pd(v, v));
    }
    double lanes[4];
    _mm256_storeu_pd(lanes, acc);
    for (std::size_t j = 0; i + j < n4; ++j) lanes[j] += a[i + j] * a[i + j];
    return (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
}

}  // namespace

const Ops& avx2_ops() {
    static const Ops ops{"avx2", qmul, qdot_conj, qdot, qscale_acc_left, qscale_right, sumsq};
    return ops;
}

}  // namespace quatop::kernels

#endif  // x86_64
