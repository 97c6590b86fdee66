#ifndef QUATOP_KERNELS_HPP
#define QUATOP_KERNELS_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace quatop::kernels {

// Batched quaternion arithmetic on packed [w,x,y,z] double arrays.
// Every variant performs the identical operation in the identical
// association order, so results are reproducible per selected variant
// (kernel translation units are built with contraction disabled).
struct Ops {
    const char* name;
    // c[i] = a[i] * b[i]
    void (*qmul)(const double* a, const double* b, double* c, std::size_t n);
    // out = sum_i conj(a[i]) * b[i], fixed left-to-right order
    void (*qdot_conj)(const double* a, const double* b, std::size_t n, double out[4]);
    // out = sum_i a[i] * b[i]
    void (*qdot)(const double* a, const double* b, std::size_t n, double out[4]);
    // c[i] += s * b[i]  (fixed quaternion on the left; matmul row update)
    void (*qscale_acc_left)(const double s[4], const double* b, double* c, std::size_t n);
    // c[i] = a[i] * s   (fixed quaternion on the right; basis scaling)
    void (*qscale_right)(const double* a, const double s[4], double* c, std::size_t n);
    // sum of squares over n4 raw doubles
    double (*sumsq)(const double* a, std::size_t n4);
};

const Ops& scalar_ops();
#if defined(__x86_64__) || defined(_M_X64)
const Ops& avx2_ops();
#endif

/// The runtime-selected variant (env QUATOP_KERNELS overrides autodetection).
const Ops& active();

/// Force a variant by name ("scalar", "avx2"); returns false if unavailable.
bool set_active(std::string_view name);

std::vector<std::string> available();

}  // namespace quatop::kernels

#endif  // QUATOP_KERNELS_HPP
