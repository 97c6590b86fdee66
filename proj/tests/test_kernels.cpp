#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <random>
#include <vector>

#include "quatop/kernels.hpp"

using namespace quatop::kernels;

namespace {

std::vector<double> rand_packed(std::mt19937_64& rng, std::size_t quats) {
    std::uniform_real_distribution<double> d(-2.0, 2.0);
    std::vector<double> v(4 * quats);
    for (double& x : v) x = d(rng);
    return v;
}

bool bitwise_equal(const double* a, const double* b, std::size_t n) {
    return std::memcmp(a, b, n * sizeof(double)) == 0;
}

}  // namespace

TEST_CASE("scalar is always available and active() picks something") {
    CHECK(std::string(scalar_ops().name) == "scalar");
    CHECK(!available().empty());
    CHECK(active().qmul != nullptr);
}

#if defined(__x86_64__) || defined(_M_X64)

// Every SIMD variant must reproduce the scalar reference bitwise: the
// kernels are compiled without contraction and accumulate in the same
// association order.
TEST_CASE("avx2 kernels agree bitwise with the scalar reference") {
    if (!set_active("avx2")) return;  // host without AVX2
    const Ops& sc = scalar_ops();
    const Ops& vx = avx2_ops();
    std::mt19937_64 rng(99);

    for (const std::size_t n : {1u, 2u, 3u, 7u, 16u, 33u, 256u}) {
        const auto a = rand_packed(rng, n);
        const auto b = rand_packed(rng, n);

        std::vector<double> c1(4 * n), c2(4 * n);
        sc.qmul(a.data(), b.data(), c1.data(), n);
        vx.qmul(a.data(), b.data(), c2.data(), n);
        CHECK(bitwise_equal(c1.data(), c2.data(), 4 * n));

        double d1[4], d2[4];
        sc.qdot_conj(a.data(), b.data(), n, d1);
        vx.qdot_conj(a.data(), b.data(), n, d2);
        CHECK(bitwise_equal(d1, d2, 4));

        sc.qdot(a.data(), b.data(), n, d1);
        vx.qdot(a.data(), b.data(), n, d2);
        CHECK(bitwise_equal(d1, d2, 4));

        const double s[4] = {0.3, -1.2, 0.7, 2.1};
        std::vector<double> acc1(4 * n, 0.5), acc2(4 * n, 0.5);
        sc.qscale_acc_left(s, b.data(), acc1.data(), n);
        vx.qscale_acc_left(s, b.data(), acc2.data(), n);
        CHECK(bitwise_equal(acc1.data(), acc2.data(), 4 * n));

        sc.qscale_right(a.data(), s, c1.data(), n);
        vx.qscale_right(a.data(), s, c2.data(), n);
        CHECK(bitwise_equal(c1.data(), c2.data(), 4 * n));

        const double s1 = sc.sumsq(a.data(), 4 * n);
        const double s2 = vx.sumsq(a.data(), 4 * n);
        CHECK(s1 == s2);
    }
    set_active("scalar");
}

#endif

TEST_CASE("qdot_conj of a vector with itself is real nonnegative") {
    std::mt19937_64 rng(7);
    const auto a = rand_packed(rng, 17);
    double out[4];
    scalar_ops().qdot_conj(a.data(), a.data(), 17, out);
    CHECK(out[0] >= 0.0);
    CHECK(std::abs(out[1]) < 1e-12);
    CHECK(std::abs(out[2]) < 1e-12);
    CHECK(std::abs(out[3]) < 1e-12);
    CHECK(out[0] == doctest::Approx(scalar_ops().sumsq(a.data(), 4 * 17)));
}

TEST_CASE("set_active round-trips and rejects unknown names") {
    CHECK(set_active("scalar"));
    CHECK(std::string(active().name) == "scalar");
    CHECK_FALSE(set_active("sse9"));
}
