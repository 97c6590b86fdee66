#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "quatop/quat.hpp"

using namespace quatop;

namespace {

// Independent 16-term oracle: expand p*q over the multiplication table of
// the basis units instead of the closed-form component formulas.
Quaternion brute_force_mul(const Quaternion& p, const Quaternion& q) {
    // table[a][b] = (sign, component) for unit a * unit b, units 1,i,j,k
    static const int sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    static const int comp[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    const double pc[4] = {p.w, p.x, p.y, p.z};
    const double qc[4] = {q.w, q.x, q.y, q.z};
    double out[4] = {0, 0, 0, 0};
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) out[comp[a][b]] += sign[a][b] * pc[a] * qc[b];
    return {out[0], out[1], out[2], out[3]};
}

}  // namespace

TEST_CASE("unit products follow ijk = -1") {
    CHECK(Quaternion::i() * Quaternion::j() == Quaternion::k());
    CHECK(Quaternion::j() * Quaternion::k() == Quaternion::i());
    CHECK(Quaternion::k() * Quaternion::i() == Quaternion::j());
    CHECK(Quaternion::j() * Quaternion::i() == -Quaternion::k());
    CHECK(Quaternion::i() * Quaternion::i() == -Quaternion::one());
}

TEST_CASE("(1+i)(1+j) = 1 + i + j + k against the brute-force table") {
    const Quaternion p{1, 1, 0, 0}, q{1, 0, 1, 0};
    const Quaternion expect{1, 1, 1, 1};
    CHECK(p * q == expect);
    CHECK(brute_force_mul(p, q) == expect);
}

TEST_CASE("Hamilton product matches the table oracle on random pairs") {
    auto rng = testing::make_rng(1);
    for (int t = 0; t < 500; ++t) {
        const Quaternion p = testing::rand_quat(rng, 5.0);
        const Quaternion q = testing::rand_quat(rng, 5.0);
        CHECK(approx_eq(p * q, brute_force_mul(p, q), 1e-14));
    }
}

TEST_CASE("q conj(q) is real and equals |q|^2") {
    auto rng = testing::make_rng(2);
    for (int t = 0; t < 200; ++t) {
        const Quaternion q = testing::rand_quat(rng, 3.0);
        const Quaternion p = q * conj(q);
        CHECK(std::abs(p.w - norm_sq(q)) <= 1e-12 * std::max(1.0, norm_sq(q)));
        CHECK(imag_modulus(p) <= 1e-12 * std::max(1.0, norm_sq(q)));
    }
}

TEST_CASE("conjugation and modulus basics") {
    CHECK(conj(Quaternion{1, 2, 3, 4}) == Quaternion{1, -2, -3, -4});
    CHECK(modulus(Quaternion{1, 1, 1, 1}) == doctest::Approx(2.0));
    CHECK(conj(conj(Quaternion{0.5, -1, 2, 7})) == Quaternion{0.5, -1, 2, 7});
}

TEST_CASE("multiplicativity and anti-homomorphism of conj") {
    auto rng = testing::make_rng(3);
    for (int t = 0; t < 500; ++t) {
        const Quaternion p = testing::rand_quat(rng, 4.0);
        const Quaternion q = testing::rand_quat(rng, 4.0);
        const double scale = std::max(1.0, modulus(p) * modulus(q));
        CHECK(std::abs(modulus(p * q) - modulus(p) * modulus(q)) <= 1e-12 * scale);
        CHECK(approx_eq(conj(p * q), conj(q) * conj(p), 1e-12));
    }
}

TEST_CASE("inverse") {
    auto rng = testing::make_rng(4);
    for (int t = 0; t < 100; ++t) {
        const Quaternion q = testing::rand_quat(rng, 2.0) + Quaternion{3.0};  // away from 0
        CHECK(approx_eq(q * inverse(q), Quaternion::one(), 1e-12));
        CHECK(approx_eq(inverse(q) * q, Quaternion::one(), 1e-12));
    }
    CHECK_THROWS_AS((void)inverse(Quaternion::zero()), std::domain_error);
}

TEST_CASE("similarity criterion") {
    CHECK(similar(Quaternion::i(), Quaternion::j()));
    CHECK(similar(Quaternion{1, 1, 0, 0}, Quaternion{1, 0, 0, 1}));
    CHECK_FALSE(similar(Quaternion::one(), Quaternion{1, 1, 0, 0}));
}

TEST_CASE("similar agrees with an explicit conjugation witness") {
    auto rng = testing::make_rng(5);
    for (int t = 0; t < 200; ++t) {
        const Quaternion q = testing::rand_quat(rng, 2.0);
        const Quaternion s = testing::rand_quat(rng, 2.0) + Quaternion{1.5};
        CHECK(similar(inverse(s) * q * s, q, 1e-10));
    }
}

TEST_CASE("similar is an equivalence relation on random triples") {
    auto rng = testing::make_rng(6);
    for (int t = 0; t < 200; ++t) {
        const Quaternion a = testing::rand_quat(rng, 2.0);
        // b, c similar to a by construction
        const Quaternion s1 = testing::rand_quat(rng, 1.0) + Quaternion{1.5};
        const Quaternion s2 = testing::rand_quat(rng, 1.0) + Quaternion{1.5};
        const Quaternion b = inverse(s1) * a * s1;
        const Quaternion c = inverse(s2) * a * s2;
        CHECK(similar(a, a));
        CHECK(similar(a, b, 1e-10) == similar(b, a, 1e-10));
        CHECK((similar(a, b, 1e-10) && similar(b, c, 1e-10)) ? similar(a, c, 1e-9) : true);
    }
}

TEST_CASE("standard_rep lands in the upper half slice and is similar to q") {
    const UnitImaginary m = UnitImaginary::canonical();
    SUBCASE("1 + 2j maps to alpha=1, beta=2") {
        const SlicePoint p = standard_rep(Quaternion{1, 0, 2, 0}, m);
        CHECK(p.alpha == doctest::Approx(1.0));
        CHECK(p.beta == doctest::Approx(2.0));
    }
    SUBCASE("real values keep beta = 0") {
        const SlicePoint p = standard_rep(Quaternion{3.0}, m);
        CHECK(p.alpha == doctest::Approx(3.0));
        CHECK(p.beta == 0.0);
    }
    SUBCASE("random") {
        auto rng = testing::make_rng(7);
        for (int t = 0; t < 200; ++t) {
            const Quaternion q = testing::rand_quat(rng, 3.0);
            const SlicePoint p = standard_rep(q, m);
            CHECK(p.in_upper_half());
            CHECK(similar(p.as_quaternion(), q, 1e-12));
            // idempotent
            const SlicePoint p2 = standard_rep(p.as_quaternion(), m);
            CHECK(p2.alpha == doctest::Approx(p.alpha));
            CHECK(p2.beta == doctest::Approx(p.beta));
        }
    }
}

TEST_CASE("unit imaginaries square to -1") {
    auto rng = testing::make_rng(8);
    for (int t = 0; t < 100; ++t) {
        const Quaternion v = testing::rand_quat(rng, 1.0);
        if (imag_modulus(v) < 1e-3) continue;
        const UnitImaginary m(v.x, v.y, v.z);
        const Quaternion sq = m.as_quaternion() * m.as_quaternion();
        CHECK(approx_eq(sq, -Quaternion::one(), 1e-12));
    }
    CHECK_THROWS_AS(UnitImaginary(0, 0, 0), std::invalid_argument);
}

TEST_CASE("distinct slice planes intersect only in the reals") {
    // A quaternion lying in C_m and C_n for m != +-n has no imaginary part.
    auto rng = testing::make_rng(9);
    for (int t = 0; t < 100; ++t) {
        const Quaternion a = testing::rand_quat(rng, 1.0);
        const Quaternion b = testing::rand_quat(rng, 1.0);
        if (imag_modulus(a) < 1e-3 || imag_modulus(b) < 1e-3) continue;
        const UnitImaginary m(a.x, a.y, a.z), n(b.x, b.y, b.z);
        const double cross = std::abs(m.x() * n.x() + m.y() * n.y() + m.z() * n.z());
        if (cross > 1.0 - 1e-6) continue;  // m = +-n up to noise
        // alpha + m beta in C_n forces beta component along n only; solve directly
        const double beta = 1.7;
        const Quaternion q = Quaternion{0.3} + m.as_quaternion() * beta;
        // projection of Im(q) off n must be nonzero unless beta = 0
        const double along = q.x * n.x() + q.y * n.y() + q.z * n.z();
        const Quaternion rest = imag_part(q) - n.as_quaternion() * along;
        CHECK(imag_modulus(rest) > 1e-9);
    }
}

TEST_CASE("slice frame is an orthonormal anticommuting triple") {
    auto rng = testing::make_rng(10);
    for (int t = 0; t < 100; ++t) {
        const Quaternion v = testing::rand_quat(rng, 1.0);
        if (imag_modulus(v) < 1e-3) continue;
        const SliceFrame f{UnitImaginary(v.x, v.y, v.z)};
        CHECK(approx_eq(f.m * f.m, -Quaternion::one(), 1e-12));
        CHECK(approx_eq(f.n * f.n, -Quaternion::one(), 1e-12));
        CHECK(approx_eq(f.mn * f.mn, -Quaternion::one(), 1e-12));
        CHECK(approx_eq(f.m * f.n, -(f.n * f.m), 1e-12));
        CHECK(approx_eq(f.m * f.n, f.mn, 1e-12));
    }
}
