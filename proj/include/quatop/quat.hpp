#ifndef QUATOP_QUAT_HPP
#define QUATOP_QUAT_HPP

#include <cmath>
#include <stdexcept>
#include <string>

namespace quatop {

// Absolute tolerance scaled by max(1, magnitudes) for scalar comparisons.
constexpr double kScalarTol = 1e-12;

/// A real quaternion q = w + x*i + y*j + z*k.
struct Quaternion {
    double w = 0.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Quaternion() = default;
    constexpr Quaternion(double w_, double x_, double y_, double z_)
        : w(w_), x(x_), y(y_), z(z_) {}
    /// Real quaternion.
    constexpr explicit Quaternion(double real) : w(real) {}

    static constexpr Quaternion zero() { return {}; }
    static constexpr Quaternion one() { return Quaternion{1.0, 0.0, 0.0, 0.0}; }
    static constexpr Quaternion i() { return Quaternion{0.0, 1.0, 0.0, 0.0}; }
    static constexpr Quaternion j() { return Quaternion{0.0, 0.0, 1.0, 0.0}; }
    static constexpr Quaternion k() { return Quaternion{0.0, 0.0, 0.0, 1.0}; }

    constexpr Quaternion operator+(const Quaternion& o) const {
        return {w + o.w, x + o.x, y + o.y, z + o.z};
    }
    constexpr Quaternion operator-(const Quaternion& o) const {
        return {w - o.w, x - o.x, y - o.y, z - o.z};
    }
    constexpr Quaternion operator-() const { return {-w, -x, -y, -z}; }

    /// Hamilton product (non-commutative).
    constexpr Quaternion operator*(const Quaternion& o) const {
        return {w * o.w - x * o.x - y * o.y - z * o.z,
                w * o.x + x * o.w + y * o.z - z * o.y,
                w * o.y - x * o.z + y * o.w + z * o.x,
                w * o.z + x * o.y - y * o.x + z * o.w};
    }
    constexpr Quaternion operator*(double s) const { return {w * s, x * s, y * s, z * s}; }
    friend constexpr Quaternion operator*(double s, const Quaternion& q) { return q * s; }
    constexpr Quaternion operator/(double s) const { return {w / s, x / s, y / s, z / s}; }

    Quaternion& operator+=(const Quaternion& o) { return *this = *this + o; }
    Quaternion& operator-=(const Quaternion& o) { return *this = *this - o; }
    Quaternion& operator*=(const Quaternion& o) { return *this = *this * o; }

    constexpr bool operator==(const Quaternion& o) const = default;
};

constexpr Quaternion conj(const Quaternion& q) { return {q.w, -q.x, -q.y, -q.z}; }

inline double norm_sq(const Quaternion& q) {
    return q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z;
}

inline double modulus(const Quaternion& q) { return std::sqrt(norm_sq(q)); }

inline double real_part(const Quaternion& q) { return q.w; }

/// Imaginary part as a quaternion with zero real component.
constexpr Quaternion imag_part(const Quaternion& q) { return {0.0, q.x, q.y, q.z}; }

inline double imag_modulus(const Quaternion& q) {
    return std::sqrt(q.x * q.x + q.y * q.y + q.z * q.z);
}

inline Quaternion inverse(const Quaternion& q) {
    const double n2 = norm_sq(q);
    if (n2 == 0.0) throw std::domain_error("quaternion inverse of zero");
    return conj(q) / n2;
}

inline bool approx_eq(const Quaternion& a, const Quaternion& b, double tol = kScalarTol) {
    const double scale = std::max(1.0, std::max(modulus(a), modulus(b)));
    return modulus(a - b) <= tol * scale;
}

/// A point m of the unit imaginary sphere S (m^2 = -1).
class UnitImaginary {
  public:
    /// Normalizes the imaginary vector (x, y, z). Rejects near-zero input.
    UnitImaginary(double x, double y, double z) {
        const double n = std::sqrt(x * x + y * y + z * z);
        if (n < 1e-6) throw std::invalid_argument("unit imaginary axis too close to zero");
        q_ = Quaternion{0.0, x / n, y / n, z / n};
    }

    /// Checks the candidate is imaginary and unit within tolerance, then renormalizes.
    static UnitImaginary from_quaternion(const Quaternion& q, double tol = 1e-9) {
        if (std::abs(q.w) > tol || std::abs(imag_modulus(q) - 1.0) > tol)
            throw std::invalid_argument("not a unit imaginary quaternion");
        return UnitImaginary(q.x, q.y, q.z);
    }

    static UnitImaginary canonical() { return UnitImaginary(1.0, 0.0, 0.0); }

    const Quaternion& as_quaternion() const { return q_; }
    double x() const { return q_.x; }
    double y() const { return q_.y; }
    double z() const { return q_.z; }

    bool operator==(const UnitImaginary& o) const { return q_ == o.q_; }

  private:
    Quaternion q_;
};

/// An orthonormal frame (m, n, mn) of Im(H); turns H into C_m + C_m * n.
struct SliceFrame {
    Quaternion m;   // the slice axis
    Quaternion n;   // a unit imaginary anticommuting with m
    Quaternion mn;  // m * n

    explicit SliceFrame(const UnitImaginary& axis) {
        m = axis.as_quaternion();
        // Pick the seed least aligned with m, then Gram-Schmidt in Im(H).
        Quaternion seed = std::abs(m.x) <= std::abs(m.y)
                              ? (std::abs(m.x) <= std::abs(m.z) ? Quaternion::i() : Quaternion::k())
                              : (std::abs(m.y) <= std::abs(m.z) ? Quaternion::j() : Quaternion::k());
        const double dot = seed.x * m.x + seed.y * m.y + seed.z * m.z;
        Quaternion v = seed - m * dot;
        n = v / imag_modulus(v);
        mn = m * n;
    }
};

/// The value alpha + m*beta of the slice plane C_m.
struct SlicePoint {
    double alpha = 0.0;
    double beta = 0.0;
    UnitImaginary axis = UnitImaginary::canonical();

    SlicePoint() = default;
    SlicePoint(double a, double b, UnitImaginary m) : alpha(a), beta(b), axis(std::move(m)) {}

    Quaternion as_quaternion() const {
        return Quaternion{alpha, 0, 0, 0} + axis.as_quaternion() * beta;
    }
    bool in_upper_half() const { return beta >= 0.0; }
};

/// p ~ q iff p = s^-1 q s for some s != 0; closed form: equal real parts and moduli.
inline bool similar(const Quaternion& p, const Quaternion& q, double tol = kScalarTol) {
    const double scale = std::max(1.0, std::max(modulus(p), modulus(q)));
    return std::abs(p.w - q.w) <= tol * scale &&
           std::abs(modulus(p) - modulus(q)) <= tol * scale;
}

/// The unique member of [q] in the closed upper half plane C_m^+.
inline SlicePoint standard_rep(const Quaternion& q, const UnitImaginary& m) {
    return SlicePoint{q.w, imag_modulus(q), m};
}

inline SlicePoint standard_rep(const Quaternion& q) {
    return standard_rep(q, UnitImaginary::canonical());
}

}  // namespace quatop

#endif  // QUATOP_QUAT_HPP
