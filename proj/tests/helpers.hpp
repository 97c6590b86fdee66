#ifndef QUATOP_TEST_HELPERS_HPP
#define QUATOP_TEST_HELPERS_HPP

#include <random>
#include <vector>

#include "quatop/qop.hpp"
#include "quatop/qspace.hpp"

namespace quatop::testing {

inline std::mt19937_64 make_rng(unsigned seed = 20240911u) { return std::mt19937_64{seed}; }

inline Quaternion rand_quat(std::mt19937_64& rng, double scale = 1.0) {
    std::uniform_real_distribution<double> d(-scale, scale);
    return {d(rng), d(rng), d(rng), d(rng)};
}

inline QVector rand_qvector(std::mt19937_64& rng, std::size_t n, double scale = 1.0) {
    QVector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = rand_quat(rng, scale);
    return v;
}

inline QMatrix rand_qmatrix(std::mt19937_64& rng, std::size_t n, double scale = 1.0) {
    QMatrix m(n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s) m.at(r, s) = rand_quat(rng, scale);
    return m;
}

inline QMatrix rand_unitary(std::mt19937_64& rng, std::size_t n) {
    std::vector<QVector> vs;
    vs.reserve(n);
    for (std::size_t i = 0; i < n; ++i) vs.push_back(rand_qvector(rng, n));
    const Basis b = gram_schmidt(vs);
    QMatrix u(n);
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t r = 0; r < n; ++r) u.at(r, c) = b[c][r];
    return u;
}

/// U diag(q_r) U* for random quaternions q_r: always normal.
inline QMatrix rand_normal(std::mt19937_64& rng, std::size_t n, double scale = 1.0) {
    const QMatrix u = rand_unitary(rng, n);
    std::vector<Quaternion> d(n);
    for (std::size_t r = 0; r < n; ++r) d[r] = rand_quat(rng, scale);
    return u * QMatrix::diagonal(d) * adjoint(u);
}

/// Normal matrix with prescribed right-eigenvalue representatives.
inline QMatrix normal_with_spectrum(std::mt19937_64& rng, const std::vector<Quaternion>& d) {
    const QMatrix u = rand_unitary(rng, d.size());
    return u * QMatrix::diagonal(d) * adjoint(u);
}

}  // namespace quatop::testing

#endif  // QUATOP_TEST_HELPERS_HPP
