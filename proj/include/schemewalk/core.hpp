#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace schemewalk {

using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;
using Complex = std::complex<double>;

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or out-of-range input: bad parameters, bad files, cap exceeded.
class InputError : public Error {
public:
    using Error::Error;
};

/// An object failed the algebraic axioms it was supposed to satisfy.
class VerificationError : public Error {
public:
    using Error::Error;
};

/// A structural precondition of a construction does not hold
/// (e.g. the adjacency matrix does not act tridiagonally on strata).
class StructureError : public Error {
public:
    using Error::Error;
};

struct Tolerances {
    double cluster = 1e-8;      // eigenvalue clustering
    double algebra = 1e-8;      // idempotent identities, P*Q
    double integral = 1e-6;     // integrality flags
    double verlinde = 1e-9;
    double tridiagonal = 1e-10;
    double unit_norm = 1e-12;
};

inline constexpr std::size_t default_vertex_cap = 10'000;

inline std::int64_t binomial(int n, int k)
{
    if (k < 0 || k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        // exact: r * (n - k + i) is divisible by i
        if (r > INT64_MAX / (n - k + i)) {
            return -1;
        }
        r = r * (n - k + i) / i;
    }
    return r;
}

/// Gaussian binomial [n choose k]_q, or -1 on overflow.
inline std::int64_t gaussian_binomial(int q, int n, int k)
{
    if (k < 0 || k > n) {
        return 0;
    }
    // prod_{i=0}^{k-1} (q^{n-i} - 1) / (q^{i+1} - 1), built incrementally so every step is exact
    __int128 r = 1;
    for (int i = 0; i < k; ++i) {
        __int128 num = 1;
        __int128 den = 1;
        for (int t = 0; t < n - i; ++t) {
            num *= q;
        }
        for (int t = 0; t < i + 1; ++t) {
            den *= q;
        }
        r = r * (num - 1) / (den - 1);
        if (r > INT64_MAX) {
            return -1;
        }
    }
    return static_cast<std::int64_t>(r);
}

} // namespace schemewalk
