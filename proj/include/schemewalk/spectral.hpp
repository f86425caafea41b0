#pragma once

// Idempotent basis of a commutative Bose-Mesner algebra: primitive
// idempotents, eigenmatrices P and Q, and Krein parameters.

#include "schemewalk/core.hpp"
#include "schemewalk/scheme.hpp"
#include "schemewalk/tensor.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace schemewalk {

inline constexpr std::uint64_t default_separation_seed = 0xA55C;

struct SpectralOptions {
    std::uint64_t seed = default_separation_seed;
    int max_attempts = 5;
    double cluster_tol = 1e-8;
    double check_tol = 1e-8;
};

/// Seed from SCHEMEWALK_SEED when set (decimal or 0x-prefixed hex).
inline std::uint64_t separation_seed_from_env()
{
    if (const char* s = std::getenv("SCHEMEWALK_SEED")) {
        char* end = nullptr;
        const auto v = std::strtoull(s, &end, 0);
        if (end != s && *end == '\0') {
            return v;
        }
        throw InputError(std::string("SCHEMEWALK_SEED is not an integer: ") + s);
    }
    return default_separation_seed;
}

struct BoseMesnerSpectral {
    int vertex_count = 0;
    std::vector<RealMatrix> idempotents; // E_0 .. E_d
    std::vector<int> multiplicities;     // rank of each E_i
    RealMatrix eigenmatrix_P;            // A_j = sum_i P(i, j) E_i
    RealMatrix dual_eigenmatrix_Q;       // E_j = (1/|X|) sum_i Q(i, j) A_i
    std::uint64_t seed_used = 0;
    int attempts = 0;

    int rank() const { return static_cast<int>(idempotents.size()); }
};

namespace detail {

struct Cluster {
    RealMatrix basis; // orthonormal columns
    std::vector<double> eigenvalues; // eigenvalue of each A_j on this cluster
};

/// Groups the sorted spectrum of a symmetric matrix into eigenspaces.
inline std::vector<Cluster> cluster_eigenspaces(const RealMatrix& m, double tol)
{
    Eigen::SelfAdjointEigenSolver<RealMatrix> solver(m);
    if (solver.info() != Eigen::Success) {
        throw Error("symmetric eigensolver did not converge");
    }
    const auto& values = solver.eigenvalues();
    const auto& vectors = solver.eigenvectors();
    const double scale = std::max(1.0, values.cwiseAbs().maxCoeff());
    std::vector<Cluster> clusters;
    Eigen::Index start = 0;
    for (Eigen::Index i = 1; i <= values.size(); ++i) {
        if (i == values.size() || values(i) - values(i - 1) > tol * scale) {
            clusters.push_back({vectors.middleCols(start, i - start), {}});
            start = i;
        }
    }
    return clusters;
}

} // namespace detail

/// Simultaneously diagonalizes the classes through a generic combination
/// M = sum_j c_j A_j with seeded pseudo-random coefficients. A draw that
/// merges two common eigenspaces is detected (some A_j fails to act as a
/// scalar on a cluster) and retried with the next seed.
inline BoseMesnerSpectral primitive_idempotents(const AssociationScheme& scheme, SpectralOptions opts = {})
{
    if (!scheme.commutative()) {
        throw InputError("primitive idempotents need a commutative scheme");
    }
    if (!scheme.symmetric()) {
        throw InputError("primitive idempotents are implemented for symmetric schemes only "
                         "(non-symmetric classes have complex idempotents)");
    }
    const int n = scheme.vertex_count();
    const int r = scheme.rank();
    std::vector<RealMatrix> a;
    for (const auto& c : scheme.classes()) {
        a.push_back(c.cast<double>());
    }

    for (int attempt = 0; attempt < opts.max_attempts; ++attempt) {
        std::mt19937_64 rng(opts.seed + static_cast<std::uint64_t>(attempt));
        std::uniform_real_distribution<double> coef(0.5, 1.5);
        RealMatrix m = RealMatrix::Zero(n, n);
        for (int j = 1; j < r; ++j) {
            m += coef(rng) * a[j];
        }
        auto clusters = detail::cluster_eigenspaces(m, opts.cluster_tol);
        if (static_cast<int>(clusters.size()) > r) {
            throw Error("found " + std::to_string(clusters.size()) + " eigenspaces for " + std::to_string(r) +
                        " classes; clustering tolerance too tight");
        }
        bool separated = static_cast<int>(clusters.size()) == r;
        for (auto& cl : clusters) {
            if (!separated) {
                break;
            }
            const double dim = static_cast<double>(cl.basis.cols());
            for (int j = 0; j < r; ++j) {
                const RealMatrix av = a[j] * cl.basis;
                const double theta = (cl.basis.transpose() * av).trace() / dim;
                if ((av - theta * cl.basis).norm() > opts.check_tol * std::max(1.0, std::abs(theta)) * std::sqrt(dim)) {
                    separated = false;
                    break;
                }
                cl.eigenvalues.push_back(theta);
            }
        }
        if (!separated) {
            continue;
        }

        // E_0 is the cluster carrying the all-ones vector (eigenvalue k_j on A_j);
        // the rest descend lexicographically by eigenvalue of A_1, A_2, ...
        const RealVector ones = RealVector::Ones(n) / std::sqrt(static_cast<double>(n));
        auto trivial = std::max_element(clusters.begin(), clusters.end(), [&](const auto& x, const auto& y) {
            return (x.basis.transpose() * ones).norm() < (y.basis.transpose() * ones).norm();
        });
        std::iter_swap(clusters.begin(), trivial);
        std::sort(clusters.begin() + 1, clusters.end(), [&](const auto& x, const auto& y) {
            for (int j = 1; j < r; ++j) {
                if (std::abs(x.eigenvalues[j] - y.eigenvalues[j]) > 1e-6) {
                    return x.eigenvalues[j] > y.eigenvalues[j];
                }
            }
            return false;
        });

        BoseMesnerSpectral out;
        out.vertex_count = n;
        out.seed_used = opts.seed + static_cast<std::uint64_t>(attempt);
        out.attempts = attempt + 1;
        out.eigenmatrix_P = RealMatrix::Zero(r, r);
        for (int i = 0; i < r; ++i) {
            out.idempotents.push_back(clusters[i].basis * clusters[i].basis.transpose());
            out.multiplicities.push_back(static_cast<int>(clusters[i].basis.cols()));
            for (int j = 0; j < r; ++j) {
                out.eigenmatrix_P(i, j) = clusters[i].eigenvalues[j];
            }
        }
        // Q read independently off the entries of E_j: on class i the entry is Q(i, j)/|X|.
        out.dual_eigenmatrix_Q = RealMatrix::Zero(r, r);
        for (int i = 0; i < r; ++i) {
            const double k_i = static_cast<double>(scheme.valencies()[i]);
            for (int j = 0; j < r; ++j) {
                out.dual_eigenmatrix_Q(i, j) = out.idempotents[j].cwiseProduct(a[i]).sum() / k_i;
            }
        }
        const double pq = (out.eigenmatrix_P * out.dual_eigenmatrix_Q - n * RealMatrix::Identity(r, r)).cwiseAbs().maxCoeff();
        if (pq > opts.check_tol * n) {
            throw Error("eigenmatrices fail P*Q = |X| I (max deviation " + std::to_string(pq) + ")");
        }
        return out;
    }
    throw Error("could not separate the common eigenspaces after " + std::to_string(opts.max_attempts) +
                " seeded combinations");
}

struct KreinTensor {
    Tensor3<double> q;            // q(k, i, j)
    Tensor3<double> rounded;      // nearest integer of each entry
    Tensor3<std::uint8_t> integral; // 1 where |q - round(q)| <= integral_tol
    double integral_tol = 1e-6;

    int rank() const { return q.extent(); }
    bool all_integral() const
    {
        return std::all_of(integral.data().begin(), integral.data().end(), [](auto f) { return f != 0; });
    }
    double min_entry() const { return *std::min_element(q.data().begin(), q.data().end()); }
};

/// Companion rounded/integral views of a real structure-constant tensor.
inline KreinTensor make_krein_view(Tensor3<double> q, double integral_tol)
{
    KreinTensor out;
    const int r = q.extent();
    out.rounded = Tensor3<double>(r);
    out.integral = Tensor3<std::uint8_t>(r);
    out.integral_tol = integral_tol;
    for (int k = 0; k < r; ++k) {
        for (int i = 0; i < r; ++i) {
            for (int j = 0; j < r; ++j) {
                const double v = q(k, i, j);
                out.rounded(k, i, j) = std::round(v);
                out.integral(k, i, j) = std::abs(v - std::round(v)) <= integral_tol ? 1 : 0;
            }
        }
    }
    out.q = std::move(q);
    return out;
}

/// q[k][i][j] = |X| tr((E_i ∘ E_j) E_k) / m_k. Entries are raw (no snapping).
inline KreinTensor krein_parameters(const BoseMesnerSpectral& spectral, double integral_tol = 1e-6)
{
    const int r = spectral.rank();
    const double n = spectral.vertex_count;
    Tensor3<double> q(r);
    for (int k = 0; k < r; ++k) {
        if (spectral.multiplicities[k] <= 0) {
            throw InputError("idempotent E_" + std::to_string(k) + " has zero rank");
        }
    }
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < r; ++j) {
            const RealMatrix schur = spectral.idempotents[i].cwiseProduct(spectral.idempotents[j]);
            for (int k = 0; k < r; ++k) {
                // tr(S E_k) = sum_xy S_xy (E_k)_yx and E_k is symmetric
                q(k, i, j) = n * schur.cwiseProduct(spectral.idempotents[k]).sum() / spectral.multiplicities[k];
            }
        }
    }
    return make_krein_view(std::move(q), integral_tol);
}

} // namespace schemewalk
