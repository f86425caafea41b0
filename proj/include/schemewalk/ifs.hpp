#pragma once

// Interacting Fock space of a stratified graph: strata vectors, quantum
// decomposition A = B+ + B- + B0, Jacobi sequences and vacuum moments.

#include "schemewalk/core.hpp"
#include "schemewalk/graph.hpp"
#include "schemewalk/scheme.hpp"

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace schemewalk {

/// Partition of (reachable) vertices into levels V_0 = {base}, V_1, ...
struct Stratification {
    int vertex_count = 0;
    int base = 0;
    std::vector<std::vector<int>> strata;
    std::vector<int> level; // per vertex, -1 if in no stratum
    std::vector<int> unreachable;

    int depth() const { return static_cast<int>(strata.size()) - 1; }

    std::vector<std::size_t> sizes() const
    {
        std::vector<std::size_t> out;
        for (const auto& s : strata) {
            out.push_back(s.size());
        }
        return out;
    }

    /// Phi_n = |V_n|^{-1/2} sum_{x in V_n} delta_x.
    RealVector vector(int n) const
    {
        RealVector phi = RealVector::Zero(vertex_count);
        const auto& s = strata.at(n);
        const double w = 1.0 / std::sqrt(static_cast<double>(s.size()));
        for (int x : s) {
            phi(x) = w;
        }
        return phi;
    }
};

namespace detail {

inline Stratification strata_from_levels(int base, std::vector<int> level)
{
    Stratification s;
    s.vertex_count = static_cast<int>(level.size());
    s.base = base;
    for (int x = 0; x < s.vertex_count; ++x) {
        const int l = level[x];
        if (l < 0) {
            s.unreachable.push_back(x);
            continue;
        }
        if (l >= static_cast<int>(s.strata.size())) {
            s.strata.resize(l + 1);
        }
        s.strata[l].push_back(x);
    }
    s.level = std::move(level);
    return s;
}

} // namespace detail

/// Breadth-first strata around `base`. Unreachable vertices are listed and
/// excluded from every stratum.
inline Stratification stratify(const Graph& g, int base)
{
    if (g.vertex_count() == 0) {
        throw InputError("cannot stratify an empty graph");
    }
    if (base < 0 || base >= g.vertex_count()) {
        throw InputError("base vertex " + std::to_string(base) + " out of range");
    }
    return detail::strata_from_levels(base, g.distances_from(base));
}

/// Strata by scheme relation to `base`: V_n = {x : (base, x) in class n}.
inline Stratification stratify_by_relation(const AssociationScheme& scheme, int base)
{
    if (base < 0 || base >= scheme.vertex_count()) {
        throw InputError("base vertex " + std::to_string(base) + " out of range");
    }
    std::vector<int> level(scheme.vertex_count());
    for (int x = 0; x < scheme.vertex_count(); ++x) {
        level[x] = scheme.relation(base, x);
    }
    return detail::strata_from_levels(base, std::move(level));
}

struct QuantumDecomposition {
    IntMatrix raising;  // V_n -> V_{n+1}
    IntMatrix lowering; // V_n -> V_{n-1}
    IntMatrix diagonal; // V_n -> V_n
    IntMatrix residual; // shifts of two or more, or entries touching unstratified vertices
};

/// Sorts each entry A(x, y) by the level shift level(x) - level(y).
inline QuantumDecomposition decompose_by_levels(const IntMatrix& a, const std::vector<int>& level)
{
    const auto n = a.rows();
    if (a.cols() != n || static_cast<Eigen::Index>(level.size()) != n) {
        throw InputError("stratification does not match the matrix size");
    }
    QuantumDecomposition qd{IntMatrix::Zero(n, n), IntMatrix::Zero(n, n), IntMatrix::Zero(n, n), IntMatrix::Zero(n, n)};
    for (Eigen::Index x = 0; x < n; ++x) {
        for (Eigen::Index y = 0; y < n; ++y) {
            const auto v = a(x, y);
            if (v == 0) {
                continue;
            }
            if (level[x] < 0 || level[y] < 0) {
                qd.residual(x, y) = v;
                continue;
            }
            switch (level[x] - level[y]) {
            case 1: qd.raising(x, y) = v; break;
            case -1: qd.lowering(x, y) = v; break;
            case 0: qd.diagonal(x, y) = v; break;
            default: qd.residual(x, y) = v; break;
            }
        }
    }
    return qd;
}

inline QuantumDecomposition quantum_decompose(const Graph& g, const Stratification& strat)
{
    if (strat.vertex_count != g.vertex_count()) {
        throw InputError("stratification has " + std::to_string(strat.vertex_count) + " vertices, graph has " +
                         std::to_string(g.vertex_count()));
    }
    for (std::size_t n = 0; n < strat.strata.size(); ++n) {
        for (int x : strat.strata[n]) {
            if (strat.level.at(x) != static_cast<int>(n)) {
                throw InputError("stratification is inconsistent at vertex " + std::to_string(x));
            }
        }
    }
    return decompose_by_levels(g.adjacency(), strat.level);
}

/// Jacobi data of an interacting Fock space. For a stratified finite graph
/// with strata V_0..V_D, omega = (w_1..w_D) and alpha = (a_1..a_{D+1}), and
/// the chain is closed. An open chain (omega as long as alpha, last omega
/// nonzero) is a truncation of a longer one.
struct JacobiSequences {
    std::vector<double> omega;
    std::vector<double> alpha;

    /// Number of levels reachable from the vacuum before a zero omega stops the chain.
    std::size_t reachable_levels() const
    {
        for (std::size_t m = 1; m < alpha.size(); ++m) {
            if (m - 1 < omega.size() && omega[m - 1] == 0.0) {
                return m;
            }
        }
        return alpha.size();
    }

    bool closed() const
    {
        const auto n = alpha.size();
        return reachable_levels() < n || omega.size() < n || omega[n - 1] == 0.0;
    }

    void validate() const
    {
        bool zero_seen = false;
        for (std::size_t m = 0; m < omega.size(); ++m) {
            if (omega[m] < 0.0) {
                throw InputError("omega_" + std::to_string(m + 1) + " is negative");
            }
            if (zero_seen && omega[m] != 0.0) {
                throw InputError("omega_" + std::to_string(m + 1) + " is nonzero after a zero omega");
            }
            zero_seen = zero_seen || omega[m] == 0.0;
        }
    }

    static JacobiSequences bosonic(int length)
    {
        JacobiSequences j;
        for (int n = 1; n <= length; ++n) {
            j.omega.push_back(n);
            j.alpha.push_back(0.0);
        }
        return j;
    }

    static JacobiSequences fermionic(int length)
    {
        JacobiSequences j;
        for (int n = 1; n <= length; ++n) {
            j.omega.push_back(n == 1 ? 1.0 : 0.0);
            j.alpha.push_back(0.0);
        }
        return j;
    }
};

struct JacobiOptions {
    double tolerance = 1e-10;
    /// Project onto the tridiagonal part instead of failing on leakage.
    bool force_projection = false;
};

struct JacobiResult {
    JacobiSequences sequences;
    std::vector<double> leakage; // ||A Phi_n - projection onto Phi_{n-1}, Phi_n, Phi_{n+1}||
    double max_leakage = 0.0;
    bool tridiagonal = true;
};

/// w_{n+1} = <Phi_{n+1}, A Phi_n>^2 and a_{n+1} = <Phi_n, A Phi_n>, taken
/// from integer edge counts: w_{n+1} = e(V_n, V_{n+1})^2 / (|V_n| |V_{n+1}|)
/// and a_{n+1} = 2 e(V_n) / |V_n|. Throws StructureError naming the first
/// leaking stratum unless force_projection.
inline JacobiResult jacobi_coefficients(const Graph& g, const Stratification& strat, JacobiOptions opts = {})
{
    if (strat.vertex_count != g.vertex_count()) {
        throw InputError("stratification does not belong to this graph");
    }
    const int levels = static_cast<int>(strat.strata.size());
    std::vector<RealVector> phi;
    for (int n = 0; n < levels; ++n) {
        phi.push_back(strat.vector(n));
    }
    auto apply = [&](const RealVector& v) {
        RealVector out = RealVector::Zero(v.size());
        for (int x = 0; x < g.vertex_count(); ++x) {
            for (int y : g.neighbors(x)) {
                out(x) += v(y);
            }
        }
        return out;
    };

    JacobiResult res;
    for (int n = 0; n < levels; ++n) {
        std::int64_t within = 0;
        std::int64_t up = 0;
        for (int x : strat.strata[n]) {
            for (int y : g.neighbors(x)) {
                within += strat.level[y] == n ? 1 : 0;
                up += strat.level[y] == n + 1 ? 1 : 0;
            }
        }
        const double size = static_cast<double>(strat.strata[n].size());
        res.sequences.alpha.push_back(static_cast<double>(within) / size);
        if (n + 1 < levels) {
            const double next = static_cast<double>(strat.strata[n + 1].size());
            res.sequences.omega.push_back(static_cast<double>(up) * static_cast<double>(up) / (size * next));
        }

        const RealVector w = apply(phi[n]);
        RealVector rest = w;
        for (int m = std::max(0, n - 1); m <= std::min(levels - 1, n + 1); ++m) {
            rest -= phi[m].dot(w) * phi[m];
        }
        const double leak = rest.norm();
        res.leakage.push_back(leak);
        res.max_leakage = std::max(res.max_leakage, leak);
        if (leak > opts.tolerance) {
            res.tridiagonal = false;
            if (!opts.force_projection) {
                throw StructureError("adjacency does not act tridiagonally on the strata: stratum " +
                                     std::to_string(n) + " leaks with norm " + std::to_string(leak) +
                                     " (graph is not distance-regular around vertex " + std::to_string(strat.base) +
                                     ")");
            }
        }
    }
    return res;
}

/// Symmetric tridiagonal matrix with diagonal (a_1..a_depth) and
/// off-diagonal (sqrt w_1 .. sqrt w_{depth-1}).
inline RealMatrix tridiagonal_from_jacobi(const JacobiSequences& jac, int depth)
{
    if (depth < 0 || static_cast<std::size_t>(depth) > jac.alpha.size() ||
        (depth > 0 && static_cast<std::size_t>(depth - 1) > jac.omega.size())) {
        throw InputError("depth " + std::to_string(depth) + " exceeds the Jacobi sequence length");
    }
    RealMatrix t = RealMatrix::Zero(depth, depth);
    for (int n = 0; n < depth; ++n) {
        t(n, n) = jac.alpha[n];
        if (n + 1 < depth) {
            if (jac.omega[n] < 0.0) {
                throw InputError("omega_" + std::to_string(n + 1) + " is negative");
            }
            t(n, n + 1) = t(n + 1, n) = std::sqrt(jac.omega[n]);
        }
    }
    return t;
}

struct MomentSequence {
    std::vector<std::int64_t> values; // values[m] = <delta_base, A^m delta_base>
    int requested = 0;
    bool overflowed = false;          // stopped early; values holds the exact prefix
};

/// Closed-walk counts at `base` in exact 64-bit arithmetic, stopping at the
/// last moment that fits.
inline MomentSequence vacuum_moments(const Graph& g, int base, int m_max)
{
    if (m_max < 0) {
        throw InputError("m_max must be nonnegative");
    }
    if (base < 0 || base >= g.vertex_count()) {
        throw InputError("base vertex " + std::to_string(base) + " out of range");
    }
    MomentSequence out;
    out.requested = m_max;
    std::vector<std::int64_t> walk(g.vertex_count(), 0);
    walk[base] = 1;
    out.values.push_back(1);
    for (int m = 1; m <= m_max; ++m) {
        std::vector<std::int64_t> next(g.vertex_count(), 0);
        for (int x = 0; x < g.vertex_count(); ++x) {
            for (int y : g.neighbors(x)) {
                if (__builtin_add_overflow(next[x], walk[y], &next[x])) {
                    out.overflowed = true;
                    return out;
                }
            }
        }
        walk = std::move(next);
        out.values.push_back(walk[base]);
    }
    return out;
}

/// Moment m = (T^m)_{00} of the Jacobi matrix. An open chain must have more
/// than m_max/2 levels, otherwise the truncation would be visible.
inline std::vector<double> moments_from_jacobi(const JacobiSequences& jac, int m_max)
{
    if (m_max < 0) {
        throw InputError("m_max must be nonnegative");
    }
    jac.validate();
    const auto levels = jac.alpha.size();
    if (levels == 0) {
        throw InputError("empty Jacobi sequences");
    }
    if (!jac.closed() && 2 * levels <= static_cast<std::size_t>(m_max)) {
        throw InputError("insufficient depth: " + std::to_string(levels) + " levels cannot fix moment " +
                         std::to_string(m_max));
    }
    const RealMatrix t = tridiagonal_from_jacobi(jac, static_cast<int>(levels));
    RealVector v = RealVector::Zero(static_cast<Eigen::Index>(levels));
    v(0) = 1.0;
    std::vector<double> out{1.0};
    for (int m = 1; m <= m_max; ++m) {
        v = t * v;
        out.push_back(v(0));
    }
    return out;
}

struct ShiftResidual {
    int stratum = 0;
    int shift = 0;
    double norm = 0.0; // Frobenius norm of P_{n+shift} A_j P_n
};

struct ClassCAP {
    int class_index = 0;
    IntMatrix raising;    // sum_n P_{n+1} A_j P_n
    IntMatrix lowering;   // sum_n P_{n-1} A_j P_n
    IntMatrix preserving; // sum_n P_n A_j P_n
    IntMatrix residual;   // shifts with |s| >= 2
    std::vector<ShiftResidual> shift_residuals;

    double residual_norm() const { return std::sqrt(static_cast<double>(residual.squaredNorm())); }
};

struct CAPFamily {
    Stratification strata;
    std::vector<ClassCAP> classes;
};

/// Creation/annihilation/preservation parts of every class with respect to
/// the strata V_n = {x : (base, x) in class n}.
inline CAPFamily cap_operators(const AssociationScheme& scheme, int base)
{
    if (!scheme.commutative()) {
        throw InputError("CAP operators need a commutative scheme");
    }
    CAPFamily fam;
    fam.strata = stratify_by_relation(scheme, base);
    const auto& level = fam.strata.level;
    const int levels = static_cast<int>(fam.strata.strata.size());
    for (int j = 0; j < scheme.rank(); ++j) {
        const auto qd = decompose_by_levels(scheme[j], level);
        ClassCAP cap{j, qd.raising, qd.lowering, qd.diagonal, qd.residual, {}};
        std::vector<double> sq(static_cast<std::size_t>(levels) * (2 * levels - 1), 0.0);
        for (int x = 0; x < scheme.vertex_count(); ++x) {
            for (int y = 0; y < scheme.vertex_count(); ++y) {
                const auto v = qd.residual(x, y);
                if (v != 0) {
                    const int shift = level[x] - level[y];
                    sq[static_cast<std::size_t>(level[y]) * (2 * levels - 1) + (shift + levels - 1)] +=
                        static_cast<double>(v * v);
                }
            }
        }
        for (int n = 0; n < levels; ++n) {
            for (int s = -(levels - 1); s <= levels - 1; ++s) {
                if (std::abs(s) < 2 || n + s < 0 || n + s >= levels) {
                    continue;
                }
                const double v = sq[static_cast<std::size_t>(n) * (2 * levels - 1) + (s + levels - 1)];
                cap.shift_residuals.push_back({n, s, std::sqrt(v)});
            }
        }
        fam.classes.push_back(std::move(cap));
    }
    return fam;
}

} // namespace schemewalk
