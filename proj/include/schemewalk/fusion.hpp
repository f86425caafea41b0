#pragma once

// Fusion rings, anyon model data (S-matrix, twists, quantum dimensions),
// fusion-tree spaces, and the test of whether a Krein tensor is a fusion ring.

#include "schemewalk/core.hpp"
#include "schemewalk/spectral.hpp"
#include "schemewalk/tensor.hpp"

#include <Eigen/Eigenvalues>

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace schemewalk {

/// Labels with 0 the vacuum, multiplicities N(a, b, c) = N^c_{ab}, and the
/// duality a -> a*.
struct FusionRing {
    std::vector<std::string> labels;
    Tensor3<std::int64_t> n_tensor;
    std::vector<int> dual; // -1 where no dual exists
    bool claims_commutative = true;

    int rank() const { return static_cast<int>(labels.size()); }
    std::int64_t operator()(int a, int b, int c) const { return n_tensor(a, b, c); }

    int index_of(const std::string& label) const
    {
        for (int a = 0; a < rank(); ++a) {
            if (labels[a] == label) {
                return a;
            }
        }
        throw InputError("unknown label '" + label + "'");
    }

    /// Builds a ring, deriving the dual map from N(a, b, 0) when `dual` is empty.
    static FusionRing make(std::vector<std::string> labels, Tensor3<std::int64_t> n, std::vector<int> dual = {},
                           bool commutative = true)
    {
        const int r = static_cast<int>(labels.size());
        if (r == 0 || n.extent() != r) {
            throw InputError("fusion tensor extent " + std::to_string(n.extent()) + " does not match " +
                             std::to_string(r) + " labels");
        }
        for (auto v : n.data()) {
            if (v < 0) {
                throw InputError("fusion multiplicities must be nonnegative");
            }
        }
        if (dual.empty()) {
            dual.assign(r, -1);
            for (int a = 0; a < r; ++a) {
                for (int b = 0; b < r; ++b) {
                    if (n(a, b, 0) >= 1) {
                        dual[a] = b;
                        break;
                    }
                }
            }
        } else if (static_cast<int>(dual.size()) != r) {
            throw InputError("dual map has the wrong length");
        }
        return {std::move(labels), std::move(n), std::move(dual), commutative};
    }

    /// Fusion matrix (N_a)[b][c] = N(a, b, c).
    RealMatrix fusion_matrix(int a) const
    {
        RealMatrix m(rank(), rank());
        for (int b = 0; b < rank(); ++b) {
            for (int c = 0; c < rank(); ++c) {
                m(b, c) = static_cast<double>(n_tensor(a, b, c));
            }
        }
        return m;
    }
};

struct FusionAxiom {
    std::string name;
    bool passed = true;
    bool required = true;
    std::optional<std::array<int, 4>> counterexample; // label indices, unused slots -1
    std::string detail;
};

struct FusionReport {
    std::vector<FusionAxiom> axioms;

    bool passed() const
    {
        for (const auto& a : axioms) {
            if (a.required && !a.passed) {
                return false;
            }
        }
        return true;
    }

    const FusionAxiom& axiom(const std::string& name) const
    {
        for (const auto& a : axioms) {
            if (a.name == name) {
                return a;
            }
        }
        throw Error("no fusion axiom named " + name);
    }
};

/// Unit, associativity, duality and (if claimed) commutativity, each with
/// the first counterexample in lexicographic index order.
inline FusionReport verify_fusion_ring(const FusionRing& ring)
{
    const int r = ring.rank();
    if (ring.n_tensor.extent() != r || static_cast<int>(ring.dual.size()) != r) {
        throw InputError("fusion ring tensor does not match its labels");
    }
    for (auto v : ring.n_tensor.data()) {
        if (v < 0) {
            throw InputError("fusion multiplicities must be nonnegative");
        }
    }
    const auto& n = ring.n_tensor;
    FusionReport rep;

    FusionAxiom unit{"unit"};
    for (int b = 0; b < r && unit.passed; ++b) {
        for (int c = 0; c < r; ++c) {
            const std::int64_t want = b == c ? 1 : 0;
            if (n(0, b, c) != want || n(b, 0, c) != want) {
                unit.passed = false;
                unit.counterexample = std::array{0, b, c, -1};
                unit.detail = "vacuum does not act as the identity";
                break;
            }
        }
    }
    rep.axioms.push_back(unit);

    FusionAxiom assoc{"associativity"};
    for (int a = 0; a < r && assoc.passed; ++a) {
        for (int b = 0; b < r && assoc.passed; ++b) {
            for (int c = 0; c < r && assoc.passed; ++c) {
                for (int d = 0; d < r; ++d) {
                    std::int64_t left = 0;
                    std::int64_t right = 0;
                    for (int e = 0; e < r; ++e) {
                        left += n(a, b, e) * n(e, c, d);
                        right += n(b, c, e) * n(a, e, d);
                    }
                    if (left != right) {
                        assoc.passed = false;
                        assoc.counterexample = std::array{a, b, c, d};
                        assoc.detail = "(ab)c gives " + std::to_string(left) + ", a(bc) gives " + std::to_string(right);
                        break;
                    }
                }
            }
        }
    }
    rep.axioms.push_back(assoc);

    FusionAxiom duality{"duality"};
    for (int a = 0; a < r && duality.passed; ++a) {
        const int star = ring.dual[a];
        if (star < 0 || star >= r || ring.dual[star] != a) {
            duality.passed = false;
            duality.counterexample = std::array{a, star, -1, -1};
            duality.detail = "dual map is not an involution";
            break;
        }
        for (int b = 0; b < r; ++b) {
            const std::int64_t want = b == star ? 1 : 0;
            if (n(a, b, 0) != want) {
                duality.passed = false;
                duality.counterexample = std::array{a, b, 0, -1};
                duality.detail = "N(a, b, vacuum) = " + std::to_string(n(a, b, 0)) + ", expected " + std::to_string(want);
                break;
            }
        }
    }
    rep.axioms.push_back(duality);

    FusionAxiom comm{"commutativity"};
    comm.required = ring.claims_commutative;
    for (int a = 0; a < r && comm.passed; ++a) {
        for (int b = 0; b < r && comm.passed; ++b) {
            for (int c = 0; c < r; ++c) {
                if (n(a, b, c) != n(b, a, c)) {
                    comm.passed = false;
                    comm.counterexample = std::array{a, b, c, -1};
                    comm.detail = "N(a, b, c) != N(b, a, c)";
                    break;
                }
            }
        }
    }
    rep.axioms.push_back(comm);
    return rep;
}

/// d_a = Perron-Frobenius eigenvalue of N_a, validated against
/// d_a d_b = sum_c N(a, b, c) d_c.
inline std::vector<double> quantum_dimensions(const FusionRing& ring, double tol = 1e-12)
{
    const int r = ring.rank();
    std::vector<double> d(r);
    for (int a = 0; a < r; ++a) {
        Eigen::EigenSolver<RealMatrix> solver(ring.fusion_matrix(a), false);
        if (solver.info() != Eigen::Success) {
            throw Error("eigensolver failed on fusion matrix " + ring.labels[a]);
        }
        double best = 0.0;
        for (const auto& ev : solver.eigenvalues()) {
            best = std::max(best, std::abs(ev));
        }
        d[a] = best;
    }
    for (int a = 0; a < r; ++a) {
        for (int b = 0; b < r; ++b) {
            double rhs = 0.0;
            for (int c = 0; c < r; ++c) {
                rhs += static_cast<double>(ring(a, b, c)) * d[c];
            }
            if (std::abs(d[a] * d[b] - rhs) > tol * std::max(1.0, rhs)) {
                throw VerificationError("spectral radii of the fusion matrices are not a consistent dimension "
                                        "function at (" + ring.labels[a] + ", " + ring.labels[b] +
                                        "); the Perron vector is not unique");
            }
        }
    }
    return d;
}

/// Multiplicities of a^n by iterated contraction; a^0 is the vacuum.
inline std::vector<std::int64_t> fusion_power(const FusionRing& ring, int a, int n)
{
    if (n < 0) {
        throw InputError("fusion power needs n >= 0");
    }
    const int r = ring.rank();
    if (a < 0 || a >= r) {
        throw InputError("label index out of range");
    }
    std::vector<std::int64_t> v(r, 0);
    v[0] = 1;
    for (int step = 0; step < n; ++step) {
        std::vector<std::int64_t> next(r, 0);
        for (int b = 0; b < r; ++b) {
            if (v[b] == 0) {
                continue;
            }
            for (int c = 0; c < r; ++c) {
                next[c] += v[b] * ring(b, a, c);
            }
        }
        v = std::move(next);
    }
    return v;
}

/// One basis tree: internal edge labels and, per trivalent vertex, which
/// copy of a multiplicity-N channel is used.
struct FusionTree {
    std::vector<int> internal;
    std::vector<int> channel;

    friend bool operator==(const FusionTree&, const FusionTree&) = default;
};

struct FusionTreeSpace {
    std::vector<int> inputs;
    int total = 0;
    std::int64_t dimension = 0;
    std::vector<FusionTree> basis; // left-associated trees
    bool basis_truncated = false;
};

/// Left-associated trees ((a1 a2) a3) ... an -> total with internal labels
/// e_1 .. e_{n-2}.
inline FusionTreeSpace fusion_tree_space(const FusionRing& ring, const std::vector<int>& inputs, int total,
                                         std::size_t max_basis = 100'000)
{
    const int r = ring.rank();
    if (total < 0 || total >= r) {
        throw InputError("total charge is not a label of the ring");
    }
    if (inputs.empty()) {
        throw InputError("a fusion tree needs at least one input");
    }
    for (int a : inputs) {
        if (a < 0 || a >= r) {
            throw InputError("input label out of range");
        }
    }
    FusionTreeSpace space{inputs, total, 0, {}, false};
    // count[e] = number of trees for the first k inputs with running charge e
    std::vector<std::int64_t> count(r, 0);
    count[inputs[0]] = 1;
    for (std::size_t k = 1; k < inputs.size(); ++k) {
        std::vector<std::int64_t> next(r, 0);
        for (int e = 0; e < r; ++e) {
            for (int f = 0; f < r; ++f) {
                next[f] += count[e] * ring(e, inputs[k], f);
            }
        }
        count = std::move(next);
    }
    space.dimension = count[total];

    FusionTree cur;
    auto walk = [&](auto&& self, std::size_t k, int charge) -> void {
        if (space.basis.size() >= max_basis) {
            space.basis_truncated = true;
            return;
        }
        if (k == inputs.size()) {
            if (charge == total) {
                space.basis.push_back(cur);
            }
            return;
        }
        const bool last = k + 1 == inputs.size();
        for (int f = 0; f < r; ++f) {
            if (last && f != total) {
                continue;
            }
            const auto mult = ring(charge, inputs[k], f);
            for (std::int64_t ch = 0; ch < mult; ++ch) {
                if (!last) {
                    cur.internal.push_back(f);
                }
                cur.channel.push_back(static_cast<int>(ch));
                self(self, k + 1, f);
                cur.channel.pop_back();
                if (!last) {
                    cur.internal.pop_back();
                }
            }
        }
    };
    walk(walk, 1, inputs[0]);
    return space;
}

/// Number of ways the charges fuse (left-associated) to `total`.
inline std::int64_t fusion_channel_count(const FusionRing& ring, const std::vector<int>& charges, int total)
{
    return fusion_tree_space(ring, charges, total, 0).dimension;
}

/// Whether pairing consecutive inputs into the given pair charges, and then
/// fusing the pair charges, is a valid tree with total charge `total`.
inline bool is_valid_paired_state(const FusionRing& ring, const std::vector<int>& inputs,
                                  const std::vector<int>& pair_charges, int total)
{
    if (inputs.size() % 2 != 0 || pair_charges.size() * 2 != inputs.size()) {
        throw InputError("paired states need an even number of inputs and one charge per pair");
    }
    for (std::size_t p = 0; p < pair_charges.size(); ++p) {
        if (ring(inputs[2 * p], inputs[2 * p + 1], pair_charges[p]) < 1) {
            return false;
        }
    }
    return fusion_channel_count(ring, pair_charges, total) >= 1;
}

/// Dimension of the pairwise-bracketed space ((a1 a2)(a3 a4)...) -> total;
/// bracketing does not change the dimension of an associative ring.
inline std::int64_t paired_dimension(const FusionRing& ring, const std::vector<int>& inputs, int total)
{
    if (inputs.size() % 2 != 0) {
        throw InputError("paired spaces need an even number of inputs");
    }
    const int r = ring.rank();
    std::vector<std::int64_t> count(r, 0);
    count[0] = 1;
    for (std::size_t p = 0; p < inputs.size(); p += 2) {
        std::vector<std::int64_t> next(r, 0);
        for (int e = 0; e < r; ++e) {
            if (count[e] == 0) {
                continue;
            }
            for (int c = 0; c < r; ++c) {
                const auto pair = ring(inputs[p], inputs[p + 1], c);
                if (pair == 0) {
                    continue;
                }
                for (int f = 0; f < r; ++f) {
                    next[f] += count[e] * pair * ring(e, c, f);
                }
            }
        }
        count = std::move(next);
    }
    return count[total];
}

struct AnyonModelData {
    FusionRing ring;
    RealMatrix s_matrix;          // unnormalized
    std::vector<Complex> twists;
    std::vector<double> qdims;

    /// D = sqrt(sum_a d_a^2).
    double total_dimension() const
    {
        double sum = 0.0;
        for (double d : qdims) {
            sum += d * d;
        }
        return std::sqrt(sum);
    }

    /// max |(S/D)(S/D)^T - I|.
    double unitarity_defect() const
    {
        const double d = total_dimension();
        const RealMatrix s = s_matrix / d;
        return (s * s.transpose() - RealMatrix::Identity(s.rows(), s.cols())).cwiseAbs().maxCoeff();
    }
};

/// Ising anyons (1, sigma, psi).
inline AnyonModelData ising_model()
{
    enum { one = 0, sigma = 1, psi = 2 };
    Tensor3<std::int64_t> n(3);
    for (int a = 0; a < 3; ++a) {
        n(one, a, a) = 1;
        n(a, one, a) = 1;
    }
    n(sigma, sigma, one) = 1;
    n(sigma, sigma, psi) = 1;
    n(sigma, psi, sigma) = 1;
    n(psi, sigma, sigma) = 1;
    n(psi, psi, one) = 1;

    AnyonModelData m;
    m.ring = FusionRing::make({"1", "sigma", "psi"}, std::move(n), {0, 1, 2});
    const double r2 = std::sqrt(2.0);
    m.s_matrix.resize(3, 3);
    m.s_matrix << 1, r2, 1, r2, 0, -r2, 1, -r2, 1;
    m.twists = {Complex(1, 0), std::polar(1.0, std::numbers::pi / 8), Complex(-1, 0)};
    m.qdims = {1.0, r2, 1.0};
    return m;
}

/// The three six-sigma states |ss->1>|ss->1>|ss->1>, |ss->1>|ss->psi>|ss->psi>,
/// |ss->psi>|ss->psi>|ss->1>, as pair charges over the Ising labels.
inline std::vector<std::vector<int>> ising_qutrit_pair_charges()
{
    return {{0, 0, 0}, {0, 2, 2}, {2, 2, 0}};
}

struct VerlindeReport {
    double unitarity_defect = 0.0;
    bool unitary = false;
    double max_tensor_error = 0.0;
    bool reproduces = false;
    std::optional<std::array<int, 3>> first_tensor_mismatch; // (a, b, c)
    double max_eigen_error = 0.0;
    bool eigenvectors = false;
    std::optional<std::array<int, 2>> first_eigen_mismatch; // (a, column x)

    bool passed() const { return unitary && reproduces && eigenvectors; }
};

/// N(a, b, c) = sum_x S_ax S_bx conj(S_cx) / (D^2 S_0x) for the unnormalized
/// S with D^2 = sum_x S_0x^2, and S columns as common eigenvectors of every
/// fusion matrix: N_a s_x = (S_ax / S_0x) s_x.
inline VerlindeReport verlinde_check(const AnyonModelData& model, double tol = 1e-9, double unitary_tol = 1e-12)
{
    const int r = model.ring.rank();
    const RealMatrix& s = model.s_matrix;
    if (s.rows() != r || s.cols() != r) {
        throw InputError("S-matrix size does not match the ring");
    }
    for (int x = 0; x < r; ++x) {
        if (std::abs(s(0, x)) < 1e-12) {
            throw InputError("S(0, " + std::to_string(x) + ") vanishes");
        }
    }
    double d2 = 0.0;
    for (int x = 0; x < r; ++x) {
        d2 += s(0, x) * s(0, x);
    }
    VerlindeReport rep;
    const RealMatrix sn = s / std::sqrt(d2);
    rep.unitarity_defect = (sn * sn.transpose() - RealMatrix::Identity(r, r)).cwiseAbs().maxCoeff();
    rep.unitary = rep.unitarity_defect <= unitary_tol;

    for (int a = 0; a < r; ++a) {
        for (int b = 0; b < r; ++b) {
            for (int c = 0; c < r; ++c) {
                double v = 0.0;
                for (int x = 0; x < r; ++x) {
                    v += s(a, x) * s(b, x) * s(c, x) / (d2 * s(0, x));
                }
                const double err = std::abs(v - static_cast<double>(model.ring(a, b, c)));
                rep.max_tensor_error = std::max(rep.max_tensor_error, err);
                if (err > tol && !rep.first_tensor_mismatch) {
                    rep.first_tensor_mismatch = std::array{a, b, c};
                }
            }
        }
    }
    rep.reproduces = !rep.first_tensor_mismatch;

    for (int a = 0; a < r; ++a) {
        const RealMatrix na = model.ring.fusion_matrix(a);
        for (int x = 0; x < r; ++x) {
            const RealVector col = s.col(x);
            const double err = (na * col - (s(a, x) / s(0, x)) * col).cwiseAbs().maxCoeff();
            rep.max_eigen_error = std::max(rep.max_eigen_error, err);
            if (err > tol && !rep.first_eigen_mismatch) {
                rep.first_eigen_mismatch = std::array{a, x};
            }
        }
    }
    rep.eigenvectors = !rep.first_eigen_mismatch;
    return rep;
}

// ---------------------------------------------------------------------------
// Krein parameters read as fusion rules

struct KreinDeviation {
    int k = 0;
    int i = 0;
    int j = 0;
    double value = 0.0;
    double deviation = 0.0; // distance to the nearest integer
};

struct KreinFusionView {
    std::string name;
    Tensor3<double> tensor; // q(k, i, j) under this normalization
    bool integral = false;
    bool nonnegative = false;
    std::vector<KreinDeviation> non_integral;
    std::optional<FusionRing> ring;
    std::optional<FusionReport> ring_report;

    bool accepted() const { return ring_report && ring_report->passed(); }
};

struct KreinFusionVerdict {
    KreinFusionView raw;           // q(k, i, j)
    KreinFusionView rescaled;      // q(k, i, j) m_k / (m_i m_j)
    KreinFusionView sqrt_rescaled; // q(k, i, j) sqrt(m_k / (m_i m_j))
};

namespace detail {

inline KreinFusionView krein_view(std::string name, Tensor3<double> t, double tol)
{
    KreinFusionView v;
    v.name = std::move(name);
    const int r = t.extent();
    v.integral = true;
    v.nonnegative = true;
    Tensor3<std::int64_t> n(r);
    for (int k = 0; k < r; ++k) {
        for (int i = 0; i < r; ++i) {
            for (int j = 0; j < r; ++j) {
                const double q = t(k, i, j);
                const double dev = std::abs(q - std::round(q));
                if (dev > tol) {
                    v.integral = false;
                    v.non_integral.push_back({k, i, j, q, dev});
                }
                if (q < -tol) {
                    v.nonnegative = false;
                }
                n(i, j, k) = static_cast<std::int64_t>(std::llround(q));
            }
        }
    }
    v.tensor = std::move(t);
    if (v.integral && v.nonnegative) {
        std::vector<std::string> labels;
        for (int a = 0; a < r; ++a) {
            labels.push_back("E" + std::to_string(a));
        }
        v.ring = FusionRing::make(std::move(labels), std::move(n));
        v.ring_report = verify_fusion_ring(*v.ring);
    }
    return v;
}

} // namespace detail

/// Tests whether the Krein tensor, raw or rescaled by m_k / (m_i m_j) or by
/// its square root, is a nonnegative integer tensor (within `tol`) that forms
/// a fusion ring with E_0 as vacuum and N(i, j, k) = q(k, i, j). All three
/// verdicts are returned. For the conjugacy-class scheme of a group the
/// square-root view is the representation ring.
inline KreinFusionVerdict fusion_ring_from_krein(const KreinTensor& krein, const std::vector<int>& multiplicities,
                                                 double tol = 1e-6)
{
    const int r = krein.rank();
    if (static_cast<int>(multiplicities.size()) != r) {
        throw InputError("Krein tensor has rank " + std::to_string(r) + " but " +
                         std::to_string(multiplicities.size()) + " multiplicities were given");
    }
    for (int m : multiplicities) {
        if (m <= 0) {
            throw InputError("multiplicities must be positive");
        }
    }
    Tensor3<double> scaled(r);
    Tensor3<double> root(r);
    for (int k = 0; k < r; ++k) {
        for (int i = 0; i < r; ++i) {
            for (int j = 0; j < r; ++j) {
                const double f = multiplicities[k] / (static_cast<double>(multiplicities[i]) * multiplicities[j]);
                scaled(k, i, j) = krein.q(k, i, j) * f;
                root(k, i, j) = krein.q(k, i, j) * std::sqrt(f);
            }
        }
    }
    return {detail::krein_view("raw", krein.q, tol), detail::krein_view("rescaled", std::move(scaled), tol),
            detail::krein_view("sqrt_rescaled", std::move(root), tol)};
}

} // namespace schemewalk
