#pragma once

// Discrete-time quantum walks: the Grover walk on the arcs of a graph
// (exact rationals or complex doubles), its symmetry-reduced form on the
// homogeneous tree, and coined / split-step walks on the integer line.

#include "schemewalk/core.hpp"
#include "schemewalk/graph.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <cmath>
#include <complex>
#include <memory>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace schemewalk {

using Rational = boost::multiprecision::cpp_rational;

// ---------------------------------------------------------------------------
// Scalar traits: amplitudes are double, complex<double> or exact Rational.

template <class T>
struct AmplitudeTraits;

template <>
struct AmplitudeTraits<double> {
    using Real = double;
    static constexpr bool exact = false;
    static Real abs2(double a) { return a * a; }
    static double to_double(double a) { return a; }
};

template <>
struct AmplitudeTraits<Complex> {
    using Real = double;
    static constexpr bool exact = false;
    static Real abs2(const Complex& a) { return std::norm(a); }
    static Complex to_complex(const Complex& a) { return a; }
};

template <>
struct AmplitudeTraits<Rational> {
    using Real = Rational;
    static constexpr bool exact = true;
    static Real abs2(const Rational& a) { return a * a; }
    static double to_double(const Rational& a) { return a.convert_to<double>(); }
};

template <class T>
using RealOf = typename AmplitudeTraits<T>::Real;

template <class T>
Complex as_complex(const T& a)
{
    if constexpr (std::is_same_v<T, Complex>) {
        return a;
    } else {
        return Complex(AmplitudeTraits<T>::to_double(a), 0.0);
    }
}

template <class T>
double as_double(const T& real)
{
    if constexpr (std::is_same_v<T, Rational>) {
        return real.template convert_to<double>();
    } else {
        return static_cast<double>(real);
    }
}

/// Grover coin of a degree-`degree` vertex: 2/degree - delta_{wv}.
template <class T = double>
std::vector<std::vector<T>> grover_coin(int degree)
{
    if (degree < 1) {
        throw InputError("grover coin needs degree >= 1");
    }
    const T off = T(2) / T(degree);
    std::vector<std::vector<T>> c(degree, std::vector<T>(degree, off));
    for (int i = 0; i < degree; ++i) {
        c[i][i] = off - T(1);
    }
    return c;
}

// ---------------------------------------------------------------------------
// Arc space

/// Directed arcs (u, v) of a graph in lexicographic order, with the arcs
/// leaving u contiguous and the reversal permutation precomputed.
class ArcSpace {
public:
    explicit ArcSpace(Graph g) : graph_(std::move(g))
    {
        offsets_.push_back(0);
        for (int u = 0; u < graph_.vertex_count(); ++u) {
            for (int v : graph_.neighbors(u)) {
                arcs_.emplace_back(u, v);
            }
            offsets_.push_back(arcs_.size());
        }
        reverse_.resize(arcs_.size());
        for (std::size_t a = 0; a < arcs_.size(); ++a) {
            reverse_[a] = index(arcs_[a].second, arcs_[a].first);
        }
    }

    const Graph& graph() const { return graph_; }
    std::size_t size() const { return arcs_.size(); }
    const std::pair<int, int>& arc(std::size_t a) const { return arcs_[a]; }
    std::size_t reverse(std::size_t a) const { return reverse_[a]; }
    std::size_t begin_of(int u) const { return offsets_[u]; }
    std::size_t end_of(int u) const { return offsets_[u + 1]; }

    std::size_t index(int u, int v) const
    {
        if (u < 0 || u >= graph_.vertex_count() || v < 0 || v >= graph_.vertex_count()) {
            throw InputError("arc (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
        }
        const auto& nb = graph_.neighbors(u);
        auto it = std::lower_bound(nb.begin(), nb.end(), v);
        if (it == nb.end() || *it != v) {
            throw InputError("(" + std::to_string(u) + "," + std::to_string(v) + ") is not an arc");
        }
        return offsets_[u] + static_cast<std::size_t>(it - nb.begin());
    }

private:
    Graph graph_;
    std::vector<std::pair<int, int>> arcs_;
    std::vector<std::size_t> offsets_;
    std::vector<std::size_t> reverse_;
};

template <class T>
struct ArcState {
    std::shared_ptr<const ArcSpace> space;
    std::vector<T> amplitudes;

    static ArcState zero(std::shared_ptr<const ArcSpace> s)
    {
        ArcState st{std::move(s), {}};
        st.amplitudes.assign(st.space->size(), T(0));
        return st;
    }

    /// Unit amplitude on the arc (u, v).
    static ArcState localized(std::shared_ptr<const ArcSpace> s, int u, int v)
    {
        auto st = zero(std::move(s));
        st.amplitudes[st.space->index(u, v)] = T(1);
        return st;
    }

    const T& at(int u, int v) const { return amplitudes[space->index(u, v)]; }

    RealOf<T> norm_squared() const
    {
        RealOf<T> sum(0);
        for (const auto& a : amplitudes) {
            sum += AmplitudeTraits<T>::abs2(a);
        }
        return sum;
    }
};

/// One step U = S C: Grover mixing of the arcs leaving each vertex, then
/// arc reversal.
template <class T>
ArcState<T> grover_step(const ArcState<T>& state)
{
    const ArcSpace& space = *state.space;
    std::vector<T> coined(space.size(), T(0));
    for (int u = 0; u < space.graph().vertex_count(); ++u) {
        const auto b = space.begin_of(u);
        const auto e = space.end_of(u);
        if (b == e) {
            continue;
        }
        T sum(0);
        for (auto a = b; a < e; ++a) {
            sum += state.amplitudes[a];
        }
        const T mix = sum * T(2) / T(static_cast<int>(e - b));
        for (auto a = b; a < e; ++a) {
            coined[a] = mix - state.amplitudes[a];
        }
    }
    ArcState<T> next{state.space, std::vector<T>(space.size(), T(0))};
    for (std::size_t a = 0; a < space.size(); ++a) {
        next.amplitudes[space.reverse(a)] = std::move(coined[a]);
    }
    return next;
}

/// Snapshots U^0 psi .. U^steps psi. The initial state must be normalized:
/// exactly for exact scalars, within `tol` otherwise.
template <class T>
std::vector<ArcState<T>> grover_walk_run(const ArcState<T>& initial, int steps, double tol = 1e-12)
{
    if (steps < 0) {
        throw InputError("steps must be nonnegative");
    }
    if (!initial.space || initial.amplitudes.size() != initial.space->size()) {
        throw InputError("initial state does not match its arc space");
    }
    const auto norm = initial.norm_squared();
    if constexpr (AmplitudeTraits<T>::exact) {
        if (norm != RealOf<T>(1)) {
            throw InputError("initial state is not normalized (norm^2 = " + norm.str() + ")");
        }
    } else {
        if (std::abs(norm - 1.0) > tol) {
            throw InputError("initial state is not normalized (norm^2 = " + std::to_string(norm) + ")");
        }
    }
    std::vector<ArcState<T>> out{initial};
    out.reserve(static_cast<std::size_t>(steps) + 1);
    for (int t = 0; t < steps; ++t) {
        out.push_back(grover_step(out.back()));
    }
    return out;
}

/// Probability at v = sum of |amplitude|^2 over arcs leaving v.
template <class T>
std::vector<RealOf<T>> position_distribution(const ArcState<T>& state)
{
    const ArcSpace& space = *state.space;
    std::vector<RealOf<T>> p(space.graph().vertex_count(), RealOf<T>(0));
    for (std::size_t a = 0; a < space.size(); ++a) {
        p[space.arc(a).first] += AmplitudeTraits<T>::abs2(state.amplitudes[a]);
    }
    return p;
}

// ---------------------------------------------------------------------------
// Symmetry-reduced Grover walk on the homogeneous tree

/// Grover walk on the ball of radius `depth` in the `degree`-regular tree,
/// started from unit amplitude on one root arc. The automorphisms fixing
/// that arc act transitively on the arcs of each (level, branch, direction)
/// orbit, so the walk is tracked by one amplitude per orbit:
///   level n   arcs between depth n and n+1,
///   branch    main (below the initial arc) or side (the other root branches),
///   direction out (towards depth n+1) or in (towards depth n).
/// Memory is O(depth) although the tree has exponentially many arcs.
template <class T = double>
class TreeOrbitWalk {
public:
    enum Branch { main_branch = 0, side_branch = 1 };
    enum Direction { outward = 0, inward = 1 };

    TreeOrbitWalk(int degree, int depth) : degree_(degree), depth_(depth)
    {
        if (degree < 1 || depth < 1) {
            throw InputError("tree orbit walk needs degree >= 1 and depth >= 1");
        }
        for (auto& row : amp_) {
            for (auto& v : row) {
                v.assign(depth, T(0));
            }
        }
        amp_[main_branch][outward][0] = T(1);
        // (degree-1)^n arcs per level in the main branch, (degree-1)^(n+1) in the side branches
        RealOf<T> m(1);
        for (int n = 0; n < depth; ++n) {
            mult_[main_branch].push_back(m);
            mult_[side_branch].push_back(m * RealOf<T>(degree - 1));
            m *= RealOf<T>(degree - 1);
        }
    }

    int degree() const { return degree_; }
    int depth() const { return depth_; }
    int time() const { return time_; }

    const T& amplitude(int level, Branch b, Direction d) const { return amp_[b][d].at(level); }
    const RealOf<T>& multiplicity(int level, Branch b) const { return mult_[b].at(level); }

    void step()
    {
        const int q = degree_;
        auto coin = [](T& target, const T& sum, int deg, const T& self) { target = sum * T(2) / T(deg) - self; };
        std::array<std::array<std::vector<T>, 2>, 2> next = amp_;
        // root: one main arc, q-1 side arcs
        {
            const T& m = amp_[main_branch][outward][0];
            const T& s = amp_[side_branch][outward][0];
            const T sum = m + T(q - 1) * s;
            coin(next[main_branch][outward][0], sum, q, m);
            coin(next[side_branch][outward][0], sum, q, s);
        }
        for (int b = 0; b < 2; ++b) {
            for (int n = 1; n <= depth_; ++n) {
                const T& up = amp_[b][inward][n - 1];
                const bool inner = n < depth_ && q > 1;
                if (!inner) {
                    next[b][inward][n - 1] = up; // leaf: degree-1 coin is the identity
                    continue;
                }
                const T& down = amp_[b][outward][n];
                const T sum = up + T(q - 1) * down;
                coin(next[b][inward][n - 1], sum, q, up);
                coin(next[b][outward][n], sum, q, down);
            }
        }
        // shift: reverse every arc, so out and in swap within each orbit pair
        for (int b = 0; b < 2; ++b) {
            std::swap(next[b][outward], next[b][inward]);
        }
        amp_ = std::move(next);
        ++time_;
    }

    RealOf<T> norm_squared() const
    {
        RealOf<T> sum(0);
        for (int b = 0; b < 2; ++b) {
            for (int n = 0; n < depth_; ++n) {
                sum += mult_[b][n] * (AmplitudeTraits<T>::abs2(amp_[b][outward][n]) +
                                      AmplitudeTraits<T>::abs2(amp_[b][inward][n]));
            }
        }
        return sum;
    }

    /// Probability mass on each depth 0..depth (arcs counted at their source).
    std::vector<RealOf<T>> stratum_probabilities() const
    {
        std::vector<RealOf<T>> p(depth_ + 1, RealOf<T>(0));
        for (int b = 0; b < 2; ++b) {
            for (int n = 0; n < depth_; ++n) {
                p[n] += mult_[b][n] * AmplitudeTraits<T>::abs2(amp_[b][outward][n]);
                p[n + 1] += mult_[b][n] * AmplitudeTraits<T>::abs2(amp_[b][inward][n]);
            }
        }
        return p;
    }

private:
    int degree_;
    int depth_;
    int time_ = 0;
    std::array<std::array<std::vector<T>, 2>, 2> amp_; // [branch][direction][level]
    std::array<std::vector<RealOf<T>>, 2> mult_;
};

// ---------------------------------------------------------------------------
// Walks on the integer line

using Coin2 = Eigen::Matrix2cd;

struct CoinSpec {
    enum class Kind { grover, unitary2x2, rotation, hadamard };

    Kind kind = Kind::hadamard;
    Eigen::MatrixXcd matrix;

    static CoinSpec hadamard()
    {
        const double h = 1.0 / std::sqrt(2.0);
        Eigen::MatrixXcd m(2, 2);
        m << h, h, h, -h;
        return {Kind::hadamard, m};
    }

    /// [[a, -conj(b)], [b, conj(a)]] with |a|^2 + |b|^2 = 1.
    static CoinSpec unitary2x2(Complex a, Complex b, double tol = 1e-12)
    {
        if (std::abs(std::norm(a) + std::norm(b) - 1.0) > tol) {
            throw InputError("unitary coin needs |a|^2 + |b|^2 = 1");
        }
        Eigen::MatrixXcd m(2, 2);
        m << a, -std::conj(b), b, std::conj(a);
        return {Kind::unitary2x2, m};
    }

    /// [[cos t, -sin t], [sin t, cos t]].
    static CoinSpec rotation(double theta)
    {
        Eigen::MatrixXcd m(2, 2);
        m << std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta);
        return {Kind::rotation, m};
    }

    static CoinSpec grover(int degree)
    {
        const auto g = grover_coin<double>(degree);
        Eigen::MatrixXcd m(degree, degree);
        for (int i = 0; i < degree; ++i) {
            for (int j = 0; j < degree; ++j) {
                m(i, j) = g[i][j];
            }
        }
        return {Kind::grover, m};
    }

    double unitarity_defect() const
    {
        const auto n = matrix.rows();
        return (matrix.adjoint() * matrix - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff();
    }
};

/// Amplitudes (coin-0, coin-1) on the positions lo .. lo + size - 1.
struct LineState {
    int lo = 0;
    std::vector<std::array<Complex, 2>> amplitudes;

    int hi() const { return lo + static_cast<int>(amplitudes.size()) - 1; }

    static LineState localized(int position, Complex coin0, Complex coin1)
    {
        return {position, {{coin0, coin1}}};
    }

    const std::array<Complex, 2>& at(int position) const { return amplitudes.at(position - lo); }

    double total_probability() const
    {
        double p = 0.0;
        for (const auto& a : amplitudes) {
            p += std::norm(a[0]) + std::norm(a[1]);
        }
        return p;
    }
};

namespace detail {

inline Coin2 as_coin2(const CoinSpec& coin)
{
    if (coin.matrix.rows() != 2 || coin.matrix.cols() != 2) {
        throw InputError("line walks need a 2x2 coin");
    }
    return coin.matrix;
}

inline void apply_coin(const Coin2& c, std::vector<std::array<Complex, 2>>& amps)
{
    for (auto& a : amps) {
        const Complex a0 = c(0, 0) * a[0] + c(0, 1) * a[1];
        const Complex a1 = c(1, 0) * a[0] + c(1, 1) * a[1];
        a = {a0, a1};
    }
}

/// Moves coin component `which` by `delta` (+1 or -1) and widens the window by one on that side.
inline LineState partial_shift(const LineState& s, int which, int delta)
{
    LineState out;
    out.lo = delta < 0 ? s.lo - 1 : s.lo;
    out.amplitudes.assign(s.amplitudes.size() + 1, {Complex(0), Complex(0)});
    for (std::size_t i = 0; i < s.amplitudes.size(); ++i) {
        const int pos = s.lo + static_cast<int>(i);
        out.amplitudes[pos + delta - out.lo][which] += s.amplitudes[i][which];
        out.amplitudes[pos - out.lo][1 - which] += s.amplitudes[i][1 - which];
    }
    return out;
}

} // namespace detail

/// U = S T: coin on every position, then coin-0 moves right and coin-1 left.
inline LineState line_walk_step(const Coin2& coin, const LineState& s)
{
    auto amps = s.amplitudes;
    detail::apply_coin(coin, amps);
    LineState out;
    out.lo = s.lo - 1;
    out.amplitudes.assign(amps.size() + 2, {Complex(0), Complex(0)});
    for (std::size_t i = 0; i < amps.size(); ++i) {
        // position lo+i maps to index i+1 in the widened window
        out.amplitudes[i + 2][0] += amps[i][0];
        out.amplitudes[i][1] += amps[i][1];
    }
    return out;
}

inline std::vector<LineState> line_walk_run(const CoinSpec& coin, const LineState& initial, int steps)
{
    if (steps < 0) {
        throw InputError("steps must be nonnegative");
    }
    const Coin2 c = detail::as_coin2(coin);
    std::vector<LineState> out{initial};
    for (int t = 0; t < steps; ++t) {
        out.push_back(line_walk_step(c, out.back()));
    }
    return out;
}

/// One split step: R(theta1), coin-0 moves right, R(theta2), coin-1 moves left.
inline LineState split_step(double theta1, double theta2, const LineState& s)
{
    const Coin2 r1 = CoinSpec::rotation(theta1).matrix;
    const Coin2 r2 = CoinSpec::rotation(theta2).matrix;
    LineState cur = s;
    detail::apply_coin(r1, cur.amplitudes);
    cur = detail::partial_shift(cur, 0, +1);
    detail::apply_coin(r2, cur.amplitudes);
    return detail::partial_shift(cur, 1, -1);
}

inline std::vector<LineState> split_step_run(double theta1, double theta2, const LineState& initial, int steps)
{
    if (steps < 0) {
        throw InputError("steps must be nonnegative");
    }
    std::vector<LineState> out{initial};
    for (int t = 0; t < steps; ++t) {
        out.push_back(split_step(theta1, theta2, out.back()));
    }
    return out;
}

} // namespace schemewalk
