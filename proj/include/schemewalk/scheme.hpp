#pragma once

// Association schemes in the adjacency basis. Everything here is exact
// integer arithmetic; the idempotent basis lives in spectral.hpp.

#include "schemewalk/core.hpp"
#include "schemewalk/graph.hpp"
#include "schemewalk/tensor.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace schemewalk {

/// Square 0/1 matrix; one relation of a scheme.
using ClassMatrix = IntMatrix;

/// Where a scheme came from, for serialization.
struct SchemeOrigin {
    std::string family = "explicit";
    std::vector<std::pair<std::string, std::int64_t>> params;
};

struct Witness {
    int i = -1;
    int j = -1;
    int x = -1;
    int y = -1;
    std::string detail;
};

struct AxiomCheck {
    std::string name;
    bool passed = true;
    bool required = true;
    std::optional<Witness> witness;
};

struct SchemeReport {
    int vertex_count = 0;
    int class_count = 0; // d, the number of nontrivial classes
    std::vector<AxiomCheck> axioms;
    bool commutative = false;
    bool symmetric = false;

    bool passed() const
    {
        return std::all_of(axioms.begin(), axioms.end(), [](const AxiomCheck& a) { return a.passed || !a.required; });
    }

    const AxiomCheck& axiom(const std::string& name) const
    {
        for (const auto& a : axioms) {
            if (a.name == name) {
                return a;
            }
        }
        throw Error("no axiom named " + name);
    }
};

namespace detail {

inline void check_class_shapes(const std::vector<ClassMatrix>& classes)
{
    if (classes.empty()) {
        throw InputError("a scheme needs at least one class matrix");
    }
    const auto n = classes.front().rows();
    if (n == 0) {
        throw InputError("class matrices must be nonempty");
    }
    for (std::size_t c = 0; c < classes.size(); ++c) {
        const auto& m = classes[c];
        if (m.rows() != n || m.cols() != n) {
            throw InputError("class " + std::to_string(c) + " has shape " + std::to_string(m.rows()) + "x" +
                             std::to_string(m.cols()) + ", expected " + std::to_string(n) + "x" + std::to_string(n));
        }
        for (Eigen::Index x = 0; x < n; ++x) {
            for (Eigen::Index y = 0; y < n; ++y) {
                if (m(x, y) != 0 && m(x, y) != 1) {
                    throw InputError("class " + std::to_string(c) + " has entry " + std::to_string(m(x, y)) +
                                     " at (" + std::to_string(x) + "," + std::to_string(y) + "), expected 0 or 1");
                }
            }
        }
    }
}

/// First position where two matrices differ, if any.
inline std::optional<std::pair<int, int>> first_difference(const IntMatrix& a, const IntMatrix& b)
{
    for (Eigen::Index x = 0; x < a.rows(); ++x) {
        for (Eigen::Index y = 0; y < a.cols(); ++y) {
            if (a(x, y) != b(x, y)) {
                return std::pair{static_cast<int>(x), static_cast<int>(y)};
            }
        }
    }
    return std::nullopt;
}

/// Representative (x, y) with A(x, y) = 1, or nullopt for an empty class.
inline std::optional<std::pair<int, int>> representative(const IntMatrix& a)
{
    for (Eigen::Index x = 0; x < a.rows(); ++x) {
        for (Eigen::Index y = 0; y < a.cols(); ++y) {
            if (a(x, y) == 1) {
                return std::pair{static_cast<int>(x), static_cast<int>(y)};
            }
        }
    }
    return std::nullopt;
}

} // namespace detail

/// Checks axioms (1)-(4), constant valencies and commutativity of a family
/// of 0/1 matrices. Throws InputError only for malformed input (non-0/1
/// entries, mismatched shapes); axiom failures are reported, not thrown.
inline SchemeReport verify_scheme(const std::vector<ClassMatrix>& classes)
{
    detail::check_class_shapes(classes);
    const int n = static_cast<int>(classes.front().rows());
    const int r = static_cast<int>(classes.size());

    SchemeReport report;
    report.vertex_count = n;
    report.class_count = r - 1;

    AxiomCheck identity{"identity"};
    if (auto diff = detail::first_difference(classes[0], IntMatrix::Identity(n, n))) {
        identity.passed = false;
        identity.witness = Witness{0, -1, diff->first, diff->second, "A_0 differs from I"};
    }
    report.axioms.push_back(identity);

    AxiomCheck partition{"partition"};
    IntMatrix sum = IntMatrix::Zero(n, n);
    for (const auto& a : classes) {
        sum += a;
    }
    if (auto diff = detail::first_difference(sum, IntMatrix::Constant(n, n, 1))) {
        partition.passed = false;
        partition.witness = Witness{-1, -1, diff->first, diff->second,
                                    "entry covered by " + std::to_string(sum(diff->first, diff->second)) + " classes"};
    }
    for (int c = 0; c < r && partition.passed; ++c) {
        if (!detail::representative(classes[c])) {
            partition.passed = false;
            partition.witness = Witness{c, -1, -1, -1, "class is empty"};
        }
    }
    report.axioms.push_back(partition);

    AxiomCheck transpose{"transpose"};
    report.symmetric = true;
    for (int j = 0; j < r; ++j) {
        const IntMatrix t = classes[j].transpose();
        if (t != classes[j]) {
            report.symmetric = false;
        }
        const bool found = std::any_of(classes.begin(), classes.end(), [&](const ClassMatrix& m) { return m == t; });
        if (!found && transpose.passed) {
            transpose.passed = false;
            transpose.witness = Witness{j, -1, -1, -1, "transpose of A_j is not a class"};
        }
    }
    report.axioms.push_back(transpose);

    AxiomCheck valency{"valency"};
    for (int j = 0; j < r && valency.passed; ++j) {
        const auto rows = classes[j].rowwise().sum();
        for (int x = 1; x < n; ++x) {
            if (rows(x) != rows(0)) {
                valency.passed = false;
                valency.witness = Witness{j, -1, x, -1, "row sum differs from row 0"};
                break;
            }
        }
    }
    report.axioms.push_back(valency);

    AxiomCheck closure{"product_closure"};
    AxiomCheck commutes{"commutative"};
    commutes.required = false;
    std::vector<std::optional<std::pair<int, int>>> reps(r);
    for (int k = 0; k < r; ++k) {
        reps[k] = detail::representative(classes[k]);
    }
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < r; ++j) {
            const IntMatrix prod = classes[i] * classes[j];
            if (closure.passed) {
                IntMatrix rebuilt = IntMatrix::Zero(n, n);
                for (int k = 0; k < r; ++k) {
                    if (reps[k]) {
                        rebuilt += prod(reps[k]->first, reps[k]->second) * classes[k];
                    }
                }
                if (auto diff = detail::first_difference(prod, rebuilt)) {
                    closure.passed = false;
                    closure.witness = Witness{i, j, diff->first, diff->second, "A_i A_j is not constant on a class"};
                }
            }
            if (j > i && commutes.passed) {
                const IntMatrix other = classes[j] * classes[i];
                if (auto diff = detail::first_difference(prod, other)) {
                    commutes.passed = false;
                    commutes.witness = Witness{i, j, diff->first, diff->second, "A_i A_j != A_j A_i"};
                }
            }
        }
    }
    report.axioms.push_back(closure);
    report.axioms.push_back(commutes);
    report.commutative = commutes.passed;
    return report;
}

inline std::string describe_failure(const SchemeReport& report)
{
    for (const auto& a : report.axioms) {
        if (!a.passed && a.required) {
            std::string msg = "axiom '" + a.name + "' failed";
            if (a.witness) {
                const auto& w = *a.witness;
                msg += " (i=" + std::to_string(w.i) + ", j=" + std::to_string(w.j) + ", x=" + std::to_string(w.x) +
                       ", y=" + std::to_string(w.y) + "): " + w.detail;
            }
            return msg;
        }
    }
    return "all axioms pass";
}

/// A verified association scheme {A_0, ..., A_d}. Immutable once built.
class AssociationScheme {
public:
    /// Verifies `classes` and throws VerificationError if any axiom fails.
    static AssociationScheme from_classes(std::vector<ClassMatrix> classes, SchemeOrigin origin = {})
    {
        const SchemeReport report = verify_scheme(classes);
        if (!report.passed()) {
            throw VerificationError("not an association scheme: " + describe_failure(report));
        }
        AssociationScheme s;
        s.classes_ = std::move(classes);
        s.origin_ = std::move(origin);
        s.commutative_ = report.commutative;
        s.symmetric_ = report.symmetric;
        const int n = s.vertex_count();
        s.relation_.assign(static_cast<std::size_t>(n) * n, 0);
        for (int c = 0; c < s.rank(); ++c) {
            s.valencies_.push_back(s.classes_[c].row(0).sum());
            for (int x = 0; x < n; ++x) {
                for (int y = 0; y < n; ++y) {
                    if (s.classes_[c](x, y) == 1) {
                        s.relation_[static_cast<std::size_t>(x) * n + y] = c;
                    }
                }
            }
        }
        return s;
    }

    int vertex_count() const { return static_cast<int>(classes_.front().rows()); }
    /// Number of nontrivial classes d.
    int class_count() const { return rank() - 1; }
    /// d + 1.
    int rank() const { return static_cast<int>(classes_.size()); }

    const std::vector<ClassMatrix>& classes() const { return classes_; }
    const ClassMatrix& operator[](int j) const { return classes_.at(j); }
    const std::vector<std::int64_t>& valencies() const { return valencies_; }
    bool commutative() const { return commutative_; }
    bool symmetric() const { return symmetric_; }
    const SchemeOrigin& origin() const { return origin_; }

    /// Class index of the pair (x, y).
    int relation(int x, int y) const { return relation_[static_cast<std::size_t>(x) * vertex_count() + y]; }

    /// Index j' with A_j^T = A_{j'}.
    int transpose_index(int j) const
    {
        const auto& rep = detail::representative(classes_.at(j));
        return relation(rep->second, rep->first);
    }

private:
    AssociationScheme() = default;

    std::vector<ClassMatrix> classes_;
    std::vector<std::int64_t> valencies_;
    std::vector<int> relation_;
    SchemeOrigin origin_;
    bool commutative_ = false;
    bool symmetric_ = false;
};

/// p[k][i][j] with A_i A_j = sum_k p[k][i][j] A_k.
using IntersectionTensor = Tensor3<std::int64_t>;

/// Reads each coefficient off one representative entry of A_k and confirms
/// the full matrix identity; throws VerificationError if a product leaves
/// the span.
inline IntersectionTensor intersection_numbers(const AssociationScheme& scheme)
{
    const int r = scheme.rank();
    const int n = scheme.vertex_count();
    IntersectionTensor p(r);
    std::vector<std::pair<int, int>> reps;
    for (int k = 0; k < r; ++k) {
        reps.push_back(*detail::representative(scheme[k]));
    }
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < r; ++j) {
            const IntMatrix prod = scheme[i] * scheme[j];
            IntMatrix rebuilt = IntMatrix::Zero(n, n);
            for (int k = 0; k < r; ++k) {
                p(k, i, j) = prod(reps[k].first, reps[k].second);
                rebuilt += p(k, i, j) * scheme[k];
            }
            if (rebuilt != prod) {
                throw VerificationError("A_" + std::to_string(i) + " A_" + std::to_string(j) +
                                        " is not in the span of the classes");
            }
        }
    }
    return p;
}

// ---------------------------------------------------------------------------
// Constructors

namespace detail {

inline void check_cap(std::int64_t count, std::size_t cap, const std::string& what)
{
    if (count < 0 || static_cast<std::size_t>(count) > cap) {
        throw InputError(what + " has " + (count < 0 ? std::string("too many") : std::to_string(count)) +
                         " vertices, above the vertex cap of " + std::to_string(cap));
    }
}

/// Builds class matrices from a relation function valued in [0, rank).
template <class Relation>
std::vector<ClassMatrix> classes_from_relation(int n, int rank, Relation&& rel)
{
    std::vector<ClassMatrix> classes(rank, ClassMatrix::Zero(n, n));
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            classes[rel(x, y)](x, y) = 1;
        }
    }
    return classes;
}

} // namespace detail

/// J(v, k): k-subsets of {1..v}, class i iff |a ∩ b| = k - i.
/// Vertices are the subsets in lexicographic order.
inline AssociationScheme build_johnson(int v, int k, std::size_t vertex_cap = default_vertex_cap)
{
    if (v < 2 || k < 1 || k > v - 1) {
        throw InputError("johnson needs v >= 2 and 1 <= k <= v-1 (got v=" + std::to_string(v) +
                         ", k=" + std::to_string(k) + ")");
    }
    if (v > 62) {
        throw InputError("johnson supports v <= 62");
    }
    detail::check_cap(binomial(v, k), vertex_cap, "J(" + std::to_string(v) + "," + std::to_string(k) + ")");

    std::vector<std::uint64_t> subsets;
    std::vector<int> pick(k);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
        std::uint64_t mask = 0;
        for (int e : pick) {
            mask |= std::uint64_t{1} << e;
        }
        subsets.push_back(mask);
        int pos = k - 1;
        while (pos >= 0 && pick[pos] == v - k + pos) {
            --pos;
        }
        if (pos < 0) {
            break;
        }
        ++pick[pos];
        for (int t = pos + 1; t < k; ++t) {
            pick[t] = pick[t - 1] + 1;
        }
    }
    const int n = static_cast<int>(subsets.size());
    const int d = std::min(k, v - k);
    auto classes = detail::classes_from_relation(n, d + 1, [&](int x, int y) {
        return k - std::popcount(subsets[x] & subsets[y]);
    });
    return AssociationScheme::from_classes(std::move(classes), {"johnson", {{"v", v}, {"k", k}}});
}

namespace detail {

using FqMatrix = std::vector<std::vector<int>>;

/// Rank over the prime field F_q by Gaussian elimination.
inline int rank_mod(FqMatrix m, int q)
{
    const int rows = static_cast<int>(m.size());
    const int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r) {
            if (m[r][c] % q != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) {
            continue;
        }
        std::swap(m[pivot], m[rank]);
        // q is prime, so the inverse is a^(q-2)
        int inv = 1;
        for (int t = 0; t < q - 2; ++t) {
            inv = inv * m[rank][c] % q;
        }
        for (auto& e : m[rank]) {
            e = e * inv % q;
        }
        for (int r = 0; r < rows; ++r) {
            if (r != rank && m[r][c] != 0) {
                const int f = m[r][c];
                for (int t = 0; t < cols; ++t) {
                    m[r][t] = ((m[r][t] - f * m[rank][t]) % q + q) % q;
                }
            }
        }
        ++rank;
    }
    return rank;
}

/// All dsub x v reduced row-echelon matrices of full rank over F_q, ordered
/// by pivot set (lexicographic) and then by free entries (lexicographic).
inline std::vector<FqMatrix> enumerate_rref(int q, int v, int dsub)
{
    std::vector<FqMatrix> out;
    std::vector<int> pivots(dsub);
    std::iota(pivots.begin(), pivots.end(), 0);
    while (true) {
        std::vector<std::pair<int, int>> free;
        for (int r = 0; r < dsub; ++r) {
            for (int c = pivots[r] + 1; c < v; ++c) {
                if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) {
                    free.emplace_back(r, c);
                }
            }
        }
        std::vector<int> digits(free.size(), 0);
        while (true) {
            FqMatrix m(dsub, std::vector<int>(v, 0));
            for (int r = 0; r < dsub; ++r) {
                m[r][pivots[r]] = 1;
            }
            for (std::size_t f = 0; f < free.size(); ++f) {
                m[free[f].first][free[f].second] = digits[f];
            }
            out.push_back(std::move(m));
            int pos = static_cast<int>(digits.size()) - 1;
            while (pos >= 0 && digits[pos] == q - 1) {
                digits[pos] = 0;
                --pos;
            }
            if (pos < 0) {
                break;
            }
            ++digits[pos];
        }
        int pos = dsub - 1;
        while (pos >= 0 && pivots[pos] == v - dsub + pos) {
            --pos;
        }
        if (pos < 0) {
            break;
        }
        ++pivots[pos];
        for (int t = pos + 1; t < dsub; ++t) {
            pivots[t] = pivots[t - 1] + 1;
        }
    }
    return out;
}

} // namespace detail

/// J_q(v, dsub): dsub-dimensional subspaces of F_q^v, class i iff
/// dim(a ∩ b) = dsub - i. Subspaces are represented by their RREF bases.
inline AssociationScheme build_grassmann(int q, int v, int dsub, std::size_t vertex_cap = default_vertex_cap)
{
    if (q != 2 && q != 3) {
        throw InputError("grassmann supports field sizes 2 and 3 (got " + std::to_string(q) + ")");
    }
    if (v < 2 || dsub < 1 || dsub > v - 1 || v > 30) {
        throw InputError("grassmann needs 2 <= v <= 30 and 1 <= dsub <= v-1");
    }
    detail::check_cap(gaussian_binomial(q, v, dsub), vertex_cap,
                      "J_" + std::to_string(q) + "(" + std::to_string(v) + "," + std::to_string(dsub) + ")");
    const auto spaces = detail::enumerate_rref(q, v, dsub);
    const int n = static_cast<int>(spaces.size());
    const int d = std::min(dsub, v - dsub);
    auto classes = detail::classes_from_relation(n, d + 1, [&](int x, int y) {
        detail::FqMatrix stacked = spaces[x];
        stacked.insert(stacked.end(), spaces[y].begin(), spaces[y].end());
        const int meet = 2 * dsub - detail::rank_mod(std::move(stacked), q);
        return dsub - meet;
    });
    return AssociationScheme::from_classes(std::move(classes), {"grassmann", {{"q", q}, {"v", v}, {"d", dsub}}});
}

/// Validated group multiplication table: table[a][b] = a*b, identity at 0.
class GroupTable {
public:
    explicit GroupTable(std::vector<std::vector<int>> table) : table_(std::move(table))
    {
        const int n = order();
        if (n == 0) {
            throw InputError("group table is empty");
        }
        for (const auto& row : table_) {
            if (static_cast<int>(row.size()) != n) {
                throw InputError("group table is not square");
            }
            for (int e : row) {
                if (e < 0 || e >= n) {
                    throw InputError("group table entry " + std::to_string(e) + " out of range");
                }
            }
        }
        for (int a = 0; a < n; ++a) {
            if (table_[0][a] != a || table_[a][0] != a) {
                throw InputError("element 0 is not the identity (fails at " + std::to_string(a) + ")");
            }
        }
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b) {
                for (int c = 0; c < n; ++c) {
                    if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) {
                        throw InputError("group table is not associative at (" + std::to_string(a) + "," +
                                         std::to_string(b) + "," + std::to_string(c) + ")");
                    }
                }
            }
        }
        inverse_.assign(n, -1);
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b) {
                if (table_[a][b] == 0 && table_[b][a] == 0) {
                    inverse_[a] = b;
                    break;
                }
            }
            if (inverse_[a] < 0) {
                throw InputError("element " + std::to_string(a) + " has no inverse");
            }
        }
    }

    int order() const { return static_cast<int>(table_.size()); }
    int mul(int a, int b) const { return table_[a][b]; }
    int inverse(int a) const { return inverse_[a]; }
    const std::vector<std::vector<int>>& table() const { return table_; }

    std::vector<std::vector<int>> conjugacy_classes() const
    {
        const int n = order();
        std::vector<int> seen(n, 0);
        std::vector<std::vector<int>> classes;
        for (int x = 0; x < n; ++x) {
            if (seen[x]) {
                continue;
            }
            std::vector<int> cls;
            for (int g = 0; g < n; ++g) {
                const int c = mul(mul(g, x), inverse(g));
                if (!seen[c]) {
                    seen[c] = 1;
                    cls.push_back(c);
                }
            }
            std::sort(cls.begin(), cls.end());
            classes.push_back(std::move(cls));
        }
        return classes;
    }

private:
    std::vector<std::vector<int>> table_;
    std::vector<int> inverse_;
};

enum class OrbitMode { conjugation, trivial, explicit_orbits };

/// Group scheme: (x, y) in class j iff y x^{-1} lies in orbit C_j. Orbits are
/// ordered by their minimal element, so C_0 = {e}. `explicit_orbits` must be
/// a partition of G with {e} a part, closed under inversion, whose class sums
/// close under multiplication.
inline AssociationScheme build_group_scheme(const GroupTable& group, OrbitMode mode,
                                            std::vector<std::vector<int>> explicit_orbits = {})
{
    const int n = group.order();
    std::vector<std::vector<int>> orbits;
    switch (mode) {
    case OrbitMode::conjugation:
        orbits = group.conjugacy_classes();
        break;
    case OrbitMode::trivial:
        for (int g = 0; g < n; ++g) {
            orbits.push_back({g});
        }
        break;
    case OrbitMode::explicit_orbits: {
        orbits = std::move(explicit_orbits);
        std::vector<int> owner(n, -1);
        for (std::size_t o = 0; o < orbits.size(); ++o) {
            if (orbits[o].empty()) {
                throw InputError("explicit orbit " + std::to_string(o) + " is empty");
            }
            for (int g : orbits[o]) {
                if (g < 0 || g >= n) {
                    throw InputError("explicit orbit element " + std::to_string(g) + " out of range");
                }
                if (owner[g] >= 0) {
                    throw InputError("element " + std::to_string(g) + " appears in two orbits");
                }
                owner[g] = static_cast<int>(o);
            }
        }
        for (int g = 0; g < n; ++g) {
            if (owner[g] < 0) {
                throw InputError("element " + std::to_string(g) + " is in no orbit");
            }
        }
        if (orbits[owner[0]].size() != 1) {
            throw InputError("the identity must form its own orbit");
        }
        for (auto& o : orbits) {
            std::sort(o.begin(), o.end());
        }
        for (const auto& o : orbits) {
            std::vector<int> inv;
            for (int g : o) {
                inv.push_back(group.inverse(g));
            }
            std::sort(inv.begin(), inv.end());
            if (std::find(orbits.begin(), orbits.end(), inv) == orbits.end()) {
                throw InputError("explicit orbits are not closed under inversion");
            }
        }
        break;
    }
    }
    std::sort(orbits.begin(), orbits.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
    std::vector<int> orbit_of(n, -1);
    for (std::size_t o = 0; o < orbits.size(); ++o) {
        for (int g : orbits[o]) {
            orbit_of[g] = static_cast<int>(o);
        }
    }
    auto classes = detail::classes_from_relation(n, static_cast<int>(orbits.size()), [&](int x, int y) {
        return orbit_of[group.mul(y, group.inverse(x))];
    });
    const char* mode_name = mode == OrbitMode::conjugation ? "conjugation"
                            : mode == OrbitMode::trivial   ? "trivial"
                                                           : "explicit";
    SchemeOrigin origin{std::string("group-") + mode_name, {{"order", n}}};
    if (mode == OrbitMode::explicit_orbits) {
        const auto report = verify_scheme(classes);
        if (!report.passed()) {
            throw InputError("explicit orbits do not define an association scheme: " + describe_failure(report));
        }
    }
    return AssociationScheme::from_classes(std::move(classes), std::move(origin));
}

/// Distance matrices A_i (x ~ y at graph distance i) of a connected graph.
/// These form a scheme exactly when the graph is distance-regular.
inline std::vector<ClassMatrix> distance_classes(const Graph& g)
{
    const int n = g.vertex_count();
    std::vector<std::vector<int>> dist;
    int diameter = 0;
    for (int x = 0; x < n; ++x) {
        dist.push_back(g.distances_from(x));
        for (int d : dist.back()) {
            if (d < 0) {
                throw InputError("graph is disconnected");
            }
            diameter = std::max(diameter, d);
        }
    }
    return detail::classes_from_relation(n, diameter + 1, [&](int x, int y) { return dist[x][y]; });
}

inline AssociationScheme build_distance_scheme(const Graph& g, SchemeOrigin origin = {"distance", {}})
{
    return AssociationScheme::from_classes(distance_classes(g), std::move(origin));
}

/// {I, J - I} on n vertices.
inline AssociationScheme build_complete_scheme(int n)
{
    if (n < 2) {
        throw InputError("complete-graph scheme needs n >= 2");
    }
    return build_distance_scheme(make_complete(n), {"complete", {{"n", n}}});
}

inline AssociationScheme build_cycle_scheme(int n)
{
    return build_distance_scheme(make_cycle(n), {"cycle", {{"n", n}}});
}

} // namespace schemewalk
