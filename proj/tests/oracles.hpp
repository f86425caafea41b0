#pragma once

// Independent reference computations used by the tests. Deliberately naive:
// direct counting and dense matrices, no shared code paths with the library.

#include "schemewalk/schemewalk.hpp"

#include <algorithm>
#include <array>
#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

namespace oracle {

using schemewalk::AssociationScheme;
using schemewalk::Graph;

/// p^k_ij by counting z with (x,z) in R_i and (z,y) in R_j, for every (x,y)
/// in R_k. Returns nullopt if the count is not constant on some class.
inline std::optional<schemewalk::Tensor3<std::int64_t>> triple_count(const std::vector<schemewalk::ClassMatrix>& cls)
{
    const int r = static_cast<int>(cls.size());
    const int n = static_cast<int>(cls[0].rows());
    std::vector<int> rel(n * n, -1);
    for (int c = 0; c < r; ++c) {
        for (int x = 0; x < n; ++x) {
            for (int y = 0; y < n; ++y) {
                if (cls[c](x, y) != 0) {
                    rel[x * n + y] = c;
                }
            }
        }
    }
    schemewalk::Tensor3<std::int64_t> p(r, -1);
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            const int k = rel[x * n + y];
            std::vector<std::int64_t> counts(r * r, 0);
            for (int z = 0; z < n; ++z) {
                ++counts[rel[x * n + z] * r + rel[z * n + y]];
            }
            for (int i = 0; i < r; ++i) {
                for (int j = 0; j < r; ++j) {
                    auto& slot = p(k, i, j);
                    if (slot == -1) {
                        slot = counts[i * r + j];
                    } else if (slot != counts[i * r + j]) {
                        return std::nullopt;
                    }
                }
            }
        }
    }
    return p;
}

/// Symmetric group S_3 as permutations of {0,1,2}, identity first, with the
/// multiplication table (a*b)(i) = a(b(i)).
inline std::vector<std::vector<int>> s3_table()
{
    std::vector<std::array<int, 3>> perms;
    std::array<int, 3> p{0, 1, 2};
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    std::vector<std::vector<int>> table(6, std::vector<int>(6));
    for (int a = 0; a < 6; ++a) {
        for (int b = 0; b < 6; ++b) {
            std::array<int, 3> c{};
            for (int i = 0; i < 3; ++i) {
                c[i] = perms[a][perms[b][i]];
            }
            table[a][b] = static_cast<int>(std::find(perms.begin(), perms.end(), c) - perms.begin());
        }
    }
    return table;
}

/// Cyclic group Z_n.
inline std::vector<std::vector<int>> cyclic_table(int n)
{
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            t[a][b] = (a + b) % n;
        }
    }
    return t;
}

/// Number of d-dimensional subspaces of F_q^v, by collecting the spans of
/// all d-tuples of vectors (vectors encoded base q). Small cases only.
inline std::int64_t count_subspaces(int q, int v, int d)
{
    int total = 1;
    for (int i = 0; i < v; ++i) {
        total *= q;
    }
    auto add = [&](int a, int b) {
        int out = 0;
        int place = 1;
        for (int i = 0; i < v; ++i) {
            out += ((a / place % q + b / place % q) % q) * place;
            place *= q;
        }
        return out;
    };
    auto scale = [&](int a, int s) {
        int out = 0;
        int place = 1;
        for (int i = 0; i < v; ++i) {
            out += (a / place % q * s % q) * place;
            place *= q;
        }
        return out;
    };
    std::map<std::vector<int>, int> seen;
    std::vector<int> pick(d, 0);
    auto span = [&]() {
        std::vector<int> s{0};
        for (int g : pick) {
            std::vector<int> next;
            for (int x : s) {
                for (int c = 0; c < q; ++c) {
                    next.push_back(add(x, scale(g, c)));
                }
            }
            std::sort(next.begin(), next.end());
            next.erase(std::unique(next.begin(), next.end()), next.end());
            s = next;
        }
        return s;
    };
    std::int64_t expected_size = 1;
    for (int i = 0; i < d; ++i) {
        expected_size *= q;
    }
    std::function<void(int)> rec = [&](int i) {
        if (i == d) {
            auto s = span();
            if (static_cast<std::int64_t>(s.size()) == expected_size) {
                seen[s] = 1;
            }
            return;
        }
        for (int x = 0; x < total; ++x) {
            pick[i] = x;
            rec(i + 1);
        }
    };
    rec(0);
    return static_cast<std::int64_t>(seen.size());
}

/// Closed walks of length m at `base` from dense integer matrix powers.
inline std::vector<std::int64_t> closed_walks(const Graph& g, int base, int m_max)
{
    const auto a = g.adjacency();
    schemewalk::IntMatrix power = schemewalk::IntMatrix::Identity(a.rows(), a.cols());
    std::vector<std::int64_t> out;
    for (int m = 0; m <= m_max; ++m) {
        out.push_back(power(base, base));
        power = power * a;
    }
    return out;
}

/// Dense Grover evolution operator U = S C on arcs in lexicographic order,
/// assembled from its matrix elements: <(v,w)| U |(u,x)> is nonzero only
/// when w = u, and then equals 2/deg(u) - [x == v].
inline Eigen::MatrixXd dense_grover(const Graph& g)
{
    std::vector<std::pair<int, int>> arcs;
    for (int u = 0; u < g.vertex_count(); ++u) {
        for (int v : g.neighbors(u)) {
            arcs.emplace_back(u, v);
        }
    }
    const auto m = static_cast<Eigen::Index>(arcs.size());
    Eigen::MatrixXd u = Eigen::MatrixXd::Zero(m, m);
    for (Eigen::Index to = 0; to < m; ++to) {
        for (Eigen::Index from = 0; from < m; ++from) {
            const auto [fu, fx] = arcs[from];
            const auto [tv, tw] = arcs[to];
            if (tw == fu) {
                u(to, from) = 2.0 / g.degree(fu) - (fx == tv ? 1.0 : 0.0);
            }
        }
    }
    return u;
}

/// Coined line walk as one dense matrix on positions -steps..steps.
inline Eigen::VectorXcd dense_line_walk(const Eigen::Matrix2cd& coin, std::complex<double> c0,
                                        std::complex<double> c1, int steps)
{
    const int width = 2 * steps + 1;
    const int dim = 2 * width;
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(dim, dim);
    auto idx = [&](int pos, int c) { return 2 * (pos + steps) + c; };
    for (int pos = -steps; pos <= steps; ++pos) {
        for (int from = 0; from < 2; ++from) {
            for (int to = 0; to < 2; ++to) {
                const int dest = pos + (to == 0 ? 1 : -1);
                if (dest < -steps || dest > steps) {
                    continue;
                }
                u(idx(dest, to), idx(pos, from)) += coin(to, from);
            }
        }
    }
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(dim);
    psi(idx(0, 0)) = c0;
    psi(idx(0, 1)) = c1;
    for (int t = 0; t < steps; ++t) {
        psi = u * psi;
    }
    return psi;
}

} // namespace oracle
