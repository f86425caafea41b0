#pragma once

// JSON and CSV formats for schemes, tensors, graphs, Jacobi data, fusion
// rings and walk trajectories.

#include "schemewalk/fusion.hpp"
#include "schemewalk/graph.hpp"
#include "schemewalk/ifs.hpp"
#include "schemewalk/scheme.hpp"
#include "schemewalk/spectral.hpp"
#include "schemewalk/walks.hpp"

#include "json.hpp"

#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace schemewalk::io {

using nlohmann::json;

inline json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open " + path);
    }
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError("malformed JSON in " + path + ": " + e.what());
    }
}

inline void write_text_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw InputError("cannot write " + path);
    }
    out << text;
}

inline void write_json_file(const std::string& path, const json& j) { write_text_file(path, j.dump(2) + "\n"); }

/// Shortest decimal that round-trips (17 significant digits).
inline std::string format_double(double v)
{
    if (v == 0.0) {
        return "0"; // also folds -0
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// ---------------------------------------------------------------------------
// Tensors

template <class T>
json tensor_to_json(const Tensor3<T>& t)
{
    json out = json::array();
    for (int k = 0; k < t.extent(); ++k) {
        json plane = json::array();
        for (int i = 0; i < t.extent(); ++i) {
            json row = json::array();
            for (int j = 0; j < t.extent(); ++j) {
                if constexpr (std::is_same_v<T, std::uint8_t>) {
                    row.push_back(t(k, i, j) != 0);
                } else {
                    row.push_back(t(k, i, j));
                }
            }
            plane.push_back(std::move(row));
        }
        out.push_back(std::move(plane));
    }
    return out;
}

template <class T>
Tensor3<T> tensor_from_json(const json& j)
{
    if (!j.is_array()) {
        throw InputError("tensor must be a nested array");
    }
    const int r = static_cast<int>(j.size());
    Tensor3<T> t(r);
    for (int k = 0; k < r; ++k) {
        if (!j[k].is_array() || static_cast<int>(j[k].size()) != r) {
            throw InputError("tensor is not cubic");
        }
        for (int i = 0; i < r; ++i) {
            if (!j[k][i].is_array() || static_cast<int>(j[k][i].size()) != r) {
                throw InputError("tensor is not cubic");
            }
            for (int l = 0; l < r; ++l) {
                const auto& e = j[k][i][l];
                if (!e.is_number()) {
                    throw InputError("tensor entries must be numbers");
                }
                if constexpr (std::is_integral_v<T>) {
                    if (!e.is_number_integer()) {
                        throw InputError("tensor entries must be integers");
                    }
                }
                t(k, i, l) = e.get<T>();
            }
        }
    }
    return t;
}

inline json matrix_to_json(const RealMatrix& m)
{
    json out = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            row.push_back(m(r, c));
        }
        out.push_back(std::move(row));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Schemes

inline json scheme_to_json(const AssociationScheme& s)
{
    json classes = json::array();
    for (const auto& c : s.classes()) {
        json flat = json::array();
        for (Eigen::Index x = 0; x < c.rows(); ++x) {
            for (Eigen::Index y = 0; y < c.cols(); ++y) {
                flat.push_back(c(x, y));
            }
        }
        classes.push_back(std::move(flat));
    }
    json params = json::object();
    for (const auto& [k, v] : s.origin().params) {
        params[k] = v;
    }
    return {{"vertex_count", s.vertex_count()},
            {"classes", std::move(classes)},
            {"family", s.origin().family},
            {"params", std::move(params)},
            {"valencies", s.valencies()},
            {"commutative", s.commutative()},
            {"symmetric", s.symmetric()}};
}

/// Reads `classes` as flat row-major arrays of length n^2 or as n x n
/// nested arrays. Entries outside {0, 1} are rejected here.
inline std::vector<ClassMatrix> scheme_classes_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("vertex_count") || !j.contains("classes")) {
        throw InputError("scheme JSON needs vertex_count and classes");
    }
    if (!j["vertex_count"].is_number_integer() || j["vertex_count"].get<long long>() <= 0) {
        throw InputError("vertex_count must be a positive integer");
    }
    const int n = j["vertex_count"].get<int>();
    const auto& cls = j["classes"];
    if (!cls.is_array() || cls.empty()) {
        throw InputError("classes must be a nonempty array");
    }
    std::vector<ClassMatrix> out;
    for (std::size_t c = 0; c < cls.size(); ++c) {
        std::vector<json> flat;
        if (cls[c].is_array() && !cls[c].empty() && cls[c][0].is_array()) {
            for (const auto& row : cls[c]) {
                if (!row.is_array() || static_cast<int>(row.size()) != n) {
                    throw InputError("class " + std::to_string(c) + " has a row of the wrong length");
                }
                flat.insert(flat.end(), row.begin(), row.end());
            }
        } else if (cls[c].is_array()) {
            flat.assign(cls[c].begin(), cls[c].end());
        }
        if (static_cast<long long>(flat.size()) != static_cast<long long>(n) * n) {
            throw InputError("class " + std::to_string(c) + " does not have " + std::to_string(n) + "x" +
                             std::to_string(n) + " entries");
        }
        ClassMatrix m(n, n);
        for (int x = 0; x < n; ++x) {
            for (int y = 0; y < n; ++y) {
                const auto& e = flat[static_cast<std::size_t>(x) * n + y];
                if (!e.is_number_integer() || (e.get<long long>() != 0 && e.get<long long>() != 1)) {
                    throw InputError("class " + std::to_string(c) + " has entry " + e.dump() + " at (" +
                                     std::to_string(x) + "," + std::to_string(y) + "), expected 0 or 1");
                }
                m(x, y) = e.get<long long>();
            }
        }
        out.push_back(std::move(m));
    }
    return out;
}

inline json report_to_json(const SchemeReport& r)
{
    json axioms = json::array();
    for (const auto& a : r.axioms) {
        json e{{"name", a.name}, {"passed", a.passed}, {"required", a.required}};
        if (a.witness) {
            e["witness"] = {{"i", a.witness->i},
                            {"j", a.witness->j},
                            {"x", a.witness->x},
                            {"y", a.witness->y},
                            {"detail", a.witness->detail}};
        }
        axioms.push_back(std::move(e));
    }
    return {{"vertex_count", r.vertex_count},
            {"class_count", r.class_count},
            {"passed", r.passed()},
            {"commutative", r.commutative},
            {"symmetric", r.symmetric},
            {"axioms", std::move(axioms)}};
}

inline json krein_to_json(const KreinTensor& k, const BoseMesnerSpectral& s)
{
    return {{"vertex_count", s.vertex_count},
            {"multiplicities", s.multiplicities},
            {"eigenmatrix_P", matrix_to_json(s.eigenmatrix_P)},
            {"dual_eigenmatrix_Q", matrix_to_json(s.dual_eigenmatrix_Q)},
            {"seed", s.seed_used},
            {"integral_tol", k.integral_tol},
            {"all_integral", k.all_integral()},
            {"min_entry", k.min_entry()},
            {"q", tensor_to_json(k.q)},
            {"rounded", tensor_to_json(k.rounded)},
            {"integral", tensor_to_json(k.integral)}};
}

struct KreinFile {
    KreinTensor krein;
    std::vector<int> multiplicities;
};

inline KreinFile krein_from_json(const json& j, double integral_tol)
{
    if (!j.is_object() || !j.contains("q") || !j.contains("multiplicities")) {
        throw InputError("Krein JSON needs q and multiplicities");
    }
    KreinFile f;
    f.krein = make_krein_view(tensor_from_json<double>(j["q"]), integral_tol);
    try {
        f.multiplicities = j["multiplicities"].get<std::vector<int>>();
    } catch (const json::exception&) {
        throw InputError("multiplicities must be an integer array");
    }
    return f;
}

// ---------------------------------------------------------------------------
// Groups

struct GroupFile {
    std::vector<std::vector<int>> table;
    std::vector<std::vector<int>> orbits;
};

/// Either a bare n x n array, or {"table": ..., "orbits": [[...], ...]}.
inline GroupFile group_from_json(const json& j)
{
    GroupFile g;
    try {
        if (j.is_array()) {
            g.table = j.get<std::vector<std::vector<int>>>();
        } else if (j.is_object() && j.contains("table")) {
            g.table = j["table"].get<std::vector<std::vector<int>>>();
            if (j.contains("orbits")) {
                g.orbits = j["orbits"].get<std::vector<std::vector<int>>>();
            }
        } else {
            throw InputError("group JSON needs a table");
        }
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed group JSON: ") + e.what());
    }
    return g;
}

// ---------------------------------------------------------------------------
// Graphs

struct GraphSpec {
    Graph graph;
    std::string family = "explicit";
    std::optional<RootedTree> tree;
    /// Finite piece of an infinite graph; the outermost strata see the cut.
    bool truncated = false;
};

inline GraphSpec tree_spec(int degree, int depth, std::size_t cap)
{
    GraphSpec s;
    s.tree = make_regular_tree(degree, depth, cap);
    s.graph = s.tree->graph;
    s.family = "tree";
    s.truncated = true;
    return s;
}

inline GraphSpec graph_from_json(const json& j, std::size_t cap = default_vertex_cap)
{
    try {
        if (j.contains("family")) {
            const auto fam = j["family"].get<std::string>();
            if (fam == "tree") {
                return tree_spec(j.at("degree").get<int>(), j.at("depth").get<int>(), cap);
            }
            GraphSpec s;
            s.family = fam;
            if (fam == "cycle") {
                s.graph = make_cycle(j.at("n").get<int>());
            } else if (fam == "path") {
                s.graph = make_path(j.at("n").get<int>());
            } else if (fam == "complete") {
                s.graph = make_complete(j.at("n").get<int>());
            } else {
                throw InputError("unknown graph family '" + fam + "'");
            }
            return s;
        }
        GraphSpec s;
        s.graph = Graph::from_edges(j.at("vertex_count").get<int>(),
                                    j.at("edges").get<std::vector<std::pair<int, int>>>());
        return s;
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed graph JSON: ") + e.what());
    }
}

inline json graph_to_json(const Graph& g)
{
    json edges = json::array();
    for (auto [u, v] : g.edges()) {
        edges.push_back({u, v});
    }
    return {{"vertex_count", g.vertex_count()}, {"edges", std::move(edges)}};
}

// ---------------------------------------------------------------------------
// Jacobi data

inline json jacobi_to_json(const JacobiSequences& j) { return {{"omega", j.omega}, {"alpha", j.alpha}}; }

inline JacobiSequences jacobi_from_json(const json& j)
{
    try {
        JacobiSequences s{j.at("omega").get<std::vector<double>>(), j.at("alpha").get<std::vector<double>>()};
        s.validate();
        return s;
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed Jacobi JSON: ") + e.what());
    }
}

// ---------------------------------------------------------------------------
// Fusion

inline json ring_to_json(const FusionRing& r)
{
    return {{"labels", r.labels}, {"N", tensor_to_json(r.n_tensor)}, {"dual", r.dual}};
}

inline FusionRing ring_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("labels") || !j.contains("N")) {
        throw InputError("fusion ring JSON needs labels and N");
    }
    std::vector<std::string> labels;
    std::vector<int> dual;
    try {
        labels = j["labels"].get<std::vector<std::string>>();
        if (j.contains("dual")) {
            dual = j["dual"].get<std::vector<int>>();
        }
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed fusion ring JSON: ") + e.what());
    }
    auto n = tensor_from_json<std::int64_t>(j["N"]);
    return FusionRing::make(std::move(labels), std::move(n), std::move(dual), !j.value("non_commutative", false));
}

inline json model_to_json(const AnyonModelData& m)
{
    json out = ring_to_json(m.ring);
    out["S"] = matrix_to_json(m.s_matrix);
    json tw = json::array();
    for (const auto& t : m.twists) {
        tw.push_back({t.real(), t.imag()});
    }
    out["twists"] = std::move(tw);
    out["qdims"] = m.qdims;
    return out;
}

inline json fusion_report_to_json(const FusionReport& r, const FusionRing& ring)
{
    json axioms = json::array();
    for (const auto& a : r.axioms) {
        json e{{"name", a.name}, {"passed", a.passed}, {"required", a.required}};
        if (a.counterexample) {
            json labels = json::array();
            for (int idx : *a.counterexample) {
                if (idx >= 0 && idx < ring.rank()) {
                    labels.push_back(ring.labels[idx]);
                }
            }
            e["counterexample"] = std::move(labels);
            e["detail"] = a.detail;
        }
        axioms.push_back(std::move(e));
    }
    return {{"passed", r.passed()}, {"axioms", std::move(axioms)}};
}

inline json verlinde_to_json(const VerlindeReport& r)
{
    json out{{"passed", r.passed()},
             {"unitary", r.unitary},
             {"unitarity_defect", r.unitarity_defect},
             {"reproduces_tensor", r.reproduces},
             {"max_tensor_error", r.max_tensor_error},
             {"columns_are_eigenvectors", r.eigenvectors},
             {"max_eigen_error", r.max_eigen_error}};
    if (r.first_tensor_mismatch) {
        out["first_tensor_mismatch"] = *r.first_tensor_mismatch;
    }
    if (r.first_eigen_mismatch) {
        out["first_eigen_mismatch"] = *r.first_eigen_mismatch;
    }
    return out;
}

inline json krein_view_to_json(const KreinFusionView& v)
{
    json dev = json::array();
    for (const auto& d : v.non_integral) {
        dev.push_back({{"k", d.k}, {"i", d.i}, {"j", d.j}, {"value", d.value}, {"deviation", d.deviation}});
    }
    json out{{"normalization", v.name},
             {"integral", v.integral},
             {"nonnegative", v.nonnegative},
             {"accepted", v.accepted()},
             {"non_integral_entries", std::move(dev)},
             {"tensor", tensor_to_json(v.tensor)}};
    if (v.ring) {
        out["ring"] = ring_to_json(*v.ring);
        out["ring_report"] = fusion_report_to_json(*v.ring_report, *v.ring);
    }
    return out;
}

// ---------------------------------------------------------------------------
// CSV trajectories

template <class T>
std::string format_amplitude_part(const T& v)
{
    if constexpr (std::is_same_v<T, Rational>) {
        return v.str();
    } else {
        return format_double(static_cast<double>(v));
    }
}

/// Columns step,source,target,re,im,prob; rows by step then arc order.
/// Exact amplitudes print as reduced fractions.
template <class T>
void write_arc_csv(std::ostream& out, const std::vector<ArcState<T>>& snapshots, int first_step = 0)
{
    out << "step,source,target,re,im,prob\n";
    for (std::size_t t = 0; t < snapshots.size(); ++t) {
        const auto& s = snapshots[t];
        for (std::size_t a = 0; a < s.amplitudes.size(); ++a) {
            const auto& [u, v] = s.space->arc(a);
            const auto& amp = s.amplitudes[a];
            out << (first_step + static_cast<int>(t)) << ',' << u << ',' << v << ',';
            if constexpr (std::is_same_v<T, Complex>) {
                out << format_double(amp.real()) << ',' << format_double(amp.imag()) << ','
                    << format_double(std::norm(amp));
            } else {
                out << format_amplitude_part(amp) << ",0," << format_amplitude_part(T(amp * amp));
            }
            out << '\n';
        }
    }
}

/// Columns step,position,coin,re,im; rows by step, position, coin.
inline void write_line_csv(std::ostream& out, const std::vector<LineState>& snapshots)
{
    out << "step,position,coin,re,im\n";
    for (std::size_t t = 0; t < snapshots.size(); ++t) {
        const auto& s = snapshots[t];
        for (std::size_t i = 0; i < s.amplitudes.size(); ++i) {
            for (int c = 0; c < 2; ++c) {
                out << t << ',' << (s.lo + static_cast<int>(i)) << ',' << c << ','
                    << format_double(s.amplitudes[i][c].real()) << ',' << format_double(s.amplitudes[i][c].imag())
                    << '\n';
            }
        }
    }
}

} // namespace schemewalk::io
