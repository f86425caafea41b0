// schemewalk command line: schemes, interacting Fock spaces, quantum walks
// and fusion rings. Every subcommand writes a directory of artifacts.
//
// Exit codes: 0 success, 1 input error, 2 verification failure,
// 3 tridiagonality failure.

#include "schemewalk/schemewalk.hpp"

#include "CLI11.hpp"

#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using namespace schemewalk;
using io::json;

namespace {

enum ExitCode { ok = 0, input_failure = 1, verification_failure = 2, structure_failure = 3 };

fs::path prepare_out(const std::string& dir)
{
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) {
        throw InputError("cannot create output directory " + dir + ": " + ec.message());
    }
    return fs::path(dir);
}

std::vector<int> parse_int_list(const std::string& text, const std::string& what)
{
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size()) {
                throw std::invalid_argument(item);
            }
        } catch (const std::exception&) {
            throw InputError(what + ": '" + item + "' is not an integer");
        }
    }
    return out;
}

std::vector<std::string> split_labels(const std::string& text)
{
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        out.push_back(item);
    }
    return out;
}

// ---------------------------------------------------------------------------
// scheme

struct SchemeArgs {
    std::string out = ".";
    double integral_tol = 1e-6;
    std::size_t vertex_cap = default_vertex_cap;
    std::optional<std::uint64_t> seed;
    std::vector<int> johnson;
    std::vector<int> grassmann;
    std::string group_file;
    std::string orbits = "conjugation";
    std::string verify_file;
};

int write_scheme_artifacts(const AssociationScheme& s, const SchemeArgs& args)
{
    const auto dir = prepare_out(args.out);
    io::write_json_file(dir / "scheme.json", io::scheme_to_json(s));
    io::write_json_file(dir / "verification.json", io::report_to_json(verify_scheme(s.classes())));
    io::write_json_file(dir / "intersection.json",
                        {{"rank", s.rank()}, {"p", io::tensor_to_json(intersection_numbers(s))}});
    std::string krein_note = "krein.json";
    if (s.commutative() && s.symmetric()) {
        SpectralOptions opts;
        opts.seed = args.seed ? *args.seed : separation_seed_from_env();
        const auto spectral = primitive_idempotents(s, opts);
        const auto krein = krein_parameters(spectral, args.integral_tol);
        io::write_json_file(dir / "krein.json", io::krein_to_json(krein, spectral));
    } else {
        krein_note = s.commutative() ? "no Krein tensor (classes not symmetric)" : "no Krein tensor (not commutative)";
    }
    std::cout << s.origin().family << ": " << s.vertex_count() << " vertices, " << s.class_count()
              << " classes, verification passed; wrote scheme.json, verification.json, intersection.json";
    if (krein_note == "krein.json") {
        std::cout << ", krein.json";
    }
    std::cout << " to " << args.out;
    if (krein_note != "krein.json") {
        std::cout << " (" << krein_note << ")";
    }
    std::cout << "\n";
    return ok;
}

int run_scheme(CLI::App& cmd, const SchemeArgs& args)
{
    if (cmd.got_subcommand("johnson")) {
        if (args.johnson.size() != 2) {
            throw InputError("johnson needs v k");
        }
        return write_scheme_artifacts(build_johnson(args.johnson[0], args.johnson[1], args.vertex_cap), args);
    }
    if (cmd.got_subcommand("grassmann")) {
        if (args.grassmann.size() != 3) {
            throw InputError("grassmann needs q v d");
        }
        return write_scheme_artifacts(
            build_grassmann(args.grassmann[0], args.grassmann[1], args.grassmann[2], args.vertex_cap), args);
    }
    if (cmd.got_subcommand("group")) {
        const auto file = io::group_from_json(io::read_json_file(args.group_file));
        const GroupTable group(file.table);
        OrbitMode mode = OrbitMode::conjugation;
        if (args.orbits == "trivial") {
            mode = OrbitMode::trivial;
        } else if (args.orbits == "explicit") {
            mode = OrbitMode::explicit_orbits;
            if (file.orbits.empty()) {
                throw InputError("--orbits explicit needs an \"orbits\" array in " + args.group_file);
            }
        }
        return write_scheme_artifacts(build_group_scheme(group, mode, file.orbits), args);
    }
    // verify
    const auto j = io::read_json_file(args.verify_file);
    auto classes = io::scheme_classes_from_json(j);
    const auto report = verify_scheme(classes);
    if (!report.passed()) {
        const auto dir = prepare_out(args.out);
        io::write_json_file(dir / "verification.json", io::report_to_json(report));
        throw VerificationError("not an association scheme: " + describe_failure(report));
    }
    SchemeOrigin origin{j.value("family", std::string("explicit")), {}};
    return write_scheme_artifacts(AssociationScheme::from_classes(std::move(classes), origin), args);
}

// ---------------------------------------------------------------------------
// Graph selection shared by walk and ifs

struct GraphArgs {
    int tree_degree = 0;
    int depth = -1;
    std::string graph_file;
    int cycle = 0;
    std::size_t vertex_cap = default_vertex_cap;
};

void add_graph_options(CLI::App* cmd, GraphArgs& g)
{
    auto* tree = cmd->add_option("--tree-degree", g.tree_degree, "regular tree of this degree")->check(CLI::PositiveNumber);
    auto* file = cmd->add_option("--graph", g.graph_file, "graph JSON file")->check(CLI::ExistingFile);
    auto* cyc = cmd->add_option("--cycle", g.cycle, "cycle on this many vertices");
    tree->excludes(file)->excludes(cyc);
    file->excludes(cyc);
    cmd->add_option("--depth", g.depth, "tree depth")->check(CLI::NonNegativeNumber);
    cmd->add_option("--vertex-cap", g.vertex_cap, "refuse graphs with more vertices");
}

io::GraphSpec select_graph(const GraphArgs& g, int default_depth)
{
    if (g.tree_degree > 0) {
        return io::tree_spec(g.tree_degree, g.depth >= 0 ? g.depth : default_depth, g.vertex_cap);
    }
    if (!g.graph_file.empty()) {
        return io::graph_from_json(io::read_json_file(g.graph_file), g.vertex_cap);
    }
    if (g.cycle > 0) {
        io::GraphSpec s;
        s.graph = make_cycle(g.cycle);
        s.family = "cycle";
        return s;
    }
    throw InputError("choose a graph with --tree-degree, --graph or --cycle");
}

json graph_summary(const io::GraphSpec& spec)
{
    json j{{"family", spec.family}, {"vertex_count", spec.graph.vertex_count()}, {"edge_count", spec.graph.edge_count()}};
    if (spec.tree) {
        j["degree"] = spec.tree->graph.degree(0);
        j["depth"] = *std::max_element(spec.tree->depth.begin(), spec.tree->depth.end());
    }
    return j;
}

// ---------------------------------------------------------------------------
// walk

struct WalkArgs {
    GraphArgs graph;
    int steps = 0;
    bool vacuum_split = false;
    std::string initial_arc;
    bool use_float = false;
    std::string out = ".";
    // line walks
    std::string coin = "hadamard";
    double theta = 0.0;
    std::vector<double> coin_a{1.0, 0.0};
    std::vector<double> coin_b{0.0, 0.0};
    std::vector<double> split;
    std::string coin_state = "0";
};

template <class T>
int run_grover_typed(const WalkArgs& args, const io::GraphSpec& spec, std::pair<int, int> arc, int first_step)
{
    auto space = std::make_shared<const ArcSpace>(spec.graph);
    const auto run = grover_walk_run(ArcState<T>::localized(space, arc.first, arc.second), args.steps);
    const auto dir = prepare_out(args.out);
    {
        std::ostringstream csv;
        io::write_arc_csv(csv, run, first_step);
        io::write_text_file(dir / "walk.csv", csv.str());
    }
    const auto strat = stratify(spec.graph, arc.first);
    json norms = json::array();
    json exact_norms = json::array();
    json masses = json::array();
    double drift = 0.0;
    for (const auto& s : run) {
        const double n2 = as_double(s.norm_squared());
        norms.push_back(n2);
        drift = std::max(drift, std::abs(n2 - 1.0));
        if constexpr (AmplitudeTraits<T>::exact) {
            exact_norms.push_back(s.norm_squared().str());
        }
        const auto pos = position_distribution(s);
        std::vector<double> mass(strat.strata.size(), 0.0);
        for (int x = 0; x < spec.graph.vertex_count(); ++x) {
            if (strat.level[x] >= 0) {
                mass[strat.level[x]] += as_double(pos[x]);
            }
        }
        masses.push_back(mass);
    }
    json summary{{"walk", "grover"},
                 {"graph", graph_summary(spec)},
                 {"arc_count", space->size()},
                 {"initial_arc", {arc.first, arc.second}},
                 {"first_step", first_step},
                 {"steps", args.steps},
                 {"exact", AmplitudeTraits<T>::exact},
                 {"strata_base", arc.first},
                 {"norm_squared", norms},
                 {"max_norm_drift", drift},
                 {"stratum_mass", masses}};
    if constexpr (AmplitudeTraits<T>::exact) {
        summary["norm_squared_exact"] = exact_norms;
    }
    io::write_json_file(dir / "summary.json", summary);
    std::cout << "grover walk: " << args.steps << " steps on " << space->size() << " arcs, max norm drift " << drift
              << "; wrote walk.csv and summary.json to " << args.out << "\n";
    return ok;
}

int run_grover(const WalkArgs& args)
{
    if (args.steps < 0) {
        throw InputError("--steps must be nonnegative");
    }
    // the default tree is deep enough that the walk never reaches a leaf
    const auto spec = select_graph(args.graph, args.steps + 1);
    std::pair<int, int> arc;
    int first_step = 0;
    if (args.vacuum_split) {
        const int root = 0;
        if (spec.graph.degree(root) == 0) {
            throw InputError("vertex 0 has no arcs");
        }
        arc = {root, spec.graph.neighbors(root).front()};
        first_step = 1;
    } else if (!args.initial_arc.empty()) {
        const auto uv = parse_int_list(args.initial_arc, "--initial-arc");
        if (uv.size() != 2) {
            throw InputError("--initial-arc needs u,v");
        }
        arc = {uv[0], uv[1]};
    } else {
        const ArcSpace space(spec.graph);
        if (space.size() == 0) {
            throw InputError("graph has no arcs");
        }
        arc = space.arc(0);
    }
    if (args.use_float) {
        return run_grover_typed<double>(args, spec, arc, first_step);
    }
    return run_grover_typed<Rational>(args, spec, arc, first_step);
}

int run_line(const WalkArgs& args)
{
    if (args.steps < 0) {
        throw InputError("--steps must be nonnegative");
    }
    Complex c0(1.0, 0.0);
    Complex c1(0.0, 0.0);
    if (args.coin_state == "1") {
        c0 = 0.0;
        c1 = 1.0;
    } else if (args.coin_state == "sym") {
        c0 = Complex(1.0 / std::sqrt(2.0), 0.0);
        c1 = Complex(0.0, 1.0 / std::sqrt(2.0));
    } else if (args.coin_state != "0") {
        throw InputError("--coin-state must be 0, 1 or sym");
    }
    const auto init = LineState::localized(0, c0, c1);
    std::vector<LineState> run;
    json walk_desc;
    if (!args.split.empty()) {
        if (args.split.size() != 2) {
            throw InputError("--split needs theta1,theta2");
        }
        run = split_step_run(args.split[0], args.split[1], init, args.steps);
        walk_desc = {{"kind", "split-step"}, {"theta1", args.split[0]}, {"theta2", args.split[1]}};
    } else {
        CoinSpec coin;
        if (args.coin == "hadamard") {
            coin = CoinSpec::hadamard();
        } else if (args.coin == "rotation") {
            coin = CoinSpec::rotation(args.theta);
        } else if (args.coin == "unitary") {
            if (args.coin_a.size() != 2 || args.coin_b.size() != 2) {
                throw InputError("--coin-a and --coin-b take re,im");
            }
            coin = CoinSpec::unitary2x2(Complex(args.coin_a[0], args.coin_a[1]), Complex(args.coin_b[0], args.coin_b[1]));
        } else {
            throw InputError("unknown coin '" + args.coin + "' (hadamard, rotation, unitary)");
        }
        run = line_walk_run(coin, init, args.steps);
        walk_desc = {{"kind", "coined"}, {"coin", args.coin}};
    }
    const auto dir = prepare_out(args.out);
    {
        std::ostringstream csv;
        io::write_line_csv(csv, run);
        io::write_text_file(dir / "walk.csv", csv.str());
    }
    json norms = json::array();
    json masses = json::array();
    double drift = 0.0;
    for (const auto& s : run) {
        const double p = s.total_probability();
        norms.push_back(p);
        drift = std::max(drift, std::abs(p - 1.0));
        // strata of the line around the origin: |x| = 0, 1, 2, ...
        std::vector<double> mass(std::max(-s.lo, s.hi()) + 1, 0.0);
        for (int x = s.lo; x <= s.hi(); ++x) {
            mass[std::abs(x)] += std::norm(s.at(x)[0]) + std::norm(s.at(x)[1]);
        }
        masses.push_back(mass);
    }
    io::write_json_file(dir / "summary.json", {{"walk", walk_desc},
                                               {"steps", args.steps},
                                               {"coin_state", args.coin_state},
                                               {"norm_squared", norms},
                                               {"max_norm_drift", drift},
                                               {"stratum_mass", masses}});
    std::cout << "line walk: " << args.steps << " steps, max norm drift " << drift << "; wrote walk.csv and summary.json to "
              << args.out << "\n";
    return ok;
}

// ---------------------------------------------------------------------------
// ifs

struct IfsArgs {
    GraphArgs graph;
    int base = 0;
    int moments = 8;
    bool force_projection = false;
    double tol = 1e-10;
    std::string out = ".";
};

double frobenius(const IntMatrix& m) { return std::sqrt(static_cast<double>(m.squaredNorm())); }

int run_ifs(const IfsArgs& args)
{
    const auto spec = select_graph(args.graph, 6);
    const auto& g = spec.graph;
    const auto strat = stratify(g, args.base);
    const auto dir = prepare_out(args.out);

    io::write_json_file(dir / "strata.json", {{"base", strat.base},
                                             {"depth", strat.depth()},
                                             {"sizes", strat.sizes()},
                                             {"strata", strat.strata},
                                             {"unreachable", strat.unreachable},
                                             {"graph", graph_summary(spec)}});

    const auto qd = quantum_decompose(g, strat);
    io::write_json_file(dir / "decomposition.json", {{"raising_norm", frobenius(qd.raising)},
                                                    {"lowering_norm", frobenius(qd.lowering)},
                                                    {"diagonal_norm", frobenius(qd.diagonal)},
                                                    {"residual_norm", frobenius(qd.residual)},
                                                    {"adjoint_pair", qd.raising.transpose() == qd.lowering}});

    const auto mom = vacuum_moments(g, args.base, args.moments);
    json moments{{"requested", mom.requested}, {"vacuum", mom.values}, {"overflowed", mom.overflowed}};
    if (spec.truncated && spec.tree) {
        // closed walks of length m never feel the cut while m < 2 (depth + 1)
        moments["faithful_up_to"] = 2 * strat.depth() + 1;
    }

    JacobiOptions opts;
    opts.tolerance = args.tol;
    opts.force_projection = args.force_projection;
    JacobiResult jac;
    try {
        jac = jacobi_coefficients(g, strat, opts);
    } catch (const StructureError&) {
        io::write_json_file(dir / "moments.json", moments);
        throw;
    }
    JacobiSequences reported = jac.sequences;
    std::size_t levels = reported.alpha.size();
    if (spec.truncated) {
        // keep levels 0 .. depth-2, whose coefficients agree with the untruncated graph
        levels = reported.alpha.size() >= 2 ? reported.alpha.size() - 2 : 0;
        levels = std::max<std::size_t>(levels, 1);
        reported.alpha.resize(levels);
        reported.omega.resize(std::min(levels, reported.omega.size()));
    }
    io::write_json_file(dir / "jacobi.json", {{"omega", reported.omega},
                                             {"alpha", reported.alpha},
                                             {"closed", reported.closed()},
                                             {"truncated_graph", spec.truncated},
                                             {"tridiagonal", jac.tridiagonal},
                                             {"leakage", jac.leakage},
                                             {"max_leakage", jac.max_leakage},
                                             {"tolerance", args.tol}});
    try {
        const auto via = moments_from_jacobi(reported, args.moments);
        double diff = 0.0;
        for (std::size_t m = 0; m < mom.values.size(); ++m) {
            diff = std::max(diff, std::abs(via[m] - static_cast<double>(mom.values[m])));
        }
        moments["from_jacobi"] = via;
        moments["max_difference"] = diff;
    } catch (const InputError& e) {
        moments["from_jacobi_error"] = e.what();
    }
    io::write_json_file(dir / "moments.json", moments);

    std::ostringstream line;
    line << "omega = " << json(reported.omega).dump() << ", alpha = " << json(reported.alpha).dump()
         << ", moments = " << json(mom.values).dump();
    if (!jac.tridiagonal) {
        line << " (forced projection, max leakage " << jac.max_leakage << ")";
    }
    std::cout << line.str() << "\n";
    return ok;
}

// ---------------------------------------------------------------------------
// fusion

struct FusionArgs {
    std::string ring_file;
    std::string krein_file;
    std::vector<std::string> power;
    std::string trees;
    std::string total;
    double tol = 1e-6;
    std::string out = ".";
};

std::string display_label(const std::string& label)
{
    static const std::map<std::string, std::string> greek{{"sigma", "σ"}, {"psi", "ψ"}, {"tau", "τ"}};
    const auto it = greek.find(label);
    return it == greek.end() ? label : it->second;
}

/// "4σ", "2·1 + 2ψ", "0".
std::string render_element(const FusionRing& ring, const std::vector<std::int64_t>& v)
{
    std::string out;
    for (int c = 0; c < ring.rank(); ++c) {
        if (v[c] == 0) {
            continue;
        }
        if (!out.empty()) {
            out += " + ";
        }
        const auto name = display_label(ring.labels[c]);
        if (v[c] != 1) {
            out += std::to_string(v[c]);
            if (!name.empty() && std::isdigit(static_cast<unsigned char>(name[0]))) {
                out += "·";
            }
        }
        out += name;
    }
    return out.empty() ? "0" : out;
}

json ring_queries(const FusionRing& ring, const FusionArgs& args, bool ring_ok)
{
    json out = json::object();
    if (!args.power.empty()) {
        if (args.power.size() != 2) {
            throw InputError("--power takes a label and an exponent");
        }
        const int a = ring.index_of(args.power[0]);
        int n = 0;
        try {
            n = std::stoi(args.power[1]);
        } catch (const std::exception&) {
            throw InputError("--power exponent '" + args.power[1] + "' is not an integer");
        }
        if (n < 1 || n > 64) {
            throw InputError("--power exponent must be in 1..64");
        }
        json powers = json::array();
        for (int k = 1; k <= n; ++k) {
            const auto v = fusion_power(ring, a, k);
            powers.push_back({{"power", k},
                              {"expression", display_label(args.power[0]) + "^" + std::to_string(k)},
                              {"multiplicities", v},
                              {"value", render_element(ring, v)}});
        }
        out["powers"] = std::move(powers);
    }
    if (!args.trees.empty()) {
        if (args.total.empty()) {
            throw InputError("--trees needs --total");
        }
        std::vector<int> inputs;
        for (const auto& l : split_labels(args.trees)) {
            inputs.push_back(ring.index_of(l));
        }
        const auto space = fusion_tree_space(ring, inputs, ring.index_of(args.total), 1000);
        json basis = json::array();
        for (const auto& t : space.basis) {
            json internal = json::array();
            for (int e : t.internal) {
                internal.push_back(ring.labels[e]);
            }
            basis.push_back({{"internal", internal}, {"channel", t.channel}});
        }
        out["trees"] = {{"inputs", split_labels(args.trees)},
                        {"total", args.total},
                        {"dimension", space.dimension},
                        {"basis", basis},
                        {"basis_truncated", space.basis_truncated}};
        if (!ring_ok) {
            out["trees"]["note"] = "ring failed verification; counts use left-associated trees only";
        }
    } else if (!args.total.empty()) {
        throw InputError("--total needs --trees");
    }
    return out;
}

int finish_ring_report(json report, const FusionRing& ring, const FusionReport& rep, const FusionArgs& args)
{
    report["verification"] = io::fusion_report_to_json(rep, ring);
    if (rep.passed()) {
        report["quantum_dimensions"] = quantum_dimensions(ring);
    }
    report.update(ring_queries(ring, args, rep.passed()));
    const auto dir = prepare_out(args.out);
    io::write_json_file(dir / "report.json", report);
    if (!rep.passed()) {
        std::string failed;
        for (const auto& a : rep.axioms) {
            if (!a.passed && a.required) {
                failed = a.name;
                if (a.counterexample) {
                    std::string labels;
                    for (int idx : *a.counterexample) {
                        if (idx >= 0) {
                            labels += (labels.empty() ? "" : ",") + display_label(ring.labels[idx]);
                        }
                    }
                    failed += " at (" + labels + ")";
                }
                failed += a.detail.empty() ? "" : ": " + a.detail;
                break;
            }
        }
        throw VerificationError("fusion ring fails " + failed);
    }
    std::cout << "fusion ring of rank " << ring.rank() << " verified; d = " << json(report["quantum_dimensions"]).dump();
    if (report.contains("powers")) {
        std::cout << "; " << report["powers"].back()["expression"].get<std::string>() << " = "
                  << report["powers"].back()["value"].get<std::string>();
    }
    if (report.contains("trees")) {
        std::cout << "; tree space dimension " << report["trees"]["dimension"].get<std::int64_t>();
    }
    std::cout << "; wrote report.json to " << args.out << "\n";
    return ok;
}

int run_fusion(CLI::App& cmd, const FusionArgs& args)
{
    if (!args.krein_file.empty()) {
        if (cmd.got_subcommand("ising") || cmd.got_subcommand("verify")) {
            throw InputError("--from-krein cannot be combined with a ring subcommand");
        }
        const auto file = io::krein_from_json(io::read_json_file(args.krein_file), args.tol);
        const auto verdict = fusion_ring_from_krein(file.krein, file.multiplicities, args.tol);
        json report{{"source", args.krein_file},
                    {"tolerance", args.tol},
                    {"multiplicities", file.multiplicities},
                    {"views", {io::krein_view_to_json(verdict.raw), io::krein_view_to_json(verdict.rescaled),
                               io::krein_view_to_json(verdict.sqrt_rescaled)}}};
        json accepted = json::array();
        for (const auto* v : {&verdict.raw, &verdict.rescaled, &verdict.sqrt_rescaled}) {
            if (v->accepted()) {
                accepted.push_back(v->name);
                report["quantum_dimensions_" + v->name] = quantum_dimensions(*v->ring);
            }
        }
        report["accepted"] = accepted;
        const auto dir = prepare_out(args.out);
        io::write_json_file(dir / "report.json", report);
        if (accepted.empty()) {
            throw VerificationError("no normalization of the Krein tensor is a fusion ring (see report.json)");
        }
        std::cout << "Krein tensor accepted as a fusion ring under " << accepted.dump() << "; wrote report.json to "
                  << args.out << "\n";
        return ok;
    }
    if (cmd.got_subcommand("ising")) {
        const auto model = ising_model();
        json report = io::model_to_json(model);
        report["model"] = "ising";
        report["verlinde"] = io::verlinde_to_json(verlinde_check(model));
        report["s_unitarity_defect"] = model.unitarity_defect();
        json qutrit = json::array();
        for (const auto& pc : ising_qutrit_pair_charges()) {
            json labels = json::array();
            for (int c : pc) {
                labels.push_back(model.ring.labels[c]);
            }
            qutrit.push_back({{"pair_charges", labels},
                              {"valid", is_valid_paired_state(model.ring, std::vector<int>(6, 1), pc, 0)}});
        }
        report["six_sigma_qutrit"] = qutrit;
        return finish_ring_report(std::move(report), model.ring, verify_fusion_ring(model.ring), args);
    }
    if (cmd.got_subcommand("verify")) {
        const auto ring = io::ring_from_json(io::read_json_file(args.ring_file));
        json report = io::ring_to_json(ring);
        report["source"] = args.ring_file;
        return finish_ring_report(std::move(report), ring, verify_fusion_ring(ring), args);
    }
    throw InputError("fusion needs ising, verify <file> or --from-krein <file>");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Association schemes, interacting Fock spaces, quantum walks and fusion rings"};
    app.require_subcommand(1);

    SchemeArgs scheme_args;
    auto* scheme = app.add_subcommand("scheme", "build or verify an association scheme");
    scheme->require_subcommand(1);
    scheme->fallthrough();
    scheme->add_option("--out", scheme_args.out, "output directory");
    scheme->add_option("--integral-tol", scheme_args.integral_tol, "tolerance for integral Krein entries");
    scheme->add_option("--vertex-cap", scheme_args.vertex_cap, "refuse schemes with more vertices");
    scheme->add_option("--seed", scheme_args.seed, "idempotent separation seed (overrides SCHEMEWALK_SEED)");
    scheme->add_subcommand("johnson", "Johnson scheme J(v,k)")
        ->add_option("params", scheme_args.johnson, "v k")
        ->expected(2)
        ->required();
    scheme->add_subcommand("grassmann", "Grassmann scheme J_q(v,d)")
        ->add_option("params", scheme_args.grassmann, "q v d")
        ->expected(3)
        ->required();
    auto* group = scheme->add_subcommand("group", "group scheme from a multiplication table");
    group->add_option("table", scheme_args.group_file, "group JSON")->required()->check(CLI::ExistingFile);
    group->add_option("--orbits", scheme_args.orbits, "conjugation, trivial or explicit")
        ->check(CLI::IsMember({"conjugation", "trivial", "explicit"}));
    scheme->add_subcommand("verify", "verify a scheme JSON file")
        ->add_option("file", scheme_args.verify_file, "scheme JSON")
        ->required()
        ->check(CLI::ExistingFile);

    WalkArgs walk_args;
    auto* walk = app.add_subcommand("walk", "run a discrete-time quantum walk");
    walk->require_subcommand(1);
    auto* grover = walk->add_subcommand("grover", "Grover walk on the arcs of a graph");
    add_graph_options(grover, walk_args.graph);
    grover->add_option("--steps", walk_args.steps, "number of steps")->required();
    auto* vac = grover->add_flag("--vacuum-split", walk_args.vacuum_split, "unit amplitude on the first arc at vertex 0");
    grover->add_option("--initial-arc", walk_args.initial_arc, "u,v")->excludes(vac);
    grover->add_flag("--float", walk_args.use_float, "complex doubles instead of exact rationals");
    grover->add_option("--out", walk_args.out, "output directory");
    auto* line = walk->add_subcommand("line", "coined or split-step walk on the integer line");
    line->add_option("--steps", walk_args.steps, "number of steps")->required();
    line->add_option("--coin", walk_args.coin, "hadamard, rotation or unitary");
    line->add_option("--theta", walk_args.theta, "rotation angle");
    line->add_option("--coin-a", walk_args.coin_a, "re,im of a")->delimiter(',')->expected(2);
    line->add_option("--coin-b", walk_args.coin_b, "re,im of b")->delimiter(',')->expected(2);
    line->add_option("--split", walk_args.split, "theta1,theta2 for the split-step walk")->delimiter(',')->expected(2);
    line->add_option("--coin-state", walk_args.coin_state, "initial coin: 0, 1 or sym");
    line->add_option("--out", walk_args.out, "output directory");

    IfsArgs ifs_args;
    auto* ifs = app.add_subcommand("ifs", "interacting Fock space data of a stratified graph");
    add_graph_options(ifs, ifs_args.graph);
    ifs->add_option("--base", ifs_args.base, "base vertex");
    ifs->add_option("--moments", ifs_args.moments, "highest vacuum moment")->check(CLI::NonNegativeNumber);
    ifs->add_flag("--force-projection", ifs_args.force_projection, "project onto the tridiagonal part instead of failing");
    ifs->add_option("--tol", ifs_args.tol, "leakage tolerance");
    ifs->add_option("--out", ifs_args.out, "output directory");

    FusionArgs fusion_args;
    auto* fusion = app.add_subcommand("fusion", "fusion rings and the Ising model");
    fusion->fallthrough();
    fusion->add_option("--from-krein", fusion_args.krein_file, "Krein JSON (as written by scheme)")
        ->check(CLI::ExistingFile);
    fusion->add_option("--power", fusion_args.power, "label n: powers of a label up to n")->expected(2);
    fusion->add_option("--trees", fusion_args.trees, "comma-separated input labels");
    fusion->add_option("--total", fusion_args.total, "total charge of the trees");
    fusion->add_option("--tol", fusion_args.tol, "integrality tolerance for Krein entries");
    fusion->add_option("--out", fusion_args.out, "output directory");
    fusion->add_subcommand("ising", "built-in Ising model");
    fusion->add_subcommand("verify", "verify a fusion ring JSON file")
        ->add_option("file", fusion_args.ring_file, "ring JSON")
        ->required()
        ->check(CLI::ExistingFile);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? ok : input_failure;
    }

    try {
        if (*scheme) {
            return run_scheme(*scheme, scheme_args);
        }
        if (*walk) {
            return *grover ? run_grover(walk_args) : run_line(walk_args);
        }
        if (*ifs) {
            return run_ifs(ifs_args);
        }
        return run_fusion(*fusion, fusion_args);
    } catch (const StructureError& e) {
        std::cerr << "structure error: " << e.what() << "\n";
        return structure_failure;
    } catch (const VerificationError& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return verification_failure;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return input_failure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return input_failure;
    }
}
