#include "oracles.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace schemewalk;
using nlohmann::json;

TEST(SchemeJson, RoundTripFlatAndNested)
{
    const auto s = build_johnson(5, 2);
    const auto j = io::scheme_to_json(s);
    EXPECT_EQ(j["vertex_count"], 10);
    EXPECT_EQ(j["family"], "johnson");
    EXPECT_EQ(j["params"]["v"], 5);
    const auto back = io::scheme_classes_from_json(j);
    EXPECT_EQ(back, s.classes());

    json nested = {{"vertex_count", 2}, {"classes", {{{1, 0}, {0, 1}}, {{0, 1}, {1, 0}}}}};
    const auto cls = io::scheme_classes_from_json(nested);
    ASSERT_EQ(cls.size(), 2u);
    EXPECT_EQ(cls[1](0, 1), 1);
}

TEST(SchemeJson, RejectsMalformedInput)
{
    EXPECT_THROW(io::scheme_classes_from_json(json{{"classes", json::array()}}), InputError);
    EXPECT_THROW(io::scheme_classes_from_json(json{{"vertex_count", 2}, {"classes", {{1, 0, 0}}}}), InputError);
    EXPECT_THROW(io::scheme_classes_from_json(json{{"vertex_count", 2}, {"classes", {{1, 0, 0, 2}}}}), InputError);
    EXPECT_THROW(io::scheme_classes_from_json(json{{"vertex_count", 2}, {"classes", {{1, 0, 0, 0.5}}}}), InputError);
    EXPECT_THROW(io::scheme_classes_from_json(json{{"vertex_count", -1}, {"classes", {{1}}}}), InputError);
}

TEST(SchemeJson, BadFileFromDataDirectory)
{
    const auto j = io::read_json_file(SCHEMEWALK_DATA_DIR "/bad.json");
    try {
        io::scheme_classes_from_json(j);
        FAIL() << "expected InputError";
    } catch (const InputError& e) {
        EXPECT_NE(std::string(e.what()).find("entry 2"), std::string::npos);
    }
}

TEST(Files, MissingAndMalformed)
{
    EXPECT_THROW(io::read_json_file("/nonexistent/file.json"), InputError);
    const auto path = std::filesystem::temp_directory_path() / "schemewalk_malformed.json";
    io::write_text_file(path, "{not json");
    EXPECT_THROW(io::read_json_file(path), InputError);
    std::filesystem::remove(path);
}

TEST(TensorJson, RoundTrip)
{
    const auto p = intersection_numbers(build_cycle_scheme(6));
    const auto j = io::tensor_to_json(p);
    EXPECT_EQ(io::tensor_from_json<std::int64_t>(j), p);
    // nested as [k][i][j]
    EXPECT_EQ(j[0][1][1], p(0, 1, 1));
    EXPECT_THROW(io::tensor_from_json<std::int64_t>(json{{{1, 2}}}), InputError);
    EXPECT_THROW(io::tensor_from_json<std::int64_t>(json{{{{0.5}}}}), InputError);
}

TEST(KreinJson, RoundTripThroughFile)
{
    const auto sp = primitive_idempotents(build_johnson(4, 2));
    const auto kr = krein_parameters(sp);
    const auto j = io::krein_to_json(kr, sp);
    const auto back = io::krein_from_json(json::parse(j.dump()), 1e-6);
    EXPECT_EQ(back.multiplicities, sp.multiplicities);
    EXPECT_EQ(back.krein.q, kr.q);
    EXPECT_EQ(j["all_integral"], kr.all_integral());
}

TEST(GraphJson, ExplicitAndFamilies)
{
    const auto star = io::graph_from_json(io::read_json_file(SCHEMEWALK_DATA_DIR "/star_irregular.json"));
    EXPECT_EQ(star.graph.vertex_count(), 4);
    EXPECT_EQ(star.graph.edge_count(), 3u);
    EXPECT_FALSE(star.truncated);
    const auto tree = io::graph_from_json(json{{"family", "tree"}, {"degree", 3}, {"depth", 2}});
    EXPECT_TRUE(tree.truncated);
    EXPECT_EQ(tree.graph.vertex_count(), 10);
    EXPECT_EQ(io::graph_from_json(json{{"family", "cycle"}, {"n", 5}}).graph.edge_count(), 5u);
    EXPECT_THROW(io::graph_from_json(json{{"family", "moebius"}}), InputError);
    EXPECT_THROW(io::graph_from_json(json{{"vertex_count", 2}, {"edges", {{0, 2}}}}), InputError);
    EXPECT_THROW(io::graph_from_json(json{{"vertex_count", 2}}), InputError);
    const auto j = io::graph_to_json(make_cycle(4));
    EXPECT_EQ(io::graph_from_json(j).graph.edges(), make_cycle(4).edges());
}

TEST(JacobiJson, RoundTripAndValidation)
{
    const auto b = JacobiSequences::bosonic(4);
    const auto back = io::jacobi_from_json(io::jacobi_to_json(b));
    EXPECT_EQ(back.omega, b.omega);
    EXPECT_EQ(back.alpha, b.alpha);
    EXPECT_THROW(io::jacobi_from_json(json{{"omega", {1.0, 0.0, 2.0}}, {"alpha", {0, 0, 0, 0}}}), InputError);
    EXPECT_THROW(io::jacobi_from_json(json{{"omega", {1.0}}}), InputError);
}

TEST(FusionJson, RoundTrip)
{
    const auto m = ising_model();
    const auto j = io::model_to_json(m);
    const auto ring = io::ring_from_json(j);
    EXPECT_EQ(ring.labels, m.ring.labels);
    EXPECT_EQ(ring.n_tensor, m.ring.n_tensor);
    EXPECT_EQ(ring.dual, m.ring.dual);
    ASSERT_EQ(j["twists"].size(), 3u);
    EXPECT_NEAR(j["twists"][1][1].get<double>(), std::sin(std::numbers::pi / 8), 1e-15);
    EXPECT_THROW(io::ring_from_json(json{{"labels", {"1"}}}), InputError);
    EXPECT_THROW(io::ring_from_json(json{{"labels", {"1", "a"}}, {"N", {{{1}}}}}), InputError);
}

TEST(GroupJson, BareTableOrObject)
{
    const auto a = io::group_from_json(json(oracle::cyclic_table(3)));
    EXPECT_EQ(a.table.size(), 3u);
    const auto b = io::group_from_json(json{{"table", oracle::cyclic_table(4)}, {"orbits", {{0}, {1, 3}, {2}}}});
    EXPECT_EQ(b.orbits.size(), 3u);
    EXPECT_THROW(io::group_from_json(json{{"orbits", {{0}}}}), InputError);
    EXPECT_THROW(io::group_from_json(json{{"table", "abc"}}), InputError);
}

TEST(Csv, GroverRowsAreExactFractions)
{
    auto space = std::make_shared<const ArcSpace>(make_regular_tree(3, 2).graph);
    const auto run = grover_walk_run(ArcState<Rational>::localized(space, 0, 1), 1);
    std::ostringstream out;
    io::write_arc_csv(out, run, 1);
    const auto text = out.str();
    EXPECT_EQ(text.substr(0, text.find('\n')), "step,source,target,re,im,prob");
    EXPECT_NE(text.find("2,1,0,-1/3,0,1/9\n"), std::string::npos);
    EXPECT_NE(text.find("2,2,0,2/3,0,4/9\n"), std::string::npos);
    EXPECT_NE(text.find("1,0,1,1,0,1\n"), std::string::npos);
}

TEST(Csv, LineRows)
{
    const auto run = line_walk_run(CoinSpec::hadamard(), LineState::localized(0, 1.0, 0.0), 1);
    std::ostringstream out;
    io::write_line_csv(out, run);
    const auto text = out.str();
    EXPECT_EQ(text.substr(0, text.find('\n')), "step,position,coin,re,im");
    EXPECT_NE(text.find("1,0,0,0,0\n"), std::string::npos);
    EXPECT_NE(text.find("1,1,0,0.70710678118654746,0\n"), std::string::npos);
}

TEST(Csv, DoubleFormatting)
{
    EXPECT_EQ(io::format_double(0.0), "0");
    EXPECT_EQ(io::format_double(-0.0), "0");
    EXPECT_EQ(io::format_double(0.5), "0.5");
    EXPECT_EQ(std::stod(io::format_double(0.1)), 0.1);
}
