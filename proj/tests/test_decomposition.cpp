#include <gtest/gtest.h>

#include <random>

#include "support.hpp"
#include "thickness/thickness.hpp"

using namespace thickness;

namespace {

SurfaceDescriptor surface(bool orientable, int genus) {
  SurfaceDescriptor s;
  s.orientable = orientable;
  s.genus = genus;
  s.euler_characteristic = orientable ? 2 - 2 * genus : 2 - genus;
  return s;
}

std::vector<std::pair<int, int>> pairs_of(const Graph& g, const std::vector<EdgeId>& ids) {
  std::vector<std::pair<int, int>> out;
  for (EdgeId id : ids) out.push_back({g.edge(id).u, g.edge(id).v});
  return out;
}

// Layer count within the claimed bound, claimed bound equal to the report's
// effective value, and an independent verification.
void expect_conforming(const Embedding& e, const Decomposition& dec) {
  auto rep = verify_decomposition(e.graph(), dec);
  for (const auto& c : rep.checks) EXPECT_TRUE(c.ok) << c.name << ": " << c.detail;
  EXPECT_LE(dec.layer_count(), dec.claimed_bound) << dec.method;
  auto entry = bounds_report(e).find(dec.bound_name);
  ASSERT_NE(entry, nullptr) << dec.bound_name;
  EXPECT_EQ(entry->effective, dec.claimed_bound);
  for (const auto& h : dec.helpers) EXPECT_FALSE(e.graph().has_edge(h.id));
}

Embedding bouquet3_torus() {
  // Hexagonal fundamental polygon: loops a, b, c with rotation a b c a' b' c'.
  RotationSystem rs;
  rs.graph = Graph(1, {{0, 0, 0}, {1, 0, 0}, {2, 0, 0}}, true);
  rs.rotation = {{{0, 0}, {1, 0}, {2, 0}, {0, 1}, {1, 1}, {2, 1}}};
  return Embedding(rs);
}

}  // namespace

TEST(BoundsReport, TorusValues) {
  auto rep = bounds_report(surface(true, 1));
  EXPECT_EQ(rep.find("genus-plus-one")->effective, 2);
  const auto* deg = rep.find("orientable-degeneracy");
  EXPECT_DOUBLE_EQ(deg->raw, 3.0);
  EXPECT_EQ(deg->effective, 3);
  EXPECT_EQ(rep.find("torus-outer")->effective, 3);
  EXPECT_EQ(*rep.best(Goal::Thickness), 2);
  EXPECT_EQ(*rep.best(Goal::Outerthickness), 3);
}

TEST(BoundsReport, GenusTwoValues) {
  auto rep = bounds_report(surface(true, 2));
  EXPECT_EQ(rep.find("genus-plus-one")->effective, 3);
  const auto* deg = rep.find("orientable-degeneracy");
  EXPECT_NEAR(deg->raw, 3 + std::sqrt(3.0), 1e-12);
  EXPECT_EQ(deg->effective, 4);
  EXPECT_EQ(*rep.best(Goal::Thickness), 3);
  EXPECT_EQ(rep.find("torus-outer"), nullptr);
}

TEST(BoundsReport, ProjectivePlaneValues) {
  auto rep = bounds_report(surface(false, 1));
  EXPECT_EQ(rep.find("nonorientable-degeneracy")->effective, 2);
  EXPECT_EQ(rep.find("genus-plus-one"), nullptr);
}

TEST(BoundsReport, ThresholdsMatchBudgets) {
  // Degeneracy threshold d gives d forest layers plus the disk layer(s).
  for (int g = 1; g <= 12; ++g) {
    auto s = surface(true, g);
    auto rep = bounds_report(s);
    EXPECT_EQ(degeneracy_threshold(s, Goal::Thickness) + 1,
              rep.find("orientable-degeneracy")->effective) << g;
    EXPECT_EQ(degeneracy_threshold(s, Goal::Outerthickness) + 2,
              rep.find("orientable-outer-degeneracy")->effective) << g;
  }
  for (int k = 1; k <= 12; ++k) {
    auto s = surface(false, k);
    auto rep = bounds_report(s);
    EXPECT_EQ(degeneracy_threshold(s, Goal::Thickness) + 1,
              rep.find("nonorientable-degeneracy")->effective) << k;
    EXPECT_EQ(degeneracy_threshold(s, Goal::Outerthickness) + 2,
              rep.find("nonorientable-outer-degeneracy")->effective) << k;
  }
}

TEST(DegeneracyPeel, Examples) {
  auto tree = Graph::from_pairs(6, {{0, 1}, {1, 2}, {1, 3}, {3, 4}, {4, 5}});
  auto rec = degeneracy_peel(tree, 1);
  EXPECT_TRUE(rec.core_vertices.empty());
  int recorded = 0;
  for (const auto& s : rec.steps) recorded += static_cast<int>(s.edges.size());
  EXPECT_EQ(recorded, 5);

  auto k5 = Graph::complete(5);
  auto core = degeneracy_peel(k5, 3);
  EXPECT_EQ(core.core_vertices.size(), 5u);
  EXPECT_EQ(core.core_edges.size(), 10u);
  EXPECT_TRUE(core.steps.empty());

  auto all = degeneracy_peel(k5, 4);
  EXPECT_TRUE(all.core_vertices.empty());
  std::vector<int> sizes;
  for (const auto& s : all.steps) sizes.push_back(static_cast<int>(s.edges.size()));
  EXPECT_EQ(sizes, (std::vector<int>{4, 3, 2, 1, 0}));
}

TEST(ForestPartition, SingleVertexGivesOneEdgePerForest) {
  auto star = Graph::from_pairs(4, {{0, 1}, {0, 2}, {0, 3}});
  PeelRecord rec;
  rec.d = 3;
  rec.steps = {{0, {0, 1, 2}}};
  auto f = forest_partition(star, rec);
  EXPECT_EQ(f, (std::vector<std::vector<EdgeId>>{{0}, {1}, {2}}));
}

TEST(ForestPartition, PathGoesToOneForest) {
  auto path = Graph::from_pairs(3, {{0, 1}, {1, 2}});
  auto rec = degeneracy_peel(path, 1);
  auto f = forest_partition(path, rec);
  ASSERT_EQ(f.size(), 1u);
  EXPECT_EQ(f[0].size(), 2u);
  EXPECT_TRUE(ref::is_forest(3, pairs_of(path, f[0])));
}

TEST(ForestPartition, K5IntoFourForests) {
  auto k5 = Graph::complete(5);
  auto f = forest_partition(k5, degeneracy_peel(k5, 4));
  ASSERT_EQ(f.size(), 4u);
  std::set<EdgeId> all;
  for (const auto& part : f) {
    EXPECT_TRUE(ref::is_forest(5, pairs_of(k5, part)));
    for (EdgeId e : part) EXPECT_TRUE(all.insert(e).second);
  }
  EXPECT_EQ(all.size(), 10u);
}

TEST(ForestPartition, RejectsBadRecords) {
  auto star = Graph::from_pairs(4, {{0, 1}, {0, 2}, {0, 3}});
  PeelRecord over;
  over.d = 2;
  over.steps = {{0, {0, 1, 2}}};
  EXPECT_THROW(forest_partition(star, over), Error);
  PeelRecord partial;
  partial.d = 3;
  partial.steps = {{0, {0, 1}}};
  EXPECT_THROW(forest_partition(star, partial), Error);
}

// Forest decomposition property: 1000 random graphs and thresholds.
TEST(ForestPartition, RandomPeelReplayProperty) {
  std::mt19937_64 rng(34);
  int merged_checks = 0;
  for (int run = 0; run < 1000; ++run) {
    const int n = 5 + static_cast<int>(rng() % 8);
    const int d = 1 + static_cast<int>(rng() % 4);
    std::vector<std::pair<int, int>> all;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) all.push_back({u, v});
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(rng() % (all.size() + 1));
    auto g = Graph::from_pairs(n, all);
    auto rec = degeneracy_peel(g, d);
    auto forests = forest_partition(g, rec);
    ASSERT_EQ(static_cast<int>(forests.size()), d);
    std::set<VertexId> core(rec.core_vertices.begin(), rec.core_vertices.end());
    // Core has minimum degree above d.
    std::map<VertexId, int> cdeg;
    for (EdgeId e : rec.core_edges) {
      ++cdeg[g.edge(e).u];
      ++cdeg[g.edge(e).v];
    }
    for (VertexId v : core) EXPECT_GT(cdeg[v], d);
    for (const auto& f : forests) {
      auto ps = pairs_of(g, f);
      ASSERT_TRUE(ref::is_forest(n, ps)) << "run " << run;
      for (const auto& comp : ref::forest_components(n, ps)) {
        int meet = 0;
        for (int v : comp) meet += core.count(v) ? 1 : 0;
        EXPECT_LE(meet, 1) << "run " << run;
      }
    }
    // Split the core into d planar layers when a quick search finds one,
    // then each Q_i with F_i must still be planar.
    PartitionSearchOptions opt;
    opt.max_nodes = 20000;
    auto core_pairs = pairs_of(g, rec.core_edges);
    auto r = search_partition(n, core_pairs, d, LayerClass::Planar, opt);
    if (!r.assignment) continue;
    for (int i = 0; i < d; ++i) {
      std::vector<EdgeId> layer = forests[i];
      for (std::size_t j = 0; j < core_pairs.size(); ++j)
        if ((*r.assignment)[j] == i) layer.push_back(rec.core_edges[j]);
      EXPECT_TRUE(certified(g.edge_subgraph(layer), LayerClass::Planar)) << "run " << run;
    }
    ++merged_checks;
  }
  EXPECT_GT(merged_checks, 500);
}

TEST(BiconnectedBlocks, TwoTrianglesAndABridge) {
  auto g = Graph::from_pairs(6, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 3}});
  auto blocks = biconnected_blocks(g);
  ASSERT_EQ(blocks.size(), 3u);
  EXPECT_EQ(blocks[0], (std::set<EdgeId>{0, 1, 2}));
  EXPECT_EQ(blocks[1], (std::set<EdgeId>{3}));
  EXPECT_EQ(blocks[2], (std::set<EdgeId>{4, 5, 6}));
}

TEST(GenusPeel, PlanarInputIsOneLayer) {
  Embedding k4 = complete_embedding(4);
  auto dec = thickness_genus_peel(k4);
  ASSERT_EQ(dec.layer_count(), 1);
  EXPECT_EQ(dec.layers[0].edges.size(), 6u);
  expect_conforming(k4, dec);
}

TEST(GenusPeel, K7TorusTwoLayers) {
  Embedding k7 = k7_torus();
  auto dec = thickness_genus_peel(k7);
  EXPECT_EQ(dec.layer_count(), 2);
  EXPECT_EQ(dec.claimed_bound, 2);
  expect_conforming(k7, dec);
}

TEST(GenusPeel, BouquetFitsOneLayer) {
  // Both loops at a single vertex form a planar multigraph.
  Embedding b = bouquet2_torus();
  auto dec = thickness_genus_peel(b);
  EXPECT_EQ(dec.layer_count(), 1);
  expect_conforming(b, dec);
}

TEST(GenusPeel, RejectsNonorientable) {
  Embedding e = random_embedding({7, 1, false, 3});
  EXPECT_THROW(thickness_genus_peel(e), Error);
}

TEST(Degeneracy, K7Torus) {
  Embedding k7 = k7_torus();
  auto t = thickness_degeneracy(k7);
  EXPECT_GE(t.layer_count(), 2);
  EXPECT_LE(t.layer_count(), 3);
  expect_conforming(k7, t);
  auto o = outerthickness_degeneracy(k7);
  EXPECT_LE(o.layer_count(), 5);
  EXPECT_EQ(o.claimed_bound, 5);
  expect_conforming(k7, o);
}

TEST(Degeneracy, RejectsSphere) {
  EXPECT_THROW(thickness_degeneracy(complete_embedding(4)), Error);
  EXPECT_THROW(outerthickness_degeneracy(complete_embedding(4)), Error);
}

TEST(Degeneracy, TwoEssentialEdgesGiveTwoLayers) {
  // Disk plus two essential edges: the essential part peels away entirely.
  int found = 0;
  for (int seed = 1; seed <= 200 && found < 5; ++seed) {
    Embedding e = random_embedding({6, 1, true, static_cast<std::uint64_t>(seed)});
    auto res = build_spanning_disk(e);
    if (res.essential.size() != 2 || !res.helpers.empty() || !res.reembedded.empty()) continue;
    if (biconnected_blocks(e.graph()).size() != 1) continue;
    ++found;
    auto dec = thickness_degeneracy(e);
    EXPECT_EQ(dec.layer_count(), 2) << seed;
    expect_conforming(e, dec);
  }
  EXPECT_GT(found, 0);
}

TEST(Degeneracy, CoreFreeLayersAreDiskPlusForests) {
  for (int seed = 1; seed <= 30; ++seed) {
    Embedding e = random_embedding({8, 2, true, static_cast<std::uint64_t>(seed)});
    auto dec = thickness_degeneracy(e);
    expect_conforming(e, dec);
    EXPECT_LE(dec.layer_count(), 1 + degeneracy_threshold(e.surface(), Goal::Thickness));
  }
}

TEST(Classification, BouquetHasTwoUnitClasses) {
  auto res = build_spanning_disk(bouquet2_torus());
  auto classes = classify_essential_edges(res);
  ASSERT_EQ(classes.size(), 2u);
  std::set<Signature> sigs{classes[0].signature, classes[1].signature};
  EXPECT_TRUE(sigs.count({1, 0}));
  EXPECT_TRUE(sigs.count({0, 1}));
}

TEST(Classification, ThreeLoopsGiveThreeClasses) {
  Embedding b3 = bouquet3_torus();
  ref::Rotation r;
  r.n = 1;
  r.edges = {{0, 0, 1}, {0, 0, 1}, {0, 0, 1}};
  r.rot = {{{0, 0}, {1, 0}, {2, 0}, {0, 1}, {1, 1}, {2, 1}}};
  ASSERT_EQ(ref::euler_characteristic(r), 0);
  ASSERT_EQ(b3.surface().genus, 1);
  auto classes = classify_essential_edges(build_spanning_disk(b3));
  ASSERT_EQ(classes.size(), 3u);
  // One signature is the sum or difference of the other two.
  auto a = classes[0].signature, b = classes[1].signature, c = classes[2].signature;
  Signature sum{a[0] + b[0], a[1] + b[1]}, diff{a[0] - b[0], a[1] - b[1]};
  EXPECT_TRUE(canonical_up_to_sign(sum) == c || canonical_up_to_sign(diff) == c);
}

TEST(Classification, RandomTorusNeverExceedsThree) {
  int runs = 0;
  for (int seed = 1; seed <= 150; ++seed) {
    const int n = 5 + seed % 6;
    Embedding e = random_embedding({n, 1, true, static_cast<std::uint64_t>(seed)});
    auto res = build_spanning_disk(e);
    if (res.augmented.surface().genus != 1) continue;
    auto classes = classify_essential_edges(res);
    EXPECT_LE(classes.size(), 3u) << seed;
    std::size_t total = 0;
    for (const auto& k : classes) total += k.edges.size();
    EXPECT_EQ(total, res.essential.size());
    ++runs;
  }
  EXPECT_GE(runs, 100);
}

TEST(Torus, K7ThreeOuterplanarLayers) {
  Embedding k7 = k7_torus();
  auto dec = torus_outerthickness(k7);
  EXPECT_EQ(dec.method, "torus");
  ASSERT_EQ(dec.layer_count(), 3);
  std::size_t edges = 0;
  for (const auto& l : dec.layers) {
    EXPECT_EQ(l.cls, LayerClass::Outerplanar);
    edges += l.edges.size();
  }
  EXPECT_EQ(edges, 21u);
  expect_conforming(k7, dec);
  bool noted = false;
  for (const auto& n : dec.notes) noted = noted || n.find("essential classes") != std::string::npos;
  EXPECT_TRUE(noted);
}

TEST(Torus, BouquetAndHeawood) {
  for (Embedding e : {bouquet2_torus(), heawood_torus(), bouquet3_torus()}) {
    auto dec = torus_outerthickness(e);
    EXPECT_LE(dec.layer_count(), 3);
    expect_conforming(e, dec);
  }
}

TEST(Torus, GridsExercisePendantReductions) {
  int pendant_runs = 0;
  for (int r = 3; r <= 6; ++r)
    for (int c = 3; c <= 7; ++c)
      for (bool tri : {false, true}) {
        Embedding e = torus_grid(r, c, tri);
        auto dec = torus_outerthickness(e);
        EXPECT_EQ(dec.method, "torus") << r << "x" << c;
        expect_conforming(e, dec);
        for (const auto& n : dec.notes)
          if (n.find(" pendant") != std::string::npos && n.find(" 0 pendant") == std::string::npos)
            ++pendant_runs;
      }
  EXPECT_GT(pendant_runs, 0);
}

TEST(Torus, RejectsOtherSurfaces) {
  EXPECT_THROW(torus_outerthickness(complete_embedding(4)), Error);
  EXPECT_THROW(torus_outerthickness(random_embedding({8, 2, true, 1})), Error);
  EXPECT_THROW(torus_outerthickness(random_embedding({7, 2, false, 1})), Error);
}

TEST(ReduceClass, PendantAtInternalVertexIsRemoved) {
  // Class edges 0-5, 1-5, 2-6 with extremes on both sides; the edge 1-5 at
  // internal vertex 1 hangs off the path.
  auto g = Graph::from_pairs(7, {{0, 5}, {1, 5}, {2, 6}, {0, 6}});
  EssentialClass k;
  k.edges = {0, 1, 2, 3};
  k.u_side = {0, 1, 2};
  k.v_side = {5, 6};
  auto r = detail::reduce_class(g, k);
  EXPECT_EQ(r.pendants, std::vector<EdgeId>{1});
  EXPECT_EQ(r.kept, (std::set<EdgeId>{0, 2, 3}));
  EXPECT_TRUE(r.path_like);
}

TEST(Planar, SphereDecompositions) {
  Embedding k4 = complete_embedding(4);
  auto t = planar_decomposition(k4, Goal::Thickness);
  EXPECT_EQ(t.layer_count(), 1);
  expect_conforming(k4, t);
  auto o = planar_decomposition(k4, Goal::Outerthickness);
  EXPECT_EQ(o.layer_count(), 2);
  expect_conforming(k4, o);
}

TEST(Decompose, MethodSelectionAndErrors) {
  EXPECT_EQ(auto_method(k7_torus(), Goal::Outerthickness), "torus");
  EXPECT_EQ(auto_method(k7_torus(), Goal::Thickness), "genus-peel");
  EXPECT_EQ(auto_method(complete_embedding(4), Goal::Outerthickness), "planar");
  EXPECT_EQ(auto_method(random_embedding({7, 1, false, 2}), Goal::Thickness), "degeneracy");
  EXPECT_THROW(decompose(k7_torus(), Goal::Thickness, "torus"), Error);
  EXPECT_THROW(decompose(k7_torus(), Goal::Outerthickness, "genus-peel"), Error);
  EXPECT_THROW(decompose(k7_torus(), Goal::Thickness, "magic"), Error);
}

// Bound conformance over random surfaces: every applicable method.
class PipelineCorpus : public ::testing::TestWithParam<std::tuple<bool, int>> {};

TEST_P(PipelineCorpus, EveryMethodWithinItsBound) {
  auto [orientable, genus] = GetParam();
  for (int seed = 1; seed <= 8; ++seed) {
    const int n = 6 + seed % 4;
    Embedding e = random_embedding({n, genus, orientable, static_cast<std::uint64_t>(seed)});
    SCOPED_TRACE("seed " + std::to_string(seed));
    if (orientable) expect_conforming(e, thickness_genus_peel(e));
    expect_conforming(e, thickness_degeneracy(e));
    expect_conforming(e, outerthickness_degeneracy(e));
    if (orientable && genus == 1) expect_conforming(e, torus_outerthickness(e));
  }
}

INSTANTIATE_TEST_SUITE_P(Surfaces, PipelineCorpus,
                         ::testing::Combine(::testing::Bool(), ::testing::Values(1, 2, 3)));

TEST(Decompose, MultiBlockGraphMergesLayers) {
  // Two K7 torus copies would need genus 2; instead glue a pendant triangle
  // to K7 through a cut vertex on the sphere side of a block split.
  Embedding k7 = k7_torus();
  RotationSystem rs = k7.system();
  std::vector<Edge> edges(rs.graph.edges().begin(), rs.graph.edges().end());
  EdgeId next = rs.graph.next_edge_id();
  edges.push_back({next, 0, 7});
  edges.push_back({next + 1, 7, 8});
  edges.push_back({next + 2, 8, 0});
  rs.graph = Graph(9, edges);
  rs.rotation.resize(9);
  rs.rotation[0].push_back({next, 0});
  rs.rotation[0].push_back({next + 2, 1});
  rs.rotation[7] = {{next, 1}, {next + 1, 0}};
  rs.rotation[8] = {{next + 1, 1}, {next + 2, 0}};
  Embedding e(rs);
  ASSERT_EQ(e.surface().genus, 1);
  ASSERT_EQ(biconnected_blocks(e.graph()).size(), 2u);
  auto t = decompose(e, Goal::Outerthickness);
  EXPECT_EQ(t.layer_count(), 3);
  expect_conforming(e, t);
  auto p = decompose(e, Goal::Thickness);
  EXPECT_EQ(p.layer_count(), 2);
  expect_conforming(e, p);
}
