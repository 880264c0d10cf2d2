#include <gtest/gtest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "support.hpp"
#include "thickness/io.hpp"
#include "thickness/thickness.hpp"

using namespace thickness;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string instance(const std::string& name) {
  return std::string(THICKNESS_INSTANCES) + "/" + name;
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("thickness-cli-" + std::to_string(::getpid()) + "-" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  // Exit status of the CLI; stdout and stderr land in out_ and err_.
  int run(const std::string& args) {
    const auto out = dir_ / "stdout", err = dir_ / "stderr";
    std::string cmd = std::string(THICKNESS_CLI) + " " + args + " >" + out.string() + " 2>" +
                      err.string();
    int status = std::system(cmd.c_str());
    out_ = slurp(out);
    err_ = slurp(err);
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  fs::path dir_;
  std::string out_, err_;
};

}  // namespace

TEST(ParseEmbedding, ShippedK7FileIsTorus) {
  auto p = parse_embedding(slurp(instance("k7-torus.txt")));
  EXPECT_EQ(p.name, "k7-torus");
  EXPECT_EQ(p.embedding.euler_characteristic(), 0);
  EXPECT_EQ(p.embedding.edge_count(), 21);
  EXPECT_TRUE(p.warnings.empty());
}

TEST(ParseEmbedding, DuplicateDartNamesLine) {
  const std::string text =
      "graph bad\nvertices 3\nedge 0 0 1\nedge 1 1 2\nedge 2 2 0\n"
      "rot 0: 0.0 2.1\nrot 1: 0.1 1.0 0.1\nrot 2: 1.1 2.0\n";
  try {
    parse_embedding(text);
    FAIL() << "accepted a duplicate dart";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidInput);
    EXPECT_NE(std::string(e.what()).find("line 7"), std::string::npos) << e.what();
    EXPECT_NE(std::string(e.what()).find("duplicate dart"), std::string::npos);
  }
}

TEST(ParseEmbedding, EmptyGraphRejected) {
  try {
    parse_embedding("graph nothing\nvertices 0\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("empty graph"), std::string::npos);
  }
}

TEST(ParseEmbedding, OtherErrors) {
  EXPECT_THROW(parse_embedding("graph x\nedge 0 0 1\n"), Error);
  EXPECT_THROW(parse_embedding("graph x\nvertices 2\nedge 0 0 5\nrot 0: 0.0\n"), Error);
  EXPECT_THROW(parse_embedding("graph x\nvertices 2\nfrobnicate\n"), Error);
  // A contractible loop.
  EXPECT_THROW(parse_embedding("vertices 1\nedge 0 0 0\nrot 0: 0.0 0.1\n"), Error);
}

TEST(ParseEmbedding, ContractibleParallelIsMergedWithWarning) {
  // Triangle with a doubled edge whose copies bound a digon face.
  const std::string text =
      "graph digon\nvertices 3\nedge 0 0 1\nedge 1 1 2\nedge 2 2 0\nedge 3 0 1\n"
      "rot 0: 0.0 3.0 2.1\nrot 1: 1.0 3.1 0.1\nrot 2: 2.0 1.1\n";
  auto p = parse_embedding(text);
  ASSERT_EQ(p.warnings.size(), 1u);
  EXPECT_EQ(p.embedding.edge_count(), 3);
}

TEST(SerializeEmbedding, RoundTrip) {
  for (const Embedding& e : {k7_torus(), heawood_torus(), bouquet2_torus(),
                             random_embedding({9, 2, false, 7})}) {
    const std::string text = serialize_embedding(e, "x");
    auto back = parse_embedding(text);
    EXPECT_TRUE(same_embedding(back.embedding, e));
    EXPECT_EQ(serialize_embedding(back.embedding, "x"), text);
  }
}

TEST(Generate, NamedInstances) {
  auto k7 = generate("k7-torus");
  EXPECT_EQ(k7.vertex_count(), 7);
  EXPECT_EQ(k7.edge_count(), 21);
  EXPECT_EQ(k7.euler_characteristic(), 0);

  auto h = generate("heawood-torus");
  EXPECT_EQ(h.vertex_count(), 14);
  EXPECT_EQ(h.edge_count(), 21);
  EXPECT_EQ(h.euler_characteristic(), 0);
  // Bipartite: two-color by BFS.
  std::vector<int> color(14, -1);
  color[0] = 0;
  std::vector<int> queue{0};
  bool bipartite = true;
  auto inc = h.graph().incidence();
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (EdgeId id : inc[queue[i]]) {
      int w = h.graph().edge(id).other(queue[i]);
      if (color[w] < 0) {
        color[w] = 1 - color[queue[i]];
        queue.push_back(w);
      } else if (color[w] == color[queue[i]]) {
        bipartite = false;
      }
    }
  EXPECT_TRUE(bipartite);
  EXPECT_EQ(queue.size(), 14u);

  EXPECT_EQ(generate("kn 6").edge_count(), 15);
  auto grid = generate("torus-grid 3 4");
  EXPECT_EQ(grid.euler_characteristic(), 0);
  EXPECT_EQ(grid.edge_count(), 24);
  auto tri = generate("torus-triangulation 4 5");
  EXPECT_EQ(tri.edge_count(), 60);
  for (const auto& f : tri.faces()) EXPECT_EQ(f.size(), 3);
  EXPECT_THROW(generate("torus-grid 2 5"), Error);
  EXPECT_THROW(generate("nonsense"), Error);
}

TEST(Generate, RandomIsDeterministic) {
  auto a = serialize_embedding(generate("random 8 1", 42), "r");
  auto b = serialize_embedding(generate("random 8 1", 42), "r");
  EXPECT_EQ(a, b);
  auto e = generate("random 8 1", 42);
  EXPECT_EQ(e.surface().genus, 1);
  EXPECT_TRUE(e.surface().orientable);
  EXPECT_NE(a, serialize_embedding(generate("random 8 1", 43), "r"));
  auto k = generate("random-nonorientable 8 2", 5);
  EXPECT_FALSE(k.surface().orientable);
  EXPECT_EQ(k.surface().genus, 2);
}

TEST(DecompositionJson, RoundTrip) {
  Embedding k7 = k7_torus();
  auto dec = decompose(k7, Goal::Outerthickness);
  auto rep = verify_decomposition(k7.graph(), dec);
  auto doc = decomposition_to_json(k7.graph(), dec, "k7", &rep);
  EXPECT_EQ(doc["format"], "thickness-decomposition/1");
  EXPECT_EQ(doc["layers"].size(), 3u);
  EXPECT_TRUE(doc["verification"]["ok"].get<bool>());
  auto back = parse_decomposition(doc.dump(), &k7.graph());
  EXPECT_EQ(back.goal, dec.goal);
  EXPECT_EQ(back.method, dec.method);
  EXPECT_EQ(back.claimed_bound, dec.claimed_bound);
  ASSERT_EQ(back.layers.size(), dec.layers.size());
  for (std::size_t i = 0; i < dec.layers.size(); ++i) {
    EXPECT_EQ(back.layers[i].edges, dec.layers[i].edges);
    EXPECT_EQ(back.layers[i].cls, dec.layers[i].cls);
  }
  EXPECT_TRUE(verify_decomposition(k7.graph(), back).ok());
}

TEST(DecompositionJson, MismatchedPairsRejected) {
  Embedding k7 = k7_torus();
  auto doc = decomposition_to_json(k7.graph(), decompose(k7, Goal::Thickness), "k7");
  doc["layers"][0]["pairs"][0] = "5-6";
  EXPECT_THROW(decomposition_from_json(doc, &k7.graph()), Error);
  EXPECT_THROW(parse_decomposition("{not json"), Error);
  EXPECT_THROW(parse_decomposition("{\"format\": \"other\"}"), Error);
}

TEST(DecompositionJson, DotHasOneGraphPerLayer) {
  Embedding k7 = k7_torus();
  auto doc = decomposition_to_json(k7.graph(), decompose(k7, Goal::Outerthickness), "k7");
  std::string dot = decomposition_to_dot(doc);
  int graphs = 0, edges = 0;
  std::istringstream in(dot);
  for (std::string line; std::getline(in, line);) {
    graphs += line.rfind("graph layer", 0) == 0;
    edges += line.find(" -- ") != std::string::npos;
  }
  EXPECT_EQ(graphs, 3);
  EXPECT_EQ(edges, 21);
}

TEST_F(Cli, DecomposeVerifyAndExport) {
  const auto json = (dir_ / "k7.json").string();
  ASSERT_EQ(run("decompose " + instance("k7-torus.txt") +
                " --goal outerthickness --method torus --verify --out " + json),
            0)
      << err_;
  EXPECT_NE(out_.find("verification passed"), std::string::npos);
  EXPECT_EQ(run("verify " + instance("k7-torus.txt") + " " + json), 0) << out_;
  EXPECT_NE(out_.find("valid"), std::string::npos);
  EXPECT_EQ(run("export-dot " + json), 0);
  EXPECT_NE(out_.find("graph layer3"), std::string::npos);
  // No temporary file left behind.
  EXPECT_FALSE(fs::exists(json + ".tmp"));
}

TEST_F(Cli, DecomposeToStdoutLogsToStderr) {
  ASSERT_EQ(run("decompose " + instance("k7-torus.txt") + " --method genus-peel"), 0);
  auto doc = json::parse(out_);
  EXPECT_EQ(doc["layers"].size(), 2u);
  EXPECT_NE(err_.find("genus-peel"), std::string::npos);
}

TEST_F(Cli, InfoShowsSurfaceAndBounds) {
  ASSERT_EQ(run("info " + instance("k7-torus.txt")), 0);
  EXPECT_NE(out_.find("torus-outer"), std::string::npos);
  EXPECT_NE(out_.find("genus 1"), std::string::npos);
}

TEST_F(Cli, OracleGoals) {
  ASSERT_EQ(run("oracle " + instance("k4-plane.txt") + " --goal outerthickness"), 0);
  EXPECT_NE(out_.find("outerthickness = 2"), std::string::npos) << out_;
  ASSERT_EQ(run("oracle " + instance("heawood-torus.txt") + " --goal spanning-disk"), 0);
  EXPECT_NE(out_.find("spanning disk: no"), std::string::npos);
  EXPECT_EQ(run("oracle " + instance("k8.txt") + " --goal thickness --max-k 1"), 3);
}

TEST_F(Cli, ExitCodes) {
  const auto empty = dir_ / "empty.txt";
  std::ofstream(empty) << "graph e\nvertices 0\n";
  EXPECT_EQ(run("info " + empty.string()), 1);
  EXPECT_NE(err_.find("empty graph"), std::string::npos);
  EXPECT_EQ(run("info " + (dir_ / "missing.txt").string()), 1);
  EXPECT_EQ(run("decompose " + instance("k7-torus.txt") + " --method bogus"), 1);
  EXPECT_EQ(run("frobnicate"), 1);
  EXPECT_EQ(run("decompose " + instance("k4-plane.txt") + " --method torus --goal outerthickness"),
            1);
  // No simple graph on 3 vertices reaches genus 5.
  EXPECT_EQ(run("gen \"random 3 5\""), 2);
}

TEST_F(Cli, GenWritesParsableFile) {
  const auto path = dir_ / "r.txt";
  ASSERT_EQ(run("gen \"random 8 1\" --seed 42 --out " + path.string()), 0);
  auto p = parse_embedding(slurp(path));
  EXPECT_EQ(p.embedding.surface().genus, 1);
  const auto again = dir_ / "r2.txt";
  ASSERT_EQ(run("gen \"random 8 1\" --seed 42 --out " + again.string()), 0);
  EXPECT_EQ(slurp(path), slurp(again));
}

TEST_F(Cli, TamperedDecompositionFailsVerify) {
  const auto path = dir_ / "d.json";
  ASSERT_EQ(run("decompose " + instance("k7-torus.txt") + " --goal outerthickness --out " +
                path.string()),
            0);
  auto doc = json::parse(slurp(path));
  auto& l0 = doc["layers"][0];
  l0["edges"].push_back(doc["layers"][1]["edges"][0]);
  l0["pairs"].push_back(doc["layers"][1]["pairs"][0]);
  std::ofstream(path) << doc.dump();
  EXPECT_EQ(run("verify " + instance("k7-torus.txt") + " " + path.string()), 2);
  EXPECT_NE(out_.find("INVALID"), std::string::npos);
}
