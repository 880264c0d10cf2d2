// Command-line front end: info, decompose, verify, oracle, gen, export-dot.
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "thickness/io.hpp"
#include "thickness/thickness.hpp"

using namespace thickness;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw invalid_input("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Write through a temporary file so readers never see a partial document.
void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw invalid_input("cannot write '" + path + "'");
    out << text;
  }
  std::filesystem::rename(tmp, path);
}

ParsedEmbedding load(const std::string& path) {
  auto parsed = parse_embedding(read_file(path));
  for (const auto& w : parsed.warnings) std::cerr << "warning: " << w << "\n";
  return parsed;
}

Deadline deadline_for(double seconds) {
  return seconds > 0 ? Deadline::after_seconds(seconds) : Deadline::never();
}

void print_report(const VerificationReport& rep, std::ostream& out) {
  for (const auto& c : rep.checks)
    out << "  " << std::left << std::setw(18) << c.name << (c.ok ? "ok" : "FAILED")
        << (c.detail.empty() ? "" : "  " + c.detail) << "\n";
}

int cmd_info(const std::string& file) {
  auto p = load(file);
  const auto& e = p.embedding;
  const auto& s = e.surface();
  std::cout << "graph      " << p.name << "\n"
            << "vertices   " << e.vertex_count() << "\n"
            << "edges      " << e.edge_count() << "\n"
            << "faces      " << e.face_count() << "\n"
            << "euler char " << e.euler_characteristic() << "\n"
            << "surface    " << s.name() << " (" << (s.orientable ? "orientable" : "nonorientable")
            << ", genus " << s.genus << ")\n\n";
  auto rep = bounds_report(e);
  std::cout << std::left << std::setw(32) << "bound" << std::setw(16) << "goal" << std::setw(22)
            << "formula" << std::setw(10) << "raw" << "effective\n";
  for (const auto& b : rep.entries) {
    std::ostringstream raw;
    raw << std::setprecision(4) << b.raw;
    std::cout << std::setw(32) << b.name << std::setw(16) << to_string(b.goal) << std::setw(22)
              << b.formula << std::setw(10) << raw.str() << b.effective
              << (b.note.empty() ? "" : "  (" + b.note + ")") << "\n";
  }
  for (Goal g : {Goal::Thickness, Goal::Outerthickness})
    if (auto best = rep.best(g)) std::cout << "best " << to_string(g) << " bound: " << *best << "\n";
  return 0;
}

int cmd_decompose(const std::string& file, const std::string& goal, const std::string& method,
                  bool verify, const std::string& out, double limit) {
  auto p = load(file);
  PipelineOptions opt;
  opt.deadline = deadline_for(limit);
  auto dec = decompose(p.embedding, goal_from_string(goal), method, opt);
  VerificationReport rep;
  if (verify) {
    rep = verify_decomposition(p.embedding.graph(), dec);
    dec.verified = rep.ok();
  }
  auto doc = decomposition_to_json(p.embedding.graph(), dec, p.name, verify ? &rep : nullptr);
  std::ostream& log = out.empty() || out == "-" ? std::cerr : std::cout;
  log << dec.method << ": " << dec.layer_count() << " " << goal << " layer(s), bound "
      << dec.claimed_bound << " (" << dec.bound_name << ")";
  if (!dec.helpers.empty()) log << ", " << dec.helpers.size() << " helper edge(s)";
  log << "\n";
  for (std::size_t i = 0; i < dec.layers.size(); ++i)
    log << "  layer " << i + 1 << ": " << dec.layers[i].edges.size() << " edges, "
        << to_string(dec.layers[i].cls) << ", " << dec.layers[i].tag << "\n";
  if (verify) {
    log << "verification " << (rep.ok() ? "passed" : "FAILED") << "\n";
    print_report(rep, log);
  }
  write_output(out, doc.dump(2) + "\n");
  return verify && !rep.ok() ? 2 : 0;
}

int cmd_verify(const std::string& emb_file, const std::string& dec_file) {
  auto p = load(emb_file);
  auto dec = parse_decomposition(read_file(dec_file), &p.embedding.graph());
  auto rep = verify_decomposition(p.embedding.graph(), dec);
  std::cout << dec.layer_count() << " " << to_string(dec.goal) << " layer(s) from " << dec.method
            << ": " << (rep.ok() ? "valid" : "INVALID") << "\n";
  print_report(rep, std::cout);
  return rep.ok() ? 0 : 2;
}

int cmd_oracle(const std::string& file, const std::string& goal, int max_k, double limit) {
  auto p = load(file);
  const auto deadline = deadline_for(limit);
  if (goal == "spanning-disk") {
    auto r = has_spanning_disk(p.embedding, deadline);
    if (!r.found) {
      std::cout << "spanning disk: limit exceeded after " << r.subsets << " face sets\n";
      return 3;
    }
    std::cout << "spanning disk: " << (*r.found ? "yes" : "no") << " (" << r.subsets
              << " face sets, " << r.elapsed << " s)\n";
    if (*r.found) {
      std::cout << "faces:";
      for (int f : r.faces) std::cout << " " << f;
      std::cout << "\n";
    }
    return 0;
  }
  const Goal g = goal_from_string(goal);
  auto r = g == Goal::Thickness ? exact_thickness(p.embedding.graph(), max_k, deadline)
                                : exact_outerthickness(p.embedding.graph(), max_k, deadline);
  if (r.exceeded()) {
    std::cout << goal << ": limit exceeded (" << r.limit << ", " << r.nodes << " nodes)\n";
    return 3;
  }
  std::cout << goal << " = " << *r.value << " (" << r.nodes << " nodes, " << r.elapsed << " s)\n";
  for (std::size_t i = 0; i < r.witness.size(); ++i) {
    std::cout << "  layer " << i + 1 << ":";
    for (EdgeId id : r.witness[i]) std::cout << " " << pair_text(p.embedding.graph(), id);
    std::cout << "\n";
  }
  return 0;
}

int cmd_gen(const std::string& spec, std::uint64_t seed, const std::string& out) {
  auto emb = generate(spec, seed);
  std::string name = spec;
  for (char& c : name)
    if (c == ' ') c = '-';
  write_output(out, serialize_embedding(emb, name));
  return 0;
}

int cmd_export_dot(const std::string& file, const std::string& out) {
  json doc;
  try {
    doc = json::parse(read_file(file));
  } catch (const json::exception& ex) {
    throw invalid_input(std::string("decomposition is not JSON: ") + ex.what());
  }
  try {
    write_output(out, decomposition_to_dot(doc));
  } catch (const json::exception& ex) {
    throw invalid_input(std::string("malformed decomposition: ") + ex.what());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Thickness and outerthickness decompositions of embedded graphs"};
  app.require_subcommand(1);

  std::string file, file2, goal = "thickness", method = "auto", out, spec;
  bool verify = false;
  double limit = 0;
  int max_k = 8;
  std::uint64_t seed = 1;

  auto* info = app.add_subcommand("info", "surface and bounds of an embedding");
  info->add_option("file", file, "embedding file")->required();

  auto* dec = app.add_subcommand("decompose", "split into planar or outerplanar layers");
  dec->add_option("file", file, "embedding file")->required();
  dec->add_option("--goal", goal)->check(CLI::IsMember({"thickness", "outerthickness"}));
  dec->add_option("--method", method)->check(CLI::IsMember(method_names()));
  dec->add_flag("--verify", verify, "check the result independently");
  dec->add_option("--out", out, "decomposition JSON (default stdout)");
  dec->add_option("--time-limit", limit, "seconds, 0 = none");

  auto* ver = app.add_subcommand("verify", "check a decomposition against an embedding");
  ver->add_option("embedding", file, "embedding file")->required();
  ver->add_option("decomposition", file2, "decomposition JSON")->required();

  auto* orc = app.add_subcommand("oracle", "exact values by exhaustive search");
  orc->add_option("file", file, "embedding file")->required();
  orc->add_option("--goal", goal)->check(
      CLI::IsMember({"thickness", "outerthickness", "spanning-disk"}));
  orc->add_option("--max-k", max_k, "largest layer count tried");
  orc->add_option("--time-limit", limit, "seconds, 0 = none");

  auto* gen = app.add_subcommand("gen", "write a generated embedding");
  gen->add_option("spec", spec,
                  "k7-torus | heawood-torus | bouquet2-torus | kn N | torus-grid R C | "
                  "torus-triangulation R C | random N G [SEED] | random-nonorientable N K [SEED]")
      ->required();
  gen->add_option("--seed", seed);
  gen->add_option("--out", out);

  auto* dot = app.add_subcommand("export-dot", "DOT graphs, one per layer");
  dot->add_option("decomposition", file, "decomposition JSON")->required();
  dot->add_option("--out", out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*info) return cmd_info(file);
    if (*dec) return cmd_decompose(file, goal, method, verify, out, limit);
    if (*ver) return cmd_verify(file, file2);
    if (*orc) return cmd_oracle(file, goal, max_k, limit);
    if (*gen) return cmd_gen(spec, seed, out);
    if (*dot) return cmd_export_dot(file, out);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::InvalidInput: return 1;
      case ErrorKind::Failure: return 2;
      case ErrorKind::Timeout: return 3;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
