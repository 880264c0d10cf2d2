// Regenerates the stored K_n layer patterns under data/patterns.
#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "thickness/complete_graphs.hpp"

using namespace thickness;

int main(int argc, char** argv) {
  CLI::App app{"Search and store complete-graph layer patterns"};
  int lo = 1, hi = 14;
  std::string dir = pattern_directory();
  std::uint64_t seed = 1;
  double limit = 600;
  app.add_option("--from", lo, "smallest n");
  app.add_option("--to", hi, "largest n");
  app.add_option("--dir", dir, "output directory");
  app.add_option("--seed", seed, "random seed");
  app.add_option("--time-limit", limit, "seconds per pattern");
  CLI11_PARSE(app, argc, argv);

  int status = 0;
  for (int n = lo; n <= hi; ++n)
    for (LayerClass cls : {LayerClass::Planar, LayerClass::Outerplanar}) {
      auto t0 = std::chrono::steady_clock::now();
      RestartOptions opt;
      opt.seed = seed;
      opt.deadline = Deadline::after_seconds(limit);
      auto p = search_pattern(n, cls, complete_graph_bound(n, cls), opt);
      double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      std::string why;
      if (!p || !verify_pattern(*p, &why)) {
        std::cerr << "K" << n << " " << to_string(cls) << ": not found " << why << "\n";
        status = 1;
        continue;
      }
      std::ofstream(dir + "/" + pattern_file_name(n, cls)) << pattern_text(*p);
      std::cout << "K" << n << " " << to_string(cls) << ": " << p->layers.size() << " layers, "
                << dt << " s\n";
    }
  return status;
}
