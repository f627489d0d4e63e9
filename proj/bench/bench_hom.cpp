// Compares the OpenMP total-hom kernel against the serial reference on a few
// medium quotients and reports timings and speedup.
#include <chrono>
#include <cstdio>

#include "arq/mesh.hpp"

using namespace arq;

namespace {

template <typename F>
double time_it(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

void bench(Family fam, int rank, int r) {
  DynkinTree t = build_tree(fam, rank);
  SlicedAutomorphism g = power(translation(t), r);
  // warm the per-vertex memo so both runs measure matrix assembly only
  for (int q : t.vertices) hom_knit(t, {0, q});
  std::vector<std::vector<long>> pd, sd;
  size_t nverts = 0;
  double tp = time_it([&] {
    TotalHom par = total_hom(t, g);
    pd = std::move(par.dims);
    nverts = par.quiver.vertices.size();
  });
  double ts = time_it([&] { sd = total_hom_serial(t, g).dims; });
  bool same = pd == sd;
  std::printf("%s_%d / tau^%d  (%zu vertices): parallel %.4fs  serial %.4fs  "
              "speedup %.2fx  %s\n",
              family_name(fam), rank, r, nverts, tp, ts, ts / tp,
              same ? "match" : "MISMATCH");
}

}  // namespace

int main() {
  bench(Family::A, 8, 80);
  bench(Family::D, 8, 60);
  bench(Family::E, 6, 60);
  bench(Family::E, 8, 40);
  return 0;
}
