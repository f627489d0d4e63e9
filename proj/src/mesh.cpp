#include "arq/mesh.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <mutex>
#include <numeric>
#include <set>
#include <shared_mutex>
#include <sstream>
#include <tuple>

namespace arq {

namespace {

std::vector<int> topo_order(const DynkinTree& tree) {
  // Order tree vertices so that u comes before z for every tree arrow u -> z.
  std::vector<int> indeg(tree.out.size(), 0);
  for (const auto& a : tree.arrows) indeg[a.dst] += 1;
  std::vector<int> order, queue;
  for (int q : tree.vertices)
    if (indeg[q] == 0) queue.push_back(q);
  while (!queue.empty()) {
    int q = queue.back();
    queue.pop_back();
    order.push_back(q);
    for (int y : tree.out[q])
      if (--indeg[y] == 0) queue.push_back(y);
  }
  if (order.size() != tree.vertices.size())
    throw Error(ErrorCode::WindowOverflow, "tree orientation is not acyclic");
  return order;
}

DimensionFunction knit_compute(const DynkinTree& tree, int q0) {
  if (tree.family == Family::L)
    throw Error(ErrorCode::UnsupportedFamily, "knitting needs A/D/E");
  const int h = coxeter_number(tree);
  const ZVertex x{0, q0};
  const ZVertex sx = suspension(tree).apply(x);
  const std::vector<int> order = topo_order(tree);

  DimensionFunction d;
  d.base = x;
  for (long p = 0; p <= 2L * h + 1; ++p) {
    bool slice_zero = true;
    for (int z : order) {
      ZVertex Z{p, z};
      ZVertex tz{p - 1, z};
      long v = -d.at(tz);
      for (ZVertex y : successors(tree, tz)) v += d.at(y);
      if (Z == x) v += 1;
      if (Z == sx) v += 1;
      if (v < 0)
        throw Error(ErrorCode::WindowOverflow,
                    "knitting produced a negative dimension");
      if (v > 0) {
        d.values[Z] = v;
        slice_zero = false;
      }
    }
    if (slice_zero && p > sx.p) return d;
  }
  throw Error(ErrorCode::WindowOverflow,
              "knitting support exceeds twice the coxeter number");
}

std::shared_mutex knit_mutex;
std::map<std::tuple<int, int, int>, DimensionFunction> knit_memo;

const DimensionFunction& knit_base(const DynkinTree& tree, int q) {
  std::tuple<int, int, int> key{static_cast<int>(tree.family), tree.rank, q};
  {
    std::shared_lock lock(knit_mutex);
    auto it = knit_memo.find(key);
    if (it != knit_memo.end()) return it->second;
  }
  DimensionFunction fresh = knit_compute(tree, q);
  std::unique_lock lock(knit_mutex);
  return knit_memo.emplace(key, std::move(fresh)).first->second;
}

}  // namespace

DimensionFunction hom_knit(const DynkinTree& tree, ZVertex x) {
  if (!tree.has_vertex(x.q))
    throw Error(ErrorCode::InvalidVertex, "source vertex outside tree");
  const DimensionFunction& base = knit_base(tree, x.q);
  DimensionFunction shifted;
  shifted.base = x;
  for (const auto& [v, n] : base.values)
    shifted.values[{v.p + x.p, v.q}] = n;
  return shifted;
}

namespace {

// Exact rational scalar for the oracle's elimination.
struct Frac {
  long long n = 0;
  long long d = 1;

  static long long checked(__int128 v) {
    if (v > INT64_MAX / 2 || v < INT64_MIN / 2)
      throw Error(ErrorCode::WindowOverflow, "rational overflow in oracle");
    return static_cast<long long>(v);
  }

  static Frac make(__int128 n, __int128 d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 a = n < 0 ? -n : n, b = d;
    while (b) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    if (a == 0) return {0, 1};
    return {checked(n / a), checked(d / a)};
  }

  bool zero() const { return n == 0; }
  Frac operator+(const Frac& o) const {
    return make(static_cast<__int128>(n) * o.d + static_cast<__int128>(o.n) * d,
                static_cast<__int128>(d) * o.d);
  }
  Frac operator*(const Frac& o) const {
    return make(static_cast<__int128>(n) * o.n,
                static_cast<__int128>(d) * o.d);
  }
  Frac operator-() const { return {-n, d}; }
  Frac inv() const {
    if (n == 0) throw Error(ErrorCode::WindowOverflow, "division by zero");
    return make(d, n);
  }
};

using SparseRow = std::map<int, Frac>;

// Incremental sparse row-space basis; returns the rank contribution (0/1).
struct Eliminator {
  std::map<int, SparseRow> pivots;  // leading column -> normalized row
  long rank = 0;

  void add(SparseRow row) {
    while (!row.empty()) {
      int col = row.begin()->first;
      Frac lead = row.begin()->second;
      auto it = pivots.find(col);
      if (it == pivots.end()) {
        Frac scale = lead.inv();
        for (auto& [c, v] : row) v = v * scale;
        pivots.emplace(col, std::move(row));
        ++rank;
        return;
      }
      for (const auto& [c, v] : it->second) {
        Frac delta = -(lead * v);
        auto jt = row.find(c);
        if (jt == row.end()) {
          if (!delta.zero()) row.emplace(c, delta);
        } else {
          jt->second = jt->second + delta;
          if (jt->second.zero()) row.erase(jt);
        }
      }
    }
  }
};

}  // namespace

long hom_oracle(const DynkinTree& tree, ZVertex x, ZVertex y,
                long path_budget) {
  if (tree.family == Family::L)
    throw Error(ErrorCode::UnsupportedFamily, "oracle needs A/D/E");
  if (!tree.has_vertex(x.q) || !tree.has_vertex(y.q))
    throw Error(ErrorCode::InvalidVertex, "vertex outside tree");
  if (x == y) return 1;
  if (y.p < x.p) return 0;

  // Forward reachability from x, capped at slice y.p.
  std::set<ZVertex> reach;
  {
    std::vector<ZVertex> stack{x};
    reach.insert(x);
    while (!stack.empty()) {
      ZVertex v = stack.back();
      stack.pop_back();
      for (ZVertex s : successors(tree, v))
        if (s.p <= y.p && reach.insert(s).second) stack.push_back(s);
    }
  }
  if (!reach.count(y)) return 0;
  // Restrict to vertices that also reach y.
  std::set<ZVertex> window;
  {
    std::vector<ZVertex> stack{y};
    window.insert(y);
    while (!stack.empty()) {
      ZVertex v = stack.back();
      stack.pop_back();
      for (ZVertex s : predecessors(tree, v))
        if (reach.count(s) && window.insert(s).second) stack.push_back(s);
    }
  }

  using Path = std::vector<ZVertex>;
  long stored = 0;
  auto charge = [&](long k) {
    stored += k;
    if (stored > path_budget)
      throw Error(ErrorCode::WindowTooLarge,
                  "path enumeration exceeds the budget");
  };

  // All paths from x, grouped by endpoint, restricted to the window.
  std::map<ZVertex, std::vector<Path>> from_x;
  {
    Path cur;
    std::function<void(ZVertex)> dfs = [&](ZVertex v) {
      cur.push_back(v);
      charge(1);
      from_x[v].push_back(cur);
      for (ZVertex s : successors(tree, v))
        if (window.count(s)) dfs(s);
      cur.pop_back();
    };
    dfs(x);
  }
  // All paths to y, grouped by start.
  std::map<ZVertex, std::vector<Path>> to_y;
  {
    Path cur;
    std::function<void(ZVertex)> dfs = [&](ZVertex v) {
      cur.push_back(v);
      charge(1);
      Path p(cur.rbegin(), cur.rend());
      to_y[v].push_back(std::move(p));
      for (ZVertex s : predecessors(tree, v))
        if (window.count(s)) dfs(s);
      cur.pop_back();
    };
    dfs(y);
  }

  const std::vector<Path>& xy = from_x[y];
  std::map<Path, int> index;
  for (size_t i = 0; i < xy.size(); ++i) index[xy[i]] = static_cast<int>(i);

  Eliminator elim;
  for (const ZVertex& z : window) {
    ZVertex tz{z.p - 1, z.q};
    auto uit = from_x.find(tz);
    auto vit = to_y.find(z);
    if (uit == from_x.end() || vit == to_y.end()) continue;
    for (const Path& u : uit->second)
      for (const Path& v : vit->second) {
        SparseRow row;
        for (ZVertex m : predecessors(tree, z)) {
          Path full = u;
          full.push_back(m);
          full.insert(full.end(), v.begin(), v.end());
          auto it = index.find(full);
          if (it == index.end())
            throw Error(ErrorCode::WindowOverflow,
                        "mesh relator path missing from enumeration");
          auto [jt, fresh] = row.emplace(it->second, Frac{1, 1});
          if (!fresh) jt->second = jt->second + Frac{1, 1};
        }
        if (!row.empty()) elim.add(std::move(row));
      }
  }
  return static_cast<long>(xy.size()) - elim.rank;
}

namespace {

long orbit_hom_unchecked(const DynkinTree& tree, const SlicedAutomorphism& g,
                         ZVertex x, ZVertex y) {
  const DimensionFunction d = hom_knit(tree, x);
  // Bound the powers r for which g^r y can land in the support window.
  long L = 0, total = 0, abs_sum = 0;
  int q = y.q;
  do {
    ++L;
    total += g.shift(q);
    abs_sum += std::abs(g.shift(q));
    q = g.perm(q);
  } while (q != y.q);
  if (total == 0)
    throw Error(ErrorCode::InfiniteQuotient, "orbit has zero net shift");
  const long h = coxeter_number(tree);
  long R = L * ((2 * h + abs_sum + std::abs(y.p - x.p) + 4) / std::abs(total) +
                2);
  ZVertex w = y;
  for (long r = 0; r < R; ++r) w = g.apply_inverse(w);
  long sum = 0;
  for (long r = -R; r <= R; ++r) {
    sum += d.at(w);
    w = g.apply(w);
  }
  return sum;
}

TotalHom total_hom_impl(const DynkinTree& tree, const SlicedAutomorphism& g,
                        bool parallel) {
  TotalHom t{orbit_quotient(tree, g), {}};
  const int n = static_cast<int>(t.quiver.vertices.size());
  t.dims.assign(n, std::vector<long>(n, 0));
  // Warm the knit memo serially so parallel reads stay cheap.
  for (int q : tree.vertices) hom_knit(tree, {0, q});
#ifdef _OPENMP
#pragma omp parallel for collapse(2) if (parallel)
#endif
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      t.dims[i][j] = orbit_hom_unchecked(tree, g, t.quiver.vertices[i],
                                         t.quiver.vertices[j]);
  (void)parallel;
  return t;
}

}  // namespace

long orbit_hom(const DynkinTree& tree, const SlicedAutomorphism& g, ZVertex x,
               ZVertex y) {
  if (!is_weakly_admissible(g))
    throw Error(ErrorCode::NotWeaklyAdmissible,
                "generator is not weakly admissible");
  return orbit_hom_unchecked(tree, g, x, y);
}

TotalHom total_hom(const DynkinTree& tree, const SlicedAutomorphism& g) {
  return total_hom_impl(tree, g, true);
}

TotalHom total_hom_serial(const DynkinTree& tree,
                          const SlicedAutomorphism& g) {
  return total_hom_impl(tree, g, false);
}

std::vector<long> l_function(const TotalHom& t) {
  const size_t n = t.dims.size();
  std::vector<long> l(n, 0);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) l[j] += t.dims[i][j];
  return l;
}

std::string dimension_to_tsv(const DimensionFunction& d) {
  std::ostringstream os;
  for (const auto& [v, n] : d.values)
    os << v.p << "\t" << v.q << "\t" << n << "\n";
  return os.str();
}

std::string dimension_to_dot(const DimensionFunction& d) {
  std::ostringstream os;
  os << "digraph hom {\n";
  long maxd = 1;
  for (const auto& [v, n] : d.values) maxd = std::max(maxd, n);
  for (const auto& [v, n] : d.values) {
    int gray = 100 - static_cast<int>(60 * n / maxd);
    os << "  \"(" << v.p << "," << v.q << ")\" [label=\"(" << v.p << ","
       << v.q << ")\\n" << n << "\", style=filled, fillcolor=\"gray" << gray
       << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace arq
