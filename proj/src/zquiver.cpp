#include "arq/zquiver.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace arq {

namespace {

void check_vertex(const DynkinTree& tree, ZVertex v) {
  if (!tree.has_vertex(v.q))
    throw Error(ErrorCode::InvalidVertex,
                "tree vertex " + std::to_string(v.q) + " out of range");
}

}  // namespace

std::vector<ZVertex> successors(const DynkinTree& tree, ZVertex v) {
  check_vertex(tree, v);
  std::vector<ZVertex> r;
  for (int y : tree.out[v.q]) r.push_back({v.p, y});
  for (int z : tree.in[v.q]) r.push_back({v.p + 1, z});
  return r;
}

std::vector<ZVertex> predecessors(const DynkinTree& tree, ZVertex v) {
  check_vertex(tree, v);
  std::vector<ZVertex> r;
  for (int z : tree.in[v.q]) r.push_back({v.p, z});
  for (int y : tree.out[v.q]) r.push_back({v.p - 1, y});
  return r;
}

std::pair<std::vector<ZVertex>, std::vector<ZVertex>> neighbors(
    const DynkinTree& tree, ZVertex v) {
  return {successors(tree, v), predecessors(tree, v)};
}

namespace {

// Cycle of the tree permutation through q, with its net slice shift and the
// sum of absolute per-step shifts.
struct CycleData {
  long length;
  long total;
  long abs_sum;
};

CycleData cycle_through(const SlicedAutomorphism& g, int q0) {
  CycleData c{0, 0, 0};
  int q = q0;
  do {
    c.length += 1;
    c.total += g.shift(q);
    c.abs_sum += std::abs(g.shift(q));
    q = g.perm(q);
  } while (q != q0);
  return c;
}

// Number of <g>-orbits on the repetition quiver, or -1 when infinite.
long quotient_size(const SlicedAutomorphism& g) {
  long total = 0;
  std::vector<bool> seen(g.tree().out.size(), false);
  for (int q : g.tree().vertices) {
    if (seen[q]) continue;
    CycleData c = cycle_through(g, q);
    if (c.total == 0) return -1;
    total += std::abs(c.total);
    int w = q;
    do {
      seen[w] = true;
      w = g.perm(w);
    } while (w != q);
  }
  return total;
}

}  // namespace

int OrbitQuiver::index_of(ZVertex rep) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), rep);
  if (it == vertices.end() || !(*it == rep))
    throw Error(ErrorCode::InvalidVertex, "not an orbit representative");
  return static_cast<int>(it - vertices.begin());
}

ZVertex OrbitQuiver::canonical(ZVertex v) const {
  CycleData c = cycle_through(gen, v.q);
  if (c.total == 0)
    throw Error(ErrorCode::InfiniteQuotient, "orbit has zero net shift");
  long K = c.length * ((std::abs(v.p) + c.abs_sum + 2) / std::abs(c.total) + 2);
  ZVertex best{0, 0};
  bool found = false;
  ZVertex w = v;
  for (long k = 0; k <= K; ++k) {
    if (w.p >= 0 && (!found || w < best)) {
      best = w;
      found = true;
    }
    w = gen.apply(w);
  }
  w = v;
  for (long k = 0; k < K; ++k) {
    w = gen.apply_inverse(w);
    if (w.p >= 0 && (!found || w < best)) {
      best = w;
      found = true;
    }
  }
  if (!found)
    throw Error(ErrorCode::InfiniteQuotient, "no representative with p >= 0");
  return best;
}

RawTranslationQuiver OrbitQuiver::raw() const {
  RawTranslationQuiver q;
  q.n = static_cast<int>(vertices.size());
  q.arrows = arrows;
  q.tau = tau;
  return q;
}

OrbitQuiver orbit_quotient(const DynkinTree& tree,
                           const SlicedAutomorphism& g) {
  if (!tree.same_shape(g.tree()))
    throw Error(ErrorCode::TreeMismatch, "generator is over a different tree");
  if (quotient_size(g) < 0)
    throw Error(ErrorCode::InfiniteQuotient,
                "some vertex orbit has net slice shift zero");
  if (!is_weakly_admissible(g))
    throw Error(ErrorCode::NotWeaklyAdmissible,
                "generator is not weakly admissible: " + g.describe());

  OrbitQuiver oq{tree, g, {}, {}, {}};
  std::set<ZVertex> reps;
  for (int q : tree.vertices) {
    CycleData c = cycle_through(g, q);
    for (long p = 0; p < std::abs(c.total); ++p) {
      reps.insert(oq.canonical({p, q}));
    }
  }
  oq.vertices.assign(reps.begin(), reps.end());
  if (static_cast<long>(oq.vertices.size()) != quotient_size(g))
    throw Error(ErrorCode::InfiniteQuotient,
                "orbit representative count mismatch");

  std::map<std::pair<int, int>, int> mult;
  for (int i = 0; i < static_cast<int>(oq.vertices.size()); ++i)
    for (ZVertex s : successors(tree, oq.vertices[i]))
      mult[{i, oq.index_of(oq.canonical(s))}] += 1;
  for (const auto& [key, val] : mult)
    oq.arrows.push_back({key.first, key.second, val});

  oq.tau.resize(oq.vertices.size());
  for (int i = 0; i < static_cast<int>(oq.vertices.size()); ++i) {
    ZVertex t{oq.vertices[i].p - 1, oq.vertices[i].q};
    oq.tau[i] = oq.index_of(oq.canonical(t));
  }
  return oq;
}

std::vector<std::string> validate_translation_quiver(
    const RawTranslationQuiver& q) {
  std::vector<std::string> report;
  if (q.n <= 0) {
    report.push_back("empty vertex set");
    return report;
  }
  if (static_cast<int>(q.tau.size()) != q.n) {
    report.push_back("tau size does not match vertex count");
    return report;
  }
  std::vector<int> hit(q.n, 0);
  for (int v = 0; v < q.n; ++v) {
    if (q.tau[v] < 0 || q.tau[v] >= q.n) {
      report.push_back("tau out of range at " + std::to_string(v));
      return report;
    }
    hit[q.tau[v]] += 1;
  }
  for (int v = 0; v < q.n; ++v)
    if (hit[v] != 1)
      report.push_back("tau is not a bijection at " + std::to_string(v));

  std::map<std::pair<int, int>, int> a;
  for (const auto& ar : q.arrows) {
    if (ar.src < 0 || ar.src >= q.n || ar.dst < 0 || ar.dst >= q.n) {
      report.push_back("arrow endpoint out of range");
      continue;
    }
    if (ar.val < 1) report.push_back("non-positive valuation on an arrow");
    if (a.count({ar.src, ar.dst}))
      report.push_back("double arrow " + std::to_string(ar.src) + "->" +
                       std::to_string(ar.dst));
    a[{ar.src, ar.dst}] += ar.val;
  }
  for (int v = 0; v < q.n; ++v) {
    auto it = a.find({v, v});
    if (it == a.end()) continue;
    if (q.tau[v] != v)
      report.push_back("loop at non-tau-fixed vertex " + std::to_string(v));
    if (it->second >= 2)
      report.push_back("loop valuation >= 2 at " + std::to_string(v));
  }
  // Translation law with valuations: a(y, z) = a(tau z, y).
  for (int z = 0; z < q.n; ++z)
    for (int y = 0; y < q.n; ++y) {
      int in_val = a.count({y, z}) ? a[{y, z}] : 0;
      int out_val = a.count({q.tau[z], y}) ? a[{q.tau[z], y}] : 0;
      if (in_val != out_val)
        report.push_back("translation law fails at " + std::to_string(z) +
                         " (via " + std::to_string(y) + ")");
    }
  return report;
}

namespace {

struct QuiverView {
  int n;
  std::vector<std::vector<std::pair<int, int>>> out;  // (dst, val), sorted
  std::vector<std::vector<std::pair<int, int>>> in;
  std::vector<int> tau;
  std::vector<int> tau_inv;

  explicit QuiverView(const RawTranslationQuiver& q)
      : n(q.n), out(q.n), in(q.n), tau(q.tau), tau_inv(q.n) {
    for (const auto& a : q.arrows) {
      out[a.src].push_back({a.dst, a.val});
      in[a.dst].push_back({a.src, a.val});
    }
    for (auto& v : out) std::sort(v.begin(), v.end());
    for (auto& v : in) std::sort(v.begin(), v.end());
    for (int v = 0; v < n; ++v) tau_inv[tau[v]] = v;
  }

  int val(int s, int d) const {
    for (auto& [dst, v] : out[s])
      if (dst == d) return v;
    return 0;
  }

  // Local signature used to prune the isomorphism search.
  std::tuple<std::vector<int>, std::vector<int>, int, bool> signature(
      int v) const {
    std::vector<int> ov, iv;
    for (auto& [d, w] : out[v]) ov.push_back(w);
    for (auto& [s, w] : in[v]) iv.push_back(w);
    std::sort(ov.begin(), ov.end());
    std::sort(iv.begin(), iv.end());
    return {ov, iv, val(v, v), tau[v] == v};
  }
};

bool extend(const QuiverView& A, const QuiverView& B, std::vector<int>& f,
            std::vector<bool>& used, const std::vector<int>& order,
            size_t idx) {
  if (idx == order.size()) {
    // Full verification: arrows with valuations and tau.
    for (int v = 0; v < A.n; ++v) {
      if (B.tau[f[v]] != f[A.tau[v]]) return false;
      for (int w = 0; w < A.n; ++w)
        if (A.val(v, w) != B.val(f[v], f[w])) return false;
    }
    return true;
  }
  int v = order[idx];
  for (int cand = 0; cand < B.n; ++cand) {
    if (used[cand]) continue;
    if (A.signature(v) != B.signature(cand)) continue;
    bool ok = true;
    for (size_t j = 0; j < idx && ok; ++j) {
      int u = order[j];
      if (A.val(v, u) != B.val(cand, f[u])) ok = false;
      if (A.val(u, v) != B.val(f[u], cand)) ok = false;
      if (A.tau[v] == u && B.tau[cand] != f[u]) ok = false;
      if (A.tau[u] == v && B.tau[f[u]] != cand) ok = false;
    }
    if (!ok) continue;
    f[v] = cand;
    used[cand] = true;
    if (extend(A, B, f, used, order, idx + 1)) return true;
    used[cand] = false;
    f[v] = -1;
  }
  return false;
}

bool connected(const RawTranslationQuiver& q) {
  if (q.n == 0) return false;
  std::vector<std::vector<int>> adj(q.n);
  for (const auto& a : q.arrows) {
    adj[a.src].push_back(a.dst);
    adj[a.dst].push_back(a.src);
  }
  // tau links count for connectivity (A_1 quotients have no arrows at all).
  for (int v = 0; v < q.n; ++v) {
    adj[v].push_back(q.tau[v]);
    adj[q.tau[v]].push_back(v);
  }
  std::vector<bool> seen(q.n, false);
  std::vector<int> stack{0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
  }
  return count == q.n;
}

}  // namespace

bool translation_quiver_isomorphic(const RawTranslationQuiver& a,
                                   const RawTranslationQuiver& b) {
  if (a.n != b.n) return false;
  QuiverView A(a), B(b);
  // Global signature multisets must match.
  std::vector<std::string> sa, sb;
  for (int v = 0; v < a.n; ++v) {
    std::ostringstream oa, ob;
    auto dump = [](std::ostringstream& os, auto sig) {
      auto& [ov, iv, loop, fixed] = sig;
      for (int x : ov) os << x << ",";
      os << "|";
      for (int x : iv) os << x << ",";
      os << "|" << loop << "|" << fixed;
    };
    dump(oa, A.signature(v));
    dump(ob, B.signature(v));
    sa.push_back(oa.str());
    sb.push_back(ob.str());
  }
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return false;

  // BFS order from vertex 0 keeps assignments constrained early.
  std::vector<int> order;
  std::vector<bool> seen(a.n, false);
  for (int root = 0; root < a.n; ++root) {
    if (seen[root]) continue;
    std::vector<int> queue{root};
    seen[root] = true;
    for (size_t h = 0; h < queue.size(); ++h) {
      int v = queue[h];
      order.push_back(v);
      auto push = [&](int w) {
        if (!seen[w]) {
          seen[w] = true;
          queue.push_back(w);
        }
      };
      for (auto& [d, val] : A.out[v]) push(d);
      for (auto& [s, val] : A.in[v]) push(s);
      push(A.tau[v]);
      push(A.tau_inv[v]);
    }
  }
  std::vector<int> f(a.n, -1);
  std::vector<bool> used(a.n, false);
  return extend(A, B, f, used, order, 0);
}

std::pair<DynkinTree, SlicedAutomorphism> identify_type(
    const RawTranslationQuiver& q) {
  if (!validate_translation_quiver(q).empty())
    throw Error(ErrorCode::NotDynkinType,
                "input violates the translation quiver axioms");
  if (!connected(q))
    throw Error(ErrorCode::NotDynkinType, "input is not connected");
  const int n = q.n;
  struct Candidate {
    Family family;
    int min_rank;
    int max_rank;
  };
  // Orbit counts grow at least linearly in the rank (A-even half-shift
  // generators reach rank/2), so these rank windows are exhaustive.
  std::vector<Candidate> cands = {{Family::A, 1, std::min(2 * n + 1, 64)},
                                  {Family::D, 4, std::min(n + 2, 64)},
                                  {Family::E, 6, 8}};
  for (const auto& c : cands) {
    for (int rank = c.min_rank; rank <= c.max_rank; ++rank) {
      if (c.family == Family::E && rank < 6) continue;
      DynkinTree tree = build_tree(c.family, rank);
      for (const auto& g : enumerate_weakly_admissible(tree, 2 * n + 2)) {
        long size = quotient_size(g);
        if (size != n) continue;
        OrbitQuiver oq = orbit_quotient(tree, g);
        if (translation_quiver_isomorphic(oq.raw(), q)) return {tree, g};
      }
    }
  }
  throw Error(ErrorCode::NotDynkinType,
              "no Dynkin quotient matches the input quiver");
}

std::string orbit_to_dot(const OrbitQuiver& q) {
  std::ostringstream os;
  os << "digraph orbit {\n";
  for (size_t i = 0; i < q.vertices.size(); ++i)
    os << "  v" << i << " [label=\"(" << q.vertices[i].p << ","
       << q.vertices[i].q << ")\"];\n";
  for (const auto& a : q.arrows) {
    os << "  v" << a.src << " -> v" << a.dst;
    if (a.val != 1) os << " [label=\"" << a.val << "\"]";
    os << ";\n";
  }
  for (size_t i = 0; i < q.tau.size(); ++i)
    os << "  v" << i << " -> v" << q.tau[i]
       << " [style=dashed, constraint=false];\n";
  os << "}\n";
  return os.str();
}

std::string orbit_to_json(const OrbitQuiver& q) {
  std::ostringstream os;
  os << "{\"vertices\":[";
  for (size_t i = 0; i < q.vertices.size(); ++i) {
    if (i) os << ",";
    os << "[" << q.vertices[i].p << "," << q.vertices[i].q << "]";
  }
  os << "],\"arrows\":[";
  for (size_t i = 0; i < q.arrows.size(); ++i) {
    if (i) os << ",";
    os << "{\"src\":" << q.arrows[i].src << ",\"dst\":" << q.arrows[i].dst
       << ",\"val\":" << q.arrows[i].val << "}";
  }
  os << "],\"tau\":[";
  for (size_t i = 0; i < q.tau.size(); ++i) {
    if (i) os << ",";
    os << "[" << i << "," << q.tau[i] << "]";
  }
  os << "]}";
  return os.str();
}

}  // namespace arq
