#include "arq/dynkin.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace arq {

const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::RankOutOfRange: return "RankOutOfRange";
    case ErrorCode::UnsupportedFamily: return "UnsupportedFamily";
    case ErrorCode::TreeMismatch: return "TreeMismatch";
    case ErrorCode::IdentityInput: return "IdentityInput";
    case ErrorCode::NotWeaklyAdmissible: return "NotWeaklyAdmissible";
    case ErrorCode::InfiniteQuotient: return "InfiniteQuotient";
    case ErrorCode::InvalidVertex: return "InvalidVertex";
    case ErrorCode::NotDynkinType: return "NotDynkinType";
    case ErrorCode::WindowOverflow: return "WindowOverflow";
    case ErrorCode::WindowTooLarge: return "WindowTooLarge";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UndefinedSymbolForFamily: return "UndefinedSymbolForFamily";
    case ErrorCode::UnrecognizedGenerator: return "UnrecognizedGenerator";
    case ErrorCode::DOutOfRange: return "DOutOfRange";
    case ErrorCode::DeformationArityMismatch: return "DeformationArityMismatch";
    case ErrorCode::NotInRadicalSquare: return "NotInRadicalSquare";
    case ErrorCode::DegreeCapExceeded: return "DegreeCapExceeded";
    case ErrorCode::NotSelfinjective: return "NotSelfinjective";
  }
  return "UnknownError";
}

const char* family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::D: return "D";
    case Family::E: return "E";
    case Family::L: return "L";
  }
  return "?";
}

Family family_from_string(const std::string& s) {
  if (s == "A") return Family::A;
  if (s == "D") return Family::D;
  if (s == "E") return Family::E;
  if (s == "L") return Family::L;
  throw Error(ErrorCode::ParseError, "unknown family '" + s + "'");
}

namespace {
constexpr int kMaxEnumRank = 64;  // A/D/L cap; E is capped at 8 by definition

void check_rank(Family family, int rank) {
  switch (family) {
    case Family::A:
      if (rank < 1 || rank > kMaxEnumRank)
        throw Error(ErrorCode::RankOutOfRange, "A_n requires 1 <= n <= 64");
      return;
    case Family::D:
      if (rank < 4 || rank > kMaxEnumRank)
        throw Error(ErrorCode::RankOutOfRange, "D_n requires 4 <= n <= 64");
      return;
    case Family::E:
      if (rank < 6 || rank > 8)
        throw Error(ErrorCode::RankOutOfRange, "E_n requires n in {6,7,8}");
      return;
    case Family::L:
      if (rank < 1 || rank > kMaxEnumRank)
        throw Error(ErrorCode::RankOutOfRange, "L_n requires 1 <= n <= 64");
      return;
  }
}
}  // namespace

bool DynkinTree::has_vertex(int q) const {
  return std::find(vertices.begin(), vertices.end(), q) != vertices.end();
}

std::vector<int> DynkinTree::tree_neighbors(int q) const {
  std::vector<int> r;
  for (int y : out[q])
    if (y != q) r.push_back(y);
  for (int y : in[q])
    if (y != q) r.push_back(y);
  return r;
}

DynkinTree build_tree(Family family, int rank) {
  check_rank(family, rank);
  DynkinTree t;
  t.family = family;
  t.rank = rank;
  const int n = rank;
  switch (family) {
    case Family::A:
      for (int i = 1; i <= n; ++i) t.vertices.push_back(i);
      for (int i = 1; i < n; ++i) t.arrows.push_back({i, i + 1});
      break;
    case Family::D:
      for (int i = 1; i <= n; ++i) t.vertices.push_back(i);
      for (int i = 1; i < n - 2; ++i) t.arrows.push_back({i, i + 1});
      t.arrows.push_back({n - 1, n - 2});
      t.arrows.push_back({n, n - 2});
      break;
    case Family::E:
      for (int i = 1; i <= n; ++i) t.vertices.push_back(i);
      t.arrows.push_back({2, 1});
      t.arrows.push_back({3, 2});
      t.arrows.push_back({3, 4});
      t.arrows.push_back({3, 5});
      for (int i = 5; i < n; ++i) t.arrows.push_back({i, i + 1});
      break;
    case Family::L:
      for (int i = 0; i < n; ++i) t.vertices.push_back(i);
      for (int i = 0; i < n - 1; ++i) t.arrows.push_back({i, i + 1});
      t.loop_vertices.push_back(0);
      break;
  }
  int maxv = 0;
  for (int v : t.vertices) maxv = std::max(maxv, v);
  t.out.assign(maxv + 1, {});
  t.in.assign(maxv + 1, {});
  for (const auto& a : t.arrows) {
    t.out[a.src].push_back(a.dst);
    t.in[a.dst].push_back(a.src);
  }
  return t;
}

namespace {
// The suspension's action on one slice, as (shift per vertex, permutation).
// Mirrors the per-family case analysis used by the automorphism module.
void suspension_action(const DynkinTree& t, std::vector<long>& shift,
                       std::vector<int>& perm) {
  const int n = t.rank;
  int maxv = n;
  shift.assign(maxv + 1, 0);
  perm.assign(maxv + 1, 0);
  for (int q : t.vertices) perm[q] = q;
  switch (t.family) {
    case Family::A:
      for (int q = 1; q <= n; ++q) {
        shift[q] = q;
        perm[q] = n + 1 - q;
      }
      break;
    case Family::D:
      for (int q = 1; q <= n; ++q) shift[q] = n - 1;
      if (n % 2 == 1) std::swap(perm[n - 1], perm[n]);
      break;
    case Family::E:
      if (n == 6) {
        for (int q = 1; q <= n; ++q) shift[q] = 6;
        std::swap(perm[1], perm[6]);
        std::swap(perm[2], perm[5]);
      } else {
        for (int q = 1; q <= n; ++q) shift[q] = (n == 7) ? 9 : 15;
      }
      break;
    case Family::L:
      throw Error(ErrorCode::UnsupportedFamily, "no suspension for L_n");
  }
}
}  // namespace

int coxeter_number(const DynkinTree& tree) {
  if (tree.family == Family::L)
    throw Error(ErrorCode::UnsupportedFamily, "coxeter_number needs A/D/E");
  std::vector<long> shift;
  std::vector<int> perm;
  suspension_action(tree, shift, perm);
  // S o S : (p,q) |-> (p + m_q + m_{perm(q)}, perm(perm(q)))
  long h = -1;
  for (int q : tree.vertices) {
    if (perm[perm[q]] != q)
      throw Error(ErrorCode::WindowOverflow, "S^2 is not a translation power");
    long s = shift[q] + shift[perm[q]];
    if (h == -1) h = s;
    if (s != h)
      throw Error(ErrorCode::WindowOverflow, "S^2 shift is not uniform");
  }
  return static_cast<int>(h);
}

long positive_root_count(const DynkinTree& tree) {
  if (tree.family == Family::L)
    throw Error(ErrorCode::UnsupportedFamily, "positive_root_count needs A/D/E");
  const int n = tree.rank;
  // Symmetric Cartan matrix of the underlying graph.
  std::vector<std::vector<int>> C(n + 1, std::vector<int>(n + 1, 0));
  for (int q : tree.vertices) C[q][q] = 2;
  for (const auto& a : tree.arrows) {
    C[a.src][a.dst] = -1;
    C[a.dst][a.src] = -1;
  }
  // Close the simple roots under simple reflections, keeping positives.
  std::set<std::vector<int>> roots;
  std::vector<std::vector<int>> queue;
  for (int q : tree.vertices) {
    std::vector<int> e(n + 1, 0);
    e[q] = 1;
    roots.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    auto v = queue.back();
    queue.pop_back();
    for (int q : tree.vertices) {
      long c = 0;
      for (int y : tree.vertices) c += static_cast<long>(C[q][y]) * v[y];
      auto w = v;
      w[q] -= static_cast<int>(c);
      bool positive = true, nonzero = false;
      for (int y : tree.vertices) {
        if (w[y] < 0) positive = false;
        if (w[y] != 0) nonzero = true;
      }
      if (positive && nonzero && roots.insert(w).second) queue.push_back(w);
    }
  }
  return static_cast<long>(roots.size());
}

std::string tree_to_dot(const DynkinTree& tree) {
  std::ostringstream os;
  os << "digraph " << family_name(tree.family) << tree.rank << " {\n";
  for (int v : tree.vertices) os << "  v" << v << " [label=\"" << v << "\"];\n";
  for (const auto& a : tree.arrows)
    os << "  v" << a.src << " -> v" << a.dst << ";\n";
  for (int v : tree.loop_vertices) os << "  v" << v << " -> v" << v << ";\n";
  os << "}\n";
  return os.str();
}

std::string tree_to_json(const DynkinTree& tree) {
  std::ostringstream os;
  os << "{\"family\":\"" << family_name(tree.family) << "\",\"rank\":"
     << tree.rank << ",\"arrows\":[";
  for (size_t i = 0; i < tree.arrows.size(); ++i) {
    if (i) os << ",";
    os << "[" << tree.arrows[i].src << "," << tree.arrows[i].dst << "]";
  }
  os << "],\"loop_vertices\":[";
  for (size_t i = 0; i < tree.loop_vertices.size(); ++i) {
    if (i) os << ",";
    os << tree.loop_vertices[i];
  }
  os << "]}";
  return os.str();
}

}  // namespace arq
