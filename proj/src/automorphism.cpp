#include "arq/automorphism.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace arq {

namespace {

std::vector<ZVertex> successors_of(const DynkinTree& t, ZVertex v) {
  std::vector<ZVertex> r;
  for (int y : t.out[v.q]) r.push_back({v.p, y});
  for (int z : t.in[v.q]) r.push_back({v.p + 1, z});
  return r;
}

std::vector<ZVertex> predecessors_of(const DynkinTree& t, ZVertex v) {
  std::vector<ZVertex> r;
  for (int z : t.in[v.q]) r.push_back({v.p, z});
  for (int y : t.out[v.q]) r.push_back({v.p - 1, y});
  return r;
}

}  // namespace

SlicedAutomorphism::SlicedAutomorphism(DynkinTree tree, std::vector<long> shift,
                                       std::vector<int> perm)
    : tree_(std::move(tree)), shift_(std::move(shift)), perm_(std::move(perm)) {
  size_t need = tree_.out.size();
  if (shift_.size() != need || perm_.size() != need)
    throw Error(ErrorCode::InvalidVertex, "shift/perm size mismatch");
  std::vector<bool> seen(need, false);
  for (int q : tree_.vertices) {
    int img = perm_[q];
    if (!tree_.has_vertex(img) || seen[img])
      throw Error(ErrorCode::InvalidVertex, "perm is not a vertex bijection");
    seen[img] = true;
  }
}

SlicedAutomorphism SlicedAutomorphism::identity(const DynkinTree& tree) {
  std::vector<long> shift(tree.out.size(), 0);
  std::vector<int> perm(tree.out.size(), 0);
  for (int q : tree.vertices) perm[q] = q;
  return SlicedAutomorphism(tree, shift, perm);
}

ZVertex SlicedAutomorphism::apply(ZVertex v) const {
  return {v.p + shift_[v.q], perm_[v.q]};
}

ZVertex SlicedAutomorphism::apply_inverse(ZVertex v) const {
  for (int q : tree_.vertices)
    if (perm_[q] == v.q) return {v.p - shift_[q], q};
  throw Error(ErrorCode::InvalidVertex, "vertex outside tree");
}

SlicedAutomorphism SlicedAutomorphism::inverse() const {
  std::vector<long> shift(tree_.out.size(), 0);
  std::vector<int> perm(tree_.out.size(), 0);
  for (int q : tree_.vertices) {
    perm[perm_[q]] = q;
    shift[perm_[q]] = -shift_[q];
  }
  return SlicedAutomorphism(tree_, shift, perm);
}

bool SlicedAutomorphism::is_identity() const {
  for (int q : tree_.vertices)
    if (shift_[q] != 0 || perm_[q] != q) return false;
  return true;
}

bool SlicedAutomorphism::operator==(const SlicedAutomorphism& o) const {
  if (!tree_.same_shape(o.tree_)) return false;
  for (int q : tree_.vertices)
    if (shift_[q] != o.shift_[q] || perm_[q] != o.perm_[q]) return false;
  return true;
}

bool SlicedAutomorphism::preserves_arrows() const {
  for (int q : tree_.vertices) {
    ZVertex x{0, q};
    ZVertex gx = apply(x);
    for (ZVertex s : successors_of(tree_, x)) {
      ZVertex gs = apply(s);
      auto succ = successors_of(tree_, gx);
      if (std::find(succ.begin(), succ.end(), gs) == succ.end()) return false;
    }
  }
  return true;
}

std::string SlicedAutomorphism::describe() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (int q : tree_.vertices) {
    if (!first) os << ", ";
    first = false;
    os << q << "->(" << (shift_[q] >= 0 ? "+" : "") << shift_[q] << ","
       << perm_[q] << ")";
  }
  os << "}";
  return os.str();
}

SlicedAutomorphism translation(const DynkinTree& tree) {
  std::vector<long> shift(tree.out.size(), -1);
  std::vector<int> perm(tree.out.size(), 0);
  for (int q : tree.vertices) perm[q] = q;
  return SlicedAutomorphism(tree, shift, perm);
}

SlicedAutomorphism suspension(const DynkinTree& tree) {
  const int n = tree.rank;
  std::vector<long> shift(tree.out.size(), 0);
  std::vector<int> perm(tree.out.size(), 0);
  for (int q : tree.vertices) perm[q] = q;
  switch (tree.family) {
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
      for (int q = 1; q <= n; ++q) shift[q] = (n == 6) ? 6 : (n == 7) ? 9 : 15;
      if (n == 6) {
        std::swap(perm[1], perm[6]);
        std::swap(perm[2], perm[5]);
      }
      break;
    case Family::L:
      throw Error(ErrorCode::UnsupportedFamily, "suspension needs A/D/E");
  }
  return SlicedAutomorphism(tree, shift, perm);
}

SlicedAutomorphism serre_nu(const DynkinTree& tree) {
  return compose(suspension(tree), translation(tree));
}

SlicedAutomorphism tree_automorphism(const DynkinTree& tree,
                                     const std::vector<int>& perm) {
  std::vector<long> shift(tree.out.size(), 0);
  SlicedAutomorphism g(tree, shift, perm);
  if (!g.preserves_arrows())
    throw Error(ErrorCode::InvalidVertex,
                "permutation does not preserve the orientation");
  return g;
}

SlicedAutomorphism compose(const SlicedAutomorphism& g1,
                           const SlicedAutomorphism& g2) {
  if (!g1.tree().same_shape(g2.tree()))
    throw Error(ErrorCode::TreeMismatch, "composing over different trees");
  const DynkinTree& t = g1.tree();
  std::vector<long> shift(t.out.size(), 0);
  std::vector<int> perm(t.out.size(), 0);
  for (int q : t.vertices) {
    shift[q] = g2.shift(q) + g1.shift(g2.perm(q));
    perm[q] = g1.perm(g2.perm(q));
  }
  return SlicedAutomorphism(t, shift, perm);
}

SlicedAutomorphism power(const SlicedAutomorphism& g, long k) {
  SlicedAutomorphism base = k < 0 ? g.inverse() : g;
  long e = k < 0 ? -k : k;
  SlicedAutomorphism acc = SlicedAutomorphism::identity(g.tree());
  SlicedAutomorphism sq = base;
  while (e > 0) {
    if (e & 1) acc = compose(acc, sq);
    sq = compose(sq, sq);
    e >>= 1;
  }
  return acc;
}

bool equals(const SlicedAutomorphism& g1, const SlicedAutomorphism& g2) {
  return g1 == g2;
}

namespace {

struct OrbitInfo {
  std::vector<std::vector<int>> orbits;  // perm cycles on tree vertices
  std::vector<long> total_shift;        // net slice shift around each cycle
  std::vector<long> abs_sum;            // sum |m_q| around each cycle
};

OrbitInfo orbit_info(const SlicedAutomorphism& g) {
  OrbitInfo info;
  const DynkinTree& t = g.tree();
  std::vector<bool> seen(t.out.size(), false);
  for (int q0 : t.vertices) {
    if (seen[q0]) continue;
    std::vector<int> cyc;
    long total = 0, abssum = 0;
    int q = q0;
    do {
      seen[q] = true;
      cyc.push_back(q);
      total += g.shift(q);
      abssum += std::abs(g.shift(q));
      q = g.perm(q);
    } while (q != q0);
    info.orbits.push_back(cyc);
    info.total_shift.push_back(total);
    info.abs_sum.push_back(abssum);
  }
  return info;
}

// x^+ cap (hx)^+ nonempty for some x, checked on one slice.
bool violates_weak(const SlicedAutomorphism& h) {
  const DynkinTree& t = h.tree();
  for (int q : t.vertices) {
    ZVertex x{0, q};
    auto s1 = successors_of(t, x);
    auto s2 = successors_of(t, h.apply(x));
    for (const auto& a : s1)
      for (const auto& b : s2)
        if (a == b) return true;
  }
  return false;
}

// Largest power worth testing: beyond it every vertex shift of g^k has
// absolute value > 1, so x^+ and (g^k x)^+ live in disjoint slice bands.
long power_window(const SlicedAutomorphism& g) {
  OrbitInfo info = orbit_info(g);
  long K = 1;
  bool zero_orbit = false;
  for (size_t i = 0; i < info.orbits.size(); ++i) {
    long L = static_cast<long>(info.orbits[i].size());
    if (info.total_shift[i] == 0) {
      zero_orbit = true;
      K = std::max(K, 2 * L);
    } else {
      long t = std::abs(info.total_shift[i]);
      K = std::max(K, L * ((info.abs_sum[i] + 2) / t + 2));
    }
  }
  if (zero_orbit) {
    long lcm = 1;
    for (const auto& o : info.orbits)
      lcm = std::lcm(lcm, static_cast<long>(o.size()));
    K = std::max(K, 2 * lcm);
  }
  return K;
}

}  // namespace

bool is_weakly_admissible(const SlicedAutomorphism& g) {
  if (g.is_identity())
    throw Error(ErrorCode::IdentityInput, "identity is not a generator");
  long K = power_window(g);
  SlicedAutomorphism h = SlicedAutomorphism::identity(g.tree());
  for (long k = 1; k <= K; ++k) {
    h = compose(h, g);
    if (h.is_identity()) continue;  // finite order; only nontrivial powers count
    if (violates_weak(h)) return false;
  }
  return true;
}

bool is_admissible(const SlicedAutomorphism& g) {
  if (g.is_identity())
    throw Error(ErrorCode::IdentityInput, "identity is not a generator");
  if (!is_weakly_admissible(g)) return false;
  const DynkinTree& t = g.tree();
  long K = power_window(g);
  // Orbit of <g> may not meet {x} u x^+ (nor {x} u x^-) twice.
  for (int q : t.vertices) {
    ZVertex x{0, q};
    for (int side = 0; side < 2; ++side) {
      std::vector<ZVertex> set = side == 0 ? successors_of(t, x)
                                           : predecessors_of(t, x);
      set.push_back(x);
      for (const auto& u : set)
        for (const auto& v : set) {
          if (u == v) continue;
          ZVertex w = u;
          for (long k = 1; k <= K; ++k) {
            w = g.apply(w);
            if (w == v) return false;
          }
        }
    }
  }
  return true;
}

namespace {

SlicedAutomorphism phi_for(const DynkinTree& t) {
  const int n = t.rank;
  switch (t.family) {
    case Family::A:
      if (n % 2 == 1 && n >= 3)
        return compose(power(translation(t), (n + 1) / 2), suspension(t));
      throw Error(ErrorCode::UndefinedSymbolForFamily,
                  "phi undefined for this family/rank");
    case Family::D: {
      std::vector<int> perm(t.out.size(), 0);
      for (int q : t.vertices) perm[q] = q;
      std::swap(perm[n - 1], perm[n]);
      return tree_automorphism(t, perm);
    }
    case Family::E: {
      if (n != 6)
        throw Error(ErrorCode::UndefinedSymbolForFamily, "phi needs E_6");
      std::vector<int> perm(t.out.size(), 0);
      for (int q : t.vertices) perm[q] = q;
      std::swap(perm[1], perm[6]);
      std::swap(perm[2], perm[5]);
      return tree_automorphism(t, perm);
    }
    case Family::L:
      throw Error(ErrorCode::UndefinedSymbolForFamily, "phi undefined for L");
  }
  throw Error(ErrorCode::UndefinedSymbolForFamily, "phi");
}

SlicedAutomorphism rho_for(const DynkinTree& t) {
  if (t.family != Family::A || t.rank % 2 != 0)
    throw Error(ErrorCode::UndefinedSymbolForFamily, "rho needs A_n, n even");
  return compose(power(translation(t), t.rank / 2), suspension(t));
}

// The six branch permutations of D_4 in cycle-name order:
// slots (1,2,3) = vertices (1, n-1, n).
SlicedAutomorphism d4_phi(const DynkinTree& t, const std::string& cycles) {
  if (t.family != Family::D || t.rank != 4)
    throw Error(ErrorCode::UndefinedSymbolForFamily, "phi(...) needs D_4");
  int slot[4] = {0, 1, 3, 4};
  std::vector<int> perm(t.out.size(), 0);
  for (int q : t.vertices) perm[q] = q;
  // cycles is a digit string like "12" or "123" over {1,2,3}
  std::vector<int> c;
  for (char ch : cycles) {
    if (ch < '1' || ch > '3')
      throw Error(ErrorCode::ParseError, "phi(...) wants digits in 1..3");
    c.push_back(ch - '0');
  }
  if (c.size() < 2 || c.size() > 3)
    throw Error(ErrorCode::ParseError, "phi(...) wants a 2- or 3-cycle");
  for (size_t i = 0; i < c.size(); ++i)
    perm[slot[c[i]]] = slot[c[(i + 1) % c.size()]];
  return tree_automorphism(t, perm);
}

std::vector<SlicedAutomorphism> orientation_preserving_tree_autos(
    const DynkinTree& t) {
  std::vector<SlicedAutomorphism> r;
  r.push_back(SlicedAutomorphism::identity(t));
  const int n = t.rank;
  if (t.family == Family::D && n == 4) {
    for (const char* c : {"12", "13", "23", "123", "132"})
      r.push_back(d4_phi(t, c));
  } else if (t.family == Family::D) {
    r.push_back(phi_for(t));
  } else if (t.family == Family::E && n == 6) {
    r.push_back(phi_for(t));
  }
  return r;
}

}  // namespace

std::vector<SlicedAutomorphism> enumerate_weakly_admissible(
    const DynkinTree& tree, int r_max) {
  if (tree.family == Family::L)
    throw Error(ErrorCode::UnsupportedFamily, "enumeration needs A/D/E");
  if (r_max < 1) throw Error(ErrorCode::DOutOfRange, "r_max must be >= 1");
  const int n = tree.rank;
  std::vector<SlicedAutomorphism> out;
  auto push_unique = [&out](const SlicedAutomorphism& g) {
    for (const auto& h : out)
      if (h == g) return;
    out.push_back(g);
  };
  SlicedAutomorphism tau = translation(tree);
  switch (tree.family) {
    case Family::A:
      if (n % 2 == 1) {
        for (int r = 1; r <= r_max; ++r) push_unique(power(tau, r));
        if (n >= 3) {
          SlicedAutomorphism phi = phi_for(tree);
          for (int r = 1; r <= r_max; ++r)
            push_unique(compose(phi, power(tau, r)));
        }
      } else {
        SlicedAutomorphism rho = rho_for(tree);
        for (int r = 1; r <= r_max; ++r) push_unique(power(rho, r));
      }
      break;
    case Family::D:
      if (n == 4) {
        for (const auto& phi : orientation_preserving_tree_autos(tree))
          for (int r = 1; r <= r_max; ++r)
            push_unique(compose(phi, power(tau, r)));
      } else {
        SlicedAutomorphism phi = phi_for(tree);
        for (int r = 1; r <= r_max; ++r) {
          push_unique(power(tau, r));
          push_unique(compose(power(tau, r), phi));
        }
      }
      break;
    case Family::E:
      for (int r = 1; r <= r_max; ++r) push_unique(power(tau, r));
      if (n == 6) {
        SlicedAutomorphism phi = phi_for(tree);
        for (int r = 1; r <= r_max; ++r)
          push_unique(compose(phi, power(tau, r)));
      }
      break;
    case Family::L:
      break;
  }
  for (const auto& g : out)
    if (!is_weakly_admissible(g))
      throw Error(ErrorCode::NotWeaklyAdmissible,
                  "enumerated generator failed verification: " + g.describe());
  return out;
}

bool conjugacy_equal(const SlicedAutomorphism& g1,
                     const SlicedAutomorphism& g2) {
  if (!g1.tree().same_shape(g2.tree()))
    throw Error(ErrorCode::TreeMismatch, "conjugacy over different trees");
  const DynkinTree& t = g1.tree();
  SlicedAutomorphism g2inv = g2.inverse();
  // Conjugation by tau powers is trivial (tau is central among sliced
  // automorphisms), so candidates reduce to psi * S^b.
  std::vector<SlicedAutomorphism> hs = orientation_preserving_tree_autos(t);
  if (t.family != Family::L) {
    SlicedAutomorphism S = suspension(t);
    size_t base = hs.size();
    for (size_t i = 0; i < base; ++i) hs.push_back(compose(hs[i], S));
  }
  for (const auto& h : hs) {
    SlicedAutomorphism c = compose(compose(h, g1), h.inverse());
    if (c == g2 || c == g2inv) return true;
  }
  return false;
}

namespace {

struct Token {
  std::string name;
  std::string args;
  long exponent = 1;
};

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> tokens;
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  skip_ws();
  if (i >= text.size()) throw Error(ErrorCode::ParseError, "empty expression");
  while (i < text.size()) {
    Token tok;
    while (i < text.size() &&
           (std::isalpha(static_cast<unsigned char>(text[i]))))
      tok.name += text[i++];
    if (tok.name.empty())
      throw Error(ErrorCode::ParseError,
                  "expected a term at offset " + std::to_string(i));
    if (i < text.size() && text[i] == '(') {
      size_t close = text.find(')', i);
      if (close == std::string::npos)
        throw Error(ErrorCode::ParseError, "unclosed '('");
      tok.args = text.substr(i + 1, close - i - 1);
      i = close + 1;
    }
    if (i < text.size() && text[i] == '^') {
      ++i;
      size_t start = i;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        ++i;
      if (i == start || (i == start + 1 && !std::isdigit(
                                               static_cast<unsigned char>(text[start]))))
        throw Error(ErrorCode::ParseError, "malformed exponent");
      tok.exponent = std::stol(text.substr(start, i - start));
    }
    tokens.push_back(tok);
    skip_ws();
    if (i < text.size()) {
      if (text[i] != '*')
        throw Error(ErrorCode::ParseError,
                    std::string("expected '*' before '") + text[i] + "'");
      ++i;
      skip_ws();
      if (i >= text.size())
        throw Error(ErrorCode::ParseError, "trailing '*'");
    }
  }
  return tokens;
}

}  // namespace

SlicedAutomorphism parse_automorphism(const DynkinTree& tree,
                                      const std::string& text) {
  auto tokens = tokenize(text);
  SlicedAutomorphism result = SlicedAutomorphism::identity(tree);
  for (const auto& tok : tokens) {
    SlicedAutomorphism term = SlicedAutomorphism::identity(tree);
    if (tok.name == "id") {
      if (!tok.args.empty()) throw Error(ErrorCode::ParseError, "id takes no args");
    } else if (tok.name == "tau") {
      term = translation(tree);
    } else if (tok.name == "S") {
      if (tree.family == Family::L)
        throw Error(ErrorCode::UndefinedSymbolForFamily, "S undefined for L");
      term = suspension(tree);
    } else if (tok.name == "nu") {
      if (tree.family == Family::L)
        throw Error(ErrorCode::UndefinedSymbolForFamily, "nu undefined for L");
      term = serre_nu(tree);
    } else if (tok.name == "rho") {
      term = rho_for(tree);
    } else if (tok.name == "phi") {
      if (!tok.args.empty())
        term = d4_phi(tree, tok.args);
      else
        term = phi_for(tree);
    } else {
      throw Error(ErrorCode::ParseError, "unknown term '" + tok.name + "'");
    }
    result = compose(result, power(term, tok.exponent));
  }
  return result;
}

}  // namespace arq
