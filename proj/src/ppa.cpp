#include "arq/ppa.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <functional>
#include <sstream>

namespace arq {

namespace {

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

long modp(long v, long p) {
  v %= p;
  return v < 0 ? v + p : v;
}

long inv_mod(long a, long p) {
  long t = 0, newt = 1, r = p, newr = modp(a, p);
  while (newr != 0) {
    long q = r / newr;
    std::swap(t -= q * newt, newt);
    std::swap(r -= q * newr, newr);
  }
  if (r != 1) throw Error(ErrorCode::ParseError, "characteristic must be prime");
  return modp(t, p);
}

// Arrow endpoint tables for the completion engine; also used for the
// one-vertex quiver presenting R(tree).
struct Engine {
  int n;
  std::vector<int> asrc, adst;
  long p;

  int word_src(const Word& w) const { return asrc[w.front()]; }
  int word_dst(const Word& w) const { return adst[w.back()]; }

  void add_word(PathPoly& f, const Word& w, long c) const {
    c = modp(c, p);
    if (c == 0) return;
    auto [it, fresh] = f.terms.emplace(w, c);
    if (!fresh) {
      it->second = modp(it->second + c, p);
      if (it->second == 0) f.terms.erase(it);
    }
  }

  // f += c * u g v
  void axpy(PathPoly& f, long c, const Word& u, const PathPoly& g,
            const Word& v) const {
    for (const auto& [w, gc] : g.terms) {
      Word full = u;
      full.insert(full.end(), w.begin(), w.end());
      full.insert(full.end(), v.begin(), v.end());
      add_word(f, full, c * gc);
    }
  }

  const Word& lead(const PathPoly& f) const { return f.terms.rbegin()->first; }
  long lead_coef(const PathPoly& f) const { return f.terms.rbegin()->second; }

  void monicize(PathPoly& f) const {
    long s = inv_mod(lead_coef(f), p);
    for (auto& [w, c] : f.terms) c = modp(c * s, p);
  }

  // One reduction step anywhere in f; true when something was rewritten.
  bool reduce_once(PathPoly& f, const std::vector<PathPoly>& basis) const {
    for (auto it = f.terms.rbegin(); it != f.terms.rend(); ++it) {
      const Word& w = it->first;
      for (const auto& g : basis) {
        const Word& lg = lead(g);
        if (lg.size() > w.size()) continue;
        for (size_t pos = 0; pos + lg.size() <= w.size(); ++pos) {
          if (!std::equal(lg.begin(), lg.end(), w.begin() + pos)) continue;
          Word u(w.begin(), w.begin() + pos);
          Word v(w.begin() + pos + lg.size(), w.end());
          axpy(f, p - it->second, u, g, v);  // g is monic
          return true;
        }
      }
    }
    return false;
  }

  void reduce(PathPoly& f, const std::vector<PathPoly>& basis) const {
    while (!f.terms.empty() && reduce_once(f, basis)) {
    }
  }

  // Degree-capped completion of the relation list into a rewriting basis
  // with unique normal forms.
  std::vector<PathPoly> complete(std::vector<PathPoly> gens, long cap) const {
    std::vector<PathPoly> basis;
    std::deque<PathPoly> work(gens.begin(), gens.end());
    auto push_overlaps = [&](const PathPoly& f1, const PathPoly& f2) {
      const Word& w1 = lead(f1);
      const Word& w2 = lead(f2);
      for (size_t k = 1; k < w1.size() && k < w2.size(); ++k) {
        if (!std::equal(w2.begin(), w2.begin() + k, w1.end() - k)) continue;
        if (static_cast<long>(w1.size() + w2.size() - k) > cap) continue;
        PathPoly s;
        s.src = word_src(w1);
        s.dst = word_dst(w2);
        axpy(s, 1, {}, f1, Word(w2.begin() + k, w2.end()));
        axpy(s, p - 1, Word(w1.begin(), w1.end() - k), f2, {});
        work.push_back(std::move(s));
      }
    };
    while (!work.empty()) {
      PathPoly f = std::move(work.front());
      work.pop_front();
      reduce(f, basis);
      if (f.terms.empty()) continue;
      monicize(f);
      // Existing elements whose lead contains the new lead must be redone.
      const Word nl = lead(f);
      for (size_t i = 0; i < basis.size();) {
        const Word& lg = lead(basis[i]);
        bool contains = false;
        if (nl.size() <= lg.size())
          for (size_t pos = 0; pos + nl.size() <= lg.size(); ++pos)
            if (std::equal(nl.begin(), nl.end(), lg.begin() + pos)) {
              contains = true;
              break;
            }
        if (contains) {
          work.push_back(std::move(basis[i]));
          basis.erase(basis.begin() + i);
        } else {
          ++i;
        }
      }
      for (const auto& g : basis) {
        push_overlaps(f, g);
        push_overlaps(g, f);
      }
      push_overlaps(f, f);
      basis.push_back(std::move(f));
    }
    // Final interreduction so tails are in normal form too.
    bool changed = true;
    while (changed) {
      changed = false;
      for (size_t i = 0; i < basis.size(); ++i) {
        PathPoly f = basis[i];
        std::vector<PathPoly> others;
        for (size_t j = 0; j < basis.size(); ++j)
          if (j != i) others.push_back(basis[j]);
        reduce(f, others);
        if (f.terms.empty()) {
          basis.erase(basis.begin() + i);
          changed = true;
          break;
        }
        monicize(f);
        if (!(f.terms == basis[i].terms)) {
          basis[i] = std::move(f);
          changed = true;
        }
      }
    }
    return basis;
  }

  bool reducible_suffix(const Word& w, const std::vector<PathPoly>& basis)
      const {
    for (const auto& g : basis) {
      const Word& lg = lead(g);
      if (lg.size() <= w.size() &&
          std::equal(lg.begin(), lg.end(), w.end() - lg.size()))
        return true;
    }
    return false;
  }
};

Engine make_engine(const DoubleQuiver& q, long p) {
  Engine e;
  e.n = q.n;
  e.p = p;
  for (const auto& a : q.arrows) {
    e.asrc.push_back(a.src);
    e.adst.push_back(a.dst);
  }
  return e;
}

}  // namespace

DoubleQuiver build_double_quiver(const DynkinTree& tree) {
  DoubleQuiver q;
  q.family = tree.family;
  q.rank = tree.rank;
  q.n = tree.rank;
  const int n = tree.rank;
  auto pair_arrows = [&q](int s, int d, const std::string& base) {
    int i = static_cast<int>(q.arrows.size());
    q.arrows.push_back({s, d, i + 1, base});
    q.arrows.push_back({d, s, i, "bar_" + base});
  };
  switch (tree.family) {
    case Family::A:
      q.exceptional = 0;
      for (int i = 0; i + 1 < n; ++i)
        pair_arrows(i, i + 1, "a" + std::to_string(i));
      break;
    case Family::D:
      q.exceptional = 2;
      pair_arrows(0, 2, "a0");
      pair_arrows(1, 2, "a1");
      for (int i = 2; i + 1 < n; ++i)
        pair_arrows(i, i + 1, "a" + std::to_string(i));
      break;
    case Family::E:
      q.exceptional = 3;
      pair_arrows(0, 3, "a0");
      for (int i = 1; i + 1 < n; ++i)
        pair_arrows(i, i + 1, "a" + std::to_string(i));
      break;
    case Family::L: {
      q.exceptional = 0;
      int eps = static_cast<int>(q.arrows.size());
      q.arrows.push_back({0, 0, eps, "eps"});
      for (int i = 0; i + 1 < n; ++i)
        pair_arrows(i, i + 1, "a" + std::to_string(i));
      break;
    }
  }
  return q;
}

NCPolynomial parse_nc_polynomial(const std::string& text) {
  NCPolynomial f;
  size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  skip();
  if (i >= text.size())
    throw Error(ErrorCode::ParseError, "empty deformation polynomial");
  bool first = true;
  while (i < text.size()) {
    long sign = 1;
    skip();
    if (text[i] == '+' || text[i] == '-') {
      if (first)
        throw Error(ErrorCode::ParseError, "leading sign not allowed");
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip();
    } else if (!first) {
      throw Error(ErrorCode::ParseError, "expected + or - between terms");
    }
    first = false;
    long coef = 1;
    bool saw_coef = false, saw_var = false;
    std::vector<int> word;
    bool term_done = false;
    while (!term_done) {
      skip();
      if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        if (saw_coef || saw_var)
          throw Error(ErrorCode::ParseError, "misplaced coefficient");
        size_t start = i;
        while (i < text.size() &&
               std::isdigit(static_cast<unsigned char>(text[i])))
          ++i;
        coef = std::stol(text.substr(start, i - start));
        saw_coef = true;
      } else if (i < text.size() && (text[i] == 'x' || text[i] == 'y')) {
        word.push_back(text[i] == 'x' ? 0 : 1);
        saw_var = true;
        ++i;
      } else {
        throw Error(ErrorCode::ParseError,
                    "expected coefficient, x, or y in deformation term");
      }
      skip();
      if (i < text.size() && text[i] == '*') {
        ++i;
        continue;
      }
      term_done = true;
    }
    if (coef != 0 && (saw_var || saw_coef) && !word.empty())
      f.terms.push_back({sign * coef, word});
    else if (coef != 0 && word.empty() && saw_coef)
      f.terms.push_back({sign * coef, word});  // constant: rejected later
    skip();
  }
  return f;
}

namespace {

// Relations of R(tree) on the one-vertex quiver with loops x (and y).
std::vector<PathPoly> r_delta_relations(const DynkinTree& tree, long p,
                                        const Engine& e) {
  const int n = tree.rank;
  std::vector<PathPoly> rel;
  auto power_of_sum = [&](int vars, long k) {
    // (x + y)^k, expanded iteratively.
    PathPoly acc;
    acc.src = acc.dst = 0;
    for (int v = 0; v < vars; ++v) e.add_word(acc, {v}, 1);
    for (long step = 1; step < k; ++step) {
      PathPoly next;
      next.src = next.dst = 0;
      for (const auto& [w, c] : acc.terms)
        for (int v = 0; v < vars; ++v) {
          Word nw = w;
          nw.push_back(v);
          e.add_word(next, nw, c);
        }
      acc = std::move(next);
    }
    return acc;
  };
  auto mono = [&](Word w) {
    PathPoly f;
    f.src = f.dst = 0;
    e.add_word(f, w, 1);
    return f;
  };
  switch (tree.family) {
    case Family::A:
      break;  // R(A_n) = k, no generators
    case Family::D:
      rel.push_back(mono({0, 0}));
      rel.push_back(mono({1, 1}));
      rel.push_back(power_of_sum(2, n - 2));
      break;
    case Family::E:
      rel.push_back(mono({0, 0}));
      rel.push_back(mono({1, 1, 1}));
      rel.push_back(power_of_sum(2, n - 3));
      break;
    case Family::L:
      rel.push_back(mono(Word(2 * n, 0)));
      break;
  }
  (void)p;
  return rel;
}

// Validate f against the family's R(tree) and return its reduced form.
NCPolynomial reduce_deformation(const DynkinTree& tree, const NCPolynomial& f,
                                long p) {
  const int vars = tree.family == Family::L   ? 1
                   : tree.family == Family::A ? 0
                                              : 2;
  for (const auto& [c, w] : f.terms) {
    if (vars == 0)
      throw Error(ErrorCode::DeformationArityMismatch,
                  "A-type algebras admit no deformation");
    for (int v : w)
      if (v < 0 || v >= vars)
        throw Error(ErrorCode::DeformationArityMismatch,
                    "deformation variable out of range for this family");
    if (w.size() < 2 && modp(c, p) != 0)
      throw Error(ErrorCode::NotInRadicalSquare,
                  "deformation terms must have length >= 2");
  }
  if (f.zero() || vars == 0) return NCPolynomial{};
  Engine e;
  e.n = 1;
  e.p = p;
  for (int v = 0; v < vars; ++v) {
    e.asrc.push_back(0);
    e.adst.push_back(0);
  }
  long cap = tree.family == Family::L ? 2L * tree.rank + 2 : 4L * tree.rank + 8;
  std::vector<PathPoly> basis =
      e.complete(r_delta_relations(tree, p, e), cap);
  PathPoly fp;
  fp.src = fp.dst = 0;
  for (const auto& [c, w] : f.terms) e.add_word(fp, w, c);
  e.reduce(fp, basis);
  NCPolynomial out;
  for (const auto& [w, c] : fp.terms) out.terms.push_back({c, w});
  return out;
}

std::string format_nc(const NCPolynomial& f) {
  if (f.zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [c, w] : f.terms) {
    if (!first) os << " + ";
    first = false;
    os << c;
    for (int v : w) os << "*" << (v == 0 ? "x" : "y");
  }
  return os.str();
}

}  // namespace

std::vector<PathPoly> deformed_relations(const DynkinTree& tree,
                                         const NCPolynomial& f, long p) {
  if (!is_prime(p))
    throw Error(ErrorCode::ParseError, "characteristic must be prime");
  const DoubleQuiver q = build_double_quiver(tree);
  const Engine e = make_engine(q, p);
  const int n = tree.rank;
  NCPolynomial fr = reduce_deformation(tree, f, p);

  std::vector<PathPoly> rel;
  // Mesh sums at non-exceptional vertices.
  for (int i = 0; i < q.n; ++i) {
    if (i == q.exceptional) continue;
    PathPoly r;
    r.src = r.dst = i;
    for (int a = 0; a < static_cast<int>(q.arrows.size()); ++a)
      if (q.arrows[a].src == i)
        e.add_word(r, {a, q.arrows[a].partner}, 1);
    if (!r.terms.empty()) rel.push_back(std::move(r));
  }

  // The deformed relation at the exceptional vertex, plus the nilpotency
  // relation for D/E/L. Loop words at the exceptional vertex substituted
  // for the deformation variables.
  auto find_arrow = [&](const std::string& name) {
    for (int a = 0; a < static_cast<int>(q.arrows.size()); ++a)
      if (q.arrows[a].name == name) return a;
    throw Error(ErrorCode::UnsupportedFamily, "missing arrow " + name);
  };
  auto subst_word = [&](const std::vector<Word>& images,
                        const std::vector<int>& w) {
    Word out;
    for (int v : w)
      out.insert(out.end(), images[v].begin(), images[v].end());
    return out;
  };
  auto raised = [&](const std::vector<Word>& summands, long k) {
    if (static_cast<long>(summands.size()) > 1 && k > 24)
      throw Error(ErrorCode::DegreeCapExceeded,
                  "nilpotency relation expansion too large for this rank");
    PathPoly acc;
    acc.src = acc.dst = q.exceptional;
    for (const Word& s : summands) e.add_word(acc, s, 1);
    PathPoly result = acc;
    for (long step = 1; step < k; ++step) {
      PathPoly next;
      next.src = next.dst = q.exceptional;
      for (const auto& [w, c] : result.terms)
        for (const Word& s : summands) {
          Word nw = w;
          nw.insert(nw.end(), s.begin(), s.end());
          e.add_word(next, nw, c);
        }
      result = std::move(next);
    }
    return result;
  };

  switch (tree.family) {
    case Family::A: {
      if (n >= 2) {
        PathPoly r;
        r.src = r.dst = 0;
        int a0 = find_arrow("a0");
        e.add_word(r, {a0, q.arrows[a0].partner}, 1);
        rel.push_back(std::move(r));
      }
      break;
    }
    case Family::D:
    case Family::E: {
      const bool isD = tree.family == Family::D;
      int a0 = find_arrow("a0");
      int ab = isD ? find_arrow("a1") : find_arrow("a2");
      int chain = isD ? find_arrow("a2") : find_arrow("a3");
      Word xw{q.arrows[a0].partner, a0};
      Word yw{q.arrows[ab].partner, ab};
      PathPoly r;
      r.src = r.dst = q.exceptional;
      e.add_word(r, xw, 1);
      e.add_word(r, yw, 1);
      e.add_word(r, {chain, q.arrows[chain].partner}, 1);
      for (const auto& [c, w] : fr.terms)
        e.add_word(r, subst_word({xw, yw}, w), c);
      rel.push_back(std::move(r));
      rel.push_back(raised({xw, yw}, isD ? n - 2 : n - 3));
      break;
    }
    case Family::L: {
      int eps = find_arrow("eps");
      PathPoly r;
      r.src = r.dst = 0;
      e.add_word(r, {eps, eps}, 1);
      if (n >= 2) {
        int a0 = find_arrow("a0");
        e.add_word(r, {a0, q.arrows[a0].partner}, 1);
      }
      std::vector<Word> eps_image{Word{eps}};
      for (const auto& [c, w] : fr.terms) {
        Word sw{eps};
        Word body = subst_word(eps_image, w);
        sw.insert(sw.end(), body.begin(), body.end());
        e.add_word(r, sw, c);
      }
      rel.push_back(std::move(r));
      rel.push_back(raised({Word{eps}}, 2L * n));
      break;
    }
  }
  // Drop relations that vanished mod p.
  std::vector<PathPoly> out;
  for (auto& r : rel)
    if (!r.terms.empty()) out.push_back(std::move(r));
  return out;
}

std::vector<long> PathQuotientAlgebra::right_multiply(int i, int arrow) const {
  std::vector<long> out(basis.size(), 0);
  const Engine e = make_engine(quiver, p);
  const BasisElem& b = basis[i];
  if (b.dst != e.asrc[arrow]) return out;
  PathPoly f;
  f.src = b.src;
  f.dst = e.adst[arrow];
  Word w = b.word;
  w.push_back(arrow);
  e.add_word(f, w, 1);
  e.reduce(f, groebner);
  for (const auto& [word, c] : f.terms)
    out[basis_index.at({b.src, word})] = c;
  return out;
}

std::vector<long> PathQuotientAlgebra::left_multiply(int arrow, int i) const {
  std::vector<long> out(basis.size(), 0);
  const Engine e = make_engine(quiver, p);
  const BasisElem& b = basis[i];
  if (e.adst[arrow] != b.src) return out;
  PathPoly f;
  f.src = e.asrc[arrow];
  f.dst = b.dst;
  Word w{arrow};
  w.insert(w.end(), b.word.begin(), b.word.end());
  e.add_word(f, w, 1);
  e.reduce(f, groebner);
  for (const auto& [word, c] : f.terms)
    out[basis_index.at({e.asrc[arrow], word})] = c;
  return out;
}

PathQuotientAlgebra build_algebra(const DynkinTree& tree,
                                  const NCPolynomial& f, long p,
                                  long degree_cap) {
  if (degree_cap <= 0) degree_cap = 4L * tree.rank + 8;
  PathQuotientAlgebra alg;
  alg.quiver = build_double_quiver(tree);
  alg.p = p;
  alg.relations = deformed_relations(tree, f, p);
  const Engine e = make_engine(alg.quiver, p);
  alg.groebner = e.complete(alg.relations, degree_cap);

  // Depth-first normal form enumeration; prefixes of normal words are
  // normal, so exhausting extensions is a complete termination check.
  std::vector<PathQuotientAlgebra::BasisElem> found;
  std::function<void(int, Word&, int)> dfs = [&](int src, Word& w, int dst) {
    for (int a = 0; a < static_cast<int>(alg.quiver.arrows.size()); ++a) {
      if (alg.quiver.arrows[a].src != dst) continue;
      w.push_back(a);
      if (!e.reducible_suffix(w, alg.groebner)) {
        if (static_cast<long>(w.size()) >= degree_cap)
          throw Error(ErrorCode::DegreeCapExceeded,
                      "no all-zero path length level below the degree cap");
        found.push_back({src, alg.quiver.arrows[a].dst, w});
        dfs(src, w, alg.quiver.arrows[a].dst);
      }
      w.pop_back();
    }
  };
  for (int i = 0; i < alg.quiver.n; ++i) {
    found.push_back({i, i, {}});
    Word w;
    dfs(i, w, i);
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
    if (a.src != b.src) return a.src < b.src;
    return a.word < b.word;
  });
  alg.basis = std::move(found);
  for (int i = 0; i < static_cast<int>(alg.basis.size()); ++i)
    alg.basis_index[{alg.basis[i].src, alg.basis[i].word}] = i;
  return alg;
}

std::vector<std::vector<long>> cartan_matrix(const PathQuotientAlgebra& a) {
  std::vector<std::vector<long>> c(a.quiver.n,
                                   std::vector<long>(a.quiver.n, 0));
  for (const auto& b : a.basis) c[b.src][b.dst] += 1;
  return c;
}

namespace {

// Row-reduce over GF(p); returns rank. When kernel != nullptr, also emits a
// basis of the right kernel.
long gauss(std::vector<std::vector<long>> rows, int cols, long p,
           std::vector<std::vector<long>>* kernel) {
  std::vector<int> pivot_col;
  size_t r = 0;
  for (int c = 0; c < cols && r < rows.size(); ++c) {
    size_t sel = r;
    while (sel < rows.size() && rows[sel][c] % p == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    long s = inv_mod(rows[r][c], p);
    for (int j = 0; j < cols; ++j) rows[r][j] = modp(rows[r][j] * s, p);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] % p == 0) continue;
      long factor = modp(rows[i][c], p);
      for (int j = 0; j < cols; ++j)
        rows[i][j] = modp(rows[i][j] - factor * rows[r][j], p);
    }
    pivot_col.push_back(c);
    ++r;
  }
  if (kernel) {
    kernel->clear();
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col) is_pivot[c] = true;
    for (int c = 0; c < cols; ++c) {
      if (is_pivot[c]) continue;
      std::vector<long> v(cols, 0);
      v[c] = 1;
      for (size_t i = 0; i < pivot_col.size(); ++i)
        v[pivot_col[i]] = modp(-rows[i][c], p);
      kernel->push_back(std::move(v));
    }
  }
  return static_cast<long>(r);
}

// Kernel of right multiplication by every arrow, restricted to e_i A.
std::vector<std::vector<long>> socle_basis(const PathQuotientAlgebra& a,
                                           int i,
                                           std::vector<int>* members) {
  std::vector<int> mem;
  for (int b = 0; b < static_cast<int>(a.basis.size()); ++b)
    if (a.basis[b].src == i) mem.push_back(b);
  const int m = static_cast<int>(mem.size());
  std::vector<std::vector<long>> rows;
  for (int arrow = 0; arrow < static_cast<int>(a.quiver.arrows.size());
       ++arrow) {
    // One constraint row per target coordinate.
    std::vector<std::vector<long>> images(m);
    for (int c = 0; c < m; ++c) images[c] = a.right_multiply(mem[c], arrow);
    for (int t = 0; t < static_cast<int>(a.basis.size()); ++t) {
      std::vector<long> row(m, 0);
      bool nonzero = false;
      for (int c = 0; c < m; ++c) {
        row[c] = images[c][t];
        nonzero = nonzero || row[c] != 0;
      }
      if (nonzero) rows.push_back(std::move(row));
    }
  }
  std::vector<std::vector<long>> kernel;
  if (rows.empty()) {
    for (int c = 0; c < m; ++c) {
      std::vector<long> v(m, 0);
      v[c] = 1;
      kernel.push_back(std::move(v));
    }
  } else {
    gauss(rows, m, a.p, &kernel);
  }
  if (members) *members = mem;
  return kernel;
}

}  // namespace

std::vector<long> socle_dimensions(const PathQuotientAlgebra& a) {
  std::vector<long> dims;
  for (int i = 0; i < a.quiver.n; ++i)
    dims.push_back(static_cast<long>(socle_basis(a, i, nullptr).size()));
  return dims;
}

std::vector<int> nakayama_permutation(const PathQuotientAlgebra& a) {
  std::vector<int> nu(a.quiver.n, -1);
  for (int i = 0; i < a.quiver.n; ++i) {
    std::vector<int> mem;
    auto kernel = socle_basis(a, i, &mem);
    if (kernel.size() != 1)
      throw Error(ErrorCode::NotSelfinjective,
                  "socle of e_" + std::to_string(i) + "A has dimension " +
                      std::to_string(kernel.size()));
    int target = -1;
    for (size_t c = 0; c < kernel[0].size(); ++c) {
      if (kernel[0][c] % a.p == 0) continue;
      int dst = a.basis[mem[c]].dst;
      if (target == -1) target = dst;
      if (target != dst)
        throw Error(ErrorCode::NotSelfinjective,
                    "socle of e_" + std::to_string(i) +
                        "A is not concentrated at one vertex");
    }
    nu[i] = target;
  }
  return nu;
}

long center_dimension(const PathQuotientAlgebra& a) {
  // Commuting with the idempotents restricts to src == dst basis elements.
  std::vector<int> mem;
  for (int b = 0; b < static_cast<int>(a.basis.size()); ++b)
    if (a.basis[b].src == a.basis[b].dst) mem.push_back(b);
  const int m = static_cast<int>(mem.size());
  std::vector<std::vector<long>> rows;
  for (int arrow = 0; arrow < static_cast<int>(a.quiver.arrows.size());
       ++arrow) {
    std::vector<std::vector<long>> diff(m);
    for (int c = 0; c < m; ++c) {
      std::vector<long> r = a.right_multiply(mem[c], arrow);
      std::vector<long> l = a.left_multiply(arrow, mem[c]);
      diff[c].resize(a.basis.size());
      for (size_t t = 0; t < a.basis.size(); ++t)
        diff[c][t] = modp(r[t] - l[t], a.p);
    }
    for (size_t t = 0; t < a.basis.size(); ++t) {
      std::vector<long> row(m, 0);
      bool nonzero = false;
      for (int c = 0; c < m; ++c) {
        row[c] = diff[c][t];
        nonzero = nonzero || row[c] != 0;
      }
      if (nonzero) rows.push_back(std::move(row));
    }
  }
  if (rows.empty()) return m;
  return m - gauss(rows, m, a.p, nullptr);
}

InvariantReport invariant_report(const DynkinTree& tree, const NCPolynomial& f,
                                 long p) {
  PathQuotientAlgebra deformed = build_algebra(tree, f, p);
  PathQuotientAlgebra plain = build_algebra(tree, NCPolynomial{}, p);
  InvariantReport rep;
  rep.dim = deformed.dim();
  rep.cartan = cartan_matrix(deformed);
  rep.nakayama = nakayama_permutation(deformed);
  rep.socle_dims = socle_dimensions(deformed);
  rep.center_dim = center_dimension(deformed);
  rep.reduced_f = format_nc(reduce_deformation(tree, f, p));
  rep.matches_undeformed =
      rep.dim == plain.dim() && rep.cartan == cartan_matrix(plain) &&
      rep.nakayama == nakayama_permutation(plain) &&
      rep.socle_dims == socle_dimensions(plain) &&
      rep.center_dim == center_dimension(plain);
  return rep;
}

}  // namespace arq
