#pragma once

#include <map>
#include <string>
#include <vector>

#include "arq/dynkin.hpp"

namespace arq {

// The double quiver: one arrow pair a, abar per tree edge, plus the loop
// eps (its own partner) at vertex 0 for L. Vertices are 0..n-1.
struct DoubleQuiver {
  struct Arrow {
    int src;
    int dst;
    int partner;  // index of the opposite arrow; loops partner themselves
    std::string name;
  };
  Family family;
  int rank;
  int n;
  std::vector<Arrow> arrows;
  int exceptional;  // vertex carrying the deformed relation
};

DoubleQuiver build_double_quiver(const DynkinTree& tree);

// A deformation parameter: a noncommutative polynomial in x (and y for D/E)
// with integer coefficients; var ids: 0 = x, 1 = y.
struct NCPolynomial {
  std::vector<std::pair<long, std::vector<int>>> terms;
  bool zero() const { return terms.empty(); }
};

// Grammar: terms joined by + or -, each an optional integer coefficient and
// a '*'-separated product of x, y; e.g. "x*y + 2*y*x*x", "0".
NCPolynomial parse_nc_polynomial(const std::string& text);

// Words are sequences of arrow ids forming a path; length >= 1.
using Word = std::vector<int>;

struct WordLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

// A linear combination of parallel paths with coefficients in GF(p).
struct PathPoly {
  int src = 0;
  int dst = 0;
  std::map<Word, long, WordLess> terms;
};

// The relation list of the deformed preprojective algebra: one mesh sum per
// non-exceptional vertex, the deformed relation at the exceptional vertex,
// and the extra nilpotency relation for D/E/L. f is validated (arity per
// family, all words of length >= 2) and reduced in R(tree) first.
std::vector<PathPoly> deformed_relations(const DynkinTree& tree,
                                         const NCPolynomial& f, long p);

struct PathQuotientAlgebra {
  DoubleQuiver quiver;
  long p = 0;
  std::vector<PathPoly> relations;
  std::vector<PathPoly> groebner;  // reduced basis used for normal forms

  struct BasisElem {
    int src;
    int dst;
    Word word;  // empty = the idempotent e_src
  };
  std::vector<BasisElem> basis;  // normal-form paths, sorted by (len, word)
  std::map<std::pair<int, Word>, int> basis_index;  // (src, word) -> position

  long dim() const { return static_cast<long>(basis.size()); }

  // Normal form of basis[i] * arrow a (resp. arrow a * basis[i]) as a
  // coefficient vector over the basis; zero vector when endpoints mismatch.
  std::vector<long> right_multiply(int i, int arrow) const;
  std::vector<long> left_multiply(int arrow, int i) const;
};

// Level-capped completion + normal form enumeration. degree_cap 0 means the
// default 4*rank + 8. Throws DegreeCapExceeded when normal-form words reach
// the cap (quotient not visibly finite dimensional at this cap).
PathQuotientAlgebra build_algebra(const DynkinTree& tree,
                                  const NCPolynomial& f, long p,
                                  long degree_cap = 0);

std::vector<std::vector<long>> cartan_matrix(const PathQuotientAlgebra& a);

// nu with socle(e_i A) isomorphic to the simple at nu(i). Throws
// NotSelfinjective when some socle is not one dimensional or not
// concentrated at a single vertex.
std::vector<int> nakayama_permutation(const PathQuotientAlgebra& a);

std::vector<long> socle_dimensions(const PathQuotientAlgebra& a);
long center_dimension(const PathQuotientAlgebra& a);

struct InvariantReport {
  long dim = 0;
  std::vector<std::vector<long>> cartan;
  std::vector<int> nakayama;
  std::vector<long> socle_dims;
  long center_dim = 0;
  std::string reduced_f;
  bool matches_undeformed = false;  // all invariants equal the f=0 algebra
};

InvariantReport invariant_report(const DynkinTree& tree, const NCPolynomial& f,
                                 long p);

}  // namespace arq
