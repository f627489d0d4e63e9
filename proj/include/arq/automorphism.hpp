#pragma once

#include <string>
#include <vector>

#include "arq/dynkin.hpp"

namespace arq {

// A vertex (p, q) of the repetition quiver: slice p, tree vertex q.
struct ZVertex {
  long p;
  int q;
  bool operator==(const ZVertex&) const = default;
  auto operator<=>(const ZVertex&) const = default;
};

// An automorphism of the repetition quiver in sliced form:
//   g(p, q) = (p + shift[q], perm[q]).
// Every automorphism used here (tau, S, nu, tree automorphisms and their
// compositions) has this shape. All sliced automorphisms commute with tau.
class SlicedAutomorphism {
 public:
  SlicedAutomorphism(DynkinTree tree, std::vector<long> shift,
                     std::vector<int> perm);

  static SlicedAutomorphism identity(const DynkinTree& tree);

  const DynkinTree& tree() const { return tree_; }
  long shift(int q) const { return shift_[q]; }
  int perm(int q) const { return perm_[q]; }

  ZVertex apply(ZVertex v) const;
  ZVertex apply_inverse(ZVertex v) const;

  SlicedAutomorphism inverse() const;
  bool is_identity() const;

  bool operator==(const SlicedAutomorphism& o) const;

  // True iff the sliced map sends arrows of the repetition quiver to arrows;
  // checked on one fundamental slice.
  bool preserves_arrows() const;

  std::string describe() const;

 private:
  DynkinTree tree_;
  std::vector<long> shift_;
  std::vector<int> perm_;
};

SlicedAutomorphism translation(const DynkinTree& tree);          // tau
SlicedAutomorphism suspension(const DynkinTree& tree);           // S
SlicedAutomorphism serre_nu(const DynkinTree& tree);             // nu = S tau

// Tree automorphism with zero shifts. The permutation must preserve the
// fixed orientation.
SlicedAutomorphism tree_automorphism(const DynkinTree& tree,
                                     const std::vector<int>& perm);

SlicedAutomorphism compose(const SlicedAutomorphism& g1,
                           const SlicedAutomorphism& g2);  // g1 after g2
SlicedAutomorphism power(const SlicedAutomorphism& g, long k);
bool equals(const SlicedAutomorphism& g1, const SlicedAutomorphism& g2);

bool is_weakly_admissible(const SlicedAutomorphism& g);
bool is_admissible(const SlicedAutomorphism& g);

// The generator list of the weak-admissibility classification, restricted to
// exponent <= r_max; every entry passes is_weakly_admissible and entries are
// pairwise distinct.
std::vector<SlicedAutomorphism> enumerate_weakly_admissible(
    const DynkinTree& tree, int r_max);

// Whether <g1> and <g2> are conjugate subgroups via some automorphism of the
// repetition quiver. Brute-force over tau-powers, S, and orientation
// preserving tree automorphisms.
bool conjugacy_equal(const SlicedAutomorphism& g1,
                     const SlicedAutomorphism& g2);

// Grammar: terms `tau`, `S`, `phi`, `rho`, `id`, optional `^k`, joined by `*`.
// `phi` resolves per family; for D_4 write `phi(12)`, `phi(123)`, ... naming
// a permutation of the three branch vertices (n-1 handled as 2nd, n as 3rd).
SlicedAutomorphism parse_automorphism(const DynkinTree& tree,
                                      const std::string& text);

}  // namespace arq
