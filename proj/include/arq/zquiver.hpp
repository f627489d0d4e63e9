#pragma once

#include <string>
#include <utility>
#include <vector>

#include "arq/automorphism.hpp"
#include "arq/dynkin.hpp"

namespace arq {

// Arrows of the repetition quiver out of / into v: (p,q) -> (p,y) for each
// tree arrow q -> y, and (p,q) -> (p+1,z) for each tree arrow z -> q.
std::vector<ZVertex> successors(const DynkinTree& tree, ZVertex v);
std::vector<ZVertex> predecessors(const DynkinTree& tree, ZVertex v);
std::pair<std::vector<ZVertex>, std::vector<ZVertex>> neighbors(
    const DynkinTree& tree, ZVertex v);

struct ValuedArrow {
  int src;
  int dst;
  int val;
  bool operator==(const ValuedArrow&) const = default;
};

// A finite valued quiver with a translation, in raw form for validation and
// type identification. Vertices are 0..n-1.
struct RawTranslationQuiver {
  int n = 0;
  std::vector<ValuedArrow> arrows;
  std::vector<int> tau;
};

// A quotient of the repetition quiver by a cyclic automorphism group,
// presented on canonical orbit representatives.
struct OrbitQuiver {
  DynkinTree tree;
  SlicedAutomorphism gen;
  std::vector<ZVertex> vertices;   // canonical representatives, sorted
  std::vector<ValuedArrow> arrows; // indices into vertices; no double arrows
  std::vector<int> tau;            // induced translation, index -> index

  int index_of(ZVertex rep) const;
  // Canonical representative of the orbit of v: the lexicographically
  // smallest (p, q) among orbit elements with p >= 0.
  ZVertex canonical(ZVertex v) const;

  RawTranslationQuiver raw() const;
};

OrbitQuiver orbit_quotient(const DynkinTree& tree, const SlicedAutomorphism& g);

// Report-style check of the stable translation quiver axioms; returns one
// human-readable line per violation, empty when the input is valid.
std::vector<std::string> validate_translation_quiver(
    const RawTranslationQuiver& q);

// Search for (tree, generator) whose orbit quotient is isomorphic to q as a
// valued translation quiver. Throws NotDynkinType when no match exists.
std::pair<DynkinTree, SlicedAutomorphism> identify_type(
    const RawTranslationQuiver& q);

// True iff a and b are isomorphic as valued translation quivers.
bool translation_quiver_isomorphic(const RawTranslationQuiver& a,
                                   const RawTranslationQuiver& b);

std::string orbit_to_dot(const OrbitQuiver& q);
std::string orbit_to_json(const OrbitQuiver& q);

}  // namespace arq
