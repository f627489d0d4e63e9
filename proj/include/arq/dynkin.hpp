#pragma once

#include <string>
#include <vector>

#include "arq/errors.hpp"

namespace arq {

enum class Family { A, D, E, L };

const char* family_name(Family f);
Family family_from_string(const std::string& s);

struct TreeArrow {
  int src;
  int dst;
  bool operator==(const TreeArrow&) const = default;
};

// A simply laced Dynkin tree (A, D, E) or generalized Dynkin tree L_n,
// with the fixed vertex numbering and orientation used throughout:
//   A_n : 1 -> 2 -> ... -> n
//   D_n : 1 -> 2 -> ... -> n-2,  n-1 -> n-2,  n -> n-2
//   E_n : 2 -> 1, 3 -> 2, 3 -> 4, 3 -> 5, 5 -> 6 -> ... -> n
//   L_n : A_n-shaped on vertices 0..n-1 with a loop marker at vertex 0.
// Immutable after construction.
struct DynkinTree {
  Family family;
  int rank;
  std::vector<int> vertices;
  std::vector<TreeArrow> arrows;
  std::vector<int> loop_vertices;

  // Adjacency indexed by vertex id (slot 0 unused for A/D/E).
  std::vector<std::vector<int>> out;
  std::vector<std::vector<int>> in;

  bool has_vertex(int q) const;
  // Neighbors in the underlying undirected tree (loops excluded).
  std::vector<int> tree_neighbors(int q) const;
  bool same_shape(const DynkinTree& o) const {
    return family == o.family && rank == o.rank;
  }
};

DynkinTree build_tree(Family family, int rank);

// Smallest h > 0 with S^2 = tau^{-h}, read off by composing the suspension
// with itself. A/D/E only.
int coxeter_number(const DynkinTree& tree);

// Number of positive roots of the underlying diagram (= isoclasses of
// indecomposables over a path algebra of that type). A/D/E only.
long positive_root_count(const DynkinTree& tree);

std::string tree_to_dot(const DynkinTree& tree);
std::string tree_to_json(const DynkinTree& tree);

}  // namespace arq
