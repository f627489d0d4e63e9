#pragma once

#include <map>
#include <string>
#include <vector>

#include "arq/zquiver.hpp"

namespace arq {

// dim Hom(x, -) in the mesh category, as a finitely supported map.
struct DimensionFunction {
  ZVertex base;
  std::map<ZVertex, long> values;

  long at(ZVertex y) const {
    auto it = values.find(y);
    return it == values.end() ? 0 : it->second;
  }
};

// Knitting: slice-by-slice evaluation of
//   d(Z) = sum_{y in (tau Z)^+} d(y) - d(tau Z) + [Z=x] + [Z=Sx]
// with d = 0 left of the source slice. Results are memoized per (tree, q);
// the memo map is safe for concurrent callers.
DimensionFunction hom_knit(const DynkinTree& tree, ZVertex x);

// Independent check: dimension of the span of paths x -> y modulo mesh
// relators, by exact rational elimination. Throws WindowTooLarge when the
// enumeration exceeds path_budget paths.
long hom_oracle(const DynkinTree& tree, ZVertex x, ZVertex y,
                long path_budget = 1000000);

// Hom dimension in the orbit category: sum_r hom_knit(x)(g^r y).
long orbit_hom(const DynkinTree& tree, const SlicedAutomorphism& g, ZVertex x,
               ZVertex y);

struct TotalHom {
  OrbitQuiver quiver;
  std::vector<std::vector<long>> dims;  // dims[i][j] = Hom(rep_i, rep_j)
};

// Full Hom matrix over orbit representatives. total_hom uses OpenMP when
// available; total_hom_serial is the reference implementation.
TotalHom total_hom(const DynkinTree& tree, const SlicedAutomorphism& g);
TotalHom total_hom_serial(const DynkinTree& tree, const SlicedAutomorphism& g);

// l(y) = sum over representatives x of Hom(x, y), i.e. column sums.
std::vector<long> l_function(const TotalHom& t);

std::string dimension_to_tsv(const DimensionFunction& d);
std::string dimension_to_dot(const DimensionFunction& d);

}  // namespace arq
