#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "arq/mesh.hpp"

namespace arq {

// Per-arrow record of the direct Hom criterion: dim Hom(x, y) and the sum of
// dim Hom(x, g^r y) over r != 0.
struct ArrowHomCheck {
  ZVertex x;
  ZVertex y;
  long self_dim;
  long other_sum;
  bool ok() const { return self_dim == 1 && other_sum == 0; }
};

// True iff (tree, <g>) falls under a listed sufficient case of the
// standardness theorem (including the cylindric case A_n with g = tau^r for
// any r >= 1). Throws UnrecognizedGenerator when g does not match any form
// of the weakly admissible generator classification.
bool standard_by_table(const DynkinTree& tree, const SlicedAutomorphism& g);

// Direct criterion: for one arrow per sigma-orbit in a fundamental domain,
// Hom(x, y) must be one-dimensional with no contribution from g-translates.
std::pair<bool, std::vector<ArrowHomCheck>> standard_by_hom_condition(
    const DynkinTree& tree, const SlicedAutomorphism& g);

// Whether the quotient has more vertices than there are indecomposable
// modules over a path algebra of type tree.
bool vertex_count_criterion(const DynkinTree& tree,
                            const SlicedAutomorphism& g);

// Smallest d in [1, d_max] with S^d = nu modulo <g> on the repetition
// quiver; nullopt when none. A necessary condition for d-Calabi-Yau.
std::optional<long> cy_dimension(const DynkinTree& tree,
                                 const SlicedAutomorphism& g,
                                 long d_max = 24);

// Generator tau^{-1} S^{d-1} of the maximal d-Calabi-Yau orbit category.
SlicedAutomorphism maximal_cy_generator(const DynkinTree& tree, long d);

}  // namespace arq
