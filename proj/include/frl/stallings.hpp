#pragma once

#include <tuple>
#include <vector>

#include "frl/word.hpp"

namespace frl {

/// Folded core automaton of a finitely generated subgroup of the free
/// group: a connected labeled graph with a base vertex, deterministic in
/// both directions, in which every non-base vertex has degree >= 2. The
/// base vertex is always vertex 0 and the numbering is the canonical BFS
/// order (labels ascending, out-edge before in-edge), so structural
/// equality coincides with isomorphism of based labeled graphs.
class SubgroupAutomaton {
public:
  /// Wedge of loops at the base, folded to a fixpoint, trimmed to core.
  /// Identity generators are ignored; an empty list gives the trivial
  /// subgroup. Fold candidates are processed in (vertex-id, label) order,
  /// so the construction is reproducible.
  static SubgroupAutomaton build(const std::vector<ReducedWord>& gens, int rank);

  int rank() const { return rank_; }
  int base() const { return 0; }
  std::size_t vertex_count() const { return succ_.size(); }
  std::size_t edge_count() const;

  /// Rank of the subgroup: edges - vertices + 1 on the core graph.
  int subgroup_rank() const {
    return static_cast<int>(edge_count()) - static_cast<int>(vertex_count()) + 1;
  }

  /// True iff w traces a closed path at the base (inverse letters read
  /// against edge direction).
  bool member(const ReducedWord& w) const;

  /// Pullback: product automaton on vertex pairs reachable from the pair
  /// of bases, trimmed to core. Accepts exactly the intersection.
  SubgroupAutomaton intersect(const SubgroupAutomaton& other) const;

  /// Free basis: one generator per edge outside the BFS spanning tree,
  /// as path-to-edge-source * label * inverse path-from-edge-target.
  std::vector<ReducedWord> basis() const;

  /// Edges as (source, generator, target), canonically ordered.
  std::vector<std::tuple<int, int, int>> edges() const;

  bool operator==(const SubgroupAutomaton& rhs) const = default;

private:
  SubgroupAutomaton() = default;

  /// Renumbers vertices into canonical BFS order from the base and trims
  /// non-base vertices of degree <= 1.
  static SubgroupAutomaton canonicalize(int rank, int base,
                                        std::vector<std::tuple<int, int, int>> edge_list,
                                        int vertex_count);

  int rank_ = 2;
  std::vector<std::vector<int>> succ_; // [vertex][gen-1] -> target or -1
  std::vector<std::vector<int>> pred_; // [vertex][gen-1] -> source or -1
};

} // namespace frl
