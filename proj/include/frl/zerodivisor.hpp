#pragma once

#include <optional>
#include <vector>

#include "frl/groupring.hpp"

namespace frl {

/// Decides exactly whether u has a right annihilator with support inside
/// the given candidate set: a nonzero v = sum x_w w with u*v = 0. The
/// kernel of v -> u*v is computed by exact integer elimination; when it is
/// nontrivial the returned witness is an integer element (denominators
/// cleared, content 1, leading coefficient positive) and is re-multiplied
/// against u before being returned.
///
/// Kernel triviality is definitive for the given support set only.
/// Requires u nonzero with integer coefficients.
template <class G>
std::optional<GroupRingElement<G>> zero_divisor_probe(const GroupRingElement<G>& u,
                                                      const std::vector<G>& candidate_support);

/// Z[F] version: candidate supports range over ball(rank, radius), so the
/// codomain support lies in ball(rank, radius + maxlen(u)).
std::optional<FreeRingElem> zero_divisor_probe(const FreeRingElem& u, int radius, int rank);

} // namespace frl
