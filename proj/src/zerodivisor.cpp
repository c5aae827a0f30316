#include "frl/zerodivisor.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <stdexcept>

#include "frl/kernel.hpp"

namespace frl {

template <class G>
std::optional<GroupRingElement<G>> zero_divisor_probe(const GroupRingElement<G>& u,
                                                      const std::vector<G>& candidate_support) {
  if (u.is_zero()) throw std::invalid_argument("zero_divisor_probe: u must be nonzero");
  if (u.domain().kind != CoeffDomain::Kind::Integers)
    throw std::invalid_argument("zero_divisor_probe: integer coefficients required");

  std::vector<G> cols = candidate_support;
  std::sort(cols.begin(), cols.end());
  cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
  if (cols.empty()) return std::nullopt;

  // Column j holds the coefficients of u * cols[j]; rows are indexed by the
  // codomain elements in canonical order.
  std::map<G, int> row_index;
  std::vector<std::map<int, std::int64_t>> col_entries(cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    GroupRingElement<G> image = right_mul(u, cols[j]); // (sum c_g g) * w
    for (const auto& [g, c] : image.terms()) {
      auto [it, fresh] = row_index.try_emplace(g, 0);
      if (fresh) it->second = static_cast<int>(row_index.size()) - 1;
      col_entries[j][it->second] = c;
    }
  }
  // row_index was filled in encounter order; remap to canonical (sorted) order.
  std::vector<int> remap(row_index.size());
  int next = 0;
  for (auto& [g, idx] : row_index) remap[idx] = next++;

  std::vector<SparseRow> rows(row_index.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (const auto& [r, c] : col_entries[j]) rows[remap[r]].emplace_back(static_cast<int>(j), c);
  for (SparseRow& r : rows) std::sort(r.begin(), r.end());

  auto kernel = integer_kernel_vector(static_cast<int>(cols.size()), std::move(rows));
  if (!kernel) return std::nullopt;

  GroupRingElement<G> witness(u.domain());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    const mpz_class& v = (*kernel)[j];
    if (v == 0) continue;
    if (!v.fits_slong_p())
      throw std::overflow_error("zero_divisor_probe: witness coefficient exceeds 64 bits");
    witness.add_term(cols[j], v.get_si());
  }
  if (witness.is_zero() || !(u * witness).is_zero())
    throw std::logic_error("zero_divisor_probe: internal kernel verification failed");
  return witness;
}

template std::optional<FreeRingElem> zero_divisor_probe(const FreeRingElem&,
                                                        const std::vector<ReducedWord>&);
template std::optional<PermRingElem> zero_divisor_probe(const PermRingElem&,
                                                        const std::vector<Permutation>&);

std::optional<FreeRingElem> zero_divisor_probe(const FreeRingElem& u, int radius, int rank) {
  return zero_divisor_probe(u, ball(rank, radius));
}

} // namespace frl
