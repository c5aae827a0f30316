#pragma once

#include <gmpxx.h>

#include <optional>
#include <utility>
#include <vector>

namespace frl {

/// One sparse matrix row: (column, value) entries sorted by column, values
/// nonzero.
using SparseRow = std::vector<std::pair<int, mpz_class>>;

/// Exact kernel computation for an integer matrix given by rows, acting on
/// column vectors of length num_cols. Elimination is fraction-free: rows
/// are combined with integer cross-multiplication and renormalized by
/// their content, so no floating point or rounding is involved anywhere.
///
/// Returns a nontrivial integer kernel vector (content 1, first nonzero
/// entry positive, canonical for a fixed input) or nullopt when the kernel
/// is trivial. The canonical vector is the one supported on the first free
/// column in column order.
std::optional<std::vector<mpz_class>> integer_kernel_vector(int num_cols,
                                                            std::vector<SparseRow> rows);

} // namespace frl
