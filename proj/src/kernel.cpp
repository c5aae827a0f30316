#include "frl/kernel.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace frl {

namespace {

struct WorkRow {
  SparseRow ent;
  long id; // stable tie-break for pivot choice

  int lead() const { return ent.front().first; }
};

// Divide by the gcd of the entries and make the leading entry positive.
void normalize(SparseRow& row) {
  if (row.empty()) return;
  mpz_class g = 0;
  for (const auto& [c, v] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  bool flip = row.front().second < 0;
  if (g == 1 && !flip) return;
  for (auto& [c, v] : row) {
    if (g > 1) v /= g;
    if (flip) v = -v;
  }
}

// a*s - b*r merged by column; a = r's pivot value, b = s's value at the
// pivot column, so the pivot column cancels exactly.
SparseRow combine(const mpz_class& a, const SparseRow& s, const mpz_class& b,
                  const SparseRow& r) {
  SparseRow out;
  out.reserve(s.size() + r.size());
  std::size_t i = 0, j = 0;
  while (i < s.size() || j < r.size()) {
    if (j == r.size() || (i < s.size() && s[i].first < r[j].first)) {
      out.emplace_back(s[i].first, a * s[i].second);
      ++i;
    } else if (i == s.size() || r[j].first < s[i].first) {
      out.emplace_back(r[j].first, -b * r[j].second);
      ++j;
    } else {
      mpz_class v = a * s[i].second - b * r[j].second;
      if (v != 0) out.emplace_back(s[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

} // namespace

std::optional<std::vector<mpz_class>> integer_kernel_vector(int num_cols,
                                                            std::vector<SparseRow> rows) {
  if (num_cols == 0) return std::nullopt;

  std::vector<std::vector<WorkRow>> bucket(num_cols);
  long next_id = 0;
  for (SparseRow& r : rows) {
    normalize(r);
    if (r.empty()) continue;
    if (r.back().first >= num_cols) throw std::invalid_argument("column index out of range");
    int lead = r.front().first;
    bucket[lead].push_back(WorkRow{std::move(r), next_id++});
  }

  std::vector<std::optional<SparseRow>> pivot(num_cols);
  for (int c = 0; c < num_cols; ++c) {
    auto& rows_c = bucket[c];
    if (rows_c.empty()) continue;
    std::size_t best = 0;
    for (std::size_t i = 1; i < rows_c.size(); ++i) {
      if (rows_c[i].ent.size() < rows_c[best].ent.size() ||
          (rows_c[i].ent.size() == rows_c[best].ent.size() && rows_c[i].id < rows_c[best].id))
        best = i;
    }
    WorkRow piv = std::move(rows_c[best]);
    rows_c.erase(rows_c.begin() + static_cast<long>(best));
    const mpz_class a = piv.ent.front().second;
    for (WorkRow& s : rows_c) {
      SparseRow reduced = combine(a, s.ent, s.ent.front().second, piv.ent);
      normalize(reduced);
      if (reduced.empty()) continue;
      int lead = reduced.front().first;
      bucket[lead].push_back(WorkRow{std::move(reduced), s.id});
    }
    rows_c.clear();
    pivot[c] = std::move(piv.ent);
  }

  int free_col = -1;
  for (int c = 0; c < num_cols; ++c) {
    if (!pivot[c]) {
      free_col = c;
      break;
    }
  }
  if (free_col < 0) return std::nullopt;

  // Back-substitute over the rationals, then clear denominators.
  std::vector<mpq_class> x(num_cols, 0);
  x[free_col] = 1;
  for (int c = num_cols - 1; c >= 0; --c) {
    if (!pivot[c]) continue;
    const SparseRow& row = *pivot[c];
    mpq_class sum = 0;
    for (const auto& [j, v] : row) {
      if (j == c) continue;
      if (x[j] != 0) sum += mpq_class(v) * x[j];
    }
    x[c] = -sum / mpq_class(row.front().second);
  }

  mpz_class denom_lcm = 1;
  for (const mpq_class& q : x)
    mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(), q.get_den().get_mpz_t());
  std::vector<mpz_class> out(num_cols);
  mpz_class content = 0;
  for (int c = 0; c < num_cols; ++c) {
    mpq_class scaled = x[c] * mpq_class(denom_lcm);
    out[c] = scaled.get_num(); // denominator is 1 by construction
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), out[c].get_mpz_t());
  }
  bool seen_sign = false, flip = false;
  for (mpz_class& v : out) {
    if (content > 1) v /= content;
    if (!seen_sign && v != 0) {
      seen_sign = true;
      flip = v < 0;
    }
    if (flip) v = -v;
  }
  return out;
}

} // namespace frl
