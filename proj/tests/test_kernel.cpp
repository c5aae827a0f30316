#include "doctest.h"

#include <gmpxx.h>

#include <random>
#include <vector>

#include "frl/kernel.hpp"
#include "frl/zerodivisor.hpp"
#include "generators.hpp"

using namespace frl;

namespace {

// Independent oracle: dense rational Gaussian elimination, rank only.
int rational_rank(const std::vector<std::vector<long>>& m, int cols) {
  std::vector<std::vector<mpq_class>> a;
  for (const auto& row : m) a.emplace_back(row.begin(), row.end());
  int rank = 0;
  for (int c = 0; c < cols && rank < static_cast<int>(a.size()); ++c) {
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(a.size()); ++r)
      if (a[r][c] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[rank], a[pivot]);
    for (int r = 0; r < static_cast<int>(a.size()); ++r) {
      if (r == rank || a[r][c] == 0) continue;
      mpq_class f = a[r][c] / a[rank][c];
      for (int j = c; j < cols; ++j) a[r][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

} // namespace

TEST_CASE("kernel vectors agree with a rational rank oracle on random matrices") {
  std::mt19937_64 rng(0xBEEF);
  std::uniform_int_distribution<int> dim(1, 6), entry(-3, 3);
  for (int trial = 0; trial < 300; ++trial) {
    int rows_n = dim(rng), cols_n = dim(rng);
    std::vector<std::vector<long>> dense(rows_n, std::vector<long>(cols_n));
    std::vector<SparseRow> rows(rows_n);
    for (int r = 0; r < rows_n; ++r)
      for (int c = 0; c < cols_n; ++c) {
        dense[r][c] = entry(rng);
        if (dense[r][c] != 0) rows[r].emplace_back(c, dense[r][c]);
      }
    auto kernel = integer_kernel_vector(cols_n, rows);
    int rank = rational_rank(dense, cols_n);
    CAPTURE(trial);
    CHECK(kernel.has_value() == (rank < cols_n));
    if (kernel) {
      // integral, content 1 up to sign convention, and actually in the kernel
      bool nonzero = false;
      for (int r = 0; r < rows_n; ++r) {
        mpz_class dot = 0;
        for (int c = 0; c < cols_n; ++c) dot += mpz_class(dense[r][c]) * (*kernel)[c];
        CHECK(dot == 0);
      }
      mpz_class content = 0;
      for (const mpz_class& v : *kernel) {
        if (v != 0) nonzero = true;
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
      }
      CHECK(nonzero);
      CHECK(content == 1);
    }
  }
}

TEST_CASE("kernel extraction is deterministic") {
  std::vector<SparseRow> rows{{{0, 2}, {1, 4}}, {{0, 1}, {1, 2}}};
  auto k1 = integer_kernel_vector(2, rows);
  auto k2 = integer_kernel_vector(2, rows);
  REQUIRE(k1.has_value());
  CHECK(*k1 == *k2);
  CHECK((*k1)[0] == 2); // (2, -1), leading entry positive
  CHECK((*k1)[1] == -1);
}

TEST_CASE("Z[F] has no zero divisors at any probed radius") {
  std::mt19937_64 rng(0xD1CE);
  for (int i = 0; i < 25; ++i) {
    FreeRingElem u = testgen::random_nonzero_ring_elem(rng, 2, 2, 3, 3);
    CAPTURE(ring_literal_str(u));
    CHECK_FALSE(zero_divisor_probe(u, 2, 2).has_value());
  }
}
