#pragma once

#include <compare>
#include <string>
#include <vector>

namespace frl {

/// A permutation of {1..n} stored in one-line form. Internally the image
/// vector is 0-based; all I/O is 1-based.
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(int n); // identity on n points

  /// From 1-based one-line form, validated bijective.
  static Permutation from_one_line(const std::vector<int>& images_one_based);

  /// The n-cycle (1 2 ... n); generator of the cyclic group C_n inside S_n.
  static Permutation cycle(int n);

  /// Transposition (i j) on n points, 1-based.
  static Permutation transposition(int n, int i, int j);

  int degree() const { return static_cast<int>(img_.size()); }
  bool is_identity() const;

  /// Image of a 1-based point.
  int apply(int point_one_based) const { return img_[point_one_based - 1] + 1; }

  /// Composition: (p * q) maps x to p(q(x)).
  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;

  /// Acts on disjoint point sets: degree is the sum of the factors'.
  static Permutation direct_sum(const Permutation& p, const Permutation& q);

  bool operator==(const Permutation& rhs) const = default;
  std::strong_ordering operator<=>(const Permutation& rhs) const = default;

  /// 1-based one-line form.
  std::vector<int> one_line() const;

  /// Text form `(i1,...,in)`, 1-based one-line.
  std::string str() const;

private:
  std::vector<int> img_;
};

/// All elements of S_n in lexicographic one-line order, starting at the
/// identity. n! entries; intended for small n only.
std::vector<Permutation> symmetric_group(int n);

/// The cyclic subgroup generated by the n-cycle: id, c, c^2, ..., c^(n-1).
std::vector<Permutation> cyclic_group(int n);

} // namespace frl
