#include "frl/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace frl {

Permutation::Permutation(int n) {
  if (n < 1) throw std::invalid_argument("degree must be >= 1");
  img_.resize(n);
  std::iota(img_.begin(), img_.end(), 0);
}

Permutation Permutation::from_one_line(const std::vector<int>& images) {
  int n = static_cast<int>(images.size());
  if (n < 1) throw std::invalid_argument("empty one-line form");
  std::vector<bool> seen(n, false);
  Permutation p;
  p.img_.resize(n);
  for (int i = 0; i < n; ++i) {
    int v = images[i];
    if (v < 1 || v > n || seen[v - 1])
      throw std::invalid_argument("one-line form is not a permutation");
    seen[v - 1] = true;
    p.img_[i] = v - 1;
  }
  return p;
}

Permutation Permutation::cycle(int n) {
  Permutation p(n);
  for (int i = 0; i < n; ++i) p.img_[i] = (i + 1) % n;
  return p;
}

Permutation Permutation::transposition(int n, int i, int j) {
  if (i < 1 || j < 1 || i > n || j > n || i == j)
    throw std::invalid_argument("bad transposition");
  Permutation p(n);
  std::swap(p.img_[i - 1], p.img_[j - 1]);
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[i] != i) return false;
  return true;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (degree() != rhs.degree()) throw std::invalid_argument("degree mismatch");
  Permutation p;
  p.img_.resize(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) p.img_[i] = img_[rhs.img_[i]];
  return p;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.img_.resize(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) p.img_[img_[i]] = static_cast<int>(i);
  return p;
}

Permutation Permutation::direct_sum(const Permutation& p, const Permutation& q) {
  Permutation r;
  r.img_.reserve(p.img_.size() + q.img_.size());
  r.img_ = p.img_;
  int off = p.degree();
  for (int v : q.img_) r.img_.push_back(v + off);
  return r;
}

std::vector<int> Permutation::one_line() const {
  std::vector<int> out(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) out[i] = img_[i] + 1;
  return out;
}

std::string Permutation::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(img_[i] + 1);
  }
  out += ')';
  return out;
}

std::vector<Permutation> symmetric_group(int n) {
  std::vector<int> line(n);
  std::iota(line.begin(), line.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_one_line(line));
  } while (std::next_permutation(line.begin(), line.end()));
  return out;
}

std::vector<Permutation> cyclic_group(int n) {
  std::vector<Permutation> out;
  Permutation c = Permutation::cycle(n), acc(n);
  for (int i = 0; i < n; ++i) {
    out.push_back(acc);
    acc = acc * c;
  }
  return out;
}

} // namespace frl
