#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "frl/permutation.hpp"
#include "frl/word.hpp"

namespace frl {

/// Coefficient domain tag: the integers, or integers mod m (m >= 2).
/// Residues are stored in [0, m). Primality of m is not required here;
/// the places that need a prime (mod-p reduction, separation certificates)
/// validate it themselves, which keeps toy models like Z_4[C_1] usable.
struct CoeffDomain {
  enum class Kind { Integers, Mod };
  Kind kind = Kind::Integers;
  std::int64_t modulus = 0;

  static CoeffDomain integers() { return {}; }
  static CoeffDomain mod(std::int64_t m) {
    if (m < 2) throw std::invalid_argument("modulus must be >= 2");
    return {Kind::Mod, m};
  }

  bool operator==(const CoeffDomain&) const = default;
  std::string str() const {
    return kind == Kind::Integers ? "Z" : "Z" + std::to_string(modulus);
  }
};

/// Finite formal sum of group elements with nonzero coefficients, over a
/// group element type G (ReducedWord or Permutation) and a coefficient
/// domain. Keys are kept in canonical order; zero coefficients are never
/// stored, so equality is structural.
template <class G>
class GroupRingElement {
public:
  using Terms = std::map<G, std::int64_t>;

  explicit GroupRingElement(CoeffDomain dom = CoeffDomain::integers()) : dom_(dom) {}

  static GroupRingElement zero(CoeffDomain dom = CoeffDomain::integers()) {
    return GroupRingElement(dom);
  }

  /// c * g as an element.
  static GroupRingElement term(std::int64_t c, const G& g,
                               CoeffDomain dom = CoeffDomain::integers()) {
    GroupRingElement x(dom);
    x.add_term(g, c);
    return x;
  }

  /// The group element embedded with coefficient 1.
  static GroupRingElement embed(const G& g, CoeffDomain dom = CoeffDomain::integers()) {
    return term(1, g, dom);
  }

  const CoeffDomain& domain() const { return dom_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t support_size() const { return terms_.size(); }

  std::vector<G> support() const {
    std::vector<G> out;
    out.reserve(terms_.size());
    for (const auto& [g, c] : terms_) out.push_back(g);
    return out;
  }

  std::int64_t coeff(const G& g) const {
    auto it = terms_.find(g);
    return it == terms_.end() ? 0 : it->second;
  }

  /// Accumulates c onto the coefficient of g, renormalizing.
  void add_term(const G& g, std::int64_t c) {
    c = normalize_coeff(c);
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(g, 0);
    it->second = normalize_coeff(it->second + c);
    if (it->second == 0) terms_.erase(it);
  }

  GroupRingElement operator+(const GroupRingElement& rhs) const {
    require_same_domain(rhs);
    GroupRingElement out = *this;
    for (const auto& [g, c] : rhs.terms_) out.add_term(g, c);
    return out;
  }

  GroupRingElement operator-() const {
    GroupRingElement out(dom_);
    for (const auto& [g, c] : terms_) out.add_term(g, -c);
    return out;
  }

  GroupRingElement operator-(const GroupRingElement& rhs) const { return *this + (-rhs); }

  /// Convolution product: bilinear extension of the group product.
  GroupRingElement operator*(const GroupRingElement& rhs) const {
    require_same_domain(rhs);
    GroupRingElement out(dom_);
    for (const auto& [g, c] : terms_)
      for (const auto& [h, d] : rhs.terms_) out.add_term(g * h, c * d);
    return out;
  }

  GroupRingElement scaled(std::int64_t c) const {
    GroupRingElement out(dom_);
    for (const auto& [g, d] : terms_) out.add_term(g, c * d);
    return out;
  }

  bool operator==(const GroupRingElement& rhs) const {
    return dom_ == rhs.dom_ && terms_ == rhs.terms_;
  }

  /// Coefficient sum; multiplicative on products.
  std::int64_t augmentation() const {
    std::int64_t s = 0;
    for (const auto& [g, c] : terms_) s = normalize_coeff(s + c);
    return s;
  }

private:
  std::int64_t normalize_coeff(std::int64_t c) const {
    if (dom_.kind == CoeffDomain::Kind::Mod) {
      c %= dom_.modulus;
      if (c < 0) c += dom_.modulus;
    }
    return c;
  }

  void require_same_domain(const GroupRingElement& rhs) const {
    if (dom_ != rhs.dom_)
      throw std::invalid_argument("coefficient domain mismatch: " + dom_.str() + " vs " +
                                  rhs.dom_.str());
  }

  CoeffDomain dom_;
  Terms terms_;
};

using FreeRingElem = GroupRingElement<ReducedWord>;
using PermRingElem = GroupRingElement<Permutation>;

/// True iff x = u*g with u a unit of the coefficient ring and g a single
/// group element. Over Z the units are {+1,-1}; for Z[F] these trivial
/// units are all the units there are.
template <class G>
bool is_trivial_unit(const GroupRingElement<G>& x) {
  if (x.support_size() != 1) return false;
  std::int64_t c = x.terms().begin()->second;
  if (x.domain().kind == CoeffDomain::Kind::Integers) return c == 1 || c == -1;
  return std::gcd(c, x.domain().modulus) == 1;
}

/// Inverse of a trivial unit u*g, i.e. u^-1 * g^-1. Throws if x is not a
/// trivial unit.
template <class G>
GroupRingElement<G> trivial_unit_inverse(const GroupRingElement<G>& x) {
  if (!is_trivial_unit(x)) throw std::invalid_argument("not a trivial unit");
  const auto& [g, c] = *x.terms().begin();
  std::int64_t cinv;
  if (x.domain().kind == CoeffDomain::Kind::Integers) {
    cinv = c; // +1 or -1, both self-inverse
  } else {
    // extended gcd for c^-1 mod m
    std::int64_t m = x.domain().modulus, a = c, b = m, x0 = 1, x1 = 0;
    while (b) {
      std::int64_t q = a / b;
      a -= q * b;
      std::swap(a, b);
      x0 -= q * x1;
      std::swap(x0, x1);
    }
    cinv = x0;
  }
  return GroupRingElement<G>::term(cinv, g.inverse(), x.domain());
}

/// The identity of Z[F] (coefficient domain configurable).
inline FreeRingElem free_ring_one(CoeffDomain dom = CoeffDomain::integers()) {
  return FreeRingElem::embed(ReducedWord(), dom);
}

/// (1 - g_1)(1 - g_2) ... (1 - g_n) in Z[F]; the empty product is 1.
/// Zero exactly when some g_i is the identity.
FreeRingElem one_minus_product(const std::vector<ReducedWord>& gs);

/// Left translation x -> g*x; coefficients unchanged.
template <class G>
GroupRingElement<G> left_mul(const G& g, const GroupRingElement<G>& x) {
  GroupRingElement<G> out(x.domain());
  for (const auto& [h, c] : x.terms()) out.add_term(g * h, c);
  return out;
}

/// Right translation x -> x*g.
template <class G>
GroupRingElement<G> right_mul(const GroupRingElement<G>& x, const G& g) {
  GroupRingElement<G> out(x.domain());
  for (const auto& [h, c] : x.terms()) out.add_term(h * g, c);
  return out;
}

/// Canonical text of an element of Z[F] in the bracket literal syntax,
/// e.g. `[1 - a]`, `[2*a*b^-1 + 3]`, `[0]` for zero. Coefficients +-1 on
/// non-identity words are left implicit.
std::string ring_literal_str(const FreeRingElem& x);

/// Parses the bracket literal syntax. Integer coefficient domain.
FreeRingElem parse_ring_literal(std::string_view text, int rank);

/// Display form for permutation group-ring elements (not parseable input).
std::string perm_ring_str(const PermRingElem& x);

} // namespace frl
