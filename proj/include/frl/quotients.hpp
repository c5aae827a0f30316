#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "frl/groupring.hpp"
#include "frl/permutation.hpp"
#include "frl/word.hpp"

namespace frl {

/// Homomorphism F -> S_n, given by one permutation per generator. Extends
/// uniquely to all of F.
class FiniteHom {
public:
  FiniteHom(int rank, int degree, std::vector<Permutation> images);

  /// Degree-1 hom (everything maps to the identity).
  static FiniteHom trivial(int rank);

  int rank() const { return rank_; }
  int degree() const { return degree_; }
  const std::vector<Permutation>& images() const { return images_; }

  /// Image of a word: the product of the generator images per letter.
  Permutation apply(const ReducedWord& w) const;

  /// True iff apply(w) != id for every w in ws.
  bool separates(const std::vector<ReducedWord>& ws) const;

  bool operator==(const FiniteHom& rhs) const = default;

private:
  int rank_;
  int degree_;
  std::vector<Permutation> images_;
};

/// Direct product acting on disjoint point sets; separates the union of
/// whatever each factor separates. Empty input gives the trivial hom.
FiniteHom combine(const std::vector<FiniteHom>& homs, int rank);

/// Knobs for the separation search. With a fixed seed the search is fully
/// deterministic: degrees 2..exhaustive_max_degree are enumerated in
/// canonical order (lexicographic one-line permutations, first generator
/// slowest), then random_samples assignments are drawn per degree up to
/// max_degree.
struct SearchConfig {
  std::uint64_t seed = 1;
  int exhaustive_max_degree = 4;
  int random_samples = 400;
};

/// Finds phi with phi(w) != id for every w in ws (all required nontrivial),
/// searching degrees 2..max_degree. Falls back to separating each word on
/// its own and combining via direct product, in which case the combined
/// degree may exceed max_degree. Returns nullopt when the budget is
/// exhausted; an empty list yields the trivial hom.
std::optional<FiniteHom> find_separating_hom(const std::vector<ReducedWord>& ws, int max_degree,
                                             const SearchConfig& cfg = {});

/// Induced ring morphism Z[F] -> Z[S_n]: sum n_j g_j -> sum n_j phi(g_j),
/// colliding images summed.
PermRingElem induced_ring_hom(const FiniteHom& phi, const FreeRingElem& x);

/// Smallest prime dividing none of the (nonzero) coefficients.
std::int64_t choose_prime(const std::vector<std::int64_t>& coeffs);

/// Coefficient-wise reduction mod p (p validated prime); zero residues
/// dropped.
PermRingElem mod_p_reduce(const PermRingElem& x, std::int64_t p);

/// Verifiable outcome of the residual-finiteness pipeline: a finite
/// quotient, a prime coprime to every coefficient, and the (nonzero)
/// image of the separated element in Z_p[S_n].
struct SeparationCertificate {
  FiniteHom hom;
  std::int64_t prime;
  PermRingElem image;
};

/// Runs the full pipeline on a nonzero r in Z[F]: finds phi separating all
/// pairwise quotients g_i g_j^-1 of r's support (so support images stay
/// distinct and no coefficients collide), picks the prime, reduces, and
/// re-verifies the certificate from scratch before returning it.
std::optional<SeparationCertificate> separate_ring_element(const FreeRingElem& r, int max_degree,
                                                           const SearchConfig& cfg = {});

/// Independent re-check: image recomputed from scratch and nonzero, prime
/// coprime to every coefficient of r, support images pairwise distinct.
bool verify_certificate(const SeparationCertificate& cert, const FreeRingElem& r);

} // namespace frl
