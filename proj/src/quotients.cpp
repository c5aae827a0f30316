#include "frl/quotients.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace frl {

FiniteHom::FiniteHom(int rank, int degree, std::vector<Permutation> images)
    : rank_(rank), degree_(degree), images_(std::move(images)) {
  if (rank < 1 || rank > kMaxRank) throw std::invalid_argument("rank out of range");
  if (degree < 1) throw std::invalid_argument("degree must be >= 1");
  if (static_cast<int>(images_.size()) != rank)
    throw std::invalid_argument("need one image per generator");
  for (const Permutation& p : images_)
    if (p.degree() != degree) throw std::invalid_argument("image degree mismatch");
}

FiniteHom FiniteHom::trivial(int rank) {
  return FiniteHom(rank, 1, std::vector<Permutation>(rank, Permutation(1)));
}

Permutation FiniteHom::apply(const ReducedWord& w) const {
  Permutation acc(degree_);
  for (Letter l : w.letters()) {
    const Permutation& img = images_[(l > 0 ? l : -l) - 1];
    acc = acc * (l > 0 ? img : img.inverse());
  }
  return acc;
}

bool FiniteHom::separates(const std::vector<ReducedWord>& ws) const {
  for (const ReducedWord& w : ws)
    if (apply(w).is_identity()) return false;
  return true;
}

FiniteHom combine(const std::vector<FiniteHom>& homs, int rank) {
  if (homs.empty()) return FiniteHom::trivial(rank);
  int degree = 0;
  for (const FiniteHom& h : homs) {
    if (h.rank() != rank) throw std::invalid_argument("rank mismatch in combine");
    degree += h.degree();
  }
  std::vector<Permutation> images;
  for (int g = 0; g < rank; ++g) {
    Permutation img = homs[0].images()[g];
    for (std::size_t i = 1; i < homs.size(); ++i)
      img = Permutation::direct_sum(img, homs[i].images()[g]);
    images.push_back(img);
  }
  return FiniteHom(rank, degree, std::move(images));
}

namespace {

// Exhaustive scan of all generator-image assignments in S_degree, in
// canonical order: permutations lexicographic by one-line form, first
// generator varying slowest.
std::optional<FiniteHom> exhaustive_search(const std::vector<ReducedWord>& ws, int rank,
                                           int degree) {
  std::vector<Permutation> all = symmetric_group(degree);
  std::vector<std::size_t> idx(rank, 0);
  std::vector<Permutation> images(rank, Permutation(degree));
  while (true) {
    for (int g = 0; g < rank; ++g) images[g] = all[idx[g]];
    FiniteHom phi(rank, degree, images);
    if (phi.separates(ws)) return phi;
    int pos = rank - 1;
    while (pos >= 0 && ++idx[pos] == all.size()) idx[pos--] = 0;
    if (pos < 0) return std::nullopt;
  }
}

Permutation random_permutation(int degree, std::mt19937_64& rng) {
  std::vector<int> line(degree);
  for (int i = 0; i < degree; ++i) line[i] = i + 1;
  for (int i = degree - 1; i > 0; --i) {
    std::uniform_int_distribution<int> d(0, i);
    std::swap(line[i], line[d(rng)]);
  }
  return Permutation::from_one_line(line);
}

std::optional<FiniteHom> simultaneous_search(const std::vector<ReducedWord>& ws, int rank,
                                             int max_degree, const SearchConfig& cfg) {
  for (int n = 2; n <= std::min(cfg.exhaustive_max_degree, max_degree); ++n)
    if (auto phi = exhaustive_search(ws, rank, n)) return phi;
  std::mt19937_64 rng(cfg.seed);
  for (int n = cfg.exhaustive_max_degree + 1; n <= max_degree; ++n) {
    for (int s = 0; s < cfg.random_samples; ++s) {
      std::vector<Permutation> images;
      images.reserve(rank);
      for (int g = 0; g < rank; ++g) images.push_back(random_permutation(n, rng));
      FiniteHom phi(rank, n, std::move(images));
      if (phi.separates(ws)) return phi;
    }
  }
  return std::nullopt;
}

} // namespace

std::optional<FiniteHom> find_separating_hom(const std::vector<ReducedWord>& ws, int max_degree,
                                             const SearchConfig& cfg) {
  int rank = 2;
  for (const ReducedWord& w : ws) {
    if (w.is_identity())
      throw std::invalid_argument("cannot separate the identity from itself");
    for (Letter l : w.letters()) rank = std::max(rank, static_cast<int>(l > 0 ? l : -l));
  }
  if (ws.empty()) return FiniteHom::trivial(rank);
  if (max_degree < 2) return std::nullopt;

  if (auto phi = simultaneous_search(ws, rank, max_degree, cfg)) return phi;

  // Per-word fallback, combined via direct product. The sum of the factor
  // degrees may exceed max_degree; each factor still respects the budget.
  std::vector<FiniteHom> parts;
  for (const ReducedWord& w : ws) {
    auto phi = simultaneous_search({w}, rank, max_degree, cfg);
    if (!phi) return std::nullopt;
    parts.push_back(*phi);
  }
  FiniteHom together = combine(parts, rank);
  return together.separates(ws) ? std::optional<FiniteHom>(together) : std::nullopt;
}

PermRingElem induced_ring_hom(const FiniteHom& phi, const FreeRingElem& x) {
  PermRingElem out(x.domain());
  for (const auto& [g, c] : x.terms()) out.add_term(phi.apply(g), c);
  return out;
}

namespace {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

} // namespace

std::int64_t choose_prime(const std::vector<std::int64_t>& coeffs) {
  for (std::int64_t c : coeffs)
    if (c == 0) throw std::invalid_argument("choose_prime: zero coefficient");
  for (std::int64_t p = 2;; ++p) {
    if (!is_prime(p)) continue;
    bool ok = true;
    for (std::int64_t c : coeffs)
      if (c % p == 0) {
        ok = false;
        break;
      }
    if (ok) return p;
  }
}

PermRingElem mod_p_reduce(const PermRingElem& x, std::int64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("mod_p_reduce: p must be prime");
  PermRingElem out(CoeffDomain::mod(p));
  for (const auto& [g, c] : x.terms()) out.add_term(g, c);
  return out;
}

std::optional<SeparationCertificate> separate_ring_element(const FreeRingElem& r, int max_degree,
                                                           const SearchConfig& cfg) {
  if (r.is_zero()) throw std::invalid_argument("separate_ring_element: r must be nonzero");
  if (r.domain().kind != CoeffDomain::Kind::Integers)
    throw std::invalid_argument("separate_ring_element: integer coefficients required");

  // All pairwise quotients g_i g_j^-1, i != j, so that the support maps
  // injectively and no coefficients can collide under the induced map.
  std::vector<ReducedWord> support = r.support();
  std::set<ReducedWord> quotients;
  for (std::size_t i = 0; i < support.size(); ++i)
    for (std::size_t j = 0; j < support.size(); ++j)
      if (i != j) quotients.insert(support[i] * support[j].inverse());
  std::vector<ReducedWord> ws(quotients.begin(), quotients.end());

  auto phi = find_separating_hom(ws, max_degree, cfg);
  if (!phi) return std::nullopt;

  std::vector<std::int64_t> coeffs;
  for (const auto& [g, c] : r.terms()) coeffs.push_back(c);
  std::int64_t p = choose_prime(coeffs);

  SeparationCertificate cert{*phi, p, mod_p_reduce(induced_ring_hom(*phi, r), p)};
  if (!verify_certificate(cert, r))
    throw std::logic_error("separation pipeline produced an invalid certificate");
  return cert;
}

bool verify_certificate(const SeparationCertificate& cert, const FreeRingElem& r) {
  if (!is_prime(cert.prime)) return false;
  std::set<Permutation> images;
  for (const auto& [g, c] : r.terms()) {
    if (c % cert.prime == 0) return false;
    if (!images.insert(cert.hom.apply(g)).second) return false; // collision
  }
  PermRingElem recomputed = mod_p_reduce(induced_ring_hom(cert.hom, r), cert.prime);
  return !recomputed.is_zero() && recomputed == cert.image;
}

} // namespace frl
