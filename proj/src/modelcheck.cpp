#include "frl/modelcheck.hpp"

#include <algorithm>

#include "frl/encode.hpp"
#include "frl/logic/classify.hpp"
#include "frl/logic/print.hpp"

namespace frl::modelcheck {

using logic::Atom;
using logic::Formula;
using logic::FormulaPtr;
using logic::Term;
using logic::TermPtr;

std::string Model::str() const {
  switch (kind) {
    case Kind::FreeGroup: return "free";
    case Kind::FreeGroupRing: return "zfree";
    case Kind::SymmetricGroup: return "sym:" + std::to_string(degree);
    case Kind::SymmetricGroupRing:
      return "zp-sym:" + std::to_string(degree) + ":" + std::to_string(modulus);
  }
  return "?";
}

std::string value_str(const Value& v) {
  if (const auto* w = std::get_if<ReducedWord>(&v)) return w->str();
  if (const auto* p = std::get_if<Permutation>(&v)) return p->str();
  if (const auto* x = std::get_if<FreeRingElem>(&v)) return ring_literal_str(*x);
  return perm_ring_str(std::get<PermRingElem>(v));
}

namespace {

[[noreturn]] void sort_misuse(const char* what) { throw EvalError(what); }

template <class V>
const V& lookup(const Assignment& sigma, const std::string& name) {
  auto it = sigma.find(name);
  if (it == sigma.end()) throw EvalError("unbound variable '" + name + "'");
  const V* v = std::get_if<V>(&it->second);
  if (!v) throw EvalError("variable '" + name + "' has the wrong sort for this model");
  return *v;
}

ReducedWord eval_word(const TermPtr& t, const Assignment& sigma, const Model& m) {
  switch (t->kind) {
    case Term::Kind::Var: return lookup<ReducedWord>(sigma, t->var);
    case Term::Kind::Gen:
      if (t->gen > m.rank) sort_misuse("generator outside model rank");
      return ReducedWord::generator(t->gen);
    case Term::Kind::One: return ReducedWord();
    case Term::Kind::Mul: return eval_word(t->lhs, sigma, m) * eval_word(t->rhs, sigma, m);
    case Term::Kind::Pow: return eval_word(t->lhs, sigma, m).pow(t->exp);
    default: sort_misuse("ring term evaluated in a group model");
  }
}

Permutation eval_perm(const TermPtr& t, const Assignment& sigma, const Model& m) {
  switch (t->kind) {
    case Term::Kind::Var: {
      const Permutation& p = lookup<Permutation>(sigma, t->var);
      if (p.degree() != m.degree) throw EvalError("permutation degree does not match model");
      return p;
    }
    case Term::Kind::One: return Permutation(m.degree);
    case Term::Kind::Mul: return eval_perm(t->lhs, sigma, m) * eval_perm(t->rhs, sigma, m);
    case Term::Kind::Pow: {
      Permutation base = eval_perm(t->lhs, sigma, m);
      long long n = t->exp;
      if (n < 0) {
        base = base.inverse();
        n = -n;
      }
      Permutation acc(m.degree);
      for (long long i = 0; i < n; ++i) acc = acc * base;
      return acc;
    }
    case Term::Kind::Gen:
      sort_misuse("generator constants have no interpretation in a finite group model");
    default: sort_misuse("ring term evaluated in a group model");
  }
}

template <class G, class Elem = GroupRingElement<G>>
Elem ring_pow(const Elem& base, long long n, const G& identity) {
  Elem b = base;
  if (n < 0) {
    if (!is_trivial_unit(base))
      throw EvalError("negative power of a ring element that is not a trivial unit");
    b = trivial_unit_inverse(base);
    n = -n;
  }
  Elem acc = Elem::embed(identity, base.domain());
  for (long long i = 0; i < n; ++i) acc = acc * b;
  return acc;
}

FreeRingElem eval_free_ring(const TermPtr& t, const Assignment& sigma, const Model& m) {
  switch (t->kind) {
    case Term::Kind::Var: {
      const FreeRingElem& x = lookup<FreeRingElem>(sigma, t->var);
      if (x.domain().kind != CoeffDomain::Kind::Integers)
        throw EvalError("value domain does not match Z[F]");
      return x;
    }
    case Term::Kind::Gen:
      if (t->gen > m.rank) sort_misuse("generator outside model rank");
      return FreeRingElem::embed(ReducedWord::generator(t->gen));
    case Term::Kind::One: return free_ring_one();
    case Term::Kind::Zero: return FreeRingElem::zero();
    case Term::Kind::RingConst: return t->ring;
    case Term::Kind::Mul: return eval_free_ring(t->lhs, sigma, m) * eval_free_ring(t->rhs, sigma, m);
    case Term::Kind::Add: return eval_free_ring(t->lhs, sigma, m) + eval_free_ring(t->rhs, sigma, m);
    case Term::Kind::Neg: return -eval_free_ring(t->lhs, sigma, m);
    case Term::Kind::Pow: return ring_pow(eval_free_ring(t->lhs, sigma, m), t->exp, ReducedWord());
  }
  sort_misuse("unreachable");
}

PermRingElem eval_perm_ring(const TermPtr& t, const Assignment& sigma, const Model& m) {
  const CoeffDomain dom = CoeffDomain::mod(m.modulus);
  switch (t->kind) {
    case Term::Kind::Var: {
      const PermRingElem& x = lookup<PermRingElem>(sigma, t->var);
      if (x.domain() != dom) throw EvalError("value domain does not match the model's Z_m");
      for (const auto& [g, c] : x.terms())
        if (g.degree() != m.degree) throw EvalError("permutation degree does not match model");
      return x;
    }
    case Term::Kind::One: return PermRingElem::embed(Permutation(m.degree), dom);
    case Term::Kind::Zero: return PermRingElem::zero(dom);
    case Term::Kind::Mul: return eval_perm_ring(t->lhs, sigma, m) * eval_perm_ring(t->rhs, sigma, m);
    case Term::Kind::Add: return eval_perm_ring(t->lhs, sigma, m) + eval_perm_ring(t->rhs, sigma, m);
    case Term::Kind::Neg: return -eval_perm_ring(t->lhs, sigma, m);
    case Term::Kind::Pow:
      return ring_pow(eval_perm_ring(t->lhs, sigma, m), t->exp, Permutation(m.degree));
    case Term::Kind::Gen:
      sort_misuse("generator constants have no interpretation in a finite group-ring model");
    default: sort_misuse("free-group constant in a finite group-ring model");
  }
}

template <class Elem>
bool gamma_holds(const Elem& x) {
  return x.support_size() == 1 && x.terms().begin()->second == 1;
}

template <class Elem>
bool scalar_holds(const Elem& x) {
  if (x.is_zero()) return true;
  return x.support_size() == 1 && x.terms().begin()->first.is_identity();
}

bool eval_atom(const Atom& a, const Assignment& sigma, const Model& m) {
  switch (m.kind) {
    case Model::Kind::FreeGroup:
      if (a.kind != Atom::Kind::Eq) sort_misuse("G/P predicates need a group-ring model");
      return eval_word(a.lhs, sigma, m) == eval_word(a.rhs, sigma, m);
    case Model::Kind::SymmetricGroup:
      if (a.kind != Atom::Kind::Eq) sort_misuse("G/P predicates need a group-ring model");
      return eval_perm(a.lhs, sigma, m) == eval_perm(a.rhs, sigma, m);
    case Model::Kind::FreeGroupRing: {
      if (a.kind == Atom::Kind::Eq)
        return eval_free_ring(a.lhs, sigma, m) == eval_free_ring(a.rhs, sigma, m);
      FreeRingElem x = eval_free_ring(a.lhs, sigma, m);
      return a.kind == Atom::Kind::Gamma ? gamma_holds(x) : scalar_holds(x);
    }
    case Model::Kind::SymmetricGroupRing: {
      if (a.kind == Atom::Kind::Eq)
        return eval_perm_ring(a.lhs, sigma, m) == eval_perm_ring(a.rhs, sigma, m);
      PermRingElem x = eval_perm_ring(a.lhs, sigma, m);
      return a.kind == Atom::Kind::Gamma ? gamma_holds(x) : scalar_holds(x);
    }
  }
  sort_misuse("unreachable");
}

} // namespace

bool eval_qf(const FormulaPtr& matrix, const Assignment& sigma, const Model& model) {
  switch (matrix->kind) {
    case Formula::Kind::Atomic: return eval_atom(matrix->atom, sigma, model);
    case Formula::Kind::Not: return !eval_qf(matrix->child, sigma, model);
    case Formula::Kind::And:
      for (const auto& k : matrix->kids)
        if (!eval_qf(k, sigma, model)) return false;
      return true;
    case Formula::Kind::Or:
      for (const auto& k : matrix->kids)
        if (eval_qf(k, sigma, model)) return true;
      return false;
    case Formula::Kind::Implies:
      return !eval_qf(matrix->lhs, sigma, model) || eval_qf(matrix->rhs, sigma, model);
  }
  throw EvalError("unreachable");
}

namespace {

template <class G>
void ring_domain(const std::vector<G>& basis, int max_support,
                 const std::vector<std::int64_t>& coeff_values, CoeffDomain dom,
                 std::vector<Value>& out) {
  out.push_back(GroupRingElement<G>::zero(dom));
  if (coeff_values.empty()) return;
  int n = static_cast<int>(basis.size());
  for (int size = 1; size <= std::min<int>(max_support, n); ++size) {
    // index combinations i0 < i1 < ... in lexicographic order
    std::vector<int> idx(size);
    for (int i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      std::vector<std::size_t> ci(size, 0); // coefficient odometer, first slot slowest
      while (true) {
        GroupRingElement<G> elem(dom);
        for (int i = 0; i < size; ++i) elem.add_term(basis[idx[i]], coeff_values[ci[i]]);
        out.push_back(std::move(elem));
        int pos = size - 1;
        while (pos >= 0 && ++ci[pos] == coeff_values.size()) ci[pos--] = 0;
        if (pos < 0) break;
      }
      int pos = size - 1;
      while (pos >= 0 && idx[pos] == n - size + pos) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (int i = pos + 1; i < size; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
}

} // namespace

std::vector<Value> enumerate_domain(const Model& model, const DomainBounds& b) {
  std::vector<Value> out;
  switch (model.kind) {
    case Model::Kind::FreeGroup:
      for (ReducedWord& w : ball(model.rank, b.word_len)) out.push_back(std::move(w));
      break;
    case Model::Kind::SymmetricGroup:
      for (Permutation& p : symmetric_group(model.degree)) out.push_back(std::move(p));
      break;
    case Model::Kind::FreeGroupRing: {
      std::vector<std::int64_t> coeffs; // 1, -1, 2, -2, ...
      for (std::int64_t c = 1; c <= b.coeff; ++c) {
        coeffs.push_back(c);
        coeffs.push_back(-c);
      }
      ring_domain(ball(model.rank, b.word_len), b.support_size, coeffs,
                  CoeffDomain::integers(), out);
      break;
    }
    case Model::Kind::SymmetricGroupRing: {
      std::vector<std::int64_t> coeffs;
      for (std::int64_t c = 1; c <= std::min(b.coeff, model.modulus - 1); ++c)
        coeffs.push_back(c);
      ring_domain(symmetric_group(model.degree), b.support_size, coeffs,
                  CoeffDomain::mod(model.modulus), out);
      break;
    }
  }
  return out;
}

std::string Verdict::kind_str() const {
  switch (kind) {
    case Kind::HoldsAtBound: return "holds-at-bound";
    case Kind::Refuted: return "refuted";
    case Kind::Witness: return "witness";
    case Kind::NoWitnessAtBound: return "no-witness-at-bound";
  }
  return "?";
}

namespace {

// Odometer over assignments, first prefix variable most significant;
// returns the first assignment where the matrix evaluates to `target`.
std::optional<Assignment> first_with_truth(const logic::Sentence& s,
                                           const std::vector<Value>& domain, const Model& model,
                                           bool target) {
  std::vector<std::string> vars;
  for (const auto& q : s.prefix) vars.push_back(q.var);
  std::vector<std::size_t> idx(vars.size(), 0);
  while (true) {
    Assignment sigma;
    for (std::size_t i = 0; i < vars.size(); ++i) sigma[vars[i]] = domain[idx[i]];
    if (eval_qf(s.matrix, sigma, model) == target) return sigma;
    int pos = static_cast<int>(vars.size()) - 1;
    while (pos >= 0 && ++idx[pos] == domain.size()) idx[pos--] = 0;
    if (pos < 0) return std::nullopt;
  }
}

} // namespace

Verdict check_universal_bounded(const logic::Sentence& s, const DomainBounds& b,
                                const Model& model) {
  for (const auto& q : s.prefix)
    if (!q.universal)
      throw std::invalid_argument("check_universal_bounded: universal prenex sentence required");
  auto counterexample = first_with_truth(s, enumerate_domain(model, b), model, false);
  if (counterexample) return Verdict{Verdict::Kind::Refuted, b, std::move(counterexample)};
  return Verdict{Verdict::Kind::HoldsAtBound, b, std::nullopt};
}

Verdict witness_search(const logic::Sentence& s, const DomainBounds& b, const Model& model) {
  for (const auto& q : s.prefix)
    if (q.universal)
      throw std::invalid_argument("witness_search: existential prenex sentence required");
  auto witness = first_with_truth(s, enumerate_domain(model, b), model, true);
  if (witness) return Verdict{Verdict::Kind::Witness, b, std::move(witness)};
  return Verdict{Verdict::Kind::NoWitnessAtBound, b, std::nullopt};
}

HarnessReport equivalence_harness(const logic::Sentence& s, const DomainBounds& b, int rank) {
  logic::Sentence negated = logic::negate_primitive(s);
  logic::Sentence horn = encode::primitive_to_horn(s);
  Model group_model = Model::free_group(rank);
  Model ring_model = Model::free_group_ring(rank);

  std::vector<ReducedWord> words = ball(rank, b.word_len);
  std::vector<std::string> vars;
  for (const auto& q : s.prefix) vars.push_back(q.var);

  HarnessReport report;
  std::vector<std::size_t> idx(vars.size(), 0);
  while (true) {
    Assignment group_sigma, ring_sigma;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      group_sigma[vars[i]] = words[idx[i]];
      ring_sigma[vars[i]] = FreeRingElem::embed(words[idx[i]]);
    }
    bool in_f = eval_qf(negated.matrix, group_sigma, group_model);
    bool in_zf = eval_qf(horn.matrix, ring_sigma, ring_model);
    ++report.total;
    if (in_f == in_zf)
      ++report.agreements;
    else if (report.disagreements.size() < 10)
      report.disagreements.push_back(group_sigma);
    int pos = static_cast<int>(vars.size()) - 1;
    while (pos >= 0 && ++idx[pos] == words.size()) idx[pos--] = 0;
    if (pos < 0) break;
  }
  return report;
}

} // namespace frl::modelcheck
