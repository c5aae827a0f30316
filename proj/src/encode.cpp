#include "frl/encode.hpp"

#include <set>
#include <stdexcept>

#include "frl/logic/classify.hpp"

namespace frl::encode {

using namespace logic;

Sentence primitive_to_horn(const Sentence& s) {
  if (s.lang != Lang::L0)
    throw std::invalid_argument("primitive_to_horn: expected an L0 sentence");
  Classification c = classify(s);
  if (!c.primitive) throw std::invalid_argument("primitive_to_horn: sentence is not primitive");
  auto parts = primitive_parts(s.matrix);
  if (parts->negatives.empty())
    throw std::invalid_argument(
        "primitive_to_horn: no negated atoms (q = 0), the Horn conclusion would be empty");

  std::vector<FormulaPtr> antecedent;
  for (const Quantifier& q : s.prefix) antecedent.push_back(f_atom(a_gamma(t_var(q.var))));
  for (const Atom& a : parts->positives) antecedent.push_back(f_atom(a));

  TermPtr product;
  for (const Atom& a : parts->negatives) {
    TermPtr w = a.rhs->kind == Term::Kind::One ? a.lhs : t_mul(a.lhs, t_inv(a.rhs));
    TermPtr factor = t_sub(t_one(), w);
    product = product ? t_mul(product, factor) : factor;
  }
  FormulaPtr conclusion = f_atom(a_eq(product, t_zero()));

  Sentence out;
  out.lang = Lang::L2;
  for (const Quantifier& q : s.prefix) out.prefix.push_back(Quantifier{true, q.var});
  out.matrix = antecedent.empty() ? conclusion : f_implies(f_and(std::move(antecedent)), conclusion);
  return out;
}

Sentence rct_axiom() {
  TermPtr x = t_var("x"), y = t_var("y"), z = t_var("z");
  FormulaPtr matrix = f_implies(
      f_and({f_not(f_atom(a_scalar(y))),
             f_atom(a_eq(t_mul(x, y), t_mul(y, x))),
             f_atom(a_eq(t_mul(y, z), t_mul(z, y)))}),
      f_atom(a_eq(t_mul(x, z), t_mul(z, x))));
  return Sentence{Lang::L2,
                  {Quantifier{true, "x"}, Quantifier{true, "y"}, Quantifier{true, "z"}},
                  matrix};
}

Sentence ct_axiom_group() {
  TermPtr x = t_var("x"), y = t_var("y"), z = t_var("z");
  FormulaPtr matrix = f_implies(
      f_and({f_not(f_atom(a_eq(y, t_one()))),
             f_atom(a_eq(t_mul(x, y), t_mul(y, x))),
             f_atom(a_eq(t_mul(y, z), t_mul(z, y)))}),
      f_atom(a_eq(t_mul(x, z), t_mul(z, x))));
  return Sentence{Lang::L0,
                  {Quantifier{true, "x"}, Quantifier{true, "y"}, Quantifier{true, "z"}},
                  matrix};
}

std::pair<Sentence, Sentence> torsion_axiom(int n) {
  if (n < 2) throw std::invalid_argument("torsion_axiom: n must be >= 2");
  TermPtr x = t_var("x");
  FormulaPtr power_eq_one = f_atom(a_eq(t_pow(x, n), t_one()));
  FormulaPtr x_eq_one = f_atom(a_eq(x, t_one()));

  Sentence group{Lang::L0, {Quantifier{true, "x"}}, f_implies(power_eq_one, x_eq_one)};
  Sentence ring{Lang::L2,
                {Quantifier{true, "x"}},
                f_implies(f_and({f_atom(a_gamma(x)), power_eq_one}), x_eq_one)};
  return {std::move(group), std::move(ring)};
}

Sentence square_zero_axiom() {
  TermPtr x = t_var("x");
  FormulaPtr matrix = f_implies(f_and({f_atom(a_scalar(x)), f_atom(a_eq(t_pow(x, 2), t_zero()))}),
                                f_atom(a_eq(x, t_zero())));
  return Sentence{Lang::L2, {Quantifier{true, "x"}}, matrix};
}

TermPtr element_term(const FreeRingElem& value) {
  if (value.support_size() == 1 && value.terms().begin()->second == 1) {
    const ReducedWord& w = value.terms().begin()->first;
    if (w.is_identity()) return t_one();
    TermPtr acc;
    for (Letter l : w.letters()) {
      TermPtr g = t_gen(l > 0 ? l : -l);
      if (l < 0) g = t_inv(g);
      acc = acc ? t_mul(acc, g) : g;
    }
    return acc;
  }
  if (value.is_zero()) return t_zero();
  return t_ring(value);
}

std::vector<Sentence> diagram_fragment(const std::vector<FreeRingElem>& constants, int depth) {
  if (depth < 0) throw std::invalid_argument("diagram_fragment: negative depth");
  {
    std::set<FreeRingElem::Terms> seen;
    for (const FreeRingElem& c : constants)
      if (!seen.insert(c.terms()).second)
        throw std::invalid_argument("diagram_fragment: constants must be pairwise distinct");
  }

  struct Entry {
    TermPtr term;
    FreeRingElem value;
  };
  std::vector<Entry> pool;
  auto push_unique = [&](TermPtr t, FreeRingElem v) {
    for (const Entry& e : pool)
      if (term_equal(e.term, t)) return;
    pool.push_back({std::move(t), std::move(v)});
  };
  for (const FreeRingElem& c : constants) push_unique(element_term(c), c);
  std::size_t base_count = pool.size();

  std::size_t level_begin = 0;
  for (int d = 0; d < depth; ++d) {
    std::size_t level_end = pool.size();
    for (std::size_t i = 0; i < level_end; ++i) {
      for (std::size_t j = 0; j < level_end; ++j) {
        if (i < level_begin && j < level_begin) continue; // both already combined
        push_unique(t_add(pool[i].term, pool[j].term), pool[i].value + pool[j].value);
        push_unique(t_mul(pool[i].term, pool[j].term), pool[i].value * pool[j].value);
      }
    }
    level_begin = level_end;
  }

  std::vector<Sentence> out;
  auto closed = [](FormulaPtr matrix) { return Sentence{Lang::L2, {}, std::move(matrix)}; };
  // Value atoms: each composite term equated to the literal it evaluates to.
  for (std::size_t i = base_count; i < pool.size(); ++i)
    out.push_back(closed(f_atom(a_eq(pool[i].term, t_ring(pool[i].value)))));
  // Pairwise atoms: equality or negated equality, whichever holds in Z[F].
  for (std::size_t i = 0; i < pool.size(); ++i) {
    for (std::size_t j = i + 1; j < pool.size(); ++j) {
      FormulaPtr eq = f_atom(a_eq(pool[i].term, pool[j].term));
      out.push_back(closed(pool[i].value == pool[j].value ? eq : f_not(eq)));
    }
  }
  return out;
}

bool AxiomBundle::consistent() const {
  using logic::classify;
  for (const Entry& e : entries) {
    logic::Classification c = classify(e.sentence);
    if (e.label.starts_with("torsion-")) {
      bool ok = e.sentence.lang == Lang::L0 ? c.quasi_identity : c.strict_universal_horn;
      if (!ok) return false;
    } else if (e.label == "rct") {
      if (!c.universal || c.horn) return false;
    } else if (e.label == "ct") {
      if (!c.universal) return false;
    } else if (e.label == "square-zero") {
      if (!c.strict_universal_horn) return false;
    } else if (e.label == "translated-horn") {
      if (!c.strict_universal_horn) return false;
    } else if (e.label == "diagram-atom") {
      auto parts = logic::primitive_parts(e.sentence.matrix);
      if (!parts || parts->positives.size() + parts->negatives.size() != 1) return false;
    } else {
      return false; // unknown label
    }
  }
  return true;
}

} // namespace frl::encode
