#include "frl/logic/classify.hpp"

#include <stdexcept>

namespace frl::logic {

namespace {

// NNF with Not pushed onto atoms: ~(A & B) -> ~A | ~B, A -> B as ~A | B,
// double negations cancelled.
FormulaPtr to_nnf(const FormulaPtr& f, bool positive) {
  switch (f->kind) {
    case Formula::Kind::Atomic: return positive ? f : f_not(f);
    case Formula::Kind::Not: return to_nnf(f->child, !positive);
    case Formula::Kind::And:
    case Formula::Kind::Or: {
      bool conj = (f->kind == Formula::Kind::And) == positive;
      std::vector<FormulaPtr> kids;
      kids.reserve(f->kids.size());
      for (const auto& k : f->kids) kids.push_back(to_nnf(k, positive));
      return conj ? f_and(std::move(kids)) : f_or(std::move(kids));
    }
    case Formula::Kind::Implies: {
      if (positive) return f_or({to_nnf(f->lhs, false), to_nnf(f->rhs, true)});
      return f_and({to_nnf(f->lhs, true), to_nnf(f->rhs, false)});
    }
  }
  throw std::logic_error("unreachable");
}

std::optional<Literal> as_literal(const FormulaPtr& f) {
  if (f->kind == Formula::Kind::Atomic) return Literal{true, f->atom};
  if (f->kind == Formula::Kind::Not && f->child->kind == Formula::Kind::Atomic)
    return Literal{false, f->child->atom};
  return std::nullopt;
}

std::optional<std::vector<Literal>> as_clause(const FormulaPtr& f) {
  if (auto lit = as_literal(f)) return std::vector<Literal>{*lit};
  if (f->kind != Formula::Kind::Or) return std::nullopt;
  std::vector<Literal> out;
  for (const auto& k : f->kids) {
    auto lit = as_literal(k);
    if (!lit) return std::nullopt;
    out.push_back(*lit);
  }
  return out;
}

} // namespace

std::optional<std::vector<std::vector<Literal>>> clause_form(const FormulaPtr& matrix) {
  FormulaPtr nnf = to_nnf(matrix, true);
  std::vector<std::vector<Literal>> clauses;
  if (nnf->kind == Formula::Kind::And) {
    for (const auto& k : nnf->kids) {
      auto c = as_clause(k);
      if (!c) return std::nullopt;
      clauses.push_back(std::move(*c));
    }
    return clauses;
  }
  auto c = as_clause(nnf);
  if (!c) return std::nullopt;
  clauses.push_back(std::move(*c));
  return clauses;
}

std::optional<PrimitiveParts> primitive_parts(const FormulaPtr& matrix) {
  PrimitiveParts parts;
  auto add = [&](const FormulaPtr& f) {
    auto lit = as_literal(f);
    if (!lit) return false;
    (lit->positive ? parts.positives : parts.negatives).push_back(lit->atom);
    return true;
  };
  if (matrix->kind == Formula::Kind::And) {
    for (const auto& k : matrix->kids)
      if (!add(k)) return std::nullopt;
    return parts;
  }
  if (!add(matrix)) return std::nullopt;
  return parts;
}

Classification classify(const Sentence& s) {
  Classification c;
  c.universal = true;
  c.existential = true;
  for (const Quantifier& q : s.prefix) {
    if (q.universal)
      c.existential = false;
    else
      c.universal = false;
  }

  c.primitive = c.existential && primitive_parts(s.matrix).has_value();

  if (auto clauses = clause_form(s.matrix)) {
    bool all_horn = true, all_eq = true;
    std::size_t single_pos = 0;
    for (const auto& clause : *clauses) {
      std::size_t pos = 0;
      for (const Literal& l : clause) {
        if (l.positive) ++pos;
        if (l.atom.kind != Atom::Kind::Eq) all_eq = false;
      }
      if (pos > 1) all_horn = false;
      if (clauses->size() == 1) single_pos = pos;
    }
    c.horn = all_horn;
    if (clauses->size() == 1) {
      c.basic_horn = single_pos <= 1;
      c.strict_basic_horn = single_pos == 1;
    }
    c.strict_universal_horn = c.universal && c.strict_basic_horn;
    c.quasi_identity = c.strict_universal_horn && all_eq;
  }
  return c;
}

Sentence negate_primitive(const Sentence& s) {
  Classification c = classify(s);
  if (!c.primitive) throw std::invalid_argument("negate_primitive: sentence is not primitive");
  auto parts = primitive_parts(s.matrix);
  if (parts->negatives.empty())
    throw std::invalid_argument(
        "negate_primitive: no negated atoms (q = 0), the implication form needs a conclusion");

  std::vector<FormulaPtr> conclusion;
  conclusion.reserve(parts->negatives.size());
  for (const Atom& a : parts->negatives) conclusion.push_back(f_atom(a));
  FormulaPtr matrix = f_or(std::move(conclusion));
  if (!parts->positives.empty()) {
    std::vector<FormulaPtr> antecedent;
    antecedent.reserve(parts->positives.size());
    for (const Atom& a : parts->positives) antecedent.push_back(f_atom(a));
    matrix = f_implies(f_and(std::move(antecedent)), matrix);
  }

  Sentence out;
  out.lang = s.lang;
  for (const Quantifier& q : s.prefix) out.prefix.push_back(Quantifier{true, q.var});
  out.matrix = matrix;
  return out;
}

} // namespace frl::logic
