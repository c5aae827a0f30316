#include "frl/logic/ast.hpp"

#include <stdexcept>

namespace frl::logic {

namespace {
TermPtr mk(Term t) { return std::make_shared<const Term>(std::move(t)); }
} // namespace

TermPtr t_var(std::string name) {
  Term t;
  t.kind = Term::Kind::Var;
  t.var = std::move(name);
  return mk(std::move(t));
}

TermPtr t_gen(int g) {
  if (g < 1 || g > kMaxRank) throw std::invalid_argument("generator index out of range");
  Term t;
  t.kind = Term::Kind::Gen;
  t.gen = g;
  return mk(std::move(t));
}

TermPtr t_one() {
  Term t;
  return mk(std::move(t));
}

TermPtr t_zero() {
  Term t;
  t.kind = Term::Kind::Zero;
  return mk(std::move(t));
}

TermPtr t_ring(FreeRingElem value) {
  Term t;
  t.kind = Term::Kind::RingConst;
  t.ring = std::move(value);
  return mk(std::move(t));
}

TermPtr t_mul(TermPtr a, TermPtr b) {
  Term t;
  t.kind = Term::Kind::Mul;
  t.lhs = std::move(a);
  t.rhs = std::move(b);
  return mk(std::move(t));
}

TermPtr t_add(TermPtr a, TermPtr b) {
  Term t;
  t.kind = Term::Kind::Add;
  t.lhs = std::move(a);
  t.rhs = std::move(b);
  return mk(std::move(t));
}

TermPtr t_sub(TermPtr a, TermPtr b) { return t_add(std::move(a), t_neg(std::move(b))); }

TermPtr t_neg(TermPtr a) {
  Term t;
  t.kind = Term::Kind::Neg;
  t.lhs = std::move(a);
  return mk(std::move(t));
}

TermPtr t_pow(TermPtr a, long long n) {
  Term t;
  t.kind = Term::Kind::Pow;
  t.lhs = std::move(a);
  t.exp = n;
  return mk(std::move(t));
}

TermPtr t_inv(TermPtr a) { return t_pow(std::move(a), -1); }

bool term_equal(const TermPtr& a, const TermPtr& b) {
  if (a == b) return true;
  if (!a || !b || a->kind != b->kind) return false;
  switch (a->kind) {
    case Term::Kind::Var: return a->var == b->var;
    case Term::Kind::Gen: return a->gen == b->gen;
    case Term::Kind::One:
    case Term::Kind::Zero: return true;
    case Term::Kind::RingConst: return a->ring == b->ring;
    case Term::Kind::Mul:
    case Term::Kind::Add: return term_equal(a->lhs, b->lhs) && term_equal(a->rhs, b->rhs);
    case Term::Kind::Neg: return term_equal(a->lhs, b->lhs);
    case Term::Kind::Pow: return a->exp == b->exp && term_equal(a->lhs, b->lhs);
  }
  return false;
}

Atom a_eq(TermPtr l, TermPtr r) { return Atom{Atom::Kind::Eq, std::move(l), std::move(r)}; }
Atom a_gamma(TermPtr t) { return Atom{Atom::Kind::Gamma, std::move(t), nullptr}; }
Atom a_scalar(TermPtr t) { return Atom{Atom::Kind::Scalar, std::move(t), nullptr}; }

bool atom_equal(const Atom& a, const Atom& b) {
  if (a.kind != b.kind) return false;
  if (a.kind == Atom::Kind::Eq)
    return term_equal(a.lhs, b.lhs) && term_equal(a.rhs, b.rhs);
  return term_equal(a.lhs, b.lhs);
}

namespace {
FormulaPtr mkf(Formula f) { return std::make_shared<const Formula>(std::move(f)); }
} // namespace

FormulaPtr f_atom(Atom a) {
  Formula f;
  f.kind = Formula::Kind::Atomic;
  f.atom = std::move(a);
  return mkf(std::move(f));
}

FormulaPtr f_not(FormulaPtr g) {
  Formula f;
  f.kind = Formula::Kind::Not;
  f.child = std::move(g);
  return mkf(std::move(f));
}

namespace {

FormulaPtr nary(Formula::Kind kind, std::vector<FormulaPtr> fs) {
  if (fs.empty()) throw std::invalid_argument("empty connective");
  std::vector<FormulaPtr> flat;
  for (FormulaPtr& f : fs) {
    if (f->kind == kind)
      flat.insert(flat.end(), f->kids.begin(), f->kids.end());
    else
      flat.push_back(std::move(f));
  }
  if (flat.size() == 1) return flat.front();
  Formula f;
  f.kind = kind;
  f.kids = std::move(flat);
  return mkf(std::move(f));
}

} // namespace

FormulaPtr f_and(std::vector<FormulaPtr> fs) { return nary(Formula::Kind::And, std::move(fs)); }
FormulaPtr f_or(std::vector<FormulaPtr> fs) { return nary(Formula::Kind::Or, std::move(fs)); }

FormulaPtr f_implies(FormulaPtr l, FormulaPtr r) {
  Formula f;
  f.kind = Formula::Kind::Implies;
  f.lhs = std::move(l);
  f.rhs = std::move(r);
  return mkf(std::move(f));
}

bool formula_equal(const FormulaPtr& a, const FormulaPtr& b) {
  if (a == b) return true;
  if (!a || !b || a->kind != b->kind) return false;
  switch (a->kind) {
    case Formula::Kind::Atomic: return atom_equal(a->atom, b->atom);
    case Formula::Kind::Not: return formula_equal(a->child, b->child);
    case Formula::Kind::And:
    case Formula::Kind::Or: {
      if (a->kids.size() != b->kids.size()) return false;
      for (std::size_t i = 0; i < a->kids.size(); ++i)
        if (!formula_equal(a->kids[i], b->kids[i])) return false;
      return true;
    }
    case Formula::Kind::Implies:
      return formula_equal(a->lhs, b->lhs) && formula_equal(a->rhs, b->rhs);
  }
  return false;
}

bool sentence_equal(const Sentence& a, const Sentence& b) {
  return a.lang == b.lang && a.prefix == b.prefix && formula_equal(a.matrix, b.matrix);
}

namespace {

void term_vars(const TermPtr& t, std::set<std::string>& out) {
  if (!t) return;
  if (t->kind == Term::Kind::Var) out.insert(t->var);
  term_vars(t->lhs, out);
  term_vars(t->rhs, out);
}

void collect(const FormulaPtr& f, std::set<std::string>& out) {
  if (!f) return;
  switch (f->kind) {
    case Formula::Kind::Atomic:
      term_vars(f->atom.lhs, out);
      term_vars(f->atom.rhs, out);
      break;
    case Formula::Kind::Not: collect(f->child, out); break;
    case Formula::Kind::And:
    case Formula::Kind::Or:
      for (const auto& k : f->kids) collect(k, out);
      break;
    case Formula::Kind::Implies:
      collect(f->lhs, out);
      collect(f->rhs, out);
      break;
  }
}

} // namespace

std::set<std::string> formula_vars(const FormulaPtr& f) {
  std::set<std::string> out;
  collect(f, out);
  return out;
}

} // namespace frl::logic
