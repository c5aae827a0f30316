#include "frl/logic/print.hpp"

#include <stdexcept>

namespace frl::logic {

namespace {

// Precedence: atoms 5, postfix ^ 4, * 3, +/- and unary minus 2.
int prec(const Term& t) {
  switch (t.kind) {
    case Term::Kind::Var:
    case Term::Kind::Gen:
    case Term::Kind::One:
    case Term::Kind::Zero:
    case Term::Kind::RingConst: return 5;
    case Term::Kind::Pow: return 4;
    case Term::Kind::Mul: return 3;
    case Term::Kind::Add:
    case Term::Kind::Neg: return 2;
  }
  return 5;
}

void term_to(const TermPtr& t, int min_prec, std::string& out) {
  bool parens = prec(*t) < min_prec;
  if (parens) out += '(';
  switch (t->kind) {
    case Term::Kind::Var: out += t->var; break;
    case Term::Kind::Gen: out += static_cast<char>('a' + t->gen - 1); break;
    case Term::Kind::One: out += '1'; break;
    case Term::Kind::Zero: out += '0'; break;
    case Term::Kind::RingConst: out += ring_literal_str(t->ring); break;
    case Term::Kind::Pow:
      term_to(t->lhs, 4, out);
      out += '^';
      out += std::to_string(t->exp);
      break;
    case Term::Kind::Mul:
      term_to(t->lhs, 3, out);
      out += '*';
      term_to(t->rhs, 4, out);
      break;
    case Term::Kind::Add:
      term_to(t->lhs, 2, out);
      if (t->rhs->kind == Term::Kind::Neg) {
        out += " - ";
        term_to(t->rhs->lhs, 3, out);
      } else {
        out += " + ";
        term_to(t->rhs, 3, out);
      }
      break;
    case Term::Kind::Neg:
      out += '-';
      term_to(t->lhs, 3, out);
      break;
  }
  if (parens) out += ')';
}

void atom_to(const Atom& a, std::string& out) {
  switch (a.kind) {
    case Atom::Kind::Eq:
      term_to(a.lhs, 0, out);
      out += " = ";
      term_to(a.rhs, 0, out);
      break;
    case Atom::Kind::Gamma:
      out += "G(";
      term_to(a.lhs, 0, out);
      out += ')';
      break;
    case Atom::Kind::Scalar:
      out += "P(";
      term_to(a.lhs, 0, out);
      out += ')';
      break;
  }
}

void formula_to(const FormulaPtr& f, std::string& out) {
  switch (f->kind) {
    case Formula::Kind::Atomic: atom_to(f->atom, out); break;
    case Formula::Kind::Not:
      out += '~';
      // G(t), P(t) and nested negations are self-delimiting; everything
      // else gets parentheses unless it already prints them.
      if (f->child->kind == Formula::Kind::Atomic &&
          f->child->atom.kind == Atom::Kind::Eq) {
        out += '(';
        formula_to(f->child, out);
        out += ')';
      } else {
        formula_to(f->child, out);
      }
      break;
    case Formula::Kind::And:
    case Formula::Kind::Or: {
      out += '(';
      const char* sep = f->kind == Formula::Kind::And ? " & " : " | ";
      for (std::size_t i = 0; i < f->kids.size(); ++i) {
        if (i) out += sep;
        formula_to(f->kids[i], out);
      }
      out += ')';
      break;
    }
    case Formula::Kind::Implies:
      out += '(';
      formula_to(f->lhs, out);
      out += " -> ";
      formula_to(f->rhs, out);
      out += ')';
      break;
  }
}

} // namespace

std::string print_term(const TermPtr& t) {
  std::string out;
  term_to(t, 0, out);
  return out;
}

std::string print_formula(const FormulaPtr& f) {
  std::string out;
  formula_to(f, out);
  return out;
}

std::string print_sentence(const Sentence& s) {
  std::string out;
  for (const Quantifier& q : s.prefix) {
    out += q.universal ? 'A' : 'E';
    out += ' ';
    out += q.var;
    out += " . ";
  }
  formula_to(s.matrix, out);
  return out;
}

} // namespace frl::logic
