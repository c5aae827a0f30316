#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "frl/groupring.hpp"

namespace frl::logic {

/// L0 is the group language (*, ^-1, 1); L2 adds ring structure (+, -, 0,
/// ring constants) and the predicates G (group membership) and P (scalar).
enum class Lang { L0, L2 };

struct Term;
using TermPtr = std::shared_ptr<const Term>;

/// Term tree shared by both languages. L0 terms use Var/Gen/One/Mul/Pow;
/// the remaining kinds are L2-only. Gen is an embedded group generator --
/// in L2 it denotes the ring element 1*a_g, printed multiplicatively, while
/// RingConst is a bracketed literal with explicit coefficients.
struct Term {
  enum class Kind { Var, Gen, One, Zero, RingConst, Mul, Add, Neg, Pow };
  Kind kind = Kind::One;
  std::string var;    // Var
  int gen = 0;        // Gen: generator index 1..k
  FreeRingElem ring;  // RingConst
  TermPtr lhs, rhs;   // Mul/Add both, Neg/Pow lhs only
  long long exp = 0;  // Pow
};

TermPtr t_var(std::string name);
TermPtr t_gen(int g);
TermPtr t_one();
TermPtr t_zero();
TermPtr t_ring(FreeRingElem value);
TermPtr t_mul(TermPtr a, TermPtr b);
TermPtr t_add(TermPtr a, TermPtr b);
TermPtr t_sub(TermPtr a, TermPtr b); // a + (-b)
TermPtr t_neg(TermPtr a);
TermPtr t_pow(TermPtr a, long long n);
TermPtr t_inv(TermPtr a); // a^-1

bool term_equal(const TermPtr& a, const TermPtr& b);

struct Atom {
  enum class Kind { Eq, Gamma, Scalar }; // Gamma = G(t), Scalar = P(t)
  Kind kind = Kind::Eq;
  TermPtr lhs, rhs; // Eq both; Gamma/Scalar lhs only
};

Atom a_eq(TermPtr l, TermPtr r);
Atom a_gamma(TermPtr t);
Atom a_scalar(TermPtr t);
bool atom_equal(const Atom& a, const Atom& b);

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

/// Connective tree. And/Or are n-ary and flattened at construction (no
/// And directly under And), which keeps printing and classification
/// canonical.
struct Formula {
  enum class Kind { Atomic, Not, And, Or, Implies };
  Kind kind = Kind::Atomic;
  Atom atom;                      // Atomic
  FormulaPtr child;               // Not
  std::vector<FormulaPtr> kids;   // And / Or, size >= 2
  FormulaPtr lhs, rhs;            // Implies
};

FormulaPtr f_atom(Atom a);
FormulaPtr f_not(FormulaPtr f);
FormulaPtr f_and(std::vector<FormulaPtr> fs); // size 1 collapses to the child
FormulaPtr f_or(std::vector<FormulaPtr> fs);
FormulaPtr f_implies(FormulaPtr l, FormulaPtr r);
bool formula_equal(const FormulaPtr& a, const FormulaPtr& b);

struct Quantifier {
  bool universal = true; // false = existential
  std::string var;
  bool operator==(const Quantifier&) const = default;
};

/// Prenex sentence: quantifier prefix plus quantifier-free matrix.
/// Vacuous quantification is permitted; a sentence must not have free
/// variables beyond its prefix.
struct Sentence {
  Lang lang = Lang::L0;
  std::vector<Quantifier> prefix;
  FormulaPtr matrix;
};

bool sentence_equal(const Sentence& a, const Sentence& b);

/// Variable names occurring in the matrix.
std::set<std::string> formula_vars(const FormulaPtr& f);

} // namespace frl::logic
