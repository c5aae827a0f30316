#pragma once

#include <string>

#include "frl/logic/ast.hpp"

namespace frl::logic {

/// Canonical text, injective on canonical ASTs: parse(print(s)) is
/// structurally equal to s. Conjunctions, disjunctions and implications
/// self-parenthesize; term parentheses follow precedence ^ > * > +/-.
std::string print_term(const TermPtr& t);
std::string print_formula(const FormulaPtr& f);
std::string print_sentence(const Sentence& s);

} // namespace frl::logic
