#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <string_view>

#include "frl/logic/ast.hpp"

namespace frl::logic {

struct ParseError : std::runtime_error {
  ParseError(std::size_t pos, const std::string& what)
      : std::runtime_error("syntax error at position " + std::to_string(pos) + ": " + what),
        position(pos) {}
  std::size_t position;
};

/// Parses a prenex sentence:
///   sentence := (('A'|'E') var '.')* formula
/// Identifiers bound by the prefix are variables; an unbound single-letter
/// identifier within the rank is an embedded generator constant. Free
/// variables beyond the prefix and wrong-language symbols (G/P or ring
/// operations in L0) are rejected.
Sentence parse_sentence(std::string_view text, Lang lang, int rank);

/// Parses a quantifier-free formula whose free variables are declared by
/// the caller (used for evaluation under an explicit assignment).
FormulaPtr parse_matrix(std::string_view text, Lang lang, int rank,
                        const std::set<std::string>& declared_vars);

} // namespace frl::logic
