#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "soficlab/logic_ast.hpp"
#include "soficlab/logic_macros.hpp"

namespace soficlab::logic {

struct ParseOptions {
  /// Reject variables that are neither bound nor listed in free_variables.
  bool sentence = false;
  std::vector<std::string> free_variables;
  /// Defaults to MacroRegistry::builtin().
  const MacroRegistry* registry = nullptr;
};

/// Grammar:
///   formula := ("forall" | "exists") ident "." formula | disj [ "->" formula ]
///   disj    := conj { "|" conj }      conj := unit { "&" unit }
///   unit    := "!" unit | "(" formula ")" | term "=" term | Macro "(" args ")"
///   term    := factor { "*" factor }  factor := base [ "^-1" ]
///   base    := ident | "1" | "[" term "," term "]" | "(" term ")"
/// Throws ParseError with a 1-based line and column.
Formula parse_formula(std::string_view text, const ParseOptions& options = {});
Formula parse_sentence(std::string_view text, const MacroRegistry* registry = nullptr);
Term parse_term(std::string_view text);

}  // namespace soficlab::logic
