// freedl/parser.hpp — concrete syntax for concepts, ontologies and Minsky
// machines.  Grammar (ASCII):
//
//   concept   := iff
//   iff       := imp ( "<=>" imp )*
//   imp       := or ( "=>" or )*            (right associative)
//   or        := and ( "or" and )*
//   and       := unary ( "and" unary )*
//   unary     := "not" unary
//             | ("some" | "only") (role | "u") "." unary
//             | "some!=" "u" "." unary      (counting mode only)
//             | "some=1" "u" "." unary      (counting mode only)
//             | ("dia"|"box")<k> unary
//             | "X" unary | "F" unary | "G" unary   (aliases: dia1, dia2, box2)
//             | atom
//   atom      := ConceptName | "top" | "bot" | "{" term "}" | "(" concept ")"
//   term      := individual-name | "iota" concept
//
// Concept names are capitalized identifiers; role and individual names start
// lowercase.  Ontology files hold one CI per line, "C [= D", with '#' line
// comments.  Minsky files: a "states:" line, then one instruction per line,
// "i: inc r1 -> qj" or "i: dec r2 -> qj else qh"; the last state is halting.

#ifndef FREEDL_PARSER_HPP
#define FREEDL_PARSER_HPP

#include <string>

#include "freedl/ast.hpp"
#include "freedl/errors.hpp"
#include "freedl/minsky.hpp"

namespace freedl {

struct ParseOptions {
  bool allow_diff = false;  // accept some!= / some=1 (counting mode)
  int max_modality = 0;     // 0 = unlimited; otherwise reject dia<k>, k > max
};

Concept parse_concept(const std::string& text, const ParseOptions& opts = {});
Ontology parse_ontology(const std::string& text, const ParseOptions& opts = {});
MinskyMachine parse_minsky(const std::string& text);

}  // namespace freedl

#endif  // FREEDL_PARSER_HPP
