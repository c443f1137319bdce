// freedl/printer.hpp — canonical text rendering of concepts and ontologies.
// Output is fully parenthesized and stable; parse(print(x)) == x.

#ifndef FREEDL_PRINTER_HPP
#define FREEDL_PRINTER_HPP

#include <string>

#include "freedl/ast.hpp"

namespace freedl {

// Re-sugars bot/top, or, =>, <=>, box<i> and only where the tree matches the
// exact expansion those forms parse to.
std::string print_concept(Concept c);
std::string print_ci(const CI& ci);
std::string print_ontology(const Ontology& o);

}  // namespace freedl

#endif  // FREEDL_PRINTER_HPP
