#pragma once

// Text form of a PDE definition.  The grammar:
//
//   system := "pde" IDENT "{" decl* "equation" ":" expr "=" expr "}"
//   decl   := "field" IDENT "(" IDENT "," IDENT ")"
//           | "param" IDENT [":" ("real" | "int" | "complex")]
//   expr   := ["+" | "-"] product (("+" | "-") product)*
//   product:= atom ("*" atom)*
//   atom   := INTEGER ["/" INTEGER] | "i" | IDENT
//           | "dt" "(" IDENT ")"
//           | ("D" | "D2" | "D3") "(" IDENT ";" (INTEGER | "eps" | "mu") ")"
//
// '#' starts a comment running to the end of the line.  Every failure is a
// ParseError carrying a 1-based line and column.

#include <string>

#include "pt/system.hpp"

namespace pt {

PDESystem parse_system(const std::string& text);

// Canonical definition text; parsing it back yields an identical system.
std::string print_system(const PDESystem& sys);

}  // namespace pt
