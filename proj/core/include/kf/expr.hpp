#ifndef KF_EXPR_HPP
#define KF_EXPR_HPP

#include <string>

#include "kf/knots.hpp"

namespace kf {

// Knot expression grammar (whitespace between tokens is ignored):
//   Expr := Term (('+' | '-') Term)*
//   Term := INT '*' Atom | Atom
//   Atom := 'T(' INT ',' INT ')' | 'C(' Atom ';' INT ',' INT ')'
//         | 'S[' INT-list ']' | 'K(' INT ',' INT ')' | '-' Atom | '(' Expr ')'
// Syntax errors carry the 0-based input offset; leaf validation (coprimality,
// the cable certification bound, K_{i,j} domain) is applied during parsing.
KnotExpr parse_expr(const std::string& text);

// Inverse of parse_expr up to notation: parsing the printed form yields an
// identical tree.  K(i, j) is expanded at parse time, so it prints as the
// connected sum it denotes.
std::string print_expr(const KnotExpr& e);

}  // namespace kf

#endif
