#pragma once

// Element expressions for the CLI:
//   expr   := term ('+' term)*
//   term   := factor ('*' factor)*
//   factor := 'X' INT ('^' INT)? | 'q' ('^' '-'? INT)? | 'L' | '1'
// 'L' and '1' both denote the fundamental class [L].

#include "toricqh/qh.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace toricqh {

struct Factor {
    enum class Kind { Variable, Q, Unit };
    Kind kind = Kind::Unit;
    int index = 0;     // 1-based, for Variable
    int exponent = 1;  // Variable: >= 0; Q: any sign
    char literal = 'L';  // 'L' or '1', for Unit

    friend bool operator==(const Factor&, const Factor&) = default;
};

struct Term {
    std::vector<Factor> factors;
    friend bool operator==(const Term&, const Term&) = default;
};

struct ElementExpr {
    std::vector<Term> terms;
    friend bool operator==(const ElementExpr&, const ElementExpr&) = default;
};

/// Throws ParseError (with column) on syntax errors, and when a variable
/// index falls outside 1..nvars (nvars = 0 disables that check).
ElementExpr parse_expr(std::string_view text, std::size_t nvars = 0);
std::string print_expr(const ElementExpr& e);

/// Class of the expression in the ring (monomials reduced, q-powers tracked).
QHElement evaluate(const Ring& ring, const ElementExpr& e);

}  // namespace toricqh
