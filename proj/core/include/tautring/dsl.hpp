#pragma once

#include "tautring/taut_expr.hpp"

#include <stdexcept>
#include <string>

namespace tautring {

struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(const std::string& message, int line_, int column_)
        : std::runtime_error(message + " at line " + std::to_string(line_) +
                             ", column " + std::to_string(column_)),
          line(line_), column(column_) {}
};

/// Parses the expression language: generators o(r), h(a,r), k(r), c(r),
/// D(r,s); operators + - * ^; rational literals p/q; parentheses;
/// whitespace-insensitive. Products are formed in the free ring (no
/// rewriting). If declaredArity < 0 the arity is the largest factor index
/// appearing (0 for constant expressions).
TautExpr parseExpr(const std::string& text, int declaredArity = -1);

/// Canonical text form; parseExpr(printExpr(x)) == x.
std::string printExpr(const TautExpr& x);

struct CorrespondenceHeader {
    int sourceArity;
    int targetArity;
    TautExpr cycleClass;
};

/// Parses "corr M N : <expr>"; the expression lives on M + N factors.
CorrespondenceHeader parseCorrespondence(const std::string& text);

} // namespace tautring
