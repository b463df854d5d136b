#pragma once

#include <gmpxx.h>
#include <string>

namespace tautring {

/// Exact rational scalar used throughout; all identity checks are exact,
/// there are no tolerances anywhere in the engine.
using Rational = mpq_class;

inline Rational rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input.
Rational rationalFromString(const std::string& text);

/// Canonical text form: "p" or "p/q" with q > 1.
std::string toString(const Rational& q);

inline bool isInteger(const Rational& q) { return q.get_den() == 1; }

/// Value as long; precondition: isInteger and fits.
long toLong(const Rational& q);

} // namespace tautring
