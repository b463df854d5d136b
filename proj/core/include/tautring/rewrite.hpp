#pragma once

#include "tautring/taut_expr.hpp"

#include <random>
#include <vector>

namespace tautring {

/// One concrete redex: a rule together with the generator positions it
/// consumes (indices into the sorted generator list of the monomial).
struct RewriteStep {
    Rule rule;
    int pos1 = -1;
    int pos2 = -1;
};

/// All redexes of the monomial under the model's rule set, restricted by the
/// mask. Empty result means the monomial is in normal form.
std::vector<RewriteStep> applicableSteps(const Monomial& m, const SurfaceModel& model,
                                         RuleMask mask = RuleMask::all());

/// Applies one step to coeff * m; the result is a (short) sum of rewritten
/// terms, not further normalized.
std::vector<std::pair<Monomial, Rational>> applyStep(const Monomial& m,
                                                     const Rational& coeff,
                                                     const RewriteStep& step,
                                                     const SurfaceModel& model);

/// Normal form of a single monomial (with coefficient), deterministic
/// rule-priority order.
TautExpr normalizeMonomial(const Monomial& m, const Rational& coeff, int arity,
                           const SurfaceModel& model, RuleMask mask = RuleMask::all());

/// Normalization applying redexes in a random order; used to validate
/// confluence empirically. Agrees with normalize() on every input tested.
TautExpr normalizeRandomOrder(const TautExpr& x, const SurfaceModel& model,
                              std::mt19937_64& rng, RuleMask mask = RuleMask::all());

} // namespace tautring
