#pragma once

#include "tautring/taut_expr.hpp"

#include <span>
#include <vector>

namespace tautring {

/// Correspondence between powers of the surface: a cycle class on the
/// (M+N)-fold product with factors 1..M the source block and M+1..M+N the
/// target block.
struct Correspondence {
    int sourceArity;
    int targetArity;
    TautExpr cycleClass;

    Correspondence(int source, int target, TautExpr cls);

    bool operator==(const Correspondence& other) const = default;
};

/// The diagonal of S^m as a self-correspondence (identity).
Correspondence identityCorrespondence(int m);

/// Swaps the source and target blocks.
Correspondence transpose(const Correspondence& c);

/// Tensor product: sources concatenated, then targets, each factor pulled
/// back along its block-interleaving index map.
Correspondence tensorProduct(std::span<const Correspondence> cs);
Correspondence tensorProduct(const Correspondence& a, const Correspondence& b);
Correspondence tensorProduct(const Correspondence& a, const Correspondence& b,
                             const Correspondence& c);

/// g after f: pull both classes to the triple product, multiply, push
/// forward over the middle block.
Correspondence compose(const Correspondence& g, const Correspondence& f,
                       const SurfaceModel& model);

/// Action on cycle classes: push over the source block of
/// (pullback of x) * cycleClass. The small diagonal as a correspondence
/// S x S -> S sends a x b to a * b.
TautExpr actOnCycle(const Correspondence& c, const TautExpr& x, const SurfaceModel& model);

} // namespace tautring
