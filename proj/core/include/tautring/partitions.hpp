#pragma once

#include "tautring/cohomology.hpp"
#include "tautring/rational.hpp"

#include <string>
#include <vector>

namespace tautring {

/// Partition of the set {1..n} into disjoint non-empty blocks.
class SetPartition {
public:
    explicit SetPartition(std::vector<std::vector<int>> blocks);

    /// Canonical partition with the given block sizes: consecutive runs
    /// 1..s1, s1+1..s1+s2, ...
    static SetPartition fromShape(const std::vector<int>& shape);

    int n() const { return n_; }
    int length() const { return static_cast<int>(blocks_.size()); }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }

    /// Multiset of block sizes, descending: the integer partition giving the
    /// orbit of this set partition under the symmetric group.
    std::vector<int> shape() const;

    /// Generators of the subgroup of permutations of the block slots that
    /// swap adjacent blocks of equal size (the group permuting equal blocks,
    /// acting on S^length by coordinate permutation).
    std::vector<std::vector<int>> blockSymmetryGenerators() const;
    /// Full enumeration of that group (identity included).
    std::vector<std::vector<int>> blockSymmetryGroup() const;

    std::string toString() const;

private:
    int n_;
    std::vector<std::vector<int>> blocks_;
};

/// All partitions of the integer n, parts descending, enumerated in a
/// deterministic order.
std::vector<std::vector<int>> integerPartitions(int n);

/// One set partition per symmetric-group orbit; the count is the integer
/// partition number p(n).
std::vector<SetPartition> orbitRepresentatives(int n);

/// Formal direct sum of twisted motives of symmetric quotients: one summand
/// (shape, twist = length - n) per orbit.
struct FormalMotive {
    int n;
    struct Summand {
        std::vector<int> shape;
        int twist;
    };
    std::vector<Summand> summands;

    /// Display form of the decomposition.
    std::string toString() const;
    /// Display form of the induced projector formula, with the inverse
    /// intersection multiplicities kept as opaque symbols 1/m_mu.
    std::string projectorFormula(int degree) const;
};

/// The formal motive decomposition of the Hilbert scheme of n points.
FormalMotive dcmDecomposition(int n);

/// Dense polynomial in one variable, coefficient of t^i at index i.
using Poly = std::vector<Rational>;

/// Graded dimensions of the invariants of the signed tensor power: the
/// Poincare polynomial of S^(mu) for a set partition of the given shape,
/// computed by averaging graded traces over the block-permutation group
/// (odd-degree classes anticommute, so a transposition acts with a sign on
/// odd x odd).
Poly symmetricQuotientPoincare(const std::vector<int>& shape, const CohomModel& model);

/// Poincare polynomial of the formal motive: sum over summands of
/// t^(2(n-l)) * P(S^(mu), t).
Poly poincarePolynomial(const FormalMotive& fm, const CohomModel& model);

/// dim H^i of the Hilbert scheme via the decomposition; independent of the
/// multiplicities m_mu. Throws if i is outside 0..4n.
long hilbCKDimension(int n, int i, const CohomModel& model);

/// Euler characteristics of the Hilbert schemes for n = 1..nMax from the
/// generating function prod_m (1 - q^m)^(-chi); the independent numerical
/// oracle for the decomposition.
std::vector<long> gottscheEuler(int nMax, long chiTop);

/// Poincare polynomials of the Hilbert schemes for n = 1..nMax from the
/// refined product formula over the model's Betti numbers.
std::vector<Poly> gottschePoincare(int nMax, const CohomModel& model);

} // namespace tautring
