#pragma once

#include "tautring/cohomology.hpp"
#include "tautring/correspondence.hpp"
#include "tautring/partitions.hpp"

#include <map>
#include <string>
#include <vector>

namespace tautring {

/// Chow-Kunneth projector family of S^m: self-correspondences pi^i for even
/// i in 0..4m summing to the diagonal, pairwise orthogonal idempotents,
/// self-dual (transpose(pi^i) = pi^(4m-i)). Cycle classes are stored
/// normalized.
struct ProjectorFamily {
    int power = 0;
    std::map<int, Correspondence> projectors;
    std::vector<std::vector<int>> groupGenerators; // block symmetries, if any

    const Correspondence& projector(int i) const;
    /// Zero correspondence for indices outside the family (odd or out of
    /// range); used by the bigrading.
    Correspondence projectorOrZero(int i) const;
    std::vector<int> indices() const;
};

/// The distinguished projectors of a K3 surface: pi^0 = o x S,
/// pi^4 = S x o, pi^2 = diagonal - pi^0 - pi^4. pi^2 projects onto
/// H^1 + H^2 + H^3, which equals H^2 here since b_1 = b_3 = 0. Rejects
/// non-K3 modes (abelian Chow projectors need machinery beyond this ring).
ProjectorFamily surfaceProjectors(const SurfaceModel& model);

/// Product family: pi^i(S^m) = sum over i_1+..+i_m = i of the tensor
/// products of surface projectors.
ProjectorFamily powerProjectors(int m, const SurfaceModel& model);

/// Family on S^l for a set partition with l blocks, verified invariant
/// under the block-permutation group (used equivariantly for the symmetric
/// quotient). Non-invariance throws logic_error.
ProjectorFamily symmetricProjectors(const SetPartition& mu, const SurfaceModel& model);

struct AxiomCheck {
    std::string id;
    bool pass;
    bool skipped = false;
    std::string witness; // discrepancy class, when failing
    double millis = 0;
};

struct AxiomReport {
    int power = 0;
    std::vector<AxiomCheck> checks;
    int axiomInstanceCount = 0; // idempotence + orthogonality records
    bool allPass() const;
    bool anySkipped() const;
};

/// Idempotence, pairwise orthogonality (both orders), completeness,
/// self-duality as exact ring identities, plus graded traces against the
/// Kunneth Betti numbers of the model. With a non-negative budget, checks
/// left over once the wall clock passes it are reported as skipped.
AxiomReport verifyCKAxioms(const ProjectorFamily& family, const SurfaceModel& model,
                           const CohomModel& cohom, double budgetSeconds = -1);

struct TripleCheck {
    int m, i, j, k;
    bool required;      // i + j + k != 8m: multiplicativity demands vanishing
    bool chowVanishes;  // projected small diagonal is 0 in the ring
    bool cohomVanishes; // and in cohomology
    bool skipped = false;
    std::string witness; // normal form when not vanishing in the ring
    double millis = 0;
};

struct MultiplicativityReport {
    int m = 0;
    bool symmetryReduced = false;
    std::vector<TripleCheck> checks; // sorted by (i,j,k)
    bool pass() const;    // required => chow and cohom => chow, no failures
    bool anySkipped() const;
};

struct MultOptions {
    bool symmetryReduce = false;
    double budgetSeconds = -1; // < 0: unlimited; >= 0 enforced
    bool factorized = false;  // factor-triple evaluation (used for m >= 3)
};

/// One multiplicativity triple: z = (pi^i x pi^j x pi^k)_* of the small
/// diagonal of S^m inside (S^m)^3, its ring normal form and its evaluation.
TripleCheck checkTriple(const ProjectorFamily& family, int i, int j, int k,
                        const SurfaceModel& model, const CohomModel& cohom,
                        bool factorized = false);

/// Full triple enumeration. With symmetryReduce only representatives
/// i <= j <= k are computed and the S_3-symmetry of the small diagonal
/// fills in the rest.
MultiplicativityReport checkMultiplicativity(const ProjectorFamily& family,
                                             const SurfaceModel& model,
                                             const CohomModel& cohom,
                                             const MultOptions& options = {});

/// The class of the small diagonal of S^m inside (S^m)^3, on 3m factors
/// grouped as blocks (1..m)(m+1..2m)(2m+1..3m).
TautExpr smallDiagonalOfPower(int m, const SurfaceModel& model);

/// The projected small diagonal computed purely in cohomology, factor
/// triple by factor triple, from evaluated raw generator classes; the
/// independent side of the dual-route multiplicativity check.
KunnethTensor projectedSmallDiagonalTensor(int m, int i, int j, int k,
                                           const CohomModel& cohom);

/// Splitting of a homogeneous class of codimension p into graded pieces
/// component_s = (pi^(2p-s))_* x; the components sum to normalize(x).
std::map<int, TautExpr> bigrading(const TautExpr& x, const ProjectorFamily& family,
                                  const SurfaceModel& model);

} // namespace tautring
