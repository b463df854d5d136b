#pragma once

#include "tautring/taut_expr.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace tautring {

struct Correspondence;

enum class CohomMode { K3, Abelian };

/// Exact model of the rational cohomology ring of the surface.
///
/// K3: basis {1, e_1..e_22, pt} in degrees 0/2/4; the degree-2 cup form is
/// the configured divisor Gram block padded by an identity block, and the
/// divisor class h_a maps to e_a.
///
/// Abelian: exterior algebra on degree-1 generators e_1..e_4, basis the 16
/// ordered monomials e_I, integral of e_1234 equal to 1. Divisor classes map
/// to the orthogonal frame f_1..f_6 of H^2 with Gram diag(2,2,2,-2,-2,-2).
class CohomModel {
public:
    static CohomModel k3(const SurfaceModel& surface);
    static CohomModel abelian(const SurfaceModel& surface);
    /// Dispatch on surface.mode(); GenericB1Zero has no cohomology model.
    static CohomModel forSurface(const SurfaceModel& surface);

    CohomMode mode() const { return mode_; }
    int basisSize() const { return static_cast<int>(degree_.size()); }
    int degree(int i) const { return degree_[i]; }
    int bettiNumber(int d) const;
    long eulerCharacteristic() const;

    int unitIndex() const { return unit_; }
    int topIndex() const { return top_; }

    /// Cup product of basis classes, sparse over the basis.
    const std::vector<std::pair<int, Rational>>& product(int i, int j) const {
        return product_[i][j];
    }
    /// Poincare pairing: coefficient of the top class in e_i e_j.
    const Rational& pairing(int i, int j) const { return pairing_[i][j]; }
    const Rational& pairingInverse(int i, int j) const { return pairingInv_[i][j]; }

    int nsRank() const { return static_cast<int>(divisorImage_.size()); }
    const std::vector<std::pair<int, Rational>>& divisorImage(int a) const;

    std::string basisLabel(int i) const;

private:
    CohomMode mode_;
    std::vector<int> degree_;
    int unit_ = 0;
    int top_ = 0;
    std::vector<std::vector<std::vector<std::pair<int, Rational>>>> product_;
    std::vector<std::vector<Rational>> pairing_;
    std::vector<std::vector<Rational>> pairingInv_;
    std::vector<std::vector<std::pair<int, Rational>>> divisorImage_;

    CohomModel() = default;
    void finishTables();
};

/// Element of the N-fold graded tensor power of the model's cohomology;
/// components indexed by tuples of basis labels. All graded signs follow the
/// Koszul conventions documented in cohomology.cpp.
class KunnethTensor {
public:
    using Tuple = std::vector<std::uint8_t>;

    explicit KunnethTensor(int arity = 0) : arity_(arity) {}

    static KunnethTensor unit(int arity, const CohomModel& model);

    int arity() const { return arity_; }
    bool isZero() const { return components_.empty(); }
    const std::map<Tuple, Rational>& components() const { return components_; }

    void addComponent(Tuple t, const Rational& coeff);

    KunnethTensor& operator+=(const KunnethTensor& other);
    KunnethTensor& operator-=(const KunnethTensor& other);
    KunnethTensor& operator*=(const Rational& scalar);
    friend KunnethTensor operator+(KunnethTensor x, const KunnethTensor& y) { return x += y; }
    friend KunnethTensor operator-(KunnethTensor x, const KunnethTensor& y) { return x -= y; }
    bool operator==(const KunnethTensor& other) const = default;

    /// Multi-degree of a component tuple, summed.
    int totalDegree(const Tuple& t, const CohomModel& model) const;

    /// Sparse (tuple, coefficient) listing for reports.
    std::string toString(const CohomModel& model) const;

private:
    int arity_;
    std::map<Tuple, Rational> components_;
};

KunnethTensor tensorMultiply(const KunnethTensor& x, const KunnethTensor& y,
                             const CohomModel& model);
KunnethTensor tensorPullback(const KunnethTensor& x, int targetArity,
                             const std::vector<int>& indexMap, const CohomModel& model);
KunnethTensor tensorPermute(const KunnethTensor& x, const std::vector<int>& perm,
                            const CohomModel& model);
/// Integration over one factor; keeps components whose slot entry is the top
/// class. Degree drops by 4.
KunnethTensor tensorPushforward(const KunnethTensor& x, int dropped,
                                const CohomModel& model);
/// Coefficient of the all-top component.
Rational tensorIntegral(const KunnethTensor& x, const CohomModel& model);

/// Kunneth expansion of the diagonal: sum over the basis of e x e-dual with
/// the inverse pairing matrix; acts as the identity correspondence.
KunnethTensor diagonalClass(const CohomModel& model);

/// Ring morphism from the tautological ring to cohomology: o to the point
/// class, h_a to its divisor image, k to zero, c to chi_top times the point
/// class, D to the diagonal class on the named factors.
KunnethTensor evaluate(const TautExpr& x, const CohomModel& model);

bool isCohomologicallyTrivial(const TautExpr& x, const CohomModel& model);

/// Degree of a top-codimension class; throws unless x is homogeneous of
/// codimension 2 * arity.
Rational integral(const TautExpr& x, const CohomModel& model);

/// Action of a correspondence tensor (source block first) on a tensor.
KunnethTensor actOnTensor(const KunnethTensor& corr, int sourceArity, int targetArity,
                          const KunnethTensor& x, const CohomModel& model);

/// Trace of the endomorphism of H^*(S^N) induced by a self-correspondence,
/// per cohomological degree 0..4N. Entries are honest traces (the identity
/// correspondence gives the Betti numbers).
std::vector<Rational> gradedTraces(const Correspondence& c, const CohomModel& model);
/// Alternating sum of the graded traces (the Lefschetz number; chi_top for
/// the identity correspondence).
Rational traceOfCorrespondence(const Correspondence& c, const CohomModel& model);

/// The [n]^* endomorphism of the abelian model: scales degree-1 generators
/// by n, hence degree i by n^i. Rejects the K3 model.
class MultiplicationEndo {
public:
    MultiplicationEndo(long n, const CohomModel& model);
    long n() const { return n_; }
    Rational scaleForDegree(int degree) const;
    KunnethTensor apply(const KunnethTensor& x, const CohomModel& model) const;

private:
    long n_;
};

MultiplicationEndo multiplicationByN(long n, const CohomModel& model);

} // namespace tautring
