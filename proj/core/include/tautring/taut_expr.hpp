#pragma once

#include "tautring/generators.hpp"
#include "tautring/rational.hpp"
#include "tautring/surface_model.hpp"

#include <map>
#include <optional>
#include <vector>

namespace tautring {

/// Exact rational linear combination of monomials on an N-fold product of
/// the surface. Zero is the empty term map; equality of normalized
/// expressions is structural.
class TautExpr {
public:
    explicit TautExpr(int arity = 0);

    static TautExpr zero(int arity) { return TautExpr(arity); }
    static TautExpr unit(int arity);
    static TautExpr term(int arity, Monomial m, Rational coeff);
    static TautExpr generator(int arity, Generator g);

    static TautExpr point(int arity, int r);
    static TautExpr divisor(int arity, int a, int r);
    static TautExpr canonical(int arity, int r);
    static TautExpr secondChern(int arity, int r);
    static TautExpr diagonal(int arity, int r, int s);

    int arity() const { return arity_; }
    bool isZero() const { return terms_.empty(); }
    const std::map<Monomial, Rational>& terms() const { return terms_; }
    size_t termCount() const { return terms_.size(); }

    /// Adds coeff * m, merging and dropping a resulting zero coefficient.
    void addTerm(const Monomial& m, const Rational& coeff);

    TautExpr& operator+=(const TautExpr& other);
    TautExpr& operator-=(const TautExpr& other);
    TautExpr& operator*=(const Rational& scalar);
    friend TautExpr operator+(TautExpr x, const TautExpr& y) { return x += y; }
    friend TautExpr operator-(TautExpr x, const TautExpr& y) { return x -= y; }
    friend TautExpr operator*(TautExpr x, const Rational& c) { return x *= c; }
    friend TautExpr operator*(const Rational& c, TautExpr x) { return x *= c; }
    TautExpr operator-() const;

    /// Product in the free ring on the generators: monomial multisets are
    /// merged, no rewriting happens. Arities must agree.
    TautExpr freeProduct(const TautExpr& other) const;

    bool operator==(const TautExpr& other) const = default;

    /// Common codimension of all terms, if homogeneous (the unit has codim 0;
    /// zero is homogeneous of every codimension and reports nullopt here).
    std::optional<int> homogeneousCodim() const;

    int maxFactorIndex() const;

    std::string toString() const;

private:
    int arity_;
    std::map<Monomial, Rational> terms_;

    void checkIndices() const;
};

/// Bitmask of rewrite rules; used to run the engine with a restricted rule
/// set (e.g. deriving the diagonal-divisor rule from the small-diagonal
/// expansion without assuming it).
enum class Rule : unsigned {
    ChernToPoint = 1u << 0,       // c(r) -> chi_top * o(r)
    CanonicalVanishes = 1u << 1,  // k(r) -> 0 (K3, abelian)
    FactorTruncation = 1u << 2,   // per-factor decoration of codim > 2 -> 0
    DivisorPair = 1u << 3,        // h(a,r)*h(b,r) -> gram(a,b) * o(r) (K3)
    CanonicalSquare = 1u << 4,    // k(r)^2 -> deg(K^2) * o(r) (generic)
    DiagonalPoint = 1u << 5,      // D(r,s)*o(r) -> o(r)*o(s)
    DiagonalDivisor = 1u << 6,    // D(r,s)*h(a,r) -> h(a,r)*o(s) + o(r)*h(a,s) (K3)
    DiagonalCanonical = 1u << 7,  // D(r,s)*k(r) -> k(r)*o(s) + o(r)*k(s) (generic)
    DiagonalSquare = 1u << 8,     // D(r,s)^2 -> chi_top * o(r)*o(s)
    DiagonalPair = 1u << 9,       // D(r,s)*D(r,t) -> small-diagonal expansion
};

struct RuleMask {
    unsigned bits = ~0u;
    static RuleMask all() { return {}; }
    bool has(Rule rule) const { return bits & static_cast<unsigned>(rule); }
    RuleMask without(Rule rule) const {
        return {bits & ~static_cast<unsigned>(rule)};
    }
};

/// Canonical normal form for the configured surface model: fixpoint of the
/// rewrite system, idempotent and linear over the rationals.
TautExpr normalize(const TautExpr& x, const SurfaceModel& model,
                   RuleMask mask = RuleMask::all());

/// Normalized product.
TautExpr multiply(const TautExpr& x, const TautExpr& y, const SurfaceModel& model,
                  RuleMask mask = RuleMask::all());

/// Relabels factor indices along an injective map 1..N -> 1..M; arity
/// becomes M. indexMap[r-1] is the image of factor r.
TautExpr pullback(const TautExpr& x, int targetArity, const std::vector<int>& indexMap);

/// Pushforward along the projection forgetting the given factor; codimension
/// drops by 2 and factors above the dropped one shift down.
TautExpr pushforward(const TautExpr& x, int dropped, const SurfaceModel& model,
                     RuleMask mask = RuleMask::all());

/// Ring automorphism relabeling factors by a permutation of 1..N
/// (perm[r-1] = image of r); commutes with normalize.
TautExpr applyPermutation(const TautExpr& x, const std::vector<int>& perm);

/// Averaged group action (1/|G|) sum_g g.x; a projector onto invariants.
/// Throws on an empty group; optionally verifies closure under composition.
TautExpr symmetrize(const TautExpr& x, const std::vector<std::vector<int>>& group,
                    bool checkClosure = false);

/// Normalized class of the small diagonal on the chosen k factors of S^N:
/// the product of D(i_1, i_j) for j = 2..k.
TautExpr smallDiagonal(int k, int arity, const std::vector<int>& indices,
                       const SurfaceModel& model);

} // namespace tautring
