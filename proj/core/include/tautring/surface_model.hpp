#pragma once

#include "tautring/rational.hpp"

#include <string>
#include <vector>

namespace tautring {

enum class SurfaceMode { K3, Abelian, GenericB1Zero };

std::string to_string(SurfaceMode mode);
SurfaceMode surfaceModeFromString(const std::string& name);

/// Coefficient data of the surface that parameterizes all rewriting and
/// evaluation: mode, topological Euler characteristic, deg K^2, and the
/// intersection Gram matrix of the named divisor classes. The divisor basis
/// is abstract; only the Gram matrix enters any computation.
class SurfaceModel {
public:
    SurfaceModel(SurfaceMode mode, long chiTop, long canonicalSelfIntersection,
                 std::vector<std::vector<Rational>> gram);

    /// Standard K3 model: chi_top = 24, K = 0, one polarization class of
    /// self-intersection 2d (default d = 1).
    static SurfaceModel k3(long polarizationDegree = 1);
    /// Abelian surface: chi_top = 0, K = 0, principal polarization theta^2 = 2.
    static SurfaceModel abelian();
    /// Generic surface with b_1 = 0 and configurable invariants; no divisor
    /// classes unless a gram matrix is supplied.
    static SurfaceModel genericB1Zero(long chiTop, long canonicalSelfIntersection,
                                      std::vector<std::vector<Rational>> gram = {});

    /// Reads a JSON config with keys mode, chi_top, k2, ns_rank, gram.
    /// Rational entries may be numbers or "p/q" strings.
    static SurfaceModel fromJson(const std::string& jsonText);
    static SurfaceModel fromFile(const std::string& path);

    SurfaceMode mode() const { return mode_; }
    long chiTop() const { return chiTop_; }
    long canonicalSelfIntersection() const { return k2_; }
    int nsRank() const { return static_cast<int>(gram_.size()); }

    /// Intersection pairing of divisor classes a and b (1-based).
    const Rational& gram(int a, int b) const;

    std::string describe() const;

private:
    SurfaceMode mode_;
    long chiTop_;
    long k2_;
    std::vector<std::vector<Rational>> gram_;

    void validate() const;
};

} // namespace tautring
