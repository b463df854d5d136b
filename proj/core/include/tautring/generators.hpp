#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace tautring {

/// Generators of the tautological ring of S^N. Factor indices are 1-based.
enum class GenKind : std::uint8_t {
    Point,        // o(r), the distinguished degree-1 zero-cycle, codim 2
    Divisor,      // h(a,r), a-th divisor basis class pulled back from factor r, codim 1
    Canonical,    // k(r), canonical class, codim 1
    SecondChern,  // c(r), second Chern class of the surface, codim 2
    Diagonal,     // D(r,s), the diagonal between factors r < s, codim 2
};

struct Generator {
    GenKind kind;
    std::uint8_t a; // divisor basis index, 1-based (Divisor only)
    std::uint8_t r; // first factor index
    std::uint8_t s; // second factor index (Diagonal only)

    static Generator point(int r);
    static Generator divisor(int a, int r);
    static Generator canonical(int r);
    static Generator secondChern(int r);
    /// Stored with r < s; Diagonal(r,r) is rejected.
    static Generator diagonal(int r, int s);

    int codim() const;
    bool touches(int factor) const;
    std::string toString() const;

    std::uint32_t key() const {
        return (static_cast<std::uint32_t>(kind) << 24) |
               (static_cast<std::uint32_t>(r) << 16) |
               (static_cast<std::uint32_t>(s) << 8) | a;
    }
    friend bool operator==(const Generator& x, const Generator& y) {
        return x.key() == y.key();
    }
    friend std::strong_ordering operator<=>(const Generator& x, const Generator& y) {
        return x.key() <=> y.key();
    }
};

/// A monomial is a finite multiset of generators, kept sorted. The empty
/// monomial is the unit. Ordering of monomials is degree-lexicographic:
/// total codimension first, then lexicographic on the sorted generator lists.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<Generator> gens);

    const std::vector<Generator>& generators() const { return gens_; }
    bool isUnit() const { return gens_.empty(); }
    int codim() const;
    int maxFactorIndex() const;

    /// Multiset union (free product, no rewriting).
    Monomial times(const Monomial& other) const;

    std::string toString() const;

    friend bool operator==(const Monomial& x, const Monomial& y) {
        return x.gens_ == y.gens_;
    }
    friend std::strong_ordering operator<=>(const Monomial& x, const Monomial& y);

private:
    std::vector<Generator> gens_;
};

} // namespace tautring
