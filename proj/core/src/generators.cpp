#include "tautring/generators.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tautring {

namespace {
void checkFactor(int r, const char* what) {
    if (r < 1 || r > 255)
        throw std::invalid_argument(std::string(what) + ": factor index out of range");
}
} // namespace

Generator Generator::point(int r) {
    checkFactor(r, "o");
    return {GenKind::Point, 0, static_cast<std::uint8_t>(r), 0};
}

Generator Generator::divisor(int a, int r) {
    checkFactor(r, "h");
    if (a < 1 || a > 255)
        throw std::invalid_argument("h: divisor basis index out of range");
    return {GenKind::Divisor, static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(r), 0};
}

Generator Generator::canonical(int r) {
    checkFactor(r, "k");
    return {GenKind::Canonical, 0, static_cast<std::uint8_t>(r), 0};
}

Generator Generator::secondChern(int r) {
    checkFactor(r, "c");
    return {GenKind::SecondChern, 0, static_cast<std::uint8_t>(r), 0};
}

Generator Generator::diagonal(int r, int s) {
    checkFactor(r, "D");
    checkFactor(s, "D");
    if (r == s)
        throw std::invalid_argument("D(r,r) is ill-formed");
    if (r > s) std::swap(r, s);
    return {GenKind::Diagonal, 0, static_cast<std::uint8_t>(r), static_cast<std::uint8_t>(s)};
}

int Generator::codim() const {
    switch (kind) {
    case GenKind::Divisor:
    case GenKind::Canonical:
        return 1;
    case GenKind::Point:
    case GenKind::SecondChern:
    case GenKind::Diagonal:
        return 2;
    }
    return 0;
}

bool Generator::touches(int factor) const {
    return r == factor || (kind == GenKind::Diagonal && s == factor);
}

std::string Generator::toString() const {
    std::ostringstream os;
    switch (kind) {
    case GenKind::Point: os << "o(" << int(r) << ")"; break;
    case GenKind::Divisor: os << "h(" << int(a) << "," << int(r) << ")"; break;
    case GenKind::Canonical: os << "k(" << int(r) << ")"; break;
    case GenKind::SecondChern: os << "c(" << int(r) << ")"; break;
    case GenKind::Diagonal: os << "D(" << int(r) << "," << int(s) << ")"; break;
    }
    return os.str();
}

Monomial::Monomial(std::vector<Generator> gens) : gens_(std::move(gens)) {
    std::sort(gens_.begin(), gens_.end());
}

int Monomial::codim() const {
    int d = 0;
    for (const auto& g : gens_) d += g.codim();
    return d;
}

int Monomial::maxFactorIndex() const {
    int m = 0;
    for (const auto& g : gens_) {
        m = std::max(m, int(g.r));
        if (g.kind == GenKind::Diagonal) m = std::max(m, int(g.s));
    }
    return m;
}

Monomial Monomial::times(const Monomial& other) const {
    std::vector<Generator> merged;
    merged.reserve(gens_.size() + other.gens_.size());
    std::merge(gens_.begin(), gens_.end(), other.gens_.begin(), other.gens_.end(),
               std::back_inserter(merged));
    Monomial m;
    m.gens_ = std::move(merged);
    return m;
}

std::strong_ordering operator<=>(const Monomial& x, const Monomial& y) {
    if (auto c = x.codim() <=> y.codim(); c != 0) return c;
    return x.gens_ <=> y.gens_;
}

std::string Monomial::toString() const {
    if (gens_.empty()) return "1";
    std::ostringstream os;
    for (size_t i = 0; i < gens_.size(); ++i) {
        if (i) os << "*";
        os << gens_[i].toString();
    }
    return os.str();
}

} // namespace tautring
