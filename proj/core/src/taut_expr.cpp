#include "tautring/taut_expr.hpp"

#include "tautring/rewrite.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace tautring {

TautExpr::TautExpr(int arity) : arity_(arity) {
    if (arity < 0)
        throw std::invalid_argument("negative arity");
}

TautExpr TautExpr::unit(int arity) {
    TautExpr e(arity);
    e.addTerm(Monomial(), rational(1));
    return e;
}

TautExpr TautExpr::term(int arity, Monomial m, Rational coeff) {
    TautExpr e(arity);
    if (m.maxFactorIndex() > arity)
        throw std::invalid_argument("monomial factor index exceeds arity");
    e.addTerm(std::move(m), std::move(coeff));
    return e;
}

TautExpr TautExpr::generator(int arity, Generator g) {
    return term(arity, Monomial({g}), rational(1));
}

TautExpr TautExpr::point(int arity, int r) { return generator(arity, Generator::point(r)); }
TautExpr TautExpr::divisor(int arity, int a, int r) { return generator(arity, Generator::divisor(a, r)); }
TautExpr TautExpr::canonical(int arity, int r) { return generator(arity, Generator::canonical(r)); }
TautExpr TautExpr::secondChern(int arity, int r) { return generator(arity, Generator::secondChern(r)); }
TautExpr TautExpr::diagonal(int arity, int r, int s) { return generator(arity, Generator::diagonal(r, s)); }

void TautExpr::addTerm(const Monomial& m, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(m, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

TautExpr& TautExpr::operator+=(const TautExpr& other) {
    if (arity_ != other.arity_)
        throw std::invalid_argument("arity mismatch in sum");
    for (const auto& [m, c] : other.terms_) addTerm(m, c);
    return *this;
}

TautExpr& TautExpr::operator-=(const TautExpr& other) {
    if (arity_ != other.arity_)
        throw std::invalid_argument("arity mismatch in difference");
    for (const auto& [m, c] : other.terms_) addTerm(m, -c);
    return *this;
}

TautExpr& TautExpr::operator*=(const Rational& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= scalar;
    return *this;
}

TautExpr TautExpr::operator-() const {
    TautExpr e(arity_);
    for (const auto& [m, c] : terms_) e.terms_.emplace(m, -c);
    return e;
}

TautExpr TautExpr::freeProduct(const TautExpr& other) const {
    if (arity_ != other.arity_)
        throw std::invalid_argument("arity mismatch in product");
    TautExpr e(arity_);
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : other.terms_)
            e.addTerm(m1.times(m2), c1 * c2);
    return e;
}

std::optional<int> TautExpr::homogeneousCodim() const {
    std::optional<int> codim;
    for (const auto& [m, c] : terms_) {
        if (!codim) codim = m.codim();
        else if (*codim != m.codim()) return std::nullopt;
    }
    return codim;
}

int TautExpr::maxFactorIndex() const {
    int mx = 0;
    for (const auto& [m, c] : terms_) mx = std::max(mx, m.maxFactorIndex());
    return mx;
}

std::string TautExpr::toString() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const bool neg = c < 0;
        const Rational mag = neg ? Rational(-c) : c;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        if (mag != 1 || m.isUnit()) {
            os << tautring::toString(mag);
            if (!m.isUnit()) os << "*";
        }
        if (!m.isUnit()) os << m.toString();
        first = false;
    }
    return os.str();
}

TautExpr multiply(const TautExpr& x, const TautExpr& y, const SurfaceModel& model,
                  RuleMask mask) {
    return normalize(x.freeProduct(y), model, mask);
}

namespace {

Generator relabel(const Generator& g, const std::vector<int>& indexMap) {
    switch (g.kind) {
    case GenKind::Point: return Generator::point(indexMap[g.r - 1]);
    case GenKind::Divisor: return Generator::divisor(g.a, indexMap[g.r - 1]);
    case GenKind::Canonical: return Generator::canonical(indexMap[g.r - 1]);
    case GenKind::SecondChern: return Generator::secondChern(indexMap[g.r - 1]);
    case GenKind::Diagonal:
        return Generator::diagonal(indexMap[g.r - 1], indexMap[g.s - 1]);
    }
    throw std::logic_error("unknown generator kind");
}

} // namespace

TautExpr pullback(const TautExpr& x, int targetArity, const std::vector<int>& indexMap) {
    if (static_cast<int>(indexMap.size()) != x.arity())
        throw std::invalid_argument("index map size must equal source arity");
    std::set<int> seen;
    for (int image : indexMap) {
        if (image < 1 || image > targetArity)
            throw std::invalid_argument("index map image out of range");
        if (!seen.insert(image).second)
            throw std::invalid_argument("index map is not injective");
    }
    TautExpr out(targetArity);
    for (const auto& [m, c] : x.terms()) {
        std::vector<Generator> gens;
        gens.reserve(m.generators().size());
        for (const auto& g : m.generators()) gens.push_back(relabel(g, indexMap));
        out.addTerm(Monomial(std::move(gens)), c);
    }
    return out;
}

TautExpr applyPermutation(const TautExpr& x, const std::vector<int>& perm) {
    return pullback(x, x.arity(), perm);
}

TautExpr symmetrize(const TautExpr& x, const std::vector<std::vector<int>>& group,
                    bool checkClosure) {
    if (group.empty())
        throw std::invalid_argument("empty group in symmetrize");
    if (checkClosure) {
        std::set<std::vector<int>> elems(group.begin(), group.end());
        for (const auto& g : group)
            for (const auto& h : group) {
                std::vector<int> gh(g.size());
                for (size_t i = 0; i < g.size(); ++i) gh[i] = g[h[i] - 1];
                if (!elems.count(gh))
                    throw std::invalid_argument("group is not closed under composition");
            }
    }
    TautExpr sum(x.arity());
    for (const auto& g : group) sum += applyPermutation(x, g);
    sum *= Rational(1, static_cast<long>(group.size()));
    return sum;
}

TautExpr pushforward(const TautExpr& x, int dropped, const SurfaceModel& model,
                     RuleMask mask) {
    const int arity = x.arity();
    if (dropped < 1 || dropped > arity)
        throw std::invalid_argument("dropped factor index out of range");

    // factors above the dropped one shift down by one
    std::vector<int> reindex(arity);
    for (int r = 1; r <= arity; ++r)
        reindex[r - 1] = (r < dropped) ? r : r - 1;

    const TautExpr y = normalize(x, model, mask);
    TautExpr out(arity - 1);

    for (const auto& [m, coeff] : y.terms()) {
        const auto& gens = m.generators();

        int diagPos = -1;
        for (int i = 0; i < static_cast<int>(gens.size()); ++i)
            if (gens[i].kind == GenKind::Diagonal && gens[i].touches(dropped)) {
                diagPos = i;
                break;
            }

        if (diagPos >= 0) {
            // projection formula along the diagonal: drop it and substitute
            // the partner index for the dropped one everywhere else
            const Generator& d = gens[diagPos];
            const int partner = (d.r == dropped) ? d.s : d.r;
            std::vector<Generator> rest;
            for (int i = 0; i < static_cast<int>(gens.size()); ++i) {
                if (i == diagPos) continue;
                Generator g = gens[i];
                if (g.kind == GenKind::Diagonal && g.touches(dropped)) {
                    const int other = (g.r == dropped) ? g.s : g.r;
                    // the duplicate of the dropped diagonal contracts to the
                    // surface's second Chern class (excess intersection)
                    g = (other == partner) ? Generator::secondChern(partner)
                                           : Generator::diagonal(partner, other);
                } else if (g.kind != GenKind::Diagonal && g.r == dropped) {
                    g.r = static_cast<std::uint8_t>(partner);
                }
                rest.push_back(relabel(g, reindex));
            }
            out += normalizeMonomial(Monomial(std::move(rest)), coeff, arity - 1, model, mask);
            continue;
        }

        // no diagonal at the dropped factor: integrate its decoration
        int decoCodim = 0;
        std::vector<Generator> deco;
        std::vector<Generator> rest;
        for (const auto& g : gens) {
            if (g.kind != GenKind::Diagonal && g.r == dropped) {
                decoCodim += g.codim();
                deco.push_back(g);
            } else {
                rest.push_back(relabel(g, reindex));
            }
        }
        if (decoCodim != 2) continue; // empty, codim 1, or dimension-trivial

        Rational degree;
        if (deco.size() == 1 && deco[0].kind == GenKind::Point)
            degree = rational(1);
        else if (deco.size() == 1 && deco[0].kind == GenKind::SecondChern)
            degree = rational(model.chiTop());
        else if (deco.size() == 2 && deco[0].kind == GenKind::Divisor &&
                 deco[1].kind == GenKind::Divisor)
            degree = model.gram(deco[0].a, deco[1].a);
        else if (deco.size() == 2 && deco[0].kind == GenKind::Canonical &&
                 deco[1].kind == GenKind::Canonical)
            degree = rational(model.canonicalSelfIntersection());
        else
            throw std::domain_error(
                "pushforward needs an intersection number the surface model does not carry: " +
                deco[0].toString() + (deco.size() > 1 ? "*" + deco[1].toString() : ""));

        out += normalizeMonomial(Monomial(std::move(rest)), coeff * degree, arity - 1,
                                 model, mask);
    }
    return out;
}

TautExpr smallDiagonal(int k, int arity, const std::vector<int>& indices,
                       const SurfaceModel& model) {
    if (k < 2)
        throw std::invalid_argument("small diagonal needs k >= 2");
    if (static_cast<int>(indices.size()) != k)
        throw std::invalid_argument("small diagonal: expected k factor indices");
    std::set<int> distinct(indices.begin(), indices.end());
    if (static_cast<int>(distinct.size()) != k)
        throw std::invalid_argument("small diagonal: repeated factor indices");
    for (int r : indices)
        if (r < 1 || r > arity)
            throw std::invalid_argument("small diagonal: factor index out of range");

    TautExpr prod = TautExpr::unit(arity);
    for (int j = 1; j < k; ++j)
        prod = prod.freeProduct(TautExpr::diagonal(arity, indices[0], indices[j]));
    return normalize(prod, model);
}

} // namespace tautring
