#include "tautring/rewrite.hpp"

#include <algorithm>
#include <stdexcept>

namespace tautring {

namespace {

bool ruleActiveInMode(Rule rule, SurfaceMode mode) {
    const bool k3 = mode == SurfaceMode::K3;
    const bool ab = mode == SurfaceMode::Abelian;
    const bool gen = mode == SurfaceMode::GenericB1Zero;
    switch (rule) {
    case Rule::ChernToPoint: return true;
    case Rule::FactorTruncation: return true;
    case Rule::CanonicalVanishes: return k3 || ab;
    case Rule::DivisorPair: return k3;
    case Rule::CanonicalSquare: return gen;
    case Rule::DiagonalPoint: return k3 || gen;
    case Rule::DiagonalDivisor: return k3;
    case Rule::DiagonalCanonical: return gen;
    case Rule::DiagonalSquare: return k3 || gen;
    case Rule::DiagonalPair: return k3 || gen;
    }
    return false;
}

// Reduction strategy: per-factor rules first, then single-diagonal rules,
// then the shared-vertex expansion. The induced measure (shared diagonal
// pairs, diagonal count, per-factor excess) decreases lexicographically.
int priority(Rule rule) {
    switch (rule) {
    case Rule::FactorTruncation: return 0;
    case Rule::ChernToPoint: return 1;
    case Rule::CanonicalVanishes: return 2;
    case Rule::DivisorPair: return 3;
    case Rule::CanonicalSquare: return 3;
    case Rule::DiagonalPoint: return 4;
    case Rule::DiagonalDivisor: return 5;
    case Rule::DiagonalCanonical: return 5;
    case Rule::DiagonalSquare: return 6;
    case Rule::DiagonalPair: return 7;
    }
    return 8;
}

bool sharesOneVertex(const Generator& d1, const Generator& d2) {
    if (d1.r == d2.r && d1.s == d2.s) return false;
    return d1.r == d2.r || d1.r == d2.s || d1.s == d2.r || d1.s == d2.s;
}

std::vector<Generator> removeAt(const std::vector<Generator>& gens, int i, int j = -1) {
    std::vector<Generator> out;
    out.reserve(gens.size());
    for (int p = 0; p < static_cast<int>(gens.size()); ++p)
        if (p != i && p != j) out.push_back(gens[p]);
    return out;
}

Monomial withExtra(std::vector<Generator> gens, std::initializer_list<Generator> extra) {
    for (const auto& g : extra) gens.push_back(g);
    return Monomial(std::move(gens));
}

} // namespace

std::vector<RewriteStep> applicableSteps(const Monomial& m, const SurfaceModel& model,
                                         RuleMask mask) {
    const auto& gens = m.generators();
    const int n = static_cast<int>(gens.size());
    std::vector<RewriteStep> steps;

    auto active = [&](Rule rule) {
        return mask.has(rule) && ruleActiveInMode(rule, model.mode());
    };

    if (active(Rule::FactorTruncation)) {
        // decoration codim per factor; diagonals do not count
        for (int i = 0; i < n; ++i) {
            if (gens[i].kind == GenKind::Diagonal) continue;
            int codim = 0;
            int first = -1;
            for (int j = 0; j < n; ++j) {
                if (gens[j].kind == GenKind::Diagonal || gens[j].r != gens[i].r) continue;
                if (first == -1) first = j;
                codim += gens[j].codim();
            }
            if (first == i && codim > 2)
                steps.push_back({Rule::FactorTruncation, i, -1});
        }
    }
    for (int i = 0; i < n; ++i) {
        if (gens[i].kind == GenKind::SecondChern && active(Rule::ChernToPoint))
            steps.push_back({Rule::ChernToPoint, i, -1});
        if (gens[i].kind == GenKind::Canonical && active(Rule::CanonicalVanishes))
            steps.push_back({Rule::CanonicalVanishes, i, -1});
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const Generator &x = gens[i], &y = gens[j];
            if (x.kind == GenKind::Divisor && y.kind == GenKind::Divisor &&
                x.r == y.r && active(Rule::DivisorPair))
                steps.push_back({Rule::DivisorPair, i, j});
            if (x.kind == GenKind::Canonical && y.kind == GenKind::Canonical &&
                x.r == y.r && active(Rule::CanonicalSquare))
                steps.push_back({Rule::CanonicalSquare, i, j});
            if (x.kind == GenKind::Diagonal && y.kind == GenKind::Diagonal) {
                if (x.r == y.r && x.s == y.s && active(Rule::DiagonalSquare))
                    steps.push_back({Rule::DiagonalSquare, i, j});
                else if (sharesOneVertex(x, y) && active(Rule::DiagonalPair))
                    steps.push_back({Rule::DiagonalPair, i, j});
            }
        }
    }
    for (int i = 0; i < n; ++i) {
        if (gens[i].kind != GenKind::Diagonal) continue;
        for (int j = 0; j < n; ++j) {
            const Generator& g = gens[j];
            if (g.kind == GenKind::Diagonal || !gens[i].touches(g.r)) continue;
            if (g.kind == GenKind::Point && active(Rule::DiagonalPoint))
                steps.push_back({Rule::DiagonalPoint, i, j});
            if (g.kind == GenKind::Divisor && active(Rule::DiagonalDivisor))
                steps.push_back({Rule::DiagonalDivisor, i, j});
            if (g.kind == GenKind::Canonical && active(Rule::DiagonalCanonical))
                steps.push_back({Rule::DiagonalCanonical, i, j});
        }
    }
    return steps;
}

std::vector<std::pair<Monomial, Rational>> applyStep(const Monomial& m,
                                                     const Rational& coeff,
                                                     const RewriteStep& step,
                                                     const SurfaceModel& model) {
    const auto& gens = m.generators();
    std::vector<std::pair<Monomial, Rational>> out;
    auto emit = [&](Monomial mono, Rational c) {
        if (c != 0) out.emplace_back(std::move(mono), std::move(c));
    };

    switch (step.rule) {
    case Rule::FactorTruncation:
    case Rule::CanonicalVanishes:
        return {};

    case Rule::ChernToPoint: {
        const int r = gens[step.pos1].r;
        emit(withExtra(removeAt(gens, step.pos1), {Generator::point(r)}),
             coeff * rational(model.chiTop()));
        return out;
    }
    case Rule::DivisorPair: {
        const Generator &x = gens[step.pos1], &y = gens[step.pos2];
        emit(withExtra(removeAt(gens, step.pos1, step.pos2), {Generator::point(x.r)}),
             coeff * model.gram(x.a, y.a));
        return out;
    }
    case Rule::CanonicalSquare: {
        const int r = gens[step.pos1].r;
        emit(withExtra(removeAt(gens, step.pos1, step.pos2), {Generator::point(r)}),
             coeff * rational(model.canonicalSelfIntersection()));
        return out;
    }
    case Rule::DiagonalPoint: {
        const Generator& d = gens[step.pos1];
        const int other = (gens[step.pos2].r == d.r) ? d.s : d.r;
        emit(withExtra(removeAt(gens, step.pos1), {Generator::point(other)}), coeff);
        return out;
    }
    case Rule::DiagonalDivisor:
    case Rule::DiagonalCanonical: {
        const Generator& d = gens[step.pos1];
        const Generator& g = gens[step.pos2];
        const int r = g.r;
        const int other = (r == d.r) ? d.s : d.r;
        auto rest = removeAt(gens, step.pos1, step.pos2);
        auto moved = (g.kind == GenKind::Divisor) ? Generator::divisor(g.a, other)
                                                  : Generator::canonical(other);
        emit(withExtra(rest, {g, Generator::point(other)}), coeff);
        emit(withExtra(rest, {Generator::point(r), moved}), coeff);
        return out;
    }
    case Rule::DiagonalSquare: {
        const Generator& d = gens[step.pos1];
        emit(withExtra(removeAt(gens, step.pos1, step.pos2),
                       {Generator::point(d.r), Generator::point(d.s)}),
             coeff * rational(model.chiTop()));
        return out;
    }
    case Rule::DiagonalPair: {
        const Generator &d1 = gens[step.pos1], &d2 = gens[step.pos2];
        int tri[3];
        {
            int v = (d1.r == d2.r || d1.r == d2.s) ? d1.r : d1.s;
            int a = (d1.r == v) ? d1.s : d1.r;
            int b = (d2.r == v) ? d2.s : d2.r;
            tri[0] = v; tri[1] = a; tri[2] = b;
            std::sort(tri, tri + 3);
        }
        const int x = tri[0], y = tri[1], z = tri[2];
        auto rest = removeAt(gens, step.pos1, step.pos2);
        emit(withExtra(rest, {Generator::diagonal(x, y), Generator::point(z)}), coeff);
        emit(withExtra(rest, {Generator::diagonal(x, z), Generator::point(y)}), coeff);
        emit(withExtra(rest, {Generator::diagonal(y, z), Generator::point(x)}), coeff);
        emit(withExtra(rest, {Generator::point(x), Generator::point(y)}), -coeff);
        emit(withExtra(rest, {Generator::point(x), Generator::point(z)}), -coeff);
        emit(withExtra(rest, {Generator::point(y), Generator::point(z)}), -coeff);
        return out;
    }
    }
    throw std::logic_error("unhandled rewrite rule");
}

namespace {

std::optional<RewriteStep> pickStep(const std::vector<RewriteStep>& steps) {
    if (steps.empty()) return std::nullopt;
    const RewriteStep* best = &steps[0];
    for (const auto& s : steps) {
        if (priority(s.rule) < priority(best->rule) ||
            (priority(s.rule) == priority(best->rule) &&
             std::pair(s.pos1, s.pos2) < std::pair(best->pos1, best->pos2)))
            best = &s;
    }
    return *best;
}

constexpr long kStepLimit = 200'000'000L;

} // namespace

TautExpr normalizeMonomial(const Monomial& m, const Rational& coeff, int arity,
                           const SurfaceModel& model, RuleMask mask) {
    TautExpr result(arity);
    if (coeff == 0) return result;
    std::vector<std::pair<Monomial, Rational>> pending{{m, coeff}};
    long steps = 0;
    while (!pending.empty()) {
        auto [mono, c] = std::move(pending.back());
        pending.pop_back();
        auto step = pickStep(applicableSteps(mono, model, mask));
        if (!step) {
            result.addTerm(mono, c);
            continue;
        }
        if (++steps > kStepLimit)
            throw std::logic_error("rewriting step limit exceeded (termination bug?)");
        for (auto& [nm, nc] : applyStep(mono, c, *step, model))
            pending.emplace_back(std::move(nm), std::move(nc));
    }
    return result;
}

TautExpr normalize(const TautExpr& x, const SurfaceModel& model, RuleMask mask) {
    TautExpr result(x.arity());
    for (const auto& [mono, coeff] : x.terms())
        result += normalizeMonomial(mono, coeff, x.arity(), model, mask);
    return result;
}

TautExpr normalizeRandomOrder(const TautExpr& x, const SurfaceModel& model,
                              std::mt19937_64& rng, RuleMask mask) {
    TautExpr result(x.arity());
    for (const auto& [mono, coeff] : x.terms()) {
        std::vector<std::pair<Monomial, Rational>> pending{{mono, coeff}};
        long steps = 0;
        while (!pending.empty()) {
            const size_t pick = rng() % pending.size();
            std::swap(pending[pick], pending.back());
            auto [cur, c] = std::move(pending.back());
            pending.pop_back();
            auto steplist = applicableSteps(cur, model, mask);
            if (steplist.empty()) {
                result.addTerm(cur, c);
                continue;
            }
            if (++steps > kStepLimit)
                throw std::logic_error("rewriting step limit exceeded (termination bug?)");
            const RewriteStep& chosen = steplist[rng() % steplist.size()];
            for (auto& [nm, nc] : applyStep(cur, c, chosen, model))
                pending.emplace_back(std::move(nm), std::move(nc));
        }
    }
    return result;
}

} // namespace tautring
