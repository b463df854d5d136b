#include "tautring/projectors.hpp"

#include "tautring/dsl.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace tautring {

const Correspondence& ProjectorFamily::projector(int i) const {
    auto it = projectors.find(i);
    if (it == projectors.end())
        throw std::out_of_range("no projector of index " + std::to_string(i));
    return it->second;
}

Correspondence ProjectorFamily::projectorOrZero(int i) const {
    auto it = projectors.find(i);
    if (it != projectors.end()) return it->second;
    return Correspondence(power, power, TautExpr::zero(2 * power));
}

std::vector<int> ProjectorFamily::indices() const {
    std::vector<int> out;
    out.reserve(projectors.size());
    for (const auto& [i, c] : projectors) out.push_back(i);
    return out;
}

ProjectorFamily surfaceProjectors(const SurfaceModel& model) {
    if (model.mode() != SurfaceMode::K3)
        throw std::invalid_argument(
            "surface projectors require K3 mode (abelian Chow-Kunneth projectors "
            "are outside the tautological calculus; use the cohomology model)");
    ProjectorFamily family;
    family.power = 1;
    const TautExpr o1 = TautExpr::point(2, 1);
    const TautExpr o2 = TautExpr::point(2, 2);
    const TautExpr diag = TautExpr::diagonal(2, 1, 2);
    family.projectors.emplace(0, Correspondence(1, 1, o1));
    family.projectors.emplace(2, Correspondence(1, 1, diag - o1 - o2));
    family.projectors.emplace(4, Correspondence(1, 1, o2));
    return family;
}

namespace {

void compositions(int total, int parts, std::vector<int>& current,
                  const std::function<void(const std::vector<int>&)>& visit) {
    if (parts == 0) {
        if (total == 0) visit(current);
        return;
    }
    for (int v = 0; v <= 4 && v <= total; v += 2) {
        current.push_back(v);
        compositions(total - v, parts - 1, current, visit);
        current.pop_back();
    }
}

} // namespace

ProjectorFamily powerProjectors(int m, const SurfaceModel& model) {
    if (m < 1)
        throw std::invalid_argument("power must be >= 1");
    const ProjectorFamily surface = surfaceProjectors(model);
    ProjectorFamily family;
    family.power = m;
    for (int i = 0; i <= 4 * m; i += 2) {
        TautExpr cls = TautExpr::zero(2 * m);
        std::vector<int> current;
        compositions(i, m, current, [&](const std::vector<int>& comp) {
            std::vector<Correspondence> parts;
            parts.reserve(m);
            for (int v : comp) parts.push_back(surface.projector(v));
            cls += tensorProduct(std::span<const Correspondence>(parts)).cycleClass;
        });
        family.projectors.emplace(i, Correspondence(m, m, normalize(cls, model)));
    }
    return family;
}

ProjectorFamily symmetricProjectors(const SetPartition& mu, const SurfaceModel& model) {
    ProjectorFamily family = powerProjectors(mu.length(), model);
    family.groupGenerators = mu.blockSymmetryGenerators();
    const int l = mu.length();
    for (const auto& gen : family.groupGenerators) {
        std::vector<int> doubled(2 * l);
        for (int r = 1; r <= l; ++r) {
            doubled[r - 1] = gen[r - 1];
            doubled[l + r - 1] = l + gen[r - 1];
        }
        for (const auto& [i, corr] : family.projectors) {
            if (applyPermutation(corr.cycleClass, doubled) != corr.cycleClass)
                throw std::logic_error("projector family is not block-symmetric");
        }
    }
    return family;
}

bool AxiomReport::allPass() const {
    for (const auto& c : checks)
        if (!c.skipped && !c.pass) return false;
    return true;
}

bool AxiomReport::anySkipped() const {
    for (const auto& c : checks)
        if (c.skipped) return true;
    return false;
}

namespace {

// Kunneth Betti numbers of S^m: coefficients of the m-th power of the
// model's Poincare polynomial.
std::vector<Rational> kunnethBetti(int m, const CohomModel& cohom) {
    std::vector<Rational> base(5);
    for (int d = 0; d <= 4; ++d) base[d] = rational(cohom.bettiNumber(d));
    std::vector<Rational> out{rational(1)};
    for (int p = 0; p < m; ++p) {
        std::vector<Rational> next(out.size() + 4);
        for (size_t i = 0; i < out.size(); ++i)
            for (int d = 0; d <= 4; ++d) next[i + d] += out[i] * base[d];
        out = std::move(next);
    }
    return out;
}

} // namespace

AxiomReport verifyCKAxioms(const ProjectorFamily& family, const SurfaceModel& model,
                           const CohomModel& cohom, double budgetSeconds) {
    AxiomReport report;
    report.power = family.power;
    const auto indices = family.indices();

    const auto start = std::chrono::steady_clock::now();
    auto overBudget = [&] {
        if (budgetSeconds < 0) return false;
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
        return elapsed.count() > budgetSeconds;
    };
    auto record = [&](std::string id, const std::function<std::pair<bool, std::string>()>& run) {
        if (overBudget()) {
            report.checks.push_back({std::move(id), false, true, "", 0});
            return;
        }
        const auto tick = std::chrono::steady_clock::now();
        auto [pass, witness] = run();
        const double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - tick)
                .count();
        report.checks.push_back({std::move(id), pass, false, pass ? "" : witness, ms});
    };

    for (int i : indices) {
        record("idempotence pi^" + std::to_string(i), [&] {
            const Correspondence& p = family.projector(i);
            const TautExpr diff = compose(p, p, model).cycleClass - p.cycleClass;
            return std::pair(diff.isZero(), printExpr(diff));
        });
        ++report.axiomInstanceCount;
    }
    for (size_t a = 0; a < indices.size(); ++a)
        for (size_t b = a + 1; b < indices.size(); ++b) {
            const int i = indices[a], j = indices[b];
            record("orthogonality pi^" + std::to_string(i) + " pi^" + std::to_string(j), [&] {
                const TautExpr left =
                    compose(family.projector(i), family.projector(j), model).cycleClass;
                const TautExpr right =
                    compose(family.projector(j), family.projector(i), model).cycleClass;
                const bool pass = left.isZero() && right.isZero();
                return std::pair(pass, printExpr(left.isZero() ? right : left));
            });
            ++report.axiomInstanceCount;
        }

    record("completeness sum pi^i = diagonal", [&] {
        TautExpr sum(2 * family.power);
        for (int i : indices) sum += family.projector(i).cycleClass;
        const TautExpr diff = sum - identityCorrespondence(family.power).cycleClass;
        return std::pair(diff.isZero(), printExpr(diff));
    });
    for (int i : indices) {
        if (i > 2 * family.power) break;
        record("self-duality t(pi^" + std::to_string(i) + ") = pi^" +
                   std::to_string(4 * family.power - i),
               [&] {
                   const TautExpr diff = transpose(family.projector(i)).cycleClass -
                                         family.projector(4 * family.power - i).cycleClass;
                   return std::pair(diff.isZero(), printExpr(diff));
               });
    }

    const auto betti = kunnethBetti(family.power, cohom);
    for (int i : indices) {
        record("graded trace pi^" + std::to_string(i), [&] {
            const auto traces = gradedTraces(family.projector(i), cohom);
            bool pass = true;
            for (size_t d = 0; d < traces.size(); ++d) {
                const Rational expected =
                    (static_cast<int>(d) == i && d < betti.size()) ? betti[d] : Rational(0);
                if (traces[d] != expected) pass = false;
            }
            std::ostringstream witness;
            if (!pass) {
                witness << "traces:";
                for (const auto& t : traces) witness << " " << toString(t);
            }
            return std::pair(pass, witness.str());
        });
    }
    return report;
}

TautExpr smallDiagonalOfPower(int m, const SurfaceModel& model) {
    TautExpr cls = TautExpr::unit(3 * m);
    for (int r = 1; r <= m; ++r)
        cls = cls.freeProduct(smallDiagonal(3, 3 * m, {r, m + r, 2 * m + r}, model));
    return normalize(cls, model);
}

namespace {

// (pi^a x pi^b x pi^c)_* of the small diagonal of the surface itself, the
// building block of the factorized paths
TautExpr surfaceTripleBlock(const ProjectorFamily& surface, int a, int b, int c,
                            const SurfaceModel& model) {
    const Correspondence t =
        tensorProduct(surface.projector(a), surface.projector(b), surface.projector(c));
    return actOnCycle(t, smallDiagonal(3, 3, {1, 2, 3}, model), model);
}

void tripleCompositions(int i, int j, int k, int m,
                        const std::function<void(const std::vector<std::array<int, 3>>&)>& visit) {
    std::vector<std::array<int, 3>> current;
    auto rec = [&](auto&& self, int ri, int rj, int rk, int parts) -> void {
        if (parts == 0) {
            if (ri == 0 && rj == 0 && rk == 0) visit(current);
            return;
        }
        for (int a = 0; a <= 4 && a <= ri; a += 2)
            for (int b = 0; b <= 4 && b <= rj; b += 2)
                for (int c = 0; c <= 4 && c <= rk; c += 2) {
                    current.push_back({a, b, c});
                    self(self, ri - a, rj - b, rk - c, parts - 1);
                    current.pop_back();
                }
    };
    rec(rec, i, j, k, m);
}

} // namespace

TripleCheck checkTriple(const ProjectorFamily& family, int i, int j, int k,
                        const SurfaceModel& model, const CohomModel& cohom,
                        bool factorized) {
    const int m = family.power;
    TautExpr z(3 * m);
    if (!factorized) {
        const Correspondence t = tensorProduct(family.projectorOrZero(i),
                                               family.projectorOrZero(j),
                                               family.projectorOrZero(k));
        z = actOnCycle(t, smallDiagonalOfPower(m, model), model);
    } else {
        // all operations factor over the disjoint factor triples (r, m+r, 2m+r)
        const ProjectorFamily surface = surfaceProjectors(model);
        std::map<std::array<int, 3>, TautExpr> blocks;
        for (int a = 0; a <= 4; a += 2)
            for (int b = 0; b <= 4; b += 2)
                for (int c = 0; c <= 4; c += 2)
                    blocks.emplace(std::array<int, 3>{a, b, c},
                                   surfaceTripleBlock(surface, a, b, c, model));
        tripleCompositions(i, j, k, m, [&](const std::vector<std::array<int, 3>>& comp) {
            TautExpr term = TautExpr::unit(3 * m);
            for (int r = 1; r <= m; ++r) {
                const TautExpr& block = blocks.at(comp[r - 1]);
                if (block.isZero()) {
                    term = TautExpr::zero(3 * m);
                    break;
                }
                term = term.freeProduct(pullback(block, 3 * m, {r, m + r, 2 * m + r}));
            }
            z += term;
        });
    }

    TripleCheck check;
    check.m = m;
    check.i = i;
    check.j = j;
    check.k = k;
    check.required = (i + j + k != 8 * m);
    check.chowVanishes = z.isZero();
    check.cohomVanishes = isCohomologicallyTrivial(z, cohom);
    if (!check.chowVanishes) check.witness = printExpr(z);
    return check;
}

bool MultiplicativityReport::pass() const {
    for (const auto& c : checks) {
        if (c.skipped) continue;
        if (c.required && !c.chowVanishes) return false;
        if (c.cohomVanishes && !c.chowVanishes) return false;
    }
    return true;
}

bool MultiplicativityReport::anySkipped() const {
    for (const auto& c : checks)
        if (c.skipped) return true;
    return false;
}

MultiplicativityReport checkMultiplicativity(const ProjectorFamily& family,
                                             const SurfaceModel& model,
                                             const CohomModel& cohom,
                                             const MultOptions& options) {
    const int m = family.power;
    MultiplicativityReport report;
    report.m = m;
    report.symmetryReduced = options.symmetryReduce;

    const auto start = std::chrono::steady_clock::now();
    auto overBudget = [&] {
        if (options.budgetSeconds < 0) return false;
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
        return elapsed.count() > options.budgetSeconds;
    };

    std::map<std::array<int, 3>, TripleCheck> results;
    for (int i = 0; i <= 4 * m; i += 2)
        for (int j = 0; j <= 4 * m; j += 2)
            for (int k = 0; k <= 4 * m; k += 2) {
                if (options.symmetryReduce && !(i <= j && j <= k)) continue;
                TripleCheck check;
                if (overBudget()) {
                    check.m = m;
                    check.i = i;
                    check.j = j;
                    check.k = k;
                    check.required = (i + j + k != 8 * m);
                    check.chowVanishes = false;
                    check.cohomVanishes = false;
                    check.skipped = true;
                } else {
                    const auto tick = std::chrono::steady_clock::now();
                    check = checkTriple(family, i, j, k, model, cohom, options.factorized);
                    check.millis = std::chrono::duration<double, std::milli>(
                                       std::chrono::steady_clock::now() - tick)
                                       .count();
                }
                results.emplace(std::array<int, 3>{i, j, k}, check);
            }

    for (int i = 0; i <= 4 * m; i += 2)
        for (int j = 0; j <= 4 * m; j += 2)
            for (int k = 0; k <= 4 * m; k += 2) {
                auto it = results.find({i, j, k});
                if (it != results.end()) {
                    report.checks.push_back(it->second);
                    continue;
                }
                // fill from the sorted representative: the small diagonal is
                // symmetric, so the flags transfer
                std::array<int, 3> rep{i, j, k};
                std::sort(rep.begin(), rep.end());
                TripleCheck check = results.at(rep);
                check.i = i;
                check.j = j;
                check.k = k;
                report.checks.push_back(check);
            }
    return report;
}

KunnethTensor projectedSmallDiagonalTensor(int m, int i, int j, int k,
                                           const CohomModel& cohom) {
    // evaluated raw surface projector classes; no ring rewriting anywhere
    const TautExpr o1 = TautExpr::point(2, 1);
    const TautExpr o2 = TautExpr::point(2, 2);
    const TautExpr d12 = TautExpr::diagonal(2, 1, 2);
    std::map<int, KunnethTensor> surfaceProjector;
    surfaceProjector.emplace(0, evaluate(o1, cohom));
    surfaceProjector.emplace(2, evaluate(d12 - o1 - o2, cohom));
    surfaceProjector.emplace(4, evaluate(o2, cohom));

    const TautExpr delta3raw =
        TautExpr::diagonal(3, 1, 2).freeProduct(TautExpr::diagonal(3, 1, 3));
    const KunnethTensor delta3 = evaluate(delta3raw, cohom);

    std::map<std::array<int, 3>, KunnethTensor> blocks;
    for (int a = 0; a <= 4; a += 2)
        for (int b = 0; b <= 4; b += 2)
            for (int c = 0; c <= 4; c += 2) {
                KunnethTensor corr = tensorPullback(surfaceProjector.at(a), 6, {1, 4}, cohom);
                corr = tensorMultiply(corr, tensorPullback(surfaceProjector.at(b), 6, {2, 5}, cohom), cohom);
                corr = tensorMultiply(corr, tensorPullback(surfaceProjector.at(c), 6, {3, 6}, cohom), cohom);
                blocks.emplace(std::array<int, 3>{a, b, c},
                               actOnTensor(corr, 3, 3, delta3, cohom));
            }

    KunnethTensor result(3 * m);
    tripleCompositions(i, j, k, m, [&](const std::vector<std::array<int, 3>>& comp) {
        KunnethTensor term = KunnethTensor::unit(3 * m, cohom);
        for (int r = 1; r <= m; ++r) {
            const KunnethTensor& block = blocks.at(comp[r - 1]);
            if (block.isZero()) {
                term = KunnethTensor(3 * m);
                break;
            }
            term = tensorMultiply(term, tensorPullback(block, 3 * m, {r, m + r, 2 * m + r}, cohom),
                                  cohom);
        }
        result += term;
    });
    return result;
}

std::map<int, TautExpr> bigrading(const TautExpr& x, const ProjectorFamily& family,
                                  const SurfaceModel& model) {
    const auto codim = x.homogeneousCodim();
    if (!codim && !x.isZero())
        throw std::invalid_argument("bigrading needs a homogeneous class");
    std::map<int, TautExpr> components;
    if (x.isZero()) return components;
    const int p = *codim;
    for (int s = 2 * p - 4 * family.power; s <= 2 * p; ++s) {
        const Correspondence proj = family.projectorOrZero(2 * p - s);
        if (proj.cycleClass.isZero()) continue;
        TautExpr piece = actOnCycle(proj, x, model);
        if (!piece.isZero()) components.emplace(s, std::move(piece));
    }
    return components;
}

} // namespace tautring
