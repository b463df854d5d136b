#include "tautring/correspondence.hpp"

#include <numeric>
#include <stdexcept>

namespace tautring {

Correspondence::Correspondence(int source, int target, TautExpr cls)
    : sourceArity(source), targetArity(target), cycleClass(std::move(cls)) {
    if (source < 0 || target < 0)
        throw std::invalid_argument("negative correspondence arity");
    if (cycleClass.arity() != source + target)
        throw std::invalid_argument("cycle class arity must be source + target");
}

Correspondence identityCorrespondence(int m) {
    TautExpr cls = TautExpr::unit(2 * m);
    for (int r = 1; r <= m; ++r)
        cls = cls.freeProduct(TautExpr::diagonal(2 * m, r, m + r));
    return Correspondence(m, m, std::move(cls));
}

Correspondence transpose(const Correspondence& c) {
    const int m = c.sourceArity, n = c.targetArity;
    std::vector<int> swap(m + n);
    for (int i = 1; i <= m; ++i) swap[i - 1] = n + i;
    for (int j = 1; j <= n; ++j) swap[m + j - 1] = j;
    return Correspondence(n, m, pullback(c.cycleClass, m + n, swap));
}

Correspondence tensorProduct(std::span<const Correspondence> cs) {
    if (cs.empty())
        return Correspondence(0, 0, TautExpr::unit(0));
    int totalSource = 0, totalTarget = 0;
    for (const auto& c : cs) {
        totalSource += c.sourceArity;
        totalTarget += c.targetArity;
    }
    const int arity = totalSource + totalTarget;
    TautExpr cls = TautExpr::unit(arity);
    int sourceOffset = 0, targetOffset = 0;
    for (const auto& c : cs) {
        std::vector<int> map(c.sourceArity + c.targetArity);
        for (int i = 1; i <= c.sourceArity; ++i) map[i - 1] = sourceOffset + i;
        for (int j = 1; j <= c.targetArity; ++j)
            map[c.sourceArity + j - 1] = totalSource + targetOffset + j;
        cls = cls.freeProduct(pullback(c.cycleClass, arity, map));
        sourceOffset += c.sourceArity;
        targetOffset += c.targetArity;
    }
    return Correspondence(totalSource, totalTarget, std::move(cls));
}

Correspondence tensorProduct(const Correspondence& a, const Correspondence& b) {
    const Correspondence cs[] = {a, b};
    return tensorProduct(std::span<const Correspondence>(cs));
}

Correspondence tensorProduct(const Correspondence& a, const Correspondence& b,
                             const Correspondence& c) {
    const Correspondence cs[] = {a, b, c};
    return tensorProduct(std::span<const Correspondence>(cs));
}

Correspondence compose(const Correspondence& g, const Correspondence& f,
                       const SurfaceModel& model) {
    if (f.targetArity != g.sourceArity)
        throw std::invalid_argument("composition arity mismatch");
    const int a = f.sourceArity, b = f.targetArity, c = g.targetArity;
    const int arity = a + b + c;

    std::vector<int> fmap(a + b);
    std::iota(fmap.begin(), fmap.end(), 1); // source 1..a, middle a+1..a+b
    std::vector<int> gmap(b + c);
    std::iota(gmap.begin(), gmap.end(), a + 1); // middle a+1..a+b, target a+b+1..

    TautExpr prod = multiply(pullback(f.cycleClass, arity, fmap),
                             pullback(g.cycleClass, arity, gmap), model);
    for (int d = a + b; d > a; --d)
        prod = pushforward(prod, d, model);
    return Correspondence(a, c, std::move(prod));
}

TautExpr actOnCycle(const Correspondence& c, const TautExpr& x, const SurfaceModel& model) {
    if (x.arity() != c.sourceArity)
        throw std::invalid_argument("cycle arity mismatch in correspondence action");
    const int arity = c.sourceArity + c.targetArity;
    std::vector<int> embed(c.sourceArity);
    std::iota(embed.begin(), embed.end(), 1);
    TautExpr prod = multiply(pullback(x, arity, embed), c.cycleClass, model);
    for (int d = c.sourceArity; d >= 1; --d)
        prod = pushforward(prod, d, model);
    return prod;
}

} // namespace tautring
