#include "tautring/cohomology.hpp"

#include "tautring/correspondence.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

// Sign conventions (all graded signs in the engine live in this file):
//   * product of tensors: (a_1 x..x a_N)(b_1 x..x b_N) picks up
//     (-1)^{sum over j<i of deg b_j * deg a_i}; within a slot the product
//     table supplies its own signs.
//   * relabeling slots along an injective map: sign of the induced
//     permutation restricted to odd-degree entries.
//   * integrating a slot: the entry must be the top class, which has even
//     degree, so no sign.

namespace tautring {

namespace {

// Gaussian inverse over the rationals; throws if singular.
std::vector<std::vector<Rational>> invertMatrix(std::vector<std::vector<Rational>> m) {
    const size_t n = m.size();
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
    for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0) ++pivot;
        if (pivot == n) throw std::invalid_argument("pairing matrix is degenerate");
        std::swap(m[pivot], m[col]);
        std::swap(inv[pivot], inv[col]);
        const Rational p = m[col][col];
        for (size_t j = 0; j < n; ++j) {
            m[col][j] /= p;
            inv[col][j] /= p;
        }
        for (size_t row = 0; row < n; ++row) {
            if (row == col || m[row][col] == 0) continue;
            const Rational f = m[row][col];
            for (size_t j = 0; j < n; ++j) {
                m[row][j] -= f * m[col][j];
                inv[row][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

} // namespace

void CohomModel::finishTables() {
    const int n = basisSize();
    pairing_.assign(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (const auto& [k, c] : product_[i][j])
                if (k == top_) pairing_[i][j] = c;
    pairingInv_ = invertMatrix(pairing_);
}

CohomModel CohomModel::k3(const SurfaceModel& surface) {
    if (surface.mode() != SurfaceMode::K3)
        throw std::invalid_argument("K3 cohomology model needs a K3 surface model");
    const int rank = 22;
    if (surface.nsRank() > rank)
        throw std::invalid_argument("K3 divisor rank exceeds b_2 = 22");

    CohomModel m;
    m.mode_ = CohomMode::K3;
    m.degree_.assign(rank + 2, 2);
    m.degree_.front() = 0;
    m.degree_.back() = 4;
    m.unit_ = 0;
    m.top_ = rank + 1;

    // degree-2 cup form: configured Gram block, identity padding
    std::vector<std::vector<Rational>> q(rank, std::vector<Rational>(rank));
    for (int a = 0; a < rank; ++a) q[a][a] = 1;
    for (int a = 1; a <= surface.nsRank(); ++a)
        for (int b = 1; b <= surface.nsRank(); ++b)
            q[a - 1][b - 1] = surface.gram(a, b);

    const int n = rank + 2;
    m.product_.assign(n, std::vector<std::vector<std::pair<int, Rational>>>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == m.unit_) {
                m.product_[i][j] = {{j, rational(1)}};
            } else if (j == m.unit_) {
                m.product_[i][j] = {{i, rational(1)}};
            } else if (m.degree_[i] == 2 && m.degree_[j] == 2) {
                const Rational& v = q[i - 1][j - 1];
                if (v != 0) m.product_[i][j] = {{m.top_, v}};
            }
            // anything of total degree > 4 is zero
        }

    for (int a = 1; a <= surface.nsRank(); ++a)
        m.divisorImage_.push_back({{a, rational(1)}});

    m.finishTables();
    return m;
}

namespace {

// exterior-monomial product: sign of merging the index sets, 0 on overlap
int mergeSign(unsigned i, unsigned j) {
    if (i & j) return 0;
    int inversions = 0;
    for (int bi = 0; bi < 4; ++bi)
        if (i & (1u << bi))
            inversions += std::popcount(j & ((1u << bi) - 1));
    return (inversions % 2) ? -1 : 1;
}

} // namespace

CohomModel CohomModel::abelian(const SurfaceModel& surface) {
    if (surface.mode() != SurfaceMode::Abelian)
        throw std::invalid_argument("abelian cohomology model needs an abelian surface model");

    CohomModel m;
    m.mode_ = CohomMode::Abelian;
    const int n = 16; // subsets of {1,2,3,4} as bitmasks
    m.degree_.resize(n);
    for (int i = 0; i < n; ++i) m.degree_[i] = std::popcount(static_cast<unsigned>(i));
    m.unit_ = 0;
    m.top_ = 15;

    m.product_.assign(n, std::vector<std::vector<std::pair<int, Rational>>>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const int sign = mergeSign(static_cast<unsigned>(i), static_cast<unsigned>(j));
            if (sign != 0) m.product_[i][j] = {{i | j, rational(sign)}};
        }

    // orthogonal frame of H^2 carrying the divisor classes
    using Img = std::vector<std::pair<int, Rational>>;
    const Img frame[6] = {
        {{3, rational(1)}, {12, rational(1)}},   // e12 + e34
        {{5, rational(1)}, {10, rational(-1)}},  // e13 - e24
        {{9, rational(1)}, {6, rational(1)}},    // e14 + e23
        {{3, rational(1)}, {12, rational(-1)}},  // e12 - e34
        {{5, rational(1)}, {10, rational(1)}},   // e13 + e24
        {{9, rational(1)}, {6, rational(-1)}},   // e14 - e23
    };
    if (surface.nsRank() > 6)
        throw std::invalid_argument("abelian divisor rank exceeds b_2 = 6");
    m.finishTables();

    for (int a = 1; a <= surface.nsRank(); ++a)
        m.divisorImage_.push_back(frame[a - 1]);
    // the configured Gram matrix must be realized by the frame
    for (int a = 1; a <= surface.nsRank(); ++a)
        for (int b = 1; b <= surface.nsRank(); ++b) {
            Rational got;
            for (const auto& [i, ci] : m.divisorImage_[a - 1])
                for (const auto& [j, cj] : m.divisorImage_[b - 1])
                    got += ci * cj * m.pairing_[i][j];
            if (got != surface.gram(a, b))
                throw std::invalid_argument(
                    "abelian gram matrix is not realized by the fixed H^2 frame "
                    "(frame Gram is diag(2,2,2,-2,-2,-2))");
        }
    return m;
}

CohomModel CohomModel::forSurface(const SurfaceModel& surface) {
    switch (surface.mode()) {
    case SurfaceMode::K3: return k3(surface);
    case SurfaceMode::Abelian: return abelian(surface);
    case SurfaceMode::GenericB1Zero:
        throw std::invalid_argument("no cohomology model for the generic surface mode");
    }
    throw std::logic_error("unknown surface mode");
}

int CohomModel::bettiNumber(int d) const {
    int b = 0;
    for (int deg : degree_)
        if (deg == d) ++b;
    return b;
}

long CohomModel::eulerCharacteristic() const {
    long chi = 0;
    for (int deg : degree_) chi += (deg % 2) ? -1 : 1;
    return chi;
}

const std::vector<std::pair<int, Rational>>& CohomModel::divisorImage(int a) const {
    if (a < 1 || a > nsRank())
        throw std::out_of_range("divisor index out of range");
    return divisorImage_[a - 1];
}

std::string CohomModel::basisLabel(int i) const {
    if (mode_ == CohomMode::K3) {
        if (i == unit_) return "1";
        if (i == top_) return "pt";
        return "e" + std::to_string(i);
    }
    if (i == 0) return "1";
    std::string s = "e";
    for (int b = 0; b < 4; ++b)
        if (i & (1 << b)) s += std::to_string(b + 1);
    return s;
}

KunnethTensor KunnethTensor::unit(int arity, const CohomModel& model) {
    KunnethTensor t(arity);
    t.addComponent(Tuple(arity, static_cast<std::uint8_t>(model.unitIndex())), rational(1));
    return t;
}

void KunnethTensor::addComponent(Tuple t, const Rational& coeff) {
    if (coeff == 0) return;
    if (static_cast<int>(t.size()) != arity_)
        throw std::invalid_argument("component tuple length must equal tensor arity");
    auto [it, inserted] = components_.emplace(std::move(t), coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) components_.erase(it);
    }
}

KunnethTensor& KunnethTensor::operator+=(const KunnethTensor& other) {
    if (arity_ != other.arity_)
        throw std::invalid_argument("tensor arity mismatch");
    for (const auto& [t, c] : other.components_) addComponent(t, c);
    return *this;
}

KunnethTensor& KunnethTensor::operator-=(const KunnethTensor& other) {
    if (arity_ != other.arity_)
        throw std::invalid_argument("tensor arity mismatch");
    for (const auto& [t, c] : other.components_) addComponent(t, -c);
    return *this;
}

KunnethTensor& KunnethTensor::operator*=(const Rational& scalar) {
    if (scalar == 0) {
        components_.clear();
        return *this;
    }
    for (auto& [t, c] : components_) c *= scalar;
    return *this;
}

int KunnethTensor::totalDegree(const Tuple& t, const CohomModel& model) const {
    int d = 0;
    for (auto i : t) d += model.degree(i);
    return d;
}

std::string KunnethTensor::toString(const CohomModel& model) const {
    if (components_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [t, c] : components_) {
        if (!first) os << " + ";
        os << "(";
        for (size_t i = 0; i < t.size(); ++i) {
            if (i) os << ",";
            os << model.basisLabel(t[i]);
        }
        os << "): " << tautring::toString(c);
        first = false;
    }
    return os.str();
}

KunnethTensor tensorMultiply(const KunnethTensor& x, const KunnethTensor& y,
                             const CohomModel& model) {
    if (x.arity() != y.arity())
        throw std::invalid_argument("tensor arity mismatch in product");
    const int n = x.arity();
    KunnethTensor out(n);
    for (const auto& [ta, ca] : x.components()) {
        for (const auto& [tb, cb] : y.components()) {
            // Koszul sign for interleaving the two pure tensors
            int parity = 0;
            int oddBBelow = 0;
            for (int i = 0; i < n; ++i) {
                if (model.degree(ta[i]) % 2) parity ^= (oddBBelow & 1);
                if (model.degree(tb[i]) % 2) ++oddBBelow;
            }
            Rational base = ca * cb;
            if (parity) base = -base;

            // slotwise cup products, expanded breadth-first
            std::vector<std::pair<KunnethTensor::Tuple, Rational>> partial{
                {KunnethTensor::Tuple{}, base}};
            for (int i = 0; i < n && !partial.empty(); ++i) {
                const auto& table = model.product(ta[i], tb[i]);
                std::vector<std::pair<KunnethTensor::Tuple, Rational>> next;
                next.reserve(partial.size() * table.size());
                for (const auto& [prefix, c] : partial)
                    for (const auto& [k, pc] : table) {
                        auto t = prefix;
                        t.push_back(static_cast<std::uint8_t>(k));
                        next.emplace_back(std::move(t), c * pc);
                    }
                partial = std::move(next);
            }
            for (auto& [t, c] : partial) out.addComponent(std::move(t), c);
        }
    }
    return out;
}

KunnethTensor tensorPullback(const KunnethTensor& x, int targetArity,
                             const std::vector<int>& indexMap, const CohomModel& model) {
    if (static_cast<int>(indexMap.size()) != x.arity())
        throw std::invalid_argument("index map size must equal tensor arity");
    KunnethTensor out(targetArity);
    for (const auto& [t, c] : x.components()) {
        KunnethTensor::Tuple nt(targetArity, static_cast<std::uint8_t>(model.unitIndex()));
        int parity = 0;
        for (size_t i = 0; i < t.size(); ++i) {
            if (indexMap[i] < 1 || indexMap[i] > targetArity)
                throw std::invalid_argument("index map image out of range");
            for (size_t j = 0; j < i; ++j)
                if (indexMap[j] > indexMap[i] && model.degree(t[i]) % 2 &&
                    model.degree(t[j]) % 2)
                    parity ^= 1;
            nt[indexMap[i] - 1] = t[i];
        }
        out.addComponent(std::move(nt), parity ? Rational(-c) : c);
    }
    return out;
}

KunnethTensor tensorPermute(const KunnethTensor& x, const std::vector<int>& perm,
                            const CohomModel& model) {
    return tensorPullback(x, x.arity(), perm, model);
}

KunnethTensor tensorPushforward(const KunnethTensor& x, int dropped,
                                const CohomModel& model) {
    if (dropped < 1 || dropped > x.arity())
        throw std::invalid_argument("dropped factor index out of range");
    KunnethTensor out(x.arity() - 1);
    for (const auto& [t, c] : x.components()) {
        if (t[dropped - 1] != model.topIndex()) continue;
        KunnethTensor::Tuple nt;
        nt.reserve(t.size() - 1);
        for (size_t i = 0; i < t.size(); ++i)
            if (static_cast<int>(i) != dropped - 1) nt.push_back(t[i]);
        out.addComponent(std::move(nt), c);
    }
    return out;
}

Rational tensorIntegral(const KunnethTensor& x, const CohomModel& model) {
    KunnethTensor::Tuple top(x.arity(), static_cast<std::uint8_t>(model.topIndex()));
    auto it = x.components().find(top);
    return it == x.components().end() ? Rational(0) : it->second;
}

KunnethTensor diagonalClass(const CohomModel& model) {
    KunnethTensor t(2);
    const int n = model.basisSize();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Rational& c = model.pairingInverse(i, j);
            if (c != 0)
                t.addComponent({static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j)}, c);
        }
    return t;
}

namespace {

KunnethTensor generatorTensor(const Generator& g, int arity, const CohomModel& model) {
    KunnethTensor t(arity);
    const auto unitTuple = [&] {
        return KunnethTensor::Tuple(arity, static_cast<std::uint8_t>(model.unitIndex()));
    };
    switch (g.kind) {
    case GenKind::Point: {
        auto tuple = unitTuple();
        tuple[g.r - 1] = static_cast<std::uint8_t>(model.topIndex());
        t.addComponent(std::move(tuple), rational(1));
        return t;
    }
    case GenKind::SecondChern: {
        auto tuple = unitTuple();
        tuple[g.r - 1] = static_cast<std::uint8_t>(model.topIndex());
        const long chi = model.eulerCharacteristic();
        t.addComponent(std::move(tuple), rational(chi));
        return t;
    }
    case GenKind::Canonical:
        return t; // K = 0 in both cohomology models
    case GenKind::Divisor: {
        for (const auto& [i, c] : model.divisorImage(g.a)) {
            auto tuple = unitTuple();
            tuple[g.r - 1] = static_cast<std::uint8_t>(i);
            t.addComponent(std::move(tuple), c);
        }
        return t;
    }
    case GenKind::Diagonal:
        return tensorPullback(diagonalClass(model), arity, {g.r, g.s}, model);
    }
    throw std::logic_error("unknown generator kind");
}

} // namespace

KunnethTensor evaluate(const TautExpr& x, const CohomModel& model) {
    KunnethTensor out(x.arity());
    for (const auto& [m, coeff] : x.terms()) {
        KunnethTensor acc = KunnethTensor::unit(x.arity(), model);
        acc *= coeff;
        for (const auto& g : m.generators()) {
            if (acc.isZero()) break;
            acc = tensorMultiply(acc, generatorTensor(g, x.arity(), model), model);
        }
        out += acc;
    }
    return out;
}

bool isCohomologicallyTrivial(const TautExpr& x, const CohomModel& model) {
    return evaluate(x, model).isZero();
}

Rational integral(const TautExpr& x, const CohomModel& model) {
    if (x.isZero()) return 0;
    const auto codim = x.homogeneousCodim();
    if (!codim || *codim != 2 * x.arity())
        throw std::invalid_argument("integral needs a homogeneous class of top codimension");
    return tensorIntegral(evaluate(x, model), model);
}

KunnethTensor actOnTensor(const KunnethTensor& corr, int sourceArity, int targetArity,
                          const KunnethTensor& x, const CohomModel& model) {
    if (x.arity() != sourceArity)
        throw std::invalid_argument("tensor arity mismatch in correspondence action");
    if (corr.arity() != sourceArity + targetArity)
        throw std::invalid_argument("correspondence tensor arity mismatch");
    std::vector<int> embed(sourceArity);
    for (int i = 0; i < sourceArity; ++i) embed[i] = i + 1;
    KunnethTensor big = tensorMultiply(tensorPullback(x, sourceArity + targetArity, embed, model),
                                       corr, model);
    for (int d = sourceArity; d >= 1; --d) big = tensorPushforward(big, d, model);
    return big;
}

std::vector<Rational> gradedTraces(const Correspondence& c, const CohomModel& model) {
    if (c.sourceArity != c.targetArity)
        throw std::invalid_argument("graded traces need a self-correspondence");
    const int n = c.sourceArity;
    const KunnethTensor t = evaluate(c.cycleClass, model);
    std::vector<Rational> traces(4 * n + 1);
    for (const auto& [tuple, coeff] : t.components()) {
        // component u (source block) x v (target block) contributes the
        // diagonal matrix entry at basis tuple v, with the Koszul sign of
        // pull(v) * T: sum over j < i of deg u_j * deg v_i
        int parity = 0;
        int oddUBelow = 0;
        for (int i = 0; i < n; ++i) {
            if (model.degree(tuple[n + i]) % 2) parity ^= (oddUBelow & 1);
            if (model.degree(tuple[i]) % 2) ++oddUBelow;
        }
        Rational contrib = coeff;
        if (parity) contrib = -contrib;
        for (int i = 0; i < n && contrib != 0; ++i)
            contrib *= model.pairing(tuple[n + i], tuple[i]);
        if (contrib == 0) continue;
        int degV = 0;
        for (int i = 0; i < n; ++i) degV += model.degree(tuple[n + i]);
        traces[degV] += contrib;
    }
    return traces;
}

Rational traceOfCorrespondence(const Correspondence& c, const CohomModel& model) {
    const auto traces = gradedTraces(c, model);
    Rational sum;
    for (size_t d = 0; d < traces.size(); ++d)
        sum += (d % 2) ? Rational(-traces[d]) : traces[d];
    return sum;
}

MultiplicationEndo::MultiplicationEndo(long n, const CohomModel& model) : n_(n) {
    if (model.mode() != CohomMode::Abelian)
        throw std::invalid_argument("multiplication-by-n acts on the abelian model only");
}

Rational MultiplicationEndo::scaleForDegree(int degree) const {
    Rational s = 1;
    for (int i = 0; i < degree; ++i) s *= rational(n_);
    return s;
}

KunnethTensor MultiplicationEndo::apply(const KunnethTensor& x, const CohomModel& model) const {
    KunnethTensor out(x.arity());
    for (const auto& [t, c] : x.components())
        out.addComponent(t, c * scaleForDegree(x.totalDegree(t, model)));
    return out;
}

MultiplicationEndo multiplicationByN(long n, const CohomModel& model) {
    return MultiplicationEndo(n, model);
}

} // namespace tautring
