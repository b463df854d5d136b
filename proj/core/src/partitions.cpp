#include "tautring/partitions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace tautring {

SetPartition::SetPartition(std::vector<std::vector<int>> blocks) : blocks_(std::move(blocks)) {
    std::set<int> seen;
    int maxElem = 0;
    for (auto& block : blocks_) {
        if (block.empty())
            throw std::invalid_argument("set partition blocks must be non-empty");
        std::sort(block.begin(), block.end());
        for (int x : block) {
            if (x < 1 || !seen.insert(x).second)
                throw std::invalid_argument("set partition blocks must be disjoint subsets of 1..n");
            maxElem = std::max(maxElem, x);
        }
    }
    n_ = maxElem;
    if (static_cast<int>(seen.size()) != n_)
        throw std::invalid_argument("set partition blocks must cover 1..n");
    std::sort(blocks_.begin(), blocks_.end());
}

SetPartition SetPartition::fromShape(const std::vector<int>& shape) {
    std::vector<std::vector<int>> blocks;
    int next = 1;
    for (int size : shape) {
        if (size < 1)
            throw std::invalid_argument("shape parts must be positive");
        std::vector<int> block(size);
        std::iota(block.begin(), block.end(), next);
        next += size;
        blocks.push_back(std::move(block));
    }
    return SetPartition(std::move(blocks));
}

std::vector<int> SetPartition::shape() const {
    std::vector<int> sizes;
    sizes.reserve(blocks_.size());
    for (const auto& b : blocks_) sizes.push_back(static_cast<int>(b.size()));
    std::sort(sizes.rbegin(), sizes.rend());
    return sizes;
}

namespace {

// slot positions grouped by block size
std::map<int, std::vector<int>> slotsBySize(const std::vector<std::vector<int>>& blocks) {
    std::map<int, std::vector<int>> groups;
    for (size_t i = 0; i < blocks.size(); ++i)
        groups[static_cast<int>(blocks[i].size())].push_back(static_cast<int>(i) + 1);
    return groups;
}

} // namespace

std::vector<std::vector<int>> SetPartition::blockSymmetryGenerators() const {
    const int l = length();
    std::vector<std::vector<int>> gens;
    for (const auto& [size, slots] : slotsBySize(blocks_)) {
        for (size_t i = 0; i + 1 < slots.size(); ++i) {
            std::vector<int> perm(l);
            std::iota(perm.begin(), perm.end(), 1);
            std::swap(perm[slots[i] - 1], perm[slots[i + 1] - 1]);
            gens.push_back(std::move(perm));
        }
    }
    return gens;
}

std::vector<std::vector<int>> SetPartition::blockSymmetryGroup() const {
    const int l = length();
    std::vector<std::vector<int>> group;
    group.push_back(std::vector<int>(l));
    std::iota(group[0].begin(), group[0].end(), 1);
    for (const auto& [size, slots] : slotsBySize(blocks_)) {
        std::vector<int> arrangement(slots);
        std::sort(arrangement.begin(), arrangement.end());
        std::vector<std::vector<int>> extended;
        do {
            for (const auto& base : group) {
                std::vector<int> perm = base;
                for (size_t i = 0; i < slots.size(); ++i)
                    perm[slots[i] - 1] = arrangement[i];
                extended.push_back(std::move(perm));
            }
        } while (std::next_permutation(arrangement.begin(), arrangement.end()));
        group = std::move(extended);
    }
    return group;
}

std::string SetPartition::toString() const {
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < blocks_.size(); ++i) {
        if (i) os << ", ";
        os << "{";
        for (size_t j = 0; j < blocks_[i].size(); ++j) {
            if (j) os << ",";
            os << blocks_[i][j];
        }
        os << "}";
    }
    os << "}";
    return os.str();
}

std::vector<std::vector<int>> integerPartitions(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    auto recurse = [&](auto&& self, int remaining, int maxPart) -> void {
        if (remaining == 0) {
            out.push_back(current);
            return;
        }
        for (int part = std::min(remaining, maxPart); part >= 1; --part) {
            current.push_back(part);
            self(self, remaining - part, part);
            current.pop_back();
        }
    };
    if (n >= 0) recurse(recurse, n, n);
    return out;
}

std::vector<SetPartition> orbitRepresentatives(int n) {
    if (n < 1)
        throw std::invalid_argument("orbit representatives need n >= 1");
    std::vector<SetPartition> reps;
    for (const auto& shape : integerPartitions(n))
        reps.push_back(SetPartition::fromShape(shape));
    return reps;
}

FormalMotive dcmDecomposition(int n) {
    if (n < 1)
        throw std::invalid_argument("decomposition needs n >= 1");
    FormalMotive fm;
    fm.n = n;
    for (const auto& rep : orbitRepresentatives(n))
        fm.summands.push_back({rep.shape(), rep.length() - n});
    // untwisted summand first, then by decreasing twist and shape
    std::sort(fm.summands.begin(), fm.summands.end(),
              [](const FormalMotive::Summand& a, const FormalMotive::Summand& b) {
                  if (a.twist != b.twist) return a.twist > b.twist;
                  return a.shape < b.shape;
              });
    return fm;
}

namespace {

std::string quotientName(const std::vector<int>& shape) {
    // S^(mu) displayed as a product of symmetric powers, one per family of
    // equal-size blocks
    std::map<int, int> multiplicity;
    for (int part : shape) ++multiplicity[part];
    std::ostringstream os;
    bool first = true;
    for (const auto& [size, count] : multiplicity) {
        if (!first) os << " x ";
        if (count == 1) os << "S";
        else os << "Sym^" << count << "(S)";
        first = false;
    }
    return os.str();
}

std::string shapeName(const std::vector<int>& shape) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < shape.size(); ++i) {
        if (i) os << ",";
        os << shape[i];
    }
    os << "]";
    return os.str();
}

} // namespace

std::string FormalMotive::toString() const {
    std::ostringstream os;
    os << "h(S^[" << n << "]) = ";
    for (size_t i = 0; i < summands.size(); ++i) {
        if (i) os << " (+) ";
        os << "h(" << quotientName(summands[i].shape) << ")";
        if (summands[i].twist != 0) os << "(" << summands[i].twist << ")";
    }
    return os.str();
}

std::string FormalMotive::projectorFormula(int degree) const {
    std::ostringstream os;
    os << "pi^" << degree << "(S^[" << n << "]) =\n";
    for (const auto& s : summands) {
        const int l = static_cast<int>(s.shape.size());
        const int inner = degree - 2 * n + 2 * l;
        os << "    (1/m_" << shapeName(s.shape) << ") Gamma_" << shapeName(s.shape)
           << " . pi^" << inner << "(" << quotientName(s.shape) << ")"
           << " . tGamma_" << shapeName(s.shape) << "\n";
    }
    return os.str();
}

namespace {

Poly polyMultiply(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0) out[i + j] += a[i] * b[j];
    }
    return out;
}

void polyAdd(Poly& a, const Poly& b) {
    if (b.size() > a.size()) a.resize(b.size());
    for (size_t i = 0; i < b.size(); ++i) a[i] += b[i];
}

std::vector<int> cycleLengths(const std::vector<int>& perm) {
    const int l = static_cast<int>(perm.size());
    std::vector<bool> visited(l, false);
    std::vector<int> lengths;
    for (int i = 0; i < l; ++i) {
        if (visited[i]) continue;
        int len = 0, j = i;
        while (!visited[j]) {
            visited[j] = true;
            j = perm[j] - 1;
            ++len;
        }
        lengths.push_back(len);
    }
    return lengths;
}

} // namespace

Poly symmetricQuotientPoincare(const std::vector<int>& shape, const CohomModel& model) {
    std::vector<long> dims(5);
    for (int d = 0; d <= 4; ++d) dims[d] = model.bettiNumber(d);

    // graded trace of an L-cycle on the L-th signed tensor power:
    // sum_d dim V_d (-1)^{(L-1)d} t^{Ld}
    auto cyclePoly = [&](int L) {
        Poly p(4 * L + 1);
        for (int d = 0; d <= 4; ++d) {
            long v = dims[d];
            if ((L - 1) % 2 == 1 && d % 2 == 1) v = -v;
            p[L * d] += rational(v);
        }
        return p;
    };

    const SetPartition mu = SetPartition::fromShape(shape);
    const auto group = mu.blockSymmetryGroup();
    Poly sum;
    for (const auto& g : group) {
        Poly term{rational(1)};
        for (int L : cycleLengths(g)) term = polyMultiply(term, cyclePoly(L));
        polyAdd(sum, term);
    }
    const Rational inv(1, static_cast<long>(group.size()));
    for (auto& c : sum) c *= inv;
    sum.resize(4 * mu.length() + 1);
    return sum;
}

Poly poincarePolynomial(const FormalMotive& fm, const CohomModel& model) {
    Poly total(4 * fm.n + 1);
    for (const auto& s : fm.summands) {
        const int l = static_cast<int>(s.shape.size());
        const int shift = 2 * (fm.n - l);
        const Poly p = symmetricQuotientPoincare(s.shape, model);
        for (size_t i = 0; i < p.size(); ++i) {
            if (p[i] == 0) continue;
            total.at(i + shift) += p[i];
        }
    }
    return total;
}

long hilbCKDimension(int n, int i, const CohomModel& model) {
    if (i < 0 || i > 4 * n)
        throw std::out_of_range("cohomological degree out of range 0..4n");
    const Poly p = poincarePolynomial(dcmDecomposition(n), model);
    return toLong(p[i]);
}

std::vector<long> gottscheEuler(int nMax, long chiTop) {
    if (nMax < 1)
        throw std::invalid_argument("nMax must be >= 1");
    // expand prod_{m>=1} (1 - q^m)^(-chi) mod q^(nMax+1)
    std::vector<Rational> series(nMax + 1);
    series[0] = 1;
    for (int m = 1; m <= nMax; ++m) {
        std::vector<Rational> factor(nMax + 1);
        factor[0] = 1;
        if (chiTop >= 0) {
            Rational binom = 1; // C(chi-1+k, k)
            for (int k = 1; k * m <= nMax; ++k) {
                binom *= rational(chiTop - 1 + k, k);
                factor[k * m] = binom;
            }
        } else {
            Rational binom = 1; // (-1)^k C(|chi|, k)
            for (int k = 1; k * m <= nMax && k <= -chiTop; ++k) {
                binom *= rational(-(-chiTop - k + 1), k);
                factor[k * m] = binom;
            }
        }
        std::vector<Rational> next(nMax + 1);
        for (int i = 0; i <= nMax; ++i) {
            if (series[i] == 0) continue;
            for (int j = 0; i + j <= nMax; ++j)
                if (factor[j] != 0) next[i + j] += series[i] * factor[j];
        }
        series = std::move(next);
    }
    std::vector<long> out(nMax);
    for (int n = 1; n <= nMax; ++n) out[n - 1] = toLong(series[n]);
    return out;
}

std::vector<Poly> gottschePoincare(int nMax, const CohomModel& model) {
    if (nMax < 1)
        throw std::invalid_argument("nMax must be >= 1");
    // prod_{m>=1} prod_d (1 - (-1)^d t^(2m-2+d) q^m)^(-(-1)^d b_d)
    std::vector<Poly> series(nMax + 1);
    series[0] = Poly{rational(1)};
    for (int m = 1; m <= nMax; ++m) {
        for (int d = 0; d <= 4; ++d) {
            const int b = model.bettiNumber(d);
            if (b == 0) continue;
            const int tExp = 2 * m - 2 + d;
            std::vector<Poly> factor(nMax + 1);
            factor[0] = Poly{rational(1)};
            if (d % 2 == 0) {
                Rational binom = 1; // C(b-1+k, k)
                for (int k = 1; k * m <= nMax; ++k) {
                    binom *= rational(b - 1 + k, k);
                    Poly p(tExp * k + 1);
                    p[tExp * k] = binom;
                    factor[k * m] = std::move(p);
                }
            } else {
                Rational binom = 1; // C(b, k)
                for (int k = 1; k * m <= nMax && k <= b; ++k) {
                    binom *= rational(b - k + 1, k);
                    Poly p(tExp * k + 1);
                    p[tExp * k] = binom;
                    factor[k * m] = std::move(p);
                }
            }
            std::vector<Poly> next(nMax + 1);
            for (int i = 0; i <= nMax; ++i) {
                if (series[i].empty()) continue;
                for (int j = 0; i + j <= nMax; ++j) {
                    if (factor[j].empty()) continue;
                    polyAdd(next[i + j], polyMultiply(series[i], factor[j]));
                }
            }
            series = std::move(next);
        }
    }
    std::vector<Poly> out(series.begin() + 1, series.end());
    for (int n = 1; n <= nMax; ++n) out[n - 1].resize(4 * n + 1);
    return out;
}

} // namespace tautring
