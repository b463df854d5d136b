#include "tautring/surface_model.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace tautring {

std::string to_string(SurfaceMode mode) {
    switch (mode) {
    case SurfaceMode::K3: return "k3";
    case SurfaceMode::Abelian: return "abelian";
    case SurfaceMode::GenericB1Zero: return "generic";
    }
    return "?";
}

SurfaceMode surfaceModeFromString(const std::string& name) {
    if (name == "k3" || name == "K3") return SurfaceMode::K3;
    if (name == "abelian") return SurfaceMode::Abelian;
    if (name == "generic") return SurfaceMode::GenericB1Zero;
    throw std::invalid_argument("unknown surface mode '" + name + "'");
}

SurfaceModel::SurfaceModel(SurfaceMode mode, long chiTop, long k2,
                           std::vector<std::vector<Rational>> gram)
    : mode_(mode), chiTop_(chiTop), k2_(k2), gram_(std::move(gram)) {
    validate();
}

SurfaceModel SurfaceModel::k3(long polarizationDegree) {
    return SurfaceModel(SurfaceMode::K3, 24, 0,
                        {{rational(2 * polarizationDegree)}});
}

SurfaceModel SurfaceModel::abelian() {
    return SurfaceModel(SurfaceMode::Abelian, 0, 0, {{rational(2)}});
}

SurfaceModel SurfaceModel::genericB1Zero(long chiTop, long k2,
                                         std::vector<std::vector<Rational>> gram) {
    return SurfaceModel(SurfaceMode::GenericB1Zero, chiTop, k2, std::move(gram));
}

namespace {

// Nondegeneracy via fraction-free elimination; exact.
bool nondegenerate(std::vector<std::vector<Rational>> m) {
    const size_t n = m.size();
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0) ++pivot;
        if (pivot == n) return false;
        std::swap(m[pivot], m[col]);
        for (size_t row = col + 1; row < n; ++row) {
            if (m[row][col] == 0) continue;
            Rational f = m[row][col] / m[col][col];
            for (size_t j = col; j < n; ++j)
                m[row][j] -= f * m[col][j];
        }
    }
    return true;
}

Rational jsonRational(const nlohmann::json& v) {
    if (v.is_number_integer()) return rational(v.get<long>());
    if (v.is_string()) return rationalFromString(v.get<std::string>());
    throw std::invalid_argument("gram entries must be integers or \"p/q\" strings");
}

} // namespace

void SurfaceModel::validate() const {
    if (mode_ == SurfaceMode::K3 && (chiTop_ != 24 || k2_ != 0))
        throw std::invalid_argument("K3 mode forces chi_top = 24, k2 = 0");
    if (mode_ == SurfaceMode::Abelian && (chiTop_ != 0 || k2_ != 0))
        throw std::invalid_argument("abelian mode forces chi_top = 0, k2 = 0");
    const size_t n = gram_.size();
    for (const auto& row : gram_)
        if (row.size() != n)
            throw std::invalid_argument("gram matrix is not square");
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (gram_[i][j] != gram_[j][i])
                throw std::invalid_argument("gram matrix is not symmetric");
    if (n > 0 && !nondegenerate(gram_))
        throw std::invalid_argument("gram matrix is degenerate");
}

const Rational& SurfaceModel::gram(int a, int b) const {
    if (a < 1 || a > nsRank() || b < 1 || b > nsRank())
        throw std::out_of_range("divisor index out of range");
    return gram_[a - 1][b - 1];
}

SurfaceModel SurfaceModel::fromJson(const std::string& jsonText) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(jsonText);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("config parse error: ") + e.what());
    }
    if (!j.contains("mode"))
        throw std::invalid_argument("config is missing 'mode'");
    SurfaceMode mode = surfaceModeFromString(j["mode"].get<std::string>());

    long chi = 0, k2 = 0;
    switch (mode) {
    case SurfaceMode::K3: chi = 24; k2 = 0; break;
    case SurfaceMode::Abelian: chi = 0; k2 = 0; break;
    case SurfaceMode::GenericB1Zero: break;
    }
    if (j.contains("chi_top")) chi = j["chi_top"].get<long>();
    if (j.contains("k2")) k2 = j["k2"].get<long>();

    std::vector<std::vector<Rational>> gram;
    if (j.contains("gram")) {
        for (const auto& row : j["gram"]) {
            std::vector<Rational> r;
            for (const auto& v : row) r.push_back(jsonRational(v));
            gram.push_back(std::move(r));
        }
    } else if (mode == SurfaceMode::K3) {
        gram = {{rational(2)}};
    } else if (mode == SurfaceMode::Abelian) {
        gram = {{rational(2)}};
    }
    if (j.contains("ns_rank")) {
        const auto declared = j["ns_rank"].get<size_t>();
        if (declared != gram.size())
            throw std::invalid_argument("ns_rank does not match gram size");
    }
    return SurfaceModel(mode, chi, k2, std::move(gram));
}

SurfaceModel SurfaceModel::fromFile(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open config file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return fromJson(buf.str());
}

std::string SurfaceModel::describe() const {
    std::ostringstream os;
    os << to_string(mode_) << " (chi_top=" << chiTop_ << ", K^2=" << k2_
       << ", ns_rank=" << nsRank() << ")";
    return os.str();
}

} // namespace tautring
