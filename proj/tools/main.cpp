#include "tautring/dsl.hpp"
#include "tautring/partitions.hpp"
#include "tautring/projectors.hpp"
#include "tautring/report.hpp"
#include "tautring/rewrite.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace tautring;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct ModelArgs {
    std::string surface = "k3";
    std::string configPath;

    SurfaceModel resolve() const {
        if (!configPath.empty()) return SurfaceModel::fromFile(configPath);
        if (surface == "k3") return SurfaceModel::k3();
        if (surface == "abelian") return SurfaceModel::abelian();
        if (surface == "generic") return SurfaceModel::genericB1Zero(24, 0);
        throw std::invalid_argument("unknown surface '" + surface + "'");
    }
};

void addModelFlags(CLI::App* cmd, ModelArgs& args) {
    cmd->add_option("--surface", args.surface, "Surface model: k3, abelian or generic")
        ->default_str("k3");
    cmd->add_option("--config", args.configPath,
                    "JSON config file (keys: mode, chi_top, k2, ns_rank, gram); "
                    "overrides --surface");
}

int emitReport(const CheckReport& report, const std::string& format) {
    if (format == "structured")
        std::cout << report.toJson() << "\n";
    else
        std::cout << report.toText();
    return report.exitCode();
}

std::string readExprArg(const std::string& inline_, const std::string& file) {
    if (!inline_.empty()) return inline_;
    if (file.empty())
        throw std::invalid_argument("provide --expr or --file");
    std::ifstream in(file);
    if (!in)
        throw std::invalid_argument("cannot open expression file '" + file + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int runVerifyProjectors(const ModelArgs& modelArgs, int power, double budget,
                        const std::string& format) {
    if (power < 1 || power > 4) {
        std::cerr << "power must be between 1 and 4 (budget cap)\n";
        return kExitUsage;
    }
    const SurfaceModel model = modelArgs.resolve();
    const CohomModel cohom = CohomModel::forSurface(model);

    const ProjectorFamily family = powerProjectors(power, model);
    const AxiomReport axioms = verifyCKAxioms(family, model, cohom, budget);

    CheckReport report;
    report.suite = "projectors (power " + std::to_string(power) + ")";
    report.model = model.describe();
    for (const auto& c : axioms.checks) {
        const CheckStatus status = c.skipped ? CheckStatus::Skipped
                                 : c.pass    ? CheckStatus::Pass
                                             : CheckStatus::Fail;
        report.records.push_back({c.id, status, c.witness, c.millis});
    }
    if (format != "structured")
        std::cout << "axiom instances (idempotence + orthogonality): "
                  << axioms.axiomInstanceCount << " checks\n";
    return emitReport(report, format);
}

int runVerifyMultiplicativity(const ModelArgs& modelArgs, int power, double budget,
                              bool symmetryReduce, const std::string& format) {
    if (power < 1 || power > 3) {
        std::cerr << "power must be between 1 and 3 (budget cap)\n";
        return kExitUsage;
    }
    const SurfaceModel model = modelArgs.resolve();
    if (model.mode() != SurfaceMode::K3) {
        std::cerr << "multiplicativity verification runs in K3 mode only\n";
        return kExitUsage;
    }
    const CohomModel cohom = CohomModel::forSurface(model);

    const ProjectorFamily family = powerProjectors(power, model);
    MultOptions options;
    options.symmetryReduce = symmetryReduce;
    options.budgetSeconds = budget;
    options.factorized = power >= 3;
    const MultiplicativityReport mult = checkMultiplicativity(family, model, cohom, options);

    CheckReport report;
    report.suite = "multiplicativity (power " + std::to_string(power) + ")";
    report.model = model.describe();
    for (const auto& c : mult.checks) {
        std::ostringstream id;
        id << "triple (" << c.i << "," << c.j << "," << c.k << ")"
           << (c.required ? " requires vanishing" : " unconstrained");
        CheckStatus status;
        if (c.skipped)
            status = CheckStatus::Skipped;
        else if (c.required && !c.chowVanishes)
            status = CheckStatus::Fail;
        else if (c.cohomVanishes && !c.chowVanishes)
            status = CheckStatus::Fail;
        else
            status = CheckStatus::Pass;
        std::string witness;
        if (status == CheckStatus::Fail) witness = c.witness;
        report.records.push_back({id.str(), status, witness, c.millis});
    }
    return emitReport(report, format);
}

int runComputeBetti(const ModelArgs& modelArgs, int n, int degree) {
    const SurfaceModel model = modelArgs.resolve();
    const CohomModel cohom = CohomModel::forSurface(model);
    if (degree >= 0) {
        std::cout << hilbCKDimension(n, degree, cohom) << "\n";
        return kExitPass;
    }
    std::cout << "Betti numbers of S^[" << n << "], " << model.describe() << "\n";
    for (int i = 0; i <= 4 * n; ++i)
        std::cout << "  b_" << i << " = " << hilbCKDimension(n, i, cohom) << "\n";
    return kExitPass;
}

int runComputeEuler(const ModelArgs& modelArgs, int n) {
    const SurfaceModel model = modelArgs.resolve();
    const auto eulers = gottscheEuler(n, model.chiTop());
    std::cout << eulers[n - 1] << "\n";
    return kExitPass;
}

int runComputeDecomposition(const ModelArgs& modelArgs, int n, int degree) {
    const FormalMotive fm = dcmDecomposition(n);
    std::cout << fm.toString() << "\n";
    if (degree >= 0) {
        std::cout << "\n" << fm.projectorFormula(degree);
    } else {
        const SurfaceModel model = modelArgs.resolve();
        if (model.mode() != SurfaceMode::GenericB1Zero) {
            const CohomModel cohom = CohomModel::forSurface(model);
            const Poly p = poincarePolynomial(fm, cohom);
            std::cout << "Poincare polynomial:";
            bool first = true;
            for (size_t i = 0; i < p.size(); ++i)
                if (p[i] != 0) {
                    std::cout << (first ? " " : " + ") << toString(p[i]) << "*t^" << i;
                    first = false;
                }
            std::cout << "\n";
        }
    }
    return kExitPass;
}

int runComputeNormalize(const ModelArgs& modelArgs, const std::string& exprText,
                        int declaredArity) {
    const SurfaceModel model = modelArgs.resolve();
    const TautExpr parsed = parseExpr(exprText, declaredArity);
    std::cout << printExpr(normalize(parsed, model)) << "\n";
    return kExitPass;
}

int runComputeBigrading(const ModelArgs& modelArgs, const std::string& exprText, int power) {
    const SurfaceModel model = modelArgs.resolve();
    if (power < 1 || power > 4) {
        std::cerr << "power must be between 1 and 4\n";
        return kExitUsage;
    }
    const ProjectorFamily family = powerProjectors(power, model);
    const TautExpr x = normalize(parseExpr(exprText, power), model);
    if (x.isZero()) {
        std::cout << "0\n";
        return kExitPass;
    }
    const auto components = bigrading(x, family, model);
    for (const auto& [s, piece] : components)
        std::cout << "s=" << s << ": " << printExpr(piece) << "\n";
    if (components.empty()) std::cout << "0\n";
    return kExitPass;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic engine for tautological rings of surface powers,\n"
                 "Chow-Kunneth projectors and Hilbert-scheme decompositions"};
    app.require_subcommand(1);

    CLI::App* verify = app.add_subcommand("verify", "Run verification suites");
    verify->require_subcommand(1);

    ModelArgs projArgs;
    int projPower = 1;
    double projBudget = -1;
    std::string projFormat = "text";
    CLI::App* projectors = verify->add_subcommand(
        "projectors", "Chow-Kunneth axioms and graded traces for S^m");
    addModelFlags(projectors, projArgs);
    projectors->add_option("--power", projPower, "Power m of the surface")->default_val(1);
    projectors->add_option("--budget", projBudget,
                           "Wall-clock seconds; later checks are skipped once exceeded");
    projectors->add_option("--format", projFormat, "text or structured")->default_str("text");

    ModelArgs multArgs;
    int multPower = 1;
    double multBudget = -1;
    bool multSymmetry = false;
    std::string multFormat = "text";
    CLI::App* multiplicativity = verify->add_subcommand(
        "multiplicativity",
        "Projected small-diagonal vanishing for all projector triples of S^m");
    addModelFlags(multiplicativity, multArgs);
    multiplicativity->add_option("--power", multPower, "Power m of the surface")->default_val(1);
    multiplicativity->add_option("--budget", multBudget,
                                 "Wall-clock seconds; later triples are skipped once exceeded");
    multiplicativity->add_flag("--symmetry-reduce", multSymmetry,
                               "Evaluate one representative per S_3 orbit of triples");
    multiplicativity->add_option("--format", multFormat, "text or structured")
        ->default_str("text");

    CLI::App* compute = app.add_subcommand("compute", "Compute tables and normal forms");
    compute->require_subcommand(1);

    ModelArgs bettiArgs;
    int bettiN = 1, bettiDegree = -1;
    CLI::App* betti = compute->add_subcommand("betti", "Betti numbers of S^[n]");
    addModelFlags(betti, bettiArgs);
    betti->add_option("--n", bettiN, "Number of points")->required();
    betti->add_option("--degree", bettiDegree, "Single cohomological degree");

    ModelArgs eulerArgs;
    int eulerN = 1;
    CLI::App* euler = compute->add_subcommand("euler", "Euler characteristic of S^[n]");
    addModelFlags(euler, eulerArgs);
    euler->add_option("--n", eulerN, "Number of points")->required();

    ModelArgs decompArgs;
    int decompN = 1, decompDegree = -1;
    CLI::App* decomposition = compute->add_subcommand(
        "decomposition", "Formal motive decomposition of S^[n]");
    addModelFlags(decomposition, decompArgs);
    decomposition->add_option("--n", decompN, "Number of points")->required();
    decomposition->add_option("--degree", decompDegree,
                              "Also print the induced projector formula in this degree");

    ModelArgs normArgs;
    std::string normExpr, normFile;
    int normArity = -1;
    CLI::App* normalizeCmd = compute->add_subcommand("normalize", "Normal form of an expression");
    addModelFlags(normalizeCmd, normArgs);
    normalizeCmd->add_option("--expr", normExpr, "Expression text");
    normalizeCmd->add_option("--file", normFile, "File with an expression");
    normalizeCmd->add_option("--arity", normArity, "Declared arity (default: inferred)");

    ModelArgs bigArgs;
    std::string bigExpr, bigFile;
    int bigPower = 1;
    CLI::App* bigradingCmd = compute->add_subcommand(
        "bigrading", "Graded components of a homogeneous class on S^m");
    addModelFlags(bigradingCmd, bigArgs);
    bigradingCmd->add_option("--expr", bigExpr, "Expression text");
    bigradingCmd->add_option("--file", bigFile, "File with an expression");
    bigradingCmd->add_option("--power", bigPower, "Power m of the surface")->default_val(1);

    CLI11_PARSE(app, argc, argv);

    try {
        if (projectors->parsed())
            return runVerifyProjectors(projArgs, projPower, projBudget, projFormat);
        if (multiplicativity->parsed())
            return runVerifyMultiplicativity(multArgs, multPower, multBudget, multSymmetry,
                                             multFormat);
        if (betti->parsed()) return runComputeBetti(bettiArgs, bettiN, bettiDegree);
        if (euler->parsed()) return runComputeEuler(eulerArgs, eulerN);
        if (decomposition->parsed())
            return runComputeDecomposition(decompArgs, decompN, decompDegree);
        if (normalizeCmd->parsed())
            return runComputeNormalize(normArgs, readExprArg(normExpr, normFile), normArity);
        if (bigradingCmd->parsed())
            return runComputeBigrading(bigArgs, readExprArg(bigExpr, bigFile), bigPower);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitFail;
    }
    std::cerr << "no subcommand\n";
    return kExitUsage;
}
