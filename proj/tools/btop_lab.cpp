#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "btop/catalog.hpp"
#include "btop/classify.hpp"
#include "btop/generator.hpp"
#include "btop/report.hpp"
#include "btop/symbol_io.hpp"
#include "json.hpp"

namespace {

using namespace btop;

struct Output {
  std::string path;    // empty: stdout
  std::string format;  // json | csv
};

void emit(const Output& out, const std::string& text) {
  if (out.path.empty()) {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(out.path, std::ios::binary);
  if (!f) throw ParseError("cannot open " + out.path + " for writing");
  f << text;
  if (text.empty() || text.back() != '\n') f << '\n';
  if (!f) throw ParseError("write failed for " + out.path);
}

struct VerifySource {
  bool fromCatalog = false;
  std::string catalogId;
  std::uint64_t seed = 0;
  int count = 0;
};

VerifySource parseSource(const std::string& text) {
  VerifySource s;
  auto colon = text.find(':');
  if (colon == std::string::npos)
    throw ParseError("source must be catalog:<id> or random:<seed>,<count>");
  std::string head = text.substr(0, colon), tail = text.substr(colon + 1);
  if (head == "catalog") {
    if (tail.empty()) throw ParseError("catalog source needs an id");
    s.fromCatalog = true;
    s.catalogId = tail;
    return s;
  }
  if (head != "random")
    throw ParseError("source must be catalog:<id> or random:<seed>,<count>");
  auto comma = tail.find(',');
  if (comma == std::string::npos)
    throw ParseError("random source is random:<seed>,<count>");
  try {
    s.seed = std::stoull(tail.substr(0, comma));
    s.count = std::stoi(tail.substr(comma + 1));
  } catch (const std::exception&) {
    throw ParseError("random source is random:<seed>,<count>");
  }
  if (s.count < 1) throw ParseError("random source count must be positive");
  return s;
}

struct NamedInstance {
  std::string name;
  LaurentSymbol phi = LaurentSymbol::zero(1);
  std::optional<PotapovProduct> q;
  std::optional<LaurentSymbol> multiplier;
  std::optional<LaurentSymbol> psi;    // second symbol for the identity suite
  std::optional<LaurentSymbol> theta;  // inner symbol for the identity suite
};

std::vector<NamedInstance> instancesFor(const std::string& check,
                                        const VerifySource& src) {
  std::vector<NamedInstance> out;
  if (src.fromCatalog) {
    auto entries = buildCatalog();
    const CatalogEntry* e = findEntry(entries, src.catalogId);
    if (!e) throw ParseError("unknown catalog id " + src.catalogId);
    NamedInstance inst;
    inst.name = "catalog:" + e->id;
    inst.phi = e->phi;
    inst.q = e->q;
    int order = std::max(e->phi.degMinus() + e->phi.degPlus() + 2,
                         e->q.factorCount() + 1);
    inst.multiplier = e->q.fourier(order).symbol;
    inst.psi = e->phi;
    inst.theta = inst.multiplier;
    out.push_back(std::move(inst));
    return out;
  }
  Rng rng(src.seed);
  for (int i = 0; i < src.count; ++i) {
    NamedInstance inst;
    inst.name =
        "random:" + std::to_string(src.seed) + "/" + std::to_string(i);
    if (check == "1.1") {
      int n = rng.integer(1, 3);
      inst.phi = randomSymbol(rng, n, rng.integer(0, 4), rng.integer(0, 4));
      inst.psi = randomSymbol(rng, n, rng.integer(0, 4), rng.integer(0, 4));
      PotapovProduct th = randomPotapov(rng, n, rng.integer(1, 2));
      inst.theta = th.fourier(th.factorCount() + 1).symbol;
    } else {
      auto gen = innerSymmetricInstance(rng, rng.integer(1, 3),
                                        rng.integer(1, 3), rng.integer(0, 3));
      inst.phi = std::move(gen.phi);
      inst.q = std::move(gen.q);
      inst.multiplier = std::move(gen.multiplier);
    }
    out.push_back(std::move(inst));
  }
  return out;
}

int cmdVerify(const std::string& check, const std::string& sourceText,
              const RunConfig& cfg, const Output& out) {
  VerifySource src = parseSource(sourceText);
  std::vector<VerifyRow> rows;
  std::vector<NamedInstance> instances = instancesFor(check, src);

  for (auto& inst : instances) {
    RunConfig c = cfg;
    c.allowStandin = c.allowStandin || inst.phi.isStandin();
    if (check == "1.1") {
      if (!inst.psi || !inst.theta)
        throw PreconditionError("check 1.1 needs companion symbols");
      IdentitySuiteReport rep = identitySuite(inst.phi, *inst.psi, *inst.theta,
                                              c.nTrunc, c.allowStandin);
      auto row = [&](const char* metric, double v) {
        rows.push_back({inst.name, metric, v, v <= c.tolCoeff});
      };
      row("adjoint_deviation", rep.adjointDeviation);
      row("product_deviation", rep.productDeviation);
      row("analytic_shift_deviation", rep.analyticShiftDeviation);
      row("absorption_deviation", rep.absorptionDeviation);
    } else if (check == "3.1") {
      if (!inst.multiplier)
        throw PreconditionError("check 3.1 needs an inner multiplier");
      double dev = commutatorFactorizationDeviation(inst.phi, *inst.multiplier,
                                                    c.allowStandin);
      rows.push_back({inst.name, "relative_frobenius_deviation", dev,
                      dev <= 1e-8});
    } else if (check == "3.2") {
      if (!inst.q) throw PreconditionError("check 3.2 needs an inner factor");
      RangeComparisonReport rep = commutatorRangeComparison(inst.phi, *inst.q, c);
      rows.push_back({inst.name, "commutator_range_dim",
                      static_cast<double>(rep.commutatorRangeDim),
                      rep.commutatorRangeDim == rep.imageDim});
      rows.push_back({inst.name, "image_dim",
                      static_cast<double>(rep.imageDim),
                      rep.commutatorRangeDim == rep.imageDim});
      rows.push_back({inst.name, "largest_angle", rep.largestAngle, rep.pass});
    } else if (check == "3.3") {
      if (!inst.q) throw PreconditionError("check 3.3 needs an inner factor");
      RankBoundReport rep = commutatorRankBound(inst.phi, *inst.q, c.allowStandin);
      rows.push_back({inst.name, "commutator_rank",
                      static_cast<double>(rep.commutatorRank), rep.holds});
      rows.push_back({inst.name, "model_space_dim",
                      static_cast<double>(rep.modelSpaceDim), rep.holds});
    } else {
      throw ParseError("unknown check " + check +
                       "; expected one of 1.1, 3.1, 3.2, 3.3");
    }
  }

  emit(out, out.format == "csv" ? verifyRowsToCsv(rows)
                                : verifyRowsToJson(check, rows));
  for (const auto& r : rows)
    if (!r.pass) return 1;
  return 0;
}

int cmdAnalyze(const std::string& symbolPath, const std::string& potapovPath,
               const RunConfig& cfg, const Output& out) {
  LaurentSymbol phi = loadSymbol(symbolPath);
  std::optional<PotapovProduct> q;
  if (!potapovPath.empty()) q = loadPotapov(potapovPath);
  ClassificationReport rep = classify(phi, q, cfg);
  emit(out, out.format == "csv" ? reportToCsv(rep) : reportToJson(rep));
  return 0;
}

int cmdCatalog(const std::string& id, double c, const RunConfig& cfg,
               const Output& out) {
  auto entries = buildCatalog(c);
  std::vector<CatalogRunResult> runs;
  if (!id.empty()) {
    const CatalogEntry* e = findEntry(entries, id);
    if (!e) throw ParseError("unknown catalog id " + id);
    runs.push_back(runCatalogEntry(*e, cfg));
  } else {
    for (const auto& e : entries) runs.push_back(runCatalogEntry(e, cfg));
  }
  emit(out, out.format == "csv" ? catalogRunsToCsv(runs)
                                : catalogRunsToJson(runs));
  for (const auto& r : runs)
    if (!r.annotationsMatch) return 1;
  return 0;
}

int cmdGen(const std::string& kind, int n, int degMinus, int degPlus,
           int factors, int analyticDegree, double alphaRadius,
           const std::string& outSymbol, const std::string& outPotapov,
           const RunConfig& cfg, const Output& out) {
  Rng rng(cfg.seed);
  if (kind == "symbol" || kind == "normal-symbol") {
    LaurentSymbol s = kind == "symbol"
                          ? randomSymbol(rng, n, degMinus, degPlus)
                          : randomNormalSymbol(rng, n, degMinus, degPlus);
    if (!outSymbol.empty())
      saveSymbol(s, outSymbol);
    else
      emit(out, symbolToJson(s));
  } else if (kind == "potapov") {
    PotapovProduct q = randomPotapov(rng, n, factors, alphaRadius);
    if (!outPotapov.empty())
      savePotapov(q, outPotapov);
    else
      emit(out, potapovToJson(q));
  } else if (kind == "instance") {
    auto inst = innerSymmetricInstance(rng, n, factors, analyticDegree);
    if (!outSymbol.empty() || !outPotapov.empty()) {
      if (!outSymbol.empty()) saveSymbol(inst.phi, outSymbol);
      if (!outPotapov.empty()) savePotapov(inst.q, outPotapov);
      return 0;
    }
    nlohmann::ordered_json j;
    j["symbol"] = nlohmann::ordered_json::parse(symbolToJson(inst.phi));
    j["potapov"] = nlohmann::ordered_json::parse(potapovToJson(inst.q));
    j["multiplier"] = nlohmann::ordered_json::parse(symbolToJson(inst.multiplier));
    emit(out, j.dump(2));
  } else {
    throw ParseError("unknown kind " + kind +
                     "; expected symbol, normal-symbol, potapov or instance");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* threads = std::getenv("BTOP_THREADS")) {
    int t = std::atoi(threads);
    if (t > 0) Eigen::setNbThreads(t);
  }

  CLI::App app{"numerical workbench for block Toeplitz and Hankel "
               "truncations of matrix symbols on the circle"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig flagCfg;
  std::string configPath;
  Output out;
  out.format = "json";
  bool allowStandin = false;

  auto* oN = app.add_option("--n-trunc", flagCfg.nTrunc, "truncation blocks");
  auto* oK = app.add_option("--kmax", flagCfg.kMax, "ladder depth");
  auto* oTc = app.add_option("--tol-coeff", flagCfg.tolCoeff,
                             "coefficient tolerance");
  auto* oTp = app.add_option("--tol-psd", flagCfg.tolPsd, "PSD tolerance");
  auto* oTa = app.add_option("--tol-angle", flagCfg.tolAngle,
                             "subspace angle tolerance");
  auto* oG = app.add_option("--grid", flagCfg.gridSize, "circle grid size");
  auto* oS = app.add_option("--seed", flagCfg.seed, "generator seed");
  app.add_option("--config", configPath, "JSON config file");
  app.add_option("--out", out.path, "output path (default stdout)");
  app.add_option("--format", out.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  auto* oAs = app.add_flag("--allow-standin", allowStandin,
                           "permit truncations of declared stand-in symbols");

  auto* analyze = app.add_subcommand("analyze", "classify a symbol file");
  std::string symbolPath, potapovPath;
  analyze->add_option("symbol", symbolPath, "symbol JSON file")->required();
  analyze->add_option("potapov", potapovPath, "inner factor JSON file");

  auto* verify = app.add_subcommand("verify", "run a structural check");
  std::string check, sourceText;
  verify->add_option("check", check, "one of 1.1, 3.1, 3.2, 3.3")->required();
  verify
      ->add_option("source", sourceText,
                   "catalog:<id> or random:<seed>,<count>")
      ->required();

  auto* catalog = app.add_subcommand("catalog", "run the example catalog");
  std::string catalogId;
  double catalogC = 0.5;
  catalog->add_option("id", catalogId, "single entry id");
  catalog->add_option("--c", catalogC, "parameter of the scalar entry");

  auto* gen = app.add_subcommand("gen", "dump generated instances");
  std::string genKind = "instance", outSymbol, outPotapov;
  int genN = 2, genDm = 2, genDp = 2, genFactors = 2, genAnalytic = 2;
  double genAlphaRadius = 0.0;
  gen->add_option("kind", genKind,
                  "symbol, normal-symbol, potapov or instance");
  gen->add_option("--n", genN, "matrix dimension");
  gen->add_option("--deg-minus", genDm, "coanalytic degree");
  gen->add_option("--deg-plus", genDp, "analytic degree");
  gen->add_option("--factors", genFactors, "factor count");
  gen->add_option("--analytic-degree", genAnalytic,
                  "scalar analytic degree of the instance");
  gen->add_option("--alpha-radius", genAlphaRadius, "factor zero radius");
  gen->add_option("--out-symbol", outSymbol, "write the instance symbol here");
  gen->add_option("--out-potapov", outPotapov,
                  "write the instance inner factor here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    RunConfig cfg;
    if (!configPath.empty()) cfg = loadConfig(configPath, cfg);
    if (oN->count()) cfg.nTrunc = flagCfg.nTrunc;
    if (oK->count()) cfg.kMax = flagCfg.kMax;
    if (oTc->count()) cfg.tolCoeff = flagCfg.tolCoeff;
    if (oTp->count()) cfg.tolPsd = flagCfg.tolPsd;
    if (oTa->count()) cfg.tolAngle = flagCfg.tolAngle;
    if (oG->count()) cfg.gridSize = flagCfg.gridSize;
    if (oS->count()) cfg.seed = flagCfg.seed;
    if (oAs->count()) cfg.allowStandin = allowStandin;
    if (cfg.nTrunc < 1 || cfg.kMax < 0 || cfg.gridSize < 1)
      throw ParseError("config: sizes must be positive");

    if (analyze->parsed())
      return cmdAnalyze(symbolPath, potapovPath, cfg, out);
    if (verify->parsed()) return cmdVerify(check, sourceText, cfg, out);
    if (catalog->parsed()) return cmdCatalog(catalogId, catalogC, cfg, out);
    if (gen->parsed())
      return cmdGen(genKind, genN, genDm, genDp, genFactors, genAnalytic,
                    genAlphaRadius, outSymbol, outPotapov, cfg, out);
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition failure: " << e.what() << '\n';
    return 3;
  } catch (const InternalCheckError& e) {
    std::cerr << "internal check failed: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
