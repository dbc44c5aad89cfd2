#include "btop/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "json_util.hpp"

namespace btop {

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Json configJson(const RunConfig& c) {
  Json j;
  j["n_trunc"] = c.nTrunc;
  j["k_max"] = c.kMax;
  j["tol_coeff"] = c.tolCoeff;
  j["tol_psd"] = c.tolPsd;
  j["tol_angle"] = c.tolAngle;
  j["grid"] = c.gridSize;
  j["seed"] = c.seed;
  j["allow_standin"] = c.allowStandin;
  return j;
}

Json reportJson(const ClassificationReport& r) {
  Json j;
  j["n"] = r.n;
  j["deg_minus"] = r.degMinus;
  j["deg_plus"] = r.degPlus;
  j["standin"] = r.standin;
  j["config"] = configJson(r.config);
  j["analytic"] = r.analytic;
  j["analytic_defect"] = r.analyticDefect;
  j["normal_symbol"] = r.normalSymbol;
  j["normal_symbol_defect"] = r.normalSymbolDefect;
  j["hyponormal"] = r.hyponormal;

  Json cm;
  cm["support_blocks"] = r.commutator.supportBlocks;
  cm["min_eigenvalue"] = r.commutator.minEigenvalue;
  cm["rank"] = r.commutator.rank;
  cm["off_support_residual"] = r.commutator.offSupportResidual;
  Json eig = Json::array();
  for (Eigen::Index i = 0; i < r.commutator.eigenvalues.size(); ++i)
    eig.push_back(r.commutator.eigenvalues(i));
  cm["eigenvalues"] = std::move(eig);
  j["commutator"] = std::move(cm);

  Json no;
  no["normal"] = r.normalOperator.normal;
  no["criterion"] = r.normalOperator.criterion;
  no["residual"] = r.normalOperator.residual;
  no["unitary_defect"] = r.normalOperator.unitaryDefect;
  if (r.normalOperator.unitary.size())
    no["unitary"] = matrixToJson(r.normalOperator.unitary);
  j["normal_operator"] = std::move(no);

  Json ladder = Json::array();
  for (const auto& s : r.kSteps) {
    Json step;
    step["k"] = s.k;
    step["min_eigenvalue"] = s.minEigenvalue;
    step["window_psd"] = s.windowPsd;
    step["pass"] = s.pass;
    ladder.push_back(std::move(step));
  }
  j["k_ladder"] = std::move(ladder);
  j["k_hyponormal_up_to"] = r.kHyponormalUpTo;
  j["model_space_dim"] = r.modelSpaceDim;

  if (r.dichotomy) {
    Json d;
    d["relation_residual"] = r.dichotomy->relationResidual;
    d["coprime"] = r.dichotomy->coprime;
    d["applicable"] = r.dichotomy->applicable;
    d["consistent"] = r.dichotomy->consistent;
    d["hypothesis_failure"] = r.dichotomy->hypothesisFailure;
    j["dichotomy"] = std::move(d);
  } else {
    j["dichotomy"] = nullptr;
  }

  j["verdict"] = verdictName(r.verdict);

  Json ws = Json::array();
  for (const auto& w : r.witnesses) {
    Json item;
    item["kind"] = w.kind;
    item["residual"] = w.residual;
    if (w.hasPoint)
      item["point"] = Json{{"re", w.point.real()}, {"im", w.point.imag()}};
    if (w.vector.size()) item["vector"] = vectorToJson(w.vector);
    ws.push_back(std::move(item));
  }
  j["witnesses"] = std::move(ws);
  return j;
}

}  // namespace

std::string reportToJson(const ClassificationReport& report) {
  return reportJson(report).dump(2);
}

std::string reportToCsv(const ClassificationReport& r) {
  std::ostringstream out;
  out << "key,value\n";
  out << "n," << r.n << '\n';
  out << "deg_minus," << r.degMinus << '\n';
  out << "deg_plus," << r.degPlus << '\n';
  out << "standin," << (r.standin ? 1 : 0) << '\n';
  out << "analytic," << (r.analytic ? 1 : 0) << '\n';
  out << "analytic_defect," << fmt(r.analyticDefect) << '\n';
  out << "normal_symbol," << (r.normalSymbol ? 1 : 0) << '\n';
  out << "normal_symbol_defect," << fmt(r.normalSymbolDefect) << '\n';
  out << "hyponormal," << (r.hyponormal ? 1 : 0) << '\n';
  out << "commutator_support_blocks," << r.commutator.supportBlocks << '\n';
  out << "commutator_min_eigenvalue," << fmt(r.commutator.minEigenvalue) << '\n';
  out << "commutator_rank," << r.commutator.rank << '\n';
  out << "normal_operator," << (r.normalOperator.normal ? 1 : 0) << '\n';
  out << "normal_operator_criterion," << r.normalOperator.criterion << '\n';
  out << "normal_operator_residual," << fmt(r.normalOperator.residual) << '\n';
  for (const auto& s : r.kSteps) {
    out << "k_ladder_" << s.k << "_min_eigenvalue," << fmt(s.minEigenvalue)
        << '\n';
    out << "k_ladder_" << s.k << "_pass," << (s.pass ? 1 : 0) << '\n';
  }
  out << "k_hyponormal_up_to," << r.kHyponormalUpTo << '\n';
  out << "model_space_dim," << r.modelSpaceDim << '\n';
  if (r.dichotomy) {
    out << "dichotomy_relation_residual,"
        << fmt(r.dichotomy->relationResidual) << '\n';
    out << "dichotomy_coprime," << (r.dichotomy->coprime ? 1 : 0) << '\n';
    out << "dichotomy_applicable," << (r.dichotomy->applicable ? 1 : 0) << '\n';
    out << "dichotomy_consistent," << (r.dichotomy->consistent ? 1 : 0) << '\n';
    out << "dichotomy_hypothesis_failure,\""
        << r.dichotomy->hypothesisFailure << "\"\n";
  }
  out << "verdict," << verdictName(r.verdict) << '\n';
  for (const auto& w : r.witnesses)
    out << "witness," << w.kind << '\n';
  return out.str();
}

std::string catalogRunsToJson(const std::vector<CatalogRunResult>& runs) {
  std::vector<const CatalogRunResult*> sorted;
  for (const auto& r : runs) sorted.push_back(&r);
  std::sort(sorted.begin(), sorted.end(),
            [](const CatalogRunResult* a, const CatalogRunResult* b) {
              return a->id < b->id;
            });
  Json j;
  Json entries = Json::array();
  bool all = true;
  for (const CatalogRunResult* r : sorted) {
    Json e;
    e["id"] = r->id;
    e["annotations_match"] = r->annotationsMatch;
    Json mm = Json::array();
    for (const auto& m : r->mismatches) mm.push_back(m);
    e["mismatches"] = std::move(mm);
    e["report"] = reportJson(r->report);
    entries.push_back(std::move(e));
    all = all && r->annotationsMatch;
  }
  j["entries"] = std::move(entries);
  j["all_match"] = all;
  return j.dump(2);
}

std::string catalogRunsToCsv(const std::vector<CatalogRunResult>& runs) {
  std::vector<const CatalogRunResult*> sorted;
  for (const auto& r : runs) sorted.push_back(&r);
  std::sort(sorted.begin(), sorted.end(),
            [](const CatalogRunResult* a, const CatalogRunResult* b) {
              return a->id < b->id;
            });
  std::ostringstream out;
  out << "id,verdict,hyponormal,normal,analytic,k_up_to,commutator_rank,"
         "model_space_dim,annotations_match\n";
  for (const CatalogRunResult* r : sorted) {
    const ClassificationReport& rep = r->report;
    out << r->id << ',' << verdictName(rep.verdict) << ','
        << (rep.hyponormal ? 1 : 0) << ','
        << (rep.normalOperator.normal ? 1 : 0) << ','
        << (rep.analytic ? 1 : 0) << ',' << rep.kHyponormalUpTo << ','
        << rep.commutator.rank << ',' << rep.modelSpaceDim << ','
        << (r->annotationsMatch ? 1 : 0) << '\n';
  }
  return out.str();
}

std::string verifyRowsToJson(const std::string& check,
                             const std::vector<VerifyRow>& rows) {
  Json j;
  j["check"] = check;
  Json arr = Json::array();
  bool all = true;
  for (const auto& r : rows) {
    Json item;
    item["instance"] = r.instance;
    item["metric"] = r.metric;
    item["value"] = r.value;
    item["pass"] = r.pass;
    arr.push_back(std::move(item));
    all = all && r.pass;
  }
  j["rows"] = std::move(arr);
  j["all_pass"] = all;
  return j.dump(2);
}

std::string verifyRowsToCsv(const std::vector<VerifyRow>& rows) {
  std::ostringstream out;
  out << "instance,metric,value,pass\n";
  for (const auto& r : rows)
    out << r.instance << ',' << r.metric << ',' << fmt(r.value) << ','
        << (r.pass ? 1 : 0) << '\n';
  return out.str();
}

}  // namespace btop
