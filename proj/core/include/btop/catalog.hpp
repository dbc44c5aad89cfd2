#pragma once

#include "btop/classify.hpp"

namespace btop {

// Ground-truth annotations for a catalog entry, recorded at construction
// (subnormality is known there by construction, e.g. direct sums of a
// self-adjoint and a shift), checked against computed verdicts when run.
struct CatalogAnnotations {
  bool hyponormal = false;
  bool normalOperator = false;
  bool analytic = false;
  bool subnormalByConstruction = false;
  int expectedCommutatorRank = -1;  // -1: unchecked
  int expectedModelSpaceDim = -1;
  int expectedKUpTo = -1;  // -1: expect the full ladder when subnormal
  bool expectCoprime = false;
  bool coprimeChecked = false;
  // >= 0: [T*,T] must fix the degree-zero unit vector in this component.
  int fixedPointComponent = -1;
};

struct CatalogEntry {
  std::string id;
  std::string description;
  LaurentSymbol phi;
  PotapovProduct q;
  CatalogAnnotations notes;
};

// Entries: case2, case3, remark3.4, remark3.5, scalar-czbar.  c parametrizes
// the scalar entry z + c conj(z) and must lie in (0, 1).
std::vector<CatalogEntry> buildCatalog(double c = 0.5);

const CatalogEntry* findEntry(const std::vector<CatalogEntry>& entries,
                              const std::string& id);

struct CatalogRunResult {
  std::string id;
  ClassificationReport report;
  bool annotationsMatch = true;
  std::vector<std::string> mismatches;
};

CatalogRunResult runCatalogEntry(const CatalogEntry& entry,
                                 const RunConfig& config);

}  // namespace btop
