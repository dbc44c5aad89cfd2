#pragma once

#include <string>
#include <vector>

#include "btop/catalog.hpp"
#include "btop/classify.hpp"

namespace btop {

// All serialization uses a fixed field order and shortest-roundtrip floats,
// so identical inputs give byte-identical output.
std::string reportToJson(const ClassificationReport& report);
std::string reportToCsv(const ClassificationReport& report);  // flat key,value lines

std::string catalogRunsToJson(const std::vector<CatalogRunResult>& runs);
std::string catalogRunsToCsv(const std::vector<CatalogRunResult>& runs);

struct VerifyRow {
  std::string instance;
  std::string metric;
  double value = 0;
  bool pass = false;
};

std::string verifyRowsToJson(const std::string& check,
                             const std::vector<VerifyRow>& rows);
std::string verifyRowsToCsv(const std::vector<VerifyRow>& rows);

}  // namespace btop
