#pragma once

#include <string>

#include "btop/blaschke.hpp"
#include "btop/config.hpp"
#include "btop/laurent_symbol.hpp"

namespace btop {

// Symbol files: { "n": int, "coeffs": [ { "k": int, "re": [[..]], "im": [[..]] } ],
//                 "bounded_type": bool (optional, default true) }
// Duplicate k entries and shape mismatches are ParseErrors.
LaurentSymbol parseSymbolJson(const std::string& text);
std::string symbolToJson(const LaurentSymbol& s);
LaurentSymbol loadSymbol(const std::string& path);
void saveSymbol(const LaurentSymbol& s, const std::string& path);

// Potapov files: { "v": { "re": [[..]], "im": [[..]] },
//                  "factors": [ { "alpha": { "re": x, "im": y },
//                                 "P": { "re": [[..]], "im": [[..]] } } ] }
PotapovProduct parsePotapovJson(const std::string& text);
std::string potapovToJson(const PotapovProduct& q);
PotapovProduct loadPotapov(const std::string& path);
void savePotapov(const PotapovProduct& q, const std::string& path);

// Config files: flat object with any of n_trunc, k_max, tol_coeff, tol_psd,
// tol_angle, grid, seed, allow_standin; missing keys keep `base` values.
RunConfig parseConfigJson(const std::string& text, const RunConfig& base = {});
RunConfig loadConfig(const std::string& path, const RunConfig& base = {});
std::string configToJson(const RunConfig& c);

}  // namespace btop
