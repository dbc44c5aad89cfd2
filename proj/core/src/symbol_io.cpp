#include "btop/symbol_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json_util.hpp"

namespace btop {

namespace {

Json parseText(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(what + ": " + e.what());
  }
}

std::string readFile(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void writeFile(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ParseError("cannot open " + path + " for writing");
  f << text;
  if (!text.empty() && text.back() != '\n') f << '\n';
  if (!f) throw ParseError("write failed for " + path);
}

}  // namespace

LaurentSymbol parseSymbolJson(const std::string& text) {
  Json j = parseText(text, "symbol");
  try {
    if (!j.is_object() || !j.contains("n") || !j.contains("coeffs"))
      throw ParseError("symbol: expected fields n and coeffs");
    if (!j.at("n").is_number_integer())
      throw ParseError("symbol: n must be an integer");
    int n = j.at("n").get<int>();
    if (n < 1 || n > 1024) throw ParseError("symbol: n out of range");
    bool bounded = j.value("bounded_type", true);
    LaurentSymbol s(n, bounded ? BoundedType::bounded
                               : BoundedType::not_bounded_type_standin);
    if (!j.at("coeffs").is_array())
      throw ParseError("symbol: coeffs must be an array");
    std::set<int> seen;
    for (const Json& item : j.at("coeffs")) {
      if (!item.is_object() || !item.contains("k") ||
          !item.at("k").is_number_integer())
        throw ParseError("symbol: each coefficient needs an integer k");
      int k = item.at("k").get<int>();
      if (!seen.insert(k).second)
        throw ParseError("symbol: duplicate coefficient k=" + std::to_string(k));
      CMat m = matrixFromJson(item, "symbol coefficient k=" + std::to_string(k));
      if (m.rows() != n || m.cols() != n)
        throw ParseError("symbol: coefficient shape does not match n");
      s.setCoeff(k, m);
    }
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("symbol: ") + e.what());
  }
}

std::string symbolToJson(const LaurentSymbol& s) {
  Json j;
  j["n"] = s.dim();
  j["bounded_type"] = !s.isStandin();
  Json coeffs = Json::array();
  for (const auto& [k, m] : s.coeffs()) {
    Json item;
    item["k"] = k;
    Json mat = matrixToJson(m);
    item["re"] = std::move(mat["re"]);
    item["im"] = std::move(mat["im"]);
    coeffs.push_back(std::move(item));
  }
  j["coeffs"] = std::move(coeffs);
  return j.dump(2);
}

LaurentSymbol loadSymbol(const std::string& path) {
  return parseSymbolJson(readFile(path));
}

void saveSymbol(const LaurentSymbol& s, const std::string& path) {
  writeFile(path, symbolToJson(s));
}

PotapovProduct parsePotapovJson(const std::string& text) {
  Json j = parseText(text, "potapov");
  try {
    if (!j.is_object() || !j.contains("v") || !j.contains("factors"))
      throw ParseError("potapov: expected fields v and factors");
    CMat v = matrixFromJson(j.at("v"), "potapov leading unitary");
    if (!j.at("factors").is_array())
      throw ParseError("potapov: factors must be an array");
    std::vector<BlaschkeFactor> fs;
    for (const Json& item : j.at("factors")) {
      if (!item.is_object() || !item.contains("alpha") || !item.contains("P"))
        throw ParseError("potapov: each factor needs alpha and P");
      const Json& a = item.at("alpha");
      if (!a.is_object() || !a.contains("re") || !a.contains("im") ||
          !a.at("re").is_number() || !a.at("im").is_number())
        throw ParseError("potapov: alpha must be {re, im}");
      Cplx alpha(a.at("re").get<double>(), a.at("im").get<double>());
      CMat p = matrixFromJson(item.at("P"), "potapov factor projection");
      fs.emplace_back(alpha, std::move(p));
    }
    return PotapovProduct(std::move(v), std::move(fs));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("potapov: ") + e.what());
  }
}

std::string potapovToJson(const PotapovProduct& q) {
  Json j;
  j["v"] = matrixToJson(q.leading());
  Json factors = Json::array();
  for (const auto& f : q.factors()) {
    Json item;
    item["alpha"] = Json{{"re", f.alpha.real()}, {"im", f.alpha.imag()}};
    item["P"] = matrixToJson(f.projection);
    factors.push_back(std::move(item));
  }
  j["factors"] = std::move(factors);
  return j.dump(2);
}

PotapovProduct loadPotapov(const std::string& path) {
  return parsePotapovJson(readFile(path));
}

void savePotapov(const PotapovProduct& q, const std::string& path) {
  writeFile(path, potapovToJson(q));
}

RunConfig parseConfigJson(const std::string& text, const RunConfig& base) {
  Json j = parseText(text, "config");
  if (!j.is_object()) throw ParseError("config: expected an object");
  RunConfig c = base;
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "n_trunc") c.nTrunc = value.get<int>();
      else if (key == "k_max") c.kMax = value.get<int>();
      else if (key == "tol_coeff") c.tolCoeff = value.get<double>();
      else if (key == "tol_psd") c.tolPsd = value.get<double>();
      else if (key == "tol_angle") c.tolAngle = value.get<double>();
      else if (key == "grid") c.gridSize = value.get<int>();
      else if (key == "seed") c.seed = value.get<std::uint64_t>();
      else if (key == "allow_standin") c.allowStandin = value.get<bool>();
      else throw ParseError("config: unknown key " + key);
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("config: ") + e.what());
  }
  if (c.nTrunc < 1 || c.kMax < 0 || c.gridSize < 1)
    throw ParseError("config: sizes must be positive");
  return c;
}

RunConfig loadConfig(const std::string& path, const RunConfig& base) {
  return parseConfigJson(readFile(path), base);
}

std::string configToJson(const RunConfig& c) {
  Json j;
  j["n_trunc"] = c.nTrunc;
  j["k_max"] = c.kMax;
  j["tol_coeff"] = c.tolCoeff;
  j["tol_psd"] = c.tolPsd;
  j["tol_angle"] = c.tolAngle;
  j["grid"] = c.gridSize;
  j["seed"] = c.seed;
  j["allow_standin"] = c.allowStandin;
  return j.dump(2);
}

}  // namespace btop
