#pragma once

#include <string>

#include "btop/types.hpp"
#include "json.hpp"

namespace btop {

using Json = nlohmann::ordered_json;

inline Json matrixToJson(const CMat& m) {
  Json re = Json::array(), im = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json rowRe = Json::array(), rowIm = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      rowRe.push_back(m(i, j).real());
      rowIm.push_back(m(i, j).imag());
    }
    re.push_back(std::move(rowRe));
    im.push_back(std::move(rowIm));
  }
  return Json{{"re", std::move(re)}, {"im", std::move(im)}};
}

inline CMat matrixFromJson(const Json& j, const std::string& what) {
  if (!j.is_object() || !j.contains("re") || !j.contains("im"))
    throw ParseError(what + ": expected an object with re and im arrays");
  const Json& re = j.at("re");
  const Json& im = j.at("im");
  if (!re.is_array() || !im.is_array() || re.size() != im.size())
    throw ParseError(what + ": re and im must be arrays of equal shape");
  Eigen::Index rows = static_cast<Eigen::Index>(re.size());
  Eigen::Index cols = rows ? static_cast<Eigen::Index>(re.at(0).size()) : 0;
  CMat m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const Json& rowRe = re.at(static_cast<size_t>(i));
    const Json& rowIm = im.at(static_cast<size_t>(i));
    if (!rowRe.is_array() || !rowIm.is_array() ||
        static_cast<Eigen::Index>(rowRe.size()) != cols ||
        static_cast<Eigen::Index>(rowIm.size()) != cols)
      throw ParseError(what + ": ragged matrix rows");
    for (Eigen::Index k = 0; k < cols; ++k) {
      const Json& a = rowRe.at(static_cast<size_t>(k));
      const Json& b = rowIm.at(static_cast<size_t>(k));
      if (!a.is_number() || !b.is_number())
        throw ParseError(what + ": matrix entries must be numbers");
      m(i, k) = Cplx(a.get<double>(), b.get<double>());
    }
  }
  return m;
}

inline Json vectorToJson(const CVec& v) {
  Json re = Json::array(), im = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    re.push_back(v(i).real());
    im.push_back(v(i).imag());
  }
  return Json{{"re", std::move(re)}, {"im", std::move(im)}};
}

}  // namespace btop
