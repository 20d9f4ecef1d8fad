#include "g2forge/io.hpp"

#include <string>

namespace g2forge::io {

namespace {

const json& require(const json& j, const char* key) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}

std::string require_string(const json& j, const char* key) {
  const json& v = require(j, key);
  if (!v.is_string()) throw ParseError(std::string("field '") + key + "' must be a decimal string");
  return v.get<std::string>();
}

std::string optional_string(const json& j, const char* key, const char* fallback) {
  auto it = j.find(key);
  if (it == j.end()) return fallback;
  if (!it->is_string()) throw ParseError(std::string("field '") + key + "' must be a decimal string");
  return it->get<std::string>();
}

template <class T>
json form_json(const Form<T>& f) {
  json terms = json::array();
  for (const auto& [m, c] : f.terms()) terms.push_back({{"indices", Blade{m}.indices()}, {"coeff", to_json(c)}});
  return {{"grade", f.grade()}, {"terms", terms}};
}

}  // namespace

json to_json(const Rational& r) { return {{"num", r.num_str()}, {"den", r.den_str()}}; }

json to_json(const QuadExt& q) {
  json j = to_json(q.rat());
  if (!q.is_rational()) {
    j["irr_num"] = q.irr().num_str();
    j["irr_den"] = q.irr().den_str();
  }
  return j;
}

json to_json(const GaussRational& g) { return {{"re", to_json(g.re())}, {"im", to_json(g.im())}}; }

QuadExt quadext_from_json(const json& j) {
  const Rational rat = Rational::from_strings(require_string(j, "num"), require_string(j, "den"));
  const Rational irr =
      Rational::from_strings(optional_string(j, "irr_num", "0"), optional_string(j, "irr_den", "1"));
  return {rat, irr};
}

Rational rational_from_json(const json& j) {
  const QuadExt q = quadext_from_json(j);
  if (!q.is_rational()) throw ParseError("a rational scalar was expected but irr_num is nonzero");
  return q.rat();
}

json to_json(const Form<Rational>& f) { return form_json(f); }
json to_json(const Form<QuadExt>& f) { return form_json(f); }

Form<Rational> form_from_json(const json& j) {
  const json& g = require(j, "grade");
  if (!g.is_number_integer()) throw ParseError("grade must be an integer");
  const int grade = g.get<int>();
  if (grade < 0 || grade > kDim) throw ParseError("grade must lie in 0..7");
  const json& terms = require(j, "terms");
  if (!terms.is_array()) throw ParseError("terms must be an array");
  Form<Rational> f(grade);
  std::uint8_t seen[128] = {};
  std::size_t n = 0;
  for (const auto& t : terms) {
    const std::string where = "terms[" + std::to_string(n++) + "]";
    try {
      const json& idx = require(t, "indices");
      if (!idx.is_array()) throw ParseError("indices must be an array");
      if (static_cast<int>(idx.size()) != grade) throw ParseError("term has " + std::to_string(idx.size()) +
                                                                  " indices in a grade-" + std::to_string(grade) + " form");
      std::uint8_t mask = 0;
      int prev = 0;
      for (const auto& i : idx) {
        if (!i.is_number_integer()) throw ParseError("indices must be integers");
        const int k = i.get<int>();
        if (k < 1 || k > kDim) throw ParseError("index " + std::to_string(k) + " outside 1..7");
        if (k == prev) throw ParseError("duplicate index " + std::to_string(k));
        if (k < prev) throw ParseError("indices must be strictly increasing");
        prev = k;
        mask |= static_cast<std::uint8_t>(1U << (k - 1));
      }
      if (seen[mask]++) throw ParseError("blade listed twice: " + blade_name(Blade{mask}));
      f.add_term(mask, rational_from_json(require(t, "coeff")));
    } catch (const Error& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  return f;
}

json to_json(const Matrix<Rational>& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

json to_json(const Su3Element<Rational>& xi) {
  json v = json::array();
  json x = json::array();
  for (const auto& c : xi.v) v.push_back(to_json(c));
  for (const auto& c : xi.x) x.push_back(to_json(c));
  return {{"v", v}, {"x", x}};
}

Su3Element<Rational> su3_from_json(const json& j) {
  const json& v = require(j, "v");
  const json& x = require(j, "x");
  if (!v.is_array() || v.size() != 3) throw ParseError("v must be an array of 3 scalars");
  if (!x.is_array() || x.size() != 6) throw ParseError("x must be an array of 6 scalars");
  std::array<Rational, 3> vv;
  std::array<Rational, 6> xx;
  auto entry = [](const json& a, const char* name, int k) {
    try {
      return rational_from_json(a[k]);
    } catch (const Error& e) {
      throw ParseError(std::string(name) + "[" + std::to_string(k) + "]: " + e.what());
    }
  };
  for (int k = 0; k < 3; ++k) vv[k] = entry(v, "v", k);
  for (int k = 0; k < 6; ++k) xx[k] = entry(x, "x", k);
  return Su3Element<Rational>(vv, xx);
}

json to_json(const Split2<Rational>& s) { return {{"7", to_json(s.a7)}, {"14", to_json(s.a14)}}; }

json to_json(const Split34<Rational>& s) {
  return {{"1", to_json(s.a1)}, {"7", to_json(s.a7)}, {"27", to_json(s.a27)}};
}

json to_json(const CubicReport<Rational>& r) {
  return {{"input", to_json(r.input)}, {"components", to_json(r.components)}, {"Q2", to_json(r.q2)},
          {"Q", to_json(r.q)}};
}

json to_json(const IdentityReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    json j = {{"id", c.id}, {"display", c.display}, {"holds", c.holds}, {"points", c.points}};
    if (!c.detail.empty()) j["detail"] = c.detail;
    checks.push_back(j);
  }
  return {{"all_hold", r.all_hold()}, {"checks", checks}};
}

}  // namespace g2forge::io
