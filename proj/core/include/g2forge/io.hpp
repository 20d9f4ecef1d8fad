#pragma once

// JSON documents:
//   scalar  {"num": "p", "den": "q", "irr_num": "a", "irr_den": "b"}   value p/q + (a/b) sqrt10
//   form    {"grade": k, "terms": [{"indices": [i1 < ... < ik], "coeff": scalar}]}
//   su(3)   {"v": [v1, v2, v3], "x": [x1, ..., x6]}

#include <nlohmann/json.hpp>

#include "g2forge/aw.hpp"
#include "g2forge/cubic.hpp"
#include "g2forge/exterior.hpp"
#include "g2forge/g2.hpp"
#include "g2forge/scalars.hpp"

namespace g2forge::io {

using json = nlohmann::json;

json to_json(const Rational& r);
json to_json(const QuadExt& q);
json to_json(const GaussRational& g);  ///< {"re": scalar, "im": scalar}

QuadExt quadext_from_json(const json& j);
/// Rejects a nonzero irrational part.
Rational rational_from_json(const json& j);

json to_json(const Form<Rational>& f);
json to_json(const Form<QuadExt>& f);
Form<Rational> form_from_json(const json& j);

json to_json(const Matrix<Rational>& m);
json to_json(const Su3Element<Rational>& xi);
Su3Element<Rational> su3_from_json(const json& j);

json to_json(const Split2<Rational>& s);
json to_json(const Split34<Rational>& s);
json to_json(const CubicReport<Rational>& r);
json to_json(const IdentityReport& r);

}  // namespace g2forge::io
