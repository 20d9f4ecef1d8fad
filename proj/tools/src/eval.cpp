#include "eval.hpp"

#include <algorithm>

#include "g2forge/cubic.hpp"
#include "g2forge/g2.hpp"
#include "g2forge/io.hpp"

namespace g2forge::cli {

using json = nlohmann::json;

namespace {

Form<Rational> expect_grade(const json& j, int grade, const std::string& what) {
  Form<Rational> f = io::form_from_json(j);
  if (f.grade() != grade)
    throw GradeError(what + " expects a " + std::to_string(grade) + "-form, got grade " + std::to_string(f.grade()));
  return f;
}

void expect_inputs(const std::string& op, const std::vector<json>& inputs, std::size_t lo, std::size_t hi) {
  if (inputs.size() < lo || inputs.size() > hi)
    throw ParseError(op + " takes " + (lo == hi ? std::to_string(lo) : std::to_string(lo) + " or " + std::to_string(hi)) +
                     " input file(s), got " + std::to_string(inputs.size()));
}

}  // namespace

const std::vector<std::string>& eval_operations() {
  static const std::vector<std::string> ops = {"q2", "b2", "Q", "P", "hat", "project"};
  return ops;
}

json evaluate(const std::string& op, const std::vector<json>& inputs) {
  const auto& ops = eval_operations();
  if (std::find(ops.begin(), ops.end(), op) == ops.end()) throw ParseError("unknown operation '" + op + "'");
  json out = {{"op", op}};
  if (op == "q2") {
    expect_inputs(op, inputs, 1, 1);
    const auto r = cubic_report(expect_grade(inputs[0], 4, op));
    out["result"] = io::to_json(r.q2);
    out["Q"] = io::to_json(r.q);
  } else if (op == "b2") {
    expect_inputs(op, inputs, 1, 2);
    const Form<Rational> a1 = expect_grade(inputs[0], 4, op);
    const Form<Rational> a2 = inputs.size() == 2 ? expect_grade(inputs[1], 4, op) : a1;
    out["result"] = io::to_json(b2_full(a1, a2));
  } else if (op == "Q") {
    expect_inputs(op, inputs, 1, 1);
    out["result"] = io::to_json(Q_cubic(expect_grade(inputs[0], 4, op)));
  } else if (op == "P") {
    expect_inputs(op, inputs, 1, 1);
    const Form<Rational> b = expect_grade(inputs[0], 3, op);
    const Rational p = P_unnormalized(b);
    out["result"] = io::to_json(p);
    out["P_cubic"] = io::to_json(P_cubic(b));
  } else if (op == "hat") {
    expect_inputs(op, inputs, 1, 1);
    out["result"] = io::to_json(hat(expect_grade(inputs[0], 4, op)));
  } else {
    expect_inputs(op, inputs, 1, 1);
    const Form<Rational> f = io::form_from_json(inputs[0]);
    const auto& frame = G2Frame<Rational>::instance();
    switch (f.grade()) {
      case 2: out["result"] = io::to_json(frame.project2(f)); break;
      case 3: out["result"] = io::to_json(frame.project3(f)); break;
      case 4: out["result"] = io::to_json(frame.project4(f)); break;
      default: throw GradeError("project expects a 2-, 3- or 4-form, got grade " + std::to_string(f.grade()));
    }
  }
  return out;
}

}  // namespace g2forge::cli
