#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace g2forge::cli {

const std::vector<std::string>& eval_operations();

/// Evaluates `op` on parsed JSON form documents. Throws g2forge::Error
/// subclasses on parse or precondition failures.
nlohmann::json evaluate(const std::string& op, const std::vector<nlohmann::json>& inputs);

}  // namespace g2forge::cli
