#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "kleind/polynomial.hpp"

namespace kleind {

struct VerifyOptions {
  unsigned max_deg = 40;        // preservation checks run x^m (or x^{2m}) for m <= max_deg
  unsigned random_words = 50;   // pbw suite sample size
  unsigned random_elements = 20;  // star suite sample size
  std::uint32_t seed = 20240611;
};

struct CheckResult {
  std::string suite;
  std::string identity;
  bool pass = false;
  nlohmann::json residual;  // null on success
};

/// relations, gwa, nilhecke, flag, invariance, structure, pbw, star
const std::vector<std::string_view>& verify_suite_names();

/// Runs one suite; throws InvalidArgument for an unknown name.
std::vector<CheckResult> run_suite(std::string_view suite, const Polynomial& q, const VerifyOptions& options = {});

/// Runs every suite, or only the named one.
std::vector<CheckResult> verify_all(const Polynomial& q, const VerifyOptions& options = {},
                                    std::optional<std::string_view> only = std::nullopt);

bool all_pass(const std::vector<CheckResult>& results);

/// [{"suite", "identity", "pass", "residual"}]
nlohmann::json verify_report(const std::vector<CheckResult>& results);

}  // namespace kleind
