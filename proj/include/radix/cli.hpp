#pragma once

// Job runner behind the command-line tool. Reports are ordered JSON so that
// identical inputs give identical bytes.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "radix/splitting_algebra.hpp"

namespace radix {

inline constexpr const char* kSchema = "radix-hopf/1";

struct JobSpec {
  std::string command;  // analyze, enumerate, assoc-order, freeness, product, padic, rank
  std::vector<RadicalDescriptor> radicals;
  std::optional<unsigned long> exponent;  // rank and multi-radical analyze
  std::vector<BigRational> radicands;
  std::optional<BigInt> p;
  std::string format = "json";  // json or table
  std::string basis = "eigen";  // eigen, hnf or both
  std::size_t cap = 8;
};

struct RunResult {
  int exit_code = 0;  // 0 ok, 2 certified negative verdict, 1 malformed input
  nlohmann::ordered_json report;
};

RunResult run_job(const JobSpec& job);

/// JSON text, or "path: value" lines for the table format.
std::string render(const nlohmann::ordered_json& report, const std::string& format);

}  // namespace radix
