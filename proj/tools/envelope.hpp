#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "easyq/exact_matrix.hpp"
#include "easyq/rational.hpp"

namespace easyq::cli {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view version = "0.1.0";

std::uint64_t fnv1a(std::string_view data, std::uint64_t hash = 0xcbf29ce484222325ULL);

/// Hash of the argument list, each argument terminated by a unit separator.
std::string input_hash(std::vector<std::string> const& args);

struct Provenance {
  std::string kind = "exact";
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;
  double std_error = 0;

  static Provenance exact() { return {}; }
  static Provenance monte_carlo(std::uint64_t seed, std::uint64_t samples, double std_error);
  Json to_json() const;
};

struct Outcome {
  Json payload = Json::object();
  Provenance provenance;
  /// Non-empty defects turn into exit code 1.
  std::vector<std::string> defects;
  /// Plain-text output replacing the envelope (one item per line).
  std::vector<std::string> lines;
  bool plain = false;
};

Json exact(Rational const& value);
Json exact_matrix(ExactMatrix const& m);

Json envelope(std::vector<std::string> const& args, Outcome const& outcome);

/// Compact JSON with doubles written to 17 significant digits.
std::string dump(Json const& value);

}  // namespace easyq::cli
