#include "envelope.hpp"

#include <cmath>
#include <cstdio>
#include <iomanip>
#include <sstream>

namespace easyq::cli {

std::uint64_t fnv1a(std::string_view data, std::uint64_t hash) {
  for (unsigned char c : data) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

std::string input_hash(std::vector<std::string> const& args) {
  std::uint64_t h = fnv1a("");
  for (auto const& a : args) {
    h = fnv1a(a, h);
    h = fnv1a("\x1f", h);
  }
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << h;
  return out.str();
}

Provenance Provenance::monte_carlo(std::uint64_t seed, std::uint64_t samples, double std_error) {
  Provenance p;
  p.kind = "monte-carlo";
  p.seed = seed;
  p.samples = samples;
  p.std_error = std_error;
  return p;
}

Json Provenance::to_json() const {
  Json j = {{"kind", kind}};
  if (kind != "exact") {
    j["seed"] = seed;
    j["samples"] = samples;
    j["stderr"] = std_error;
  }
  return j;
}

Json exact(Rational const& value) { return to_string(value); }

Json exact_matrix(ExactMatrix const& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json envelope(std::vector<std::string> const& args, Outcome const& outcome) {
  Json j;
  j["command"] = args;
  j["inputHash"] = input_hash(args);
  for (auto const& [key, value] : outcome.payload.items()) j[key] = value;
  j["provenance"] = outcome.provenance.to_json();
  if (!outcome.defects.empty()) j["defects"] = outcome.defects;
  j["version"] = version;
  return j;
}

namespace {

void write(Json const& value, std::string& out) {
  switch (value.type()) {
    case Json::value_t::number_float: {
      double const x = value.get<double>();
      if (!std::isfinite(x)) {
        out += "null";
        return;
      }
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", x);
      out += buf;
      return;
    }
    case Json::value_t::array: {
      out += '[';
      bool first = true;
      for (auto const& v : value) {
        if (!first) out += ',';
        first = false;
        write(v, out);
      }
      out += ']';
      return;
    }
    case Json::value_t::object: {
      out += '{';
      bool first = true;
      for (auto const& [k, v] : value.items()) {
        if (!first) out += ',';
        first = false;
        out += Json(k).dump();
        out += ':';
        write(v, out);
      }
      out += '}';
      return;
    }
    default:
      out += value.dump();
  }
}

}  // namespace

std::string dump(Json const& value) {
  std::string out;
  write(value, out);
  return out;
}

}  // namespace easyq::cli
