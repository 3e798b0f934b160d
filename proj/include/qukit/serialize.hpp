#pragma once

#include "qukit/cauchy.hpp"
#include "qukit/dynamics.hpp"
#include "qukit/frame.hpp"
#include "qukit/numeral.hpp"
#include "qukit/superposition.hpp"

#include <json.hpp>

#include <set>
#include <string>

namespace qukit {

using json = nlohmann::ordered_json;

/// Strict reader over one JSON object. Missing, mistyped and (on finish)
/// unconsumed keys raise ConfigError.
class ConfigReader {
 public:
  ConfigReader(const json& obj, std::string where);

  bool has(const std::string& key) const;
  const json& raw(const std::string& key);

  int get_int(const std::string& key);
  int get_int(const std::string& key, int fallback);
  double get_double(const std::string& key);
  double get_double(const std::string& key, double fallback);
  bool get_bool(const std::string& key, bool fallback);
  std::string get_string(const std::string& key);
  std::string get_string(const std::string& key, const std::string& fallback);
  ConfigReader child(const std::string& key);

  /// Marks a key as known without reading it.
  void allow(const std::string& key);
  void finish() const;

  const std::string& where() const noexcept { return where_; }

 private:
  const json& obj_;
  std::string where_;
  std::set<std::string> seen_;
};

json to_json(const NumeralState& a);
/// Record {k, gamma, digits, m}.
NumeralState numeral_from_json(const json& j);
/// A numeral record, or a compact string read in base `k`.
NumeralState numeral_from_spec(const json& j, int k);

/// [{label, re, im}, ...]
json to_json(const StringSuperposition& s);
/// Rejects norm^2 outside 1 +- 1e-6 with NotNormalized unless `allow_unnormalized`.
StringSuperposition superposition_from_json(const json& j, bool allow_unnormalized = false);

json to_json(const PeriodicExpansion& e);
json to_json(const CauchyVerdict& v);
json to_json(const ProbabilityEstimate& p);
json to_json(const EnergySequenceReport& r);
json to_json(const Lattice& lat);
json to_json(const FrameId& f);
FrameId frame_from_json(const json& j);
/// {kind, ...} topology descriptor.
Topology topology_from_json(const json& j);
/// {topology, frames: [{j, k, g, gauge?}]}
FrameGraph frame_graph_from_json(const json& j);

/// Sequence descriptor: {family: constant|truncation|alternating|superposed|padded, ...}.
NumeralSequence sequence_from_json(const json& j);

}  // namespace qukit
