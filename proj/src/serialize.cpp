#include "qukit/serialize.hpp"

#include "qukit/errors.hpp"

#include <cmath>

namespace qukit {

ConfigReader::ConfigReader(const json& obj, std::string where) : obj_(obj), where_(std::move(where)) {
  if (!obj_.is_object()) fail(Errc::ConfigError, where_ + " must be an object");
}

bool ConfigReader::has(const std::string& key) const { return obj_.contains(key); }

const json& ConfigReader::raw(const std::string& key) {
  if (!obj_.contains(key)) fail(Errc::ConfigError, "missing key " + where_ + "." + key);
  seen_.insert(key);
  return obj_.at(key);
}

int ConfigReader::get_int(const std::string& key) {
  const json& v = raw(key);
  if (!v.is_number_integer()) fail(Errc::ConfigError, where_ + "." + key + " must be an integer");
  const auto i = v.get<std::int64_t>();
  if (i < INT32_MIN || i > INT32_MAX) fail(Errc::ConfigError, where_ + "." + key + " out of integer range");
  return static_cast<int>(i);
}

int ConfigReader::get_int(const std::string& key, int fallback) {
  return has(key) ? get_int(key) : fallback;
}

double ConfigReader::get_double(const std::string& key) {
  const json& v = raw(key);
  if (!v.is_number()) fail(Errc::ConfigError, where_ + "." + key + " must be a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) fail(Errc::ConfigError, where_ + "." + key + " must be finite");
  return d;
}

double ConfigReader::get_double(const std::string& key, double fallback) {
  return has(key) ? get_double(key) : fallback;
}

bool ConfigReader::get_bool(const std::string& key, bool fallback) {
  if (!has(key)) return fallback;
  const json& v = raw(key);
  if (!v.is_boolean()) fail(Errc::ConfigError, where_ + "." + key + " must be a boolean");
  return v.get<bool>();
}

std::string ConfigReader::get_string(const std::string& key) {
  const json& v = raw(key);
  if (!v.is_string()) fail(Errc::ConfigError, where_ + "." + key + " must be a string");
  return v.get<std::string>();
}

std::string ConfigReader::get_string(const std::string& key, const std::string& fallback) {
  return has(key) ? get_string(key) : fallback;
}

ConfigReader ConfigReader::child(const std::string& key) { return ConfigReader(raw(key), where_ + "." + key); }

void ConfigReader::allow(const std::string& key) { seen_.insert(key); }

void ConfigReader::finish() const {
  for (const auto& [key, v] : obj_.items()) {
    if (!seen_.contains(key)) fail(Errc::ConfigError, "unknown key " + where_ + "." + key);
  }
}

// ---------------------------------------------------------------------------

json to_json(const NumeralState& a) {
  json digits = json::array();
  for (auto d : a.digits()) digits.push_back(d);
  return json{{"k", a.base()}, {"gamma", std::string(1, sign_char(a.sign()))}, {"digits", digits}, {"m", a.point()}};
}

NumeralState numeral_from_json(const json& j) {
  ConfigReader r(j, "numeral");
  const int k = r.get_int("k");
  const std::string g = r.get_string("gamma");
  if (g != "+" && g != "-") fail(Errc::ParseError, "gamma must be \"+\" or \"-\"");
  const json& dj = r.raw("digits");
  if (!dj.is_array()) fail(Errc::ConfigError, "numeral.digits must be an array");
  std::vector<std::uint8_t> digits;
  for (const auto& d : dj) {
    if (!d.is_number_integer() || d.get<std::int64_t>() < 0 || d.get<std::int64_t>() >= k) {
      fail(Errc::ParseError, "digit out of range for base " + std::to_string(k));
    }
    digits.push_back(static_cast<std::uint8_t>(d.get<int>()));
  }
  const int m = r.get_int("m");
  r.finish();
  return NumeralState(k, g == "+" ? Sign::Plus : Sign::Minus, std::move(digits), m);
}

NumeralState numeral_from_spec(const json& j, int k) {
  if (j.is_string()) return parse_compact(j.get<std::string>(), k);
  NumeralState a = numeral_from_json(j);
  if (a.base() != k) fail(Errc::BaseMismatch, "state has base " + std::to_string(a.base()) + ", expected " + std::to_string(k));
  return a;
}

json to_json(const StringSuperposition& s) {
  json out = json::array();
  for (const auto& [label, c] : s.terms()) {
    out.push_back(json{{"label", to_json(label)}, {"re", c.real()}, {"im", c.imag()}});
  }
  return out;
}

StringSuperposition superposition_from_json(const json& j, bool allow_unnormalized) {
  if (!j.is_array() || j.empty()) fail(Errc::ConfigError, "superposition must be a nonempty array");
  std::optional<StringSuperposition> s;
  for (const auto& term : j) {
    ConfigReader r(term, "term");
    const NumeralState label = numeral_from_json(r.raw("label"));
    const double re = r.get_double("re");
    const double im = r.get_double("im", 0.0);
    r.finish();
    if (!s) s.emplace(label.base());
    if (label.base() != s->base()) fail(Errc::BaseMismatch, "superposition mixes bases");
    s->add(label, Amplitude(re, im));
  }
  const double n2 = s->norm2();
  if (!allow_unnormalized && std::abs(n2 - 1.0) > 1e-6) {
    fail(Errc::NotNormalized, "norm^2 = " + std::to_string(n2));
  }
  return *s;
}

namespace {

json digit_array(const std::vector<std::uint8_t>& d) {
  json a = json::array();
  for (auto x : d) a.push_back(x);
  return a;
}

json rational(const RationalValue& v) { return to_string(v); }

}  // namespace

json to_json(const PeriodicExpansion& e) {
  return json{{"k", e.base},
              {"gamma", std::string(1, sign_char(e.sign))},
              {"integer_digits", digit_array(e.integer_digits)},
              {"preperiod", digit_array(e.preperiod)},
              {"period", digit_array(e.period)},
              {"finite", e.finite()},
              {"text", e.to_string()}};
}

json to_json(const CauchyVerdict& v) {
  json per = json::array();
  for (const auto& e : v.per_ell) {
    per.push_back(json{{"ell", e.ell},
                       {"p", e.p ? json(*e.p) : json(nullptr)},
                       {"max_deviation", rational(e.max_deviation)},
                       {"status", to_string(e.status)}});
  }
  return json{{"status", to_string(v.status)},
              {"ell_max", v.ell_max},
              {"p_max", v.p_max},
              {"declared_modulus", v.used_declared_modulus},
              {"failing_ell", v.failing_ell ? json(*v.failing_ell) : json(nullptr)},
              {"worst_deviation", rational(v.worst_deviation)},
              {"per_ell", per}};
}

json to_json(const ProbabilityEstimate& p) {
  return json{{"estimate", p.estimate}, {"ell_max", p.ell_max}, {"p_max", p.p_max}, {"per_ell", p.per_ell}};
}

json to_json(const EnergySequenceReport& r) {
  return json{{"verdict", to_string(r.verdict)},
              {"n_max", r.n_max},
              {"tail_start", r.tail_start},
              {"tolerance", r.tolerance},
              {"tail_spread", r.tail_spread},
              {"previous_quarter_spread", r.previous_quarter_spread},
              {"last_quarter_spread", r.last_quarter_spread},
              {"monotone_nondecreasing", r.monotone_nondecreasing},
              {"energies", r.energies}};
}

json to_json(const FrameId& f) { return json{{"j", f.j}, {"k", f.k}, {"g", f.g}}; }

json to_json(const Lattice& lat) {
  return json{{"frame", to_json(lat.frame())},
              {"L", lat.length()},
              {"m", lat.point()},
              {"D", lat.dims()},
              {"points_per_dim", lat.points_per_dim().str()},
              {"spacing", rational(lat.spacing())}};
}

FrameId frame_from_json(const json& j) {
  ConfigReader r(j, "frame");
  FrameId f;
  f.j = r.get_int("j", 0);
  f.k = r.get_int("k");
  f.g = r.get_string("g", "0");
  r.allow("gauge");
  r.finish();
  return f;
}

Topology topology_from_json(const json& j) {
  ConfigReader r(j, "topology");
  const std::string kind = r.get_string("kind");
  Topology t = topology::TwoWayInfinite{};
  if (kind == "finite-chain") {
    t = topology::FiniteChain{r.get_int("j_min"), r.get_int("j_max")};
  } else if (kind == "one-way-infinite") {
    const int anchor = r.get_int("anchor", 0);
    const std::string dir = r.get_string("direction", "ascending");
    if (dir != "ascending" && dir != "descending") fail(Errc::ConfigError, "direction must be ascending|descending");
    t = topology::OneWayInfinite{anchor, dir == "ascending" ? topology::Direction::Ascending
                                                            : topology::Direction::Descending};
  } else if (kind == "cyclic") {
    t = topology::Cyclic{r.get_int("period")};
  } else if (kind != "two-way-infinite") {
    fail(Errc::ConfigError, "unknown topology kind '" + kind + "'");
  }
  r.finish();
  return t;
}

namespace {

std::vector<Amplitude> amplitude_list(const json& j, const std::string& where) {
  if (!j.is_array()) fail(Errc::ConfigError, where + " must be an array");
  std::vector<Amplitude> out;
  for (const auto& e : j) {
    if (e.is_number()) {
      out.emplace_back(e.get<double>(), 0.0);
    } else if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
      out.emplace_back(e[0].get<double>(), e[1].get<double>());
    } else {
      fail(Errc::ConfigError, where + " entries must be numbers or [re, im] pairs");
    }
  }
  return out;
}

}  // namespace

FrameGraph frame_graph_from_json(const json& j) {
  ConfigReader r(j, "frames");
  FrameGraph g(topology_from_json(r.raw("topology")));
  const json& list = r.raw("frames");
  if (!list.is_array()) fail(Errc::ConfigError, "frames.frames must be an array");
  for (const auto& fj : list) {
    const FrameId f = frame_from_json(fj);
    std::optional<GaugeMap> gauge;
    if (fj.contains("gauge")) {
      ConfigReader gr(fj.at("gauge"), "gauge");
      auto q = amplitude_list(gr.raw("qukit"), "gauge.qukit");
      std::optional<std::vector<Amplitude>> s;
      if (gr.has("sign")) s = amplitude_list(gr.raw("sign"), "gauge.sign");
      gr.finish();
      gauge.emplace(f.k, std::move(q), std::move(s));
    }
    g.add(f, std::move(gauge));
  }
  r.allow("queries");
  r.finish();
  return g;
}

NumeralSequence sequence_from_json(const json& j) {
  ConfigReader r(j, "sequence");
  const std::string family = r.get_string("family");
  std::optional<NumeralSequence> out;
  if (family == "constant") {
    const int k = r.get_int("k");
    out.emplace(sequences::constant(numeral_from_spec(r.raw("state"), k)));
  } else if (family == "truncation") {
    const int k = r.get_int("k");
    const RationalValue v = parse_rational(r.get_string("value"));
    out.emplace(sequences::truncation(v, k));
  } else if (family == "alternating") {
    const int k = r.get_int("k");
    out.emplace(sequences::alternating(numeral_from_spec(r.raw("a"), k), numeral_from_spec(r.raw("b"), k)));
  } else if (family == "superposed") {
    const auto weights = amplitude_list(r.raw("weights"), "sequence.weights");
    const json& fams = r.raw("families");
    if (!fams.is_array()) fail(Errc::ConfigError, "sequence.families must be an array");
    std::vector<NumeralSequence> parts;
    for (const auto& f : fams) parts.push_back(sequence_from_json(f));
    out.emplace(sequences::superposed(weights, std::move(parts)));
  } else if (family == "padded") {
    NumeralSequence src = sequence_from_json(r.raw("source"));
    out.emplace(sequences::padded(src, r.get_int("leading", 0), r.get_int("trailing", 0)));
  } else {
    fail(Errc::ConfigError, "unknown sequence family '" + family + "'");
  }
  r.finish();
  return *out;
}

}  // namespace qukit
