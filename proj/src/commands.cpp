#include "qukit/commands.hpp"

#include "qukit/errors.hpp"

#include <map>
#include <set>

namespace qukit {

namespace {

using Records = std::vector<json>;

void allow_globals(ConfigReader& r) {
  for (const char* k : {"seed", "format", "output"}) r.allow(k);
}

json compact(const NumeralState& a) { return format_compact(a); }

// {"record": name} followed by the fields of `body`.
json tagged(const std::string& name, const json& body) {
  json out{{"record", name}};
  for (const auto& [k, v] : body.items()) out[k] = v;
  return out;
}

Lattice lattice_from(ConfigReader& r) {
  FrameId f;
  f.k = r.get_int("k");
  f.j = r.get_int("j", 0);
  f.g = r.get_string("g", "0");
  const int length = r.get_int("L");
  const int point = r.get_int("m");
  const int dims = r.get_int("D", 1);
  return make_lattice(f, length, point, dims);
}

std::vector<std::uint64_t> index_list(const json& j, const std::string& where) {
  if (!j.is_array()) fail(Errc::ConfigError, where + " must be an array");
  std::vector<std::uint64_t> out;
  for (const auto& e : j) {
    if (!e.is_number_integer() || e.get<std::int64_t>() < 0) {
      fail(Errc::ConfigError, where + " entries must be nonnegative integers");
    }
    out.push_back(e.get<std::uint64_t>());
  }
  return out;
}

json location_json(const PointLocation& loc) {
  json s = json::array();
  for (const auto& x : loc.space) s.push_back(to_string(x));
  return json{{"space", s}, {"time", to_string(loc.time)}};
}

EnergyModel model_from(ConfigReader& r) {
  return energy_models::by_name(r.get_string("model", "magnitude"), r.get_double("scale", 1.0));
}

// ---------------------------------------------------------------------------

Records cmd_encode(ConfigReader& r) {
  const int k = r.get_int("k");
  NumeralState a;
  if (r.has("text") == r.has("value")) fail(Errc::ConfigError, "encode needs exactly one of text, value");
  if (r.has("text")) {
    a = parse_compact(r.get_string("text"), k);
  } else {
    a = encode(parse_rational(r.get_string("value")), k);
  }
  r.finish();
  return {json{{"record", "numeral"},
               {"k", k},
               {"text", format_compact(a)},
               {"state", to_json(a)},
               {"L", a.length()},
               {"value", to_string(value(a))},
               {"trimmed", format_compact(trim(a))}}};
}

Records cmd_arith(ConfigReader& r) {
  const std::string op = r.get_string("op");
  const int k = r.get_int("k");
  const NumeralState a = numeral_from_spec(r.raw("a"), k);
  json rec{{"record", "arith"}, {"op", op}, {"k", k}, {"a", compact(a)}};
  static const std::set<std::string> binary{"add", "sub", "cmp", "eq"};
  std::optional<NumeralState> b;
  if (binary.contains(op)) {
    b = numeral_from_spec(r.raw("b"), k);
    rec["b"] = compact(*b);
  }
  std::optional<NumeralState> result;
  if (op == "add") {
    result = add_arith(a, *b);
  } else if (op == "sub") {
    result = sub_arith(a, *b);
  } else if (op == "abs") {
    result = abs_arith(a);
  } else if (op == "trim") {
    result = trim(a);
  } else if (op == "succ") {
    result = succ_ulp(a);
  } else if (op == "pred") {
    result = pred_ulp(a);
  } else if (op == "pad") {
    result = pad(a, r.get_int("L"), r.get_int("m"));
  } else if (op == "cmp") {
    const auto c = cmp_arith(a, *b);
    rec["result"] = c < 0 ? -1 : (c > 0 ? 1 : 0);
  } else if (op == "eq") {
    rec["result"] = eq_arith(a, *b);
    rec["inner_product"] = a == *b ? 1 : 0;
  } else {
    fail(Errc::ConfigError, "unknown op '" + op + "'");
  }
  r.finish();
  if (result) {
    rec["result"] = compact(*result);
    rec["value"] = to_string(value(*result));
  }
  return {rec};
}

Records cmd_cauchy(ConfigReader& r) {
  const NumeralSequence seq = sequence_from_json(r.raw("sequence"));
  const std::string mode = r.get_string("mode", "test");
  const int ell_max = r.get_int("ell_max", 8);
  const int p_max = r.get_int("p_max", 32);
  Records out;
  if (mode == "test") {
    out.push_back(tagged("cauchy", to_json(cauchy_test(seq, ell_max, p_max))));
  } else if (mode == "prob") {
    out.push_back(tagged("cauchy_prob", to_json(cauchy_prob(seq, ell_max, p_max))));
  } else if (mode == "equivalent") {
    const NumeralSequence other = sequence_from_json(r.raw("other"));
    out.push_back(tagged("equivalence", to_json(equivalent(seq, other, ell_max, p_max))));
  } else if (mode == "canonical") {
    const int n = r.get_int("n", 8);
    if (n < 0) fail(Errc::InvalidArgument, "n must be >= 0");
    for (int i = 0; i <= n; ++i) {
      const NumeralState c = canonical(seq, i, p_max);
      out.push_back(json{{"record", "canonical"}, {"n", i}, {"prefix", compact(c)}, {"value", to_string(value(c))}});
    }
  } else {
    fail(Errc::ConfigError, "unknown cauchy mode '" + mode + "'");
  }
  r.finish();
  return out;
}

Records cmd_convert(ConfigReader& r) {
  const int k = r.get_int("k");
  const NumeralState a = numeral_from_spec(r.raw("a"), k);
  const int target = r.get_int("target");
  const int digits = r.get_int("digits", 16);
  if (digits < 0) fail(Errc::InvalidArgument, "digits must be >= 0");
  r.finish();
  const RealRep rep = real_convert_base(a, target);
  return {json{{"record", "conversion"},
               {"source", compact(a)},
               {"k", k},
               {"target", target},
               {"value", to_string(value(a))},
               {"provenance", to_string(rep.provenance())},
               {"expansion", to_json(expand(value(a), target))},
               {"prefix", compact(rep.prefix(digits))},
               {"prime_factors_divide", parent_base_compatible(k, target)}}};
}

Records cmd_lattice(ConfigReader& r) {
  const Lattice lat = lattice_from(r);
  Records out{tagged("lattice", to_json(lat))};
  if (r.has("point")) {
    ConfigReader p = r.child("point");
    LatticePoint pt{index_list(p.raw("space"), "point.space"), static_cast<std::uint64_t>(p.get_int("time", 0))};
    p.finish();
    json s = json::array();
    for (auto l : pt.space) s.push_back(l);
    out.push_back(json{{"record", "location"},
                       {"indices", json{{"space", s}, {"time", pt.time}}},
                       {"location", location_json(point_location(lat, pt))}});
  }
  r.finish();
  return out;
}

Records cmd_image(ConfigReader& r) {
  const Lattice lat = lattice_from(r);
  const auto max_points = static_cast<std::uint64_t>(r.get_int("max_points", 1 << 16));
  const bool with_energy = r.has("model");
  const EnergyModel model = model_from(r);
  r.finish();

  const std::uint64_t m = lat.points_per_dim_u64();
  const std::uint64_t space = lat.space_sites(max_points);
  if (space * m > max_points) {
    fail(Errc::LatticeTooLarge, std::to_string(space * m) + " space-time points exceed max_points");
  }
  const LatticeImage image = parent_image_lattice(lat);
  const auto idx = space_indices(lat, max_points);
  Records out;
  std::set<HybridTupleImage> seen;
  bool bijective = true;
  for (std::uint64_t t = 0; t < m; ++t) {
    for (const auto& s : idx) {
      const LatticePoint p{s, t};
      HybridTupleImage img = image.at(p);
      bijective = bijective && image.decode(img) == p && seen.insert(img).second;
      json comps = json::array();
      for (const auto& c : img.space) comps.push_back(compact(c));
      json rec{{"record", "image_point"},
               {"indices", json{{"space", s}, {"time", t}}},
               {"location", location_json(point_location(lat, p))},
               {"components", json{{"space", comps}, {"time", compact(img.time)}}}};
      if (with_energy) rec["energy"] = tuple_energy(img, model);
      out.push_back(std::move(rec));
    }
  }
  out.push_back(json{{"record", "image_summary"}, {"points", out.size()}, {"bijective", bijective}});
  return out;
}

Boundary boundary_from(const std::string& s) {
  if (s == "periodic") return Boundary::Periodic;
  if (s == "fixed-zero") return Boundary::FixedZero;
  fail(Errc::ConfigError, "boundary must be periodic|fixed-zero");
}

WaveFunction initial_from(ConfigReader& r, const Lattice& lat, Boundary b) {
  const std::string family = r.get_string("family");
  std::optional<WaveFunction> psi;
  if (family == "point") {
    psi.emplace(states::point(lat, b, index_list(r.raw("site"), "initial.site")));
  } else if (family == "plane-wave") {
    const json& qj = r.raw("q");
    if (!qj.is_array()) fail(Errc::ConfigError, "initial.q must be an array");
    std::vector<std::int64_t> q;
    for (const auto& e : qj) {
      if (!e.is_number_integer()) fail(Errc::ConfigError, "initial.q entries must be integers");
      q.push_back(e.get<std::int64_t>());
    }
    psi.emplace(states::plane_wave(lat, b, q));
  } else if (family == "gaussian") {
    const json& cj = r.raw("center");
    if (!cj.is_array()) fail(Errc::ConfigError, "initial.center must be an array");
    std::vector<double> c;
    for (const auto& e : cj) {
      if (!e.is_number()) fail(Errc::ConfigError, "initial.center entries must be numbers");
      c.push_back(e.get<double>());
    }
    psi.emplace(states::gaussian(lat, b, c, r.get_double("width")));
  } else {
    fail(Errc::ConfigError, "unknown initial family '" + family + "'");
  }
  r.finish();
  return *psi;
}

std::vector<double> potential_from(ConfigReader& r, const Lattice& lat) {
  const std::string family = r.get_string("family", "zero");
  std::vector<double> v;
  if (family == "zero") {
    v = potentials::zero(lat);
  } else if (family == "well") {
    const double depth = r.get_double("depth");
    const auto lo = static_cast<std::uint64_t>(r.get_int("lo"));
    const auto hi = static_cast<std::uint64_t>(r.get_int("hi"));
    v = potentials::well(lat, depth, lo, hi);
  } else if (family == "harmonic") {
    v = potentials::harmonic(lat, r.get_double("stiffness"));
  } else {
    fail(Errc::ConfigError, "unknown potential family '" + family + "'");
  }
  r.finish();
  return v;
}

json amplitudes_json(std::span<const std::complex<double>> a) {
  json out = json::array();
  for (const auto& c : a) out.push_back(json::array({c.real(), c.imag()}));
  return out;
}

Records cmd_evolve(ConfigReader& r) {
  ConfigReader lr = r.child("lattice");
  const Lattice lat = lattice_from(lr);
  lr.finish();
  const Boundary b = boundary_from(r.get_string("boundary", "periodic"));
  ConfigReader ir = r.child("initial");
  const WaveFunction psi0 = initial_from(ir, lat, b);

  HamiltonianSpec h;
  h.mass = r.get_double("mass", 1.0);
  h.hbar = r.get_double("hbar", 1.0);
  if (r.has("potential")) {
    ConfigReader pr = r.child("potential");
    h.potential = potential_from(pr, lat);
  }
  if (r.has("internal_state")) {
    const NumeralState s = numeral_from_spec(r.raw("internal_state"), lat.base());
    h.internal_energy = energy_of(s, model_from(r));
  } else {
    model_from(r);
  }
  h.validate();
  const double dt = r.get_double("dt");
  const int steps = r.get_int("steps");
  EvolveOptions opt;
  opt.unitary_reference = r.get_bool("unitary_reference", false);
  opt.reference_site_cap = static_cast<std::size_t>(r.get_int("reference_site_cap", 4096));
  const bool image_labels = r.get_bool("image_labels", false);
  const bool dump = r.get_bool("dump_states", false);
  opt.keep_trajectory = dump;
  r.finish();

  const Evolution ev = evolve(psi0, h, dt, steps, opt);
  std::optional<ImageEvolution> img;
  std::optional<LatticeImage> image;
  if (image_labels) {
    image.emplace(parent_image_lattice(lat));
    img = image_evolution(psi0, h, dt, steps, *image);
  }

  Records out;
  out.push_back(json{{"record", "evolve_config"},
                     {"lattice", to_json(lat)},
                     {"boundary", to_string(b)},
                     {"sites", psi0.sites()},
                     {"dt", dt},
                     {"steps", steps},
                     {"mass", h.mass},
                     {"hbar", h.hbar},
                     {"internal_energy", h.internal_energy}});
  for (const auto& d : ev.diagnostics) {
    json rec{{"record", "step"},
             {"step", d.step},
             {"time", d.time},
             {"norm2", d.norm2},
             {"energy", d.energy},
             {"max_amplitude", d.max_amplitude},
             {"norm_growth", d.norm_growth},
             {"predicted_growth", d.predicted_growth}};
    if (d.reference_norm2) rec["reference_norm2"] = *d.reference_norm2;
    if (d.reference_error) rec["reference_error"] = *d.reference_error;
    if (img) {
      const auto& tl = img->time_labels[static_cast<std::size_t>(d.step)];
      rec["time_label"] = tl ? json(compact(*tl)) : json(nullptr);
    }
    out.push_back(std::move(rec));
    if (dump) {
      const auto s = static_cast<std::size_t>(d.step);
      if (img) {
        json labelled = json::array();
        for (const auto& [key, c] : img->trajectory[s]) {
          json labels = json::array();
          for (const auto& k : key) labels.push_back(compact(k));
          labelled.push_back(json{{"space", labels}, {"re", c.real()}, {"im", c.imag()}});
        }
        out.push_back(json{{"record", "state"}, {"step", d.step}, {"amplitudes", labelled}});
      } else {
        out.push_back(json{{"record", "state"}, {"step", d.step}, {"amplitudes", amplitudes_json(ev.trajectory[s].amplitudes())}});
      }
    }
  }
  if (img) out.push_back(json{{"record", "image_check"}, {"identical", img->identical_to_stage_trajectory}});
  return out;
}

Records cmd_energy(ConfigReader& r) {
  const EnergyModel model = model_from(r);
  Records out;
  if (r.has("sequence")) {
    const NumeralSequence seq = sequence_from_json(r.raw("sequence"));
    const int n_max = r.get_int("n_max", 32);
    const int tail = r.get_int("tail_start", n_max / 2);
    const double tol = r.get_double("tolerance", model.scale * std::ldexp(1.0, -10));
    json body{{"model", model.name}};
    const json report = to_json(energy_sequence(seq, model, n_max, tail, tol));
    for (const auto& [k, v] : report.items()) body[k] = v;
    out.push_back(tagged("energy_sequence", body));
  } else if (r.has("tuple")) {
    const int k = r.get_int("k");
    const json& tj = r.raw("tuple");
    if (!tj.is_array() || tj.empty()) fail(Errc::ConfigError, "tuple must be a nonempty array");
    HybridTupleImage t;
    json parts = json::array();
    for (const auto& e : tj) {
      t.space.push_back(numeral_from_spec(e, k));
      parts.push_back(energy_of(t.space.back(), model));
    }
    t.time = NumeralState(k);
    out.push_back(json{{"record", "tuple_energy"}, {"model", model.name}, {"components", parts}, {"energy", tuple_energy(t, model)}});
  } else {
    const int k = r.get_int("k");
    const NumeralState a = numeral_from_spec(r.raw("state"), k);
    out.push_back(json{{"record", "energy"},
                       {"model", model.name},
                       {"state", compact(a)},
                       {"trimmed", compact(trim(a))},
                       {"energy", energy_of(a, model)}});
  }
  r.finish();
  return out;
}

Records cmd_frames(ConfigReader& r) {
  const FrameGraph g = frame_graph_from_json(r.raw("registry"));
  Records out;
  for (const auto& f : g.frames()) {
    json rec = tagged("frame", to_json(f));
    rec["gauge"] = g.gauge(f) != nullptr;
    out.push_back(std::move(rec));
  }
  auto vis = [&](const FrameId& o, const FrameId& t) {
    out.push_back(json{{"record", "visibility"}, {"observer", to_json(o)}, {"target", to_json(t)}, {"visible", g.visible(o, t)}});
  };
  if (r.has("queries")) {
    const json& q = r.raw("queries");
    if (!q.is_array()) fail(Errc::ConfigError, "queries must be an array");
    for (const auto& e : q) {
      ConfigReader qr(e, "query");
      const FrameId o = frame_from_json(qr.raw("observer"));
      const FrameId t = frame_from_json(qr.raw("target"));
      qr.finish();
      vis(o, t);
    }
  } else {
    for (const auto& o : g.frames()) {
      for (const auto& t : g.frames()) vis(o, t);
    }
  }
  r.finish();
  return out;
}

using Handler = Records (*)(ConfigReader&);

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> h{
      {"encode", cmd_encode}, {"arith", cmd_arith},   {"cauchy", cmd_cauchy},
      {"convert", cmd_convert}, {"lattice", cmd_lattice}, {"image", cmd_image},
      {"evolve", cmd_evolve}, {"energy", cmd_energy}, {"frames", cmd_frames}};
  return h;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"encode", "arith",  "cauchy", "convert", "lattice",
                                              "image",  "evolve", "energy", "frames"};
  return names;
}

std::vector<json> run_command(const std::string& command, const json& config) {
  auto it = handlers().find(command);
  if (it == handlers().end()) fail(Errc::ConfigError, "unknown command '" + command + "'");
  ConfigReader r(config, command);
  allow_globals(r);
  return it->second(r);
}

}  // namespace qukit
