// qukit command-line front end. Talks to the library only through the C API.

#include "qukit/qukit.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitDomain = 1;
constexpr int kExitConfig = 2;

struct ConfigFailure {
  std::string message;
};

json parse_json_flag(const std::string& name, const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigFailure{"--" + name + " is not valid JSON: " + e.what()};
  }
}

json read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigFailure{"cannot open config file " + path};
  try {
    json j = json::parse(in);
    if (!j.is_object()) throw ConfigFailure{"config file must hold a JSON object"};
    return j;
  } catch (const json::parse_error& e) {
    throw ConfigFailure{"config file " + path + ": " + e.what()};
  }
}

// Collects flag values that were actually given on the command line.
class Flags {
 public:
  explicit Flags(CLI::App* app) : app_(app) {}

  template <class T>
  void add(const std::string& flag, const std::string& key, const std::string& help) {
    auto holder = std::make_shared<T>();
    app_->add_option("--" + flag, *holder, help);
    setters_.push_back([this, flag, key, holder](json& out) {
      if (app_->count("--" + flag) > 0) set(out, key, json(*holder));
    });
  }

  void add_json(const std::string& flag, const std::string& key, const std::string& help) {
    auto holder = std::make_shared<std::string>();
    app_->add_option("--" + flag, *holder, help);
    setters_.push_back([this, flag, key, holder](json& out) {
      if (app_->count("--" + flag) > 0) set(out, key, parse_json_flag(flag, *holder));
    });
  }

  void add_switch(const std::string& flag, const std::string& key, const std::string& help) {
    app_->add_flag("--" + flag, help);
    setters_.push_back([this, flag, key](json& out) {
      if (app_->count("--" + flag) > 0) set(out, key, true);
    });
  }

  json collect() const {
    json out = json::object();
    for (const auto& s : setters_) s(out);
    return out;
  }

  CLI::App* app() const { return app_; }

 private:
  // "a.b" writes out["a"]["b"].
  static void set(json& out, const std::string& key, json v) {
    const auto dot = key.find('.');
    if (dot == std::string::npos) {
      out[key] = std::move(v);
    } else {
      set(out[key.substr(0, dot)], key.substr(dot + 1), std::move(v));
    }
  }

  CLI::App* app_;
  std::vector<std::function<void(json&)>> setters_;
};

void lattice_flags(Flags& f, const std::string& prefix) {
  f.add<int>("k", prefix + "k", "numeral base");
  f.add<int>("L", prefix + "L", "qukits per string");
  f.add<int>("m", prefix + "m", "k-al point position");
  f.add<int>("D", prefix + "D", "space dimensions");
  f.add<int>("j", prefix + "j", "frame stage");
  f.add<std::string>("g", prefix + "g", "gauge label");
}

// Config keys override flag values, recursively for objects.
void overlay(json& base, const json& top) {
  for (const auto& [k, v] : top.items()) {
    if (v.is_object() && base.contains(k) && base[k].is_object()) {
      overlay(base[k], v);
    } else {
      base[k] = v;
    }
  }
}

std::string render_value(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

std::string render_human(const json& rec) {
  std::ostringstream out;
  out << (rec.contains("record") ? rec["record"].get<std::string>() : std::string("record")) << ":";
  for (const auto& [k, v] : rec.items()) {
    if (k == "record") continue;
    out << ' ' << k << '=' << render_value(v);
  }
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Qukit-string numerals, Cauchy reals, frame lattices and lattice dynamics"};
  app.fallthrough();
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(qk_version()));

  std::string config_path;
  std::string format;
  std::string output_path;
  std::int64_t seed = 0;
  app.add_option("--config", config_path, "JSON config; its keys override flags");
  app.add_option("--format", format, "json | human (default from QUKIT_FORMAT, else json)");
  app.add_option("--output", output_path, "write records to this file instead of stdout");
  app.add_option("--seed", seed, "seed for randomized state generation");

  std::map<std::string, Flags> flags;
  auto sub = [&](const std::string& name, const std::string& help) -> Flags& {
    return flags.emplace(name, Flags(app.add_subcommand(name, help))).first->second;
  };

  {
    Flags& f = sub("encode", "parse a compact numeral or encode a rational");
    f.add<int>("k", "k", "numeral base");
    f.add<std::string>("text", "text", "compact text such as 12-71");
    f.add<std::string>("value", "value", "rational such as -1271/100");
  }
  {
    Flags& f = sub("arith", "arithmetic on numeral values");
    f.add<std::string>("op", "op", "add | sub | abs | cmp | eq | trim | pad | succ | pred");
    f.add<int>("k", "k", "numeral base");
    f.add<std::string>("a", "a", "first operand, compact text");
    f.add<std::string>("b", "b", "second operand, compact text");
    f.add<int>("L", "L", "target length for pad");
    f.add<int>("m", "m", "target point for pad");
  }
  {
    Flags& f = sub("cauchy", "finite-window Cauchy tests on sequences");
    f.add<std::string>("mode", "mode", "test | prob | equivalent | canonical");
    f.add_json("sequence", "sequence", "sequence descriptor (JSON)");
    f.add_json("other", "other", "second sequence for equivalent (JSON)");
    f.add<int>("ell-max", "ell_max", "largest precision exponent");
    f.add<int>("p-max", "p_max", "window end");
    f.add<int>("n", "n", "canonical prefix length");
  }
  {
    Flags& f = sub("convert", "base conversion of a numeral value");
    f.add<int>("k", "k", "source base");
    f.add<std::string>("a", "a", "numeral, compact text");
    f.add<int>("target", "target", "target base");
    f.add<int>("digits", "digits", "prefix digits to print");
  }
  {
    Flags& f = sub("lattice", "lattice sizes and point locations");
    lattice_flags(f, "");
    f.add_json("point", "point", "{\"space\": [...], \"time\": t}");
  }
  {
    Flags& f = sub("image", "parent-frame image of every lattice point");
    lattice_flags(f, "");
    f.add<int>("max-points", "max_points", "refuse larger lattices");
    f.add<std::string>("model", "model", "add tuple energies with this model");
    f.add<double>("scale", "scale", "energy unit");
  }
  {
    Flags& f = sub("evolve", "discrete Schroedinger evolution on a lattice");
    lattice_flags(f, "lattice.");
    f.add_json("initial", "initial", "initial family (JSON)");
    f.add_json("potential", "potential", "potential family (JSON)");
    f.add<double>("dt", "dt", "time step");
    f.add<int>("steps", "steps", "number of steps");
    f.add<std::string>("boundary", "boundary", "periodic | fixed-zero");
    f.add<double>("mass", "mass", "particle mass");
    f.add<double>("hbar", "hbar", "reduced Planck constant");
    f.add<std::string>("internal-state", "internal_state", "internal hybrid-system state, compact text");
    f.add<std::string>("model", "model", "energy model for the internal state");
    f.add<double>("scale", "scale", "energy unit");
    f.add<int>("reference-site-cap", "reference_site_cap", "largest lattice for the unitary reference");
    f.add_switch("unitary-reference", "unitary_reference", "compare against the exact propagator");
    f.add_switch("image-labels", "image_labels", "also evolve in parent-frame image labels");
    f.add_switch("dump-states", "dump_states", "emit full amplitudes per step");
  }
  {
    Flags& f = sub("energy", "energies of numerals, tuples and sequences");
    f.add<std::string>("model", "model", "magnitude | digit-sum");
    f.add<double>("scale", "scale", "energy unit");
    f.add<int>("k", "k", "numeral base");
    f.add<std::string>("state", "state", "numeral, compact text");
    f.add_json("tuple", "tuple", "list of compact states");
    f.add_json("sequence", "sequence", "sequence descriptor (JSON)");
    f.add<int>("n-max", "n_max", "last sequence index");
    f.add<int>("tail-start", "tail_start", "first tail index");
    f.add<double>("tolerance", "tolerance", "convergence tolerance");
  }
  {
    Flags& f = sub("frames", "frame registry and visibility");
    f.add_json("registry", "registry", "{\"topology\": ..., \"frames\": [...]}");
    f.add_json("queries", "queries", "[{\"observer\": ..., \"target\": ...}]");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: ConfigError: " << e.what() << '\n';
    return kExitConfig;
  } catch (const ConfigFailure& e) {
    std::cerr << "error: ConfigError: " << e.message << '\n';
    return kExitConfig;
  }

  std::cerr << "qukit " << qk_version() << '\n';

  const std::string command = app.get_subcommands().front()->get_name();
  json config;
  try {
    config = flags.at(command).collect();
    if (!config_path.empty()) overlay(config, read_config(config_path));
  } catch (const ConfigFailure& e) {
    std::cerr << "error: ConfigError: " << e.message << '\n';
    return kExitConfig;
  }

  if (format.empty() && config.contains("format") && config["format"].is_string()) {
    format = config["format"].get<std::string>();
  }
  if (format.empty()) {
    const char* env = std::getenv("QUKIT_FORMAT");
    format = env != nullptr ? env : "json";
  }
  if (format != "json" && format != "human") {
    std::cerr << "error: ConfigError: format must be json or human, got '" << format << "'\n";
    return kExitConfig;
  }
  if (output_path.empty() && config.contains("output") && config["output"].is_string()) {
    output_path = config["output"].get<std::string>();
  }

  char* text = nullptr;
  const qk_status st = qk_run(command.c_str(), config.dump().c_str(), &text);
  if (st != QK_OK) {
    std::cerr << "error: " << qk_status_name(st) << ": " << qk_last_error() << '\n';
    return st == QK_ERR_CONFIG ? kExitConfig : kExitDomain;
  }
  std::string records(text);
  qk_string_free(text);

  std::ofstream file;
  if (!output_path.empty()) {
    file.open(output_path);
    if (!file) {
      std::cerr << "error: ConfigError: cannot write " << output_path << '\n';
      return kExitConfig;
    }
  }
  std::ostream& out = output_path.empty() ? std::cout : file;
  if (format == "json") {
    out << records;
  } else {
    std::istringstream lines(records);
    for (std::string line; std::getline(lines, line);) out << render_human(json::parse(line)) << '\n';
  }
  return 0;
}
