#include "qukit/qukit.h"

#include "qukit/commands.hpp"
#include "qukit/errors.hpp"
#include "qukit/serialize.hpp"

#include <cstdlib>
#include <cstring>
#include <functional>
#include <new>

struct qk_numeral {
  qukit::NumeralState v;
};
struct qk_superposition {
  qukit::StringSuperposition v;
};
struct qk_sequence {
  qukit::NumeralSequence v;
};
struct qk_lattice {
  qukit::Lattice v;
};
struct qk_frame_graph {
  qukit::FrameGraph v;
};

namespace {

thread_local std::string last_error;

qk_status status_of(qukit::Errc c) { return static_cast<qk_status>(static_cast<int>(c) + 1); }

template <class F>
qk_status guarded(F&& f) {
  try {
    f();
    last_error.clear();
    return QK_OK;
  } catch (const qukit::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const nlohmann::json::exception& e) {
    last_error = e.what();
    return QK_ERR_CONFIG;
  } catch (const std::exception& e) {
    last_error = e.what();
    return QK_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown exception";
    return QK_ERR_INTERNAL;
  }
}

void need(const void* p, const char* what) {
  if (p == nullptr) qukit::fail(qukit::Errc::InvalidArgument, std::string(what) + " is NULL");
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

qukit::json parse(const char* text) {
  need(text, "json text");
  try {
    return qukit::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    qukit::fail(qukit::Errc::ConfigError, std::string("malformed JSON: ") + e.what());
  }
}

void emit(char** out, const std::string& text) {
  need(out, "output pointer");
  *out = dup(text);
}

qk_status numeral_out(qk_numeral** out, const std::function<qukit::NumeralState()>& f) {
  return guarded([&] {
    need(out, "output pointer");
    *out = new qk_numeral{f()};
  });
}

}  // namespace

extern "C" {

const char* qk_status_name(qk_status status) {
  if (status == QK_OK) return "OK";
  if (status == QK_ERR_INTERNAL) return "InternalError";
  if (status >= QK_ERR_INVALID_ARGUMENT && status <= QK_ERR_CONFIG) {
    return qukit::errc_name(static_cast<qukit::Errc>(status - 1)).data();
  }
  return "Unknown";
}

const char* qk_last_error(void) { return last_error.c_str(); }

const char* qk_version(void) { return "0.1.0"; }

void qk_string_free(char* s) { std::free(s); }

// ---- numerals

qk_status qk_numeral_parse(const char* text, int k, qk_numeral** out) {
  return numeral_out(out, [&] {
    need(text, "text");
    return qukit::parse_compact(text, k);
  });
}

qk_status qk_numeral_from_json(const char* json, qk_numeral** out) {
  return numeral_out(out, [&] { return qukit::numeral_from_json(parse(json)); });
}

qk_status qk_numeral_encode(const char* rational, int k, qk_numeral** out) {
  return numeral_out(out, [&] {
    need(rational, "rational");
    return qukit::encode(qukit::parse_rational(rational), k);
  });
}

void qk_numeral_free(qk_numeral* a) { delete a; }

qk_status qk_numeral_format(const qk_numeral* a, char** out) {
  return guarded([&] {
    need(a, "numeral");
    emit(out, qukit::format_compact(a->v));
  });
}

qk_status qk_numeral_to_json(const qk_numeral* a, char** out) {
  return guarded([&] {
    need(a, "numeral");
    emit(out, qukit::to_json(a->v).dump());
  });
}

qk_status qk_numeral_value(const qk_numeral* a, char** out) {
  return guarded([&] {
    need(a, "numeral");
    emit(out, qukit::to_string(qukit::value(a->v)));
  });
}

qk_status qk_numeral_energy(const qk_numeral* a, const char* model, double scale, double* out) {
  return guarded([&] {
    need(a, "numeral");
    need(model, "model");
    need(out, "output pointer");
    *out = qukit::energy_of(a->v, qukit::energy_models::by_name(model, scale));
  });
}

qk_status qk_numeral_trim(const qk_numeral* a, qk_numeral** out) {
  return numeral_out(out, [&] {
    need(a, "numeral");
    return qukit::trim(a->v);
  });
}

qk_status qk_numeral_pad(const qk_numeral* a, int length, int point, qk_numeral** out) {
  return numeral_out(out, [&] {
    need(a, "numeral");
    return qukit::pad(a->v, length, point);
  });
}

qk_status qk_numeral_add(const qk_numeral* a, const qk_numeral* b, qk_numeral** out) {
  return numeral_out(out, [&] {
    need(a, "numeral a");
    need(b, "numeral b");
    return qukit::add_arith(a->v, b->v);
  });
}

qk_status qk_numeral_sub(const qk_numeral* a, const qk_numeral* b, qk_numeral** out) {
  return numeral_out(out, [&] {
    need(a, "numeral a");
    need(b, "numeral b");
    return qukit::sub_arith(a->v, b->v);
  });
}

qk_status qk_numeral_abs(const qk_numeral* a, qk_numeral** out) {
  return numeral_out(out, [&] {
    need(a, "numeral");
    return qukit::abs_arith(a->v);
  });
}

qk_status qk_numeral_succ(const qk_numeral* a, qk_numeral** out) {
  return numeral_out(out, [&] {
    need(a, "numeral");
    return qukit::succ_ulp(a->v);
  });
}

qk_status qk_numeral_pred(const qk_numeral* a, qk_numeral** out) {
  return numeral_out(out, [&] {
    need(a, "numeral");
    return qukit::pred_ulp(a->v);
  });
}

qk_status qk_numeral_cmp(const qk_numeral* a, const qk_numeral* b, int* out) {
  return guarded([&] {
    need(a, "numeral a");
    need(b, "numeral b");
    need(out, "output pointer");
    const auto c = qukit::cmp_arith(a->v, b->v);
    *out = c < 0 ? -1 : (c > 0 ? 1 : 0);
  });
}

qk_status qk_numeral_eq_arith(const qk_numeral* a, const qk_numeral* b, int* out) {
  return guarded([&] {
    need(a, "numeral a");
    need(b, "numeral b");
    need(out, "output pointer");
    *out = qukit::eq_arith(a->v, b->v) ? 1 : 0;
  });
}

qk_status qk_numeral_convert_base(const qk_numeral* a, int target, char** json_out) {
  return guarded([&] {
    need(a, "numeral");
    qukit::check_base(target);
    const auto rep = qukit::real_convert_base(a->v, target);
    qukit::json j{{"provenance", qukit::to_string(rep.provenance())},
                  {"expansion", qukit::to_json(qukit::expand(qukit::value(a->v), target))}};
    emit(json_out, j.dump());
  });
}

// ---- superpositions

qk_status qk_superposition_from_json(const char* json, int allow_unnormalized, qk_superposition** out) {
  return guarded([&] {
    need(out, "output pointer");
    *out = new qk_superposition{qukit::superposition_from_json(parse(json), allow_unnormalized != 0)};
  });
}

void qk_superposition_free(qk_superposition* s) { delete s; }

qk_status qk_superposition_to_json(const qk_superposition* s, char** out) {
  return guarded([&] {
    need(s, "superposition");
    emit(out, qukit::to_json(s->v).dump());
  });
}

qk_status qk_superposition_norm2(const qk_superposition* s, double* out) {
  return guarded([&] {
    need(s, "superposition");
    need(out, "output pointer");
    *out = s->v.norm2();
  });
}

qk_status qk_superposition_inner(const qk_superposition* a, const qk_superposition* b, double* re, double* im) {
  return guarded([&] {
    need(a, "superposition a");
    need(b, "superposition b");
    need(re, "output pointer");
    need(im, "output pointer");
    const auto c = qukit::inner_product(a->v, b->v);
    *re = c.real();
    *im = c.imag();
  });
}

qk_status qk_superposition_prob_close(const qk_superposition* a, const qk_superposition* b, int ell, double* out) {
  return guarded([&] {
    need(a, "superposition a");
    need(b, "superposition b");
    need(out, "output pointer");
    *out = qukit::prob_arith_close(a->v, b->v, ell);
  });
}

// ---- sequences

qk_status qk_sequence_from_json(const char* json, qk_sequence** out) {
  return guarded([&] {
    need(out, "output pointer");
    *out = new qk_sequence{qukit::sequence_from_json(parse(json))};
  });
}

void qk_sequence_free(qk_sequence* s) { delete s; }

qk_status qk_cauchy_test(const qk_sequence* s, int ell_max, int p_max, char** json_out) {
  return guarded([&] {
    need(s, "sequence");
    emit(json_out, qukit::to_json(qukit::cauchy_test(s->v, ell_max, p_max)).dump());
  });
}

qk_status qk_cauchy_prob(const qk_sequence* s, int ell_max, int p_max, double* out) {
  return guarded([&] {
    need(s, "sequence");
    need(out, "output pointer");
    *out = qukit::cauchy_prob(s->v, ell_max, p_max).estimate;
  });
}

qk_status qk_equivalent(const qk_sequence* a, const qk_sequence* b, int ell_max, int p_max, char** json_out) {
  return guarded([&] {
    need(a, "sequence a");
    need(b, "sequence b");
    emit(json_out, qukit::to_json(qukit::equivalent(a->v, b->v, ell_max, p_max)).dump());
  });
}

qk_status qk_canonical(const qk_sequence* s, int n, int p_max, qk_numeral** out) {
  return numeral_out(out, [&] {
    need(s, "sequence");
    return qukit::canonical(s->v, n, p_max);
  });
}

qk_status qk_energy_sequence(const qk_sequence* s, const char* model, double scale, int n_max, int tail_start,
                             double tolerance, char** json_out) {
  return guarded([&] {
    need(s, "sequence");
    need(model, "model");
    const auto m = qukit::energy_models::by_name(model, scale);
    emit(json_out, qukit::to_json(qukit::energy_sequence(s->v, m, n_max, tail_start, tolerance)).dump());
  });
}

// ---- frames and lattices

qk_status qk_lattice_create(int j, int k, const char* g, int length, int point, int dims, qk_lattice** out) {
  return guarded([&] {
    need(out, "output pointer");
    qukit::FrameId f{j, k, g ? g : "0"};
    *out = new qk_lattice{qukit::make_lattice(f, length, point, dims)};
  });
}

void qk_lattice_free(qk_lattice* lat) { delete lat; }

qk_status qk_lattice_to_json(const qk_lattice* lat, char** out) {
  return guarded([&] {
    need(lat, "lattice");
    emit(out, qukit::to_json(lat->v).dump());
  });
}

qk_status qk_lattice_point_location(const qk_lattice* lat, const uint64_t* space, size_t n, uint64_t time,
                                    char** json_out) {
  return guarded([&] {
    need(lat, "lattice");
    if (n > 0) need(space, "space indices");
    qukit::LatticePoint p{std::vector<std::uint64_t>(space, space + n), time};
    const auto loc = qukit::point_location(lat->v, p);
    qukit::json s = qukit::json::array();
    for (const auto& x : loc.space) s.push_back(qukit::to_string(x));
    emit(json_out, qukit::json{{"space", s}, {"time", qukit::to_string(loc.time)}}.dump());
  });
}

qk_status qk_lattice_image_component(const qk_lattice* lat, uint64_t index, qk_numeral** out) {
  return numeral_out(out, [&] {
    need(lat, "lattice");
    return qukit::parent_image_lattice(lat->v).component(index);
  });
}

qk_status qk_frame_graph_from_json(const char* json, qk_frame_graph** out) {
  return guarded([&] {
    need(out, "output pointer");
    *out = new qk_frame_graph{qukit::frame_graph_from_json(parse(json))};
  });
}

void qk_frame_graph_free(qk_frame_graph* g) { delete g; }

qk_status qk_frame_graph_visible(const qk_frame_graph* g, const char* observer_json, const char* target_json,
                                 int* out) {
  return guarded([&] {
    need(g, "frame graph");
    need(out, "output pointer");
    const auto o = qukit::frame_from_json(parse(observer_json));
    const auto t = qukit::frame_from_json(parse(target_json));
    *out = g->v.visible(o, t) ? 1 : 0;
  });
}

// ---- commands

qk_status qk_run(const char* command, const char* config_json, char** jsonl_out) {
  return guarded([&] {
    need(command, "command");
    need(jsonl_out, "output pointer");
    const auto records = qukit::run_command(command, parse(config_json));
    std::string text;
    for (const auto& r : records) {
      text += r.dump();
      text += '\n';
    }
    *jsonl_out = dup(text);
  });
}

}  // extern "C"
