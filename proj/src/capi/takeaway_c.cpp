#include "takeaway/takeaway.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>

#include "takeaway/closed_form.hpp"
#include "takeaway/enumerator.hpp"
#include "takeaway/error.hpp"
#include "takeaway/game_service.hpp"
#include "takeaway/grundy.hpp"
#include "takeaway/instance_io.hpp"
#include "takeaway/json_codec.hpp"
#include "takeaway/structure.hpp"

struct tk_position {
  takeaway::Position value;
};

struct tk_solver {
  takeaway::GrundySolver solver;
};

struct tk_verification {
  takeaway::VerificationRun run;
};

struct tk_service {
  takeaway::GameService service;
};

namespace {

thread_local std::string last_error;

tk_status status_of(takeaway::ErrorCode code) {
  using takeaway::ErrorCode;
  switch (code) {
    case ErrorCode::MalformedDocument: return TK_ERR_MALFORMED;
    case ErrorCode::UnknownVertexName: return TK_ERR_UNKNOWN_VERTEX;
    case ErrorCode::EdgeNotSubsetOfVertices:
    case ErrorCode::DuplicateEdge:
    case ErrorCode::EdgeTooSmall:
    case ErrorCode::DuplicateVertexId:
    case ErrorCode::DuplicateVertexName:
    case ErrorCode::TooManyVertices: return TK_ERR_INVALID_POSITION;
    case ErrorCode::IllegalMove: return TK_ERR_ILLEGAL_MOVE;
    case ErrorCode::SizeBoundExceeded: return TK_ERR_SIZE_BOUND;
    case ErrorCode::PreconditionViolated: return TK_ERR_PRECONDITION;
    case ErrorCode::IoFailure: return TK_ERR_IO;
    case ErrorCode::InternalInconsistency:
    case ErrorCode::ValueOverflow: return TK_ERR_INTERNAL;
  }
  return TK_ERR_INTERNAL;
}

/// Runs `body`, translating exceptions into status codes.
template <typename F>
tk_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return TK_OK;
  } catch (const takeaway::Error& e) {
    last_error = std::string(takeaway::to_string(e.code())) + ": " + e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return TK_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return TK_ERR_INTERNAL;
  }
}

tk_status invalid(const char* what) {
  last_error = what;
  return TK_ERR_INVALID_ARGUMENT;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size());
  out[s.size()] = '\0';
  return out;
}

takeaway::EnumerationBounds to_bounds(const tk_bounds& b) {
  return {b.min_half_size, b.max_half_size, b.iso_dedup != 0};
}

}  // namespace

extern "C" {

const char* tk_version(void) { return "1.0.0"; }

const char* tk_status_name(tk_status status) {
  switch (status) {
    case TK_OK: return "ok";
    case TK_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case TK_ERR_MALFORMED: return "malformed";
    case TK_ERR_UNKNOWN_VERTEX: return "unknown_vertex";
    case TK_ERR_INVALID_POSITION: return "invalid_position";
    case TK_ERR_ILLEGAL_MOVE: return "illegal_move";
    case TK_ERR_SIZE_BOUND: return "size_bound";
    case TK_ERR_PRECONDITION: return "precondition";
    case TK_ERR_IO: return "io";
    case TK_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* tk_last_error(void) { return last_error.c_str(); }

void tk_string_free(char* s) { std::free(s); }

tk_status tk_position_parse(const char* text, size_t length, tk_position** out) {
  if (!text || !out) return invalid("null argument");
  return guarded([&] {
    auto p = std::make_unique<tk_position>(
        tk_position{takeaway::parse_instance(std::string_view(text, length))});
    *out = p.release();
  });
}

tk_status tk_position_load(const char* path, tk_position** out) {
  if (!path || !out) return invalid("null argument");
  return guarded([&] {
    auto p = std::make_unique<tk_position>(tk_position{takeaway::load_instance(path)});
    *out = p.release();
  });
}

void tk_position_free(tk_position* p) { delete p; }

size_t tk_position_vertex_count(const tk_position* p) { return p ? p->value.vertex_count() : 0; }

size_t tk_position_edge_count(const tk_position* p) { return p ? p->value.edge_count() : 0; }

tk_status tk_position_serialize(const tk_position* p, char** out) {
  if (!p || !out) return invalid("null argument");
  return guarded([&] { *out = dup_string(takeaway::serialize_instance(p->value)); });
}

tk_status tk_analyze(const tk_position* p, char** out_json, int* out_conforming) {
  if (!p || !out_json) return invalid("null argument");
  return guarded([&] {
    const auto report = takeaway::classify(p->value);
    nlohmann::json doc;
    doc["instance"] = takeaway::instance_to_json(p->value);
    doc["structure"] = takeaway::report_to_json(p->value, report);
    doc["lemmas"] = report.is_mixed_shape()
                        ? takeaway::lemmas_to_json(takeaway::check_lemmas(report))
                        : nlohmann::json(nullptr);
    doc["prediction"] = takeaway::prediction_to_json(takeaway::predict(report));
    *out_json = dup_string(doc.dump());
    if (out_conforming) *out_conforming = report.conforming() ? 1 : 0;
  });
}

tk_status tk_solver_create(const tk_solver_options* options, tk_solver** out) {
  if (!out) return invalid("null argument");
  return guarded([&] {
    takeaway::SolveOptions opts;
    if (options) {
      opts.memoize = options->memoize != 0;
      opts.iso_reduce = options->iso_reduce != 0;
      if (options->max_vertices != 0) opts.max_vertices = options->max_vertices;
    }
    *out = new tk_solver{takeaway::GrundySolver(opts)};
  });
}

void tk_solver_free(tk_solver* s) { delete s; }

tk_status tk_solve(tk_solver* s, const tk_position* p, char** out_json) {
  if (!s || !p || !out_json) return invalid("null argument");
  return guarded([&] {
    const auto result = s->solver.solve(p->value);
    *out_json = dup_string(takeaway::grundy_to_json(p->value, result).dump());
  });
}

tk_status tk_grundy_value(tk_solver* s, const tk_position* p, unsigned* out_value) {
  if (!s || !p || !out_value) return invalid("null argument");
  return guarded([&] { *out_value = s->solver.value(p->value); });
}

tk_status tk_solver_stats(const tk_solver* s, tk_table_stats* out) {
  if (!s || !out) return invalid("null argument");
  return guarded([&] {
    const auto st = s->solver.table().stats();
    *out = tk_table_stats{st.hits, st.misses, st.entries};
  });
}

tk_status tk_enumerate_count(const tk_bounds* bounds, size_t* out_count) {
  if (!bounds || !out_count) return invalid("null argument");
  return guarded([&] { *out_count = takeaway::count_instances(to_bounds(*bounds)); });
}

tk_status tk_enumerate(const tk_bounds* bounds, char** out_lines) {
  if (!bounds || !out_lines) return invalid("null argument");
  return guarded([&] {
    std::string text;
    takeaway::for_each_instance(to_bounds(*bounds), [&](const takeaway::Position& p) {
      text += takeaway::serialize_instance(p);
      text += '\n';
    });
    *out_lines = dup_string(text);
  });
}

tk_status tk_verify_run(const tk_bounds* bounds, const tk_verify_options* options,
                        tk_verification** out) {
  if (!bounds || !out) return invalid("null argument");
  return guarded([&] {
    takeaway::VerifyOptions opts;
    if (options) {
      opts.threads = options->threads == 0 ? 1 : options->threads;
      opts.iso_reduce = options->iso_reduce != 0;
    }
    auto v = std::make_unique<tk_verification>(
        tk_verification{takeaway::verify(to_bounds(*bounds), opts)});
    *out = v.release();
  });
}

void tk_verification_free(tk_verification* v) { delete v; }

tk_status tk_verification_counts(const tk_verification* v, tk_verify_counts* out) {
  if (!v || !out) return invalid("null argument");
  const auto& s = v->run.summary;
  *out = tk_verify_counts{s.total, s.matches, s.mismatches, s.no_predictions};
  return TK_OK;
}

tk_status tk_verification_summary(const tk_verification* v, char** out_text) {
  if (!v || !out_text) return invalid("null argument");
  return guarded([&] { *out_text = dup_string(takeaway::format_summary(v->run.summary)); });
}

tk_status tk_verification_report(const tk_verification* v, tk_report_format format,
                                 int mismatches_only, char** out) {
  if (!v || !out) return invalid("null argument");
  if (format != TK_REPORT_CSV && format != TK_REPORT_JSON) return invalid("unknown format");
  return guarded([&] {
    const auto fmt =
        format == TK_REPORT_CSV ? takeaway::ReportFormat::Csv : takeaway::ReportFormat::Json;
    *out = dup_string(takeaway::emit_report(v->run.records, fmt, mismatches_only != 0));
  });
}

tk_status tk_verification_write_mismatches(const tk_verification* v, const char* out_dir,
                                           size_t* out_written) {
  if (!v || !out_dir) return invalid("null argument");
  return guarded([&] {
    const auto written = takeaway::write_mismatch_files(v->run.records, out_dir);
    if (out_written) *out_written = written.size();
  });
}

tk_status tk_service_create(int auto_reply, size_t max_vertices, tk_service** out) {
  if (!out) return invalid("null argument");
  return guarded([&] {
    takeaway::GameService::Options opts;
    opts.auto_reply = auto_reply != 0;
    if (max_vertices != 0) opts.max_vertices = max_vertices;
    *out = new tk_service{takeaway::GameService(opts)};
  });
}

void tk_service_free(tk_service* s) { delete s; }

tk_status tk_service_handle(tk_service* s, const char* method, const char* path,
                            const char* body, size_t body_length, int* out_http_status,
                            char** out_body) {
  if (!s || !method || !path || !out_http_status || !out_body) return invalid("null argument");
  if (!body && body_length != 0) return invalid("null body with nonzero length");
  return guarded([&] {
    const auto response = s->service.handle(
        method, path, body ? std::string_view(body, body_length) : std::string_view());
    *out_http_status = response.status;
    *out_body = dup_string(response.body);
  });
}

}  // extern "C"
