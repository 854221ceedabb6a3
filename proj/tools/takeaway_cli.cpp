// Command-line front end for the Take-Away engine. Talks to the engine only
// through the C interface in takeaway/takeaway.h.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "httplib.h"
#include "json.hpp"

#include "takeaway/takeaway.h"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitNonConforming = 2;
constexpr int kExitSizeBound = 3;

struct PositionDeleter {
  void operator()(tk_position* p) const { tk_position_free(p); }
};
struct SolverDeleter {
  void operator()(tk_solver* s) const { tk_solver_free(s); }
};
struct VerificationDeleter {
  void operator()(tk_verification* v) const { tk_verification_free(v); }
};
struct ServiceDeleter {
  void operator()(tk_service* s) const { tk_service_free(s); }
};
using PositionPtr = std::unique_ptr<tk_position, PositionDeleter>;
using SolverPtr = std::unique_ptr<tk_solver, SolverDeleter>;
using VerificationPtr = std::unique_ptr<tk_verification, VerificationDeleter>;
using ServicePtr = std::unique_ptr<tk_service, ServiceDeleter>;

/// Takes ownership of a string returned by the library.
std::string take(char* s) {
  std::string out = s ? s : "";
  tk_string_free(s);
  return out;
}

int report_failure(tk_status status) {
  std::cerr << "error (" << tk_status_name(status) << "): " << tk_last_error() << '\n';
  return status == TK_ERR_SIZE_BOUND ? kExitSizeBound : kExitError;
}

std::string names_text(const json& names) {
  std::string out = "{";
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += ',';
    out += names[i].get<std::string>();
  }
  return out + "}";
}

std::string move_text(const json& move) {
  if (move.at("type") == "vertex") return "remove vertex " + move.at("name").get<std::string>();
  return "remove edge " + names_text(move.at("members"));
}

std::string prediction_text(const json& pred) {
  if (pred.at("value").is_null()) return "no prediction (" + pred.at("source").get<std::string>() + ")";
  return "g = " + std::to_string(pred.at("value").get<int>()) + " (" +
         pred.at("source").get<std::string>() + ")";
}

int cmd_analyze(const std::string& path, bool as_json) {
  tk_position* raw = nullptr;
  if (tk_status st = tk_position_load(path.c_str(), &raw); st != TK_OK) {
    std::cerr << "error (" << tk_status_name(st) << "): " << tk_last_error() << '\n';
    return kExitError;
  }
  PositionPtr pos(raw);
  char* out = nullptr;
  int conforming = 0;
  if (tk_status st = tk_analyze(pos.get(), &out, &conforming); st != TK_OK) {
    return report_failure(st);
  }
  const json doc = json::parse(take(out));
  if (as_json) {
    std::cout << doc.dump(2) << '\n';
    return conforming ? kExitOk : kExitNonConforming;
  }

  const json& s = doc.at("structure");
  std::cout << "group: " << s.at("group").get<std::string>() << '\n';
  std::cout << "special vertex: "
            << (s.at("special_vertex").is_null() ? "-" : s.at("special_vertex").get<std::string>())
            << '\n';
  std::cout << "CatX edge: "
            << (s.at("cat_x_edge").is_null() ? "-" : names_text(s.at("cat_x_edge"))) << '\n';
  std::cout << "CatY edges:";
  if (s.at("cat_y_edges").empty()) std::cout << " -";
  for (const auto& e : s.at("cat_y_edges")) std::cout << ' ' << names_text(e);
  std::cout << '\n';
  if (!s.at("subcategories").empty()) {
    std::cout << "subcategories:";
    for (const auto& [name, sub] : s.at("subcategories").items()) {
      std::cout << ' ' << name << '=' << sub.get<std::string>();
    }
    std::cout << '\n';
  }
  if (s.at("violations").empty()) {
    std::cout << "violations: none\n";
  } else {
    std::cout << "violations:\n";
    for (const auto& v : s.at("violations")) {
      std::cout << "  " << v.at("kind").get<std::string>() << ": "
                << v.at("detail").get<std::string>() << '\n';
    }
  }
  if (!doc.at("lemmas").is_null()) {
    std::cout << "lemma checks:\n";
    for (const auto& l : doc.at("lemmas")) {
      std::cout << "  " << l.at("id").get<std::string>() << ": "
                << (!l.at("applies").get<bool>() ? "n/a"
                    : l.at("holds").get<bool>()  ? "holds"
                                                 : "FAILS")
                << " (" << l.at("witness").get<std::string>() << ")\n";
    }
  }
  std::cout << "prediction: " << prediction_text(doc.at("prediction")) << '\n';
  return conforming ? kExitOk : kExitNonConforming;
}

int cmd_solve(const std::string& path, bool iso, bool stats, bool no_memo, bool as_json) {
  tk_position* raw = nullptr;
  if (tk_status st = tk_position_load(path.c_str(), &raw); st != TK_OK) {
    return report_failure(st);
  }
  PositionPtr pos(raw);
  tk_solver_options opts{no_memo ? 0 : 1, iso ? 1 : 0, 0};
  tk_solver* sraw = nullptr;
  if (tk_status st = tk_solver_create(&opts, &sraw); st != TK_OK) return report_failure(st);
  SolverPtr solver(sraw);

  char* out = nullptr;
  if (tk_status st = tk_solve(solver.get(), pos.get(), &out); st != TK_OK) {
    return report_failure(st);
  }
  json doc = json::parse(take(out));
  tk_table_stats table{};
  if (stats) tk_solver_stats(solver.get(), &table);

  if (as_json) {
    if (stats) {
      doc["stats"] = json{{"hits", table.hits}, {"misses", table.misses},
                          {"entries", table.entries}};
    }
    std::cout << doc.dump(2) << '\n';
    return kExitOk;
  }
  std::cout << "value: " << doc.at("value").get<int>() << '\n';
  std::cout << "options:\n";
  if (doc.at("options").empty()) std::cout << "  (none, terminal position)\n";
  for (const auto& o : doc.at("options")) {
    std::cout << "  " << move_text(o.at("move")) << " -> " << o.at("value").get<int>() << '\n';
  }
  std::cout << "winning moves:";
  if (doc.at("winning_moves").empty()) std::cout << " none";
  bool first = true;
  for (const auto& m : doc.at("winning_moves")) {
    std::cout << (first ? " " : ", ") << move_text(m);
    first = false;
  }
  std::cout << '\n';
  if (stats) {
    std::cout << "table: " << table.entries << " entries, " << table.hits << " hits, "
              << table.misses << " misses\n";
  }
  return kExitOk;
}

int cmd_enumerate(tk_bounds bounds, bool count_only) {
  if (count_only) {
    std::size_t count = 0;
    if (tk_status st = tk_enumerate_count(&bounds, &count); st != TK_OK) return report_failure(st);
    std::cout << count << '\n';
    return kExitOk;
  }
  char* out = nullptr;
  if (tk_status st = tk_enumerate(&bounds, &out); st != TK_OK) return report_failure(st);
  std::cout << take(out);
  return kExitOk;
}

bool write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  f << text;
  return static_cast<bool>(f);
}

int cmd_verify(tk_bounds bounds, const std::string& out_dir, bool mismatches_only,
               std::size_t threads, bool iso) {
  tk_verify_options opts{threads, iso ? 1 : 0};
  tk_verification* raw = nullptr;
  if (tk_status st = tk_verify_run(&bounds, &opts, &raw); st != TK_OK) return report_failure(st);
  VerificationPtr run(raw);

  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) {
    std::cerr << "error: cannot create " << out_dir << ": " << ec.message() << '\n';
    return kExitError;
  }
  const std::filesystem::path dir(out_dir);
  char* csv = nullptr;
  char* structured = nullptr;
  if (tk_status st = tk_verification_report(run.get(), TK_REPORT_CSV, mismatches_only, &csv);
      st != TK_OK) {
    return report_failure(st);
  }
  if (tk_status st =
          tk_verification_report(run.get(), TK_REPORT_JSON, mismatches_only, &structured);
      st != TK_OK) {
    tk_string_free(csv);
    return report_failure(st);
  }
  if (!write_file(dir / "report.csv", take(csv)) ||
      !write_file(dir / "report.json", take(structured))) {
    std::cerr << "error: cannot write reports into " << out_dir << '\n';
    return kExitError;
  }

  std::size_t written = 0;
  const auto mismatch_dir = dir / "mismatches";
  if (tk_status st =
          tk_verification_write_mismatches(run.get(), mismatch_dir.string().c_str(), &written);
      st != TK_OK) {
    return report_failure(st);
  }

  char* summary = nullptr;
  if (tk_status st = tk_verification_summary(run.get(), &summary); st != TK_OK) {
    return report_failure(st);
  }
  std::cout << take(summary);
  tk_verify_counts counts{};
  tk_verification_counts(run.get(), &counts);
  if (counts.mismatches == 0) {
    std::cout << "0 mismatches\n";
  } else {
    std::cout << counts.mismatches << " mismatches written to " << mismatch_dir.string() << '\n';
  }
  std::cout << "reports: " << (dir / "report.csv").string() << ", "
            << (dir / "report.json").string() << '\n';
  return kExitOk;
}

int cmd_serve(const std::string& host, int port, bool no_auto_reply,
              const std::string& static_dir) {
  tk_service* raw = nullptr;
  if (tk_status st = tk_service_create(no_auto_reply ? 0 : 1, 0, &raw); st != TK_OK) {
    return report_failure(st);
  }
  ServicePtr service(raw);
  httplib::Server server;

  auto forward = [&](const httplib::Request& req, httplib::Response& res) {
    int status = 500;
    char* body = nullptr;
    tk_status st = tk_service_handle(service.get(), req.method.c_str(), req.path.c_str(),
                                     req.body.data(), req.body.size(), &status, &body);
    if (st != TK_OK) {
      res.status = 500;
      res.set_content(json{{"error_code", "malformed"}, {"message", tk_last_error()}}.dump(),
                      "application/json");
      return;
    }
    res.status = status;
    res.set_content(take(body), "application/json");
  };
  server.Get(R"(/api/.*)", forward);
  server.Post(R"(/api/.*)", forward);
  if (!static_dir.empty() && !server.set_mount_point("/", static_dir)) {
    std::cerr << "error: static directory " << static_dir << " does not exist\n";
    return kExitError;
  }

  std::cerr << "listening on http://" << host << ':' << port << '\n';
  if (!server.listen(host, port)) {
    std::cerr << "error: cannot bind " << host << ':' << port << '\n';
    return kExitError;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Take-Away game engine for hypergraphs"};
  app.require_subcommand(1);

  std::string path;
  bool as_json = false;
  auto* analyze = app.add_subcommand("analyze", "classify an instance and print its prediction");
  analyze->add_option("file", path, "instance file")->required();
  analyze->add_flag("--json", as_json, "print the raw JSON report");

  bool iso = false, stats = false, no_memo = false;
  auto* solve = app.add_subcommand("solve", "compute the exact Grundy value");
  solve->add_option("file", path, "instance file")->required();
  solve->add_flag("--iso", iso, "memoize by isomorphism class");
  solve->add_flag("--stats", stats, "print transposition table statistics");
  solve->add_flag("--no-memo", no_memo, "disable the transposition table");
  solve->add_flag("--json", as_json, "print the raw JSON result");

  std::size_t max_half = 0, min_half = 0;
  bool iso_dedup = false, count_only = false;
  auto* enumerate = app.add_subcommand("enumerate", "list conforming instances");
  enumerate->add_option("--max-half-size", max_half, "largest m (|V(CatX)| = 2m)")
      ->required()
      ->check(CLI::PositiveNumber);
  enumerate->add_option("--min-half-size", min_half, "smallest m (default: equal to max)")
      ->check(CLI::PositiveNumber);
  enumerate->add_flag("--iso-dedup", iso_dedup, "one instance per isomorphism class");
  enumerate->add_flag("--count-only", count_only, "print only the number of instances");

  std::string out_dir;
  bool mismatches_only = false;
  std::size_t threads = 1;
  auto* verify = app.add_subcommand("verify", "compare oracle and closed form on all instances");
  verify->add_option("--max-half-size", max_half, "largest m (|V(CatX)| = 2m)")
      ->required()
      ->check(CLI::PositiveNumber);
  verify->add_option("--min-half-size", min_half, "smallest m (default: equal to max)")
      ->check(CLI::PositiveNumber);
  verify->add_option("--out", out_dir, "output directory")->required();
  verify->add_flag("--mismatches-only", mismatches_only, "report only mismatching records");
  verify->add_flag("--iso-dedup", iso_dedup, "one instance per isomorphism class");
  verify->add_flag("--iso", iso, "memoize by isomorphism class");
  verify->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);

  int port = 8080;
  std::string host = "127.0.0.1";
  std::string static_dir;
  bool no_auto_reply = false;
  auto* serve = app.add_subcommand("serve", "run the game service");
  serve->add_option("--port", port, "TCP port")->required()->check(CLI::Range(1, 65535));
  serve->add_option("--host", host, "bind address");
  serve->add_option("--static", static_dir, "directory of UI assets to serve at /");
  serve->add_flag("--no-auto-reply", no_auto_reply, "do not answer human moves");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  auto bounds = [&] {
    return tk_bounds{min_half == 0 ? max_half : min_half, max_half, iso_dedup ? 1 : 0};
  };
  if (analyze->parsed()) return cmd_analyze(path, as_json);
  if (solve->parsed()) return cmd_solve(path, iso, stats, no_memo, as_json);
  if (enumerate->parsed()) return cmd_enumerate(bounds(), count_only);
  if (verify->parsed()) return cmd_verify(bounds(), out_dir, mismatches_only, threads, iso);
  if (serve->parsed()) return cmd_serve(host, port, no_auto_reply, static_dir);
  return kExitError;
}
