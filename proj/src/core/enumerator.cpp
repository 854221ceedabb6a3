#include "takeaway/enumerator.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <thread>
#include <unordered_set>

#include "takeaway/canonical.hpp"
#include "takeaway/error.hpp"
#include "takeaway/grundy.hpp"
#include "takeaway/instance_io.hpp"
#include "takeaway/json_codec.hpp"

namespace takeaway {

namespace {

using Pair = std::pair<std::size_t, std::size_t>;

void check_bounds(const EnumerationBounds& b) {
  if (b.min_half_size < 1) {
    throw Error(ErrorCode::PreconditionViolated, "half size must be at least 1");
  }
  if (b.max_half_size < b.min_half_size) {
    throw Error(ErrorCode::PreconditionViolated, "max half size is below min half size");
  }
  if (2 * b.max_half_size + 1 > kVertexIdLimit) {
    throw Error(ErrorCode::PreconditionViolated, "half size too large for a position");
  }
}

/// Pair sets over 1..n with every index used at most twice, visited in a
/// fixed order (exclude before include at each pair).
class PairSetWalker {
 public:
  PairSetWalker(std::size_t n, const std::function<void(std::span<const Pair>)>& visit)
      : n_(n), degree_(n + 1, 0), visit_(visit) {
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = i + 1; j <= n; ++j) pairs_.emplace_back(i, j);
    }
  }

  void run() { walk(0); }

 private:
  void walk(std::size_t index) {
    if (index == pairs_.size()) {
      if (!chosen_.empty()) visit_(chosen_);
      return;
    }
    walk(index + 1);
    const auto [i, j] = pairs_[index];
    if (degree_[i] < 2 && degree_[j] < 2) {
      ++degree_[i];
      ++degree_[j];
      chosen_.push_back(pairs_[index]);
      walk(index + 1);
      chosen_.pop_back();
      --degree_[i];
      --degree_[j];
    }
  }

  std::size_t n_;
  std::vector<Pair> pairs_;
  std::vector<Pair> chosen_;
  std::vector<int> degree_;
  const std::function<void(std::span<const Pair>)>& visit_;
};

MatchStatus match_of(const Prediction& pr, Grundy oracle) {
  if (!pr.value) return MatchStatus::NoPrediction;
  return *pr.value == oracle ? MatchStatus::Match : MatchStatus::Mismatch;
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

Position make_instance(std::size_t half_size, std::span<const Pair> pairs) {
  const std::size_t n = 2 * half_size;
  std::vector<VertexDecl> decls;
  decls.push_back({VertexId{0}, std::string("S")});
  for (std::size_t i = 1; i <= n; ++i) {
    decls.push_back({VertexId{static_cast<std::uint8_t>(i)}, "v" + std::to_string(i)});
  }
  std::vector<std::vector<VertexId>> edges;
  std::vector<VertexId> cat_x;
  for (std::size_t i = 1; i <= n; ++i) cat_x.push_back(VertexId{static_cast<std::uint8_t>(i)});
  edges.push_back(std::move(cat_x));
  for (const auto& [i, j] : pairs) {
    edges.push_back({VertexId{0}, VertexId{static_cast<std::uint8_t>(i)},
                     VertexId{static_cast<std::uint8_t>(j)}});
  }
  return Position::make(decls, edges);
}

void for_each_instance(const EnumerationBounds& bounds,
                       const std::function<void(const Position&)>& visit) {
  check_bounds(bounds);
  for (std::size_t m = bounds.min_half_size; m <= bounds.max_half_size; ++m) {
    std::unordered_set<std::string> seen;
    const std::function<void(std::span<const Pair>)> on_pairs = [&](std::span<const Pair> ps) {
      Position p = make_instance(m, ps);
      if (bounds.iso_dedup && !seen.insert(iso_canonical_key(p, 2 * m + 1)).second) return;
      visit(p);
    };
    PairSetWalker(2 * m, on_pairs).run();
  }
}

std::vector<Position> enumerate_instances(const EnumerationBounds& bounds) {
  std::vector<Position> out;
  for_each_instance(bounds, [&](const Position& p) { out.push_back(p); });
  return out;
}

std::size_t count_instances(const EnumerationBounds& bounds) {
  std::size_t count = 0;
  for_each_instance(bounds, [&](const Position&) { ++count; });
  return count;
}

VerificationRun verify(const EnumerationBounds& bounds, const VerifyOptions& options) {
  check_bounds(bounds);
  if (2 * bounds.max_half_size + 1 > options.max_vertices) {
    throw Error(ErrorCode::SizeBoundExceeded,
                "instances reach " + std::to_string(2 * bounds.max_half_size + 1) +
                    " vertices, oracle bound is " + std::to_string(options.max_vertices));
  }
  const std::vector<Position> instances = enumerate_instances(bounds);

  VerificationRun run;
  run.records.resize(instances.size());
  auto table = std::make_shared<TranspositionTable>();
  SolveOptions solve_opts;
  solve_opts.iso_reduce = options.iso_reduce;
  solve_opts.max_vertices = options.max_vertices;

  auto work = [&](std::size_t begin, std::size_t stride) {
    GrundySolver solver(table, solve_opts);
    for (std::size_t i = begin; i < instances.size(); i += stride) {
      const Position& p = instances[i];
      const StructureReport report = classify(p);
      VerificationRecord& rec = run.records[i];
      rec.instance_id = i;
      rec.instance = serialize_instance(p);
      rec.group = report.group;
      rec.v_catx = report.cat_x_size();
      rec.e_caty = report.cat_y_edge_count();
      rec.oracle = solver.value(p);
      rec.predicted = predict(report);
      rec.match = match_of(rec.predicted, rec.oracle);
    }
  };

  const std::size_t threads = std::max<std::size_t>(1, options.threads);
  if (threads == 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    std::vector<std::exception_ptr> errors(threads);
    for (std::size_t t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        try {
          work(t, threads);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
    pool.clear();
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }
  run.summary = summarize(run.records);
  return run;
}

VerificationSummary summarize(std::span<const VerificationRecord> records) {
  std::map<std::pair<Group, bool>, SummaryRow> rows;
  VerificationSummary s;
  for (const auto& rec : records) {
    const bool odd = rec.e_caty % 2 == 1;
    auto [it, fresh] = rows.try_emplace({rec.group, odd}, SummaryRow{rec.group, odd});
    switch (rec.match) {
      case MatchStatus::Match: ++it->second.match; ++s.matches; break;
      case MatchStatus::Mismatch: ++it->second.mismatch; ++s.mismatches; break;
      case MatchStatus::NoPrediction: ++it->second.no_prediction; ++s.no_predictions; break;
    }
    ++s.total;
  }
  for (auto& [key, row] : rows) s.rows.push_back(row);
  return s;
}

std::string emit_report(std::span<const VerificationRecord> records, ReportFormat format,
                        bool mismatches_only) {
  auto wanted = [&](const VerificationRecord& r) {
    return !mismatches_only || r.match == MatchStatus::Mismatch;
  };
  if (format == ReportFormat::Json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : records) {
      if (wanted(r)) arr.push_back(record_to_json(r));
    }
    return arr.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "instance_id,group,v_catx,e_caty,oracle,predicted,source,match\n";
  for (const auto& r : records) {
    if (!wanted(r)) continue;
    out << r.instance_id << ',' << csv_field(to_string(r.group)) << ',' << r.v_catx << ','
        << r.e_caty << ',' << static_cast<int>(r.oracle) << ','
        << (r.predicted.value ? std::to_string(*r.predicted.value) : std::string("none")) << ','
        << to_string(r.predicted.source) << ',' << to_string(r.match) << '\n';
  }
  return out.str();
}

std::vector<std::filesystem::path> write_mismatch_files(
    std::span<const VerificationRecord> records, const std::filesystem::path& out_dir) {
  std::vector<std::filesystem::path> written;
  for (const auto& r : records) {
    if (r.match != MatchStatus::Mismatch) continue;
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw Error(ErrorCode::IoFailure, "cannot create " + out_dir.string());
    auto path = out_dir / ("mismatch_" + std::to_string(r.instance_id) + ".json");
    save_instance(path, parse_instance(r.instance));
    written.push_back(std::move(path));
  }
  return written;
}

std::string format_summary(const VerificationSummary& s) {
  std::ostringstream out;
  out << "group  e_caty  match  mismatch  no_prediction\n";
  for (const auto& row : s.rows) {
    std::string g(to_string(row.group));
    g.resize(std::max<std::size_t>(g.size(), 6), ' ');
    out << g << ' ' << (row.caty_odd ? "odd     " : "even    ");
    std::string m = std::to_string(row.match);
    m.resize(std::max<std::size_t>(m.size(), 6), ' ');
    std::string mm = std::to_string(row.mismatch);
    mm.resize(std::max<std::size_t>(mm.size(), 9), ' ');
    out << m << ' ' << mm << ' ' << row.no_prediction << '\n';
  }
  out << s.total << " instances, " << s.matches << " matches, " << s.mismatches
      << " mismatches, " << s.no_predictions << " without prediction\n";
  return out.str();
}

std::string_view to_string(MatchStatus m) noexcept {
  switch (m) {
    case MatchStatus::Match: return "true";
    case MatchStatus::Mismatch: return "false";
    case MatchStatus::NoPrediction: return "no_prediction";
  }
  return "?";
}

}  // namespace takeaway
