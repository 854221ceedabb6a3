#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "takeaway/closed_form.hpp"
#include "takeaway/position.hpp"
#include "takeaway/structure.hpp"

namespace takeaway {

/// Instances have vertex set {S, v1..v2m} for m in [min_half_size,
/// max_half_size], the CatX edge {v1..v2m}, and 3-edges {S, vi, vj} for a
/// nonempty set of distinct pairs in which every index appears at most twice.
struct EnumerationBounds {
  std::size_t min_half_size = 1;
  std::size_t max_half_size = 3;
  bool iso_dedup = false;  // keep one labeled representative per iso class
};

/// Throws PreconditionViolated for min_half_size < 1, an empty range, or
/// more vertices than fit in a position.
void for_each_instance(const EnumerationBounds& bounds,
                       const std::function<void(const Position&)>& visit);
std::vector<Position> enumerate_instances(const EnumerationBounds& bounds);
std::size_t count_instances(const EnumerationBounds& bounds);

/// The instance for half-size m and a list of 1-based index pairs.
Position make_instance(std::size_t half_size,
                       std::span<const std::pair<std::size_t, std::size_t>> pairs);

enum class MatchStatus { Match, Mismatch, NoPrediction };

struct VerificationRecord {
  std::size_t instance_id = 0;
  std::string instance;  // serialized instance document
  Group group = Group::NonConforming;
  std::size_t v_catx = 0;
  std::size_t e_caty = 0;
  Grundy oracle = 0;
  Prediction predicted;
  MatchStatus match = MatchStatus::NoPrediction;
};

struct SummaryRow {
  Group group;
  bool caty_odd;
  std::size_t match = 0;
  std::size_t mismatch = 0;
  std::size_t no_prediction = 0;
};

struct VerificationSummary {
  std::vector<SummaryRow> rows;  // ordered by group, then even before odd
  std::size_t total = 0;
  std::size_t matches = 0;
  std::size_t mismatches = 0;
  std::size_t no_predictions = 0;
};

struct VerificationRun {
  std::vector<VerificationRecord> records;  // enumeration order
  VerificationSummary summary;
};

struct VerifyOptions {
  std::size_t threads = 1;
  bool iso_reduce = false;
  std::size_t max_vertices = 16;
};

/// Oracle against closed form for every enumerated instance. Mismatches are
/// recorded, never thrown. Throws SizeBoundExceeded when the largest
/// instance is beyond `max_vertices`.
VerificationRun verify(const EnumerationBounds& bounds, const VerifyOptions& options = {});

VerificationSummary summarize(std::span<const VerificationRecord> records);

enum class ReportFormat { Csv, Json };

/// Byte-deterministic for identical records.
std::string emit_report(std::span<const VerificationRecord> records, ReportFormat format,
                        bool mismatches_only = false);

/// Writes one instance file per mismatch, named mismatch_<id>.json.
std::vector<std::filesystem::path> write_mismatch_files(
    std::span<const VerificationRecord> records, const std::filesystem::path& out_dir);

std::string format_summary(const VerificationSummary& summary);

std::string_view to_string(MatchStatus m) noexcept;

}  // namespace takeaway
