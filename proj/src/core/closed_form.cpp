#include "takeaway/closed_form.hpp"

#include <algorithm>

#include "takeaway/error.hpp"

namespace takeaway {

Grundy odd_uniform_value(std::size_t vertex_count, std::size_t edge_count) noexcept {
  const bool v_odd = vertex_count % 2 == 1;
  const bool e_odd = edge_count % 2 == 1;
  if (!v_odd) return e_odd ? 3 : 0;
  return e_odd ? 2 : 1;
}

Grundy even_edge_value(std::size_t vertex_count) noexcept {
  return vertex_count % 2 == 0 ? 2 : 3;
}

Prediction predict(const StructureReport& r) {
  const bool odd_y = r.cat_y_edge_count() % 2 == 1;
  switch (r.group) {
    case Group::I:
      return odd_y ? Prediction{1, PredictionSource::OddCatY}
                   : Prediction{0, PredictionSource::EvenCatYAllA};
    case Group::III:
    case Group::IV:
    case Group::V:
      return odd_y ? Prediction{1, PredictionSource::OddCatY}
                   : Prediction{4, PredictionSource::EvenCatYMixed};
    case Group::II:
      if (odd_y) {
        throw Error(ErrorCode::InternalInconsistency,
                    "all-B instance with odd |E(CatY)| cannot exist");
      }
      return {3, PredictionSource::AllB};
    case Group::BC:
      return {std::nullopt, PredictionSource::OutsideTaxonomy};
    case Group::PriorOddOnly:
      return {odd_uniform_value(r.vertex_count, r.edge_count),
              PredictionSource::OddUniformParity};
    case Group::PriorEvenOnly:
      if (r.edge_count != 1) return {std::nullopt, PredictionSource::OutsideTaxonomy};
      return {even_edge_value(r.vertex_count), PredictionSource::EvenEdgeParity};
    case Group::NonConforming:
      break;
  }
  return {std::nullopt, PredictionSource::NonConforming};
}

std::optional<Prediction> predict_parity_shape(const Position& p) {
  const auto edges = p.edges();
  if (std::all_of(edges.begin(), edges.end(), [](const Hyperedge& e) { return e.size() == 3; })) {
    return Prediction{odd_uniform_value(p.vertex_count(), p.edge_count()),
                      PredictionSource::OddUniformParity};
  }
  if (edges.size() == 1 && edges.front().size() % 2 == 0) {
    return Prediction{even_edge_value(p.vertex_count()), PredictionSource::EvenEdgeParity};
  }
  return std::nullopt;
}

std::string_view to_string(PredictionSource s) noexcept {
  switch (s) {
    case PredictionSource::OddCatY: return "odd_caty";
    case PredictionSource::EvenCatYMixed: return "even_caty_mixed";
    case PredictionSource::EvenCatYAllA: return "even_caty_all_a";
    case PredictionSource::AllB: return "all_b";
    case PredictionSource::OddUniformParity: return "odd_uniform_parity";
    case PredictionSource::EvenEdgeParity: return "even_edge_parity";
    case PredictionSource::OutsideTaxonomy: return "outside_taxonomy";
    case PredictionSource::NonConforming: return "non_conforming";
  }
  return "?";
}

}  // namespace takeaway
