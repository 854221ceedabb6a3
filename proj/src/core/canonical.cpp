#include "takeaway/canonical.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <vector>

#include "takeaway/error.hpp"

namespace takeaway {

namespace {

using Signature = std::vector<std::size_t>;

/// Colour refinement on the vertex/edge incidence structure. Returns one
/// colour per local vertex index; colours are ranks of sorted signatures, so
/// they do not depend on the original ids.
std::vector<std::size_t> refine(std::size_t n, const std::vector<VertexMask>& edges) {
  std::vector<std::size_t> colour(n, 0);
  std::size_t classes = 1;
  while (true) {
    std::vector<Signature> sigs(n);
    for (std::size_t v = 0; v < n; ++v) {
      std::vector<Signature> incident;
      for (VertexMask e : edges) {
        if (((e >> v) & 1U) == 0) continue;
        Signature edge_sig{static_cast<std::size_t>(std::popcount(e))};
        for (VertexMask m = e; m != 0; m &= m - 1) {
          edge_sig.push_back(colour[static_cast<std::size_t>(std::countr_zero(m))]);
        }
        std::sort(edge_sig.begin() + 1, edge_sig.end());
        incident.push_back(std::move(edge_sig));
      }
      std::sort(incident.begin(), incident.end());
      Signature& s = sigs[v];
      s.push_back(colour[v]);
      s.push_back(incident.size());
      for (const Signature& part : incident) {
        s.push_back(part.size());
        s.insert(s.end(), part.begin(), part.end());
      }
    }
    std::map<Signature, std::size_t> rank;
    for (const Signature& s : sigs) rank.emplace(s, 0);
    std::size_t next = 0;
    for (auto& [sig, r] : rank) r = next++;
    for (std::size_t v = 0; v < n; ++v) colour[v] = rank[sigs[v]];
    if (rank.size() == classes) break;
    classes = rank.size();
  }
  return colour;
}

struct Minimizer {
  const std::vector<VertexMask>& edges;
  std::vector<std::vector<std::size_t>> classes;  // local vertices per class, class order
  std::vector<std::size_t> label;                 // local vertex -> new label
  std::vector<VertexMask> best;
  bool have_best = false;
  std::vector<VertexMask> scratch;

  void evaluate() {
    scratch.clear();
    for (VertexMask e : edges) {
      VertexMask out = 0;
      for (VertexMask m = e; m != 0; m &= m - 1) {
        out |= VertexMask{1} << label[static_cast<std::size_t>(std::countr_zero(m))];
      }
      scratch.push_back(out);
    }
    std::sort(scratch.begin(), scratch.end());
    if (!have_best || scratch < best) {
      best = scratch;
      have_best = true;
    }
  }

  void search(std::size_t cls, std::size_t offset) {
    if (cls == classes.size()) {
      evaluate();
      return;
    }
    std::vector<std::size_t>& members = classes[cls];
    std::sort(members.begin(), members.end());
    do {
      for (std::size_t i = 0; i < members.size(); ++i) label[members[i]] = offset + i;
      search(cls + 1, offset + members.size());
    } while (std::next_permutation(members.begin(), members.end()));
  }
};

}  // namespace

std::string iso_canonical_key(const Position& p, std::size_t max_vertices) {
  const std::size_t n = p.vertex_count();
  if (n > max_vertices) {
    throw Error(ErrorCode::SizeBoundExceeded,
                "isomorphism key needs at most " + std::to_string(max_vertices) +
                    " vertices, position has " + std::to_string(n));
  }

  // Compact ids to 0..n-1.
  std::vector<int> local(kVertexIdLimit, -1);
  std::size_t next = 0;
  for (VertexId v : p.vertices()) local[v.value] = static_cast<int>(next++);
  std::vector<VertexMask> edges;
  edges.reserve(p.edge_count());
  for (const Hyperedge& e : p.edges()) {
    VertexMask out = 0;
    for (VertexId v : e.members()) out |= VertexMask{1} << local[v.value];
    edges.push_back(out);
  }

  const std::vector<std::size_t> colour = refine(n, edges);
  const std::size_t class_count =
      n == 0 ? 0 : *std::max_element(colour.begin(), colour.end()) + 1;

  Minimizer search{edges, std::vector<std::vector<std::size_t>>(class_count),
                   std::vector<std::size_t>(n, 0), {}, false, {}};
  for (std::size_t v = 0; v < n; ++v) search.classes[colour[v]].push_back(v);
  search.search(0, 0);

  std::string key;
  key.push_back(static_cast<char>(n));
  for (VertexMask e : search.best) {
    for (int i = 0; i < 8; ++i) key.push_back(static_cast<char>((e >> (8 * i)) & 0xFFU));
  }
  return key;
}

}  // namespace takeaway
