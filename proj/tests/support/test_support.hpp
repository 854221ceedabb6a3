#pragma once

#include <algorithm>
#include <filesystem>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "takeaway/instance_io.hpp"
#include "takeaway/position.hpp"

namespace takeaway::testing {

inline std::filesystem::path fixture(const std::string& name) {
  return std::filesystem::path(TAKEAWAY_FIXTURE_DIR) / name;
}

/// Builds a position from display names, ids in declaration order.
inline Position named(const std::vector<std::string>& vertices,
                      const std::vector<std::vector<std::string>>& edges) {
  nlohmann::json doc{{"vertices", vertices}, {"edges", edges}};
  return instance_from_json(doc);
}

inline Position smallest_instance() { return named({"S", "A", "B"}, {{"A", "B"}, {"S", "A", "B"}}); }

inline Position bc_four_cycle() {
  return named({"S", "v1", "v2", "v3", "v4", "v5", "v6"},
               {{"v1", "v2", "v3", "v4", "v5", "v6"},
                {"S", "v1", "v2"},
                {"S", "v2", "v3"},
                {"S", "v3", "v4"},
                {"S", "v4", "v1"}});
}

/// Random position on up to `max_vertices` vertices with edges of size 2..4.
inline Position random_position(std::mt19937& rng, std::size_t max_vertices,
                                std::size_t max_edges) {
  std::uniform_int_distribution<std::size_t> nv(0, max_vertices);
  const std::size_t n = nv(rng);
  std::vector<VertexDecl> decls;
  for (std::size_t i = 0; i < n; ++i) decls.push_back({VertexId{static_cast<std::uint8_t>(i)}, {}});
  std::set<std::vector<VertexId>> edges;
  if (n >= 2) {
    std::uniform_int_distribution<std::size_t> ne(0, max_edges);
    std::uniform_int_distribution<std::size_t> size(2, std::min<std::size_t>(4, n));
    const std::size_t want = ne(rng);
    for (std::size_t k = 0; k < want; ++k) {
      std::vector<VertexId> all;
      for (std::size_t i = 0; i < n; ++i) all.push_back(VertexId{static_cast<std::uint8_t>(i)});
      std::shuffle(all.begin(), all.end(), rng);
      all.resize(size(rng));
      std::sort(all.begin(), all.end());
      edges.insert(all);
    }
  }
  std::vector<std::vector<VertexId>> list(edges.begin(), edges.end());
  return Position::make(decls, list);
}

/// Independent Grundy oracle over plain integer sets; shares no code with the
/// engine beyond reading the input position.
class BruteForceGrundy {
 public:
  using Edges = std::set<std::set<int>>;

  int value(const Position& p) {
    std::set<int> vs;
    for (VertexId v : p.vertices()) vs.insert(v.value);
    Edges es;
    for (const Hyperedge& e : p.edges()) {
      std::set<int> m;
      for (VertexId v : e.members()) m.insert(v.value);
      es.insert(m);
    }
    return value(vs, es);
  }

  int value(const std::set<int>& vs, const Edges& es) {
    auto key = std::make_pair(vs, es);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::set<int> options;
    for (int v : vs) {
      std::set<int> nv = vs;
      nv.erase(v);
      Edges ne;
      for (const auto& e : es) {
        if (!e.count(v)) ne.insert(e);
      }
      options.insert(value(nv, ne));
    }
    for (const auto& e : es) {
      Edges ne = es;
      ne.erase(e);
      options.insert(value(vs, ne));
    }
    int g = 0;
    while (options.count(g)) ++g;
    memo_.emplace(std::move(key), g);
    return g;
  }

 private:
  std::map<std::pair<std::set<int>, Edges>, int> memo_;
};

/// Every position reachable from `start`, including `start`, keyed by the
/// labeled canonical key.
inline std::map<std::string, Position> reachable(const Position& start) {
  std::map<std::string, Position> seen;
  std::vector<Position> stack{start};
  while (!stack.empty()) {
    Position p = stack.back();
    stack.pop_back();
    if (!seen.emplace(canonical_key(p), p).second) continue;
    for (const Move& m : legal_moves(p)) stack.push_back(p.after(m));
  }
  return seen;
}

}  // namespace takeaway::testing
