#include "spp/oracle.hpp"

#include <algorithm>
#include <map>
#include <vector>

#include "spp/field.hpp"
#include "spp/representation.hpp"

namespace spp {

namespace {

// DFS over simple paths with non-terminal interiors, both endpoints terminals
// of distinct blocks. Records the vertex set of every such path (one witness
// sequence per set).
void enumerate_path_masks(const Instance& inst, std::map<uint32_t, std::vector<int>>& out) {
  std::vector<std::vector<int>> adj(inst.n + 1);
  for (auto [u, v] : inst.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& a : adj) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }
  std::vector<int> path;
  uint32_t mask = 0;
  auto dfs = [&](auto&& self, int u, int start) -> void {
    for (int v : adj[u]) {
      if (mask & (1u << v)) continue;
      if (inst.is_terminal(v)) {
        // Path may end here; dedupe direction by id order of endpoints.
        if (v > start && inst.block_of[v] != inst.block_of[start]) {
          path.push_back(v);
          uint32_t full = mask | (1u << v);
          out.emplace(full, path);
          path.pop_back();
        }
        continue;  // terminals never appear in the interior
      }
      path.push_back(v);
      mask |= 1u << v;
      self(self, v, start);
      mask &= ~(1u << v);
      path.pop_back();
    }
  };
  for (int s : inst.terminals) {
    path = {s};
    mask = 1u << s;
    dfs(dfs, s, s);
  }
}

}  // namespace

PackingOracleResult brute_force_packing(const Instance& inst, int vertex_cap) {
  if (inst.n > vertex_cap)
    throw CapExceeded("brute_force_packing: instance exceeds vertex cap " +
                      std::to_string(vertex_cap));
  std::map<uint32_t, std::vector<int>> usable;
  enumerate_path_masks(inst, usable);

  // g[mask] = max packing using only vertices inside mask; choice[mask] is the
  // path-set taken at the optimum, 0 for "drop the lowest vertex".
  uint32_t full = 0;
  for (int v = 1; v <= inst.n; ++v) full |= 1u << v;
  std::vector<int8_t> g(full + 1, 0);
  std::vector<uint32_t> choice(full + 1, 0);
  for (uint32_t mask = 1; mask <= full; ++mask) {
    if ((mask & full) != mask) continue;
    uint32_t low = mask & (~mask + 1);
    int8_t best = g[mask ^ low];
    uint32_t pick = 0;
    for (const auto& [pm, path] : usable) {
      if ((pm & mask) != pm) continue;
      if (!(pm & low)) continue;  // otherwise already counted at mask ^ low
      int8_t cand = static_cast<int8_t>(1 + g[mask ^ pm]);
      if (cand > best) {
        best = cand;
        pick = pm;
      }
    }
    g[mask] = best;
    choice[mask] = pick;
  }

  PackingOracleResult res;
  res.p = g[full];
  uint32_t mask = full;
  while (mask) {
    uint32_t pick = choice[mask];
    if (pick == 0) {
      mask ^= mask & (~mask + 1);
      continue;
    }
    res.packing.paths.push_back(usable.at(pick));
    mask ^= pick;
  }
  std::reverse(res.packing.paths.begin(), res.packing.paths.end());
  return res;
}

namespace {

// Row-echelon accumulator over F_q with O(rows * dim) insertion.
struct Echelon {
  const Field* field;
  std::vector<WVector> rows;   // each with a leading pivot
  std::vector<int> pivot_col;

  explicit Echelon(const Field& f) : field(&f) {}

  // Reduces v against the current rows; returns false (unchanged rank) if v
  // lies in the span, true after inserting otherwise.
  bool add(WVector v) {
    for (size_t i = 0; i < rows.size(); ++i) {
      uint32_t c = v[pivot_col[i]];
      if (c == 0) continue;
      uint32_t factor = field->mul(c, field->inv(rows[i][pivot_col[i]]));
      for (size_t j = 0; j < v.size(); ++j)
        v[j] = static_cast<uint16_t>(field->sub(v[j], field->mul(factor, rows[i][j])));
    }
    for (size_t j = 0; j < v.size(); ++j) {
      if (v[j] != 0) {
        pivot_col.push_back(static_cast<int>(j));
        rows.push_back(std::move(v));
        return true;
      }
    }
    return false;
  }

  int rank() const { return static_cast<int>(rows.size()); }
};

}  // namespace

std::optional<int> brute_force_max_lines(const Instance& inst, int vertex_cap, int edge_cap) {
  if (inst.n > vertex_cap || inst.num_edges() > edge_cap)
    throw CapExceeded("brute_force_max_lines: instance exceeds caps");
  uint32_t q = select_prime(std::max(2, inst.num_blocks()));
  Labeling lab = make_labeling(inst, q);
  WSpace space = WSpace::make(inst);

  std::vector<std::pair<WVector, WVector>> twins;
  twins.reserve(inst.num_edges());
  for (int e = 0; e < inst.num_edges(); ++e) twins.push_back(edge_twins(inst, space, lab, e));
  std::vector<WVector> singles;
  for (int t : inst.terminals) singles.push_back(singleton_vec(inst, space, lab, t));

  int best = -1;
  // DFS over edge subsets, keeping only independent line sets; prune whole
  // subtrees as soon as a line is dependent on the chosen ones.
  auto rec = [&](auto&& self, int e, const Echelon& ech, int lines) -> void {
    if (lines > best) {
      // Completable to a base of W by singletons?
      Echelon full = ech;
      for (const auto& s : singles) full.add(s);
      if (full.rank() == space.dim) best = lines;
    }
    for (int next = e; next < inst.num_edges(); ++next) {
      Echelon cand = ech;
      if (!cand.add(twins[next].first)) continue;
      if (!cand.add(twins[next].second)) continue;
      self(self, next + 1, cand, lines + 1);
    }
  };
  Echelon root{lab.field};
  rec(rec, 0, root, 0);
  if (best < 0) return std::nullopt;
  return best;
}

}  // namespace spp
