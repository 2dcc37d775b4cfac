#include "spp/representation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace spp {

WSpace WSpace::make(const Instance& inst) {
  WSpace s;
  s.n = inst.n;
  s.k = inst.num_terminals();
  s.dim = 2 * s.n - s.k;
  s.sing_of.assign(inst.n + 1, -1);
  s.circ_of.assign(inst.n + 1, -1);
  s.bullet_of.assign(inst.n + 1, -1);
  int next = 0;
  for (int t : inst.terminals) s.sing_of[t] = next++;
  for (int v = 1; v <= inst.n; ++v) {
    if (inst.is_terminal(v)) continue;
    s.circ_of[v] = next++;
    s.bullet_of[v] = next++;
  }
  return s;
}

Labeling make_labeling(const Instance& inst, uint32_t q, const std::vector<uint32_t>& theta_perm) {
  uint32_t b = static_cast<uint32_t>(inst.num_blocks());
  if (b >= q) throw std::invalid_argument("make_labeling: need |S| < q");
  Labeling lab{Field(q), std::vector<uint32_t>(b + 1, 0), false};
  for (uint32_t i = 1; i <= b; ++i) lab.theta_of_block[i] = i;
  if (!theta_perm.empty()) {
    if (theta_perm.size() != b)
      throw std::invalid_argument("make_labeling: permutation size mismatch");
    for (uint32_t i = 1; i <= b; ++i) {
      uint32_t v = theta_perm[i - 1];
      if (v < 1 || v > b) throw std::invalid_argument("make_labeling: bad permutation entry");
      lab.theta_of_block[i] = v;
    }
  }
  return lab;
}

WVector singleton_vec(const Instance& inst, const WSpace& space, const Labeling&, int t) {
  if (!inst.is_terminal(t)) throw std::invalid_argument("singleton_vec: not a terminal");
  WVector v(space.dim, 0);
  v[space.sing_of[t]] = 1;
  return v;
}

WVector vertex_twin(const Instance& inst, const WSpace& space, const Labeling& lab, int v,
                    TwinKind kind) {
  WVector out(space.dim, 0);
  if (inst.is_terminal(v)) {
    out[space.sing_of[v]] = kind == TwinKind::Circ
                                ? 1
                                : static_cast<uint16_t>(lab.theta_of_terminal(inst, v));
  } else {
    out[kind == TwinKind::Circ ? space.circ_of[v] : space.bullet_of[v]] = 1;
  }
  return out;
}

std::pair<WVector, WVector> edge_twins(const Instance& inst, const WSpace& space,
                                       const Labeling& lab, int edge_id) {
  const auto& e = inst.edges.at(edge_id);
  const Field& f = lab.field;
  auto make = [&](TwinKind kind) {
    WVector out(space.dim, 0);
    for (int endpoint : {e.first, e.second}) {
      WVector tw = vertex_twin(inst, space, lab, endpoint, kind);
      uint32_t mu = lab.mu(e, endpoint);
      for (int i = 0; i < space.dim; ++i)
        out[i] = static_cast<uint16_t>(f.add(out[i], f.mul(mu, tw[i])));
    }
    return out;
  };
  return {make(TwinKind::Circ), make(TwinKind::Bullet)};
}

int rank(std::vector<WVector> vectors, const Field& field) {
  if (vectors.empty()) return 0;
  size_t cols = vectors[0].size();
  for (const auto& v : vectors)
    if (v.size() != cols) throw std::invalid_argument("rank: ragged input");
  int r = 0;
  size_t rows = vectors.size();
  for (size_t c = 0; c < cols && r < static_cast<int>(rows); ++c) {
    size_t pivot = rows;
    for (size_t i = r; i < rows; ++i)
      if (vectors[i][c] != 0) {
        pivot = i;
        break;
      }
    if (pivot == rows) continue;
    std::swap(vectors[r], vectors[pivot]);
    uint32_t inv = field.inv(vectors[r][c]);
    for (size_t i = r + 1; i < rows; ++i) {
      if (vectors[i][c] == 0) continue;
      uint32_t factor = field.mul(vectors[i][c], inv);
      for (size_t j = c; j < cols; ++j)
        vectors[i][j] = static_cast<uint16_t>(
            field.sub(vectors[i][j], field.mul(factor, vectors[r][j])));
    }
    ++r;
  }
  return r;
}

WVector walk_sum(const Instance& inst, const WSpace& space, const Labeling& lab, const Walk& walk,
                 TwinKind kind) {
  if (walk.vertices.size() != walk.edge_ids.size() + 1)
    throw std::invalid_argument("walk_sum: vertex/edge count mismatch");
  const Field& f = lab.field;
  WVector sum(space.dim, 0);
  for (size_t i = 0; i < walk.edge_ids.size(); ++i) {
    int prev = walk.vertices[i];
    int cur = walk.vertices[i + 1];
    const auto& e = inst.edges.at(walk.edge_ids[i]);
    bool ok = (e.first == prev && e.second == cur) || (e.first == cur && e.second == prev);
    if (!ok) throw std::invalid_argument("walk_sum: edge does not join consecutive vertices");
    auto [circ, bullet] = edge_twins(inst, space, lab, walk.edge_ids[i]);
    const WVector& tw = kind == TwinKind::Circ ? circ : bullet;
    uint32_t mu = lab.mu(e, cur);
    for (int j = 0; j < space.dim; ++j)
      sum[j] = static_cast<uint16_t>(f.add(sum[j], f.mul(mu, tw[j])));
  }
  return sum;
}

}  // namespace spp
