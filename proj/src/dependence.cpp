#include "spp/dependence.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace spp {

namespace {

constexpr uint32_t kNoPhi = UINT32_MAX;

struct Columns {
  DependenceMatrix skeleton;  // column maps only
};

void build_columns(const Instance& inst, const FeasibleBase& base, DependenceMatrix& dep) {
  dep.col_of_terminal.assign(inst.n + 1, -1);
  dep.col_of_edge_circ.assign(inst.num_edges(), -1);
  dep.col_of_edge_bullet.assign(inst.num_edges(), -1);
  dep.col_elems.clear();
  for (int t : base.covered) {
    dep.col_of_terminal[t] = static_cast<int>(dep.col_elems.size());
    dep.col_elems.push_back({BaseElement::Singleton, t});
  }
  for (int e : base.base_edges) {
    dep.col_of_edge_circ[e] = static_cast<int>(dep.col_elems.size());
    dep.col_elems.push_back({BaseElement::EdgeCirc, e});
    dep.col_of_edge_bullet[e] = static_cast<int>(dep.col_elems.size());
    dep.col_elems.push_back({BaseElement::EdgeBullet, e});
  }
  dep.cols = static_cast<int>(dep.col_elems.size());
}

}  // namespace

DependenceMatrix compute_dependence(const Instance& inst, const Labeling& lab, const WSpace& space,
                                    const FeasibleBase& base, DependenceStats* stats,
                                    RowTable* rows_out, bool reverse_roots) {
  const Field& f = lab.field;
  DependenceMatrix dep;
  build_columns(inst, base, dep);
  if (dep.cols != space.dim)
    throw std::logic_error("compute_dependence: base size mismatch (not a base)");
  const int N = dep.cols;

  DependenceStats local;
  DependenceStats& st = stats ? *stats : local;

  // Adjacency of the forest G[B].
  std::vector<std::vector<std::pair<int, int>>> adj(inst.n + 1);  // (neighbor, edge)
  for (int e : base.base_edges) {
    auto [u, v] = inst.edges[e];
    adj[u].emplace_back(v, e);
    adj[v].emplace_back(u, e);
  }

  RowTable local_rows;
  RowTable& rt = rows_out ? *rows_out : local_rows;
  rt.cols = N;
  rt.circ.assign(static_cast<size_t>(inst.n + 1) * N, 0);
  rt.bullet.assign(static_cast<size_t>(inst.n + 1) * N, 0);
  auto crow = [&](int v) { return rt.circ.data() + static_cast<size_t>(v) * N; };
  auto brow = [&](int v) { return rt.bullet.data() + static_cast<size_t>(v) * N; };

  std::vector<uint32_t> phi(inst.n + 1, kNoPhi);
  std::vector<int> queue;
  queue.reserve(inst.n);

  auto traverse = [&](int root) {
    ++st.traversals;
    const uint32_t mark = lab.theta_of_terminal(inst, root);
    queue.clear();
    queue.push_back(root);
    size_t head = 0;
    phi[root] = mark;
    while (head < queue.size()) {
      int u = queue[head++];
      for (auto [v, e] : adj[u]) {
        if (phi[v] == mark) continue;
        phi[v] = mark;
        queue.push_back(v);
        // v^k = u^k + mu_e(v) * e^k; the parent row is copied in full (it may
        // carry weight on both twin columns of e after a correction step) and
        // the e-column entry is then bumped by mu_e(v).
        std::copy(crow(u), crow(u) + N, crow(v));
        std::copy(brow(u), brow(u) + N, brow(v));
        uint32_t mu = lab.mu(inst.edges[e], v);
        uint16_t* cv = crow(v);
        uint16_t* bv = brow(v);
        int cc = dep.col_of_edge_circ[e];
        int cb = dep.col_of_edge_bullet[e];
        cv[cc] = static_cast<uint16_t>(f.add(cv[cc], mu));
        bv[cb] = static_cast<uint16_t>(f.add(bv[cb], mu));
        st.field_ops += 2 * static_cast<uint64_t>(N) + 2;
      }
    }
  };

  std::vector<int> roots = inst.terminals;
  if (reverse_roots) std::reverse(roots.begin(), roots.end());

  for (int t : roots) {
    int col = dep.col_of_terminal[t];
    if (col >= 0) {
      // Covered terminal: the singleton is a base column; seed and scan once.
      crow(t)[col] = 1;
      brow(t)[col] = static_cast<uint16_t>(lab.theta_of_terminal(inst, t));
      traverse(t);
    } else if (phi[t] != kNoPhi) {
      // Second terminal of a two-terminal component. The tentative rows hold
      // t - t1 and theta-weighted t - t1; solve for the true singleton row.
      uint32_t theta = lab.theta_of_terminal(inst, t);
      if (phi[t] == theta)
        throw std::logic_error(
            "compute_dependence: two terminals of one block share a component");
      uint32_t factor = f.inv(f.sub(phi[t], theta));
      uint16_t* cv = crow(t);
      uint16_t* bv = brow(t);
      for (int j = 0; j < N; ++j) {
        uint32_t c = f.mul(factor, f.sub(f.mul(phi[t], cv[j]), bv[j]));
        cv[j] = static_cast<uint16_t>(c);
        bv[j] = static_cast<uint16_t>(f.mul(theta, c));
      }
      st.field_ops += 5 * static_cast<uint64_t>(N);
      traverse(t);
    } else {
      // First terminal of a two-terminal component: tentative pass with an
      // all-zero root row.
      traverse(t);
    }
  }

  // Dependence rows for both twins of every non-base edge.
  dep.row_of_edge.assign(inst.num_edges(), -1);
  for (int e = 0; e < inst.num_edges(); ++e)
    if (dep.col_of_edge_circ[e] < 0) {
      dep.row_of_edge[e] = static_cast<int>(dep.row_edges.size());
      dep.row_edges.push_back(e);
    }
  dep.data.assign(static_cast<size_t>(2 * dep.row_edges.size()) * N, 0);
  for (size_t i = 0; i < dep.row_edges.size(); ++i) {
    int e = dep.row_edges[i];
    auto [u, v] = inst.edges[e];
    uint32_t mu_u = lab.mu(inst.edges[e], u);
    uint32_t mu_v = lab.mu(inst.edges[e], v);
    uint16_t* dc = dep.data.data() + (2 * i) * N;
    uint16_t* db = dep.data.data() + (2 * i + 1) * N;
    const uint16_t* cu = crow(u);
    const uint16_t* cv = crow(v);
    const uint16_t* bu = brow(u);
    const uint16_t* bv = brow(v);
    for (int j = 0; j < N; ++j) {
      dc[j] = static_cast<uint16_t>(f.add(f.mul(mu_u, cu[j]), f.mul(mu_v, cv[j])));
      db[j] = static_cast<uint16_t>(f.add(f.mul(mu_u, bu[j]), f.mul(mu_v, bv[j])));
    }
    st.field_ops += 6 * static_cast<uint64_t>(N);
  }
  return dep;
}

namespace {

// Sparse form of a base element's vector in W: at most 4 nonzeros.
void add_scaled_element(const Instance& inst, const Labeling& lab, const WSpace& space,
                        const BaseElement& be, uint32_t scale, WVector& acc) {
  if (scale == 0) return;
  const Field& f = lab.field;
  auto add_at = [&](int coord, uint32_t val) {
    acc[coord] = static_cast<uint16_t>(f.add(acc[coord], f.mul(scale, val)));
  };
  if (be.kind == BaseElement::Singleton) {
    add_at(space.sing_of[be.id], 1);
    return;
  }
  TwinKind kind = be.kind == BaseElement::EdgeCirc ? TwinKind::Circ : TwinKind::Bullet;
  const auto& e = inst.edges[be.id];
  for (int endpoint : {e.first, e.second}) {
    uint32_t mu = lab.mu(e, endpoint);
    if (inst.is_terminal(endpoint)) {
      uint32_t w = kind == TwinKind::Circ ? 1 : lab.theta_of_terminal(inst, endpoint);
      add_at(space.sing_of[endpoint], f.mul(mu, w));
    } else {
      int coord = kind == TwinKind::Circ ? space.circ_of[endpoint] : space.bullet_of[endpoint];
      add_at(coord, mu);
    }
  }
}

}  // namespace

bool verify_dependence(const Instance& inst, const Labeling& lab, const WSpace& space,
                       const FeasibleBase& base, const DependenceMatrix& dep, std::string* why) {
  (void)base;
  for (int e : dep.row_edges) {
    for (TwinKind kind : {TwinKind::Circ, TwinKind::Bullet}) {
      WVector acc(space.dim, 0);
      const uint16_t* r = dep.row(e, kind);
      for (int j = 0; j < dep.cols; ++j)
        add_scaled_element(inst, lab, space, dep.col_elems[j], r[j], acc);
      auto [circ, bullet] = edge_twins(inst, space, lab, e);
      const WVector& expect = kind == TwinKind::Circ ? circ : bullet;
      if (acc != expect) {
        if (why)
          *why = "row for edge " + std::to_string(e) +
                 (kind == TwinKind::Circ ? " (circ)" : " (bullet)") + " does not reconstruct";
        return false;
      }
    }
  }
  if (why) why->clear();
  return true;
}

std::string dependence_csv(const Instance& inst, const DependenceMatrix& dep) {
  (void)inst;
  std::ostringstream out;
  out << "row,col,value\n";
  for (size_t i = 0; i < dep.row_edges.size(); ++i) {
    int e = dep.row_edges[i];
    for (TwinKind kind : {TwinKind::Circ, TwinKind::Bullet}) {
      const uint16_t* r = dep.row(e, kind);
      std::string rname = "e" + std::to_string(e) + (kind == TwinKind::Circ ? "o" : "b");
      for (int j = 0; j < dep.cols; ++j) {
        if (r[j] == 0) continue;
        const BaseElement& be = dep.col_elems[j];
        std::string cname = be.kind == BaseElement::Singleton
                                ? "t" + std::to_string(be.id)
                                : "e" + std::to_string(be.id) +
                                      (be.kind == BaseElement::EdgeCirc ? "o" : "b");
        out << rname << ',' << cname << ',' << r[j] << '\n';
      }
    }
  }
  return out.str();
}

}  // namespace spp
