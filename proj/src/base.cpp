#include "spp/base.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace spp {

namespace {

// Components of (V, edge_set) as a vertex -> component id map.
std::vector<int> component_map(const Instance& inst, const std::vector<int>& edge_set,
                               int* count_out) {
  std::vector<std::vector<int>> adj(inst.n + 1);
  for (int e : edge_set) {
    auto [u, v] = inst.edges.at(e);
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<int> comp(inst.n + 1, -1);
  int ncomp = 0;
  std::vector<int> stack;
  for (int s = 1; s <= inst.n; ++s) {
    if (comp[s] != -1) continue;
    comp[s] = ncomp;
    stack.push_back(s);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v : adj[u])
        if (comp[v] == -1) {
          comp[v] = ncomp;
          stack.push_back(v);
        }
    }
    ++ncomp;
  }
  if (count_out) *count_out = ncomp;
  return comp;
}

bool check_feasible(const Instance& inst, const std::vector<int>& covered,
                    const std::vector<int>& edge_set, bool base_conditions,
                    std::string* violation) {
  auto fail = [&](const std::string& msg) {
    if (violation) *violation = msg;
    return false;
  };
  std::vector<char> covered_mask(inst.n + 1, 0);
  for (int t : covered) {
    if (t < 1 || t > inst.n || !inst.is_terminal(t))
      return fail("covered vertex " + std::to_string(t) + " is not a terminal");
    covered_mask[t] = 1;
  }
  int ncomp = 0;
  std::vector<int> comp = component_map(inst, edge_set, &ncomp);

  std::vector<int> comp_size(ncomp, 0), comp_edges(ncomp, 0);
  std::vector<int> comp_terms(ncomp, 0), comp_cov(ncomp, 0);
  for (int v = 1; v <= inst.n; ++v) {
    ++comp_size[comp[v]];
    if (inst.is_terminal(v)) ++comp_terms[comp[v]];
    if (covered_mask[v]) ++comp_cov[comp[v]];
  }
  for (int e : edge_set) ++comp_edges[comp[inst.edges.at(e).first]];

  // (a) each component of G[U] is a tree: connected with |Z|-1 edges.
  for (int c = 0; c < ncomp; ++c)
    if (comp_edges[c] != comp_size[c] - 1)
      return fail("component " + std::to_string(c) + " has a cycle");

  // (b) at most one terminal per block in each component.
  for (const auto& blk : inst.blocks) {
    std::vector<int> comps;
    comps.reserve(blk.size());
    for (int t : blk) comps.push_back(comp[t]);
    std::sort(comps.begin(), comps.end());
    if (std::adjacent_find(comps.begin(), comps.end()) != comps.end())
      return fail("two terminals of one block share a component");
  }

  // (c) |Z∩T| + |Z∩T[U]| <= 2, and for bases (d) Z∩T nonempty, (e) equality.
  for (int c = 0; c < ncomp; ++c) {
    int s = comp_terms[c] + comp_cov[c];
    if (s > 2) return fail("component " + std::to_string(c) + " has terminal weight > 2");
    if (base_conditions) {
      if (comp_terms[c] == 0)
        return fail("component " + std::to_string(c) + " has no terminal");
      if (s != 2) return fail("component " + std::to_string(c) + " has terminal weight != 2");
    }
  }
  if (violation) violation->clear();
  return true;
}

}  // namespace

void FeasibleBase::refresh_components(const Instance& inst) {
  comp_of = component_map(inst, base_edges, &num_components);
  comp_terminals.assign(num_components, {});
  comp_covered.assign(num_components, {});
  covered_mask.assign(inst.n + 1, 0);
  for (int t : covered) covered_mask[t] = 1;
  for (int t : inst.terminals) comp_terminals[comp_of[t]].push_back(t);
  for (int t : covered) comp_covered[comp_of[t]].push_back(t);
}

FeasibleBase initialize_base(const Instance& inst) {
  if (inst.num_terminals() == 0)
    throw std::invalid_argument("initialize_base: instance has no terminal");
  std::vector<std::vector<std::pair<int, int>>> adj(inst.n + 1);
  for (int e = 0; e < inst.num_edges(); ++e) {
    auto [u, v] = inst.edges[e];
    adj[u].emplace_back(v, e);
    adj[v].emplace_back(u, e);
  }
  // Every vertex adopts the first terminal tree that reaches it; terminals
  // seed the queue in ascending order, edges are scanned in input order.
  std::vector<char> reached(inst.n + 1, 0);
  std::deque<int> queue;
  for (int t : inst.terminals) {
    reached[t] = 1;
    queue.push_back(t);
  }
  FeasibleBase base;
  base.covered = inst.terminals;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (auto [v, e] : adj[u]) {
      if (reached[v]) continue;
      reached[v] = 1;
      base.base_edges.push_back(e);
      queue.push_back(v);
    }
  }
  for (int v = 1; v <= inst.n; ++v)
    if (!reached[v])
      throw std::invalid_argument("initialize_base: instance is not connected");
  std::sort(base.base_edges.begin(), base.base_edges.end());
  base.refresh_components(inst);
  std::string why;
  if (!is_feasible_base(inst, base.covered, base.base_edges, &why))
    throw std::logic_error("initialize_base: produced an infeasible base: " + why);
  return base;
}

bool is_feasible_independent(const Instance& inst, const std::vector<int>& covered_terminals,
                             const std::vector<int>& edge_set, std::string* violation) {
  return check_feasible(inst, covered_terminals, edge_set, false, violation);
}

bool is_feasible_base(const Instance& inst, const std::vector<int>& covered_terminals,
                      const std::vector<int>& edge_set, std::string* violation) {
  return check_feasible(inst, covered_terminals, edge_set, true, violation);
}

FeasibleBase make_base(const Instance& inst, std::vector<int> covered_terminals,
                       std::vector<int> edge_set) {
  std::sort(covered_terminals.begin(), covered_terminals.end());
  std::sort(edge_set.begin(), edge_set.end());
  std::string why;
  if (!is_feasible_base(inst, covered_terminals, edge_set, &why))
    throw std::invalid_argument("make_base: not a feasible base: " + why);
  FeasibleBase base;
  base.covered = std::move(covered_terminals);
  base.base_edges = std::move(edge_set);
  base.refresh_components(inst);
  return base;
}

FeasibleBase apply_symmetric_difference(const Instance& inst, const FeasibleBase& base,
                                        const std::vector<int>& add_lines,
                                        const std::vector<int>& remove_terminals,
                                        const std::vector<int>& remove_lines) {
  std::vector<char> in_cov(inst.n + 1, 0), in_edge(inst.num_edges(), 0);
  for (int t : base.covered) in_cov[t] = 1;
  for (int e : base.base_edges) in_edge[e] = 1;
  for (int t : remove_terminals) {
    if (t < 1 || t > inst.n || !in_cov[t])
      throw std::invalid_argument("apply_symmetric_difference: removed singleton not in base");
    in_cov[t] = 0;
  }
  for (int e : remove_lines) {
    if (e < 0 || e >= inst.num_edges() || !in_edge[e])
      throw std::invalid_argument("apply_symmetric_difference: removed line not in base");
    in_edge[e] = 0;
  }
  for (int e : add_lines) {
    if (e < 0 || e >= inst.num_edges())
      throw std::invalid_argument("apply_symmetric_difference: added line out of range");
    if (in_edge[e])
      throw std::invalid_argument("apply_symmetric_difference: added line already in base");
    in_edge[e] = 1;
  }
  FeasibleBase out;
  for (int t = 1; t <= inst.n; ++t)
    if (in_cov[t]) out.covered.push_back(t);
  for (int e = 0; e < inst.num_edges(); ++e)
    if (in_edge[e]) out.base_edges.push_back(e);
  std::string why;
  if (!is_feasible_base(inst, out.covered, out.base_edges, &why))
    throw std::logic_error("apply_symmetric_difference: result not a feasible base: " + why);
  out.refresh_components(inst);
  return out;
}

std::string dump(const Instance& inst, const FeasibleBase& base) {
  std::ostringstream out;
  out << "B: terminals=";
  for (size_t i = 0; i < base.covered.size(); ++i) out << (i ? "," : "") << base.covered[i];
  out << " edges=";
  for (size_t i = 0; i < base.base_edges.size(); ++i) {
    auto [u, v] = inst.edges[base.base_edges[i]];
    out << (i ? "," : "") << u << "-" << v;
  }
  return out.str();
}

}  // namespace spp
