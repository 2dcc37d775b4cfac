#include "spp/instance.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <unordered_set>

namespace spp {

void Instance::finalize() {
  if (n < 0) throw std::invalid_argument("instance: negative vertex count");
  block_of.assign(n + 1, 0);
  terminals.clear();
  for (size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty())
      throw std::invalid_argument("instance: block " + std::to_string(b + 1) + " is empty");
    for (int t : blocks[b]) {
      if (t < 1 || t > n)
        throw std::invalid_argument("instance: terminal " + std::to_string(t) + " out of range");
      if (block_of[t] != 0)
        throw std::invalid_argument("instance: terminal " + std::to_string(t) +
                                    " appears in two blocks");
      block_of[t] = static_cast<int>(b + 1);
      terminals.push_back(t);
    }
  }
  std::sort(terminals.begin(), terminals.end());
  for (auto [u, v] : edges) {
    if (u < 1 || u > n || v < 1 || v > n)
      throw std::invalid_argument("instance: edge endpoint out of range");
    if (u == v) throw std::invalid_argument("instance: self-loop on vertex " + std::to_string(u));
  }
}

Instance make_instance(int n, std::vector<std::pair<int, int>> edges,
                       std::vector<std::vector<int>> blocks) {
  Instance inst;
  inst.n = n;
  inst.edges = std::move(edges);
  inst.blocks = std::move(blocks);
  inst.finalize();
  return inst;
}

namespace {

std::vector<int> parse_int_line(const std::string& line, int lineno) {
  std::istringstream ss(line);
  std::vector<int> out;
  long long x;
  while (ss >> x) {
    if (x < -1000000000LL || x > 1000000000LL) throw ParseError(lineno, "integer out of range");
    out.push_back(static_cast<int>(x));
  }
  std::string rest;
  if (ss.fail() && !ss.eof()) throw ParseError(lineno, "expected integers");
  return out;
}

}  // namespace

Instance parse_instance(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  // Logical lines, with their physical line numbers.
  std::vector<std::pair<int, std::vector<int>>> rows;
  while (std::getline(in, line)) {
    ++lineno;
    size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    rows.emplace_back(lineno, parse_int_line(line, lineno));
  }
  if (rows.empty()) throw ParseError(1, "missing header line");
  const auto& [hline, header] = rows[0];
  if (header.size() != 3) throw ParseError(hline, "header must be 'n m b'");
  int n = header[0], m = header[1], b = header[2];
  if (n < 0 || m < 0 || b < 0) throw ParseError(hline, "header values must be non-negative");
  if (static_cast<int>(rows.size()) != 1 + b + m)
    throw ParseError(rows.back().first, "expected " + std::to_string(1 + b + m) +
                                            " data lines, found " + std::to_string(rows.size()));
  Instance inst;
  inst.n = n;
  inst.blocks.resize(b);
  for (int i = 0; i < b; ++i) {
    const auto& [ln, ids] = rows[1 + i];
    if (ids.empty()) throw ParseError(ln, "block line is empty");
    for (int t : ids) {
      if (t < 1 || t > n) throw ParseError(ln, "terminal " + std::to_string(t) + " out of range");
    }
    inst.blocks[i] = ids;
  }
  for (int i = 0; i < m; ++i) {
    const auto& [ln, uv] = rows[1 + b + i];
    if (uv.size() != 2) throw ParseError(ln, "edge line must be 'u v'");
    if (uv[0] < 1 || uv[0] > n || uv[1] < 1 || uv[1] > n)
      throw ParseError(ln, "edge endpoint out of range");
    if (uv[0] == uv[1]) throw ParseError(ln, "self-loop not allowed");
    inst.edges.emplace_back(uv[0], uv[1]);
  }
  try {
    inst.finalize();
  } catch (const std::invalid_argument& e) {
    throw ParseError(hline, e.what());
  }
  return inst;
}

std::string serialize_instance(const Instance& inst) {
  std::ostringstream out;
  out << inst.n << ' ' << inst.num_edges() << ' ' << inst.num_blocks() << '\n';
  for (const auto& blk : inst.blocks) {
    for (size_t i = 0; i < blk.size(); ++i) out << (i ? " " : "") << blk[i];
    out << '\n';
  }
  for (auto [u, v] : inst.edges) out << u << ' ' << v << '\n';
  return out.str();
}

std::string serialize_packing(const Packing& p) {
  std::ostringstream out;
  out << p.size() << '\n';
  for (const auto& path : p.paths) {
    for (size_t i = 0; i < path.size(); ++i) out << (i ? " " : "") << path[i];
    out << '\n';
  }
  return out.str();
}

bool validate_packing(const Instance& inst, const Packing& p, std::string* violation) {
  auto fail = [&](const std::string& msg) {
    if (violation) *violation = msg;
    return false;
  };
  // Multi-edge lookup: endpoint pair -> remaining multiplicity.
  auto edge_key = [&](int u, int v) {
    if (u > v) std::swap(u, v);
    return static_cast<int64_t>(u) * (inst.n + 1) + v;
  };
  std::vector<char> used(inst.n + 1, 0);
  std::unordered_set<int64_t> has_edge;
  for (auto [u, v] : inst.edges) has_edge.insert(edge_key(u, v));

  for (size_t pi = 0; pi < p.paths.size(); ++pi) {
    const auto& path = p.paths[pi];
    std::string tag = "path " + std::to_string(pi + 1);
    if (path.size() < 2) return fail(tag + ": fewer than two vertices");
    for (int v : path) {
      if (v < 1 || v > inst.n) return fail(tag + ": vertex " + std::to_string(v) + " out of range");
      if (used[v]) return fail(tag + ": vertex " + std::to_string(v) + " reused");
      used[v] = 1;
    }
    int s = path.front(), t = path.back();
    if (!inst.is_terminal(s)) return fail(tag + ": endpoint " + std::to_string(s) + " not a terminal");
    if (!inst.is_terminal(t)) return fail(tag + ": endpoint " + std::to_string(t) + " not a terminal");
    if (inst.block_of[s] == inst.block_of[t])
      return fail(tag + ": endpoints in the same block");
    for (size_t i = 1; i + 1 < path.size(); ++i)
      if (inst.is_terminal(path[i]))
        return fail(tag + ": internal vertex " + std::to_string(path[i]) + " is a terminal");
    for (size_t i = 0; i + 1 < path.size(); ++i)
      if (!has_edge.count(edge_key(path[i], path[i + 1])))
        return fail(tag + ": no edge " + std::to_string(path[i]) + "-" + std::to_string(path[i + 1]));
  }
  if (violation) violation->clear();
  return true;
}

std::vector<SubInstance> connected_components(const Instance& inst) {
  std::vector<std::vector<std::pair<int, int>>> adj(inst.n + 1);  // (neighbor, edge id)
  for (int e = 0; e < inst.num_edges(); ++e) {
    auto [u, v] = inst.edges[e];
    adj[u].emplace_back(v, e);
    adj[v].emplace_back(u, e);
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
      for (auto [v, e] : adj[u]) {
        (void)e;
        if (comp[v] == -1) {
          comp[v] = ncomp;
          stack.push_back(v);
        }
      }
    }
    ++ncomp;
  }

  std::vector<SubInstance> out(ncomp);
  std::vector<int> local_id(inst.n + 1, 0);
  for (int v = 1; v <= inst.n; ++v) {
    SubInstance& sub = out[comp[v]];
    if (sub.to_global.empty()) sub.to_global.push_back(0);  // 1-based
    sub.to_global.push_back(v);
    local_id[v] = static_cast<int>(sub.to_global.size()) - 1;
    sub.inst.n++;
  }
  for (auto [u, v] : inst.edges)
    out[comp[u]].inst.edges.emplace_back(local_id[u], local_id[v]);
  for (int b = 0; b < inst.num_blocks(); ++b) {
    // A block may split; each fragment keeps the original block index.
    std::vector<std::vector<int>> frag(ncomp);
    for (int t : inst.blocks[b]) frag[comp[t]].push_back(local_id[t]);
    for (int c = 0; c < ncomp; ++c) {
      if (frag[c].empty()) continue;
      out[c].inst.blocks.push_back(frag[c]);
      out[c].block_to_global.push_back(b + 1);
    }
  }
  for (auto& sub : out) {
    if (sub.to_global.empty()) sub.to_global.push_back(0);
    sub.inst.finalize();
  }
  return out;
}

Instance random_instance(int n, int m, int k, int num_blocks, uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random_instance: n must be >= 1");
  if (k > n) throw std::invalid_argument("random_instance: k > n");
  if (k < 0 || num_blocks < 0) throw std::invalid_argument("random_instance: negative parameter");
  if (num_blocks > k) throw std::invalid_argument("random_instance: num_blocks > k");
  if (k > 0 && num_blocks == 0) throw std::invalid_argument("random_instance: k > 0 needs blocks");
  if (m < n - 1) throw std::invalid_argument("random_instance: m < n-1 cannot be connected");

  std::mt19937_64 rng(seed);
  auto next = [&](int bound) { return static_cast<int>(rng() % static_cast<uint64_t>(bound)); };

  Instance inst;
  inst.n = n;
  // Random recursive tree over a random vertex order keeps it connected.
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i + 1;
  for (int i = n - 1; i > 0; --i) std::swap(order[i], order[next(i + 1)]);
  for (int i = 1; i < n; ++i) {
    int u = order[i], v = order[next(i)];
    inst.edges.emplace_back(u, v);
  }
  for (int e = n - 1; e < m; ++e) {
    if (n < 2) throw std::invalid_argument("random_instance: extra edges need n >= 2");
    int u = 1 + next(n), v = 1 + next(n - 1);
    if (v >= u) ++v;  // avoid self-loop, parallels allowed
    inst.edges.emplace_back(u, v);
  }
  // k terminals over num_blocks non-empty blocks.
  std::vector<int> verts(n);
  for (int i = 0; i < n; ++i) verts[i] = i + 1;
  for (int i = n - 1; i > 0; --i) std::swap(verts[i], verts[next(i + 1)]);
  inst.blocks.assign(num_blocks, {});
  for (int i = 0; i < k; ++i) {
    int b = i < num_blocks ? i : next(num_blocks);
    inst.blocks[b].push_back(verts[i]);
  }
  for (auto& blk : inst.blocks) std::sort(blk.begin(), blk.end());
  inst.finalize();
  return inst;
}

}  // namespace spp
