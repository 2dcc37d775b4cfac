#include "spp/augment.hpp"

#include <algorithm>
#include <cstring>
#include <stdexcept>

#include "spp/representation.hpp"

namespace spp {

DependenceGraph build_dependence_graph(const DependenceMatrix& dep) {
  DependenceGraph g;
  g.cols = dep.cols;
  g.col_adj.assign(dep.cols, {});
  g.row_adj.assign(dep.num_rows(), {});
  for (int r = 0; r < dep.num_rows(); ++r) {
    const uint16_t* row = dep.data.data() + static_cast<size_t>(r) * dep.cols;
    for (int j = 0; j < dep.cols; ++j) {
      if (row[j] == 0) continue;
      g.row_adj[r].emplace_back(j, row[j]);
      g.col_adj[j].emplace_back(r, row[j]);
    }
  }
  return g;
}

namespace {

// Blossom search over the dependence structure. Elements are laid out so that
// ids 0..N-1 coincide with the columns of D (base singletons, then base-edge
// twins) and ids N.. coincide with the rows of D (non-base twins).
//
// A line acts like a matched edge pairing its twins; singletons are exposed.
// Dependence adjacency is dynamic: every time the search walks through a line
// it commits the corresponding base exchange (the non-basic element of the
// step enters, the basic one leaves) and updates all representation rows, so
// later steps see coefficients with respect to the pivoted base. Candidate
// augmenting sequences are re-validated through the combinatorial base
// checkers before they are accepted.
class Search {
 public:
  Search(const Instance& inst, const Labeling& lab, const FeasibleBase& base,
         const DependenceMatrix& dep)
      : inst_(inst), lab_(lab), base_(base), dep_(dep), f_(lab.field) {
    N_ = dep.cols;
    num_sing_ = static_cast<int>(base.covered.size());
    num_nonbase_rows_ = dep.num_rows();
    num_elems_ = N_ + num_nonbase_rows_;
    partner_.assign(num_elems_, -1);
    line_edge_.assign(num_elems_, -1);
    for (int j = num_sing_; j < N_; ++j) {
      partner_[j] = ((j - num_sing_) ^ 1) + num_sing_;
      line_edge_[j] = dep.col_elems[j].id;
    }
    for (int i = N_; i < num_elems_; ++i) {
      partner_[i] = ((i - N_) ^ 1) + N_;
      line_edge_[i] = dep.row_edges[(i - N_) / 2];
    }
    rows_.resize(static_cast<size_t>(num_elems_) * N_);
    mark_.assign(num_elems_, 0);
  }

  AugmentResult run(const AugmentOptions& opts) {
    AugmentResult res;
    if (num_sing_ < 2) return res;
    for (int root = 0; root < num_sing_; ++root) {
      if (search_from(root, res)) {
        finish(res, opts);
        return res;
      }
    }
    return res;
  }

 private:
  uint16_t* row_ptr(int e) { return rows_.data() + static_cast<size_t>(e) * N_; }

  void reset_state() {
    in_base_.assign(num_elems_, 0);
    slot_of_.assign(num_elems_, -1);
    elem_of_slot_.resize(N_);
    for (int j = 0; j < N_; ++j) {
      in_base_[j] = 1;
      slot_of_[j] = j;
      elem_of_slot_[j] = j;
    }
    nonbasic_.clear();
    pos_in_nonbasic_.assign(num_elems_, -1);
    for (int i = N_; i < num_elems_; ++i) {
      pos_in_nonbasic_[i] = static_cast<int>(nonbasic_.size());
      nonbasic_.push_back(i);
    }
    if (num_nonbase_rows_ > 0)
      std::memcpy(row_ptr(N_), dep_.data.data(),
                  static_cast<size_t>(num_nonbase_rows_) * N_ * sizeof(uint16_t));
    used_.assign(num_elems_, 0);
    pred_.assign(num_elems_, -1);
    rep_.resize(num_elems_);
    for (int i = 0; i < num_elems_; ++i) rep_[i] = i;
    in_cycle_.assign(num_elems_, 0);
  }

  // Current dependence coefficient between u and z, 0 when no edge exists.
  uint32_t coeff(int u, int z) {
    if (in_base_[u] == in_base_[z]) return 0;
    int nb = in_base_[u] ? z : u;
    int bs = in_base_[u] ? u : z;
    return row_ptr(nb)[slot_of_[bs]];
  }

  // Base exchange: enter (non-basic) replaces exit (basic) in its slot.
  void pivot(int enter, int exit) {
    int j = slot_of_[exit];
    const uint16_t* arow = row_ptr(enter);
    uint32_t inv_a = f_.inv(arow[j]);
    for (int w : nonbasic_) {
      if (w == enter) continue;
      uint16_t* wrow = row_ptr(w);
      if (wrow[j] == 0) continue;
      uint32_t factor = f_.mul(wrow[j], inv_a);
      for (int c = 0; c < N_; ++c)
        wrow[c] = static_cast<uint16_t>(f_.sub(wrow[c], f_.mul(factor, arow[c])));
      wrow[j] = static_cast<uint16_t>(factor);
    }
    // Representation of the leaving element over the new base.
    uint16_t* rrow = row_ptr(exit);
    if (rrow != arow) {
      for (int c = 0; c < N_; ++c)
        rrow[c] = static_cast<uint16_t>(f_.neg(f_.mul(inv_a, arow[c])));
      rrow[j] = static_cast<uint16_t>(inv_a);
    }
    in_base_[enter] = 1;
    in_base_[exit] = 0;
    slot_of_[enter] = j;
    elem_of_slot_[j] = enter;
    slot_of_[exit] = -1;
    int pos = pos_in_nonbasic_[enter];
    nonbasic_[pos] = exit;
    pos_in_nonbasic_[exit] = pos;
    pos_in_nonbasic_[enter] = -1;
  }

  int lca_of(int a, int b) {
    ++mark_time_;
    int v = rep_[a];
    int guard = 0;
    while (true) {
      mark_[v] = mark_time_;
      if (partner_[v] < 0) break;  // root singleton
      int q = pred_[partner_[v]];
      if (q < 0) break;
      v = rep_[q];
      if (++guard > 4 * num_elems_) throw std::logic_error("augment: lca walk corrupted");
    }
    v = rep_[b];
    while (mark_[v] != mark_time_) {
      int q = pred_[partner_[v]];
      if (q < 0) throw std::logic_error("augment: lca walk fell off the tree");
      v = rep_[q];
      if (++guard > 8 * num_elems_) throw std::logic_error("augment: lca walk corrupted");
    }
    return v;
  }

  void mark_cycle_path(int v, int stop, int child) {
    int guard = 0;
    while (rep_[v] != stop) {
      in_cycle_[rep_[v]] = 1;
      int w = partner_[v];
      if (w < 0) throw std::logic_error("augment: cycle walk hit a singleton");
      in_cycle_[rep_[w]] = 1;
      pred_[v] = child;
      child = w;
      v = pred_[w];
      if (v < 0) throw std::logic_error("augment: cycle walk missing pred");
      if (++guard > 4 * num_elems_) throw std::logic_error("augment: cycle walk corrupted");
    }
  }

  void form_blossom(int u, int z) {
    int c = lca_of(u, z);
    std::fill(in_cycle_.begin(), in_cycle_.end(), 0);
    mark_cycle_path(u, c, z);
    mark_cycle_path(z, c, u);
    for (int i = 0; i < num_elems_; ++i) {
      if (!in_cycle_[rep_[i]]) continue;
      rep_[i] = c;
      if (!used_[i]) {
        used_[i] = 1;
        queue_.push_back(i);
      }
    }
  }

  // Walks the predecessor structure back to the root and extracts the swap
  // set. Returns true when the resulting base is feasible.
  bool try_augment(int u, int z, AugmentResult& res) {
    std::vector<int> seq;
    seq.push_back(z);
    int v = u;
    int guard = 0;
    while (true) {
      seq.push_back(v);
      if (partner_[v] < 0) break;  // reached the root singleton
      int w = partner_[v];
      seq.push_back(w);
      v = pred_[w];
      if (v < 0) return false;
      if (++guard > 2 * num_elems_) return false;
    }
    if (seq.size() < 4 || seq.size() % 2 != 0) return false;

    std::vector<int> add_lines, remove_lines;
    for (size_t i = 1; i + 1 < seq.size(); i += 2) {
      int a = seq[i], b = seq[i + 1];
      if (partner_[a] != b || line_edge_[a] != line_edge_[b]) return false;
      int e = line_edge_[a];
      if (a < N_)
        remove_lines.push_back(e);
      else
        add_lines.push_back(e);
    }
    if (add_lines.size() != remove_lines.size() + 1) return false;
    int s_term = base_.covered[seq.back()];
    int t_term = base_.covered[seq.front()];
    FeasibleBase next;
    try {
      next = apply_symmetric_difference(inst_, base_, add_lines, {s_term, t_term}, remove_lines);
    } catch (const std::exception&) {
      return false;
    }
    res.augmented = true;
    res.base = std::move(next);
    res.path.s = s_term;
    res.path.t = t_term;
    std::reverse(seq.begin(), seq.end());
    for (size_t i = 1; i + 1 < seq.size(); i += 2) res.path.lines.push_back(line_edge_[seq[i]]);
    return true;
  }

  bool search_from(int root, AugmentResult& res) {
    reset_state();
    used_[root] = 1;
    queue_.clear();
    queue_.push_back(root);
    size_t head = 0;
    std::vector<int> targets;
    while (head < queue_.size()) {
      int u = queue_[head++];
      targets.clear();
      if (!in_base_[u]) {
        const uint16_t* r = row_ptr(u);
        for (int j = 0; j < N_; ++j)
          if (r[j] != 0) targets.push_back(elem_of_slot_[j]);
      } else {
        int j = slot_of_[u];
        for (int w : nonbasic_)
          if (row_ptr(w)[j] != 0) targets.push_back(w);
      }
      std::sort(targets.begin(), targets.end());
      for (int z : targets) {
        if (z == partner_[u]) continue;
        if (rep_[u] == rep_[z]) continue;
        if (coeff(u, z) == 0) continue;  // stale after an earlier pivot
        if (partner_[z] < 0 && !used_[z]) {
          // Exposed singleton: candidate augmenting sequence.
          if (try_augment(u, z, res)) return true;
          ++res.candidates_rejected;
        } else if (used_[z]) {
          form_blossom(u, z);
        } else if (pred_[z] == -1) {
          int zp = partner_[z];
          if (used_[zp] || pred_[zp] != -1) continue;
          pred_[z] = u;
          pivot(in_base_[u] ? z : u, in_base_[u] ? u : z);
          used_[zp] = 1;
          queue_.push_back(zp);
        }
      }
    }
    return false;
  }

  void finish(AugmentResult& res, const AugmentOptions& opts) {
    if (res.base.num_lines() != base_.num_lines() + 1 ||
        res.base.num_singletons() != base_.num_singletons() - 2)
      throw std::logic_error("augment: accepted base has wrong size");
    if (opts.verify) {
      WSpace space = WSpace::make(inst_);
      std::vector<WVector> vecs;
      for (int t : res.base.covered) vecs.push_back(singleton_vec(inst_, space, lab_, t));
      for (int e : res.base.base_edges) {
        auto [c, b] = edge_twins(inst_, space, lab_, e);
        vecs.push_back(c);
        vecs.push_back(b);
      }
      if (rank(vecs, f_) != space.dim)
        throw std::logic_error("augment: new base fails the rank oracle");
    }
  }

  const Instance& inst_;
  const Labeling& lab_;
  const FeasibleBase& base_;
  const DependenceMatrix& dep_;
  const Field& f_;

  int N_ = 0;
  int num_sing_ = 0;
  int num_nonbase_rows_ = 0;
  int num_elems_ = 0;
  std::vector<int> partner_;
  std::vector<int> line_edge_;

  std::vector<uint16_t> rows_;
  std::vector<char> in_base_;
  std::vector<int> slot_of_;
  std::vector<int> elem_of_slot_;
  std::vector<int> nonbasic_;
  std::vector<int> pos_in_nonbasic_;

  std::vector<char> used_;
  std::vector<int> pred_;
  std::vector<int> rep_;
  std::vector<char> in_cycle_;
  std::vector<int> mark_;
  int mark_time_ = 0;
  std::vector<int> queue_;
};

}  // namespace

AugmentResult augment_or_maximum(const Instance& inst, const Labeling& lab, const WSpace& space,
                                 const FeasibleBase& base, const DependenceMatrix& dep,
                                 const AugmentOptions& opts) {
  (void)space;
  Search search(inst, lab, base, dep);
  return search.run(opts);
}

}  // namespace spp
