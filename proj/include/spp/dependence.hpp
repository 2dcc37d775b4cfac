#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spp/base.hpp"
#include "spp/representation.hpp"

namespace spp {

// A base element, used as a column of the dependence matrix.
struct BaseElement {
  enum Kind : uint8_t { Singleton, EdgeCirc, EdgeBullet };
  Kind kind;
  int id;  // terminal vertex for Singleton, edge id otherwise

  bool operator==(const BaseElement&) const = default;
};

// Rows indexed by both twins of every non-base edge, columns by B. Dense.
struct DependenceMatrix {
  int cols = 0;
  std::vector<BaseElement> col_elems;       // column -> base element
  std::vector<int> col_of_terminal;         // vertex -> column, -1 if absent
  std::vector<int> col_of_edge_circ;        // edge -> column, -1 if absent
  std::vector<int> col_of_edge_bullet;
  std::vector<int> row_edges;               // non-base edge ids, ascending
  std::vector<int> row_of_edge;             // edge -> circ row index, -1 if in base
  std::vector<uint16_t> data;               // 2*row_edges.size() rows, row-major

  const uint16_t* row(int edge, TwinKind kind) const {
    return data.data() + static_cast<size_t>(2 * row_of_edge[edge] + (kind == TwinKind::Bullet)) * cols;
  }
  int num_rows() const { return static_cast<int>(2 * row_edges.size()); }
};

// Representation of every vertex-twin with respect to B, as produced by the
// forest traversals. Exposed for the reconstruction tests.
struct RowTable {
  int cols = 0;
  std::vector<uint16_t> circ;    // (n+1) rows, row-major
  std::vector<uint16_t> bullet;

  const uint16_t* circ_row(int v) const { return circ.data() + static_cast<size_t>(v) * cols; }
  const uint16_t* bullet_row(int v) const { return bullet.data() + static_cast<size_t>(v) * cols; }
};

struct DependenceStats {
  uint64_t field_ops = 0;  // row-entry operations (copies, adds, muls)
  int traversals = 0;      // component scans; 1 or 2 per component
};

// Algorithm: one traversal per covered component seeded at its covered
// terminal, two traversals per two-terminal component (tentative rows from the
// first root, corrected singleton row, then a true second pass). O(mn) field
// operations. reverse_roots flips the terminal iteration order (the output
// must not change; representations over a base are unique).
DependenceMatrix compute_dependence(const Instance& inst, const Labeling& lab, const WSpace& space,
                                    const FeasibleBase& base, DependenceStats* stats = nullptr,
                                    RowTable* rows_out = nullptr, bool reverse_roots = false);

// The defining identity: for every row w, sum_b d(w,b) * vector(b) == w.
bool verify_dependence(const Instance& inst, const Labeling& lab, const WSpace& space,
                       const FeasibleBase& base, const DependenceMatrix& dep,
                       std::string* why = nullptr);

// Debug CSV: "row,col,value" per nonzero entry.
std::string dependence_csv(const Instance& inst, const DependenceMatrix& dep);

}  // namespace spp
