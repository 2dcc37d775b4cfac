#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace spp {

// A problem instance: graph G = (V, E) with vertices 1..n, a terminal set T
// given as a partition into blocks. Parallel edges are allowed, self-loops are
// not. Immutable after construction.
struct Instance {
  int n = 0;
  std::vector<std::pair<int, int>> edges;   // unordered pairs, file order
  std::vector<std::vector<int>> blocks;     // disjoint, non-empty terminal sets

  // Derived lookups, filled by finalize().
  std::vector<int> block_of;                // vertex -> 1-based block id, 0 if non-terminal
  std::vector<int> terminals;               // ascending

  int num_vertices() const { return n; }
  int num_edges() const { return static_cast<int>(edges.size()); }
  int num_terminals() const { return static_cast<int>(terminals.size()); }
  int num_blocks() const { return static_cast<int>(blocks.size()); }
  bool is_terminal(int v) const { return block_of[v] != 0; }

  // Validates invariants and fills the derived lookups. Throws
  // std::invalid_argument on violations.
  void finalize();
};

Instance make_instance(int n, std::vector<std::pair<int, int>> edges,
                       std::vector<std::vector<int>> blocks);

struct Packing {
  std::vector<std::vector<int>> paths;  // vertex sequences
  int size() const { return static_cast<int>(paths.size()); }
};

// Parse error with the 1-based line number where parsing failed.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Instance file format:
//   line 1: "n m b"; next b lines: terminal ids of each block;
//   next m lines: "u v". Lines starting with '#' are ignored.
Instance parse_instance(const std::string& text);
std::string serialize_instance(const Instance& inst);

// "p" on the first line, then one path per line.
std::string serialize_packing(const Packing& p);

// True iff p is a valid S-path packing for inst; otherwise returns the first
// violation found as a message.
bool validate_packing(const Instance& inst, const Packing& p, std::string* violation = nullptr);

struct SubInstance {
  Instance inst;                        // vertices relabeled 1..n_sub, ascending order kept
  std::vector<int> to_global;           // local vertex id -> original id (index 1..n_sub)
  std::vector<int> block_to_global;     // local block index (1-based) -> original block index
};

// Splits into connected components. Blocks may split across components; each
// fragment keeps its original block identity via block_to_global.
std::vector<SubInstance> connected_components(const Instance& inst);

// Deterministic seeded generator: spanning-tree seeding guarantees
// connectivity, k terminals spread over num_blocks non-empty blocks.
Instance random_instance(int n, int m, int k, int num_blocks, uint64_t seed);

}  // namespace spp
