#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "spp/field.hpp"
#include "spp/instance.hpp"

namespace spp {

// Dense coordinate vector over W, length 2n-k. Entries are residues mod q.
using WVector = std::vector<uint16_t>;

enum class TwinKind : uint8_t { Circ = 0, Bullet = 1 };

// Coordinate layout of the (2n-k)-dimensional space W: one singleton
// coordinate per terminal, a circ and a bullet coordinate per non-terminal.
struct WSpace {
  int n = 0;
  int k = 0;
  int dim = 0;  // 2n - k
  std::vector<int> sing_of;    // vertex -> coord, -1 if non-terminal
  std::vector<int> circ_of;    // vertex -> coord, -1 if terminal
  std::vector<int> bullet_of;  // vertex -> coord, -1 if terminal

  static WSpace make(const Instance& inst);
};

// theta: block -> nonzero scalar, injective; mu: +1 on the smaller endpoint of
// each edge, -1 on the larger (flipped when flip_mu is set, which must not
// change the packing size).
struct Labeling {
  Field field;
  std::vector<uint32_t> theta_of_block;  // index 1..b
  bool flip_mu = false;

  uint32_t theta_of_terminal(const Instance& inst, int t) const {
    return theta_of_block[inst.block_of[t]];
  }
  // mu_e(endpoint) as a residue (1 or q-1).
  uint32_t mu(const std::pair<int, int>& edge, int endpoint) const {
    bool plus = endpoint == std::min(edge.first, edge.second);
    if (flip_mu) plus = !plus;
    return plus ? 1 : field.modulus() - 1;
  }
};

// theta(block i) = i, 1-based; requires |S| < q so every label is nonzero.
// An optional permutation of 1..b reassigns labels (metamorphic tests).
Labeling make_labeling(const Instance& inst, uint32_t q,
                       const std::vector<uint32_t>& theta_perm = {});

WVector singleton_vec(const Instance& inst, const WSpace& space, const Labeling& lab, int t);
WVector vertex_twin(const Instance& inst, const WSpace& space, const Labeling& lab, int v,
                    TwinKind kind);
std::pair<WVector, WVector> edge_twins(const Instance& inst, const WSpace& space,
                                       const Labeling& lab, int edge_id);

// Exact rank over F_q by Gaussian elimination. Verification only; never on the
// solve path.
int rank(std::vector<WVector> vectors, const Field& field);

// Walk given as v_0, e_1, v_1, ..., e_k, v_k; returns sum of
// mu_{e_i}(v_i) * e_i^kind, which equals v_k^kind - v_0^kind.
struct Walk {
  std::vector<int> vertices;  // k+1 entries
  std::vector<int> edge_ids;  // k entries
};

WVector walk_sum(const Instance& inst, const WSpace& space, const Labeling& lab, const Walk& walk,
                 TwinKind kind);

}  // namespace spp
