#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "hdc/item_memory.hpp"

namespace hdc {

// Elementary CA rule: next center state per 3-bit neighborhood, indexed by
// (left << 2) | (center << 1) | right.
using CaRule = std::array<std::uint8_t, 8>;

// Wolfram numbering: bit k of the code is the next state of neighborhood k.
CaRule ca_rule_from_number(unsigned code);

// One neighborhood per line: <left><center><right> <next>, e.g. "110 1".
CaRule load_ca_rule(std::istream& in);
void save_ca_rule(const CaRule& rule, std::ostream& out);

// Exact reference interpreter, periodic boundary.
std::vector<std::uint8_t> ca_symbolic_step(const std::vector<std::uint8_t>& bits,
                                           const CaRule& rule);

// Vector emulation: role memory (l, c, r), state memory (0, 1), and a rule
// memory whose eight addresses are the normalized sums of the three bound
// role/state pairs per neighborhood.
class CaMachine {
 public:
  CaMachine(const CaRule& rule, ItemMemory role_cb, ItemMemory state_cb);

  std::size_t dim() const { return state_cb_.dim(); }
  const ItemMemory& role_cb() const { return role_cb_; }
  const ItemMemory& state_cb() const { return state_cb_; }
  const HeteroMemory& rules() const { return rules_; }
  const CaRule& rule() const { return rule_; }
  std::uint8_t row_payload(std::size_t row) const { return row_payload_[row]; }

 private:
  CaRule rule_;
  ItemMemory role_cb_;
  ItemMemory state_cb_;
  HeteroMemory rules_;
  std::vector<std::uint8_t> row_payload_;
};

// Regenerates the seed vectors on address collisions.
CaMachine ca_build(const CaRule& rule, std::size_t dim, Rng& rng,
                   int max_attempts = 10000);

// Grid state as one bipolar vector: normalize(sum_j permute(state_j, j)),
// positions numbered 1..length.
struct CaGrid {
  Hypervector vec;
  std::size_t length = 0;
};

CaGrid ca_encode_grid(const std::vector<std::uint8_t>& bits, const CaMachine& m);

// Per-position clean-up against the two state vectors.
std::vector<std::uint8_t> ca_decode_grid(const CaGrid& grid, const CaMachine& m);

// One synchronous update. Exact-count sign flips at rate noise_p are applied
// to the grid vector first; each position then recovers its neighborhood as
// the exact three-term accumulator l*rho^-(j-1) + c*rho^-j + r*rho^-(j+1)
// (indices wrapped modulo the length) and looks up the rule memory with it.
// The next grid is the normalized sum of the returned state vectors.
CaGrid ca_step(const CaGrid& grid, const CaMachine& m, double noise_p, Rng& rng);

}  // namespace hdc
