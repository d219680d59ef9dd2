#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hdc/item_memory.hpp"

namespace hdc {

// Nondeterministic string automaton in superposition. One state per base
// position (s0..sn); transition i is s_{i-1} * b_i * permute(s_i, 1), and the
// automaton vector is the exact sum of all transitions. Repeated base symbols
// share one seed vector; every position gets its own state vector.
class StringAutomaton {
 public:
  StringAutomaton(ItemMemory state_mem, ItemMemory sym_cb, Accumulator beta,
                  std::vector<std::string> base);

  std::size_t dim() const { return beta_.dim(); }
  std::size_t base_len() const { return base_.size(); }
  const std::vector<std::string>& base() const { return base_; }
  const ItemMemory& state_mem() const { return state_mem_; }
  const ItemMemory& sym_cb() const { return sym_cb_; }
  const Accumulator& beta() const { return beta_; }

 private:
  ItemMemory state_mem_;
  ItemMemory sym_cb_;
  Accumulator beta_;
  std::vector<std::string> base_;
};

// Seed vectors are drawn for `alphabet` (which must cover the base symbols),
// or for the base's distinct symbols when the alphabet is empty. Queries may
// use any codebook symbol; symbols outside it are an error.
StringAutomaton build_string_automaton(std::span<const std::string> base,
                                       std::size_t dim, Rng& rng,
                                       std::span<const std::string> alphabet = {});

struct QueryOutcome {
  bool present = false;
  std::int64_t score = 0;                // best final-state score
  std::vector<std::size_t> positions;    // match end indices (clean-up variant)
  // per-step state weights, one row per recurrence step (when recorded)
  std::optional<std::vector<std::vector<std::int64_t>>> state_weights;
};

enum class SearchVariant { Original, Cleanup };

// Original recurrence p_j = permute(p_{j-1} * beta * q_j, -1) on exact
// integers, starting from the superposition of all states. Scores are final
// dots with the state memory; a full match scores about N. Throws when the
// exact integer range would overflow (components grow as (n+1) * n^|Q|).
QueryOutcome query_original(const StringAutomaton& sa,
                            std::span<const std::string> query,
                            std::int64_t threshold, bool record_weights = false);

// Clean-up variant: after every step the state is projected onto the state
// memory. Weights are exact int64 fixed-point anchored at N (each projection
// divides the integer dot by N, the self-similarity gain), so a sustained
// match keeps weight about N while crosstalk stays near N*sqrt((n+1)/N).
// Positions are the states whose final weight clears the threshold.
QueryOutcome query_cleanup(const StringAutomaton& sa,
                           std::span<const std::string> query,
                           std::int64_t threshold, bool record_weights = false);

QueryOutcome query_string(const StringAutomaton& sa, SearchVariant variant,
                          std::span<const std::string> query,
                          std::int64_t threshold, bool record_weights = false);

// Empirical threshold: runs the recurrence on `trials` random absent queries
// of the given length and returns the midpoint between the 99.9th percentile
// of their best scores and N. trials must be >= 100.
std::int64_t calibrate_threshold(const StringAutomaton& sa,
                                 SearchVariant variant, std::size_t query_len,
                                 Rng& rng, std::size_t trials);

// Exact end positions of query in base (naive scan); the reference the
// superposition search is judged against.
std::vector<std::size_t> naive_match_end_positions(
    std::span<const std::string> base, std::span<const std::string> query);

}  // namespace hdc
