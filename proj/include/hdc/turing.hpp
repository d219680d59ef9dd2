#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "hdc/item_memory.hpp"

namespace hdc {

// Symbolic table of behaviour: for every (state, read symbol) the symbol to
// write, the head move, and the next state. Doubles as the exact reference
// interpreter the vector emulation is checked against.
class TmBehavior {
 public:
  struct Rule {
    std::uint16_t write = 0;
    std::uint16_t next = 0;
    int move = 0;  // -1 left, +1 right
  };

  TmBehavior(std::vector<std::string> states, std::vector<std::string> symbols);

  void set_rule(const std::string& state, const std::string& read,
                const std::string& write, char move, const std::string& next);
  const Rule& rule(std::size_t state, std::size_t symbol) const;
  bool total() const;  // every (state, symbol) covered

  const std::vector<std::string>& states() const { return states_; }
  const std::vector<std::string>& symbols() const { return symbols_; }
  std::size_t state_index(const std::string& name) const;
  std::size_t symbol_index(const std::string& name) const;

  // Row index in the hetero memory layout: state-major, then symbol.
  std::size_t row_index(std::size_t state, std::size_t symbol) const {
    return state * symbols_.size() + symbol;
  }

  // The 2-state, 4-symbol machine used throughout.
  static TmBehavior two_four();

  // One rule per line: <state> <read> <write> <move L|R> <next>.
  static TmBehavior load(std::istream& in);
  void save(std::ostream& out) const;

 private:
  std::vector<std::string> states_;
  std::vector<std::string> symbols_;
  std::vector<Rule> rules_;
  std::vector<bool> defined_;
};

// Symbolic machine configuration for the reference interpreter.
struct TmConfig {
  std::vector<std::uint16_t> tape;  // symbol indices
  std::int64_t head = 0;
  std::uint16_t state = 0;
  std::uint16_t blank = 0;

  std::uint16_t read() const { return tape[static_cast<std::size_t>(head)]; }
};

// Applies one rule; extends the tape with blanks when the head walks off.
void tm_symbolic_step(const TmBehavior& behavior, TmConfig& config);

// Vector-symbolic machine: item memories for states and symbols plus a
// heteroassociative rule memory addressed by bind(state, symbol).
class TmMachine {
 public:
  TmMachine(const TmBehavior& behavior, ItemMemory state_cb, ItemMemory sym_cb);

  std::size_t dim() const { return state_cb_.dim(); }
  const ItemMemory& state_cb() const { return state_cb_; }
  const ItemMemory& sym_cb() const { return sym_cb_; }
  const HeteroMemory& rules() const { return rules_; }
  const TmBehavior& behavior() const { return behavior_; }

  const TmBehavior::Rule& row_rule(std::size_t row) const { return row_rules_[row]; }

 private:
  TmBehavior behavior_;
  ItemMemory state_cb_;
  ItemMemory sym_cb_;
  HeteroMemory rules_;
  std::vector<TmBehavior::Rule> row_rules_;
};

// Builds the three memories; on an address collision the seed vectors are
// regenerated from the next substream. The table must be total.
TmMachine tm_build(const TmBehavior& behavior, std::size_t dim, Rng& rng,
                   int max_attempts = 10000);

// Tape of one hypervector per cell. Cells always hold clean seed vectors in
// the noiseless case; noise is injected at read time only.
struct TmTape {
  std::vector<Hypervector> cells;
  std::int64_t head = 0;
  Hypervector state;
  std::string blank;
};

TmTape tm_initial_tape(const TmMachine& m, std::span<const std::string> symbols,
                       std::size_t head, const std::string& state,
                       std::string blank);

// One update: read the cell (with exact-count sign flips at rate noise_p),
// query the rule memory with bind(state, cell), write the payload symbol's
// clean seed vector, take the payload next state, move the head. The chosen
// rule row is reported through chosen_row when non-null.
TmTape tm_step(const TmMachine& m, TmTape tape, double noise_p, Rng& rng,
               std::size_t* chosen_row = nullptr);

// Decodes a tape cell back to a symbol name via clean-up.
std::string tm_decode_cell(const TmMachine& m, const TmTape& tape,
                           std::size_t cell);

// Runs the emulation against the symbolic interpreter; returns how many steps
// matched before the first divergence (== steps when the run is clean).
std::size_t tm_run_vs_oracle(const TmMachine& m, TmConfig config,
                             std::size_t steps, double noise_p, Rng& rng);

struct TmDimensionSearchResult {
  std::vector<std::size_t> per_trial_dims;
  double mean_dim() const;
};

struct TmDimensionSearchOptions {
  std::size_t start_dim = 16;
  std::size_t tape_length = 64;
  std::size_t max_dim = 1 << 20;
};

// Fig.-12-style loop: run target_steps against the oracle; on the first
// mismatch grow the dimension by 10% (ceil) and rebuild. One searched
// dimension per trial, each from its own derived substream.
TmDimensionSearchResult tm_dimension_search(
    const TmBehavior& behavior, double noise_p, std::size_t target_steps,
    std::size_t trials, std::uint64_t seed,
    const TmDimensionSearchOptions& options = {});

}  // namespace hdc
