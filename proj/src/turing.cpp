#include "hdc/turing.hpp"

#include <cmath>
#include <istream>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hdc {

TmBehavior::TmBehavior(std::vector<std::string> states,
                       std::vector<std::string> symbols)
    : states_(std::move(states)),
      symbols_(std::move(symbols)),
      rules_(states_.size() * symbols_.size()),
      defined_(states_.size() * symbols_.size(), false) {
  if (states_.empty() || symbols_.empty())
    throw std::invalid_argument("behaviour table needs states and symbols");
}

std::size_t TmBehavior::state_index(const std::string& name) const {
  for (std::size_t i = 0; i < states_.size(); ++i)
    if (states_[i] == name) return i;
  throw std::invalid_argument("unknown state: " + name);
}

std::size_t TmBehavior::symbol_index(const std::string& name) const {
  for (std::size_t i = 0; i < symbols_.size(); ++i)
    if (symbols_[i] == name) return i;
  throw std::invalid_argument("unknown symbol: " + name);
}

void TmBehavior::set_rule(const std::string& state, const std::string& read,
                          const std::string& write, char move,
                          const std::string& next) {
  if (move != 'L' && move != 'R')
    throw std::invalid_argument("move must be L or R");
  const std::size_t row = row_index(state_index(state), symbol_index(read));
  rules_[row] = {static_cast<std::uint16_t>(symbol_index(write)),
                 static_cast<std::uint16_t>(state_index(next)),
                 move == 'L' ? -1 : +1};
  defined_[row] = true;
}

const TmBehavior::Rule& TmBehavior::rule(std::size_t state,
                                         std::size_t symbol) const {
  const std::size_t row = row_index(state, symbol);
  if (!defined_[row]) throw std::logic_error("undefined rule");
  return rules_[row];
}

bool TmBehavior::total() const {
  for (const bool d : defined_)
    if (!d) return false;
  return true;
}

TmBehavior TmBehavior::two_four() {
  TmBehavior b({"A", "B"}, {"0", "1", "2", "3"});
  b.set_rule("A", "0", "2", 'L', "A");
  b.set_rule("A", "1", "3", 'L', "B");
  b.set_rule("A", "2", "3", 'L', "A");
  b.set_rule("A", "3", "3", 'L', "A");
  b.set_rule("B", "0", "3", 'R', "A");
  b.set_rule("B", "1", "2", 'L', "B");
  b.set_rule("B", "2", "0", 'R', "B");
  b.set_rule("B", "3", "1", 'R', "B");
  return b;
}

TmBehavior TmBehavior::load(std::istream& in) {
  struct Row {
    std::string state, read, write, next;
    char move;
  };
  std::vector<Row> rows;
  std::set<std::string> states, symbols;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    Row r;
    std::string move;
    if (!(ss >> r.state >> r.read >> r.write >> move >> r.next) ||
        move.size() != 1)
      throw std::runtime_error("bad behaviour row: " + line);
    r.move = move[0];
    states.insert(r.state);
    states.insert(r.next);
    symbols.insert(r.read);
    symbols.insert(r.write);
    rows.push_back(std::move(r));
  }
  // sorted name order keeps loaded tables deterministic
  TmBehavior b(std::vector<std::string>(states.begin(), states.end()),
               std::vector<std::string>(symbols.begin(), symbols.end()));
  for (const auto& r : rows) b.set_rule(r.state, r.read, r.write, r.move, r.next);
  return b;
}

void TmBehavior::save(std::ostream& out) const {
  for (std::size_t s = 0; s < states_.size(); ++s)
    for (std::size_t c = 0; c < symbols_.size(); ++c) {
      const std::size_t row = row_index(s, c);
      if (!defined_[row]) continue;
      const Rule& r = rules_[row];
      out << states_[s] << " " << symbols_[c] << " " << symbols_[r.write] << " "
          << (r.move < 0 ? 'L' : 'R') << " " << states_[r.next] << "\n";
    }
}

void tm_symbolic_step(const TmBehavior& behavior, TmConfig& config) {
  const TmBehavior::Rule& r = behavior.rule(config.state, config.read());
  config.tape[static_cast<std::size_t>(config.head)] = r.write;
  config.state = r.next;
  config.head += r.move;
  if (config.head < 0) {
    config.tape.insert(config.tape.begin(), config.blank);
    config.head = 0;
  } else if (config.head == static_cast<std::int64_t>(config.tape.size())) {
    config.tape.push_back(config.blank);
  }
}

TmMachine::TmMachine(const TmBehavior& behavior, ItemMemory state_cb,
                     ItemMemory sym_cb)
    : behavior_(behavior),
      state_cb_(std::move(state_cb)),
      sym_cb_(std::move(sym_cb)),
      rules_(state_cb_.dim(), {"write", "next", "move"}) {
  for (std::size_t s = 0; s < behavior_.states().size(); ++s)
    for (std::size_t c = 0; c < behavior_.symbols().size(); ++c) {
      const TmBehavior::Rule& r = behavior_.rule(s, c);
      rules_.add_row(bind(state_cb_.vector(s), sym_cb_.vector(c)),
                     {behavior_.symbols()[r.write], behavior_.states()[r.next],
                      r.move < 0 ? "L" : "R"});
      row_rules_.push_back(r);
    }
}

TmMachine tm_build(const TmBehavior& behavior, std::size_t dim, Rng& rng,
                   int max_attempts) {
  if (!behavior.total())
    throw std::invalid_argument("behaviour table must be total");
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    Rng sub = rng.fork(static_cast<std::uint64_t>(attempt));
    try {
      ItemMemory state_cb = ItemMemory::random(dim, behavior.states(), sub);
      ItemMemory sym_cb = ItemMemory::random(dim, behavior.symbols(), sub);
      return TmMachine(behavior, std::move(state_cb), std::move(sym_cb));
    } catch (const DuplicateAddressError&) {
      // regenerate the item memories
    }
  }
  throw std::runtime_error("could not build collision-free rule memory");
}

TmTape tm_initial_tape(const TmMachine& m, std::span<const std::string> symbols,
                       std::size_t head, const std::string& state,
                       std::string blank) {
  if (symbols.empty()) throw std::invalid_argument("tape must be non-empty");
  if (head >= symbols.size()) throw std::invalid_argument("head out of range");
  m.sym_cb().index_of(blank);
  TmTape tape;
  tape.cells.reserve(symbols.size());
  for (const auto& s : symbols) tape.cells.push_back(m.sym_cb().vector(s));
  tape.head = static_cast<std::int64_t>(head);
  tape.state = m.state_cb().vector(state);
  tape.blank = std::move(blank);
  return tape;
}

TmTape tm_step(const TmMachine& m, TmTape tape, double noise_p, Rng& rng,
               std::size_t* chosen_row) {
  auto& cell = tape.cells[static_cast<std::size_t>(tape.head)];
  const Hypervector read =
      noise_p > 0.0 ? flip_noise(cell, noise_p, rng) : cell;
  const auto res = m.rules().lookup(bind(tape.state, read));
  if (chosen_row != nullptr) *chosen_row = res.row;
  const TmBehavior::Rule& r = m.row_rule(res.row);
  cell = m.sym_cb().vector(r.write);
  tape.state = m.state_cb().vector(r.next);
  tape.head += r.move;
  if (tape.head < 0) {
    tape.cells.insert(tape.cells.begin(), m.sym_cb().vector(tape.blank));
    tape.head = 0;
  } else if (tape.head == static_cast<std::int64_t>(tape.cells.size())) {
    tape.cells.push_back(m.sym_cb().vector(tape.blank));
  }
  return tape;
}

std::string tm_decode_cell(const TmMachine& m, const TmTape& tape,
                           std::size_t cell) {
  return m.sym_cb().cleanup(tape.cells[cell]).name;
}

std::size_t tm_run_vs_oracle(const TmMachine& m, TmConfig config,
                             std::size_t steps, double noise_p, Rng& rng) {
  std::vector<std::string> names;
  names.reserve(config.tape.size());
  for (const auto s : config.tape) names.push_back(m.behavior().symbols()[s]);
  TmTape tape = tm_initial_tape(m, names, static_cast<std::size_t>(config.head),
                                m.behavior().states()[config.state],
                                m.behavior().symbols()[config.blank]);
  for (std::size_t step = 0; step < steps; ++step) {
    const std::size_t expected_row =
        m.behavior().row_index(config.state, config.read());
    std::size_t got_row = 0;
    tape = tm_step(m, std::move(tape), noise_p, rng, &got_row);
    if (got_row != expected_row) return step;
    tm_symbolic_step(m.behavior(), config);
  }
  return steps;
}

double TmDimensionSearchResult::mean_dim() const {
  if (per_trial_dims.empty()) return 0.0;
  const auto sum = std::accumulate(per_trial_dims.begin(), per_trial_dims.end(),
                                   std::uint64_t{0});
  return static_cast<double>(sum) / static_cast<double>(per_trial_dims.size());
}

TmDimensionSearchResult tm_dimension_search(
    const TmBehavior& behavior, double noise_p, std::size_t target_steps,
    std::size_t trials, std::uint64_t seed,
    const TmDimensionSearchOptions& options) {
  if (target_steps < 1) throw std::invalid_argument("target_steps must be >= 1");
  TmDimensionSearchResult result;
  for (std::size_t trial = 0; trial < trials; ++trial) {
    const std::uint64_t trial_seed = Rng::derive(seed, trial);
    std::size_t dim = options.start_dim;
    std::size_t attempt = 0;
    for (;;) {
      if (dim > options.max_dim)
        throw std::runtime_error("dimension search exceeded max_dim");
      Rng build_rng(Rng::derive(trial_seed, attempt * 3 + 0));
      Rng tape_rng(Rng::derive(trial_seed, attempt * 3 + 1));
      Rng noise_rng(Rng::derive(trial_seed, attempt * 3 + 2));
      const TmMachine m = tm_build(behavior, dim, build_rng);
      TmConfig config;
      config.tape.resize(options.tape_length);
      for (auto& c : config.tape)
        c = static_cast<std::uint16_t>(
            tape_rng.bounded(behavior.symbols().size()));
      config.head = static_cast<std::int64_t>(options.tape_length / 2);
      config.state = 0;
      config.blank = 0;
      if (tm_run_vs_oracle(m, config, target_steps, noise_p, noise_rng) ==
          target_steps) {
        result.per_trial_dims.push_back(dim);
        break;
      }
      dim = static_cast<std::size_t>(
          std::ceil(1.1 * static_cast<double>(dim)));
      ++attempt;
    }
  }
  return result;
}

}  // namespace hdc
