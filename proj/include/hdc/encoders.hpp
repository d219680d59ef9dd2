#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hdc/item_memory.hpp"

namespace hdc {

// ---------------------------------------------------------------------------
// Sets, multisets, histograms
// ---------------------------------------------------------------------------

// Superposition of the member seed vectors. Members must be distinct.
Accumulator encode_set(const SymbolCodebook& cb,
                       std::span<const std::string> members);

// Sum of count * seed vector. Counts must be >= 0.
Accumulator encode_multiset(const SymbolCodebook& cb,
                            const std::map<std::string, std::int64_t>& counts);

// Raw per-symbol estimates dot(v, seed); affine calibration is the caller's.
std::vector<std::pair<std::string, std::int64_t>> decode_histogram(
    const Hypervector& v, const SymbolCodebook& cb);

// Component-wise product of two set accumulators; for exact set sums this
// equals the sum of all pairwise binds.
Accumulator cross_product(const Accumulator& set_a, const Accumulator& set_b);

// ---------------------------------------------------------------------------
// Sequences. The last element carries permutation power 0, so a length-k
// sequence stores element i (1-based) at power k-i.
// ---------------------------------------------------------------------------

Accumulator encode_sequence_sum(const SymbolCodebook& cb,
                                std::span<const std::string> seq);

Hypervector encode_sequence_product(const SymbolCodebook& cb,
                                    std::span<const std::string> seq);

// Element at 1-based position i of a length-len sum-encoded sequence.
CleanupResult probe_position(const Accumulator& seq, std::size_t i,
                             std::size_t len, const SymbolCodebook& cb);

// Replace the element at 1-based position i; the caller asserts old_name is
// actually there.
Accumulator replace_at(const Accumulator& seq, std::size_t i,
                       const std::string& old_name, const std::string& new_name,
                       std::size_t len, const SymbolCodebook& cb);
Hypervector replace_at(const Hypervector& seq, std::size_t i,
                       const std::string& old_name, const std::string& new_name,
                       std::size_t len, const SymbolCodebook& cb);

// Concatenation via shifting: permute(seq1, len(seq2)) + encode(seq2).
Accumulator shift_and_concat(const Accumulator& seq1,
                             std::span<const std::string> seq2,
                             const SymbolCodebook& cb);

// Sum over all length-n windows of their product encodings, stride 1.
Accumulator encode_ngram_stats(const SymbolCodebook& cb,
                               std::span<const std::string> text, std::size_t n);

// ---------------------------------------------------------------------------
// Graphs
// ---------------------------------------------------------------------------

using Edge = std::pair<std::string, std::string>;

// Undirected edge: bind(u, v). Directed edge: bind(u, permute(v, 1)).
// Isolated vertices are not represented.
Accumulator encode_graph(const SymbolCodebook& cb, std::span<const Edge> edges,
                         bool directed);

Hypervector edge_vector(const SymbolCodebook& cb, const std::string& u,
                        const std::string& v, bool directed);

// dot(g, edge vector); the caller thresholds (N/2 is the usual midpoint).
std::int64_t edge_query(const Accumulator& g, const std::string& u,
                        const std::string& v, bool directed,
                        const SymbolCodebook& cb);

// ---------------------------------------------------------------------------
// Binary trees
// ---------------------------------------------------------------------------

enum class TreeRole : std::uint8_t { Left, Right };

// Root-to-leaf trace; entry d is the role taken at depth d.
using TreePath = std::vector<TreeRole>;

extern const std::string kLeftRoleName;   // "l"
extern const std::string kRightRoleName;  // "r"

// Role vector product for a path: product over depth d of permute(role_d, d).
Hypervector tree_path_vector(const TreePath& path, const SymbolCodebook& role_cb);

Accumulator encode_binary_tree(
    const SymbolCodebook& role_cb, const SymbolCodebook& leaf_cb,
    std::span<const std::pair<TreePath, std::string>> leaves);

CleanupResult tree_leaf_lookup(const Accumulator& tree, const TreePath& path,
                               const SymbolCodebook& role_cb,
                               const SymbolCodebook& leaf_cb);

// ---------------------------------------------------------------------------
// Stacks (top element at permutation power 0; never normalized)
// ---------------------------------------------------------------------------

struct StackState {
  Accumulator acc;
  std::size_t depth = 0;
};

StackState make_stack(std::size_t dim);
StackState stack_push(const StackState& st, const std::string& name,
                      const SymbolCodebook& cb);
std::pair<std::string, StackState> stack_pop(const StackState& st,
                                             const SymbolCodebook& cb);

// ---------------------------------------------------------------------------
// Finite-state automata
// ---------------------------------------------------------------------------

struct FsaTransition {
  std::string from;
  std::string input;
  std::string to;
};

struct FsaDescriptor {
  std::vector<std::string> states;
  std::vector<std::string> symbols;
  std::vector<FsaTransition> transitions;
  std::string start;
  std::vector<std::string> accepting;

  // Checks that every name resolves; when deterministic, also that no
  // (state, input) pair has two transitions.
  void validate(bool deterministic) const;
};

// Superposition over transitions of input * from * permute(to, 1).
Accumulator fsa_encode(const FsaDescriptor& desc, const SymbolCodebook& state_cb,
                       const SymbolCodebook& sym_cb);

// Next-state recall: clean up permute(a * sym * state, -1).
CleanupResult fsa_step(const Hypervector& a, const Hypervector& state,
                       const Hypervector& sym, const SymbolCodebook& state_cb);
CleanupResult fsa_step(const Accumulator& a, const Hypervector& state,
                       const Hypervector& sym, const SymbolCodebook& state_cb);

// Generalized-state step for nondeterministic automata; optionally projects
// the result back onto the state codebook.
Accumulator nfsa_step(const Accumulator& a, const Accumulator& gen_state,
                      const Hypervector& sym, const SymbolCodebook& state_cb,
                      bool with_cleanup);

}  // namespace hdc
