#include "hdc/encoders.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace hdc {

const std::string kLeftRoleName = "l";
const std::string kRightRoleName = "r";

Accumulator encode_set(const SymbolCodebook& cb,
                       std::span<const std::string> members) {
  std::set<std::string_view> seen;
  Accumulator acc(cb.dim());
  for (const auto& m : members) {
    if (!seen.insert(m).second)
      throw std::invalid_argument("duplicate set member: " + m);
    acc.add(cb.vector(m));
  }
  return acc;
}

Accumulator encode_multiset(const SymbolCodebook& cb,
                            const std::map<std::string, std::int64_t>& counts) {
  Accumulator acc(cb.dim());
  for (const auto& [name, count] : counts) {
    if (count < 0) throw std::invalid_argument("negative count for " + name);
    if (count == 0) continue;
    acc.add_scaled(cb.vector(name), static_cast<std::int32_t>(count));
  }
  return acc;
}

std::vector<std::pair<std::string, std::int64_t>> decode_histogram(
    const Hypervector& v, const SymbolCodebook& cb) {
  if (v.dim() != cb.dim()) throw std::invalid_argument("dimension mismatch");
  std::vector<std::pair<std::string, std::int64_t>> out;
  out.reserve(cb.size());
  for (std::size_t i = 0; i < cb.size(); ++i)
    out.emplace_back(cb.name(i), dot(v, cb.vector(i)));
  return out;
}

Accumulator cross_product(const Accumulator& set_a, const Accumulator& set_b) {
  return bind(set_a, set_b);
}

Accumulator encode_sequence_sum(const SymbolCodebook& cb,
                                std::span<const std::string> seq) {
  Accumulator acc(cb.dim());
  const std::size_t k = seq.size();
  for (std::size_t i = 0; i < k; ++i)
    acc.add(permute(cb.vector(seq[i]), static_cast<std::int64_t>(k - 1 - i)));
  return acc;
}

Hypervector encode_sequence_product(const SymbolCodebook& cb,
                                    std::span<const std::string> seq) {
  if (seq.empty()) throw std::invalid_argument("empty sequence");
  const std::size_t k = seq.size();
  Hypervector out =
      permute(cb.vector(seq[0]), static_cast<std::int64_t>(k - 1));
  for (std::size_t i = 1; i < k; ++i)
    out = bind(out, permute(cb.vector(seq[i]),
                            static_cast<std::int64_t>(k - 1 - i)));
  return out;
}

CleanupResult probe_position(const Accumulator& seq, std::size_t i,
                             std::size_t len, const SymbolCodebook& cb) {
  if (i < 1 || i > len) throw std::invalid_argument("position out of range");
  return cb.cleanup(permute(seq, -static_cast<std::int64_t>(len - i)));
}

Accumulator replace_at(const Accumulator& seq, std::size_t i,
                       const std::string& old_name, const std::string& new_name,
                       std::size_t len, const SymbolCodebook& cb) {
  if (i < 1 || i > len) throw std::invalid_argument("position out of range");
  const auto power = static_cast<std::int64_t>(len - i);
  Accumulator out = seq;
  out.subtract(permute(cb.vector(old_name), power));
  out.add(permute(cb.vector(new_name), power));
  return out;
}

Hypervector replace_at(const Hypervector& seq, std::size_t i,
                       const std::string& old_name, const std::string& new_name,
                       std::size_t len, const SymbolCodebook& cb) {
  if (i < 1 || i > len) throw std::invalid_argument("position out of range");
  const auto power = static_cast<std::int64_t>(len - i);
  return bind(bind(seq, permute(cb.vector(old_name), power)),
              permute(cb.vector(new_name), power));
}

Accumulator shift_and_concat(const Accumulator& seq1,
                             std::span<const std::string> seq2,
                             const SymbolCodebook& cb) {
  Accumulator out = permute(seq1, static_cast<std::int64_t>(seq2.size()));
  out.add(encode_sequence_sum(cb, seq2));
  return out;
}

Accumulator encode_ngram_stats(const SymbolCodebook& cb,
                               std::span<const std::string> text,
                               std::size_t n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (text.size() < n) throw std::invalid_argument("text shorter than n");
  Accumulator acc(cb.dim());
  for (std::size_t start = 0; start + n <= text.size(); ++start)
    acc.add(encode_sequence_product(cb, text.subspan(start, n)));
  return acc;
}

Hypervector edge_vector(const SymbolCodebook& cb, const std::string& u,
                        const std::string& v, bool directed) {
  const auto& vu = cb.vector(u);
  const auto& vv = cb.vector(v);
  return directed ? bind(vu, permute(vv, 1)) : bind(vu, vv);
}

Accumulator encode_graph(const SymbolCodebook& cb, std::span<const Edge> edges,
                         bool directed) {
  Accumulator acc(cb.dim());
  for (const auto& [u, v] : edges) acc.add(edge_vector(cb, u, v, directed));
  return acc;
}

std::int64_t edge_query(const Accumulator& g, const std::string& u,
                        const std::string& v, bool directed,
                        const SymbolCodebook& cb) {
  return dot(g, edge_vector(cb, u, v, directed));
}

Hypervector tree_path_vector(const TreePath& path,
                             const SymbolCodebook& role_cb) {
  if (path.empty()) throw std::invalid_argument("empty tree path");
  const auto& left = role_cb.vector(kLeftRoleName);
  const auto& right = role_cb.vector(kRightRoleName);
  Hypervector out = path[0] == TreeRole::Left ? left : right;
  for (std::size_t d = 1; d < path.size(); ++d)
    out = bind(out, permute(path[d] == TreeRole::Left ? left : right,
                            static_cast<std::int64_t>(d)));
  return out;
}

Accumulator encode_binary_tree(
    const SymbolCodebook& role_cb, const SymbolCodebook& leaf_cb,
    std::span<const std::pair<TreePath, std::string>> leaves) {
  Accumulator acc(role_cb.dim());
  for (const auto& [path, name] : leaves)
    acc.add(bind(leaf_cb.vector(name), tree_path_vector(path, role_cb)));
  return acc;
}

CleanupResult tree_leaf_lookup(const Accumulator& tree, const TreePath& path,
                               const SymbolCodebook& role_cb,
                               const SymbolCodebook& leaf_cb) {
  return leaf_cb.cleanup(bind(tree, tree_path_vector(path, role_cb)));
}

StackState make_stack(std::size_t dim) { return {Accumulator(dim), 0}; }

StackState stack_push(const StackState& st, const std::string& name,
                      const SymbolCodebook& cb) {
  StackState out{permute(st.acc, 1), st.depth + 1};
  out.acc.add(cb.vector(name));
  return out;
}

std::pair<std::string, StackState> stack_pop(const StackState& st,
                                             const SymbolCodebook& cb) {
  if (st.depth == 0) throw std::logic_error("pop on empty stack");
  const CleanupResult top = cb.cleanup(st.acc);
  Accumulator rest = st.acc;
  rest.subtract(cb.vector(top.index));
  return {top.name, {permute(rest, -1), st.depth - 1}};
}

void FsaDescriptor::validate(bool deterministic) const {
  const std::set<std::string> state_set(states.begin(), states.end());
  const std::set<std::string> symbol_set(symbols.begin(), symbols.end());
  const auto need_state = [&](const std::string& s) {
    if (!state_set.contains(s)) throw std::invalid_argument("unknown state: " + s);
  };
  need_state(start);
  for (const auto& s : accepting) need_state(s);
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& t : transitions) {
    need_state(t.from);
    need_state(t.to);
    if (!symbol_set.contains(t.input))
      throw std::invalid_argument("unknown symbol: " + t.input);
    if (deterministic && !seen.insert({t.from, t.input}).second)
      throw std::invalid_argument("nondeterministic transition from (" + t.from +
                                  ", " + t.input + ")");
  }
}

Accumulator fsa_encode(const FsaDescriptor& desc, const SymbolCodebook& state_cb,
                       const SymbolCodebook& sym_cb) {
  Accumulator acc(state_cb.dim());
  for (const auto& t : desc.transitions)
    acc.add(bind(sym_cb.vector(t.input),
                 bind(state_cb.vector(t.from), permute(state_cb.vector(t.to), 1))));
  return acc;
}

CleanupResult fsa_step(const Hypervector& a, const Hypervector& state,
                       const Hypervector& sym, const SymbolCodebook& state_cb) {
  return state_cb.cleanup(permute(bind(bind(a, sym), state), -1));
}

CleanupResult fsa_step(const Accumulator& a, const Hypervector& state,
                       const Hypervector& sym, const SymbolCodebook& state_cb) {
  return state_cb.cleanup(permute(bind(bind(a, sym), state), -1));
}

Accumulator nfsa_step(const Accumulator& a, const Accumulator& gen_state,
                      const Hypervector& sym, const SymbolCodebook& state_cb,
                      bool with_cleanup) {
  const Accumulator next = permute(bind(bind(a, sym), gen_state), -1);
  return with_cleanup ? state_cb.project(next) : next;
}

}  // namespace hdc
