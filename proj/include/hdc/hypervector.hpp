#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hdc/rng.hpp"

namespace hdc {

// Bipolar hypervector of fixed dimension N, one bit per component.
// Bit value 1 encodes +1, bit 0 encodes -1; component i lives at bit i%64 of
// word i/64. Bits past the dimension are kept zero so word-level operations
// need no per-use masking.
class Hypervector {
 public:
  Hypervector() = default;
  explicit Hypervector(std::size_t dim);  // all components -1

  std::size_t dim() const { return dim_; }
  bool empty() const { return dim_ == 0; }

  int component(std::size_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1 ? +1 : -1;
  }
  void set_component(std::size_t i, int value);
  void flip_component(std::size_t i) { words_[i >> 6] ^= 1ULL << (i & 63); }

  std::span<const std::uint64_t> words() const { return words_; }
  std::span<std::uint64_t> words() { return words_; }
  std::size_t word_count() const { return words_.size(); }

  // Zeroes any bits at positions >= dim. Callers that write raw words use
  // this to restore the tail invariant.
  void mask_tail();

  bool operator==(const Hypervector&) const = default;

 private:
  std::size_t dim_ = 0;
  std::vector<std::uint64_t> words_;
};

// Exact integer superposition. Components are 32-bit; weight counts the
// bipolar vectors folded in, so |component| <= weight always holds and a
// later subtraction restores the previous components exactly.
class Accumulator {
 public:
  Accumulator() = default;
  explicit Accumulator(std::size_t dim);
  explicit Accumulator(const Hypervector& v);  // weight 1

  std::size_t dim() const { return comps_.size(); }
  std::uint64_t weight() const { return weight_; }

  std::int32_t component(std::size_t i) const { return comps_[i]; }
  std::span<const std::int32_t> components() const { return comps_; }
  std::span<std::int32_t> components() { return comps_; }

  void add(const Hypervector& v, int sign = +1);
  void add_scaled(const Hypervector& v, std::int32_t count);
  void add(const Accumulator& other);
  void subtract(const Hypervector& v) { add(v, -1); }

  bool is_zero() const;

  bool operator==(const Accumulator& o) const { return comps_ == o.comps_; }

 private:
  std::vector<std::int32_t> comps_;
  std::uint64_t weight_ = 0;

  friend Accumulator bind(const Accumulator&, const Hypervector&);
  friend Accumulator bind(const Accumulator&, const Accumulator&);
  friend Accumulator permute(const Accumulator&, std::int64_t);
  friend Accumulator scaled_superposition(
      std::span<const std::int64_t> weights, std::span<const Hypervector> vs);
};

// i.i.d. random generation; each component is +1 with probability 1/2.
Hypervector random_hypervector(std::size_t dim, Rng& rng);

// Component-wise multiplication (Hadamard product). Self-inverse on bipolar
// inputs: bind(bind(a, b), b) == a.
Hypervector bind(const Hypervector& a, const Hypervector& b);
Accumulator bind(const Accumulator& a, const Hypervector& b);
Accumulator bind(const Accumulator& a, const Accumulator& b);

std::int64_t dot(const Hypervector& a, const Hypervector& b);
std::int64_t dot(const Accumulator& a, const Hypervector& b);
std::int64_t dot(const Hypervector& a, const Accumulator& b);
std::int64_t dot(const Accumulator& a, const Accumulator& b);

// Cyclic rotation toward higher indices: component i moves to (i+k) mod N.
// k may be negative or exceed the dimension.
Hypervector permute(const Hypervector& a, std::int64_t k);
Accumulator permute(const Accumulator& a, std::int64_t k);

// Value-style accumulate; in hot paths use Accumulator::add directly.
Accumulator accumulate(Accumulator acc, const Hypervector& v, int sign = +1);

// Majority rule. Zero components take the tie-break sign for their index.
Hypervector normalize(const Accumulator& acc, const Hypervector& tie_break);

// Majority over a list of bipolar vectors, identical to building the integer
// accumulator and normalizing but computed with bit-sliced counters.
Hypervector majority_bundle(std::span<const Hypervector> vs,
                            const Hypervector& tie_break);

// Flips the sign of exactly round(p * N) distinct components chosen
// uniformly without replacement.
Hypervector flip_noise(const Hypervector& a, double p, Rng& rng);

// Sum of weights[k] * vs[k]; weights sums must stay within 32-bit components.
Accumulator scaled_superposition(std::span<const std::int64_t> weights,
                                 std::span<const Hypervector> vs);

}  // namespace hdc
