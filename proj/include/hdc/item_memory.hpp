#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "hdc/hypervector.hpp"
#include "hdc/rng.hpp"

namespace hdc {

struct CleanupResult {
  std::size_t index = 0;
  std::string name;
  std::int64_t score = 0;
};

// Auto-associative item memory. Entry order is fixed once built; clean-up
// ties resolve to the lowest entry index. All scores are exact integers.
class ItemMemory {
 public:
  ItemMemory(std::size_t dim, std::uint64_t tie_break_seed);

  // Fresh i.i.d. seed vectors for each name, drawn in name order; the
  // tie-break seed is drawn first.
  static ItemMemory random(std::size_t dim, std::span<const std::string> names,
                           Rng& rng);

  void add(std::string name, Hypervector vector);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return vectors_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const Hypervector& vector(std::size_t i) const { return vectors_[i]; }
  const Hypervector& vector(std::string_view name) const;
  bool contains(std::string_view name) const;
  std::size_t index_of(std::string_view name) const;  // throws if unknown

  std::uint64_t tie_break_seed() const { return tie_break_seed_; }
  const Hypervector& tie_break() const { return tie_break_; }

  // Majority rule with this memory's tie-break signs.
  Hypervector normalize(const Accumulator& acc) const;

  CleanupResult cleanup(const Hypervector& query) const;
  CleanupResult cleanup(const Accumulator& query) const;

  // Sum over entries of dot(query, entry) * entry, exact.
  Accumulator project(const Accumulator& query) const;
  Accumulator project(const Hypervector& query) const;

  // Unnormalized sum of all entries.
  Accumulator superposition() const;

 private:
  template <typename Query>
  CleanupResult cleanup_impl(const Query& q) const;

  std::size_t dim_;
  std::uint64_t tie_break_seed_;
  Hypervector tie_break_;
  std::vector<std::string> names_;
  std::vector<Hypervector> vectors_;
  std::unordered_map<std::string, std::size_t> index_;
};

using SymbolCodebook = ItemMemory;

SymbolCodebook make_symbol_codebook(std::size_t dim,
                                    std::span<const std::string> names,
                                    Rng& rng);

// Thrown when two rows of a heteroassociative memory would share an address;
// callers regenerate their seed vectors and rebuild.
struct DuplicateAddressError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Address -> content store, queried by nearest address. Payloads are flat
// string records with a schema shared by all rows.
class HeteroMemory {
 public:
  using Payload = std::vector<std::string>;

  HeteroMemory(std::size_t dim, std::vector<std::string> field_names);

  void add_row(Hypervector address, Payload content);

  std::size_t dim() const { return dim_; }
  std::size_t rows() const { return addresses_.size(); }
  const std::vector<std::string>& field_names() const { return field_names_; }
  const Hypervector& address(std::size_t row) const { return addresses_[row]; }
  const Payload& content(std::size_t row) const { return contents_[row]; }

  struct LookupResult {
    std::size_t row = 0;
    std::int64_t score = 0;
  };
  LookupResult lookup(const Hypervector& query) const;
  LookupResult lookup(const Accumulator& query) const;

 private:
  template <typename Query>
  LookupResult lookup_impl(const Query& q) const;

  std::size_t dim_;
  std::vector<std::string> field_names_;
  std::vector<Hypervector> addresses_;
  std::vector<Payload> contents_;
};

const HeteroMemory::Payload& hetero_lookup(const HeteroMemory& mem,
                                           const Hypervector& query);
const HeteroMemory::Payload& hetero_lookup(const HeteroMemory& mem,
                                           const Accumulator& query);

}  // namespace hdc
