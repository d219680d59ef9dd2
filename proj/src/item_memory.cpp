#include "hdc/item_memory.hpp"

#include <cctype>
#include <limits>
#include <stdexcept>

namespace hdc {

namespace {

void check_name(const std::string& name) {
  if (name.empty()) throw std::invalid_argument("entry name must be non-empty");
  for (const unsigned char c : name)
    if (std::isspace(c) || c < 0x20)
      throw std::invalid_argument("entry name must not contain whitespace");
}

}  // namespace

ItemMemory::ItemMemory(std::size_t dim, std::uint64_t tie_break_seed)
    : dim_(dim), tie_break_seed_(tie_break_seed) {
  if (dim == 0) throw std::invalid_argument("item memory dimension must be >= 1");
  Rng rng(tie_break_seed);
  tie_break_ = random_hypervector(dim, rng);
}

ItemMemory ItemMemory::random(std::size_t dim,
                              std::span<const std::string> names, Rng& rng) {
  ItemMemory mem(dim, rng.next());
  for (const auto& n : names) mem.add(n, random_hypervector(dim, rng));
  return mem;
}

void ItemMemory::add(std::string name, Hypervector vector) {
  check_name(name);
  if (vector.dim() != dim_) throw std::invalid_argument("dimension mismatch");
  if (index_.contains(name))
    throw std::invalid_argument("duplicate entry name: " + name);
  index_.emplace(name, vectors_.size());
  names_.push_back(std::move(name));
  vectors_.push_back(std::move(vector));
}

const Hypervector& ItemMemory::vector(std::string_view name) const {
  return vectors_[index_of(name)];
}

bool ItemMemory::contains(std::string_view name) const {
  return index_.find(std::string(name)) != index_.end();
}

std::size_t ItemMemory::index_of(std::string_view name) const {
  const auto it = index_.find(std::string(name));
  if (it == index_.end())
    throw std::invalid_argument("unknown name: " + std::string(name));
  return it->second;
}

Hypervector ItemMemory::normalize(const Accumulator& acc) const {
  return hdc::normalize(acc, tie_break_);
}

template <typename Query>
CleanupResult ItemMemory::cleanup_impl(const Query& q) const {
  if (vectors_.empty()) throw std::logic_error("cleanup on empty item memory");
  if (q.dim() != dim_) throw std::invalid_argument("dimension mismatch");
  std::size_t best = 0;
  std::int64_t best_score = std::numeric_limits<std::int64_t>::min();
  for (std::size_t i = 0; i < vectors_.size(); ++i) {
    const std::int64_t s = dot(q, vectors_[i]);
    if (s > best_score) {
      best_score = s;
      best = i;
    }
  }
  return {best, names_[best], best_score};
}

CleanupResult ItemMemory::cleanup(const Hypervector& query) const {
  return cleanup_impl(query);
}

CleanupResult ItemMemory::cleanup(const Accumulator& query) const {
  return cleanup_impl(query);
}

Accumulator ItemMemory::project(const Accumulator& query) const {
  if (vectors_.empty()) throw std::logic_error("project on empty item memory");
  if (query.dim() != dim_) throw std::invalid_argument("dimension mismatch");
  std::vector<std::int64_t> weights(vectors_.size());
  for (std::size_t i = 0; i < vectors_.size(); ++i)
    weights[i] = dot(query, vectors_[i]);
  return scaled_superposition(weights, vectors_);
}

Accumulator ItemMemory::project(const Hypervector& query) const {
  return project(Accumulator(query));
}

Accumulator ItemMemory::superposition() const {
  if (vectors_.empty()) throw std::logic_error("superposition of empty memory");
  Accumulator acc(dim_);
  for (const auto& v : vectors_) acc.add(v);
  return acc;
}

SymbolCodebook make_symbol_codebook(std::size_t dim,
                                    std::span<const std::string> names,
                                    Rng& rng) {
  return ItemMemory::random(dim, names, rng);
}

HeteroMemory::HeteroMemory(std::size_t dim, std::vector<std::string> field_names)
    : dim_(dim), field_names_(std::move(field_names)) {
  if (dim == 0) throw std::invalid_argument("hetero memory dimension must be >= 1");
}

void HeteroMemory::add_row(Hypervector address, Payload content) {
  if (address.dim() != dim_) throw std::invalid_argument("dimension mismatch");
  if (content.size() != field_names_.size())
    throw std::invalid_argument("payload field count mismatch");
  for (const auto& existing : addresses_)
    if (existing == address)
      throw DuplicateAddressError("duplicate address row in hetero memory");
  addresses_.push_back(std::move(address));
  contents_.push_back(std::move(content));
}

template <typename Query>
HeteroMemory::LookupResult HeteroMemory::lookup_impl(const Query& q) const {
  if (addresses_.empty()) throw std::logic_error("lookup on empty hetero memory");
  if (q.dim() != dim_) throw std::invalid_argument("dimension mismatch");
  std::size_t best = 0;
  std::int64_t best_score = std::numeric_limits<std::int64_t>::min();
  for (std::size_t i = 0; i < addresses_.size(); ++i) {
    const std::int64_t s = dot(q, addresses_[i]);
    if (s > best_score) {
      best_score = s;
      best = i;
    }
  }
  return {best, best_score};
}

HeteroMemory::LookupResult HeteroMemory::lookup(const Hypervector& query) const {
  return lookup_impl(query);
}

HeteroMemory::LookupResult HeteroMemory::lookup(const Accumulator& query) const {
  return lookup_impl(query);
}

const HeteroMemory::Payload& hetero_lookup(const HeteroMemory& mem,
                                           const Hypervector& query) {
  return mem.content(mem.lookup(query).row);
}

const HeteroMemory::Payload& hetero_lookup(const HeteroMemory& mem,
                                           const Accumulator& query) {
  return mem.content(mem.lookup(query).row);
}

}  // namespace hdc
