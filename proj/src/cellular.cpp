#include "hdc/cellular.hpp"

#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace hdc {

namespace {

const std::vector<std::string> kRoleNames = {"l", "c", "r"};
const std::vector<std::string> kStateNames = {"0", "1"};

// Table-III row order: 111, 110, ..., 000.
constexpr std::array<unsigned, 8> kRowOrder = {7, 6, 5, 4, 3, 2, 1, 0};

}  // namespace

CaRule ca_rule_from_number(unsigned code) {
  if (code > 255) throw std::invalid_argument("rule number must be < 256");
  CaRule rule{};
  for (unsigned k = 0; k < 8; ++k)
    rule[k] = static_cast<std::uint8_t>((code >> k) & 1);
  return rule;
}

CaRule load_ca_rule(std::istream& in) {
  CaRule rule{};
  std::array<bool, 8> seen{};
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    std::string hood;
    int next = 0;
    if (!(ss >> hood >> next) || hood.size() != 3 || (next != 0 && next != 1))
      throw std::runtime_error("bad rule row: " + line);
    unsigned k = 0;
    for (const char c : hood) {
      if (c != '0' && c != '1') throw std::runtime_error("bad rule row: " + line);
      k = (k << 1) | static_cast<unsigned>(c - '0');
    }
    rule[k] = static_cast<std::uint8_t>(next);
    seen[k] = true;
  }
  for (const bool s : seen)
    if (!s) throw std::runtime_error("rule table must cover all 8 neighborhoods");
  return rule;
}

void save_ca_rule(const CaRule& rule, std::ostream& out) {
  for (const unsigned k : kRowOrder)
    out << ((k >> 2) & 1) << ((k >> 1) & 1) << (k & 1) << " "
        << static_cast<int>(rule[k]) << "\n";
}

std::vector<std::uint8_t> ca_symbolic_step(const std::vector<std::uint8_t>& bits,
                                           const CaRule& rule) {
  const std::size_t l = bits.size();
  std::vector<std::uint8_t> out(l);
  for (std::size_t j = 0; j < l; ++j) {
    const unsigned x = bits[(j + l - 1) % l];
    const unsigned y = bits[j];
    const unsigned z = bits[(j + 1) % l];
    out[j] = rule[(x << 2) | (y << 1) | z];
  }
  return out;
}

CaMachine::CaMachine(const CaRule& rule, ItemMemory role_cb, ItemMemory state_cb)
    : rule_(rule),
      role_cb_(std::move(role_cb)),
      state_cb_(std::move(state_cb)),
      rules_(role_cb_.dim(), {"next"}) {
  for (const unsigned k : kRowOrder) {
    Accumulator acc(dim());
    acc.add(bind(role_cb_.vector(0), state_cb_.vector((k >> 2) & 1)));
    acc.add(bind(role_cb_.vector(1), state_cb_.vector((k >> 1) & 1)));
    acc.add(bind(role_cb_.vector(2), state_cb_.vector(k & 1)));
    // odd term count: no ties, any tie-break works
    rules_.add_row(state_cb_.normalize(acc), {std::to_string(rule_[k])});
    row_payload_.push_back(rule_[k]);
  }
}

CaMachine ca_build(const CaRule& rule, std::size_t dim, Rng& rng,
                   int max_attempts) {
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    Rng sub = rng.fork(static_cast<std::uint64_t>(attempt));
    try {
      ItemMemory role_cb = ItemMemory::random(dim, kRoleNames, sub);
      ItemMemory state_cb = ItemMemory::random(dim, kStateNames, sub);
      return CaMachine(rule, std::move(role_cb), std::move(state_cb));
    } catch (const DuplicateAddressError&) {
      // regenerate the item memories
    }
  }
  throw std::runtime_error("could not build collision-free rule memory");
}

CaGrid ca_encode_grid(const std::vector<std::uint8_t>& bits, const CaMachine& m) {
  if (bits.size() < 3) throw std::invalid_argument("grid length must be >= 3");
  std::vector<Hypervector> parts;
  parts.reserve(bits.size());
  for (std::size_t j = 0; j < bits.size(); ++j)
    parts.push_back(permute(m.state_cb().vector(bits[j]),
                            static_cast<std::int64_t>(j + 1)));
  return {majority_bundle(parts, m.state_cb().tie_break()), bits.size()};
}

std::vector<std::uint8_t> ca_decode_grid(const CaGrid& grid, const CaMachine& m) {
  std::vector<std::uint8_t> out(grid.length);
  for (std::size_t j = 0; j < grid.length; ++j) {
    const Hypervector q = permute(grid.vec, -static_cast<std::int64_t>(j + 1));
    out[j] =
        static_cast<std::uint8_t>(m.state_cb().cleanup(q).index == 1 ? 1 : 0);
  }
  return out;
}

CaGrid ca_step(const CaGrid& grid, const CaMachine& m, double noise_p,
               Rng& rng) {
  const std::size_t l = grid.length;
  const Hypervector noisy =
      noise_p > 0.0 ? flip_noise(grid.vec, noise_p, rng) : grid.vec;

  // One rotation per position, reused for all three neighborhood roles.
  std::vector<Hypervector> rot;
  rot.reserve(l);
  for (std::size_t j = 0; j < l; ++j)
    rot.push_back(permute(noisy, -static_cast<std::int64_t>(j + 1)));

  const Hypervector& role_l = m.role_cb().vector(0);
  const Hypervector& role_c = m.role_cb().vector(1);
  const Hypervector& role_r = m.role_cb().vector(2);

  std::vector<Hypervector> parts;
  parts.reserve(l);
  for (std::size_t j = 0; j < l; ++j) {
    const Hypervector a = bind(role_l, rot[(j + l - 1) % l]);
    const Hypervector b = bind(role_c, rot[j]);
    const Hypervector c = bind(role_r, rot[(j + 1) % l]);
    // score against each stored address as three packed dots; identical to
    // hetero lookup with the exact three-term accumulator
    std::size_t best = 0;
    std::int64_t best_score = std::numeric_limits<std::int64_t>::min();
    for (std::size_t row = 0; row < m.rules().rows(); ++row) {
      const Hypervector& addr = m.rules().address(row);
      const std::int64_t s = dot(a, addr) + dot(b, addr) + dot(c, addr);
      if (s > best_score) {
        best_score = s;
        best = row;
      }
    }
    parts.push_back(permute(m.state_cb().vector(m.row_payload(best)),
                            static_cast<std::int64_t>(j + 1)));
  }
  return {majority_bundle(parts, m.state_cb().tie_break()), l};
}

}  // namespace hdc
