#include "hdc/search.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace hdc {

namespace {

// Component bound for the original recurrence after |Q| steps.
bool original_fits_int64(std::size_t base_len, std::size_t query_len,
                         std::size_t dim) {
  double bits = std::log2(static_cast<double>(base_len + 1)) +
                static_cast<double>(query_len) *
                    std::log2(static_cast<double>(std::max<std::size_t>(base_len, 2))) +
                std::log2(static_cast<double>(dim));
  return bits <= 61.0;
}

void multiply_signs(std::vector<std::int64_t>& p, const Hypervector& h) {
  const auto words = h.words();
  for (std::size_t i = 0; i < p.size(); ++i)
    if (!((words[i >> 6] >> (i & 63)) & 1)) p[i] = -p[i];
}

void rotate_down_one(std::vector<std::int64_t>& p) {
  // permute(v, -1): component i moves to i-1.
  std::rotate(p.begin(), p.begin() + 1, p.end());
}

}  // namespace

StringAutomaton::StringAutomaton(ItemMemory state_mem, ItemMemory sym_cb,
                                 Accumulator beta, std::vector<std::string> base)
    : state_mem_(std::move(state_mem)),
      sym_cb_(std::move(sym_cb)),
      beta_(std::move(beta)),
      base_(std::move(base)) {
  if (state_mem_.size() != base_.size() + 1)
    throw std::invalid_argument("state memory must hold base_len + 1 states");
}

StringAutomaton build_string_automaton(std::span<const std::string> base,
                                       std::size_t dim, Rng& rng,
                                       std::span<const std::string> alphabet) {
  if (base.empty()) throw std::invalid_argument("base string must be non-empty");
  std::vector<std::string> names;
  if (alphabet.empty()) {
    std::set<std::string> seen(base.begin(), base.end());
    names.assign(seen.begin(), seen.end());
  } else {
    names.assign(alphabet.begin(), alphabet.end());
    const std::set<std::string> seen(names.begin(), names.end());
    for (const auto& s : base)
      if (!seen.contains(s))
        throw std::invalid_argument("alphabet does not cover base symbol " + s);
  }
  ItemMemory sym_cb = ItemMemory::random(dim, names, rng);

  std::vector<std::string> state_names;
  state_names.reserve(base.size() + 1);
  for (std::size_t i = 0; i <= base.size(); ++i)
    state_names.push_back("s" + std::to_string(i));
  ItemMemory state_mem = ItemMemory::random(dim, state_names, rng);

  Accumulator beta(dim);
  for (std::size_t i = 1; i <= base.size(); ++i)
    beta.add(bind(state_mem.vector(i - 1),
                  bind(sym_cb.vector(base[i - 1]),
                       permute(state_mem.vector(i), 1))));
  return StringAutomaton(std::move(state_mem), std::move(sym_cb),
                         std::move(beta),
                         std::vector<std::string>(base.begin(), base.end()));
}

QueryOutcome query_original(const StringAutomaton& sa,
                            std::span<const std::string> query,
                            std::int64_t threshold, bool record_weights) {
  if (query.empty()) throw std::invalid_argument("query must be non-empty");
  if (!original_fits_int64(sa.base_len(), query.size(), sa.dim()))
    throw std::domain_error(
        "query too long for the exact integer recurrence at this base length");
  const std::size_t dim = sa.dim();
  const std::size_t n_states = sa.state_mem().size();

  std::vector<std::int64_t> p(dim, 0);
  {
    const Accumulator p0 = sa.state_mem().superposition();
    for (std::size_t i = 0; i < dim; ++i) p[i] = p0.component(i);
  }
  QueryOutcome out;
  if (record_weights) out.state_weights.emplace();

  const auto beta = sa.beta().components();
  for (const auto& q : query) {
    const Hypervector& qv = sa.sym_cb().vector(q);  // throws on unknown symbol
    for (std::size_t i = 0; i < dim; ++i) p[i] *= beta[i];
    multiply_signs(p, qv);
    rotate_down_one(p);
    if (record_weights) {
      std::vector<std::int64_t> row(n_states);
      for (std::size_t k = 0; k < n_states; ++k) {
        std::int64_t s = 0;
        const auto words = sa.state_mem().vector(k).words();
        for (std::size_t i = 0; i < dim; ++i)
          s += (words[i >> 6] >> (i & 63)) & 1 ? p[i] : -p[i];
        row[k] = s;
      }
      out.state_weights->push_back(std::move(row));
    }
  }

  std::int64_t best = std::numeric_limits<std::int64_t>::min();
  for (std::size_t k = 0; k < n_states; ++k) {
    const auto words = sa.state_mem().vector(k).words();
    std::int64_t s = 0;
    for (std::size_t i = 0; i < dim; ++i)
      s += (words[i >> 6] >> (i & 63)) & 1 ? p[i] : -p[i];
    best = std::max(best, s);
  }
  out.score = best;
  out.present = best >= threshold;
  return out;
}

QueryOutcome query_cleanup(const StringAutomaton& sa,
                           std::span<const std::string> query,
                           std::int64_t threshold, bool record_weights) {
  if (query.empty()) throw std::invalid_argument("query must be non-empty");
  const std::size_t dim = sa.dim();
  const std::size_t n_states = sa.state_mem().size();
  const auto N = static_cast<std::int64_t>(dim);

  // Fixed-point state weights, anchor N = amplitude one.
  std::vector<std::int64_t> w(n_states, N);
  std::vector<std::int64_t> v(dim);
  QueryOutcome out;
  if (record_weights) out.state_weights.emplace();

  const auto beta = sa.beta().components();
  for (const auto& q : query) {
    const Hypervector& qv = sa.sym_cb().vector(q);
    std::fill(v.begin(), v.end(), 0);
    for (std::size_t k = 0; k < n_states; ++k) {
      const auto words = sa.state_mem().vector(k).words();
      const std::int64_t wk = w[k];
      if (wk == 0) continue;
      for (std::size_t i = 0; i < dim; ++i)
        v[i] += (words[i >> 6] >> (i & 63)) & 1 ? wk : -wk;
    }
    for (std::size_t i = 0; i < dim; ++i) v[i] *= beta[i];
    multiply_signs(v, qv);
    rotate_down_one(v);
    for (std::size_t k = 0; k < n_states; ++k) {
      const auto words = sa.state_mem().vector(k).words();
      std::int64_t s = 0;
      for (std::size_t i = 0; i < dim; ++i)
        s += (words[i >> 6] >> (i & 63)) & 1 ? v[i] : -v[i];
      w[k] = s / N;
    }
    if (record_weights) out.state_weights->push_back(w);
  }

  std::int64_t best = std::numeric_limits<std::int64_t>::min();
  for (std::size_t k = 0; k < n_states; ++k) {
    best = std::max(best, w[k]);
    if (w[k] >= threshold) out.positions.push_back(k);
  }
  out.score = best;
  out.present = !out.positions.empty();
  return out;
}

QueryOutcome query_string(const StringAutomaton& sa, SearchVariant variant,
                          std::span<const std::string> query,
                          std::int64_t threshold, bool record_weights) {
  return variant == SearchVariant::Original
             ? query_original(sa, query, threshold, record_weights)
             : query_cleanup(sa, query, threshold, record_weights);
}

std::vector<std::size_t> naive_match_end_positions(
    std::span<const std::string> base, std::span<const std::string> query) {
  std::vector<std::size_t> out;
  if (query.empty() || query.size() > base.size()) return out;
  for (std::size_t end = query.size(); end <= base.size(); ++end) {
    bool match = true;
    for (std::size_t j = 0; j < query.size(); ++j)
      if (base[end - query.size() + j] != query[j]) {
        match = false;
        break;
      }
    if (match) out.push_back(end);
  }
  return out;
}

std::int64_t calibrate_threshold(const StringAutomaton& sa,
                                 SearchVariant variant, std::size_t query_len,
                                 Rng& rng, std::size_t trials) {
  if (trials < 100) throw std::invalid_argument("calibration needs >= 100 trials");
  if (query_len == 0) throw std::invalid_argument("query length must be >= 1");
  const auto& syms = sa.sym_cb();
  std::vector<std::int64_t> scores;
  scores.reserve(trials);
  std::vector<std::string> q(query_len);
  for (std::size_t t = 0; t < trials; ++t) {
    bool absent = false;
    for (int attempt = 0; attempt < 1000 && !absent; ++attempt) {
      for (auto& s : q) s = syms.name(rng.bounded(syms.size()));
      absent = naive_match_end_positions(sa.base(), q).empty();
    }
    if (!absent)
      throw std::runtime_error(
          "could not sample an absent query of this length");
    // threshold minimum avoids counting as positive; we only need the score
    const QueryOutcome o =
        query_string(sa, variant, q, std::numeric_limits<std::int64_t>::max());
    scores.push_back(o.score);
  }
  std::sort(scores.begin(), scores.end());
  const std::size_t idx =
      std::min(scores.size() - 1, (scores.size() * 999) / 1000);
  const std::int64_t p999 = scores[idx];
  return (p999 + static_cast<std::int64_t>(sa.dim())) / 2;
}

}  // namespace hdc
