#include "hdc/hypervector.hpp"

#include <bit>
#include <cmath>
#include <cstring>
#include <limits>
#include <stdexcept>

namespace hdc {

namespace {

constexpr std::size_t kWordBits = 64;

std::size_t words_for(std::size_t dim) { return (dim + kWordBits - 1) / kWordBits; }

void check_dim(std::size_t dim) {
  if (dim == 0) throw std::invalid_argument("hypervector dimension must be >= 1");
}

void check_match(std::size_t a, std::size_t b) {
  if (a != b) throw std::invalid_argument("dimension mismatch");
}

// Copies len bits from src starting at bit src_off into dst starting at bit
// dst_off. Buffers must be distinct.
void copy_bits(const std::uint64_t* src, std::size_t src_off, std::uint64_t* dst,
               std::size_t dst_off, std::size_t len) {
  std::size_t done = 0;
  while (done < len) {
    const std::size_t d = dst_off + done;
    const std::size_t dw = d >> 6;
    const std::size_t db = d & 63;
    std::size_t take = kWordBits - db;
    if (take > len - done) take = len - done;

    const std::size_t s = src_off + done;
    const std::size_t sw = s >> 6;
    const std::size_t sb = s & 63;
    std::uint64_t bits = src[sw] >> sb;
    if (sb != 0 && sb + take > kWordBits) bits |= src[sw + 1] << (kWordBits - sb);
    const std::uint64_t mask =
        take == kWordBits ? ~0ULL : ((1ULL << take) - 1);
    bits &= mask;
    dst[dw] = (dst[dw] & ~(mask << db)) | (bits << db);
    done += take;
  }
}

}  // namespace

Hypervector::Hypervector(std::size_t dim) : dim_(dim), words_(words_for(dim), 0) {
  check_dim(dim);
}

void Hypervector::set_component(std::size_t i, int value) {
  const std::uint64_t mask = 1ULL << (i & 63);
  if (value > 0)
    words_[i >> 6] |= mask;
  else
    words_[i >> 6] &= ~mask;
}

void Hypervector::mask_tail() {
  const std::size_t tail = dim_ & 63;
  if (tail != 0) words_.back() &= (1ULL << tail) - 1;
}

Accumulator::Accumulator(std::size_t dim) : comps_(dim, 0) { check_dim(dim); }

Accumulator::Accumulator(const Hypervector& v) : comps_(v.dim()), weight_(1) {
  for (std::size_t i = 0; i < comps_.size(); ++i) comps_[i] = v.component(i);
}

void Accumulator::add(const Hypervector& v, int sign) {
  check_match(dim(), v.dim());
  if (sign != +1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  const auto words = v.words();
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    const int c = (words[i >> 6] >> (i & 63)) & 1 ? 1 : -1;
    comps_[i] += sign * c;
  }
  ++weight_;
}

void Accumulator::add_scaled(const Hypervector& v, std::int32_t count) {
  check_match(dim(), v.dim());
  const auto words = v.words();
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    const std::int32_t c = (words[i >> 6] >> (i & 63)) & 1 ? count : -count;
    comps_[i] += c;
  }
  weight_ += static_cast<std::uint64_t>(count < 0 ? -static_cast<std::int64_t>(count)
                                                  : count);
}

void Accumulator::add(const Accumulator& other) {
  check_match(dim(), other.dim());
  for (std::size_t i = 0; i < comps_.size(); ++i) comps_[i] += other.comps_[i];
  weight_ += other.weight_;
}

bool Accumulator::is_zero() const {
  for (const auto c : comps_)
    if (c != 0) return false;
  return true;
}

Hypervector random_hypervector(std::size_t dim, Rng& rng) {
  check_dim(dim);
  Hypervector v(dim);
  for (auto& w : v.words()) w = rng.next();
  v.mask_tail();
  return v;
}

Hypervector bind(const Hypervector& a, const Hypervector& b) {
  check_match(a.dim(), b.dim());
  Hypervector out(a.dim());
  const auto wa = a.words();
  const auto wb = b.words();
  auto wo = out.words();
  for (std::size_t i = 0; i < wo.size(); ++i) wo[i] = ~(wa[i] ^ wb[i]);
  out.mask_tail();
  return out;
}

Accumulator bind(const Accumulator& a, const Hypervector& b) {
  check_match(a.dim(), b.dim());
  Accumulator out = a;
  const auto words = b.words();
  for (std::size_t i = 0; i < out.comps_.size(); ++i)
    if (!((words[i >> 6] >> (i & 63)) & 1)) out.comps_[i] = -out.comps_[i];
  return out;
}

Accumulator bind(const Accumulator& a, const Accumulator& b) {
  check_match(a.dim(), b.dim());
  Accumulator out(a.dim());
  for (std::size_t i = 0; i < out.comps_.size(); ++i) {
    const std::int64_t p =
        static_cast<std::int64_t>(a.comps_[i]) * b.comps_[i];
    if (p > std::numeric_limits<std::int32_t>::max() ||
        p < std::numeric_limits<std::int32_t>::min())
      throw std::overflow_error("accumulator bind overflows 32-bit components");
    out.comps_[i] = static_cast<std::int32_t>(p);
  }
  out.weight_ = a.weight_ * b.weight_;
  return out;
}

std::int64_t dot(const Hypervector& a, const Hypervector& b) {
  check_match(a.dim(), b.dim());
  const auto wa = a.words();
  const auto wb = b.words();
  std::int64_t differing = 0;
  for (std::size_t i = 0; i < wa.size(); ++i)
    differing += std::popcount(wa[i] ^ wb[i]);
  return static_cast<std::int64_t>(a.dim()) - 2 * differing;
}

std::int64_t dot(const Accumulator& a, const Hypervector& b) {
  check_match(a.dim(), b.dim());
  const auto words = b.words();
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const std::int64_t c = a.component(i);
    sum += (words[i >> 6] >> (i & 63)) & 1 ? c : -c;
  }
  return sum;
}

std::int64_t dot(const Hypervector& a, const Accumulator& b) { return dot(b, a); }

std::int64_t dot(const Accumulator& a, const Accumulator& b) {
  check_match(a.dim(), b.dim());
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    sum += static_cast<std::int64_t>(a.component(i)) * b.component(i);
  return sum;
}

Hypervector permute(const Hypervector& a, std::int64_t k) {
  const auto n = static_cast<std::int64_t>(a.dim());
  const std::size_t s = static_cast<std::size_t>(((k % n) + n) % n);
  if (s == 0) return a;
  Hypervector out(a.dim());
  copy_bits(a.words().data(), 0, out.words().data(), s, a.dim() - s);
  copy_bits(a.words().data(), a.dim() - s, out.words().data(), 0, s);
  return out;
}

Accumulator permute(const Accumulator& a, std::int64_t k) {
  const auto n = static_cast<std::int64_t>(a.dim());
  const std::size_t s = static_cast<std::size_t>(((k % n) + n) % n);
  if (s == 0) return a;
  Accumulator out(a.dim());
  const auto& src = a.comps_;
  auto& dst = out.comps_;
  std::memcpy(dst.data() + s, src.data(), (a.dim() - s) * sizeof(std::int32_t));
  std::memcpy(dst.data(), src.data() + (a.dim() - s), s * sizeof(std::int32_t));
  out.weight_ = a.weight_;
  return out;
}

Accumulator accumulate(Accumulator acc, const Hypervector& v, int sign) {
  acc.add(v, sign);
  return acc;
}

Hypervector normalize(const Accumulator& acc, const Hypervector& tie_break) {
  check_match(acc.dim(), tie_break.dim());
  Hypervector out(acc.dim());
  auto words = out.words();
  const auto ties = tie_break.words();
  for (std::size_t i = 0; i < acc.dim(); ++i) {
    const std::int32_t c = acc.component(i);
    std::uint64_t bit;
    if (c > 0)
      bit = 1;
    else if (c < 0)
      bit = 0;
    else
      bit = (ties[i >> 6] >> (i & 63)) & 1;
    words[i >> 6] |= bit << (i & 63);
  }
  return out;
}

Hypervector majority_bundle(std::span<const Hypervector> vs,
                            const Hypervector& tie_break) {
  if (vs.empty()) return tie_break;
  const std::size_t dim = vs[0].dim();
  const std::size_t nwords = vs[0].word_count();
  for (const auto& v : vs) check_match(dim, v.dim());
  check_match(dim, tie_break.dim());

  // Bit-sliced counters: planes[p] holds bit p of the per-component count of
  // +1 entries.
  std::vector<std::vector<std::uint64_t>> planes;
  for (const auto& v : vs) {
    const auto words = v.words();
    for (std::size_t w = 0; w < nwords; ++w) {
      std::uint64_t carry = words[w];
      for (std::size_t p = 0; carry != 0; ++p) {
        if (p == planes.size()) planes.emplace_back(nwords, 0);
        const std::uint64_t sum = planes[p][w] ^ carry;
        carry &= planes[p][w];
        planes[p][w] = sum;
      }
    }
  }

  const std::uint64_t total = vs.size();
  const std::uint64_t half = total / 2;  // count > half  <=>  sum > 0
  Hypervector out(dim);
  auto words = out.words();
  const auto ties = tie_break.words();
  const std::size_t nplanes = planes.size();
  for (std::size_t w = 0; w < nwords; ++w) {
    std::uint64_t gt = 0;
    std::uint64_t eq = ~0ULL;
    for (std::size_t p = nplanes; p-- > 0;) {
      const std::uint64_t cnt = planes[p][w];
      const std::uint64_t ref = (half >> p) & 1 ? ~0ULL : 0;
      gt |= eq & cnt & ~ref;
      eq &= ~(cnt ^ ref);
    }
    if (half >> nplanes != 0) {  // reference has bits above any counter plane
      gt = 0;
      eq = 0;
    }
    std::uint64_t bits = gt;
    if (total % 2 == 0) bits |= eq & ties[w];
    words[w] = bits;
  }
  out.mask_tail();
  return out;
}

Hypervector flip_noise(const Hypervector& a, double p, Rng& rng) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must be in [0, 1]");
  const std::size_t n = a.dim();
  const auto k = static_cast<std::size_t>(std::llround(p * static_cast<double>(n)));
  Hypervector out = a;
  if (k == 0) return out;

  thread_local std::vector<std::uint32_t> index;
  thread_local std::vector<std::uint32_t> touched;
  if (index.size() != n) {
    index.resize(n);
    for (std::size_t i = 0; i < n; ++i) index[i] = static_cast<std::uint32_t>(i);
  }
  touched.clear();
  // Partial Fisher-Yates; swaps are undone afterwards so the identity
  // permutation can be reused across calls.
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.bounded(n - i));
    std::swap(index[i], index[j]);
    touched.push_back(static_cast<std::uint32_t>(j));
    out.flip_component(index[i]);
  }
  for (std::size_t i = k; i-- > 0;) std::swap(index[i], index[touched[i]]);
  return out;
}

Accumulator scaled_superposition(std::span<const std::int64_t> weights,
                                 std::span<const Hypervector> vs) {
  if (weights.size() != vs.size())
    throw std::invalid_argument("weights and vectors differ in count");
  if (vs.empty()) throw std::invalid_argument("empty superposition");
  std::int64_t bound = 0;
  for (const auto w : weights) bound += w < 0 ? -w : w;
  if (bound > std::numeric_limits<std::int32_t>::max())
    throw std::overflow_error("superposition overflows 32-bit components");
  Accumulator out(vs[0].dim());
  for (std::size_t k = 0; k < vs.size(); ++k) {
    check_match(out.dim(), vs[k].dim());
    const auto words = vs[k].words();
    const auto wk = static_cast<std::int32_t>(weights[k]);
    for (std::size_t i = 0; i < out.dim(); ++i)
      out.comps_[i] += (words[i >> 6] >> (i & 63)) & 1 ? wk : -wk;
  }
  out.weight_ = static_cast<std::uint64_t>(bound);
  return out;
}

}  // namespace hdc
