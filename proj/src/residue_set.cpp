#include "gaoforge/residue_set.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace gaoforge {

namespace {

std::uint64_t low_mask(Int bits) {
  return bits >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << bits) - 1);
}

// Up to 64 bits of `w` starting at bit `pos`.
std::uint64_t extract(const std::vector<std::uint64_t>& w, Int pos, Int len) {
  const auto word = static_cast<std::size_t>(pos >> 6);
  const int sh = static_cast<int>(pos & 63);
  std::uint64_t v = w[word] >> sh;
  if (sh != 0 && word + 1 < w.size()) v |= w[word + 1] << (64 - sh);
  return v & low_mask(len);
}

void deposit_or(std::vector<std::uint64_t>& w, Int pos, std::uint64_t v, Int len) {
  const auto word = static_cast<std::size_t>(pos >> 6);
  const int sh = static_cast<int>(pos & 63);
  w[word] |= v << sh;
  if (sh != 0 && len > 64 - sh) w[word + 1] |= v >> (64 - sh);
}

// dst[dpos, dpos+len) |= src[spos, spos+len)
void copy_or(std::vector<std::uint64_t>& dst, Int dpos, const std::vector<std::uint64_t>& src,
             Int spos, Int len) {
  for (Int off = 0; off < len; off += 64) {
    const Int chunk = std::min<Int>(64, len - off);
    deposit_or(dst, dpos + off, extract(src, spos + off, chunk), chunk);
  }
}

}  // namespace

ResidueSet::ResidueSet(Int n) : n_(n), words_(static_cast<std::size_t>((n + 63) / 64), 0) {
  if (n < 1) throw std::invalid_argument("ResidueSet: modulus must be positive");
}

ResidueSet ResidueSet::singleton(Int n, Int r) {
  ResidueSet s(n);
  s.set(r);
  return s;
}

void ResidueSet::clear() { std::fill(words_.begin(), words_.end(), 0); }

bool ResidueSet::none() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

Int ResidueSet::count() const {
  Int c = 0;
  for (auto w : words_) c += std::popcount(w);
  return c;
}

ResidueSet& ResidueSet::operator|=(const ResidueSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

void ResidueSet::or_rotated(const ResidueSet& src, Int shift) {
  shift %= n_;
  if (shift < 0) shift += n_;
  if (shift == 0) {
    *this |= src;
    return;
  }
  if (words_.size() == 1) {
    const std::uint64_t x = src.words_[0];
    words_[0] |= ((x << shift) | (x >> (n_ - shift))) & low_mask(n_);
    return;
  }
  // bits [0, n-shift) move up by shift; bits [n-shift, n) wrap to the front.
  copy_or(words_, shift, src.words_, 0, n_ - shift);
  copy_or(words_, 0, src.words_, n_ - shift, shift);
}

void ResidueSet::or_translates(const ResidueSet& src, std::span<const Int> shifts) {
  if (words_.size() == 1) {
    const std::uint64_t x = src.words_[0];
    if (x == 0) return;
    const std::uint64_t mask = low_mask(n_);
    std::uint64_t acc = 0;
    for (Int k : shifts) acc |= k == 0 ? x : ((x << k) | (x >> (n_ - k)));
    words_[0] |= acc & mask;
    return;
  }
  if (src.none()) return;
  for (Int k : shifts) or_rotated(src, k);
}

std::vector<Int> ResidueSet::elements() const {
  std::vector<Int> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t w = words_[i];
    while (w != 0) {
      out.push_back(static_cast<Int>(i * 64) + std::countr_zero(w));
      w &= w - 1;
    }
  }
  return out;
}

}  // namespace gaoforge
