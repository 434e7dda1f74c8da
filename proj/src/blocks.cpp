#include "blocks.hpp"

#include <bit>
#include <stdexcept>

namespace sodcorr {

ExtNat ExtNat::finite(std::uint64_t v) {
  if (v == 0) throw std::invalid_argument("block length must be >= 1");
  if (v > max_finite) throw std::invalid_argument("block length exceeds 2^32");
  return ExtNat(v, false);
}

std::uint64_t ExtNat::value() const {
  if (infinite_) throw std::logic_error("value() on infinite block length");
  return value_;
}

BlockExpansion::BlockExpansion(std::vector<ExtNat> entries)
    : entries_(std::move(entries)) {
  if (entries_.size() % 2 != 0)
    throw std::invalid_argument("block expansion must have even length");
}

bool BlockExpansion::represents_odd_integer() const {
  if (entries_.empty()) return false;
  for (std::size_t j = 0; j + 1 < entries_.size(); ++j)
    if (entries_[j].is_infinite()) return false;
  return entries_.back().is_infinite();
}

std::uint32_t BlockExpansion::infinite_mask() const {
  if (entries_.size() > 32)
    throw std::length_error("expansion too long for word enumeration");
  std::uint32_t mask = 0;
  for (std::size_t j = 0; j < entries_.size(); ++j)
    if (entries_[j].is_infinite()) mask |= std::uint32_t{1} << j;
  return mask;
}

std::string BlockExpansion::to_string() const {
  std::string out = "(";
  for (std::size_t j = 0; j < entries_.size(); ++j) {
    if (j != 0) out += ",";
    out += entries_[j].is_infinite() ? "inf" : std::to_string(entries_[j].value());
  }
  out += ")";
  return out;
}

BlockExpansion interleave(const std::vector<ExtNat>& ones_blocks,
                          const std::vector<ExtNat>& zeros_blocks) {
  if (ones_blocks.size() != zeros_blocks.size())
    throw std::invalid_argument("interleave: length mismatch");
  std::vector<ExtNat> entries;
  entries.reserve(2 * ones_blocks.size());
  for (std::size_t i = 0; i < ones_blocks.size(); ++i) {
    entries.push_back(ones_blocks[i]);
    entries.push_back(zeros_blocks[i]);
  }
  return BlockExpansion(std::move(entries));
}

WordStats word_stats(const Word& w) {
  WordStats stats{0, 0};
  for (std::size_t j = 0; j < w.bits.size(); ++j) {
    if (w.bits[j]) ++stats.ones;
    if (j + 1 < w.bits.size() && w.bits[j] == 1 && w.bits[j + 1] == 0)
      ++stats.onezero;
  }
  return stats;
}

unsigned digit_sum(std::uint64_t n) {
  return static_cast<unsigned>(std::popcount(n));
}

unsigned carry_count(std::uint64_t n, std::uint64_t t) {
  if (n > ~t) throw std::overflow_error("carry_count: n + t overflows");
  unsigned carries = 0;
  std::uint64_t carry = 0;
  std::uint64_t a = n, b = t;
  while (a != 0 || b != 0 || carry != 0) {
    const std::uint64_t sum = (a & 1) + (b & 1) + carry;
    carry = sum >> 1;
    carries += static_cast<unsigned>(carry);
    a >>= 1;
    b >>= 1;
  }
  return carries;
}

BlockExpansion to_blocks(std::uint64_t t) {
  if (t == 0) throw std::invalid_argument("to_blocks: input must be positive");
  if ((t & 1) == 0)
    throw std::invalid_argument("to_blocks: input must be odd (reduce_to_odd first)");
  std::vector<ExtNat> entries;
  while (t != 0) {
    const unsigned ones = static_cast<unsigned>(std::countr_one(t));
    entries.push_back(ExtNat::finite(ones));
    t >>= ones;
    if (t == 0) {
      entries.push_back(ExtNat::infinity());
    } else {
      const unsigned zeros = static_cast<unsigned>(std::countr_zero(t));
      entries.push_back(ExtNat::finite(zeros));
      t >>= zeros;
    }
  }
  return BlockExpansion(std::move(entries));
}

std::uint64_t from_blocks(const BlockExpansion& t) {
  if (t.size() == 0) return 0;
  if (!t.represents_odd_integer())
    throw std::invalid_argument("from_blocks: expansion does not represent an integer");
  std::uint64_t value = 0;
  unsigned pos = 0;
  for (std::size_t i = 0; i < t.pair_count(); ++i) {
    const std::uint64_t k = t.entry(2 * i).value();
    if (pos + k > 63) throw std::overflow_error("from_blocks: value exceeds 64 bits");
    value |= ((std::uint64_t{1} << k) - 1) << pos;
    pos += static_cast<unsigned>(k);
    if (2 * i + 1 + 1 < t.size()) {
      const std::uint64_t l = t.entry(2 * i + 1).value();
      if (pos + l > 63) throw std::overflow_error("from_blocks: value exceeds 64 bits");
      pos += static_cast<unsigned>(l);
    }
  }
  return value;
}

OddShift reduce_to_odd(std::uint64_t t) {
  if (t == 0) throw std::invalid_argument("reduce_to_odd: input must be positive");
  const unsigned shift = static_cast<unsigned>(std::countr_zero(t));
  return OddShift{t >> shift, shift};
}

std::uint64_t reverse_binary(std::uint64_t t) {
  if (t == 0) return 0;
  std::uint64_t reversed = 0;
  while (t != 0) {
    reversed = (reversed << 1) | (t & 1);
    t >>= 1;
  }
  return reversed;
}

}  // namespace sodcorr
