// Binary digit manipulation: digit sums, carry counting, block decompositions
// of odd integers into alternating runs of ones and zeros, extended block
// expansions with infinite entries, digit reversal and interleaving.
//
// Block order is least-significant-first throughout: the expansion of an odd
// integer t with binary string 1^{k_{N-1}} 0^{l_{N-2}} ... 0^{l_0} 1^{k_0}
// (most significant digit on the left) is stored as
// (k_0, l_0, ..., k_{N-1}, l_{N-1}) with l_{N-1} = infinity.  This matches
// the order in which the transfer matrices are multiplied.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sodcorr {

// A positive integer or infinity.  Finite values are capped below 2^32 so
// that exponent arithmetic downstream stays in machine integers.
class ExtNat {
 public:
  static constexpr std::uint64_t max_finite = (std::uint64_t{1} << 32) - 1;

  static ExtNat finite(std::uint64_t v);
  static ExtNat infinity() { return ExtNat(0, true); }

  bool is_infinite() const { return infinite_; }
  std::uint64_t value() const;  // throws on infinity

  bool operator==(const ExtNat&) const = default;

 private:
  ExtNat(std::uint64_t v, bool inf) : value_(v), infinite_(inf) {}
  std::uint64_t value_;
  bool infinite_;
};

// An even-length tuple (k_0, l_0, ..., k_{N-1}, l_{N-1}) of ExtNat.  N = 0
// encodes the empty product (the integer 0).
class BlockExpansion {
 public:
  BlockExpansion() = default;
  explicit BlockExpansion(std::vector<ExtNat> entries);

  std::size_t pair_count() const { return entries_.size() / 2; }
  std::size_t size() const { return entries_.size(); }
  const ExtNat& entry(std::size_t j) const { return entries_.at(j); }
  const std::vector<ExtNat>& entries() const { return entries_; }

  // True iff the tuple encodes a positive odd integer: last entry infinite,
  // all others finite.
  bool represents_odd_integer() const;

  // Bit j set iff entry j is infinite.  Requires size() <= 32.
  std::uint32_t infinite_mask() const;

  std::string to_string() const;  // e.g. "(2,3,5,inf)"

  bool operator==(const BlockExpansion&) const = default;

 private:
  std::vector<ExtNat> entries_;
};

// (k_0,...,k_{N-1}) * (l_0,...,l_{N-1}) -> (k_0,l_0,...,k_{N-1},l_{N-1}).
// Throws on length mismatch.
BlockExpansion interleave(const std::vector<ExtNat>& ones_blocks,
                          const std::vector<ExtNat>& zeros_blocks);

// A finite 0/1 selection word.
struct Word {
  std::vector<std::uint8_t> bits;
};

struct WordStats {
  unsigned ones;      // number of 1 symbols
  unsigned onezero;   // number of adjacent (1,0) factors
};

WordStats word_stats(const Word& w);

// Number of ones in the binary expansion of n.
unsigned digit_sum(std::uint64_t n);

// Number of carries when adding n and t in binary; equals the 2-adic
// valuation of C(n+t, t).  Requires n + t to fit in 64 bits.
unsigned carry_count(std::uint64_t n, std::uint64_t t);

// Odd t -> (k_0, l_0, ..., k_{N-1}, inf).  Throws on zero or even input.
BlockExpansion to_blocks(std::uint64_t t);

// Inverse of to_blocks; the empty expansion maps to 0.  Throws if the tuple
// does not represent an integer or the value overflows 64 bits.
std::uint64_t from_blocks(const BlockExpansion& t);

struct OddShift {
  std::uint64_t odd;
  unsigned shift;
};

// t = odd * 2^shift with odd odd.  Throws on t = 0.
OddShift reduce_to_odd(std::uint64_t t);

// Reverses the binary expansion (no leading zeros).  Involution on odd t.
std::uint64_t reverse_binary(std::uint64_t t);

}  // namespace sodcorr
