#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace gaoforge {

using Int = std::int64_t;

/// Fixed-size bitset over the residues 0..n-1 with cyclic translation.
///
/// This is the workhorse of every feasibility table: a row marks which sums
/// are reachable, and adding a weighted term ORs in the row rotated by each
/// element of the term's orbit. Moduli up to 64 live in a single word.
class ResidueSet {
 public:
  ResidueSet() = default;
  explicit ResidueSet(Int n);

  static ResidueSet singleton(Int n, Int r);

  Int modulus() const { return n_; }
  bool test(Int r) const { return (words_[r >> 6] >> (r & 63)) & 1U; }
  void set(Int r) { words_[r >> 6] |= std::uint64_t{1} << (r & 63); }
  void clear();
  bool none() const;
  Int count() const;

  ResidueSet& operator|=(const ResidueSet& other);

  /// this |= { (s + shift) mod n : s in src }
  void or_rotated(const ResidueSet& src, Int shift);

  /// this |= src (+) shifts, i.e. the sumset with an explicit shift list.
  /// Shifts must lie in [0, n).
  void or_translates(const ResidueSet& src, std::span<const Int> shifts);

  std::vector<Int> elements() const;

  friend bool operator==(const ResidueSet&, const ResidueSet&) = default;

 private:
  Int n_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace gaoforge
