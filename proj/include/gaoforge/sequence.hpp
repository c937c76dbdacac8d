#pragma once

#include <cstddef>
#include <vector>

#include "gaoforge/residue.hpp"

namespace gaoforge {

/// A finite sequence of residues over Z_n. Terms are reduced into [0, n) on construction.
class ResidueSequence {
 public:
  explicit ResidueSequence(Modulus m, std::vector<Int> terms = {});

  const Modulus& modulus() const { return modulus_; }
  Int n() const { return modulus_.value(); }
  const std::vector<Int>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  Int operator[](std::size_t i) const { return terms_[i]; }

  friend bool operator==(const ResidueSequence& a, const ResidueSequence& b) {
    return a.modulus_ == b.modulus_ && a.terms_ == b.terms_;
  }

 private:
  Modulus modulus_;
  std::vector<Int> terms_;
};

/// Termwise reduction Z_n -> Z_m as raw residues; m = 1 is allowed (all zero).
/// Throws std::invalid_argument unless m divides n.
std::vector<Int> reduce_terms(const ResidueSequence& s, Int m);

/// Termwise reduction to Z_{n'} for a divisor n' >= 2 of n.
ResidueSequence natural_map(const ResidueSequence& s, Int n_prime);

/// Image of s in Z_{p^{v_p(n)}}. Throws std::invalid_argument if p does not divide n.
ResidueSequence crt_project(const ResidueSequence& s, Int p);

}  // namespace gaoforge
