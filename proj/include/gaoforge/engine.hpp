#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gaoforge/residue.hpp"
#include "gaoforge/sequence.hpp"

namespace gaoforge {

/// A nonempty choice of term indices and one weight per chosen term.
struct WitnessSelection {
  std::vector<std::size_t> indices;  // strictly increasing
  std::vector<Int> weights;          // weights[j] applies to terms[indices[j]]
};

/// Checks every invariant of a witness: nonempty, increasing in-range indices,
/// weights from A, and a weighted sum of 0 mod n.
bool witness_is_valid(const ResidueSequence& s, const WeightSet& a, const WitnessSelection& w);

/// Every value a*x can take for a in A.
std::vector<Int> reachable_sums(Int x, const WeightSet& a);

// Zero-sum predicates. The empty selection never counts; the empty sequence has none.

bool has_wzs_subsequence(const ResidueSequence& s, const WeightSet& a);
std::optional<WitnessSelection> find_wzs_subsequence(const ResidueSequence& s,
                                                     const WeightSet& a);

/// Throws std::out_of_range unless 0 < length <= s.size().
bool has_wzs_subsequence_of_length(const ResidueSequence& s, const WeightSet& a,
                                   std::size_t length);
std::optional<WitnessSelection> find_wzs_subsequence_of_length(const ResidueSequence& s,
                                                               const WeightSet& a,
                                                               std::size_t length);

/// Whole nonempty sequence is an A-weighted zero-sum.
bool is_wzs_sequence(const ResidueSequence& s, const WeightSet& a);

/// For each c in [0, s.size()], whether some c-term selection sums to zero.
/// Entry 0 is always true (the empty selection) and is reported as such.
std::vector<bool> zero_sum_sizes(const ResidueSequence& s, const WeightSet& a);

/// Same predicates decided through the prime-power components of Z_n: a
/// selection is a U(n)-weighted zero-sum iff each projection to Z_{p^v_p(n)}
/// is a U(p^v)-weighted zero-sum. The selection is shared across components.
/// Throws std::invalid_argument unless A realizes U(n).
bool crt_equivalent_check(const ResidueSequence& s, const WeightSet& a,
                          std::optional<std::size_t> length = std::nullopt);

/// Lifting reduction: divide every term by d, map to Z_{n/d}, and test the
/// whole image sequence against A' (which must lie inside the image of A).
/// A true answer certifies that s itself is an A-weighted zero-sum sequence;
/// false is inconclusive.
/// Throws std::invalid_argument when d is not a proper divisor of n, d misses
/// some term, or A' is not contained in the image of A.
bool lift_check(const ResidueSequence& s, Int d, const WeightSet& a, const WeightSet& a_image);

}  // namespace gaoforge
