#include "gaoforge/sequence.hpp"

#include <string>

namespace gaoforge {

ResidueSequence::ResidueSequence(Modulus m, std::vector<Int> terms)
    : modulus_(std::move(m)), terms_(std::move(terms)) {
  for (auto& t : terms_) t = mod(t, modulus_.value());
}

std::vector<Int> reduce_terms(const ResidueSequence& s, Int m) {
  if (m < 1 || s.n() % m != 0)
    throw std::invalid_argument(std::to_string(m) + " does not divide " + std::to_string(s.n()));
  std::vector<Int> out;
  out.reserve(s.size());
  for (Int t : s.terms()) out.push_back(t % m);
  return out;
}

ResidueSequence natural_map(const ResidueSequence& s, Int n_prime) {
  auto terms = reduce_terms(s, n_prime);
  return ResidueSequence(Modulus(n_prime), std::move(terms));
}

ResidueSequence crt_project(const ResidueSequence& s, Int p) {
  const int e = s.modulus().valuation(p);
  if (e == 0)
    throw std::invalid_argument(std::to_string(p) + " is not a prime divisor of " +
                                std::to_string(s.n()));
  return natural_map(s, ipow(p, e));
}

}  // namespace gaoforge
