#pragma once

#include "defreg/ideal_types.hpp"
#include "defreg/posets.hpp"

#include <vector>

namespace defreg {

// Squarefree monomial ideal; each generator is the set of variables of one
// squarefree monomial. The generating set is kept minimal and sorted.
class SquarefreeIdeal {
public:
  // Drops generators divisible by other generators. Throws ZeroIdeal for an
  // empty list and InputError for the unit monomial or an index outside
  // the ring.
  SquarefreeIdeal(RingContext ring, std::vector<IndexSet> generators);

  const RingContext& ring() const { return ring_; }
  const std::vector<IndexSet>& generators() const { return generators_; }

private:
  RingContext ring_;
  std::vector<IndexSet> generators_;
};

// Minimal vertex covers of the generator hypergraph, lexicographically
// sorted by variable index.
std::vector<FacePrime> minimal_primes(const SquarefreeIdeal& ideal);

FacePrime face_sum(const FacePrime& a, const FacePrime& b);

// ideal(a) contains ideal(b).
bool face_contains(const FacePrime& a, const FacePrime& b);

IdealNode make_face_node(FacePrime prime, const RingContext& ring);

// Closure of the minimal primes under sums. Every node is a face prime, so
// the Cohen-Macaulay and strict-height conditions hold by construction.
AnalysisPoset build_monomial_poset(const SquarefreeIdeal& ideal, std::size_t max_elements = kDefaultPosetBudget);

} // namespace defreg
