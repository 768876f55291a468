#include "defreg/monomial.hpp"

#include "defreg/errors.hpp"

#include <algorithm>
#include <set>

namespace defreg {

namespace {

bool is_subset(const IndexSet& small, const IndexSet& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

bool meets(const IndexSet& a, const IndexSet& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j)
      return true;
    if (*i < *j)
      ++i;
    else
      ++j;
  }
  return false;
}

// Keeps the inclusion-minimal sets, sorted lexicographically.
std::vector<IndexSet> minimalize(std::vector<IndexSet> sets) {
  std::sort(sets.begin(), sets.end(), [](const IndexSet& a, const IndexSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<IndexSet> kept;
  for (auto& s : sets) {
    const bool redundant =
        std::any_of(kept.begin(), kept.end(), [&](const IndexSet& k) { return is_subset(k, s); });
    if (!redundant)
      kept.push_back(std::move(s));
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

} // namespace

SquarefreeIdeal::SquarefreeIdeal(RingContext ring, std::vector<IndexSet> generators) : ring_(std::move(ring)) {
  if (generators.empty())
    throw ZeroIdeal("the zero ideal has no minimal primes");
  for (auto& g : generators) {
    const std::size_t before = g.size();
    g = make_index_set(std::move(g));
    if (g.size() != before)
      throw NonSquarefree("generator repeats a variable");
    if (g.empty())
      throw InputError("the unit monomial generates the whole ring");
    if (g.back() >= ring_.nvars())
      throw UnknownVariable("generator uses a variable index outside the ring");
  }
  generators_ = minimalize(std::move(generators));
}

std::vector<FacePrime> minimal_primes(const SquarefreeIdeal& ideal) {
  // Covers of the first k generators, extended one generator at a time.
  std::vector<IndexSet> covers{IndexSet{}};
  for (const auto& g : ideal.generators()) {
    std::vector<IndexSet> next;
    for (const auto& c : covers) {
      if (meets(c, g)) {
        next.push_back(c);
        continue;
      }
      for (auto v : g) {
        IndexSet extended = c;
        extended.insert(std::upper_bound(extended.begin(), extended.end(), v), v);
        next.push_back(std::move(extended));
      }
    }
    covers = minimalize(std::move(next));
  }
  std::vector<FacePrime> primes;
  primes.reserve(covers.size());
  for (auto& c : covers)
    primes.push_back(FacePrime{std::move(c)});
  return primes;
}

FacePrime face_sum(const FacePrime& a, const FacePrime& b) {
  FacePrime out;
  std::set_union(a.vars.begin(), a.vars.end(), b.vars.begin(), b.vars.end(), std::back_inserter(out.vars));
  return out;
}

bool face_contains(const FacePrime& a, const FacePrime& b) { return is_subset(b.vars, a.vars); }

IdealNode make_face_node(FacePrime prime, const RingContext& ring) {
  IdealNode node;
  node.height = prime.height();
  node.dim = ring.nvars() - prime.height();
  node.is_prime = true;
  node.is_cm = true;
  node.repr = std::move(prime);
  return node;
}

AnalysisPoset build_monomial_poset(const SquarefreeIdeal& ideal, std::size_t max_elements) {
  const RingContext& ring = ideal.ring();
  std::vector<IdealNode> generators;
  for (auto& p : minimal_primes(ideal))
    generators.push_back(make_face_node(std::move(p), ring));

  ClosureOps ops;
  ops.sum = [&ring](const IdealNode& a, const IdealNode& b) {
    return make_face_node(face_sum(std::get<FacePrime>(a.repr), std::get<FacePrime>(b.repr)), ring);
  };
  ops.contains = [](const IdealNode& a, const IdealNode& b) {
    return face_contains(std::get<FacePrime>(a.repr), std::get<FacePrime>(b.repr));
  };
  AnalysisPoset poset = join_closure(std::move(generators), ops, ring, max_elements);
  if (heights_strictly_decrease(poset) != true)
    throw std::logic_error("face-prime poset violates strict height decrease");
  return poset;
}

} // namespace defreg
