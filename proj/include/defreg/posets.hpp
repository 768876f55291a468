#pragma once

#include "defreg/complexes.hpp"
#include "defreg/ideal_types.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace defreg {

inline constexpr std::size_t kDefaultPosetBudget = 10'000;

// The ambient graded polynomial ring A = K[x_1, ..., x_n].
class RingContext {
public:
  // Throws InputError on duplicate or empty names.
  explicit RingContext(std::vector<std::string> var_names);

  // K[x_1..x_n, y_1..y_n] for a graph on n vertices.
  static RingContext binomial_edge(std::uint32_t n);

  std::size_t nvars() const { return names_.size(); }
  const std::vector<std::string>& var_names() const { return names_; }
  // The canonical module of A is A(twist()).
  long twist() const { return -static_cast<long>(names_.size()); }

  bool operator==(const RingContext&) const = default;

private:
  std::vector<std::string> names_;
};

struct IdealNode {
  std::string id;
  NodeRepr repr;
  std::optional<std::size_t> height;
  std::size_t dim = 0;  // Krull dimension of A / I_p
  bool is_prime = true;
  bool is_cm = true;
};

// Human-readable form of a node's ideal, using the ring's variable names
// when one is given.
std::string describe(const IdealNode& node, const RingContext* ring);

// Finite poset of ideals ordered by reverse inclusion: leq(a, b) holds when
// the ideal of a contains the ideal of b. The adjoined top element is
// implicit; maximal elements are the minimal primes.
class AnalysisPoset {
public:
  // `leq` is row-major, size() x size(). Throws InvalidPoset unless it is a
  // partial order, ids are unique, and height + dim = nvars wherever a
  // height is known and a ring is attached.
  AnalysisPoset(std::vector<IdealNode> elements, std::vector<std::uint8_t> leq,
                std::optional<RingContext> ring);

  std::size_t size() const { return elements_.size(); }
  const std::vector<IdealNode>& elements() const { return elements_; }
  const IdealNode& element(std::size_t i) const { return elements_.at(i); }
  const std::optional<RingContext>& ring() const { return ring_; }

  bool leq(std::size_t a, std::size_t b) const { return leq_[a * size() + b] != 0; }
  bool less(std::size_t a, std::size_t b) const { return a != b && leq(a, b); }

  // Throws UnknownElement.
  std::size_t index_of(const std::string& id) const;

  bool is_maximal(std::size_t i) const;
  std::vector<std::size_t> maximal_elements() const;
  std::size_t max_dim() const;

private:
  std::vector<IdealNode> elements_;
  std::vector<std::uint8_t> leq_;
  std::optional<RingContext> ring_;
};

// Value-type induced sub-poset.
struct SubPoset {
  std::vector<std::string> ids;
  std::vector<std::size_t> source;  // indices into the parent poset
  std::vector<std::uint8_t> leq;    // row-major, induced order

  std::size_t size() const { return ids.size(); }
  bool leq_at(std::size_t a, std::size_t b) const { return leq[a * size() + b] != 0; }
};

SubPoset induced_subposet(const AnalysisPoset& poset, const std::vector<std::size_t>& members);

// The open interval (p, 1^) = { q : p < q }. Empty exactly when p is maximal.
SubPoset open_interval_above(const AnalysisPoset& poset, std::size_t p);
SubPoset open_interval_above(const AnalysisPoset& poset, const std::string& id);

// Chains of s as faces. The empty sub-poset yields the empty complex.
SimplicialComplex order_complex(const SubPoset& s, std::size_t face_budget = kDefaultFaceBudget);

// Number of elements in a longest chain of s.
std::size_t longest_chain(const SubPoset& s);

// Cover pairs (a, b) with a < b and nothing strictly between, ordered by
// element index.
std::vector<std::pair<std::string, std::string>> hasse(const AnalysisPoset& poset);

// Whether p < q always implies height(q) < height(p); nullopt when some
// element has no recorded height.
std::optional<bool> heights_strictly_decrease(const AnalysisPoset& poset);

struct ClosureOps {
  // Sum of two prime nodes; the result has is_prime = false when the sum
  // is not prime.
  std::function<IdealNode(const IdealNode&, const IdealNode&)> sum;
  // Minimal primes of a non-prime node. May be left empty when every sum is
  // known to be prime.
  std::function<std::vector<IdealNode>(const IdealNode&)> decompose;
  // contains(a, b): ideal(a) contains ideal(b).
  std::function<bool(const IdealNode&, const IdealNode&)> contains;
};

// Worklist fixpoint: all pairwise sums of accumulated primes are formed;
// prime sums are inserted, non-prime sums are replaced by their minimal
// primes, and the process repeats over the enlarged set. Nodes are
// deduplicated by canonical key and renamed p1, p2, ... in discovery order.
//
// Throws ClosureBudgetExceeded past `max_elements` and MissingDecomposer
// when a non-prime sum arises without a decomposer.
AnalysisPoset join_closure(std::vector<IdealNode> generators, const ClosureOps& ops,
                           std::optional<RingContext> ring, std::size_t max_elements = kDefaultPosetBudget);

} // namespace defreg
