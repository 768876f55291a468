#pragma once

#include "defreg/ideal_types.hpp"
#include "defreg/posets.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace defreg {

// Exhaustive cut-set enumeration is exponential in the vertex count.
inline constexpr std::uint32_t kMaxGraphVertices = 30;

// Simple undirected graph on vertices 1..n.
class Graph {
public:
  using Edge = std::pair<std::uint32_t, std::uint32_t>;

  // Normalizes each edge to (min, max) and drops duplicates. Throws
  // InputError on loops or vertices outside 1..n.
  Graph(std::uint32_t n, std::vector<Edge> edges);

  std::uint32_t n() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }

private:
  std::uint32_t n_;
  std::vector<Edge> edges_;
};

// Connected components of the graph restricted to `alive`, each sorted,
// listed in order of their smallest vertex. Vertices are 1..n.
std::vector<IndexSet> components(std::uint32_t n, const std::vector<Graph::Edge>& edges, const IndexSet& alive);

// Sets T of vertices in `vertices` such that T is empty or removing
// T \ {i} leaves strictly fewer components than removing T, for every i in
// T. Ordered by size, then lexicographically.
std::vector<IndexSet> cut_sets(std::uint32_t n, const std::vector<Graph::Edge>& edges, const IndexSet& vertices);

// The primes P_S(G) over all cut sets S, ordered as cut_sets().
std::vector<CliquePrime> minimal_primes_graph(const Graph& g);

// ideal(a) contains ideal(b): S_b is inside S_a and every block of b,
// minus S_a, sits inside one block of a.
bool clique_contains(const CliquePrime& a, const CliquePrime& b);

CliqueUnionIdeal sum_ideals(const CliquePrime& a, const CliquePrime& b);

// Edges of the clique-union graph on [n] \ S.
std::vector<Graph::Edge> clique_edges(const CliqueUnionIdeal& c);

// Prime iff every connected component of the clique-union graph is complete.
bool is_prime(const CliqueUnionIdeal& c);

// The clique prime equal to a prime clique-union ideal; throws InputError
// when c is not prime.
CliquePrime as_prime(const CliqueUnionIdeal& c);

// Minimal primes of a non-prime clique-union ideal. Throws AlreadyPrime.
std::vector<CliquePrime> decompose(const CliqueUnionIdeal& c);

IdealNode make_clique_node(CliquePrime prime);

// Iterated closure of the minimal primes of J_G under sums, replacing each
// non-prime sum by its minimal primes. Every node is prime and
// Cohen-Macaulay; acyclicity of the associated inverse system is not
// checked.
AnalysisPoset build_q_poset(const Graph& g, std::size_t max_elements = kDefaultPosetBudget);

} // namespace defreg
