#include "defreg/binomial_edge.hpp"

#include "defreg/errors.hpp"

#include <algorithm>
#include <iterator>
#include <numeric>
#include <set>
#include <stdexcept>

namespace defreg {

namespace {

bool is_subset(const IndexSet& small, const IndexSet& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

IndexSet set_minus(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

IndexSet all_vertices(std::uint32_t n) {
  IndexSet v(n);
  std::iota(v.begin(), v.end(), 1U);
  return v;
}

class UnionFind {
public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

private:
  std::vector<std::size_t> parent_;
};

std::size_t count_components(std::uint32_t n, const std::vector<Graph::Edge>& edges, const std::vector<bool>& alive) {
  UnionFind uf(n + 1);
  for (const auto& [u, v] : edges)
    if (alive[u] && alive[v])
      uf.unite(u, v);
  std::size_t count = 0;
  for (std::uint32_t v = 1; v <= n; ++v)
    if (alive[v] && uf.find(v) == v)
      ++count;
  return count;
}

void check_n(const CliquePrime& a, const CliquePrime& b) {
  if (a.n != b.n)
    throw InputError("clique primes over different vertex counts");
}

} // namespace

Graph::Graph(std::uint32_t n, std::vector<Edge> edges) : n_(n) {
  if (n == 0)
    throw InputError("a graph needs at least one vertex");
  for (auto [u, v] : edges) {
    if (u == v)
      throw InputError("loop at vertex " + std::to_string(u));
    if (u > v)
      std::swap(u, v);
    if (u < 1 || v > n)
      throw InputError("edge " + std::to_string(u) + "-" + std::to_string(v) + " is outside 1.." + std::to_string(n));
    edges_.emplace_back(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

std::vector<IndexSet> components(std::uint32_t n, const std::vector<Graph::Edge>& edges, const IndexSet& alive) {
  std::vector<bool> mask(n + 1, false);
  for (auto v : alive)
    mask[v] = true;
  UnionFind uf(n + 1);
  for (const auto& [u, v] : edges)
    if (mask[u] && mask[v])
      uf.unite(u, v);
  std::vector<IndexSet> out;
  std::vector<std::size_t> slot(n + 1, SIZE_MAX);
  for (auto v : alive) {
    const auto root = uf.find(v);
    if (slot[root] == SIZE_MAX) {
      slot[root] = out.size();
      out.emplace_back();
    }
    out[slot[root]].push_back(v);
  }
  return out;
}

std::vector<IndexSet> cut_sets(std::uint32_t n, const std::vector<Graph::Edge>& edges, const IndexSet& vertices) {
  if (vertices.size() > kMaxGraphVertices)
    throw BudgetExceeded("cut-set enumeration is limited to " + std::to_string(kMaxGraphVertices) + " vertices");
  const std::size_t m = vertices.size();
  std::vector<IndexSet> result;
  std::vector<bool> alive(n + 1, false);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::fill(alive.begin(), alive.end(), false);
    IndexSet removed;
    for (std::size_t k = 0; k < m; ++k) {
      if (mask & (std::uint64_t{1} << k))
        removed.push_back(vertices[k]);
      else
        alive[vertices[k]] = true;
    }
    const std::size_t base = count_components(n, edges, alive);
    bool admissible = true;
    for (auto i : removed) {
      alive[i] = true;
      const std::size_t restored = count_components(n, edges, alive);
      alive[i] = false;
      if (restored >= base) {
        admissible = false;
        break;
      }
    }
    if (admissible)
      result.push_back(std::move(removed));
  }
  std::sort(result.begin(), result.end(), [](const IndexSet& a, const IndexSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return result;
}

std::vector<CliquePrime> minimal_primes_graph(const Graph& g) {
  const auto vertices = all_vertices(g.n());
  std::vector<CliquePrime> primes;
  for (auto& s : cut_sets(g.n(), g.edges(), vertices)) {
    CliquePrime p;
    p.n = g.n();
    p.blocks = components(g.n(), g.edges(), set_minus(vertices, s));
    std::sort(p.blocks.begin(), p.blocks.end());
    p.killed = std::move(s);
    primes.push_back(std::move(p));
  }
  return primes;
}

bool clique_contains(const CliquePrime& a, const CliquePrime& b) {
  check_n(a, b);
  if (!is_subset(b.killed, a.killed))
    return false;
  for (const auto& block : b.blocks) {
    const IndexSet rest = set_minus(block, a.killed);
    if (rest.empty())
      continue;
    const bool inside =
        std::any_of(a.blocks.begin(), a.blocks.end(), [&](const IndexSet& ab) { return is_subset(rest, ab); });
    if (!inside)
      return false;
  }
  return true;
}

CliqueUnionIdeal sum_ideals(const CliquePrime& a, const CliquePrime& b) {
  check_n(a, b);
  CliqueUnionIdeal out;
  out.n = a.n;
  std::set_union(a.killed.begin(), a.killed.end(), b.killed.begin(), b.killed.end(), std::back_inserter(out.killed));
  std::vector<IndexSet> cliques;
  for (const auto* p : {&a, &b})
    for (const auto& block : p->blocks) {
      IndexSet rest = set_minus(block, out.killed);
      if (!rest.empty())
        cliques.push_back(std::move(rest));
    }
  std::sort(cliques.begin(), cliques.end(), [](const IndexSet& x, const IndexSet& y) {
    return x.size() != y.size() ? x.size() > y.size() : x < y;
  });
  cliques.erase(std::unique(cliques.begin(), cliques.end()), cliques.end());
  for (auto& c : cliques) {
    const bool absorbed =
        std::any_of(out.cliques.begin(), out.cliques.end(), [&](const IndexSet& k) { return is_subset(c, k); });
    if (!absorbed)
      out.cliques.push_back(std::move(c));
  }
  std::sort(out.cliques.begin(), out.cliques.end());
  return out;
}

std::vector<Graph::Edge> clique_edges(const CliqueUnionIdeal& c) {
  std::set<Graph::Edge> edges;
  for (const auto& clique : c.cliques)
    for (std::size_t i = 0; i < clique.size(); ++i)
      for (std::size_t j = i + 1; j < clique.size(); ++j)
        edges.emplace(clique[i], clique[j]);
  return {edges.begin(), edges.end()};
}

bool is_prime(const CliqueUnionIdeal& c) {
  const auto edges = clique_edges(c);
  const std::set<Graph::Edge> edge_set(edges.begin(), edges.end());
  for (const auto& comp : components(c.n, edges, set_minus(all_vertices(c.n), c.killed)))
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (std::size_t j = i + 1; j < comp.size(); ++j)
        if (!edge_set.contains({comp[i], comp[j]}))
          return false;
  return true;
}

CliquePrime as_prime(const CliqueUnionIdeal& c) {
  if (!is_prime(c))
    throw InputError("clique-union ideal is not prime");
  CliquePrime p;
  p.n = c.n;
  p.killed = c.killed;
  p.blocks = components(c.n, clique_edges(c), set_minus(all_vertices(c.n), c.killed));
  std::sort(p.blocks.begin(), p.blocks.end());
  return p;
}

std::vector<CliquePrime> decompose(const CliqueUnionIdeal& c) {
  if (is_prime(c))
    throw AlreadyPrime("clique-union ideal is already prime");
  const auto edges = clique_edges(c);
  const IndexSet alive = set_minus(all_vertices(c.n), c.killed);
  std::vector<CliquePrime> primes;
  for (const auto& t : cut_sets(c.n, edges, alive)) {
    CliquePrime p;
    p.n = c.n;
    std::set_union(c.killed.begin(), c.killed.end(), t.begin(), t.end(), std::back_inserter(p.killed));
    p.blocks = components(c.n, edges, set_minus(alive, t));
    std::sort(p.blocks.begin(), p.blocks.end());
    primes.push_back(std::move(p));
  }
  // The cut-set criterion already yields an irredundant list; minimize
  // anyway so the contract does not depend on that fact.
  std::vector<CliquePrime> minimal;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < primes.size() && !redundant; ++j)
      if (i != j && primes[i] != primes[j] && clique_contains(primes[i], primes[j]))
        redundant = true;
    if (!redundant && std::find(minimal.begin(), minimal.end(), primes[i]) == minimal.end())
      minimal.push_back(primes[i]);
  }
  return minimal;
}

IdealNode make_clique_node(CliquePrime prime) {
  IdealNode node;
  node.height = prime.height();
  node.dim = prime.dim();
  node.is_prime = true;
  node.is_cm = true;
  node.repr = std::move(prime);
  return node;
}

AnalysisPoset build_q_poset(const Graph& g, std::size_t max_elements) {
  std::vector<IdealNode> generators;
  for (auto& p : minimal_primes_graph(g))
    generators.push_back(make_clique_node(std::move(p)));

  ClosureOps ops;
  ops.sum = [](const IdealNode& a, const IdealNode& b) {
    CliqueUnionIdeal s = sum_ideals(std::get<CliquePrime>(a.repr), std::get<CliquePrime>(b.repr));
    if (is_prime(s))
      return make_clique_node(as_prime(s));
    IdealNode node;
    node.is_prime = false;
    node.is_cm = false;
    node.repr = std::move(s);
    return node;
  };
  ops.decompose = [](const IdealNode& node) {
    std::vector<IdealNode> out;
    for (auto& p : decompose(std::get<CliqueUnionIdeal>(node.repr)))
      out.push_back(make_clique_node(std::move(p)));
    return out;
  };
  ops.contains = [](const IdealNode& a, const IdealNode& b) {
    return clique_contains(std::get<CliquePrime>(a.repr), std::get<CliquePrime>(b.repr));
  };
  AnalysisPoset poset = join_closure(std::move(generators), ops, RingContext::binomial_edge(g.n()), max_elements);
  if (heights_strictly_decrease(poset) != true)
    throw std::logic_error("binomial-edge poset violates strict height decrease");
  return poset;
}

} // namespace defreg
