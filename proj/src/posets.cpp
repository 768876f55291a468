#include "defreg/posets.hpp"

#include "defreg/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace defreg {

RingContext::RingContext(std::vector<std::string> var_names) : names_(std::move(var_names)) {
  std::set<std::string> seen;
  for (const auto& name : names_) {
    if (name.empty())
      throw InputError("empty variable name");
    if (!seen.insert(name).second)
      throw InputError("duplicate variable name '" + name + "'");
  }
}

RingContext RingContext::binomial_edge(std::uint32_t n) {
  std::vector<std::string> names;
  names.reserve(2 * n);
  for (std::uint32_t i = 1; i <= n; ++i)
    names.push_back("x" + std::to_string(i));
  for (std::uint32_t i = 1; i <= n; ++i)
    names.push_back("y" + std::to_string(i));
  return RingContext(std::move(names));
}

namespace {

std::string brace(const IndexSet& s) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < s.size(); ++i)
    out << (i ? "," : "") << s[i];
  out << '}';
  return out.str();
}

struct DescribeVisitor {
  const RingContext* ring;

  std::string operator()(const FacePrime& p) const {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < p.vars.size(); ++i) {
      if (i)
        out << ',';
      if (ring && p.vars[i] < ring->nvars())
        out << ring->var_names()[p.vars[i]];
      else
        out << 'v' << p.vars[i];
    }
    out << ')';
    return out.str();
  }
  std::string operator()(const CliquePrime& p) const {
    std::string s = "P_" + brace(p.killed) + " blocks ";
    for (const auto& b : p.blocks)
      s += brace(b);
    return s;
  }
  std::string operator()(const CliqueUnionIdeal& p) const {
    std::string s = "S=" + brace(p.killed) + " cliques ";
    for (const auto& c : p.cliques)
      s += brace(c);
    return s;
  }
  std::string operator()(const AbstractLabel& p) const { return p.label; }
};

} // namespace

std::string describe(const IdealNode& node, const RingContext* ring) {
  return std::visit(DescribeVisitor{ring}, node.repr);
}

AnalysisPoset::AnalysisPoset(std::vector<IdealNode> elements, std::vector<std::uint8_t> leq,
                             std::optional<RingContext> ring)
    : elements_(std::move(elements)), leq_(std::move(leq)), ring_(std::move(ring)) {
  const std::size_t n = elements_.size();
  if (leq_.size() != n * n)
    throw InvalidPoset("order relation has the wrong size");
  std::set<std::string> ids;
  for (const auto& e : elements_) {
    if (!ids.insert(e.id).second)
      throw DuplicateId("duplicate element id '" + e.id + "'");
    if (ring_ && e.height && *e.height + e.dim != ring_->nvars())
      throw InvalidPoset("element '" + e.id + "': height + dim differs from the number of variables");
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (!this->leq(a, a))
      throw InvalidPoset("order relation is not reflexive at '" + elements_[a].id + "'");
    for (std::size_t b = a + 1; b < n; ++b)
      if (this->leq(a, b) && this->leq(b, a))
        throw InvalidPoset("order relation is not antisymmetric: '" + elements_[a].id + "' and '" +
                           elements_[b].id + "'");
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (this->leq(a, b))
        for (std::size_t c = 0; c < n; ++c)
          if (this->leq(b, c) && !this->leq(a, c))
            throw InvalidPoset("order relation is not transitive");
}

std::size_t AnalysisPoset::index_of(const std::string& id) const {
  for (std::size_t i = 0; i < elements_.size(); ++i)
    if (elements_[i].id == id)
      return i;
  throw UnknownElement("no poset element named '" + id + "'");
}

bool AnalysisPoset::is_maximal(std::size_t i) const {
  for (std::size_t j = 0; j < size(); ++j)
    if (less(i, j))
      return false;
  return true;
}

std::vector<std::size_t> AnalysisPoset::maximal_elements() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i)
    if (is_maximal(i))
      out.push_back(i);
  return out;
}

std::size_t AnalysisPoset::max_dim() const {
  std::size_t d = 0;
  for (const auto& e : elements_)
    d = std::max(d, e.dim);
  return d;
}

SubPoset induced_subposet(const AnalysisPoset& poset, const std::vector<std::size_t>& members) {
  SubPoset s;
  s.source = members;
  for (auto i : members)
    s.ids.push_back(poset.element(i).id);
  s.leq.resize(members.size() * members.size());
  for (std::size_t a = 0; a < members.size(); ++a)
    for (std::size_t b = 0; b < members.size(); ++b)
      s.leq[a * members.size() + b] = poset.leq(members[a], members[b]) ? 1 : 0;
  return s;
}

SubPoset open_interval_above(const AnalysisPoset& poset, std::size_t p) {
  if (p >= poset.size())
    throw UnknownElement("element index " + std::to_string(p) + " out of range");
  std::vector<std::size_t> members;
  for (std::size_t q = 0; q < poset.size(); ++q)
    if (poset.less(p, q))
      members.push_back(q);
  return induced_subposet(poset, members);
}

SubPoset open_interval_above(const AnalysisPoset& poset, const std::string& id) {
  return open_interval_above(poset, poset.index_of(id));
}

namespace {

// Indices of s in an order compatible with the partial order: a < b puts a
// first, since the down-set of b strictly contains that of a.
std::vector<std::size_t> linear_extension(const SubPoset& s) {
  std::vector<std::size_t> order(s.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::size_t> below(s.size(), 0);
  for (std::size_t b = 0; b < s.size(); ++b)
    for (std::size_t a = 0; a < s.size(); ++a)
      below[b] += s.leq_at(a, b) ? 1 : 0;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return below[x] < below[y]; });
  return order;
}

} // namespace

SimplicialComplex order_complex(const SubPoset& s, std::size_t face_budget) {
  if (s.size() == 0)
    return SimplicialComplex::empty_complex();
  const auto order = linear_extension(s);
  std::vector<std::vector<std::string>> faces;
  faces.emplace_back();  // the empty chain
  std::vector<std::size_t> chain;
  // Extends `chain` by every admissible later element, in order position.
  std::function<void(std::size_t)> extend = [&](std::size_t from) {
    for (std::size_t k = from; k < order.size(); ++k) {
      const std::size_t v = order[k];
      if (!chain.empty() && !s.leq_at(chain.back(), v))
        continue;
      chain.push_back(v);
      std::vector<std::string> face;
      face.reserve(chain.size());
      for (auto c : chain)
        face.push_back(s.ids[c]);
      faces.push_back(std::move(face));
      if (faces.size() > face_budget)
        throw FaceBudgetExceeded("order complex exceeds the face budget of " + std::to_string(face_budget));
      extend(k + 1);
      chain.pop_back();
    }
  };
  extend(0);
  return SimplicialComplex::from_faces(faces, face_budget);
}

std::size_t longest_chain(const SubPoset& s) {
  const auto order = linear_extension(s);
  std::vector<std::size_t> best(s.size(), 1);
  std::size_t longest = 0;
  for (std::size_t k = 0; k < order.size(); ++k) {
    const auto v = order[k];
    for (std::size_t m = 0; m < k; ++m) {
      const auto u = order[m];
      if (s.leq_at(u, v))
        best[v] = std::max(best[v], best[u] + 1);
    }
    longest = std::max(longest, best[v]);
  }
  return longest;
}

std::vector<std::pair<std::string, std::string>> hasse(const AnalysisPoset& poset) {
  std::vector<std::pair<std::string, std::string>> covers;
  const std::size_t n = poset.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!poset.less(a, b))
        continue;
      bool covered = true;
      for (std::size_t c = 0; c < n && covered; ++c)
        if (poset.less(a, c) && poset.less(c, b))
          covered = false;
      if (covered)
        covers.emplace_back(poset.element(a).id, poset.element(b).id);
    }
  }
  return covers;
}

std::optional<bool> heights_strictly_decrease(const AnalysisPoset& poset) {
  for (const auto& e : poset.elements())
    if (!e.height)
      return std::nullopt;
  for (std::size_t p = 0; p < poset.size(); ++p)
    for (std::size_t q = 0; q < poset.size(); ++q)
      if (poset.less(p, q) && !(*poset.element(q).height < *poset.element(p).height))
        return false;
  return true;
}

AnalysisPoset join_closure(std::vector<IdealNode> generators, const ClosureOps& ops,
                           std::optional<RingContext> ring, std::size_t max_elements) {
  if (generators.empty())
    throw InputError("join closure needs at least one generator");
  std::vector<IdealNode> nodes;
  std::map<std::string, std::size_t> seen;
  auto insert = [&](IdealNode node) {
    if (!node.is_prime)
      throw Error("decomposer returned a non-prime node");
    auto key = canonical_key(node.repr);
    if (seen.contains(key))
      return;
    if (nodes.size() >= max_elements)
      throw ClosureBudgetExceeded("poset closure exceeds the element budget of " + std::to_string(max_elements));
    seen.emplace(std::move(key), nodes.size());
    nodes.push_back(std::move(node));
  };
  for (auto& g : generators)
    insert(std::move(g));

  for (std::size_t j = 1; j < nodes.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      IdealNode s = ops.sum(nodes[i], nodes[j]);
      if (s.is_prime) {
        insert(std::move(s));
        continue;
      }
      if (!ops.decompose)
        throw MissingDecomposer("sum " + describe(s, ring ? &*ring : nullptr) + " is not prime and no decomposer is set");
      for (auto& q : ops.decompose(s))
        insert(std::move(q));
    }
  }

  for (std::size_t i = 0; i < nodes.size(); ++i)
    nodes[i].id = "p" + std::to_string(i + 1);
  const std::size_t n = nodes.size();
  std::vector<std::uint8_t> leq(n * n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      leq[a * n + b] = (a == b || ops.contains(nodes[a], nodes[b])) ? 1 : 0;
  return AnalysisPoset(std::move(nodes), std::move(leq), std::move(ring));
}

} // namespace defreg
