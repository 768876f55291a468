#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace defreg {

// Sorted, duplicate-free list of variable indices (0-based) or graph
// vertices (1-based), depending on context.
using IndexSet = std::vector<std::uint32_t>;

// Prime generated by a set of variables: the components of a squarefree
// monomial ideal.
struct FacePrime {
  IndexSet vars;

  std::size_t height() const { return vars.size(); }
  bool operator==(const FacePrime&) const = default;
};

// The binomial-edge prime P_S(G): the variables x_i, y_i for i in `killed`
// plus all 2x2 minors of the generic 2 x |block| matrix for every block.
// Blocks partition [n] \ killed; isolated vertices are singleton blocks.
struct CliquePrime {
  std::uint32_t n = 0;
  IndexSet killed;
  std::vector<IndexSet> blocks;  // each sorted; list sorted

  std::size_t height() const;
  // (n - |S|) + #blocks, which equals 2n - height().
  std::size_t dim() const;
  bool operator==(const CliquePrime&) const = default;
};

// A sum of clique primes before primality is decided: killed vertices plus
// a family of (possibly overlapping) cliques on the surviving vertices.
// Canonical form drops cliques contained in other cliques.
struct CliqueUnionIdeal {
  std::uint32_t n = 0;
  IndexSet killed;
  std::vector<IndexSet> cliques;

  bool operator==(const CliqueUnionIdeal&) const = default;
};

// Opaque node supplied by the user (toric face rings and other externally
// decomposed ideals).
struct AbstractLabel {
  std::string label;
  bool operator==(const AbstractLabel&) const = default;
};

using NodeRepr = std::variant<FacePrime, CliquePrime, CliqueUnionIdeal, AbstractLabel>;

// Equality of ideals reduces to equality of these keys.
std::string canonical_key(const NodeRepr& repr);

// Sorted, deduplicated copy.
IndexSet make_index_set(std::vector<std::uint32_t> values);

} // namespace defreg
