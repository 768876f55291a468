#pragma once

#include "defreg/complexes.hpp"
#include "defreg/exact_field.hpp"
#include "defreg/posets.hpp"
#include "defreg/ultrametric.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace defreg {

// mult(q, d) = dim H~_d of the order complex of (q, 1^), for every element
// q and degrees -1 .. (longest chain above q) - 1.
class MultiplicityTable {
public:
  MultiplicityTable(FieldSpec field, std::vector<HomologyProfile> profiles)
      : field_(field), profiles_(std::move(profiles)) {}

  const FieldSpec& field() const { return field_; }
  std::size_t size() const { return profiles_.size(); }
  // Zero outside the recorded range.
  std::size_t at(std::size_t element, int degree) const { return profiles_.at(element).at(degree); }
  // Highest recorded degree for the element.
  int max_degree(std::size_t element) const {
    return static_cast<int>(profiles_.at(element).betti.size()) - 2;
  }

private:
  FieldSpec field_;
  std::vector<HomologyProfile> profiles_;
};

MultiplicityTable multiplicities(const AnalysisPoset& poset, const FieldSpec& field,
                                 std::size_t face_budget = kDefaultFaceBudget);

// Homology degree feeding the contribution of an element of dimension
// `dim` to K^j: j - dim - 1.
constexpr int contributing_degree(std::size_t j, std::size_t dim) {
  return static_cast<int>(j) - static_cast<int>(dim) - 1;
}

struct SJSet {
  std::size_t j = 0;
  std::vector<std::size_t> members;  // element indices, ascending
};

// { p : dim(A/I_p) <= j and mult(p, j - dim - 1) != 0 }.
SJSet s_sets(const AnalysisPoset& poset, const MultiplicityTable& mult, std::size_t j);

// max over S_j of dim(A/I_p), folded as a rank-one ultrametric value;
// -inf when S_j is empty.
ExtendedInt regularity_bound(const AnalysisPoset& poset, const MultiplicityTable& mult, std::size_t j);

struct FiltrationLayer {
  std::size_t j = 0;
  std::size_t k = 0;
  // (element index, exponent); only positive exponents.
  std::vector<std::pair<std::size_t, std::size_t>> summands;
};

// Layers k = 0..j of the filtration on K^j: layer k collects the elements
// of dimension j - k with their multiplicity as exponent.
std::vector<FiltrationLayer> filtration_report(const AnalysisPoset& poset, const MultiplicityTable& mult,
                                               std::size_t j);

enum class LatticeStatus { VerifiedStructural, Assumed };
enum class CheckStatus { Holds, Fails, NotCheckable };

struct ConditionReport {
  LatticeStatus cond_i = LatticeStatus::Assumed;    // distributive lattice
  bool cond_ii = true;                              // every quotient Cohen-Macaulay
  CheckStatus cond_iii = CheckStatus::NotCheckable; // p < q => height(q) < height(p)

  // Bounds are certified only when (ii) holds and (iii) was checked and holds.
  bool certified() const { return cond_ii && cond_iii == CheckStatus::Holds; }
};

ConditionReport check_conditions(const AnalysisPoset& poset);

// Maximal elements (minimal ideals) of dimension j.
std::vector<std::size_t> nonvanishing_witnesses(const AnalysisPoset& poset, std::size_t j);

struct BoundEntry {
  std::size_t j = 0;
  SJSet s;
  ExtendedInt bound;
  std::size_t cap = 0;  // the uniform bound reg K^j <= j
  std::vector<FiltrationLayer> layers;
  std::vector<std::size_t> witnesses;
};

struct MtLevel {
  std::size_t level = 0;
  // True when no bound below d is finite; the level is then reported as d.
  bool vacuous = false;
};

struct BoundReport {
  std::optional<RingContext> ring;
  FieldSpec field = FieldSpec::rationals();
  MultiplicityTable mult{FieldSpec::rationals(), {}};
  std::vector<BoundEntry> entries;  // ascending j
  ConditionReport conditions;
  // Absent when only a single j was analyzed.
  std::optional<MtLevel> mt;
  std::vector<std::string> assumptions;

  bool certified() const { return conditions.certified(); }
};

// Largest r with bound_j <= j - r for every j < d (-inf satisfies all).
// Entries for every j < d must be present.
MtLevel murai_terai_level(const BoundReport& report, std::size_t d);

struct AnalysisOptions {
  FieldSpec field = FieldSpec::rationals();
  std::size_t face_budget = kDefaultFaceBudget;
  // Restrict the per-j entries to one index; the level is then computed
  // only when every j below dim is covered.
  std::optional<std::size_t> only_j;
};

// Full pipeline over a built poset: multiplicities, S_j, bounds, layers,
// witnesses and condition checks for j = 0..max dim.
BoundReport analyze(const AnalysisPoset& poset, const AnalysisOptions& options = {});

} // namespace defreg
