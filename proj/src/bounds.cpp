#include "defreg/bounds.hpp"

#include "defreg/errors.hpp"

#include <algorithm>
#include <stdexcept>
#include <variant>

namespace defreg {

MultiplicityTable multiplicities(const AnalysisPoset& poset, const FieldSpec& field, std::size_t face_budget) {
  std::vector<HomologyProfile> profiles;
  profiles.reserve(poset.size());
  for (std::size_t q = 0; q < poset.size(); ++q) {
    const SubPoset above = open_interval_above(poset, q);
    HomologyProfile h = reduced_homology(order_complex(above, face_budget), field);
    // Record every degree up to the top of the order complex, zeros included.
    h.betti.resize(longest_chain(above) + 1, 0);
    const bool maximal = poset.is_maximal(q);
    if ((h.at(-1) != 0) != maximal)
      throw std::logic_error("H~_{-1} of an interval must be nonzero exactly at maximal elements");
    profiles.push_back(std::move(h));
  }
  return MultiplicityTable(field, std::move(profiles));
}

SJSet s_sets(const AnalysisPoset& poset, const MultiplicityTable& mult, std::size_t j) {
  SJSet s;
  s.j = j;
  for (std::size_t p = 0; p < poset.size(); ++p) {
    const std::size_t dim = poset.element(p).dim;
    if (dim <= j && mult.at(p, contributing_degree(j, dim)) != 0)
      s.members.push_back(p);
  }
  return s;
}

ExtendedInt regularity_bound(const AnalysisPoset& poset, const MultiplicityTable& mult, std::size_t j) {
  // Each member contributes reg K^{dim}(A/I_p) = dim(A/I_p).
  std::vector<UltrametricValue> layers{zero_value(1)};
  for (auto p : s_sets(poset, mult, j).members)
    layers.push_back(UltrametricValue::scalar(ExtendedInt{static_cast<std::int64_t>(poset.element(p).dim)}));
  return filtration_fold(layers).scalar_value();
}

std::vector<FiltrationLayer> filtration_report(const AnalysisPoset& poset, const MultiplicityTable& mult,
                                               std::size_t j) {
  std::vector<FiltrationLayer> layers;
  for (std::size_t k = 0; k <= j; ++k) {
    FiltrationLayer layer;
    layer.j = j;
    layer.k = k;
    for (std::size_t p = 0; p < poset.size(); ++p) {
      const std::size_t dim = poset.element(p).dim;
      if (dim != j - k)
        continue;
      const std::size_t e = mult.at(p, contributing_degree(j, dim));
      if (e > 0)
        layer.summands.emplace_back(p, e);
    }
    layers.push_back(std::move(layer));
  }
  return layers;
}

ConditionReport check_conditions(const AnalysisPoset& poset) {
  ConditionReport r;
  const bool all_faces = std::all_of(poset.elements().begin(), poset.elements().end(), [](const IdealNode& e) {
    return std::holds_alternative<FacePrime>(e.repr);
  });
  r.cond_i = all_faces ? LatticeStatus::VerifiedStructural : LatticeStatus::Assumed;
  r.cond_ii = std::all_of(poset.elements().begin(), poset.elements().end(),
                          [](const IdealNode& e) { return e.is_cm; });
  const auto heights = heights_strictly_decrease(poset);
  if (!heights)
    r.cond_iii = CheckStatus::NotCheckable;
  else
    r.cond_iii = *heights ? CheckStatus::Holds : CheckStatus::Fails;
  return r;
}

std::vector<std::size_t> nonvanishing_witnesses(const AnalysisPoset& poset, std::size_t j) {
  std::vector<std::size_t> out;
  for (auto p : poset.maximal_elements())
    if (poset.element(p).dim == j)
      out.push_back(p);
  return out;
}

MtLevel murai_terai_level(const BoundReport& report, std::size_t d) {
  MtLevel mt;
  std::optional<std::int64_t> slack;
  for (std::size_t j = 0; j < d; ++j) {
    auto it = std::find_if(report.entries.begin(), report.entries.end(),
                           [j](const BoundEntry& e) { return e.j == j; });
    if (it == report.entries.end())
      throw InputError("MT level needs a bound for every j below " + std::to_string(d));
    if (it->bound.is_neg_inf())
      continue;
    const std::int64_t gap = static_cast<std::int64_t>(j) - it->bound.value();
    slack = slack ? std::min(*slack, gap) : gap;
  }
  if (!slack) {
    mt.level = d;
    mt.vacuous = true;
  } else {
    if (*slack < 0)
      throw std::logic_error("a bound exceeds its cap; MT level would be negative");
    mt.level = static_cast<std::size_t>(*slack);
  }
  return mt;
}

BoundReport analyze(const AnalysisPoset& poset, const AnalysisOptions& options) {
  BoundReport report;
  report.ring = poset.ring();
  report.field = options.field;
  report.mult = multiplicities(poset, options.field, options.face_budget);
  report.conditions = check_conditions(poset);

  const std::size_t top = poset.max_dim();
  if (options.only_j && *options.only_j > top)
    throw InputError("requested j = " + std::to_string(*options.only_j) + " exceeds dim(A/I) = " +
                     std::to_string(top));
  for (std::size_t j = 0; j <= top; ++j) {
    if (options.only_j && j != *options.only_j)
      continue;
    BoundEntry e;
    e.j = j;
    e.s = s_sets(poset, report.mult, j);
    e.bound = regularity_bound(poset, report.mult, j);
    e.cap = j;
    if (e.bound > ExtendedInt{static_cast<std::int64_t>(j)})
      throw std::logic_error("regularity bound exceeds j");
    e.layers = filtration_report(poset, report.mult, j);
    e.witnesses = nonvanishing_witnesses(poset, j);
    report.entries.push_back(std::move(e));
  }

  if (!options.only_j || top == 0) {
    report.mt = murai_terai_level(report, top);
    if (report.mt->vacuous)
      report.assumptions.push_back("MT level is vacuous: no finite bound below dim(A/I); reported as dim(A/I)");
  }

  const bool has_clique = std::any_of(poset.elements().begin(), poset.elements().end(), [](const IdealNode& e) {
    return std::holds_alternative<CliquePrime>(e.repr);
  });
  const bool has_abstract = std::any_of(poset.elements().begin(), poset.elements().end(), [](const IdealNode& e) {
    return std::holds_alternative<AbstractLabel>(e.repr);
  });
  if (has_clique)
    report.assumptions.push_back("acyclicity of the inverse system (A/I_q) over Q: assumed, not verified");
  if (has_abstract)
    report.assumptions.push_back("distributive lattice condition (i): assumed for user-supplied poset");
  if (report.conditions.cond_iii == CheckStatus::NotCheckable)
    report.assumptions.push_back("strict height condition (iii): not checkable, heights missing");
  if (!report.certified())
    report.assumptions.push_back("bounds are not certified: condition (ii) or (iii) failed or was not checked");
  return report;
}

} // namespace defreg
