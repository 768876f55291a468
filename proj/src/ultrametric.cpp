#include "defreg/ultrametric.hpp"

#include "defreg/errors.hpp"

#include <algorithm>
#include <iterator>

namespace defreg {

std::string ExtendedInt::to_string() const { return is_neg_inf() ? "-inf" : std::to_string(*value_); }

UltrametricValue UltrametricValue::scalar(ExtendedInt v) { return UltrametricValue{1, v}; }

UltrametricValue UltrametricValue::subset(unsigned rank, std::set<std::string> members) {
  if (rank < 2)
    throw InputError("subset-valued ultrametric values need rank >= 2");
  return UltrametricValue{rank, std::move(members)};
}

UltrametricValue zero_value(unsigned rank, const std::set<std::string>& universe) {
  if (rank == 0)
    throw InputError("ultrametric rank must be at least 1");
  if (rank == 1)
    return UltrametricValue::scalar(ExtendedInt::neg_inf());
  return UltrametricValue::subset(rank, universe);
}

UltrametricValue filtration_fold(const std::vector<UltrametricValue>& layers) {
  if (layers.empty())
    throw InputError("filtration fold needs at least one layer");
  const unsigned rank = layers.front().rank();
  for (const auto& v : layers)
    if (v.rank() != rank)
      throw MixedRanks("filtration layers mix ranks " + std::to_string(rank) + " and " + std::to_string(v.rank()));
  if (rank == 1) {
    ExtendedInt best = ExtendedInt::neg_inf();
    for (const auto& v : layers)
      best = std::max(best, v.scalar_value());
    return UltrametricValue::scalar(best);
  }
  std::set<std::string> acc = layers.front().members();
  for (std::size_t k = 1; k < layers.size(); ++k) {
    std::set<std::string> next;
    const auto& m = layers[k].members();
    std::set_intersection(acc.begin(), acc.end(), m.begin(), m.end(), std::inserter(next, next.end()));
    acc = std::move(next);
  }
  return UltrametricValue::subset(rank, std::move(acc));
}

} // namespace defreg
