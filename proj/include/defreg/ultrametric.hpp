#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace defreg {

// Integer or -inf. -inf compares below every integer.
class ExtendedInt {
public:
  constexpr ExtendedInt() = default;  // -inf
  constexpr explicit ExtendedInt(std::int64_t v) : value_(v) {}

  static constexpr ExtendedInt neg_inf() { return ExtendedInt{}; }

  constexpr bool is_neg_inf() const { return !value_.has_value(); }
  // Throws std::bad_optional_access for -inf.
  constexpr std::int64_t value() const { return value_.value(); }

  constexpr auto operator<=>(const ExtendedInt& other) const {
    if (is_neg_inf() || other.is_neg_inf())
      return static_cast<int>(!is_neg_inf()) <=> static_cast<int>(!other.is_neg_inf());
    return *value_ <=> *other.value_;
  }
  constexpr bool operator==(const ExtendedInt&) const = default;

  // "-inf" or the decimal value.
  std::string to_string() const;

private:
  std::optional<std::int64_t> value_;
};

// A value of an ultrametric function. Rank 1 values live in Z u {-inf} and
// combine by max; higher ranks are finite subsets of a declared universe
// standing in for subsets of the grading group, and combine by intersection.
class UltrametricValue {
public:
  static UltrametricValue scalar(ExtendedInt v);
  // rank >= 2.
  static UltrametricValue subset(unsigned rank, std::set<std::string> members);

  unsigned rank() const { return rank_; }
  // Rank 1 only.
  ExtendedInt scalar_value() const { return std::get<ExtendedInt>(payload_); }
  // Rank >= 2 only.
  const std::set<std::string>& members() const { return std::get<std::set<std::string>>(payload_); }

  bool operator==(const UltrametricValue&) const = default;

private:
  UltrametricValue(unsigned rank, std::variant<ExtendedInt, std::set<std::string>> payload)
      : rank_(rank), payload_(std::move(payload)) {}

  unsigned rank_;
  std::variant<ExtendedInt, std::set<std::string>> payload_;
};

// The value of the zero module: -inf in rank 1, the whole universe above.
UltrametricValue zero_value(unsigned rank, const std::set<std::string>& universe = {});

// The bound on a filtered object from its layers: max in rank 1,
// intersection in higher rank. Throws MixedRanks and InputError for an
// empty list.
UltrametricValue filtration_fold(const std::vector<UltrametricValue>& layers);

} // namespace defreg
