#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace defreg {

// Arbitrary-precision rational; always kept in lowest terms.
using Rational = boost::multiprecision::cpp_rational;

// Coefficient field used for every homology computation.
class FieldSpec {
public:
  enum class Kind { Rationals, PrimeField };

  static FieldSpec rationals() { return FieldSpec{Kind::Rationals, 0}; }
  // Throws InvalidField unless p is prime.
  static FieldSpec prime_field(std::uint64_t p);

  Kind kind() const { return kind_; }
  // 0 for the rationals, p otherwise.
  std::uint64_t characteristic() const { return p_; }

  // "rational" or "gf:<p>"; the same spelling the CLI accepts.
  std::string to_string() const;

  bool operator==(const FieldSpec&) const = default;

private:
  FieldSpec(Kind kind, std::uint64_t p) : kind_(kind), p_(p) {}

  Kind kind_;
  std::uint64_t p_;
};

// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(std::uint64_t n);

// Matrix with exact rational entries. Logically rows x cols; only the
// nonzero entries are stored, row by row, sorted by column.
class ExactMatrix {
public:
  struct Entry {
    std::size_t col;
    Rational value;
  };

  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols);

  // Dense construction; every row must have the same length.
  static ExactMatrix from_dense(const std::vector<std::vector<Rational>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Rational& value);

  const std::vector<Entry>& row(std::size_t r) const { return data_.at(r); }

  // Returns the matrix with row i of the result equal to row row_perm[i]
  // of this one, and likewise for columns.
  ExactMatrix permuted(const std::vector<std::size_t>& row_perm,
                       const std::vector<std::size_t>& col_perm) const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::vector<Entry>> data_;
};

// Exact rank of m over f. Throws DenominatorDividesP when an entry cannot
// be reduced modulo the characteristic.
std::size_t rank(const ExactMatrix& m, const FieldSpec& f);

} // namespace defreg
