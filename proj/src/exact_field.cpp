#include "defreg/exact_field.hpp"

#include "defreg/errors.hpp"

#include <algorithm>
#include <climits>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <utility>

namespace defreg {

namespace {

__extension__ using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1U)
      result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

// Arithmetic in Z/p for the elimination kernel.
struct ModPOps {
  using value_type = std::uint64_t;
  std::uint64_t p;

  bool is_zero(value_type a) const { return a == 0; }
  value_type mul(value_type a, value_type b) const { return mul_mod(a, b, p); }
  value_type sub(value_type a, value_type b) const { return a >= b ? a - b : p - (b - a); }
  value_type inv(value_type a) const { return pow_mod(a, p - 2, p); }
};

struct RationalOps {
  using value_type = Rational;

  bool is_zero(const value_type& a) const { return a == 0; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type inv(const value_type& a) const { return 1 / a; }
};

// Machine-word fractions for the common case of small entries. Any overflow
// aborts the fast path and the caller redoes the work with big rationals.
struct Overflow {};

struct SmallFraction {
  std::int64_t num = 0;
  std::int64_t den = 1;  // > 0, coprime to num
  SmallFraction() = default;
  SmallFraction(std::int64_t n) : num(n) {}  // NOLINT: mirrors Rational{0}
  SmallFraction(std::int64_t n, std::int64_t d) : num(n), den(d) {}
};

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out))
    throw Overflow{};
  return out;
}

SmallFraction normalized(std::int64_t n, std::int64_t d) {
  if (d < 0) {
    if (n == INT64_MIN || d == INT64_MIN)
      throw Overflow{};
    n = -n;
    d = -d;
  }
  const std::int64_t g = std::gcd(n, d);
  return g > 1 ? SmallFraction{n / g, d / g} : SmallFraction{n, d};
}

struct SmallFractionOps {
  using value_type = SmallFraction;

  bool is_zero(const value_type& a) const { return a.num == 0; }
  value_type mul(const value_type& a, const value_type& b) const {
    const std::int64_t g1 = std::gcd(a.num, b.den);
    const std::int64_t g2 = std::gcd(b.num, a.den);
    return normalized(checked_mul(a.num / g1, b.num / g2), checked_mul(a.den / g2, b.den / g1));
  }
  value_type sub(const value_type& a, const value_type& b) const {
    if (a.den == 1 && b.den == 1) {
      std::int64_t out;
      if (__builtin_sub_overflow(a.num, b.num, &out))
        throw Overflow{};
      return value_type{out};
    }
    std::int64_t lhs;
    if (__builtin_sub_overflow(checked_mul(a.num, b.den), checked_mul(b.num, a.den), &lhs))
      throw Overflow{};
    return normalized(lhs, checked_mul(a.den, b.den));
  }
  value_type inv(const value_type& a) const { return normalized(a.den, a.num); }
};

std::optional<std::int64_t> small_int(const boost::multiprecision::cpp_int& v) {
  if (v > INT64_MAX || v < INT64_MIN)
    return std::nullopt;
  return v.convert_to<std::int64_t>();
}

template <class T>
using SparseRow = std::vector<std::pair<std::size_t, T>>;

// row - factor * pivot, dropping cancelled entries.
template <class Ops>
SparseRow<typename Ops::value_type> subtract_multiple(const SparseRow<typename Ops::value_type>& row,
                                                      const typename Ops::value_type& factor,
                                                      const SparseRow<typename Ops::value_type>& pivot,
                                                      const Ops& ops) {
  SparseRow<typename Ops::value_type> out;
  out.reserve(row.size() + pivot.size());
  auto a = row.begin();
  auto b = pivot.begin();
  while (a != row.end() || b != pivot.end()) {
    if (b == pivot.end() || (a != row.end() && a->first < b->first)) {
      out.push_back(*a++);
    } else if (a == row.end() || b->first < a->first) {
      auto v = ops.sub(typename Ops::value_type{0}, ops.mul(factor, b->second));
      out.emplace_back(b->first, std::move(v));
      ++b;
    } else {
      auto v = ops.sub(a->second, ops.mul(factor, b->second));
      if (!ops.is_zero(v))
        out.emplace_back(a->first, std::move(v));
      ++a;
      ++b;
    }
  }
  return out;
}

// Echelon insertion: every stored pivot row has a distinct leading column
// normalized to one, so each incoming row either reduces to zero or
// contributes exactly one new pivot.
template <class Ops>
std::size_t sparse_rank(std::vector<SparseRow<typename Ops::value_type>> rows, const Ops& ops) {
  std::map<std::size_t, SparseRow<typename Ops::value_type>> pivots;
  for (auto& row : rows) {
    while (!row.empty()) {
      const std::size_t lead = row.front().first;
      auto it = pivots.find(lead);
      if (it == pivots.end()) {
        const auto scale = ops.inv(row.front().second);
        for (auto& [col, v] : row)
          v = ops.mul(v, scale);
        pivots.emplace(lead, std::move(row));
        break;
      }
      const auto factor = row.front().second;
      row = subtract_multiple(row, factor, it->second, ops);
    }
  }
  return pivots.size();
}

std::uint64_t reduce_mod(const Rational& q, std::uint64_t p) {
  using boost::multiprecision::cpp_int;
  if (boost::multiprecision::denominator(q) == 1) {
    if (auto n = small_int(boost::multiprecision::numerator(q))) {
      if (*n >= 0)
        return static_cast<std::uint64_t>(*n) % p;
      const std::uint64_t mag = static_cast<std::uint64_t>(-(*n + 1)) + 1;
      return (p - mag % p) % p;
    }
  }
  const cpp_int modulus = p;
  cpp_int num = boost::multiprecision::numerator(q) % modulus;
  if (num < 0)
    num += modulus;
  const cpp_int den = boost::multiprecision::denominator(q) % modulus;
  if (den == 0)
    throw DenominatorDividesP("entry " + q.str() + " has a denominator divisible by " + std::to_string(p));
  const auto n = num.convert_to<std::uint64_t>();
  const auto d = den.convert_to<std::uint64_t>();
  return mul_mod(n, pow_mod(d, p - 2, p), p);
}

} // namespace

FieldSpec FieldSpec::prime_field(std::uint64_t p) {
  if (!is_prime(p))
    throw InvalidField("field characteristic " + std::to_string(p) + " is not prime");
  return FieldSpec{Kind::PrimeField, p};
}

std::string FieldSpec::to_string() const {
  if (kind_ == Kind::Rationals)
    return "rational";
  return "gf:" + std::to_string(p_);
}

bool is_prime(std::uint64_t n) {
  if (n < 2)
    return false;
  for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0)
      return n == small;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1)
      continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite)
      return false;
  }
  return true;
}

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

ExactMatrix ExactMatrix::from_dense(const std::vector<std::vector<Rational>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  ExactMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      throw InputError("ragged dense matrix");
    for (std::size_t c = 0; c < cols; ++c)
      m.set(r, c, rows[r][c]);
  }
  return m;
}

Rational ExactMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_)
    throw std::out_of_range("matrix index out of range");
  const auto& row = data_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c, [](const Entry& e, std::size_t col) { return e.col < col; });
  if (it != row.end() && it->col == c)
    return it->value;
  return Rational{0};
}

void ExactMatrix::set(std::size_t r, std::size_t c, const Rational& value) {
  if (r >= rows_ || c >= cols_)
    throw std::out_of_range("matrix index out of range");
  auto& row = data_[r];
  if ((row.empty() || row.back().col < c) && value != 0) {
    row.push_back(Entry{c, value});
    return;
  }
  auto it = std::lower_bound(row.begin(), row.end(), c, [](const Entry& e, std::size_t col) { return e.col < col; });
  const bool present = it != row.end() && it->col == c;
  if (value == 0) {
    if (present)
      row.erase(it);
  } else if (present) {
    it->value = value;
  } else {
    row.insert(it, Entry{c, value});
  }
}

ExactMatrix ExactMatrix::permuted(const std::vector<std::size_t>& row_perm,
                                  const std::vector<std::size_t>& col_perm) const {
  if (row_perm.size() != rows_ || col_perm.size() != cols_)
    throw std::invalid_argument("permutation size mismatch");
  std::vector<std::size_t> col_target(cols_);
  for (std::size_t i = 0; i < cols_; ++i)
    col_target[col_perm[i]] = i;
  ExactMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (const auto& e : data_.at(row_perm[i]))
      out.data_[i].push_back(Entry{col_target[e.col], e.value});
    std::sort(out.data_[i].begin(), out.data_[i].end(),
              [](const Entry& a, const Entry& b) { return a.col < b.col; });
  }
  return out;
}

std::size_t rank(const ExactMatrix& m, const FieldSpec& f) {
  if (f.kind() == FieldSpec::Kind::Rationals) {
    try {
      std::vector<SparseRow<SmallFraction>> small(m.rows());
      for (std::size_t r = 0; r < m.rows(); ++r)
        for (const auto& e : m.row(r)) {
          auto n = small_int(boost::multiprecision::numerator(e.value));
          auto d = small_int(boost::multiprecision::denominator(e.value));
          if (!n || !d)
            throw Overflow{};
          small[r].emplace_back(e.col, SmallFraction{*n, *d});
        }
      return sparse_rank(std::move(small), SmallFractionOps{});
    } catch (const Overflow&) {
    }
    std::vector<SparseRow<Rational>> rows(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (const auto& e : m.row(r))
        rows[r].emplace_back(e.col, e.value);
    return sparse_rank(std::move(rows), RationalOps{});
  }
  const std::uint64_t p = f.characteristic();
  std::vector<SparseRow<std::uint64_t>> rows(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (const auto& e : m.row(r)) {
      const auto v = reduce_mod(e.value, p);
      if (v != 0)
        rows[r].emplace_back(e.col, v);
    }
  }
  return sparse_rank(std::move(rows), ModPOps{p});
}

} // namespace defreg
