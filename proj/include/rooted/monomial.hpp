#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rooted {

// A monomial x_1^{e_1} ... x_n^{e_n} stored as a dense exponent vector.
// The variable count n is part of the value; arithmetic between monomials
// over different universes throws ErrorKind::UniverseMismatch.
class Monomial {
 public:
  using Exponent = std::uint32_t;

  Monomial() = default;
  // The unit monomial over nvars variables.
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<Exponent> exps);

  // x_index^power, index is 1-based.
  static Monomial variable(std::size_t nvars, std::size_t index, Exponent power = 1);
  // Squarefree monomial of a vertex set (1-based labels).
  static Monomial from_support(std::size_t nvars, std::span<const int> vertices);

  std::size_t nvars() const noexcept { return exps_.size(); }
  unsigned degree() const noexcept { return degree_; }
  std::span<const Exponent> exponents() const noexcept { return exps_; }
  // Exponent of x_index, index is 1-based.
  Exponent exponent(std::size_t index) const { return exps_.at(index - 1); }

  bool is_unit() const noexcept { return degree_ == 0; }
  bool is_squarefree() const noexcept;
  // Ascending 1-based indices of variables with positive exponent.
  std::vector<int> support() const;

  Monomial& operator*=(const Monomial& other);
  friend Monomial operator*(Monomial lhs, const Monomial& rhs) { return lhs *= rhs; }
  Monomial pow(unsigned k) const;

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.exps_ == b.exps_;
  }
  // Plain lexicographic order on exponent vectors; used for containers only.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept {
    return a.exps_ <=> b.exps_;
  }

 private:
  std::vector<Exponent> exps_;
  unsigned degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

bool divides(const Monomial& u, const Monomial& v);
bool strictly_divides(const Monomial& u, const Monomial& v);
Monomial gcd(const Monomial& u, const Monomial& v);
// u : v = u / gcd(u, v).
Monomial colon(const Monomial& u, const Monomial& v);
// u / v; requires v | u.
Monomial quotient(const Monomial& u, const Monomial& v);

// Display order for sets: degree ascending, then exponent vector
// lexicographically descending.
bool canonical_less(const Monomial& a, const Monomial& b);

// "1" or factors like x1*x3^2 in ascending variable index.
std::string to_string(const Monomial& m);
Monomial parse_monomial(std::string_view text, std::size_t nvars);

// A set of monomials kept sorted by canonical_less without duplicates.
class MonomialSet {
 public:
  using const_iterator = std::vector<Monomial>::const_iterator;

  MonomialSet() = default;
  explicit MonomialSet(std::vector<Monomial> elems);

  std::size_t size() const noexcept { return elems_.size(); }
  bool empty() const noexcept { return elems_.empty(); }
  const_iterator begin() const noexcept { return elems_.begin(); }
  const_iterator end() const noexcept { return elems_.end(); }
  const Monomial& operator[](std::size_t i) const { return elems_[i]; }
  std::span<const Monomial> elements() const noexcept { return elems_; }

  bool contains(const Monomial& m) const;
  unsigned max_degree() const noexcept;

  friend bool operator==(const MonomialSet&, const MonomialSet&) = default;

 private:
  std::vector<Monomial> elems_;
};

// Elements not strictly divisible by another element of the input.
MonomialSet minimalize(std::span<const Monomial> elems);
MonomialSet minimalize(const MonomialSet& s);

// True iff the ideal generated by s is generated by variables (the empty set
// counts, it generates the zero ideal).
bool is_variable_generated(std::span<const Monomial> elems);
bool is_variable_generated(const MonomialSet& s);

std::vector<std::string> to_strings(std::span<const Monomial> elems);

}  // namespace rooted
