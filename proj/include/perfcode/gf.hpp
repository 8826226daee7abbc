#pragma once

#include <cstdint>
#include <vector>

namespace perfcode {

inline constexpr std::uint64_t kDefaultFieldBound = 64;

// The finite field GF(q), q = p^k, for small q. Elements are represented by
// their index in the canonical element order: lexicographic on coefficient
// sequences (c0, c1, ..., c{k-1}), constant term first, i.e.
// index = c0·p^(k-1) + c1·p^(k-2) + ... + c{k-1}. For prime fields this is
// plain 0, 1, ..., p-1. Arithmetic is polynomial arithmetic modulo the
// canonical modulus: the lexicographically smallest monic irreducible of
// degree k (constant term compared first); for k = 1 the modulus is x and
// arithmetic is mod p.
class FiniteField {
 public:
  // Throws SemanticError when q is not a prime power (or q < 2), BoundError
  // when q exceeds the bound.
  static FiniteField build(std::uint64_t q, std::uint64_t q_bound = kDefaultFieldBound);

  int p() const { return p_; }
  int k() const { return k_; }
  int q() const { return q_; }
  // k+1 coefficients, constant term first; monic, so modulus()[k] == 1.
  const std::vector<int>& modulus() const { return modulus_; }

  int zero() const { return 0; }
  int one() const { return one_; }

  int add(int a, int b) const;
  int sub(int a, int b) const;
  int neg(int a) const;
  int mul(int a, int b) const { return mul_table_[a * q_ + b]; }
  int inv(int a) const;  // SemanticError on zero

  std::vector<int> coeffs(int a) const;              // length k, constant term first
  int element_from_coeffs(const std::vector<int>& c) const;
  int monomial(int i) const;                         // the basis element x^i, 0 <= i < k

 private:
  FiniteField() = default;
  int p_ = 0, k_ = 0, q_ = 0, one_ = 0;
  std::vector<int> modulus_;
  std::vector<int> mul_table_;
  std::vector<int> inv_table_;
  std::vector<int> add_table_;
};

// Value wrapper pairing an element index with its field, for callers who want
// checked, self-describing field values.
struct FieldElement {
  const FiniteField* field = nullptr;
  int index = 0;

  std::vector<int> coeffs() const { return field->coeffs(index); }
  bool operator==(const FieldElement&) const = default;
};

FieldElement field_add(const FieldElement& a, const FieldElement& b);
FieldElement field_sub(const FieldElement& a, const FieldElement& b);
FieldElement field_mul(const FieldElement& a, const FieldElement& b);
FieldElement field_inv(const FieldElement& a);

}  // namespace perfcode
