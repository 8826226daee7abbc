#include "perfcode/gf.hpp"

#include <algorithm>

#include "perfcode/errors.hpp"

namespace perfcode {

namespace {

// Polynomials over GF(p) as coefficient vectors, constant term first, no
// trailing-zero trimming requirements (helpers trim where needed).

std::vector<int> poly_trim(std::vector<int> a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

std::vector<int> poly_mul(const std::vector<int>& a, const std::vector<int>& b, int p) {
  if (a.empty() || b.empty()) return {};
  std::vector<int> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  return poly_trim(std::move(out));
}

// Remainder of a modulo monic m.
std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& m, int p) {
  a = poly_trim(std::move(a));
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const int lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    if (lead != 0) {
      for (std::size_t i = 0; i < m.size(); ++i) {
        auto& c = a[shift + i];
        c = ((c - lead * m[i]) % p + p) % p;
      }
    }
    a = poly_trim(std::move(a));
    if (a.empty()) break;
  }
  return a;
}

bool poly_is_zero(const std::vector<int>& a) { return poly_trim(a).empty(); }

// Enumerates monic degree-d polynomials in canonical order (coefficient
// sequences compared constant term first) and reports whether `m` has any
// monic factor of degree d.
bool has_monic_factor_of_degree(const std::vector<int>& m, int d, int p) {
  std::vector<int> coeffs(d, 0);  // the non-leading coefficients
  for (;;) {
    std::vector<int> cand = coeffs;
    cand.push_back(1);
    if (poly_is_zero(poly_mod(m, cand, p))) return true;
    // odometer: last coefficient varies fastest under constant-first lex order
    int pos = d - 1;
    while (pos >= 0 && coeffs[pos] == p - 1) coeffs[pos--] = 0;
    if (pos < 0) return false;
    ++coeffs[pos];
  }
}

bool is_irreducible(const std::vector<int>& m, int p) {
  const int deg = static_cast<int>(m.size()) - 1;
  // Root scan covers all linear factors.
  for (int r = 0; r < p; ++r) {
    long long v = 0, pw = 1;
    for (int i = 0; i <= deg; ++i) {
      v = (v + m[i] * pw) % p;
      pw = (pw * r) % p;
    }
    if (v % p == 0) return false;
  }
  for (int d = 2; d * 2 <= deg; ++d)
    if (has_monic_factor_of_degree(m, d, p)) return false;
  return true;
}

}  // namespace

FiniteField FiniteField::build(std::uint64_t q, std::uint64_t q_bound) {
  if (q > q_bound)
    throw BoundError("field size " + std::to_string(q) + " exceeds bound " +
                     std::to_string(q_bound));
  if (q < 2) throw SemanticError("field size must be a prime power >= 2");
  std::uint64_t p = 0, rest = q;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (rest % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) p = q;  // q itself is prime
  int k = 0;
  while (rest > 1) {
    if (rest % p != 0) throw SemanticError(std::to_string(q) + " is not a prime power");
    rest /= p;
    ++k;
  }

  FiniteField f;
  f.p_ = static_cast<int>(p);
  f.k_ = k;
  f.q_ = static_cast<int>(q);

  if (k == 1) {
    f.modulus_ = {0, 1};  // x: arithmetic is plain mod p
  } else {
    // Canonically first monic irreducible of degree k: enumerate coefficient
    // tuples (c0, ..., c{k-1}) in constant-first lexicographic order.
    std::vector<int> coeffs(k, 0);
    for (;;) {
      std::vector<int> cand = coeffs;
      cand.push_back(1);
      if (is_irreducible(cand, f.p_)) {
        f.modulus_ = cand;
        break;
      }
      int pos = k - 1;
      while (pos >= 0 && coeffs[pos] == f.p_ - 1) coeffs[pos--] = 0;
      if (pos < 0) throw SemanticError("no irreducible modulus found");  // unreachable
      ++coeffs[pos];
    }
  }

  f.one_ = f.element_from_coeffs([&] {
    std::vector<int> c(k, 0);
    c[0] = 1;
    return c;
  }());

  const int qi = f.q_;
  f.add_table_.resize(qi * qi);
  f.mul_table_.resize(qi * qi);
  for (int a = 0; a < qi; ++a) {
    const auto ca = f.coeffs(a);
    for (int b = 0; b < qi; ++b) {
      const auto cb = f.coeffs(b);
      std::vector<int> sum(k);
      for (int i = 0; i < k; ++i) sum[i] = (ca[i] + cb[i]) % f.p_;
      f.add_table_[a * qi + b] = f.element_from_coeffs(sum);
      auto prod = poly_mod(poly_mul(ca, cb, f.p_), f.modulus_, f.p_);
      prod.resize(k, 0);
      f.mul_table_[a * qi + b] = f.element_from_coeffs(prod);
    }
  }
  f.inv_table_.assign(qi, -1);
  for (int a = 1; a < qi; ++a)
    for (int b = 1; b < qi; ++b)
      if (f.mul_table_[a * qi + b] == f.one_) {
        f.inv_table_[a] = b;
        break;
      }
  return f;
}

int FiniteField::add(int a, int b) const { return add_table_[a * q_ + b]; }

int FiniteField::neg(int a) const {
  auto c = coeffs(a);
  for (auto& x : c) x = (p_ - x) % p_;
  return element_from_coeffs(c);
}

int FiniteField::sub(int a, int b) const { return add(a, neg(b)); }

int FiniteField::inv(int a) const {
  if (a == 0) throw SemanticError("field inverse of zero");
  return inv_table_[a];
}

std::vector<int> FiniteField::coeffs(int a) const {
  std::vector<int> c(k_);
  for (int i = k_ - 1; i >= 0; --i) {
    c[i] = a % p_;
    a /= p_;
  }
  return c;  // c[0] ends up multiplying p^(k-1): constant term is most significant
}

int FiniteField::element_from_coeffs(const std::vector<int>& c) const {
  if (static_cast<int>(c.size()) != k_)
    throw SemanticError("coefficient list has the wrong length");
  int a = 0;
  for (int i = 0; i < k_; ++i) {
    const int ci = ((c[i] % p_) + p_) % p_;
    a = a * p_ + ci;
  }
  return a;
}

int FiniteField::monomial(int i) const {
  if (i < 0 || i >= k_) throw SemanticError("monomial degree out of range");
  std::vector<int> c(k_, 0);
  c[i] = 1;
  return element_from_coeffs(c);
}

namespace {
const FiniteField* require_same_field(const FieldElement& a, const FieldElement& b) {
  if (a.field == nullptr || a.field != b.field)
    throw SemanticError("field elements belong to different fields");
  return a.field;
}
}  // namespace

FieldElement field_add(const FieldElement& a, const FieldElement& b) {
  return {require_same_field(a, b), a.field->add(a.index, b.index)};
}
FieldElement field_sub(const FieldElement& a, const FieldElement& b) {
  return {require_same_field(a, b), a.field->sub(a.index, b.index)};
}
FieldElement field_mul(const FieldElement& a, const FieldElement& b) {
  return {require_same_field(a, b), a.field->mul(a.index, b.index)};
}
FieldElement field_inv(const FieldElement& a) {
  if (a.field == nullptr) throw SemanticError("field element without a field");
  return {a.field, a.field->inv(a.index)};
}

}  // namespace perfcode
