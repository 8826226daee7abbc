#pragma once

#include <compare>
#include <string>
#include <vector>

namespace perfcode {

// A bijection of {1, ..., n}, stored as a 0-based image table. The public
// interface speaks 1-based points to match cycle notation; the raw table is
// exposed for algorithms that want to stay 0-based.
//
// Composition is right-to-left: (p * q) applies q first, then p, so
// (p * q).apply(i) == p.apply(q.apply(i)). The total order (and therefore the
// canonical order used everywhere for determinism) is lexicographic on the
// image tables.
class Permutation {
 public:
  explicit Permutation(int degree);  // identity

  // Builds from a 1-based image list: images[i] is the image of point i+1.
  static Permutation from_images(const std::vector<int>& one_based_images);

  // Parses cycle notation such as "(1 2)(3 5)" against a fixed degree.
  // Points are 1-based; fixed points may be omitted; whitespace and commas
  // both separate points; the empty string denotes the identity. Cycles that
  // share points are composed right-to-left like any other product.
  static Permutation parse_cycles(int degree, const std::string& text);

  int degree() const { return static_cast<int>(images_.size()); }
  int apply(int point) const { return images_[point - 1] + 1; }  // 1-based
  const std::vector<int>& raw_images() const { return images_; }  // 0-based

  bool is_identity() const;
  Permutation operator*(const Permutation& rhs) const;  // apply rhs first
  Permutation inverse() const;

  // Canonical disjoint-cycle form: cycles ordered by smallest moved point,
  // each cycle starting at its smallest point; identity formats as "".
  std::string cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

int element_order(const Permutation& p);
bool is_involution(const Permutation& p);  // order exactly 2

// by * x * by⁻¹: relabels every point i of x to by(i), so cycles transform
// entrywise through `by`.
Permutation conjugate(const Permutation& x, const Permutation& by);

}  // namespace perfcode
