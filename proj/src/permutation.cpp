#include "perfcode/permutation.hpp"

#include <cctype>
#include <numeric>

#include "perfcode/errors.hpp"

namespace perfcode {

Permutation::Permutation(int degree) {
  if (degree < 1) throw SemanticError("permutation degree must be positive");
  images_.resize(degree);
  for (int i = 0; i < degree; ++i) images_[i] = i;
}

Permutation Permutation::from_images(const std::vector<int>& one_based_images) {
  const int n = static_cast<int>(one_based_images.size());
  if (n == 0) throw SemanticError("image list must not be empty");
  Permutation p(n);
  std::vector<bool> seen(n, false);
  for (int i = 0; i < n; ++i) {
    const int img = one_based_images[i];
    if (img < 1 || img > n) throw SemanticError("image out of range in image list");
    if (seen[img - 1]) throw SemanticError("duplicate image in image list");
    seen[img - 1] = true;
    p.images_[i] = img - 1;
  }
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (degree() != rhs.degree()) throw SemanticError("degree mismatch in composition");
  Permutation out(degree());
  for (int i = 0; i < degree(); ++i) out.images_[i] = images_[rhs.images_[i]];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out(degree());
  for (int i = 0; i < degree(); ++i) out.images_[images_[i]] = i;
  return out;
}

Permutation Permutation::parse_cycles(int degree, const std::string& text) {
  if (degree < 1) throw SemanticError("permutation degree must be positive");
  std::vector<std::vector<int>> cycles;  // 0-based points
  std::size_t i = 0;
  const auto skip_blank = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',')) ++i;
  };
  skip_blank();
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '(' in cycle notation: " + text);
    ++i;
    std::vector<int> cycle;
    std::vector<bool> in_cycle(degree, false);
    for (;;) {
      skip_blank();
      if (i >= text.size()) throw ParseError("unterminated cycle in: " + text);
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError(std::string("unexpected character '") + text[i] + "' in cycle notation");
      long point = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        point = point * 10 + (text[i] - '0');
        if (point > degree) throw SemanticError("point exceeds degree in cycle notation: " + text);
        ++i;
      }
      if (point < 1) throw SemanticError("points are 1-based in cycle notation");
      if (in_cycle[point - 1]) throw SemanticError("repeated point inside a cycle: " + text);
      in_cycle[point - 1] = true;
      cycle.push_back(static_cast<int>(point) - 1);
    }
    if (cycle.empty()) throw ParseError("empty cycle in: " + text);
    cycles.push_back(std::move(cycle));
    skip_blank();
  }
  // The written product C1 C2 ... Ck applies Ck first; left-to-right
  // accumulation with operator* realizes exactly that.
  Permutation acc(degree);
  for (const auto& cycle : cycles) {
    Permutation c(degree);
    for (std::size_t j = 0; j + 1 < cycle.size(); ++j) c.images_[cycle[j]] = cycle[j + 1];
    c.images_[cycle.back()] = cycle.front();
    acc = acc * c;
  }
  return acc;
}

std::string Permutation::cycle_string() const {
  std::string out;
  std::vector<bool> done(degree(), false);
  for (int i = 0; i < degree(); ++i) {
    if (done[i] || images_[i] == i) continue;
    out += '(';
    int j = i;
    bool first = true;
    do {
      if (!first) out += ' ';
      first = false;
      out += std::to_string(j + 1);
      done[j] = true;
      j = images_[j];
    } while (j != i);
    out += ')';
  }
  return out;
}

int element_order(const Permutation& p) {
  long long order = 1;
  std::vector<bool> done(p.degree(), false);
  const auto& img = p.raw_images();
  for (int i = 0; i < p.degree(); ++i) {
    if (done[i]) continue;
    int len = 0;
    int j = i;
    do {
      done[j] = true;
      j = img[j];
      ++len;
    } while (j != i);
    order = std::lcm(order, static_cast<long long>(len));
  }
  return static_cast<int>(order);
}

bool is_involution(const Permutation& p) { return element_order(p) == 2; }

Permutation conjugate(const Permutation& x, const Permutation& by) {
  return by * x * by.inverse();
}

}  // namespace perfcode
