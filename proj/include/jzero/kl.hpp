#pragma once

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "jzero/element_table.hpp"
#include "jzero/laurent.hpp"

namespace jzero {

// Kazhdan-Lusztig polynomials P_{y,w} for all pairs of the table. Polynomials
// are stored as LaurentPoly in the variable q (exponent = power of q).
class KLTable {
 public:
  explicit KLTable(std::shared_ptr<const ElementTable> table);

  const ElementTable& table() const { return *table_; }
  std::shared_ptr<const ElementTable> table_ptr() const { return table_; }

  // Zero unless y <= w.
  const LaurentPoly& P(int y, int w) const;
  std::int64_t mu(int y, int w) const;
  // (z, mu(z,w)) for z < w with mu nonzero, ascending z.
  const std::vector<std::pair<int, std::int64_t>>& mu_list(int w) const { return mu_[static_cast<std::size_t>(w)]; }

  // Public API on elements.
  LaurentPoly kl_polynomial(const AffineElt& y, const AffineElt& w) const;

 private:
  std::shared_ptr<const ElementTable> table_;
  std::vector<std::vector<LaurentPoly>> cols_;  // cols_[w][y], y < count_up_to(len(w))
  std::vector<std::vector<std::pair<int, std::int64_t>>> mu_;
  LaurentPoly zero_;
};

}  // namespace jzero
