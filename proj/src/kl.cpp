#include "jzero/kl.hpp"

namespace jzero {

KLTable::KLTable(std::shared_ptr<const ElementTable> table) : table_(std::move(table)) {
  const ElementTable& t = *table_;
  int n = t.size();
  cols_.resize(static_cast<std::size_t>(n));
  mu_.resize(static_cast<std::size_t>(n));
  if (n == 0) return;
  cols_[0] = {LaurentPoly(1)};
  const LaurentPoly q = LaurentPoly::v(1);  // variable q in this table
  for (int w = 1; w < n; ++w) {
    int lw = t.length(w);
    int s = t.first_right_descent(w);
    int v = t.right(w, s);
    int lim = t.count_up_to(lw);
    auto& col = cols_[static_cast<std::size_t>(w)];
    col.assign(static_cast<std::size_t>(lim), LaurentPoly());
    const auto& mus = mu_[static_cast<std::size_t>(v)];
    for (int y = 0; y < lim; ++y) {
      if (!t.leq(y, w)) continue;
      int ys = t.right(y, s);
      bool down = ys >= 0 && t.length(ys) < t.length(y);
      LaurentPoly p;
      if (down) {
        p += P(ys, v);
        p.add_mul(q, P(y, v));
      } else {
        p.add_mul(q, P(ys, v));
        p += P(y, v);
      }
      for (auto [z, m] : mus) {
        int zs = t.right(z, s);
        if (!(zs >= 0 && t.length(zs) < t.length(z))) continue;
        const LaurentPoly& pz = P(y, z);
        if (pz.is_zero()) continue;
        p.add_scaled(pz, -m, (lw - t.length(z)) / 2);
      }
      col[static_cast<std::size_t>(y)] = std::move(p);
    }
    // mu(z, w) for z < w with odd length difference.
    for (int z = 0; z < lim; ++z) {
      int d = lw - t.length(z);
      if (d <= 0 || d % 2 == 0) continue;
      std::int64_t m = col[static_cast<std::size_t>(z)].coefficient_of((d - 1) / 2);
      if (m != 0) mu_[static_cast<std::size_t>(w)].emplace_back(z, m);
    }
  }
}

const LaurentPoly& KLTable::P(int y, int w) const {
  const auto& col = cols_[static_cast<std::size_t>(w)];
  if (y < 0 || y >= static_cast<int>(col.size())) return zero_;
  return col[static_cast<std::size_t>(y)];
}

std::int64_t KLTable::mu(int y, int w) const {
  for (auto [z, m] : mu_list(w))
    if (z == y) return m;
  return 0;
}

LaurentPoly KLTable::kl_polynomial(const AffineElt& y, const AffineElt& w) const {
  int wi = table_->require(w);
  int yi = table_->find(y);
  if (yi < 0) return LaurentPoly();
  return P(yi, wi);
}

}  // namespace jzero
