#include "jzero/element_table.hpp"

#include <stdexcept>

namespace jzero {

ElementTable::ElementTable(std::shared_ptr<const AffineWeyl> group, int max_length, std::size_t max_elements)
    : group_(std::move(group)), max_length_(max_length), ngens_(group_->num_generators()) {
  elts_ = group_->enumerate_ball(max_length, max_elements);
  int n = size();
  for (int i = 0; i < n; ++i) index_.emplace(elts_[static_cast<std::size_t>(i)].key(), i);
  len_.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) len_[static_cast<std::size_t>(i)] = group_->length(elts_[static_cast<std::size_t>(i)]);
  int maxl = n ? len_.back() : 0;
  count_le_.assign(static_cast<std::size_t>(maxl + 1), 0);
  for (int l : len_) ++count_le_[static_cast<std::size_t>(l)];
  for (int l = 1; l <= maxl; ++l) count_le_[static_cast<std::size_t>(l)] += count_le_[static_cast<std::size_t>(l - 1)];

  right_.assign(static_cast<std::size_t>(n) * ngens_, -1);
  left_.assign(static_cast<std::size_t>(n) * ngens_, -1);
  inv_.assign(static_cast<std::size_t>(n), -1);
  first_desc_.assign(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    const AffineElt& a = elts_[static_cast<std::size_t>(i)];
    for (int s = 0; s < ngens_; ++s) {
      right_[static_cast<std::size_t>(i) * ngens_ + s] = find(group_->multiply(a, group_->generator(s)));
      left_[static_cast<std::size_t>(i) * ngens_ + s] = find(group_->multiply(group_->generator(s), a));
    }
    inv_[static_cast<std::size_t>(i)] = require(group_->inverse(a));
  }
  words_.resize(static_cast<std::size_t>(n));
  for (int i = 1; i < n; ++i) {
    for (int s = 0; s < ngens_; ++s) {
      int j = right(i, s);
      if (j >= 0 && len_[static_cast<std::size_t>(j)] < len_[static_cast<std::size_t>(i)]) {
        first_desc_[static_cast<std::size_t>(i)] = s;
        words_[static_cast<std::size_t>(i)] = words_[static_cast<std::size_t>(j)];
        words_[static_cast<std::size_t>(i)].push_back(s);
        break;
      }
    }
  }

  // Bruhat rows by property Z on the first right descent.
  std::size_t nwords = (static_cast<std::size_t>(n) + 63) / 64;
  bruhat_.assign(static_cast<std::size_t>(n), std::vector<std::uint64_t>(nwords, 0));
  if (n) bruhat_[0][0] = 1;
  for (int w = 1; w < n; ++w) {
    int s = first_desc_[static_cast<std::size_t>(w)];
    int v = right(w, s);
    auto& row = bruhat_[static_cast<std::size_t>(w)];
    int lim = count_up_to(len_[static_cast<std::size_t>(w)]);
    for (int y = 0; y < lim; ++y) {
      int ys = right(y, s);
      int m = (ys >= 0 && len_[static_cast<std::size_t>(ys)] < len_[static_cast<std::size_t>(y)]) ? ys : y;
      if (leq(m, v)) row[static_cast<std::size_t>(y) >> 6] |= std::uint64_t{1} << (y & 63);
    }
  }
}

int ElementTable::count_up_to(int L) const {
  if (L < 0) return 0;
  if (L >= static_cast<int>(count_le_.size())) return size();
  return count_le_[static_cast<std::size_t>(L)];
}

int ElementTable::find(const AffineElt& a) const {
  auto it = index_.find(a.key());
  return it == index_.end() ? -1 : it->second;
}

int ElementTable::require(const AffineElt& a) const {
  int id = find(a);
  if (id < 0) {
    int l = group_->length(a);
    throw TruncationError("element " + a.to_string() + " of length " + std::to_string(l) + " lies outside the table of radius " +
                              std::to_string(max_length_),
                          l);
  }
  return id;
}

}  // namespace jzero
