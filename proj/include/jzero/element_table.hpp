#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "jzero/affine_weyl.hpp"

namespace jzero {

// Integer-indexed view of the Coxeter ball of radius max_length. Ids follow
// enumerate_ball order, so ids are sorted by length and y < w in Bruhat order
// implies id(y) < id(w).
class ElementTable {
 public:
  ElementTable(std::shared_ptr<const AffineWeyl> group, int max_length, std::size_t max_elements = 5'000'000);

  const AffineWeyl& group() const { return *group_; }
  std::shared_ptr<const AffineWeyl> group_ptr() const { return group_; }
  int max_length() const { return max_length_; }
  int size() const { return static_cast<int>(elts_.size()); }
  int num_generators() const { return ngens_; }

  const AffineElt& element(int id) const { return elts_[static_cast<std::size_t>(id)]; }
  int length(int id) const { return len_[static_cast<std::size_t>(id)]; }
  // Product with generator s, -1 when it leaves the ball.
  int right(int id, int s) const { return right_[static_cast<std::size_t>(id) * ngens_ + s]; }
  int left(int id, int s) const { return left_[static_cast<std::size_t>(id) * ngens_ + s]; }
  int inverse(int id) const { return inv_[static_cast<std::size_t>(id)]; }
  int first_right_descent(int id) const { return first_desc_[static_cast<std::size_t>(id)]; }
  const std::vector<int>& reduced_word(int id) const { return words_[static_cast<std::size_t>(id)]; }
  // Ids [0, count_up_to(L)) are exactly the elements of length <= L.
  int count_up_to(int L) const;
  // -1 when absent.
  int find(const AffineElt& a) const;
  int require(const AffineElt& a) const;
  bool leq(int y, int w) const {
    return (bruhat_[static_cast<std::size_t>(w)][static_cast<std::size_t>(y) >> 6] >> (y & 63)) & 1u;
  }

 private:
  std::shared_ptr<const AffineWeyl> group_;
  int max_length_;
  int ngens_;
  std::vector<AffineElt> elts_;
  std::vector<int> len_, right_, left_, inv_, first_desc_, count_le_;
  std::vector<std::vector<int>> words_;
  std::map<std::vector<int>, int> index_;
  std::vector<std::vector<std::uint64_t>> bruhat_;
};

}  // namespace jzero
