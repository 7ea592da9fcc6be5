#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace jzero {

// Integral weight in fundamental-weight coordinates.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::vector<int> coords) : c_(std::move(coords)) {}
  static Weight zero(int rank) { return Weight(std::vector<int>(static_cast<std::size_t>(rank), 0)); }

  int rank() const { return static_cast<int>(c_.size()); }
  int operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  int& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& coords() const { return c_; }

  bool is_dominant() const;
  bool is_zero() const;
  // Max absolute coordinate.
  int sup_norm() const;

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  Weight operator-() const;
  friend Weight operator*(int k, Weight a);

  friend auto operator<=>(const Weight&, const Weight&) = default;
  friend bool operator==(const Weight&, const Weight&) = default;

  // "[1,0,-2]"
  std::string to_string() const;
  // Accepts "[1,0]", "1,0", "(1, 0)".
  static Weight parse(const std::string& text);

 private:
  std::vector<int> c_;
};

// Square integer matrix, row-major.
using IntMatrix = std::vector<std::vector<int>>;

// Finite Weyl group element: a reduced word plus its action on weights.
// Equality and ordering use the matrix.
struct WeylElt {
  std::vector<int> word;
  IntMatrix matrix;

  friend bool operator==(const WeylElt& a, const WeylElt& b) { return a.matrix == b.matrix; }
  friend bool operator<(const WeylElt& a, const WeylElt& b) { return a.matrix < b.matrix; }
  int length() const { return static_cast<int>(word.size()); }
  Weight act(const Weight& w) const;
  // "s0s2s1", "e" for identity.
  std::string word_string() const;
};

class RootSystem {
 public:
  // "A1", "A2", "A3" (any An with n >= 1).
  static RootSystem from_tag(const std::string& tag);
  // Simply-laced Cartan matrices only.
  static RootSystem from_cartan(const IntMatrix& cartan, std::string name);

  const std::string& name() const { return name_; }
  int rank() const { return rank_; }
  const IntMatrix& cartan_matrix() const { return cartan_; }
  // Simple root i in weight coordinates (row i of the Cartan matrix).
  const Weight& simple_root(int i) const { return simple_roots_[static_cast<std::size_t>(i)]; }
  Weight fundamental_weight(int i) const;
  // Positive roots in weight coordinates, simple roots first.
  const std::vector<Weight>& positive_roots() const { return pos_roots_; }
  // Simple-root coordinates of positive root k (= coroot coordinates, simply laced).
  const std::vector<int>& positive_root_simple_coords(int k) const { return pos_roots_simple_[static_cast<std::size_t>(k)]; }
  const Weight& highest_root() const { return pos_roots_[static_cast<std::size_t>(highest_)]; }
  int highest_root_index() const { return highest_; }

  // <lambda, alpha_k^vee> for positive root k.
  int pairing(const Weight& lambda, int k) const;
  // +1 / -1 if the weight is a positive / negative root, 0 otherwise.
  int root_sign(const Weight& w) const;
  // Index of positive root (or of -w if w is negative), -1 if not a root.
  int root_index(const Weight& w) const;

  Weight rho() const;
  Weight reflect(int i, const Weight& lambda) const;
  Weight act(const WeylElt& w, const Weight& lambda) const;

  WeylElt identity() const;
  WeylElt simple_reflection(int i) const;
  WeylElt from_word(const std::vector<int>& word) const;
  WeylElt multiply(const WeylElt& a, const WeylElt& b) const;
  WeylElt inverse(const WeylElt& w) const;
  WeylElt longest_element() const;
  // Canonical reduced word: repeatedly strip the smallest right descent.
  std::vector<int> reduced_word(const IntMatrix& m) const;
  int length(const IntMatrix& m) const;
  bool is_right_descent(const WeylElt& w, int i) const;
  bool is_left_descent(const WeylElt& w, int i) const;

  // All of W, sorted by (length, word).
  const std::vector<WeylElt>& enumerate_weyl() const { return weyl_; }
  int weyl_index(const WeylElt& w) const;
  int weyl_size() const { return static_cast<int>(weyl_.size()); }

  // (mu, w) with mu dominant and w.lambda = mu.
  std::pair<Weight, WeylElt> dominant_representative(const Weight& lambda) const;
  // Permutation in one-line notation (type A only), 1-based values; s_i swaps positions i, i+1.
  std::vector<int> one_line(const WeylElt& w) const;

  // Sign pattern of w^{-1} on positive roots: entry k is true iff w^{-1}(alpha_k) < 0.
  const std::vector<bool>& inverse_negated_roots(int weyl_index) const {
    return inv_neg_[static_cast<std::size_t>(weyl_index)];
  }

 private:
  RootSystem() = default;
  void build();

  std::string name_;
  int rank_ = 0;
  IntMatrix cartan_;
  std::vector<Weight> simple_roots_;
  std::vector<Weight> pos_roots_;
  std::vector<std::vector<int>> pos_roots_simple_;
  std::map<Weight, int> root_lookup_;  // positive roots -> index
  int highest_ = 0;
  std::vector<WeylElt> weyl_;
  std::map<IntMatrix, int> weyl_lookup_;
  std::vector<std::vector<bool>> inv_neg_;
};

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);
IntMatrix mat_identity(int n);

}  // namespace jzero
