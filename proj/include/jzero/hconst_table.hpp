#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jzero/hecke.hpp"

namespace jzero {

// All h_{x,y,z} for x, y of length <= ball, in flat storage.
class HConstantTable {
 public:
  struct Entry {
    std::int32_t z;
    std::int32_t lo;
    std::uint32_t offset;
    std::uint32_t count;
  };

  static constexpr std::uint32_t kVersion = 1;

  // Requires the algebra's table radius >= 2 * ball. jobs <= 0 means hardware concurrency.
  static HConstantTable compute(const HeckeAlgebra& H, int ball, int jobs = 1);
  // Loads from cache_dir when a matching file exists, otherwise computes and stores.
  static HConstantTable load_or_compute(const HeckeAlgebra& H, int ball, int jobs, const std::string& cache_dir,
                                        bool* loaded = nullptr);

  int ball() const { return ball_; }
  int ball_size() const { return nb_; }
  const std::string& type_tag() const { return tag_; }
  Convention convention() const { return conv_; }

  // Entries of C_x C_y, ascending z. x, y < ball_size().
  std::pair<const Entry*, const Entry*> row(int x, int y) const;
  LaurentPoly poly(const Entry& e) const;
  LaurentPoly h(int x, int y, int z) const;
  // max over x, y of -(min exponent of h_{x,y,w}); nullopt if no h_{x,y,w} is nonzero.
  std::optional<int> a_function(int w) const;

  static std::uint64_t cache_key(const std::string& tag, int ball, Convention conv);
  static std::string cache_file_name(const std::string& tag, int ball, Convention conv);
  void save(const std::string& path) const;
  // nullopt if missing or the header does not match.
  static std::optional<HConstantTable> load(const std::string& path, const std::string& tag, int ball, Convention conv);

  friend bool operator==(const HConstantTable&, const HConstantTable&) = default;

 private:
  std::string tag_;
  int ball_ = 0;
  int nb_ = 0;
  Convention conv_ = Convention::Signed;
  std::vector<std::uint64_t> pair_offset_;
  std::vector<Entry> entries_;
  std::vector<std::int64_t> coeffs_;
};

bool operator==(const HConstantTable::Entry& a, const HConstantTable::Entry& b);

// a(w) searched over the table of the given ball.
int a_function(const HConstantTable& table, const AffineElt& w, const ElementTable& elements);

std::string default_cache_dir();

}  // namespace jzero
