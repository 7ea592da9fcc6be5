#include "jzero/hconst_table.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <thread>

namespace jzero {

bool operator==(const HConstantTable::Entry& a, const HConstantTable::Entry& b) {
  return a.z == b.z && a.lo == b.lo && a.offset == b.offset && a.count == b.count;
}

namespace {

struct RowBlock {
  std::vector<std::uint64_t> sizes;  // entries per y
  std::vector<std::int32_t> z, lo;
  std::vector<std::vector<std::int64_t>> coeffs;
};

// All rows C_x C_y, y < nb, for one x.
RowBlock compute_row(const HeckeAlgebra& H, int x, int nb) {
  const ElementTable& t = H.table();
  DenseVec cx = H.zero();
  for (const auto& [z, p] : H.c_in_t(x)) cx[static_cast<std::size_t>(z)] = p;
  // prods[y'] = C_x T_{y'} along first right descents.
  std::vector<DenseVec> prods(static_cast<std::size_t>(nb));
  prods[0] = cx;
  for (int y = 1; y < nb; ++y) {
    int s = t.first_right_descent(y);
    prods[static_cast<std::size_t>(y)] = prods[static_cast<std::size_t>(t.right(y, s))];
    H.right_mul_Ts(prods[static_cast<std::size_t>(y)], s);
  }
  RowBlock out;
  out.sizes.resize(static_cast<std::size_t>(nb));
  for (int y = 0; y < nb; ++y) {
    DenseVec acc = H.zero();
    for (const auto& [yp, c] : H.c_in_t(y)) {
      const DenseVec& p = prods[static_cast<std::size_t>(yp)];
      for (int z = 0; z < H.size(); ++z)
        if (!p[static_cast<std::size_t>(z)].is_zero()) acc[static_cast<std::size_t>(z)].add_mul(c, p[static_cast<std::size_t>(z)]);
    }
    DenseVec h = H.t_to_c(std::move(acc));
    std::uint64_t cnt = 0;
    for (int z = 0; z < H.size(); ++z) {
      const auto& p = h[static_cast<std::size_t>(z)];
      if (p.is_zero()) continue;
      out.z.push_back(z);
      out.lo.push_back(p.min_exponent());
      out.coeffs.push_back(p.raw());
      ++cnt;
    }
    out.sizes[static_cast<std::size_t>(y)] = cnt;
  }
  return out;
}

}  // namespace

HConstantTable HConstantTable::compute(const HeckeAlgebra& H, int ball, int jobs) {
  const ElementTable& t = H.table();
  if (2 * ball > t.max_length())
    throw TruncationError("h-table of ball " + std::to_string(ball) + " needs an element table of radius " +
                              std::to_string(2 * ball),
                          2 * ball);
  HConstantTable tab;
  tab.tag_ = t.group().tag();
  tab.ball_ = ball;
  tab.conv_ = H.convention();
  tab.nb_ = t.count_up_to(ball);
  int nb = tab.nb_;
  if (jobs <= 0) jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  jobs = std::min(jobs, std::max(1, nb));

  std::vector<RowBlock> blocks(static_cast<std::size_t>(nb));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(jobs));
  auto worker = [&](int j) {
    try {
      for (int x = j; x < nb; x += jobs) blocks[static_cast<std::size_t>(x)] = compute_row(H, x, nb);
    } catch (...) {
      errors[static_cast<std::size_t>(j)] = std::current_exception();
    }
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> threads;
    for (int j = 0; j < jobs; ++j) threads.emplace_back(worker, j);
    for (auto& th : threads) th.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  // Deterministic merge in x order.
  tab.pair_offset_.assign(static_cast<std::size_t>(nb) * nb + 1, 0);
  std::size_t pair = 0;
  for (int x = 0; x < nb; ++x) {
    RowBlock& b = blocks[static_cast<std::size_t>(x)];
    std::size_t k = 0;
    for (int y = 0; y < nb; ++y, ++pair) {
      for (std::uint64_t i = 0; i < b.sizes[static_cast<std::size_t>(y)]; ++i, ++k) {
        Entry e{b.z[k], b.lo[k], static_cast<std::uint32_t>(tab.coeffs_.size()),
                static_cast<std::uint32_t>(b.coeffs[k].size())};
        tab.coeffs_.insert(tab.coeffs_.end(), b.coeffs[k].begin(), b.coeffs[k].end());
        tab.entries_.push_back(e);
      }
      tab.pair_offset_[pair + 1] = tab.entries_.size();
    }
    b = RowBlock{};
  }
  return tab;
}

std::pair<const HConstantTable::Entry*, const HConstantTable::Entry*> HConstantTable::row(int x, int y) const {
  if (x < 0 || y < 0 || x >= nb_ || y >= nb_) throw std::out_of_range("h-table index outside the ball");
  std::size_t p = static_cast<std::size_t>(x) * nb_ + y;
  const Entry* base = entries_.data();
  return {base + pair_offset_[p], base + pair_offset_[p + 1]};
}

LaurentPoly HConstantTable::poly(const Entry& e) const {
  LaurentPoly p;
  for (std::uint32_t i = 0; i < e.count; ++i) {
    std::int64_t c = coeffs_[e.offset + i];
    if (c) p += LaurentPoly::monomial(c, e.lo + static_cast<int>(i));
  }
  return p;
}

LaurentPoly HConstantTable::h(int x, int y, int z) const {
  auto [b, e] = row(x, y);
  for (const Entry* it = b; it != e; ++it)
    if (it->z == z) return poly(*it);
  return LaurentPoly();
}

std::optional<int> HConstantTable::a_function(int w) const {
  std::optional<int> best;
  for (int x = 0; x < nb_; ++x)
    for (int y = 0; y < nb_; ++y) {
      auto [b, e] = row(x, y);
      for (const Entry* it = b; it != e; ++it)
        if (it->z == w) {
          int a = -it->lo;
          if (!best || a > *best) best = a;
        }
    }
  return best;
}

int a_function(const HConstantTable& table, const AffineElt& w, const ElementTable& elements) {
  int id = elements.require(w);
  auto a = table.a_function(id);
  return a ? *a : 0;
}

std::uint64_t HConstantTable::cache_key(const std::string& tag, int ball, Convention conv) {
  // FNV-1a over the textual key.
  std::string key = "jzero-hconst/v" + std::to_string(kVersion) + "/" + tag + "/" + std::to_string(ball) + "/" + to_string(conv);
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : key) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string HConstantTable::cache_file_name(const std::string& tag, int ball, Convention conv) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(cache_key(tag, ball, conv)));
  return std::string("hconst-") + buf + ".bin";
}

namespace {

constexpr char kMagic[8] = {'J', 'Z', 'H', 'C', 'O', 'N', 'S', 'T'};

template <class T>
void put(std::ostream& os, const T& v) {
  os.write(reinterpret_cast<const char*>(&v), sizeof v);
}

template <class T>
bool get(std::istream& is, T& v) {
  return static_cast<bool>(is.read(reinterpret_cast<char*>(&v), sizeof v));
}

template <class T>
void put_vec(std::ostream& os, const std::vector<T>& v) {
  put(os, static_cast<std::uint64_t>(v.size()));
  os.write(reinterpret_cast<const char*>(v.data()), static_cast<std::streamsize>(v.size() * sizeof(T)));
}

template <class T>
bool get_vec(std::istream& is, std::vector<T>& v, std::uint64_t limit) {
  std::uint64_t n = 0;
  if (!get(is, n) || n > limit) return false;
  v.resize(n);
  return static_cast<bool>(is.read(reinterpret_cast<char*>(v.data()), static_cast<std::streamsize>(n * sizeof(T))));
}

}  // namespace

void HConstantTable::save(const std::string& path) const {
  std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::string tmp = path + ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw std::runtime_error("cannot write cache file " + tmp);
    os.write(kMagic, sizeof kMagic);
    put(os, kVersion);
    put(os, cache_key(tag_, ball_, conv_));
    put(os, static_cast<std::int32_t>(ball_));
    put(os, static_cast<std::int32_t>(nb_));
    put_vec(os, pair_offset_);
    put_vec(os, entries_);
    put_vec(os, coeffs_);
    if (!os) throw std::runtime_error("failed writing cache file " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

std::optional<HConstantTable> HConstantTable::load(const std::string& path, const std::string& tag, int ball, Convention conv) {
  if (!std::filesystem::exists(path)) return std::nullopt;
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("unreadable cache file " + path);
  char magic[8];
  std::uint32_t ver = 0;
  std::uint64_t key = 0;
  std::int32_t b = 0, nb = 0;
  if (!is.read(magic, sizeof magic) || std::string(magic, 8) != std::string(kMagic, 8) || !get(is, ver) || !get(is, key) ||
      !get(is, b) || !get(is, nb))
    throw std::runtime_error("unreadable cache file " + path);
  if (ver != kVersion || key != cache_key(tag, ball, conv) || b != ball) return std::nullopt;
  HConstantTable t;
  t.tag_ = tag;
  t.ball_ = ball;
  t.nb_ = nb;
  t.conv_ = conv;
  const std::uint64_t limit = 1ull << 34;
  if (!get_vec(is, t.pair_offset_, limit) || !get_vec(is, t.entries_, limit) || !get_vec(is, t.coeffs_, limit))
    throw std::runtime_error("truncated cache file " + path);
  if (t.pair_offset_.size() != static_cast<std::size_t>(nb) * nb + 1 || t.pair_offset_.back() != t.entries_.size())
    throw std::runtime_error("corrupt cache file " + path);
  return t;
}

HConstantTable HConstantTable::load_or_compute(const HeckeAlgebra& H, int ball, int jobs, const std::string& cache_dir,
                                               bool* loaded) {
  if (loaded) *loaded = false;
  std::string tag = H.table().group().tag();
  if (!cache_dir.empty()) {
    std::string path = (std::filesystem::path(cache_dir) / cache_file_name(tag, ball, H.convention())).string();
    if (auto t = load(path, tag, ball, H.convention())) {
      if (t->nb_ != H.table().count_up_to(ball)) throw std::runtime_error("cache file " + path + " does not match the element table");
      if (loaded) *loaded = true;
      return std::move(*t);
    }
    HConstantTable t = compute(H, ball, jobs);
    t.save(path);
    return t;
  }
  return compute(H, ball, jobs);
}

std::string default_cache_dir() {
  const char* env = std::getenv("JZERO_CACHE_DIR");
  return env ? std::string(env) : std::string();
}

}  // namespace jzero
