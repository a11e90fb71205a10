#include "hecke/cache.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <sstream>

#include "hecke/errors.hpp"

namespace hecke {

namespace {

constexpr std::string_view kMagic = "HECKECAC";

class Writer {
 public:
  template <typename T>
  void put(T value) {
    static_assert(std::endian::native == std::endian::little);
    out_.append(reinterpret_cast<const char*>(&value), sizeof value);
  }
  void put_string(std::string_view s) {
    put<std::uint32_t>(static_cast<std::uint32_t>(s.size()));
    out_.append(s);
  }
  void raw(std::string_view s) { out_.append(s); }
  const std::string& bytes() const { return out_; }

 private:
  std::string out_;
};

class Reader {
 public:
  explicit Reader(std::string_view in) : in_(in) {}
  template <typename T>
  T get() {
    need(sizeof(T));
    T value;
    std::memcpy(&value, in_.data() + pos_, sizeof value);
    pos_ += sizeof value;
    return value;
  }
  std::string get_string() {
    auto n = get<std::uint32_t>();
    need(n);
    std::string s(in_.substr(pos_, n));
    pos_ += n;
    return s;
  }
  std::string_view raw(std::size_t n) {
    need(n);
    auto s = in_.substr(pos_, n);
    pos_ += n;
    return s;
  }
  bool done() const { return pos_ == in_.size(); }

 private:
  void need(std::size_t n) const {
    if (in_.size() - pos_ < n) throw ConfigError("truncated cache");
  }
  std::string_view in_;
  std::size_t pos_ = 0;
};

}  // namespace

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::filesystem::path cache_path(const std::filesystem::path& dir, const GroupConfig& config, int radius) {
  std::ostringstream name;
  name << "kl-" << std::hex << config.hash() << std::dec << "-r" << radius << ".bin";
  return dir / name.str();
}

void save_cache(const std::filesystem::path& path, const KLTable& table, int radius) {
  const GroupBall& ball = table.ball();
  const auto n = static_cast<ElemId>(ball.count_upto(std::min(radius, ball.radius())));
  Writer w;
  w.raw(kMagic);
  w.put<std::uint32_t>(kCacheVersion);
  w.put<std::uint64_t>(ball.config().hash());
  w.put<std::int32_t>(radius);
  std::vector<ElemId> present;
  for (ElemId id = 0; id < n; ++id)
    if (table.has_column(id)) present.push_back(id);
  w.put<std::uint64_t>(present.size());
  for (ElemId id : present) {
    const HeckeElement& column = table.column(id);
    w.put_string(ball.word(id));
    w.put<std::uint32_t>(static_cast<std::uint32_t>(column.support_size()));
    for (const auto& [x, p] : column.entries()) {
      w.put_string(ball.word(x));
      w.put<std::uint32_t>(static_cast<std::uint32_t>(p.term_count()));
      for (const auto& term : p.terms()) {
        w.put<std::int32_t>(term.exp);
        w.put_string(term.coeff.str());
      }
    }
  }
  const std::uint64_t checksum = fnv1a(w.bytes());
  w.put<std::uint64_t>(checksum);

  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  const auto tmp = std::filesystem::path(path.string() + ".tmp");
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ConfigError("cannot write cache " + tmp.string());
    out.write(w.bytes().data(), static_cast<std::streamsize>(w.bytes().size()));
    if (!out) throw ConfigError("cannot write cache " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

CacheLoadResult load_cache(const std::filesystem::path& path, const KLTable& table) {
  CacheLoadResult result;
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    result.reason = "no cache at " + path.string();
    return result;
  }
  const std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (bytes.size() < kMagic.size() + 8 || bytes.compare(0, kMagic.size(), kMagic) != 0) {
    result.reason = "not a cache file";
    return result;
  }
  const std::string_view body(bytes.data(), bytes.size() - 8);
  std::uint64_t stored;
  std::memcpy(&stored, bytes.data() + body.size(), 8);
  if (fnv1a(body) != stored) {
    result.reason = "checksum mismatch";
    return result;
  }

  const GroupBall& ball = table.ball();
  std::vector<std::pair<ElemId, HeckeElement>> columns;
  try {
    Reader r(body);
    r.raw(kMagic.size());
    if (auto v = r.get<std::uint32_t>(); v != kCacheVersion) {
      result.reason = "cache version " + std::to_string(v);
      return result;
    }
    if (r.get<std::uint64_t>() != ball.config().hash()) {
      result.reason = "cache belongs to another config";
      return result;
    }
    r.get<std::int32_t>();
    const auto count = r.get<std::uint64_t>();
    for (std::uint64_t k = 0; k < count; ++k) {
      auto w = ball.find(r.get_string());
      const auto entries = r.get<std::uint32_t>();
      std::vector<HeckeElement::Entry> list;
      bool inside = w.has_value();
      for (std::uint32_t e = 0; e < entries; ++e) {
        auto x = ball.find(r.get_string());
        inside = inside && x.has_value();
        const auto terms = r.get<std::uint32_t>();
        std::vector<LaurentPoly::Term> poly;
        for (std::uint32_t t = 0; t < terms; ++t) {
          int exp = r.get<std::int32_t>();
          poly.push_back({exp, Integer(r.get_string())});
        }
        if (inside) list.emplace_back(*x, LaurentPoly::from_terms(std::move(poly)));
      }
      if (inside) columns.emplace_back(*w, HeckeElement::from_entries(std::move(list)));
    }
    if (!r.done()) throw ConfigError("trailing bytes");
  } catch (const std::exception& e) {
    result.reason = std::string("malformed cache: ") + e.what();
    return result;
  }
  for (auto& [w, column] : columns) table.install_column(w, std::move(column));
  result.loaded = true;
  result.columns = columns.size();
  return result;
}

}  // namespace hecke
