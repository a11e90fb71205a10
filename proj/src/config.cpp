#include "hecke/config.hpp"

#include <fstream>
#include <sstream>

#include "hecke/errors.hpp"

namespace hecke {

std::string genset_string(GenSet set) {
  std::string out;
  for (int g = 0; g < kRank; ++g)
    if (contains(set, g)) out.push_back(gen_char(g));
  return out;
}

GenSet parse_genset(std::string_view letters) {
  GenSet set = 0;
  for (char c : letters) {
    int g = gen_index(c);
    if (g < 0) throw ConfigError("bad generator letter '" + std::string(1, c) + "'");
    set |= gen_bit(g);
  }
  return set;
}

EdgeOrder parse_edge_order(std::string_view text) {
  if (text == "inf" || text == "INF" || text == "\xE2\x88\x9E") return std::nullopt;
  int value = 0;
  if (text.empty()) throw ConfigError("empty Coxeter matrix entry");
  for (char c : text) {
    if (c < '0' || c > '9') throw ConfigError("bad Coxeter matrix entry '" + std::string(text) + "'");
    value = value * 10 + (c - '0');
    if (value > 1'000'000) throw ConfigError("Coxeter matrix entry too large");
  }
  return value;
}

std::string edge_order_string(EdgeOrder m) { return m ? std::to_string(*m) : "inf"; }

GroupConfig::GroupConfig(EdgeOrder m_sr, EdgeOrder m_st, EdgeOrder m_rt,
                         std::array<int, kRank> weights)
    : m_sr_(m_sr), m_st_(m_st), m_rt_(m_rt), weights_(weights) {
  for (EdgeOrder m : {m_sr_, m_st_, m_rt_})
    if (m && *m < 2) throw ConfigError("Coxeter matrix entries must be >= 2 or inf");
  for (int g = 0; g < kRank; ++g)
    if (weights_[g] < 1) throw ConfigError("weights must be strictly positive");
  for (int a = 0; a < kRank; ++a)
    for (int b = a + 1; b < kRank; ++b) {
      EdgeOrder m = order(a, b);
      if (m && *m % 2 == 1 && weights_[a] != weights_[b])
        throw ConfigError(std::string("generators ") + gen_char(a) + "," + gen_char(b) +
                          " are joined by an odd edge but have different weights");
    }
}

EdgeOrder GroupConfig::order(int g, int h) const {
  if (g == h) return 1;
  int lo = std::min(g, h), hi = std::max(g, h);
  if (lo == 0 && hi == 1) return m_sr_;
  if (lo == 1 && hi == 2) return m_st_;
  return m_rt_;
}

int GroupConfig::word_weight(std::string_view word) const {
  int total = 0;
  for (char c : word) total += weights_[gen_index(c)];
  return total;
}

std::string GroupConfig::describe() const {
  std::ostringstream os;
  os << "m=(" << edge_order_string(m_sr_) << "," << edge_order_string(m_st_) << ","
     << edge_order_string(m_rt_) << ") L=(" << weights_[0] << "," << weights_[1] << ","
     << weights_[2] << ")";
  return os.str();
}

std::uint64_t GroupConfig::hash() const {
  std::string text = to_json().dump();
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

namespace {

nlohmann::json order_json(EdgeOrder m) {
  if (!m) return "inf";
  return *m;
}

EdgeOrder order_from_json(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) throw ConfigError(std::string("missing m.") + key);
  const auto& v = j.at(key);
  if (v.is_string()) return parse_edge_order(v.get<std::string>());
  if (v.is_number_integer()) {
    auto value = v.get<long long>();
    if (value < 2 || value > 1'000'000) throw ConfigError(std::string("m.") + key + " out of range");
    return static_cast<int>(value);
  }
  throw ConfigError(std::string("m.") + key + " must be an integer or \"inf\"");
}

}  // namespace

nlohmann::json GroupConfig::to_json() const {
  return {{"m", {{"sr", order_json(m_sr_)}, {"st", order_json(m_st_)}, {"rt", order_json(m_rt_)}}},
          {"weights", {{"r", weights_[0]}, {"s", weights_[1]}, {"t", weights_[2]}}}};
}

GroupConfig GroupConfig::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("m")) throw ConfigError("config must contain \"m\"");
  const auto& m = j.at("m");
  std::array<int, kRank> weights{1, 1, 1};
  if (j.contains("weights")) {
    const auto& w = j.at("weights");
    for (int g = 0; g < kRank; ++g) {
      std::string key(1, gen_char(g));
      if (!w.contains(key)) throw ConfigError("missing weights." + key);
      if (!w.at(key).is_number_integer()) throw ConfigError("weights." + key + " must be an integer");
      weights[g] = w.at(key).get<int>();
    }
  }
  return GroupConfig(order_from_json(m, "sr"), order_from_json(m, "st"), order_from_json(m, "rt"),
                     weights);
}

GroupConfig GroupConfig::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("config file " + path + ": " + e.what());
  }
  return from_json(j);
}

}  // namespace hecke
