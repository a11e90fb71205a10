#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <memory>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "hecke/cache.hpp"
#include "hecke/errors.hpp"
#include "hecke/verify.hpp"

namespace hecke::cli {

namespace {

struct Options {
  std::string config_path;
  std::string m_sr, m_st, m_rt;
  std::string weights = "1,1,1";
  std::optional<int> radius;
  std::string format = "json";
  std::string cache_dir;
  std::uint64_t seed = kDefaultSeed;
  int jobs = 1;
  std::size_t cap = kDefaultBallCap;

  std::vector<std::string> words;  // positional element arguments
  std::string suite;
  std::string reading = "amalgam";
  int witness_radius = 0;
  std::size_t samples = 200;
  bool no_timing = false;
};

GroupConfig resolve_config(const Options& o) {
  if (!o.config_path.empty()) {
    if (!o.m_sr.empty() || !o.m_st.empty() || !o.m_rt.empty())
      throw ConfigError("give either --config or the --m-* flags, not both");
    return GroupConfig::from_file(o.config_path);
  }
  if (o.m_sr.empty() || o.m_st.empty() || o.m_rt.empty())
    throw ConfigError("the group needs --config or all of --m-sr, --m-st, --m-rt");
  std::array<int, kRank> w{};
  std::stringstream in(o.weights);
  std::string part;
  int k = 0;
  while (std::getline(in, part, ',')) {
    if (k == kRank) throw ConfigError("--weights takes three integers r,s,t");
    try {
      std::size_t used = 0;
      w[k++] = std::stoi(part, &used);
      if (used != part.size()) throw ConfigError("");
    } catch (const std::exception&) {
      throw ConfigError("bad weight '" + part + "'");
    }
  }
  if (k != kRank) throw ConfigError("--weights takes three integers r,s,t");
  return GroupConfig(parse_edge_order(o.m_sr), parse_edge_order(o.m_st), parse_edge_order(o.m_rt), w);
}

struct Input {
  Word word;  // canonical reduced word
  int length;
};

Input read_element(const std::string& text, const GroupConfig& config) {
  Word w = normalize_word(parse_word(text), config);
  return {w, static_cast<int>(w.size())};
}

int max_parabolic_length(const GroupConfig& config) {
  int out = 0;
  for (const auto& p : classify(config).finite_parabolics) out = std::max<int>(out, static_cast<int>(p.longest.size()));
  return out;
}

class Command {
 public:
  Command(const Options& o, std::ostream& out, std::ostream& err)
      : o_(o), config_(resolve_config(o)), out_(out), err_(err) {
    for (const auto& w : o.words) inputs_.push_back(read_element(w, config_));
  }

  bool json() const { return o_.format == "json"; }
  void emit(const nlohmann::json& j) { out_ << j.dump(2) << "\n"; }

  int input_length_sum(std::size_t count) const {
    int total = 0;
    for (std::size_t k = 0; k < count && k < inputs_.size(); ++k) total += inputs_[k].length;
    return total;
  }
  int input_length_max() const {
    int best = 0;
    for (const auto& i : inputs_) best = std::max(best, i.length);
    return best;
  }

  Workspace& workspace(int ball_radius) {
    ws_ = std::make_unique<Workspace>(config_, ball_radius, o_.cap);
    if (!o_.cache_dir.empty()) {
      CacheLoadResult r = load_cache(cache_path(o_.cache_dir, config_, ball_radius), ws_->table());
      if (!r.loaded && r.reason.rfind("no cache", 0) != 0) warn("cache ignored, recomputing: " + r.reason);
    }
    return *ws_;
  }
  void store_cache() {
    if (o_.cache_dir.empty() || !ws_) return;
    save_cache(cache_path(o_.cache_dir, config_, ws_->radius()), ws_->table(), ws_->radius());
  }
  ElemId id(std::size_t k) const { return ws_->ball().at(inputs_[k].word); }
  std::string word(ElemId w) const { return display_word(ws_->ball().word(w)); }

  void warn(const std::string& message) {
    if (json()) err_ << nlohmann::json{{"warning", message}}.dump() << "\n";
    else err_ << "warning: " << message << "\n";
  }

  int ball();
  int classify_cmd();
  int mult();
  int f();
  int kl();
  int h();
  int afn();
  int lambda();
  int cells();
  int factorize();
  int j0();
  int indecomposable();
  int verify();

 private:
  std::string element_table(const HeckeElement& h, const std::string& symbol) const {
    if (h.is_zero()) return "0";
    std::string s;
    for (const auto& [w, p] : h.entries()) {
      if (!s.empty()) s += " + ";
      s += "(" + p.to_string() + ") " + symbol + "_" + word(w);
    }
    return s;
  }

  const Options& o_;
  GroupConfig config_;
  std::ostream& out_;
  std::ostream& err_;
  std::vector<Input> inputs_;
  std::unique_ptr<Workspace> ws_;
};

int Command::ball() {
  const int radius = o_.radius.value_or(4);
  const GroupBall& b = workspace(radius).ball();
  nlohmann::json levels = nlohmann::json::array(), elements = nlohmann::json::array();
  for (int k = 0; k <= radius; ++k) {
    auto [first, last] = b.level(k);
    levels.push_back(last - first);
  }
  for (ElemId w = 0; w < b.size(); ++w) elements.push_back(word(w));
  if (json()) {
    emit({{"config", config_.to_json()}, {"radius", radius}, {"size", b.size()}, {"levels", levels}, {"elements", elements}});
  } else {
    out_ << config_.describe() << "  radius " << radius << "  size " << b.size() << "\n";
    for (int k = 0; k <= radius; ++k) {
      auto [first, last] = b.level(k);
      out_ << "  " << k << ":";
      for (ElemId w = first; w < last; ++w) out_ << " " << word(w);
      out_ << "\n";
    }
  }
  return kOk;
}

int Command::classify_cmd() {
  ClassificationReport r = classify(config_);
  ExpectedCellCount cells = expected_left_cell_count(config_);
  nlohmann::json j = r.to_json();
  j["config"] = config_.to_json();
  j["left_cells"] = cells.count ? nlohmann::json(*cells.count) : nlohmann::json("inf");
  j["left_cells_rule"] = cells.rule;
  if (json()) {
    emit(j);
  } else {
    out_ << config_.describe() << "\n  type " << to_string(r.type) << "\n  N = " << r.N << "\n  M =";
    for (const auto& p : r.M) out_ << " " << p.longest;
    out_ << "\n  finite parabolics:";
    for (const auto& p : r.finite_parabolics)
      out_ << " {" << genset_string(p.gens) << "} w=" << display_word(p.longest) << " L=" << p.longest_weight;
    out_ << "\n  left cells in the lowest cell: " << (cells.count ? std::to_string(*cells.count) : "infinitely many")
         << " (" << cells.rule << ")\n";
  }
  return kOk;
}

int Command::mult() {
  workspace(input_length_sum(2));
  HeckeElement p = ws_->algebra().multiply_basis(id(0), id(1));
  if (json()) emit({{"x", word(id(0))}, {"y", word(id(1))}, {"product", p.to_json(ws_->ball())}});
  else out_ << "T_" << word(id(0)) << " T_" << word(id(1)) << " = " << element_table(p, "T") << "\n";
  return kOk;
}

int Command::f() {
  workspace(std::max(input_length_sum(2), inputs_[2].length));
  LaurentPoly p = ws_->algebra().f(id(0), id(1), id(2));
  if (json()) emit({{"x", word(id(0))}, {"y", word(id(1))}, {"z", word(id(2))}, {"f", p.to_json()}});
  else out_ << "f_{" << word(id(0)) << "," << word(id(1)) << "," << word(id(2)) << "} = " << p.to_string() << "\n";
  return kOk;
}

int Command::kl() {
  workspace(inputs_[0].length);
  const HeckeElement& c = ws_->table().column(id(0));
  store_cache();
  if (json()) emit({{"w", word(id(0))}, {"p", c.to_json(ws_->ball())}});
  else out_ << "C_" << word(id(0)) << " = " << element_table(c, "T") << "\n";
  return kOk;
}

int Command::h() {
  workspace(std::max(input_length_sum(2), inputs_[2].length));
  LaurentPoly p = ws_->basis().h(id(0), id(1), id(2));
  store_cache();
  if (json()) emit({{"x", word(id(0))}, {"y", word(id(1))}, {"z", word(id(2))}, {"h", p.to_json()}});
  else out_ << "h_{" << word(id(0)) << "," << word(id(1)) << "," << word(id(2)) << "} = " << p.to_string() << "\n";
  return kOk;
}

int Command::afn() {
  const int witness = o_.radius.value_or(3);
  workspace(std::max(inputs_[0].length, 2 * witness));
  const ElemId w = id(0);
  AWitness a = ws_->basis().a_lower_bound(w, witness);
  store_cache();
  const bool lowest = ws_->atlas().in_lambda(w);
  nlohmann::json j{{"w", word(w)},
                   {"N", ws_->N()},
                   {"in_lowest_cell", lowest},
                   {"witness_radius", witness},
                   {"lower_bound", a.x == kNoElem ? nlohmann::json(nullptr) : nlohmann::json(a.degree.value())}};
  if (a.x != kNoElem) j["witness"] = {word(a.x), word(a.y)};
  j["a"] = lowest ? nlohmann::json(ws_->N()) : nlohmann::json(nullptr);
  if (json()) {
    emit(j);
  } else {
    out_ << "a(" << word(w) << ") ";
    if (lowest) out_ << "= " << ws_->N() << " (lowest cell)";
    else out_ << ">= " << (a.x == kNoElem ? std::string("-inf") : std::to_string(a.degree.value()));
    if (a.x != kNoElem) out_ << "  witness h_{" << word(a.x) << "," << word(a.y) << "," << word(w) << "}";
    out_ << "\n";
  }
  return kOk;
}

int Command::lambda() {
  workspace(inputs_[0].length);
  const ElemId w = id(0);
  const CellAtlas& atlas = ws_->atlas();
  const GroupBall& b = ws_->ball();
  nlohmann::json j{{"w", word(w)}, {"in_lambda", atlas.in_lambda(w)}};
  if (atlas.in_lambda(w)) {
    LeftCellId left = atlas.left_cell_id(w);
    RightCellId right = atlas.right_cell_id(w);
    j["left_cell"] = {{"w_J", word(left.w_J)}, {"y", word(left.y)}};
    j["right_cell"] = {{"x", word(right.x)}, {"w_J", word(right.w_J)}};
    (void)b;
  }
  if (json()) {
    emit(j);
  } else {
    out_ << word(w) << (atlas.in_lambda(w) ? " is" : " is not") << " in the lowest two-sided cell\n";
    if (atlas.in_lambda(w))
      out_ << "  left cell  B_J " << j["left_cell"]["w_J"].get<std::string>() << " "
           << j["left_cell"]["y"].get<std::string>() << "\n  right cell " << j["right_cell"]["x"].get<std::string>()
           << " " << j["right_cell"]["w_J"].get<std::string>() << " B_J^-1\n";
  }
  return kOk;
}

int Command::cells() {
  const int radius = o_.radius.value_or(6);
  if (radius < 2) throw ConfigError("cells needs --radius >= 2");
  workspace(radius);
  CellCensus census = ws_->atlas().enumerate_left_cells(radius);
  ExpectedCellCount expected = expected_left_cell_count(config_);
  nlohmann::json j = ws_->atlas().to_json(census);
  j["config"] = config_.to_json();
  j["radius"] = radius;
  j["expected"] = expected.count ? nlohmann::json(*expected.count) : nlohmann::json("inf");
  j["rule"] = expected.rule;
  if (json()) {
    emit(j);
  } else {
    out_ << config_.describe() << "  radius " << radius << "  " << census.cells.size() << " left cells seen\n";
    for (const auto& [id, members] : census.cells) {
      out_ << "  w_J=" << word(id.w_J) << " y=" << word(id.y) << ":";
      for (ElemId w : members) out_ << " " << word(w);
      out_ << "\n";
    }
    out_ << "  counts:";
    for (auto [r, c] : census.counts) out_ << " r" << r << "=" << c;
    out_ << "  expected " << (expected.count ? std::to_string(*expected.count) : "infinitely many") << "\n";
  }
  return kOk;
}

int Command::factorize() {
  workspace(inputs_[0].length + max_parabolic_length(config_));
  const ElemId w = id(0);
  CanonicalFactorization fz = ws_->atlas().factorize(w);
  if (json()) emit({{"w", word(w)}, {"x", word(fz.x)}, {"p", word(fz.p)}, {"y", word(fz.y)}});
  else out_ << word(w) << " = " << word(fz.x) << " . " << word(fz.p) << " . " << word(fz.y) << "\n";
  return kOk;
}

int Command::j0() {
  workspace(input_length_sum(2));
  JElement p = ws_->jring().product(id(0), id(1));
  if (json()) emit(p.to_json(ws_->ball()));
  else out_ << "t_" << word(id(0)) << " t_" << word(id(1)) << " = " << p.to_string(ws_->ball()) << "\n";
  return kOk;
}

int Command::indecomposable() {
  const int radius = o_.radius.value_or(6);
  workspace(2 * radius);
  const GlueReading reading = o_.reading == "non-additive" ? GlueReading::non_additive : GlueReading::amalgam;
  nlohmann::json list = nlohmann::json::array();
  for (ElemId x : ws_->jring().indecomposables(radius, reading)) list.push_back(word(x));
  if (json()) {
    emit({{"config", config_.to_json()}, {"radius", radius}, {"reading", o_.reading}, {"indecomposables", list}});
  } else {
    out_ << config_.describe() << "  radius " << radius << "  (" << o_.reading << ")\n ";
    for (const auto& w : list) out_ << " " << w.get<std::string>();
    out_ << "\n";
  }
  return kOk;
}

int Command::verify() {
  SuiteOptions so;
  so.radius = o_.radius.value_or(4);
  so.seed = o_.seed;
  so.exec.jobs = o_.jobs;
  so.witness_radius = o_.witness_radius;
  so.samples = o_.samples;
  std::vector<std::string> names;
  if (o_.suite == "all") names = suite_names();
  else if (std::find(suite_names().begin(), suite_names().end(), o_.suite) != suite_names().end()) names = {o_.suite};
  else throw ConfigError("unknown suite '" + o_.suite + "'");

  bool passed = true;
  nlohmann::json reports = nlohmann::json::array();
  for (const auto& name : names) {
    SuiteReport r = run_suite(name, config_, so);
    if (o_.no_timing) r.elapsed_ms = 0;
    passed = passed && r.passed();
    if (json()) reports.push_back(r.to_json());
    else out_ << r.to_table() << (o_.no_timing ? "" : "  elapsed " + std::to_string(r.elapsed_ms) + " ms\n");
  }
  if (json()) emit(names.size() == 1 ? reports[0] : reports);
  return passed ? kOk : kSuiteFailed;
}

nlohmann::json error_json(const std::string& kind, const std::string& message) {
  return {{"error", kind}, {"message", message}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Hecke algebras, Kazhdan-Lusztig cells and the lowest two-sided cell of rank-3 weighted Coxeter groups"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--config", o.config_path, "JSON group description");
  app.add_option("--m-sr", o.m_sr, "order of sr (integer or inf)");
  app.add_option("--m-st", o.m_st, "order of st (integer or inf)");
  app.add_option("--m-rt", o.m_rt, "order of rt (integer or inf)");
  app.add_option("--weights", o.weights, "L(r),L(s),L(t)")->capture_default_str();
  app.add_option("--radius", o.radius, "ball radius; default depends on the subcommand");
  app.add_option("--format", o.format, "json or table")->check(CLI::IsMember({"json", "table"}))->capture_default_str();
  app.add_option("--cache", o.cache_dir, "directory for the KL column cache");
  app.add_option("--seed", o.seed, "seed for sampled checks")->capture_default_str();
  app.add_option("--jobs", o.jobs, "threads for the suite kernels")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--max-ball", o.cap, "largest ball to enumerate")->capture_default_str();

  auto elements = [&](CLI::App* sub, std::size_t n, const std::string& names) {
    sub->add_option("elements", o.words, names)->expected(static_cast<int>(n))->required();
  };
  struct Sub {
    const char* name;
    const char* help;
    std::size_t args;
    const char* arg_names;
    int (Command::*run)();
  };
  const std::vector<Sub> subs{
      {"ball", "elements up to --radius (default 4)", 0, "", &Command::ball},
      {"classify", "finite parabolics, N, M and the expected left-cell count", 0, "", &Command::classify_cmd},
      {"mult", "T_x T_y in the standard basis", 2, "x y", &Command::mult},
      {"f", "structure constant f_{x,y,z}", 3, "x y z", &Command::f},
      {"kl", "KL polynomials p_{x,w} (C_w in the standard basis)", 1, "w", &Command::kl},
      {"h", "structure constant h_{x,y,z} of the KL basis", 3, "x y z", &Command::h},
      {"afn", "a-function: exact on the lowest cell, else a lower bound from --radius (default 3)", 1, "w", &Command::afn},
      {"lambda", "membership in the lowest two-sided cell and cell ids", 1, "w", &Command::lambda},
      {"cells", "left cells of the lowest cell up to --radius (default 6)", 0, "", &Command::cells},
      {"factorize", "w = x p y canonical factorization", 1, "w", &Command::factorize},
      {"j0", "product t_x t_y in the based ring", 2, "x y", &Command::j0},
      {"indecomposable", "indecomposable elements up to --radius (default 6)", 0, "", &Command::indecomposable},
      {"verify", "run a verification suite or all of them (--radius default 4)", 0, "", &Command::verify},
  };
  std::vector<CLI::App*> apps;
  for (const auto& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    if (s.args) elements(sub, s.args, s.arg_names);
    apps.push_back(sub);
  }
  CLI::App* verify = apps.back();
  verify->add_option("suite", o.suite, "suite name or all")->required();
  verify->add_option("--witness-radius", o.witness_radius, "cells suite witness radius (0: same as --radius)");
  verify->add_option("--samples", o.samples, "instances per sampled check")->capture_default_str();
  verify->add_flag("--no-timing", o.no_timing, "report elapsed_ms as 0 for byte-identical output");
  apps[11]->add_option("--reading", o.reading, "glued factorization reading")
      ->check(CLI::IsMember({"amalgam", "non-additive"}))
      ->capture_default_str();

  const bool json_errors = std::find(args.begin(), args.end(), "table") == args.end();
  auto fail = [&](int code, const std::string& kind, const std::string& message) {
    if (json_errors) err << error_json(kind, message).dump() << "\n";
    else err << "error: " << message << "\n";
    return code;
  };

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    return fail(kUsage, "usage", e.what());
  }

  try {
    std::size_t index = 0;
    for (; index < apps.size(); ++index)
      if (apps[index]->parsed()) break;
    Command command(o, out, err);
    return (command.*subs[index].run)();
  } catch (const ConfigError& e) {
    return fail(kUsage, "config", e.what());
  } catch (const DomainError& e) {
    return fail(kUsage, "domain", e.what());
  } catch (const ResourceError& e) {
    return fail(kResource, "resource", e.what());
  } catch (const OutOfBallError& e) {
    return fail(kResource, "out_of_ball", e.what());
  } catch (const InvariantViolation& e) {
    return fail(kSuiteFailed, "invariant", e.what());
  } catch (const std::exception& e) {
    return fail(kUsage, "error", e.what());
  }
}

}  // namespace hecke::cli
