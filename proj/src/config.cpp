#include "rbfpielm/config.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "rbfpielm/error.hpp"

namespace rbfpielm {

bool operator==(const RunConfig& a, const RunConfig& b) { return config_entries(a) == config_entries(b); }

bool is_mms_preset(std::string_view preset) { return preset.starts_with("mms-"); }

RunConfig preset_defaults(std::string_view preset) {
  RunConfig cfg;
  cfg.preset = std::string(preset);
  if (preset == "cavity") return cfg;

  // Manufactured-solution presets: full 60x60 Chebyshev tensor grid, 2000
  // wall-clustered kernels of one width, interior block rescaled, finer truncation.
  cfg.grid_nx = cfg.grid_ny = 60;
  cfg.pai.n_units = 2000;
  cfg.pai.sigmac = 0.0;
  cfg.scale_interior = true;
  cfg.rcond = 1e-12;
  cfg.emit_profiles = false;
  cfg.emit_field = false;
  if (preset == "mms-k10") {
    cfg.k1 = cfg.k2 = 10.0;
  } else if (preset == "mms-k20") {
    cfg.k1 = cfg.k2 = 20.0;
  } else if (preset == "mms-custom") {
    // smooth case: k = 2 resolves with a small budget and default widths
    cfg.k1 = cfg.k2 = 2.0;
    cfg.grid_nx = cfg.grid_ny = 30;
    cfg.pai.n_units = 400;
    cfg.pai.sigmac = PaiConfig{}.sigmac;
  } else {
    throw ConfigError("unknown preset '" + std::string(preset) + "'");
  }
  return cfg;
}

std::string format_double(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, end);
}

std::uint64_t fnv1a(std::string_view bytes, std::uint64_t seed) {
  std::uint64_t h = seed;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string to_hex(std::uint64_t v) {
  static constexpr char digits[] = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i, v >>= 4) s[i] = digits[v & 0xf];
  return s;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double parse_real(std::string_view key, std::string_view v) {
  double out = 0.0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size() || !std::isfinite(out))
    throw ConfigError("key '" + std::string(key) + "': expected a number, got '" + std::string(v) + "'");
  return out;
}

template <typename Int>
Int parse_int(std::string_view key, std::string_view v) {
  Int out = 0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size())
    throw ConfigError("key '" + std::string(key) + "': expected an integer, got '" + std::string(v) + "'");
  return out;
}

bool parse_bool(std::string_view key, std::string_view v) {
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw ConfigError("key '" + std::string(key) + "': expected true/false, got '" + std::string(v) + "'");
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

struct Field {
  std::function<void(RunConfig&, std::string_view key, std::string_view value)> set;
  std::function<std::string(const RunConfig&)> get;
};

#define RBF_REAL(name, member)                                                               \
  {                                                                                          \
    name, {[](RunConfig& c, std::string_view k, std::string_view v) { member = parse_real(k, v); }, \
           [](const RunConfig& c) { return format_double(member); } }                        \
  }
#define RBF_INT(name, member, type)                                                                 \
  {                                                                                                 \
    name, {[](RunConfig& c, std::string_view k, std::string_view v) { member = parse_int<type>(k, v); }, \
           [](const RunConfig& c) { return std::to_string(member); } }                              \
  }
#define RBF_BOOL(name, member)                                                               \
  {                                                                                          \
    name, {[](RunConfig& c, std::string_view k, std::string_view v) { member = parse_bool(k, v); }, \
           [](const RunConfig& c) { return bool_text(member); } }                            \
  }

// Order here is the serialization order.
const std::vector<std::pair<std::string, Field>>& fields() {
  static const std::vector<std::pair<std::string, Field>> table = {
      {"preset",
       {[](RunConfig& c, std::string_view, std::string_view v) { c.preset = std::string(v); },
        [](const RunConfig& c) { return c.preset; }}},
      RBF_REAL("k1", c.k1),
      RBF_REAL("k2", c.k2),
      RBF_INT("grid_nx", c.grid_nx, int),
      RBF_INT("grid_ny", c.grid_ny, int),
      RBF_INT("boundary_per_wall", c.boundary_per_wall, int),
      RBF_INT("n_units", c.pai.n_units, std::size_t),
      RBF_REAL("sigma0", c.pai.sigma0),
      RBF_REAL("sigmac", c.pai.sigmac),
      RBF_REAL("boundary_oversample", c.pai.boundary_oversample),
      RBF_INT("seed", c.pai.seed, std::uint64_t),
      RBF_BOOL("pai", c.use_pai),
      RBF_REAL("rcond", c.rcond),
      RBF_BOOL("clamped", c.clamped),
      RBF_BOOL("scale_interior", c.scale_interior),
      RBF_INT("eval_grid", c.eval_grid, int),
      {"output_dir",
       {[](RunConfig& c, std::string_view, std::string_view v) { c.output_dir = std::string(v); },
        [](const RunConfig& c) { return c.output_dir.string(); }}},
      RBF_BOOL("emit_profiles", c.emit_profiles),
      RBF_BOOL("emit_field", c.emit_field),
      RBF_BOOL("emit_error_map", c.emit_error_map),
      RBF_BOOL("emit_matrix", c.emit_matrix),
      RBF_INT("profile_samples", c.profile_samples, int),
      RBF_INT("field_nx", c.field_nx, int),
      RBF_INT("field_ny", c.field_ny, int),
      RBF_INT("threads", c.threads, int),
  };
  return table;
}

#undef RBF_REAL
#undef RBF_INT
#undef RBF_BOOL

const Field* find_field(std::string_view key) {
  for (const auto& [name, field] : fields())
    if (name == key) return &field;
  return nullptr;
}

}  // namespace

void apply_setting(RunConfig& cfg, std::string_view key, std::string_view value) {
  const Field* f = find_field(key);
  if (!f) throw ConfigError("unknown key '" + std::string(key) + "'");
  f->set(cfg, key, value);
}

RunConfig parse_config(std::string_view text, std::optional<std::string> preset_override) {
  struct Entry {
    std::string key;
    std::string value;
    int line;
    int key_column;
    int value_column;
  };
  std::vector<Entry> entries;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, eol - pos);
    ++line_no;
    pos = eol + 1;

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (trim(line).empty()) {
      if (eol == text.size()) break;
      continue;
    }
    const auto eq = line.find('=');
    const auto first = line.find_first_not_of(" \t\r");
    if (eq == std::string_view::npos)
      throw ConfigError("expected 'key = value'", line_no, static_cast<int>(first) + 1);
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigError("missing key before '='", line_no, static_cast<int>(eq) + 1);
    const auto value_col = static_cast<int>(value.empty() ? eq + 2 : value.data() - line.data() + 1);
    if (value.empty()) throw ConfigError("missing value for key '" + std::string(key) + "'", line_no, value_col);
    if (!find_field(key)) throw ConfigError("unknown key '" + std::string(key) + "'", line_no, static_cast<int>(first) + 1);
    entries.push_back({std::string(key), std::string(value), line_no, static_cast<int>(first) + 1, value_col});
    if (eol == text.size()) break;
  }

  std::string preset = "cavity";
  for (const auto& e : entries)
    if (e.key == "preset") preset = e.value;
  if (preset_override) preset = *preset_override;

  RunConfig cfg;
  try {
    cfg = preset_defaults(preset);
  } catch (const ConfigError& err) {
    for (const auto& e : entries)
      if (e.key == "preset" && !preset_override) throw ConfigError(err.what(), e.line, e.value_column);
    throw;
  }
  for (const auto& e : entries) {
    if (e.key == "preset") continue;
    try {
      apply_setting(cfg, e.key, e.value);
    } catch (const ConfigError& err) {
      throw ConfigError(err.what(), e.line, e.value_column);
    }
  }
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path, std::optional<std::string> preset_override) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), std::move(preset_override));
}

std::vector<std::pair<std::string, std::string>> config_entries(const RunConfig& cfg) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& [name, field] : fields()) out.emplace_back(name, field.get(cfg));
  return out;
}

std::string serialize_config(const RunConfig& cfg) {
  std::string text;
  for (const auto& [k, v] : config_entries(cfg)) text += k + " = " + v + "\n";
  return text;
}

std::string config_hash(const RunConfig& cfg) { return to_hex(fnv1a(serialize_config(cfg))); }

void validate(const RunConfig& cfg) {
  preset_defaults(cfg.preset);
  if (cfg.grid_nx < 2 || cfg.grid_ny < 2) throw ConfigError("grid dimensions must be >= 2");
  if (cfg.preset == "cavity" && cfg.boundary_per_wall < 1) throw ConfigError("boundary_per_wall must be >= 1");
  if (cfg.pai.n_units < 1) throw ConfigError("n_units must be >= 1");
  if (!(cfg.pai.sigma0 > 0.0)) throw ConfigError("sigma0 must be > 0");
  if (!(cfg.pai.sigmac >= 0.0)) throw ConfigError("sigmac must be >= 0");
  if (!(cfg.pai.boundary_oversample >= 1.0)) throw ConfigError("boundary_oversample must be >= 1");
  if (!(cfg.rcond >= 0.0 && cfg.rcond < 1.0)) throw ConfigError("rcond must lie in [0, 1)");
  if (cfg.eval_grid < 2) throw ConfigError("eval_grid must be >= 2");
  if (cfg.profile_samples < 2) throw ConfigError("profile_samples must be >= 2");
  if (cfg.field_nx < 2 || cfg.field_ny < 2) throw ConfigError("field grid must be >= 2 in each direction");
  if (cfg.threads < 0) throw ConfigError("threads must be >= 0");
}

}  // namespace rbfpielm
