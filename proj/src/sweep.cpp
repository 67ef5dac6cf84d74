#include "rbfpielm/sweep.hpp"

#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <limits>

#include "rbfpielm/error.hpp"
#include "rbfpielm/pipeline.hpp"

namespace rbfpielm {

namespace {

bool known_axis(std::string_view name) { return name == "sigma0" || name == "sigmac" || name == "n_units"; }

void check_axis(const SweepAxis& axis) {
  if (!known_axis(axis.name))
    throw ConfigError("unknown sweep axis '" + axis.name + "' (expected sigma0, sigmac or n_units)");
  if (axis.values.empty()) throw ConfigError("sweep axis '" + axis.name + "' has no values");
  for (std::size_t i = 1; i < axis.values.size(); ++i)
    if (!(axis.values[i] > axis.values[i - 1]))
      throw ConfigError("sweep axis '" + axis.name + "' values must be strictly increasing");
  if (axis.name == "n_units")
    for (double v : axis.values)
      if (v < 1.0 || v != std::floor(v)) throw ConfigError("n_units sweep values must be positive integers");
}

void set_axis(RunConfig& cfg, const std::string& name, double value) {
  if (name == "sigma0")
    cfg.pai.sigma0 = value;
  else if (name == "sigmac")
    cfg.pai.sigmac = value;
  else
    cfg.pai.n_units = static_cast<std::size_t>(value);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

template <typename T>
std::vector<T> parse_list(std::string_view text, int line, int column) {
  std::vector<T> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = std::min(text.find(',', pos), text.size());
    const auto item = trim(text.substr(pos, comma - pos));
    T v{};
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size())
      throw ConfigError("bad list item '" + std::string(item) + "'", line, column + static_cast<int>(pos));
    out.push_back(v);
    pos = comma + 1;
  }
  return out;
}

}  // namespace

void validate(const SweepSpec& spec) {
  check_axis(spec.axis1);
  if (spec.axis2) {
    check_axis(*spec.axis2);
    if (spec.axis2->name == spec.axis1.name) throw ConfigError("sweep axes must differ");
  }
  if (spec.seeds.empty()) throw ConfigError("sweep needs at least one seed");
  if (spec.parallelism < 1) throw ConfigError("sweep parallelism must be >= 1");
}

SweepSpec default_width_sweep(const RunConfig& base) {
  SweepSpec spec;
  spec.base = base;
  spec.axis1.name = "sigma0";
  spec.axis2 = SweepAxis{"sigmac", {}};
  for (int i = 0; i < 10; ++i) {
    spec.axis1.values.push_back(0.05 + (1.0 - 0.05) * i / 9.0);
    spec.axis2->values.push_back(2.0 * i / 9.0);
  }
  return spec;
}

SweepSpec parse_sweep_spec(std::string_view text, const RunConfig& base) {
  SweepSpec spec;
  spec.base = base;
  bool have_axis1 = false;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, eol - pos);
    ++line_no;
    pos = eol + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (trim(line).empty()) continue;

    const auto eq = line.find('=');
    const int first = static_cast<int>(line.find_first_not_of(" \t")) + 1;
    if (eq == std::string_view::npos) throw ConfigError("expected 'key = value'", line_no, first);
    const auto key = trim(line.substr(0, eq));
    const auto value = line.substr(eq + 1);
    const int value_col = static_cast<int>(eq) + 2;

    if (key == "axis1" || key == "axis2") {
      const auto colon = value.find(':');
      if (colon == std::string_view::npos)
        throw ConfigError("expected 'name: v1, v2, ...'", line_no, value_col);
      SweepAxis axis{std::string(trim(value.substr(0, colon))),
                     parse_list<double>(value.substr(colon + 1), line_no, value_col + static_cast<int>(colon) + 1)};
      try {
        check_axis(axis);
      } catch (const ConfigError& e) {
        throw ConfigError(e.what(), line_no, value_col);
      }
      if (key == "axis1") {
        spec.axis1 = std::move(axis);
        have_axis1 = true;
      } else {
        spec.axis2 = std::move(axis);
      }
    } else if (key == "seeds") {
      spec.seeds = parse_list<std::uint64_t>(value, line_no, value_col);
    } else if (key == "parallelism") {
      spec.parallelism = parse_list<int>(value, line_no, value_col).at(0);
    } else {
      throw ConfigError("unknown sweep key '" + std::string(key) + "'", line_no, first);
    }
  }
  if (!have_axis1) throw ConfigError("sweep spec has no axis1");
  validate(spec);
  return spec;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
  validate(spec);
  struct Cell {
    double a1;
    std::optional<double> a2;
  };
  std::vector<Cell> cells;
  for (double a1 : spec.axis1.values) {
    if (spec.axis2)
      for (double a2 : spec.axis2->values) cells.push_back({a1, a2});
    else
      cells.push_back({a1, std::nullopt});
  }

  std::vector<SweepRow> rows(cells.size());
  const auto n = static_cast<std::int64_t>(cells.size());
#pragma omp parallel for schedule(dynamic) num_threads(spec.parallelism)
  for (std::int64_t i = 0; i < n; ++i) {
    SweepRow row;
    row.axis1 = cells[i].a1;
    row.axis2 = cells[i].a2;
    std::vector<double> residuals;
    double time = 0.0;
    try {
      for (std::uint64_t seed : spec.seeds) {
        RunConfig cfg = spec.base;
        set_axis(cfg, spec.axis1.name, cells[i].a1);
        if (spec.axis2) set_axis(cfg, spec.axis2->name, *cells[i].a2);
        cfg.pai.seed = seed;
        const RunResult r = run_pipeline(cfg, {.compute_error = false});
        if (!std::isfinite(r.solve.residual_mean_abs)) throw NumericalFailure("non-finite residual");
        residuals.push_back(r.solve.residual_mean_abs);
        time += r.timings.train_s;
      }
      double mean = 0.0;
      for (double v : residuals) mean += v;
      mean /= static_cast<double>(residuals.size());
      double var = 0.0;
      for (double v : residuals) var += (v - mean) * (v - mean);
      row.mean_residual = mean;
      row.std_residual = residuals.size() > 1 ? std::sqrt(var / static_cast<double>(residuals.size() - 1)) : 0.0;
      row.mean_time_s = time / static_cast<double>(residuals.size());
    } catch (const std::exception& e) {
      row.mean_residual = row.std_residual = row.mean_time_s = std::numeric_limits<double>::quiet_NaN();
      row.status = std::string("error: ") + e.what();
    }
    rows[i] = std::move(row);
  }
  return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out = "axis1,axis2,mean_residual,std_residual,mean_time_s,status\n";
  for (const auto& r : rows) {
    std::string status = r.status;
    for (char& c : status)
      if (c == ',' || c == '\n') c = ';';
    out += format_double(r.axis1) + ',' + (r.axis2 ? format_double(*r.axis2) : std::string()) + ',' +
           format_double(r.mean_residual) + ',' + format_double(r.std_residual) + ',' + format_double(r.mean_time_s) +
           ',' + status + '\n';
  }
  return out;
}

void write_sweep_csv(const std::vector<SweepRow>& rows, const std::filesystem::path& path) {
  const std::string text = sweep_csv(rows);
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw Error("cannot open " + tmp + " for writing");
    out << text;
    if (!out) throw Error("write failed for " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace rbfpielm
