#include "rbfpielm/report.hpp"

#include <cstring>
#include <vector>

#include <json.hpp>

#include "rbfpielm/error.hpp"

namespace rbfpielm {

using json = nlohmann::ordered_json;

std::string coefficients_hash(const Vector& c) {
  std::string_view bytes(reinterpret_cast<const char*>(c.data()), static_cast<std::size_t>(c.size()) * sizeof(double));
  return to_hex(fnv1a(bytes));
}

RunReport make_report(const RunResult& result) {
  RunReport r;
  r.config = result.config;
  r.config_hash = config_hash(result.config);
  r.n_units = result.solution.basis().size();
  r.interior_points = result.interior_points;
  r.boundary_points = result.boundary_points;
  r.rows = result.rows;
  r.residual_norm = result.solve.residual_norm;
  r.residual_rms = result.solve.residual_rms;
  r.residual_mean_abs = result.solve.residual_mean_abs;
  r.effective_rank = result.solve.effective_rank;
  r.condition_number = result.solve.condition_number;
  r.error = result.error;
  r.collocation_error = result.collocation_error;
  r.coefficients_hash = coefficients_hash(result.solve.coefficients);
  r.timings = result.timings;
  return r;
}

std::string to_json_text(const RunReport& r) {
  json j;
  j["library"] = "rbf-pielm";
  j["version"] = r.library_version;
  json cfg = json::object();
  for (const auto& [k, v] : config_entries(r.config)) cfg[k] = v;
  j["config"] = cfg;
  j["config_hash"] = r.config_hash;
  j["seed"] = r.config.pai.seed;
  j["problem"] = {{"preset", r.config.preset},
                  {"n_units", r.n_units},
                  {"collocation_points", r.interior_points + r.boundary_points},
                  {"interior_points", r.interior_points},
                  {"boundary_points", r.boundary_points},
                  {"rows", r.rows}};
  j["solve"] = {{"residual_norm", r.residual_norm},
                {"residual_rms", r.residual_rms},
                {"residual_mean_abs", r.residual_mean_abs},
                {"effective_rank", r.effective_rank},
                {"condition_number", r.condition_number}};
  auto stats = [](const ErrorStats& e) { return json{{"mean_abs", e.mean_abs}, {"max_abs", e.max_abs}, {"rms", e.rms}}; };
  if (r.error) j["error"] = stats(*r.error);
  if (r.collocation_error) j["collocation_error"] = stats(*r.collocation_error);
  j["coefficients_fnv1a"] = r.coefficients_hash;
  j["timing"] = {{"assembly_s", r.timings.assembly_s},
                 {"solve_s", r.timings.solve_s},
                 {"train_s", r.timings.train_s},
                 {"total_s", r.timings.total_s}};
  return j.dump(2) + "\n";
}

RunReport parse_report(std::string_view text) {
  try {
    const json j = json::parse(text);
    RunReport r;
    r.library_version = j.at("version").get<std::string>();
    const auto& cfg = j.at("config");
    r.config = preset_defaults(cfg.at("preset").get<std::string>());
    for (const auto& [k, v] : cfg.items())
      if (k != "preset") apply_setting(r.config, k, v.get<std::string>());
    r.config_hash = j.at("config_hash").get<std::string>();
    const auto& p = j.at("problem");
    r.n_units = p.at("n_units").get<std::size_t>();
    r.interior_points = p.at("interior_points").get<std::size_t>();
    r.boundary_points = p.at("boundary_points").get<std::size_t>();
    r.rows = p.at("rows").get<std::size_t>();
    const auto& s = j.at("solve");
    r.residual_norm = s.at("residual_norm").get<double>();
    r.residual_rms = s.at("residual_rms").get<double>();
    r.residual_mean_abs = s.at("residual_mean_abs").get<double>();
    r.effective_rank = s.at("effective_rank").get<int>();
    r.condition_number = s.at("condition_number").get<double>();
    auto stats = [](const json& e) {
      return ErrorStats{e.at("mean_abs").get<double>(), e.at("max_abs").get<double>(), e.at("rms").get<double>()};
    };
    if (j.contains("error")) r.error = stats(j.at("error"));
    if (j.contains("collocation_error")) r.collocation_error = stats(j.at("collocation_error"));
    r.coefficients_hash = j.at("coefficients_fnv1a").get<std::string>();
    const auto& t = j.at("timing");
    r.timings = {t.at("assembly_s").get<double>(), t.at("solve_s").get<double>(), t.at("train_s").get<double>(),
                 t.at("total_s").get<double>()};
    return r;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed report: ") + e.what());
  }
}

}  // namespace rbfpielm
