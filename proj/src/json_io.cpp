#include "topohopf/json_io.hpp"

#include "topohopf/suites.hpp"

namespace topohopf {

namespace {

nlohmann::ordered_json counterexample_json(const std::optional<Counterexample>& c) {
  if (!c) return nullptr;
  return {{"check", c->check}, {"inputs", c->inputs}, {"expected", c->expected}, {"actual", c->actual}};
}

}  // namespace

nlohmann::ordered_json to_json(const SuiteReport& report) {
  auto groups = nlohmann::ordered_json::array();
  for (const auto& g : report.groups) {
    groups.push_back({{"name", g.name},
                      {"attempted", g.attempted},
                      {"passed", g.passed},
                      {"counterexample", counterexample_json(g.first_counterexample)}});
  }
  return {{"suite", report.suite},
          {"degree_range", {report.min_degree, report.max_degree}},
          {"attempted", report.attempted},
          {"passed", report.passed},
          {"counterexample", counterexample_json(report.counterexample)},
          {"groups", groups},
          {"wall_time_ms", report.wall_time_ms}};
}

}  // namespace topohopf
