#include "relest/series.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace relest {

void validate(const CurveSeries& series) {
  if (series.name.empty()) throw std::invalid_argument("series: empty name");
  for (std::size_t i = 0; i < series.points.size(); ++i) {
    if (!std::isfinite(series.points[i].first) ||
        !std::isfinite(series.points[i].second))
      throw std::invalid_argument("series '" + series.name +
                                  "': non-finite sample");
    if (i > 0 && !(series.points[i].first > series.points[i - 1].first))
      throw std::invalid_argument("series '" + series.name +
                                  "': abscissa not strictly increasing");
  }
}

std::string format_double(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

std::string to_csv(const CurveSeries& series) {
  validate(series);
  std::string out;
  out += "# series: " + series.name + "\n";
  for (const auto& [key, val] : series.metadata)
    out += "# " + key + ": " + val + "\n";
  out += series.abscissa_label + "," + series.ordinate_label + "\n";
  for (const auto& [x, y] : series.points)
    out += format_double(x) + "," + format_double(y) + "\n";
  return out;
}

nlohmann::json to_json(const CurveSeries& series) {
  validate(series);
  nlohmann::json meta = nlohmann::json::object();
  for (const auto& [key, val] : series.metadata) meta[key] = val;
  nlohmann::json points = nlohmann::json::array();
  for (const auto& [x, y] : series.points) points.push_back({x, y});
  return {{"name", series.name},
          {"abscissa_label", series.abscissa_label},
          {"ordinate_label", series.ordinate_label},
          {"metadata", meta},
          {"points", points}};
}

nlohmann::json series_set_json(const std::vector<CurveSeries>& set) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& s : set) arr.push_back(to_json(s));
  return {{"schema_version", 1}, {"series", arr}};
}

}  // namespace relest
