#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace relest {

// One named curve, the unit of CLI output. Metadata records every parameter
// that influenced the values; the abscissa must be strictly increasing.
struct CurveSeries {
  std::string name;
  std::string abscissa_label;
  std::string ordinate_label;
  std::vector<std::pair<double, double>> points;
  std::vector<std::pair<std::string, std::string>> metadata;
};

void validate(const CurveSeries& series);

// Shortest exact decimal form; identical inputs give identical bytes.
std::string format_double(double value);

// '#'-prefixed metadata prelude, a header row, then one x,y row per point.
std::string to_csv(const CurveSeries& series);

nlohmann::json to_json(const CurveSeries& series);

// {"schema_version": 1, "series": [...]}
nlohmann::json series_set_json(const std::vector<CurveSeries>& set);

}  // namespace relest
