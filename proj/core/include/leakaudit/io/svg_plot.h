// Copyright 2026 The leakaudit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LEAKAUDIT_IO_SVG_PLOT_H_
#define LEAKAUDIT_IO_SVG_PLOT_H_

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "absl/status/status.h"

namespace leakaudit {

struct PlotSeries {
  std::string label;
  std::vector<std::pair<double, double>> points;
};

struct PlotSpec {
  std::string title;
  std::string x_label;
  std::string y_label;
};

// Standalone SVG line chart; axes span the data range (x from 0).
std::string RenderLineChartSvg(const PlotSpec& spec,
                               std::span<const PlotSeries> series);

absl::Status WriteLineChartSvg(const std::string& path, const PlotSpec& spec,
                               std::span<const PlotSeries> series);

}  // namespace leakaudit

#endif  // LEAKAUDIT_IO_SVG_PLOT_H_
