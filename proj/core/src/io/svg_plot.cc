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

#include "leakaudit/io/svg_plot.h"

#include <algorithm>
#include <array>
#include <fstream>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_replace.h"

namespace leakaudit {
namespace {

constexpr double kWidth = 640;
constexpr double kHeight = 420;
constexpr double kMargin = 56;
constexpr std::array<const char*, 4> kColors = {"#1f77b4", "#d62728",
                                                "#2ca02c", "#9467bd"};

std::string Escape(const std::string& s) {
  return absl::StrReplaceAll(
      s, {{"&", "&amp;"}, {"<", "&lt;"}, {">", "&gt;"}, {"\"", "&quot;"}});
}

}  // namespace

std::string RenderLineChartSvg(const PlotSpec& spec,
                               std::span<const PlotSeries> series) {
  double x_max = 0.0;
  double y_min = 0.0;
  double y_max = 0.0;
  for (const PlotSeries& s : series) {
    for (const auto& [x, y] : s.points) {
      x_max = std::max(x_max, x);
      y_min = std::min(y_min, y);
      y_max = std::max(y_max, y);
    }
  }
  if (x_max <= 0.0) x_max = 1.0;
  if (y_max <= y_min) y_max = y_min + 1.0;
  const double plot_w = kWidth - 2 * kMargin;
  const double plot_h = kHeight - 2 * kMargin;
  auto px = [&](double x) { return kMargin + x / x_max * plot_w; };
  auto py = [&](double y) {
    return kHeight - kMargin - (y - y_min) / (y_max - y_min) * plot_h;
  };

  std::string svg = absl::StrFormat(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" "
      "height=\"%.0f\" viewBox=\"0 0 %.0f %.0f\">\n"
      "<rect width=\"100%%\" height=\"100%%\" fill=\"white\"/>\n",
      kWidth, kHeight, kWidth, kHeight);
  absl::StrAppendFormat(
      &svg,
      "<text x=\"%.1f\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">%s"
      "</text>\n",
      kWidth / 2, Escape(spec.title));
  absl::StrAppendFormat(
      &svg,
      "<line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" stroke=\"black\"/>\n"
      "<line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" stroke=\"black\"/>\n",
      kMargin, kHeight - kMargin, kWidth - kMargin, kHeight - kMargin, kMargin,
      kMargin, kMargin, kHeight - kMargin);
  for (int i = 0; i <= 4; ++i) {
    const double xv = x_max * i / 4.0;
    const double yv = y_min + (y_max - y_min) * i / 4.0;
    absl::StrAppendFormat(
        &svg,
        "<text x=\"%.1f\" y=\"%.1f\" text-anchor=\"middle\" "
        "font-size=\"11\">%.3g</text>\n"
        "<text x=\"%.1f\" y=\"%.1f\" text-anchor=\"end\" "
        "font-size=\"11\">%.3g</text>\n",
        px(xv), kHeight - kMargin + 16, xv, kMargin - 6, py(yv) + 4, yv);
  }
  absl::StrAppendFormat(
      &svg,
      "<text x=\"%.1f\" y=\"%.1f\" text-anchor=\"middle\" font-size=\"13\">%s"
      "</text>\n"
      "<text x=\"16\" y=\"%.1f\" text-anchor=\"middle\" font-size=\"13\" "
      "transform=\"rotate(-90 16 %.1f)\">%s</text>\n",
      kWidth / 2, kHeight - 12, Escape(spec.x_label), kHeight / 2, kHeight / 2,
      Escape(spec.y_label));

  for (size_t i = 0; i < series.size(); ++i) {
    const char* color = kColors[i % kColors.size()];
    std::string pts;
    for (const auto& [x, y] : series[i].points) {
      absl::StrAppendFormat(&pts, "%.2f,%.2f ", px(x), py(y));
    }
    absl::StrAppendFormat(&svg,
                          "<polyline fill=\"none\" stroke=\"%s\" "
                          "stroke-width=\"1.5\" points=\"%s\"/>\n",
                          color, pts);
    absl::StrAppendFormat(
        &svg,
        "<text x=\"%.1f\" y=\"%.1f\" font-size=\"12\" fill=\"%s\">%s</text>\n",
        kWidth - kMargin - 120, kMargin + 16.0 * (i + 1), color,
        Escape(series[i].label));
  }
  svg += "</svg>\n";
  return svg;
}

absl::Status WriteLineChartSvg(const std::string& path, const PlotSpec& spec,
                               std::span<const PlotSeries> series) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    return absl::PermissionDeniedError(
        absl::StrCat("cannot open '", path, "' for writing"));
  }
  out << RenderLineChartSvg(spec, series);
  if (!out) return absl::DataLossError(absl::StrCat("failed writing '", path, "'"));
  return absl::OkStatus();
}

}  // namespace leakaudit
