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

#include "leakaudit/stats/tail.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "binomial_pmf.h"
#include "leakaudit/status_macros.h"

namespace leakaudit {
namespace {

absl::Status ValidateQuery(const TailQuery& q) {
  if (q.trials < 0) {
    return absl::InvalidArgumentError(
        absl::StrCat("trials must be nonnegative, got ", q.trials));
  }
  if (!(q.success_prob >= 0.0 && q.success_prob <= 1.0)) {
    return absl::InvalidArgumentError(absl::StrCat(
        "success probability must lie in [0, 1], got ", q.success_prob));
  }
  return absl::OkStatus();
}

absl::Status ValidateBudget(const FailureBudget& b) {
  if (b.support_cap < 0) {
    return absl::InvalidArgumentError(absl::StrCat(
        "failure support cap must be nonnegative, got ", b.support_cap));
  }
  if (!(b.mean_cap >= 0.0)) {
    return absl::InvalidArgumentError(absl::StrCat(
        "failure mean cap must be nonnegative, got ", b.mean_cap));
  }
  if (b.mean_cap > static_cast<double>(b.support_cap)) {
    return absl::InvalidArgumentError(
        absl::StrCat("failure mean cap ", b.mean_cap,
                     " exceeds support cap ", b.support_cap));
  }
  return absl::OkStatus();
}

struct Point {
  double x;
  double y;
};

// Upper concave envelope of points with increasing x, evaluated at `at`.
double ConcaveEnvelopeAt(const std::vector<Point>& pts, double at) {
  std::vector<Point> hull;
  hull.reserve(pts.size());
  for (const Point& b : pts) {
    while (hull.size() >= 2) {
      const Point& o = hull[hull.size() - 2];
      const Point& a = hull.back();
      const double cross = (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
      if (cross < 0.0) break;
      hull.pop_back();
    }
    hull.push_back(b);
  }
  if (at >= hull.back().x) return hull.back().y;
  for (size_t i = 0; i + 1 < hull.size(); ++i) {
    const Point& lo = hull[i];
    const Point& hi = hull[i + 1];
    if (at <= hi.x) {
      return lo.y + (at - lo.x) / (hi.x - lo.x) * (hi.y - lo.y);
    }
  }
  return hull.back().y;
}

}  // namespace

std::string_view BoundKindName(BoundKind kind) {
  switch (kind) {
    case BoundKind::kExact:
      return "exact";
    case BoundKind::kHoeffding:
      return "hoeffding";
  }
  return "unknown";
}

absl::StatusOr<BoundKind> ParseBoundKind(std::string_view name) {
  if (name == "exact") return BoundKind::kExact;
  if (name == "hoeffding") return BoundKind::kHoeffding;
  return absl::InvalidArgumentError(
      absl::StrCat("unknown bound kind '", std::string(name), "' (want exact|hoeffding)"));
}

namespace internal {

double HoeffdingUpperTail(int64_t n, int64_t v, double p) {
  if (v <= 0) return 1.0;
  if (v > n) return 0.0;
  const double gap = static_cast<double>(v) / static_cast<double>(n) - p;
  if (gap <= 0.0) return 1.0;
  return std::exp(-2.0 * static_cast<double>(n) * gap * gap);
}

double RelaxedUpperTail(int64_t n, int64_t v, double p, double q,
                        const FailureBudget& budget, BoundKind kind,
                        double stop_above) {
  if (v <= 0) return 1.0;
  // g(k) = tail at v - k, nondecreasing in k and equal to 1 for k >= v.
  auto g_at = [&](int64_t k) {
    if (k >= v) return 1.0;
    return kind == BoundKind::kExact ? UpperTail(n, v - k, p, q)
                                     : HoeffdingUpperTail(n, v - k, p);
  };
  // g(k) from g(k - 1), O(1) per step.
  auto g_next = [&](int64_t k, double prev) {
    if (k >= v) return 1.0;
    if (kind == BoundKind::kHoeffding) return HoeffdingUpperTail(n, v - k, p);
    return std::min(1.0, prev + BinomialPmf(v - k, n, p, q));
  };
  const double g0 = g_at(0);
  const double mu = budget.mean_cap;
  if (mu <= 0.0 || budget.support_cap == 0 || g0 > stop_above) return g0;
  const int64_t last = std::min(v, budget.support_cap);
  const double g_last = g_at(last);
  if (mu >= static_cast<double>(last)) return g_last;

  // The optimum mixes one point k1 <= mu with one point k2 > mu. Every left
  // point is kept. A chord never rises above its right end, so right points
  // with g(k2) <= lb (an achievable value) are skipped by bisection.
  const int64_t left_end = static_cast<int64_t>(std::floor(mu));
  std::vector<Point> pts;
  pts.push_back({0.0, g0});
  double g = g0;
  for (int64_t k = 1; k <= left_end; ++k) {
    g = g_next(k, g);
    pts.push_back({static_cast<double>(k), g});
  }
  const double lb =
      std::max(g, g0 + mu * (g_last - g0) / static_cast<double>(last));
  if (lb > stop_above) return lb;

  // Cheap upper bound on g(k): Chernoff for the exact tail (padded against
  // rounding), the closed form itself for Hoeffding.
  auto g_upper = [&](int64_t k) {
    if (kind == BoundKind::kHoeffding || k >= v) return g_at(k);
    const double a = static_cast<double>(v - k) / static_cast<double>(n);
    if (a <= p) return 1.0;
    const double b = 1.0 - a;
    double div = a * std::log(a / p);
    if (b > 0.0) div += b * std::log(b / q);
    return std::min(1.0, 1.01 * std::exp(-static_cast<double>(n) * div));
  };
  int64_t lo = left_end + 1;
  int64_t hi = last;
  while (lo < hi) {
    const int64_t mid = lo + (hi - lo) / 2;
    if (g_upper(mid) > lb) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  // Right scan. Each chord from the nearest left point is achievable, so it
  // can end the search early. Past the pmf mode g is concave, so later points
  // lie under the line through the current point with slope d; once
  // g(left_end) + mu * d cannot beat the envelope so far, nothing later can.
  const double g_left = g;
  const double left_x = static_cast<double>(left_end);
  const double mode = std::floor(static_cast<double>(n + 1) * p);
  auto chord = [&](int64_t k, double gk) {
    return g_left + (mu - left_x) * (gk - g_left) / (static_cast<double>(k) - left_x);
  };
  g = g_at(lo);
  pts.push_back({static_cast<double>(lo), g});
  if (chord(lo, g) > stop_above) return chord(lo, g);
  for (int64_t k = lo + 1; k <= last && g < 1.0 - 1e-16; ++k) {
    const double before = g;
    g = g_next(k, g);
    pts.push_back({static_cast<double>(k), g});
    const double c = chord(k, g);
    if (c > stop_above) return c;
    if (kind == BoundKind::kExact && (k - lo) % 16 == 0 &&
        static_cast<double>(v - k) <= mode &&
        g_left + mu * (g - before) <= ConcaveEnvelopeAt(pts, mu)) {
      break;
    }
  }
  if (pts.back().x < static_cast<double>(last)) {
    pts.push_back({static_cast<double>(last), g_last});
  }
  const double value = ConcaveEnvelopeAt(pts, mu);
  return std::clamp(value, g0, 1.0);
}

}  // namespace internal

absl::StatusOr<double> BinomialTail(const TailQuery& q) {
  RETURN_IF_ERROR(ValidateQuery(q));
  return internal::UpperTail(q.trials, q.threshold, q.success_prob,
                             1.0 - q.success_prob);
}

absl::StatusOr<double> HoeffdingTail(const TailQuery& q) {
  RETURN_IF_ERROR(ValidateQuery(q));
  if (q.trials == 0) {
    return absl::InvalidArgumentError(
        "Hoeffding tail is undefined for zero trials");
  }
  return internal::HoeffdingUpperTail(q.trials, q.threshold, q.success_prob);
}

absl::StatusOr<double> RelaxedTail(const TailQuery& q,
                                   const FailureBudget& budget,
                                   BoundKind kind) {
  RETURN_IF_ERROR(ValidateQuery(q));
  RETURN_IF_ERROR(ValidateBudget(budget));
  if (kind == BoundKind::kHoeffding && q.trials == 0) {
    return absl::InvalidArgumentError(
        "Hoeffding tail is undefined for zero trials");
  }
  return internal::RelaxedUpperTail(q.trials, q.threshold, q.success_prob,
                                    1.0 - q.success_prob, budget, kind);
}

SuccessProb LogisticProb(double x) {
  if (x >= 0.0) {
    const double e = std::exp(-x);
    return {1.0 / (1.0 + e), e / (1.0 + e)};
  }
  const double e = std::exp(x);
  return {e / (1.0 + e), 1.0 / (1.0 + e)};
}

absl::StatusOr<double> RejectionTail(int64_t true_positives, int64_t guesses,
                                     double param, const FailureBudget& budget,
                                     BoundKind kind) {
  if (guesses < 0 || true_positives < 0 || true_positives > guesses) {
    return absl::InvalidArgumentError(
        absl::StrCat("need 0 <= true positives (", true_positives,
                     ") <= guesses (", guesses, ")"));
  }
  RETURN_IF_ERROR(ValidateBudget(budget));
  if (true_positives == 0) return 1.0;
  const SuccessProb sp = LogisticProb(param);
  return internal::RelaxedUpperTail(guesses, true_positives, sp.p, sp.q,
                                    budget, kind);
}

absl::StatusOr<bool> IsRejected(int64_t true_positives, int64_t guesses,
                                double param, double level,
                                const FailureBudget& budget, BoundKind kind) {
  if (guesses < 0 || true_positives < 0 || true_positives > guesses) {
    return absl::InvalidArgumentError(
        absl::StrCat("need 0 <= true positives (", true_positives,
                     ") <= guesses (", guesses, ")"));
  }
  RETURN_IF_ERROR(ValidateBudget(budget));
  if (true_positives == 0) return 1.0 <= level;
  const SuccessProb sp = LogisticProb(param);
  return internal::RelaxedUpperTail(guesses, true_positives, sp.p, sp.q,
                                    budget, kind, level) <= level;
}

}  // namespace leakaudit
