#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pollenfuse {

inline constexpr int kNumClasses = 4;

/// The four target categories with their stable integer encoding.
enum class ClassLabel : int {
  NormalPollen = 0,
  AnomalousPollen = 1,
  Alnus = 2,
  Debris = 3,
};

inline constexpr std::array<ClassLabel, kNumClasses> kAllLabels = {
    ClassLabel::NormalPollen, ClassLabel::AnomalousPollen, ClassLabel::Alnus,
    ClassLabel::Debris};

constexpr int label_index(ClassLabel c) { return static_cast<int>(c); }

constexpr std::string_view label_name(ClassLabel c) {
  switch (c) {
    case ClassLabel::NormalPollen: return "normal";
    case ClassLabel::AnomalousPollen: return "anomalous";
    case ClassLabel::Alnus: return "alnus";
    case ClassLabel::Debris: return "debris";
  }
  return "?";
}

/// Accepts the canonical names or the integer codes 0..3.
std::optional<ClassLabel> parse_label(std::string_view text);

/// Four class probabilities indexed by ClassLabel.
using PredictionVector = std::array<double, kNumClasses>;

inline double max_probability(const PredictionVector& v) {
  double m = v[0];
  for (int i = 1; i < kNumClasses; ++i) m = std::max(m, v[i]);
  return m;
}

inline double probability_sum(const PredictionVector& v) {
  return v[0] + v[1] + v[2] + v[3];
}

/// Each entry in [0,1] and the entries sum to 1 within `tol`.
inline bool is_valid_prediction(const PredictionVector& v, double tol = 1e-6) {
  for (double p : v) {
    if (!(p >= 0.0 && p <= 1.0)) return false;
  }
  return std::abs(probability_sum(v) - 1.0) <= tol;
}

/// Scales the vector so it sums to exactly 1. Throws if the sum is not positive.
inline PredictionVector renormalize(PredictionVector v) {
  const double s = probability_sum(v);
  if (!(s > 0.0)) throw std::invalid_argument("prediction vector sums to zero");
  for (double& p : v) p /= s;
  return v;
}

}  // namespace pollenfuse
