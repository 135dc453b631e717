#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <unordered_map>
#include <vector>

#include "pollenfuse/types.hpp"

namespace pollenfuse {

struct Sample {
  std::string id;
  std::string image_path;
  ClassLabel label = ClassLabel::NormalPollen;
};

/// A labelled image listing with per-class counts. Immutable after
/// construction; all operations on it are safe to call concurrently.
struct Manifest {
  std::vector<Sample> samples;
  std::array<std::size_t, kNumClasses> counts{};

  std::size_t size() const { return samples.size(); }

  /// Builds a manifest from samples, computing counts and checking id
  /// uniqueness and non-empty paths.
  static Manifest from_samples(std::vector<Sample> samples);
};

/// Reads a manifest CSV with header `id,image_path,label`. Labels may be
/// given by name (normal, anomalous, alnus, debris) or integer code 0..3.
/// Throws std::runtime_error naming the offending row on malformed input.
Manifest load_manifest(const std::filesystem::path& path);

void save_manifest(const std::filesystem::path& path, const Manifest& manifest);

/// weight[c] = N_total / N_c. Throws if any class count is zero.
std::array<double, kNumClasses> compute_class_weights(
    const std::array<std::size_t, kNumClasses>& counts);

struct FoldAssignment {
  int k = 0;
  std::uint64_t seed = 0;
  std::unordered_map<std::string, int> fold_of;

  int fold(const std::string& id) const;

  /// Fold CSV with header `id,fold`.
  static FoldAssignment load(const std::filesystem::path& path);
  void save(const std::filesystem::path& path,
            const Manifest& manifest) const;
};

/// Deterministic stratified split: per class, sample order is shuffled with a
/// seed-derived stream and folds are assigned round-robin, so per-class fold
/// sizes differ by at most one. Requires k >= 2 and at least k samples per
/// class.
FoldAssignment stratified_kfold(const Manifest& manifest, int k,
                                std::uint64_t seed);

}  // namespace pollenfuse
