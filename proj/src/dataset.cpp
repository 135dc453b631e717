#include "pollenfuse/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "pollenfuse/rng.hpp"

namespace pollenfuse {

std::optional<ClassLabel> parse_label(std::string_view text) {
  for (ClassLabel c : kAllLabels) {
    if (text == label_name(c)) return c;
  }
  if (text.size() == 1 && text[0] >= '0' && text[0] <= '3') {
    return static_cast<ClassLabel>(text[0] - '0');
  }
  return std::nullopt;
}

namespace {

std::string trim(std::string s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) s.pop_back();
  std::size_t i = 0;
  while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
  return s.substr(i);
}

std::vector<std::string> split_csv_row(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) fields.push_back(trim(field));
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

}  // namespace

Manifest Manifest::from_samples(std::vector<Sample> samples) {
  Manifest m;
  std::set<std::string_view> seen;
  for (const Sample& s : samples) {
    if (s.id.empty()) throw std::runtime_error("manifest: empty sample id");
    if (s.image_path.empty()) {
      throw std::runtime_error("manifest: empty image path for id '" + s.id + "'");
    }
    if (!seen.insert(s.id).second) {
      throw std::runtime_error("manifest: duplicate id '" + s.id + "'");
    }
    ++m.counts[label_index(s.label)];
  }
  m.samples = std::move(samples);
  return m;
}

Manifest load_manifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("manifest: cannot open " + path.string());

  std::string line;
  if (!std::getline(in, line)) {
    throw std::runtime_error("manifest: empty file " + path.string());
  }
  if (trim(line) != "id,image_path,label") {
    throw std::runtime_error("manifest: bad header in " + path.string() +
                             " (expected 'id,image_path,label')");
  }

  Manifest m;
  std::set<std::string> seen;
  std::size_t row = 1;  // header was row 1
  while (std::getline(in, line)) {
    ++row;
    if (trim(line).empty()) continue;
    auto fields = split_csv_row(line);
    if (fields.size() != 3) {
      throw std::runtime_error("manifest row " + std::to_string(row) +
                               ": expected 3 fields, got " +
                               std::to_string(fields.size()));
    }
    Sample s;
    s.id = fields[0];
    s.image_path = fields[1];
    if (s.id.empty() || s.image_path.empty()) {
      throw std::runtime_error("manifest row " + std::to_string(row) +
                               ": empty id or image_path");
    }
    auto label = parse_label(fields[2]);
    if (!label) {
      throw std::runtime_error("manifest row " + std::to_string(row) +
                               ": unknown label '" + fields[2] + "'");
    }
    s.label = *label;
    if (!seen.insert(s.id).second) {
      throw std::runtime_error("manifest row " + std::to_string(row) +
                               ": duplicate id '" + s.id + "'");
    }
    ++m.counts[label_index(s.label)];
    m.samples.push_back(std::move(s));
  }
  return m;
}

void save_manifest(const std::filesystem::path& path, const Manifest& manifest) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("manifest: cannot write " + path.string());
  out << "id,image_path,label\n";
  for (const Sample& s : manifest.samples) {
    out << s.id << ',' << s.image_path << ',' << label_name(s.label) << '\n';
  }
}

std::array<double, kNumClasses> compute_class_weights(
    const std::array<std::size_t, kNumClasses>& counts) {
  std::size_t total = 0;
  for (std::size_t c : counts) total += c;
  std::array<double, kNumClasses> weights{};
  for (int i = 0; i < kNumClasses; ++i) {
    if (counts[i] == 0) {
      throw std::runtime_error(
          std::string("class weight undefined: zero count for class '") +
          std::string(label_name(static_cast<ClassLabel>(i))) + "'");
    }
    weights[i] = static_cast<double>(total) / static_cast<double>(counts[i]);
  }
  return weights;
}

int FoldAssignment::fold(const std::string& id) const {
  auto it = fold_of.find(id);
  if (it == fold_of.end()) {
    throw std::runtime_error("fold assignment: unknown sample id '" + id + "'");
  }
  return it->second;
}

FoldAssignment stratified_kfold(const Manifest& manifest, int k,
                                std::uint64_t seed) {
  if (k < 2) throw std::runtime_error("stratified_kfold: k must be >= 2");
  for (int c = 0; c < kNumClasses; ++c) {
    if (manifest.counts[c] > 0 &&
        manifest.counts[c] < static_cast<std::size_t>(k)) {
      throw std::runtime_error(
          std::string("stratified_kfold: class '") +
          std::string(label_name(static_cast<ClassLabel>(c))) + "' has " +
          std::to_string(manifest.counts[c]) + " samples, fewer than k=" +
          std::to_string(k));
    }
  }

  FoldAssignment assignment;
  assignment.k = k;
  assignment.seed = seed;
  assignment.fold_of.reserve(manifest.size());

  for (int c = 0; c < kNumClasses; ++c) {
    std::vector<const Sample*> members;
    for (const Sample& s : manifest.samples) {
      if (label_index(s.label) == c) members.push_back(&s);
    }
    RandomStream rng(mix_seed(seed, hash64(label_name(static_cast<ClassLabel>(c)))));
    for (std::size_t i = members.size(); i > 1; --i) {
      std::swap(members[i - 1], members[rng.uniform_int(i)]);
    }
    // Round-robin with a per-class starting offset so remainders spread
    // across folds instead of piling onto fold 0.
    for (std::size_t i = 0; i < members.size(); ++i) {
      assignment.fold_of[members[i]->id] = static_cast<int>((i + c) % k);
    }
  }
  return assignment;
}

FoldAssignment FoldAssignment::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("folds: cannot open " + path.string());
  std::string line;
  if (!std::getline(in, line) || trim(line) != "id,fold") {
    throw std::runtime_error("folds: bad header in " + path.string());
  }
  FoldAssignment a;
  int max_fold = -1;
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (trim(line).empty()) continue;
    auto fields = split_csv_row(line);
    if (fields.size() != 2) {
      throw std::runtime_error("folds row " + std::to_string(row) +
                               ": expected 2 fields");
    }
    int fold = -1;
    auto [ptr, ec] = std::from_chars(fields[1].data(),
                                     fields[1].data() + fields[1].size(), fold);
    if (ec != std::errc() || ptr != fields[1].data() + fields[1].size() ||
        fold < 0) {
      throw std::runtime_error("folds row " + std::to_string(row) +
                               ": bad fold index '" + fields[1] + "'");
    }
    if (!a.fold_of.emplace(fields[0], fold).second) {
      throw std::runtime_error("folds row " + std::to_string(row) +
                               ": duplicate id '" + fields[0] + "'");
    }
    max_fold = std::max(max_fold, fold);
  }
  a.k = max_fold + 1;
  return a;
}

void FoldAssignment::save(const std::filesystem::path& path,
                          const Manifest& manifest) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("folds: cannot write " + path.string());
  out << "id,fold\n";
  for (const Sample& s : manifest.samples) {
    out << s.id << ',' << fold(s.id) << '\n';
  }
}

}  // namespace pollenfuse
