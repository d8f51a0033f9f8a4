#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <nlohmann/json.hpp>

#include "dosage/hgnn.hpp"
#include "dosage/hypergraph.hpp"

namespace dosage {

inline constexpr int kFormatVersion = 1;

/// Dense ids <-> external vertex labels.
class LabelTable {
 public:
  LabelTable() = default;
  explicit LabelTable(std::vector<std::string> labels);
  /// "0", "1", ... "n-1".
  static LabelTable numeric(std::size_t n);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::string& label(VertexId v) const { return labels_.at(v); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  /// Throws InputError for an unknown label.
  VertexId id(std::string_view label) const;
  /// Assigns the next id to an unseen label.
  VertexId intern(std::string_view label);

  friend bool operator==(const LabelTable& a, const LabelTable& b) { return a.labels_ == b.labels_; }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, VertexId> ids_;
};

struct LabeledGraph {
  Graph graph;
  LabelTable labels;
};

/// "u v" per line; '#' starts a comment, blank lines are skipped; ids assigned in order of
/// first appearance. Malformed lines, self-loops, and duplicate edges throw
/// InputError naming the 1-based line number.
LabeledGraph parse_edge_list(std::string_view text);

struct HypergraphDocument {
  Hypergraph hypergraph;
  LabelTable labels;
};

nlohmann::ordered_json hypergraph_to_json(const Hypergraph& h, const LabelTable& labels);
HypergraphDocument hypergraph_from_json(const nlohmann::json& doc);

/// Header "vertex,e0,e1,..." then one 0/1 row per vertex (ascending id).
std::string emit_incidence_csv(const Hypergraph& h, const LabelTable& labels);
/// Inverse of emit_incidence_csv; weights come back as 1.0.
HypergraphDocument parse_incidence_csv(std::string_view text);

/// Quotes a CSV field when it contains a comma, quote, or line break.
std::string csv_field(std::string_view text);
/// Splits one CSV record, honoring double-quoted fields.
std::vector<std::string> split_csv_record(std::string_view line);

nlohmann::ordered_json classifier_to_json(const Classifier& model);
Classifier classifier_from_json(const nlohmann::json& doc);

/// Numeric CSV: optional header (ignored if its first field is non-numeric),
/// first column is the vertex label, remaining columns are values.
struct LabeledRows {
  std::vector<std::string> labels;
  std::vector<std::vector<double>> values;
};
LabeledRows parse_labeled_rows(std::string_view text);

std::string read_file(const std::filesystem::path& path);
/// Writes to a sibling temporary file and renames it into place.
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);
/// Pretty-printed JSON with a trailing newline.
std::string dump_json(const nlohmann::ordered_json& doc);

}  // namespace dosage
