#include "dosage/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "dosage/errors.hpp"

namespace dosage {

using ordered_json = nlohmann::ordered_json;

LabelTable::LabelTable(std::vector<std::string> labels) {
  for (const auto& label : labels) {
    if (ids_.contains(label)) throw InputError("duplicate vertex label '" + label + "'");
    intern(label);
  }
}

LabelTable LabelTable::numeric(std::size_t n) {
  LabelTable table;
  for (std::size_t v = 0; v < n; ++v) table.intern(std::to_string(v));
  return table;
}

VertexId LabelTable::id(std::string_view label) const {
  const auto it = ids_.find(std::string(label));
  if (it == ids_.end()) throw InputError("unknown vertex label '" + std::string(label) + "'");
  return it->second;
}

VertexId LabelTable::intern(std::string_view label) {
  const auto [it, inserted] = ids_.try_emplace(std::string(label), static_cast<VertexId>(labels_.size()));
  if (inserted) labels_.emplace_back(label);
  return it->second;
}

namespace {

std::vector<std::string_view> split_whitespace(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = text.find('\n', start);
    std::string_view line = text.substr(start, end == std::string_view::npos ? text.size() - start : end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

double parse_double(std::string_view text, const std::string& context) {
  double value = 0.0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw InputError(context + ": expected a number, got '" + std::string(text) + "'");
  }
  return value;
}

template <typename T>
T require(const nlohmann::json& doc, const char* key) {
  if (!doc.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  try {
    return doc.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("field '") + key + "': " + e.what());
  }
}

void check_format_version(const nlohmann::json& doc) {
  const auto version = require<int>(doc, "format_version");
  if (version != kFormatVersion) {
    throw InputError("unsupported format_version " + std::to_string(version));
  }
}

}  // namespace

LabeledGraph parse_edge_list(std::string_view text) {
  LabelTable labels;
  std::vector<Edge> edges;
  std::map<Edge, std::size_t> first_line;
  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    auto line = lines[i];
    line = line.substr(0, line.find('#'));
    const auto tokens = split_whitespace(line);
    if (tokens.empty()) continue;
    const std::string where = "line " + std::to_string(line_no);
    if (tokens.size() != 2) throw InputError(where + ": expected two vertex labels, got " + std::to_string(tokens.size()));
    if (tokens[0] == tokens[1]) throw InputError(where + ": self-loop on '" + std::string(tokens[0]) + "'");
    VertexId u = labels.intern(tokens[0]);
    VertexId v = labels.intern(tokens[1]);
    if (u > v) std::swap(u, v);
    const auto [it, inserted] = first_line.try_emplace(Edge{u, v}, line_no);
    if (!inserted) {
      throw InputError(where + ": duplicate edge " + std::string(tokens[0]) + " " +
                       std::string(tokens[1]) + " (first seen on line " + std::to_string(it->second) + ")");
    }
    edges.emplace_back(u, v);
  }
  Graph graph(labels.size(), edges);
  return {std::move(graph), std::move(labels)};
}

ordered_json hypergraph_to_json(const Hypergraph& h, const LabelTable& labels) {
  if (labels.size() != h.vertex_count()) throw InputError("label table does not match the vertex count");
  ordered_json doc;
  doc["format_version"] = kFormatVersion;
  doc["n"] = h.vertex_count();
  auto edges = ordered_json::array();
  for (const auto& edge : h.hyperedges()) {
    auto members = ordered_json::array();
    for (const auto v : edge) members.push_back(labels.label(v));
    edges.push_back(std::move(members));
  }
  doc["hyperedges"] = std::move(edges);
  doc["weights"] = h.weights();
  auto synthetic = ordered_json::array();
  for (const bool flag : h.synthetic()) synthetic.push_back(flag);
  doc["synthetic"] = std::move(synthetic);
  if (h.size_bounds()) {
    doc["bounds"] = {{"alpha", h.size_bounds()->alpha()}, {"beta", h.size_bounds()->beta()}};
  } else {
    doc["bounds"] = nullptr;
  }
  doc["labels"] = labels.labels();
  return doc;
}

HypergraphDocument hypergraph_from_json(const nlohmann::json& doc) {
  check_format_version(doc);
  const auto n = require<std::size_t>(doc, "n");
  LabelTable labels(require<std::vector<std::string>>(doc, "labels"));
  if (labels.size() != n) throw InputError("'labels' has " + std::to_string(labels.size()) + " entries, n is " + std::to_string(n));
  const auto raw_edges = require<std::vector<std::vector<std::string>>>(doc, "hyperedges");
  const auto weights = require<std::vector<double>>(doc, "weights");
  const auto synthetic = require<std::vector<bool>>(doc, "synthetic");
  if (weights.size() != raw_edges.size() || synthetic.size() != raw_edges.size()) {
    throw InputError("'hyperedges', 'weights' and 'synthetic' must have equal length");
  }
  std::optional<SizeBounds> bounds;
  if (doc.contains("bounds") && !doc.at("bounds").is_null()) {
    const auto& b = doc.at("bounds");
    bounds.emplace(require<std::size_t>(b, "alpha"), require<std::size_t>(b, "beta"));
  }
  std::vector<SubgraphSelection> edges;
  edges.reserve(raw_edges.size());
  for (const auto& raw : raw_edges) {
    std::vector<VertexId> members;
    for (const auto& label : raw) members.push_back(labels.id(label));
    edges.emplace_back(std::move(members));
  }
  Hypergraph h(n, std::move(edges), weights, synthetic, bounds);
  return {std::move(h), std::move(labels)};
}

std::string csv_field(std::string_view text) {
  if (text.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(text);
  std::string quoted = "\"";
  for (const char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

std::vector<std::string> split_csv_record(std::string_view line) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else {
      field += c;
    }
  }
  if (quoted) throw InputError("unterminated quoted CSV field");
  fields.push_back(std::move(field));
  return fields;
}

std::string emit_incidence_csv(const Hypergraph& h, const LabelTable& labels) {
  if (labels.size() != h.vertex_count()) throw InputError("label table does not match the vertex count");
  std::string out = "vertex";
  for (std::size_t e = 0; e < h.edge_count(); ++e) out += ",e" + std::to_string(e);
  out += '\n';
  for (VertexId v = 0; v < h.vertex_count(); ++v) {
    out += csv_field(labels.label(v));
    for (const auto& edge : h.hyperedges()) out += edge.contains(v) ? ",1" : ",0";
    out += '\n';
  }
  return out;
}

HypergraphDocument parse_incidence_csv(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw InputError("incidence CSV is empty");
  const auto header = split_csv_record(lines.front());
  if (header.empty() || header.front() != "vertex") throw InputError("line 1: incidence header must start with 'vertex'");
  const std::size_t m = header.size() - 1;
  for (std::size_t e = 0; e < m; ++e) {
    if (header[e + 1] != "e" + std::to_string(e)) throw InputError("line 1: expected column e" + std::to_string(e));
  }
  std::vector<std::string> labels;
  std::vector<std::vector<VertexId>> members(m);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto fields = split_csv_record(lines[i]);
    const std::string where = "line " + std::to_string(i + 1);
    if (fields.size() != m + 1) throw InputError(where + ": expected " + std::to_string(m + 1) + " fields");
    const auto v = static_cast<VertexId>(labels.size());
    labels.push_back(fields.front());
    for (std::size_t e = 0; e < m; ++e) {
      if (fields[e + 1] == "1") {
        members[e].push_back(v);
      } else if (fields[e + 1] != "0") {
        throw InputError(where + ": incidence entries must be 0 or 1");
      }
    }
  }
  std::vector<SubgraphSelection> edges;
  edges.reserve(m);
  for (auto& list : members) edges.emplace_back(std::move(list));
  const std::size_t n = labels.size();
  return {Hypergraph(n, std::move(edges)), LabelTable(std::move(labels))};
}

ordered_json classifier_to_json(const Classifier& model) {
  ordered_json doc;
  doc["format_version"] = kFormatVersion;
  doc["num_classes"] = model.num_classes;
  auto layers = ordered_json::array();
  for (const auto& layer : model.layers) {
    ordered_json entry;
    entry["activation"] = layer.activation == Activation::kRelu ? "relu" : "identity";
    auto rows = ordered_json::array();
    for (Eigen::Index i = 0; i < layer.weight.rows(); ++i) {
      auto row = ordered_json::array();
      for (Eigen::Index j = 0; j < layer.weight.cols(); ++j) row.push_back(layer.weight(i, j));
      rows.push_back(std::move(row));
    }
    entry["weight"] = std::move(rows);
    layers.push_back(std::move(entry));
  }
  doc["layers"] = std::move(layers);
  return doc;
}

Classifier classifier_from_json(const nlohmann::json& doc) {
  check_format_version(doc);
  Classifier model;
  model.num_classes = require<std::size_t>(doc, "num_classes");
  if (!doc.contains("layers") || !doc.at("layers").is_array()) throw InputError("missing 'layers' array");
  for (const auto& entry : doc.at("layers")) {
    const auto activation = require<std::string>(entry, "activation");
    ConvLayer layer;
    if (activation == "relu") {
      layer.activation = Activation::kRelu;
    } else if (activation == "identity") {
      layer.activation = Activation::kIdentity;
    } else {
      throw InputError("unknown activation '" + activation + "'");
    }
    const auto rows = require<std::vector<std::vector<double>>>(entry, "weight");
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    layer.weight.resize(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols));
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw InputError("ragged layer weight matrix");
      for (std::size_t j = 0; j < cols; ++j) {
        layer.weight(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
      }
    }
    model.layers.push_back(std::move(layer));
  }
  return model;
}

LabeledRows parse_labeled_rows(std::string_view text) {
  LabeledRows rows;
  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].empty() || lines[i].front() == '#') continue;
    const auto fields = split_csv_record(lines[i]);
    const std::string where = "line " + std::to_string(i + 1);
    if (fields.size() < 2) throw InputError(where + ": expected a label and at least one value");
    if (i == 0) {
      double probe = 0.0;
      const auto [ptr, ec] = std::from_chars(fields[1].data(), fields[1].data() + fields[1].size(), probe);
      if (ec != std::errc() || ptr != fields[1].data() + fields[1].size()) continue;  // header
    }
    std::vector<double> values;
    for (std::size_t f = 1; f < fields.size(); ++f) values.push_back(parse_double(fields[f], where));
    if (!rows.values.empty() && values.size() != rows.values.front().size()) {
      throw InputError(where + ": inconsistent column count");
    }
    rows.labels.push_back(fields.front());
    rows.values.push_back(std::move(values));
  }
  return rows;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file_atomic(const std::filesystem::path& path, std::string_view contents) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  auto temp = path;
  temp += ".tmp";
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot write '" + temp.string() + "'");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw InputError("failed writing '" + temp.string() + "'");
  }
  std::filesystem::rename(temp, path);
}

std::string dump_json(const ordered_json& doc) { return doc.dump(2) + "\n"; }

}  // namespace dosage
