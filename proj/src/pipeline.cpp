#include "dosage/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <map>
#include <ostream>

#include <CLI11.hpp>

#include "dosage/driver.hpp"
#include "dosage/errors.hpp"
#include "dosage/generators.hpp"
#include "dosage/hgnn.hpp"
#include "dosage/hypergraph.hpp"
#include "dosage/io.hpp"

#ifndef DOSAGE_VERSION
#define DOSAGE_VERSION "unknown"
#endif

namespace dosage {

namespace {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

struct CommonOptions {
  std::string out_dir = ".";
  std::string format = "json";
};

struct ExtractionOptions {
  std::size_t k = 3;
  std::string lambda = "1";
  std::size_t alpha = 3;
  std::size_t beta = 6;
  std::string delta;
  bool ensure_coverage = false;
  std::string weights = "unit";
  std::size_t cap = 20;
  bool force = false;
};

struct Options {
  CommonOptions common;
  ExtractionOptions extraction;
  std::uint64_t seed = 0;
  std::string graph;
  std::string hypergraph;
  std::string solution;
  std::string subset;
  std::string cut_mode = "normalized";
  bool exact = false;
  std::string r_min = "0";
  // classify
  bool synthetic = false;
  std::string features;
  std::string labels;
  std::string feature_kind = "degree";
  std::size_t communities = 2;
  std::size_t community_size = 10;
  double p_intra = 0.8;
  std::size_t bridges = 2;
  std::uint64_t graph_seed = 7;
  double train_fraction = 0.2;
  std::size_t hidden = 16;
  std::size_t steps = 300;
  double step_size = 0.2;
  // rerun
  std::string manifest;
};

/// Collects output files and timings for the manifest.
class RunRecorder {
 public:
  RunRecorder(std::string subcommand, std::vector<std::string> args, fs::path out_dir)
      : subcommand_(std::move(subcommand)), args_(std::move(args)), out_dir_(std::move(out_dir)) {}

  void write(const std::string& name, std::string_view contents) {
    write_file_atomic(out_dir_ / name, contents);
    outputs_.push_back(name);
  }

  template <typename F>
  auto timed(const std::string& phase, F&& body) {
    const auto start = Clock::now();
    if constexpr (std::is_void_v<decltype(body())>) {
      body();
      record(phase, start);
    } else {
      auto value = body();
      record(phase, start);
      return value;
    }
  }

  void set_config(ordered_json config) { config_ = std::move(config); }

  void finish() {
    ordered_json manifest;
    manifest["format_version"] = kFormatVersion;
    manifest["tool"] = "dosage";
    manifest["version"] = DOSAGE_VERSION;
    manifest["eigen_version"] = std::to_string(EIGEN_WORLD_VERSION) + "." +
                                std::to_string(EIGEN_MAJOR_VERSION) + "." +
                                std::to_string(EIGEN_MINOR_VERSION);
    manifest["subcommand"] = subcommand_;
    manifest["args"] = args_;
    manifest["working_directory"] = fs::current_path().string();
    manifest["config"] = config_;
    manifest["outputs"] = outputs_;
    ordered_json timings;
    for (const auto& [phase, ms] : timings_) timings[phase] = ms;
    manifest["timings_ms"] = timings;
    write_file_atomic(out_dir_ / "manifest.json", dump_json(manifest));
  }

 private:
  void record(const std::string& phase, Clock::time_point start) {
    timings_.emplace_back(phase, std::chrono::duration<double, std::milli>(Clock::now() - start).count());
  }

  std::string subcommand_;
  std::vector<std::string> args_;
  fs::path out_dir_;
  std::vector<std::string> outputs_;
  std::vector<std::pair<std::string, double>> timings_;
  ordered_json config_ = ordered_json::object();
};

double parse_delta(const std::string& text) {
  if (text == "inf" || text == "infinity") return std::numeric_limits<double>::infinity();
  return Rational::parse(text).to_double();
}

DosageConfig make_config(const ExtractionOptions& o) {
  DosageConfig cfg{o.k, TradeoffParam::parse(o.lambda), SizeBounds(o.alpha, o.beta), std::nullopt,
                   EnumerationLimit{o.cap, o.force}};
  if (!o.delta.empty()) cfg.delta_override = parse_delta(o.delta);
  return cfg;
}

ordered_json config_json(const ExtractionOptions& o) {
  ordered_json cfg;
  cfg["k"] = o.k;
  cfg["lambda"] = o.lambda;
  cfg["alpha"] = o.alpha;
  cfg["beta"] = o.beta;
  cfg["delta"] = o.delta.empty() ? ordered_json(nullptr) : ordered_json(o.delta);
  cfg["ensure_coverage"] = o.ensure_coverage;
  cfg["weights"] = o.weights;
  cfg["cap"] = o.cap;
  cfg["force"] = o.force;
  return cfg;
}

ordered_json members_json(const SubgraphSelection& s, const LabelTable& labels) {
  auto members = ordered_json::array();
  for (const auto v : s) members.push_back(labels.label(v));
  return members;
}

ordered_json subgraph_json(const Graph& g, const SubgraphSelection& s, const LabelTable& labels) {
  ordered_json entry;
  entry["members"] = members_json(s, labels);
  entry["size"] = s.size();
  const Rational d = density(g, s).value_or(Rational(0));
  entry["density"] = d.to_double();
  entry["density_exact"] = d.str();
  entry["diameter"] = diameter(g, s) == kInfiniteDiameter ? ordered_json("inf") : ordered_json(diameter(g, s));
  return entry;
}

ordered_json delta_json(const DiameterBound& delta) {
  return delta.is_unbounded() ? ordered_json("inf") : ordered_json(delta.value());
}

SubgraphSelection parse_subset(const std::string& text, const LabelTable& labels) {
  std::vector<VertexId> members;
  for (const auto& field : split_csv_record(text)) {
    if (!field.empty()) members.push_back(labels.id(field));
  }
  return SubgraphSelection(std::move(members));
}

/// DOSAGE -> hypergraph, with the membership and guard invariants re-checked.
struct Extraction {
  DosageResult result;
  Hypergraph hypergraph;
};

Extraction run_extraction(const Graph& g, const ExtractionOptions& o, RunRecorder& recorder) {
  const DosageConfig cfg = make_config(o);
  DosageResult result = recorder.timed("dosage", [&] { return dosage(g, cfg); });

  const auto report = verify_solution(g, result.subgraphs, cfg, Rational(0));
  if (!report.size_ok || !report.overlap_ok || !report.vertices_ok) {
    throw InvariantViolation("DOSAGE produced a collection violating its own size or overlap guards");
  }
  for (const auto& s : result.subgraphs) {
    if (!result.delta.admits(diameter(g, s))) {
      throw InvariantViolation("DOSAGE produced a subgraph above the diameter bound");
    }
  }

  std::optional<std::vector<double>> weights;
  if (o.weights == "density") weights = density_weights(g, result.subgraphs);
  Hypergraph h = from_subgraphs(g, result.subgraphs, weights, cfg.bounds);
  if (o.ensure_coverage) h = ensure_coverage(h, g, cfg.bounds);
  for (std::size_t i = 0; i < result.subgraphs.size(); ++i) {
    if (h.hyperedge(i) != result.subgraphs[i]) {
      throw InvariantViolation("hyperedge " + std::to_string(i) + " does not match its subgraph");
    }
  }
  return {std::move(result), std::move(h)};
}

ordered_json extraction_report(const Graph& g, const Extraction& ex, const ExtractionOptions& o,
                               const LabelTable& labels) {
  ordered_json report;
  report["format_version"] = kFormatVersion;
  report["delta"] = delta_json(ex.result.delta);
  report["requested_k"] = o.k;
  report["found"] = ex.result.subgraphs.size();
  auto subgraphs = ordered_json::array();
  for (const auto& s : ex.result.subgraphs) subgraphs.push_back(subgraph_json(g, s, labels));
  report["subgraphs"] = std::move(subgraphs);
  if (!ex.result.subgraphs.empty()) {
    const Rational r = objective(g, ex.result.subgraphs, TradeoffParam::parse(o.lambda));
    report["objective"] = r.to_double();
    report["objective_exact"] = r.str();
  } else {
    report["objective"] = nullptr;
    report["objective_exact"] = nullptr;
  }
  const auto coverage = coverage_report(ex.hypergraph);
  auto uncovered = ordered_json::array();
  for (const auto v : coverage.uncovered) uncovered.push_back(labels.label(v));
  report["coverage"] = {{"covered", coverage.covered}, {"uncovered", uncovered}};
  std::size_t synthetic = 0;
  for (const bool flag : ex.hypergraph.synthetic()) synthetic += flag ? 1 : 0;
  report["synthetic_hyperedges"] = synthetic;
  return report;
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--out-dir", o.common.out_dir, "Directory for output files")->capture_default_str();
  sub->add_option("--format", o.common.format, "Matrix report format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  sub->add_option("--seed", o.seed, "Random seed")->capture_default_str();
}

void add_extraction(CLI::App* sub, Options& o) {
  auto& e = o.extraction;
  sub->add_option("--k", e.k, "Number of subgraphs (hyperedges)")->capture_default_str();
  sub->add_option("--lambda", e.lambda, "Density/diversity trade-off, > 0")->capture_default_str();
  sub->add_option("--alpha", e.alpha, "Minimum subgraph size")->capture_default_str();
  sub->add_option("--beta", e.beta, "Maximum subgraph size")->capture_default_str();
  sub->add_option("--delta", e.delta, "Diameter bound override (number or 'inf')");
  sub->add_flag("--ensure-coverage", e.ensure_coverage, "Add synthetic hyperedges for uncovered vertices");
  sub->add_option("--weights", e.weights, "Hyperedge weights")
      ->check(CLI::IsMember({"unit", "density"}))
      ->capture_default_str();
  sub->add_option("--cap", e.cap, "Maximum vertex count for exhaustive enumeration")->capture_default_str();
  sub->add_flag("--force", e.force, "Enumerate even above --cap");
}

LabeledGraph load_graph(const std::string& path) { return parse_edge_list(read_file(path)); }

void cmd_extract(const Options& o, RunRecorder& rec, std::ostream& out) {
  const auto input = rec.timed("parse", [&] { return load_graph(o.graph); });
  const auto ex = run_extraction(input.graph, o.extraction, rec);
  rec.write("hypergraph.json", dump_json(hypergraph_to_json(ex.hypergraph, input.labels)));
  rec.write("incidence.csv", emit_incidence_csv(ex.hypergraph, input.labels));
  rec.write("extract_report.json", dump_json(extraction_report(input.graph, ex, o.extraction, input.labels)));
  out << "extracted " << ex.result.subgraphs.size() << " of " << o.extraction.k << " subgraphs ("
      << ex.hypergraph.edge_count() << " hyperedges) into " << o.common.out_dir << '\n';
}

void cmd_oracle(const Options& o, RunRecorder& rec, std::ostream& out) {
  const auto input = load_graph(o.graph);
  const auto& g = input.graph;
  const SizeBounds bounds(o.extraction.alpha, o.extraction.beta);
  const DiameterBound delta = o.extraction.delta.empty() ? select_delta(g) : DiameterBound(parse_delta(o.extraction.delta));
  const auto peel = rec.timed("peel", [&] { return densest_subgraph_peel(g, bounds, delta); });
  const auto exact = rec.timed("exact", [&] {
    return densest_subgraph_exact(g, bounds, delta, EnumerationLimit{o.extraction.cap, o.extraction.force});
  });
  ordered_json report;
  report["format_version"] = kFormatVersion;
  report["delta"] = delta_json(delta);
  report["alpha"] = bounds.alpha();
  report["beta"] = bounds.beta();
  report["peel"] = peel ? subgraph_json(g, *peel, input.labels) : ordered_json(nullptr);
  report["exact"] = exact ? subgraph_json(g, *exact, input.labels) : ordered_json(nullptr);
  bool dominates = true;
  ordered_json ratio = nullptr;
  if (peel) {
    const Rational peel_density = *density(g, *peel);
    const Rational exact_density = exact ? *density(g, *exact) : Rational(-1);
    dominates = exact_density >= peel_density;
    if (exact_density > Rational(0)) ratio = (peel_density / exact_density).to_double();
  }
  report["exact_dominates"] = dominates;
  report["peel_to_exact_ratio"] = ratio;
  if (!dominates) throw InvariantViolation("exhaustive oracle found a sparser subgraph than peeling");
  rec.write("oracle_report.json", dump_json(report));
  out << "peel density " << (peel ? density(g, *peel)->to_double() : 0.0) << ", exact density "
      << (exact ? density(g, *exact)->to_double() : 0.0) << '\n';
}

template <typename Scalar>
ordered_json scalar_json(const Scalar& value) {
  if constexpr (std::is_same_v<Scalar, Rational>) {
    return value.str();
  } else {
    return value;
  }
}

template <typename Scalar>
void spectral_report(const BasicHypergraph<Scalar>& h, const LabelTable& labels, const Options& o,
                     RunRecorder& rec) {
  ordered_json report;
  report["format_version"] = kFormatVersion;
  report["mode"] = std::is_same_v<Scalar, Rational> ? "exact" : "float";
  const auto degrees = vertex_degrees(h);
  auto vd = ordered_json::object();
  for (VertexId v = 0; v < h.vertex_count(); ++v) vd[labels.label(v)] = scalar_json(Scalar(degrees(v)));
  report["vertex_degrees"] = std::move(vd);
  auto ed = ordered_json::array();
  for (std::size_t e = 0; e < h.edge_count(); ++e) ed.push_back(hyperedge_degree(h, e));
  report["hyperedge_degrees"] = std::move(ed);

  const Matrix<Scalar> A = adjacency(h);
  if (o.common.format == "json") {
    auto rows = ordered_json::array();
    for (Eigen::Index i = 0; i < A.rows(); ++i) {
      auto row = ordered_json::array();
      for (Eigen::Index j = 0; j < A.cols(); ++j) row.push_back(scalar_json(Scalar(A(i, j))));
      rows.push_back(std::move(row));
    }
    report["adjacency"] = std::move(rows);
  } else {
    std::string csv = "vertex";
    for (VertexId v = 0; v < h.vertex_count(); ++v) csv += "," + csv_field(labels.label(v));
    csv += '\n';
    for (Eigen::Index i = 0; i < A.rows(); ++i) {
      csv += csv_field(labels.label(static_cast<VertexId>(i)));
      for (Eigen::Index j = 0; j < A.cols(); ++j) {
        const auto cell = scalar_json(Scalar(A(i, j)));
        csv += "," + (cell.is_string() ? cell.template get<std::string>() : cell.dump());
      }
      csv += '\n';
    }
    rec.write("adjacency.csv", csv);
  }

  if (!o.subset.empty()) {
    const auto s = parse_subset(o.subset, labels);
    const auto mode = o.cut_mode == "literal" ? CutObjective::kLiteral : CutObjective::kNormalized;
    const auto c = cut(h, s, mode);
    auto boundary = ordered_json::array();
    for (const auto e : c.boundary) boundary.push_back(e);
    report["cut"] = {{"subset", members_json(s, labels)},
                     {"objective_mode", o.cut_mode},
                     {"boundary", boundary},
                     {"vol_s", scalar_json(c.vol_s)},
                     {"vol_sc", scalar_json(c.vol_sc)},
                     {"vol_boundary", scalar_json(c.vol_boundary)},
                     {"objective", c.objective ? scalar_json(*c.objective) : ordered_json(nullptr)}};
  }
  const auto coverage = coverage_report(h);
  report["coverage"] = {{"covered", coverage.covered}, {"uncovered", coverage.uncovered.size()}};
  rec.write("spectral_report.json", dump_json(report));
}

void cmd_spectral(const Options& o, RunRecorder& rec, std::ostream& out) {
  const auto doc = hypergraph_from_json(nlohmann::json::parse(read_file(o.hypergraph)));
  if (o.exact) {
    spectral_report(doc.hypergraph.cast<Rational>(), doc.labels, o, rec);
  } else {
    spectral_report(doc.hypergraph, doc.labels, o, rec);
  }
  out << "spectral report for " << doc.hypergraph.vertex_count() << " vertices, "
      << doc.hypergraph.edge_count() << " hyperedges\n";
}

void cmd_classify(const Options& o, RunRecorder& rec, std::ostream& out) {
  Hypergraph h;
  LabelTable labels;
  FeatureMatrix x;
  std::vector<std::size_t> classes;

  if (o.synthetic) {
    const std::vector<std::size_t> sizes(o.communities, o.community_size);
    auto planted = planted_partition(sizes, o.p_intra, o.bridges, o.graph_seed);
    labels = LabelTable::numeric(planted.graph.vertex_count());
    auto ex = run_extraction(planted.graph, o.extraction, rec);
    h = ensure_coverage(ex.hypergraph, planted.graph, SizeBounds(o.extraction.alpha, o.extraction.beta));
    x = o.feature_kind == "degree" ? degree_features(planted.graph) : identity_features(h.vertex_count());
    classes = std::move(planted.labels);
    rec.write("hypergraph.json", dump_json(hypergraph_to_json(h, labels)));
  } else {
    if (o.hypergraph.empty() || o.features.empty() || o.labels.empty()) {
      throw InputError("classify needs --synthetic or all of --hypergraph, --features, --labels");
    }
    auto doc = hypergraph_from_json(nlohmann::json::parse(read_file(o.hypergraph)));
    h = doc.hypergraph;
    labels = doc.labels;
    const auto feature_rows = parse_labeled_rows(read_file(o.features));
    const auto label_rows = parse_labeled_rows(read_file(o.labels));
    const auto n = h.vertex_count();
    if (feature_rows.labels.size() != n) throw InputError("--features must have one row per vertex");
    if (label_rows.labels.size() != n) throw InputError("--labels must have one row per vertex");
    x = FeatureMatrix::Zero(static_cast<Eigen::Index>(n),
                            static_cast<Eigen::Index>(feature_rows.values.front().size()));
    for (std::size_t i = 0; i < n; ++i) {
      const auto v = labels.id(feature_rows.labels[i]);
      for (std::size_t j = 0; j < feature_rows.values[i].size(); ++j) {
        x(v, static_cast<Eigen::Index>(j)) = feature_rows.values[i][j];
      }
    }
    classes.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      const double value = label_rows.values[i].front();
      if (value < 0 || value != std::floor(value)) throw InputError("--labels values must be class ids");
      classes[labels.id(label_rows.labels[i])] = static_cast<std::size_t>(value);
    }
  }

  const Split split = stratified_split(classes, o.train_fraction, o.seed);
  const TrainingConfig cfg{2, o.hidden, o.steps, o.step_size, o.seed};
  const Classifier model = rec.timed("train", [&] { return train_classifier(h, x, classes, split.train, cfg); });
  const Scores scores = evaluate(model, h, x, classes, split.test);

  std::map<std::size_t, std::size_t> counts;
  for (const auto v : split.test) ++counts[classes[v]];
  std::size_t majority = 0;
  for (const auto& [c, count] : counts) majority = std::max(majority, count);

  ordered_json report;
  report["format_version"] = kFormatVersion;
  report["train_size"] = split.train.size();
  report["test_size"] = split.test.size();
  report["accuracy"] = scores.accuracy;
  report["macro_f1"] = scores.macro_f1;
  report["majority_baseline"] = static_cast<double>(majority) / static_cast<double>(split.test.size());
  report["hyperedges"] = h.edge_count();
  rec.write("model.json", dump_json(classifier_to_json(model)));
  rec.write("classify_report.json", dump_json(report));
  out << "test accuracy " << scores.accuracy << ", macro F1 " << scores.macro_f1 << '\n';
}

void cmd_verify(const Options& o, RunRecorder& rec, std::ostream& out) {
  const auto input = load_graph(o.graph);
  const auto solution = nlohmann::json::parse(read_file(o.solution));
  if (!solution.contains("hyperedges")) throw InputError("solution file has no 'hyperedges' field");
  SubgraphCollection w;
  for (const auto& raw : solution.at("hyperedges")) {
    std::vector<VertexId> members;
    for (const auto& label : raw) members.push_back(input.labels.id(label.get<std::string>()));
    w.emplace_back(std::move(members));
  }
  DosageConfig cfg;
  cfg.bounds = SizeBounds(o.extraction.alpha, o.extraction.beta);
  const Rational r_min = Rational::parse(o.r_min);
  const auto report = verify_solution(input.graph, w, cfg, r_min);
  ordered_json doc;
  doc["format_version"] = kFormatVersion;
  doc["r_min"] = r_min.str();
  doc["vertices_ok"] = report.vertices_ok;
  doc["size_ok"] = report.size_ok;
  doc["density_ok"] = report.density_ok;
  doc["overlap_ok"] = report.overlap_ok;
  auto densities = ordered_json::array();
  for (const auto& d : report.per_entry_densities) densities.push_back(d.str());
  doc["per_entry_densities"] = std::move(densities);
  doc["verdict"] = report.verdict;
  rec.write("verify_report.json", dump_json(doc));
  out << "verdict: " << (report.verdict ? "accepted" : "rejected") << '\n';
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

void cmd_rerun(const Options& o, std::ostream& out, std::ostream& err, int& exit_code) {
  const auto manifest = nlohmann::json::parse(read_file(o.manifest));
  if (!manifest.contains("args") || !manifest.contains("working_directory")) {
    throw InputError("manifest lacks 'args' or 'working_directory'");
  }
  auto args = manifest.at("args").get<std::vector<std::string>>();
  if (!args.empty() && args.front() == "rerun") throw InputError("manifest records a rerun; nothing to replay");
  // An explicit --out-dir on the rerun replaces the recorded one.
  if (o.common.out_dir != ".") {
    const auto target = fs::absolute(o.common.out_dir).string();
    const auto it = std::find(args.begin(), args.end(), "--out-dir");
    if (it != args.end() && std::next(it) != args.end()) {
      *std::next(it) = target;
    } else {
      args.push_back("--out-dir");
      args.push_back(target);
    }
  }
  const fs::path caller_dir = fs::current_path();
  fs::current_path(manifest.at("working_directory").get<std::string>());
  try {
    exit_code = dispatch(args, out, err);
  } catch (...) {
    fs::current_path(caller_dir);
    throw;
  }
  fs::current_path(caller_dir);
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"DOSAGE: overlapping densest subgraphs as hyperedges"};
  app.require_subcommand(1);
  Options o;

  auto* extract = app.add_subcommand("extract", "Run DOSAGE and write the hypergraph (JSON + incidence CSV)");
  extract->add_option("--graph,graph", o.graph, "Edge list file")->required();
  add_common(extract, o);
  add_extraction(extract, o);

  auto* oracle = app.add_subcommand("oracle", "Compare greedy peeling with the exhaustive densest subgraph");
  oracle->add_option("--graph,graph", o.graph, "Edge list file")->required();
  add_common(oracle, o);
  add_extraction(oracle, o);

  auto* spectral = app.add_subcommand("spectral", "Degrees, adjacency and cut report for a hypergraph");
  spectral->add_option("--hypergraph,hypergraph", o.hypergraph, "Hypergraph JSON file")->required();
  spectral->add_option("--subset", o.subset, "Comma-separated vertex labels defining S for the cut report");
  spectral->add_option("--cut-mode", o.cut_mode, "Cut objective form")
      ->check(CLI::IsMember({"normalized", "literal"}))
      ->capture_default_str();
  spectral->add_flag("--exact", o.exact, "Exact rational arithmetic");
  add_common(spectral, o);

  auto* classify = app.add_subcommand("classify", "Train and evaluate the hypergraph convolution classifier");
  classify->add_flag("--synthetic", o.synthetic, "Use a planted-partition graph run through DOSAGE");
  classify->add_option("--hypergraph", o.hypergraph, "Hypergraph JSON (non-synthetic mode)");
  classify->add_option("--features", o.features, "Feature CSV: label,value,... (non-synthetic mode)");
  classify->add_option("--labels", o.labels, "Class CSV: label,class (non-synthetic mode)");
  classify->add_option("--feature-kind", o.feature_kind, "Synthetic features")
      ->check(CLI::IsMember({"identity", "degree"}))
      ->capture_default_str();
  classify->add_option("--communities", o.communities, "Synthetic community count")->capture_default_str();
  classify->add_option("--community-size", o.community_size, "Synthetic community size")->capture_default_str();
  classify->add_option("--p-intra", o.p_intra, "Synthetic intra-community edge probability")->capture_default_str();
  classify->add_option("--bridges", o.bridges, "Synthetic inter-community edges")->capture_default_str();
  classify->add_option("--graph-seed", o.graph_seed, "Synthetic graph seed")->capture_default_str();
  classify->add_option("--train-fraction", o.train_fraction, "Fraction of each class used for training")
      ->capture_default_str();
  classify->add_option("--hidden", o.hidden, "Hidden width")->capture_default_str();
  classify->add_option("--steps", o.steps, "Gradient descent steps")->capture_default_str();
  classify->add_option("--step-size", o.step_size, "Gradient descent step size")->capture_default_str();
  add_common(classify, o);
  add_extraction(classify, o);

  auto* verify = app.add_subcommand("verify", "Check a solution against size, density and overlap constraints");
  verify->add_option("--graph,graph", o.graph, "Edge list file")->required();
  verify->add_option("--solution", o.solution, "Hypergraph JSON whose hyperedges are the solution")->required();
  verify->add_option("--r-min", o.r_min, "Minimum density per subgraph")->capture_default_str();
  add_common(verify, o);
  add_extraction(verify, o);

  auto* rerun = app.add_subcommand("rerun", "Re-run the experiment recorded in a manifest");
  rerun->add_option("--manifest,manifest", o.manifest, "manifest.json from an earlier run")->required();
  rerun->add_option("--out-dir", o.common.out_dir, "Override the recorded output directory");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }

  if (rerun->parsed()) {
    int code = kExitSuccess;
    cmd_rerun(o, out, err, code);
    return code;
  }

  const auto* sub = app.get_subcommands().front();
  RunRecorder recorder(sub->get_name(), args, fs::path(o.common.out_dir));
  ordered_json config = config_json(o.extraction);
  config["seed"] = o.seed;
  recorder.set_config(std::move(config));
  if (extract->parsed()) {
    recorder.timed("total", [&] { cmd_extract(o, recorder, out); });
  } else if (oracle->parsed()) {
    recorder.timed("total", [&] { cmd_oracle(o, recorder, out); });
  } else if (spectral->parsed()) {
    recorder.timed("total", [&] { cmd_spectral(o, recorder, out); });
  } else if (classify->parsed()) {
    recorder.timed("total", [&] { cmd_classify(o, recorder, out); });
  } else if (verify->parsed()) {
    recorder.timed("total", [&] { cmd_verify(o, recorder, out); });
  }
  recorder.finish();
  return kExitSuccess;
}

}  // namespace

int run_pipeline(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  set_warning_handler([&err](std::string_view msg) { err << "warning: " << msg << '\n'; });
  struct RestoreWarnings {
    ~RestoreWarnings() { set_warning_handler(nullptr); }
  } restore;
  try {
    return dispatch(args, out, err);
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitCapRefusal;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed JSON input: " << e.what() << '\n';
    return kExitInputError;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const InvariantViolation& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInvariantViolation;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInvariantViolation;
  }
}

}  // namespace dosage
