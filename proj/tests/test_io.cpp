#include <gtest/gtest.h>

#include <random>
#include <string>

#include "dosage/errors.hpp"
#include "dosage/generators.hpp"
#include "dosage/io.hpp"

namespace dosage {
namespace {

std::string error_of(std::string_view text) {
  try {
    parse_edge_list(text);
  } catch (const InputError& e) {
    return e.what();
  }
  return {};
}

TEST(EdgeList, Examples) {
  const auto parsed = parse_edge_list("a b\nb c");
  EXPECT_EQ(parsed.labels.labels(), (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_EQ(parsed.graph.edges(), (std::vector<Edge>{{0, 1}, {1, 2}}));

  EXPECT_NE(error_of("a a").find("line 1"), std::string::npos);
  EXPECT_NE(error_of("a a").find("self-loop"), std::string::npos);
  EXPECT_NE(error_of("# hdr\na b\n\na b").find("line 4"), std::string::npos);
  EXPECT_NE(error_of("a b\nb c d\n").find("line 2"), std::string::npos);
  EXPECT_NE(error_of("a\n").find("line 1"), std::string::npos);
}

TEST(EdgeList, ReversedDuplicateIsDetected) {
  EXPECT_NE(error_of("a b\nb a").find("line 2"), std::string::npos);
}

TEST(EdgeList, CommentsAndWhitespace) {
  const auto parsed = parse_edge_list("# comment\n  x\ty  \r\n\ny z # trailing\n");
  EXPECT_EQ(parsed.graph.vertex_count(), 3u);
  EXPECT_EQ(parsed.graph.edge_count(), 2u);
}

TEST(IncidenceCsv, Examples) {
  const Hypergraph h(5, {{0, 1, 2}, {2, 3, 4}});
  const LabelTable labels({"a", "b", "c", "d", "e"});
  const std::string csv = emit_incidence_csv(h, labels);
  EXPECT_EQ(csv, "vertex,e0,e1\na,1,0\nb,1,0\nc,1,1\nd,0,1\ne,0,1\n");

  EXPECT_EQ(emit_incidence_csv(Hypergraph(2, {}), LabelTable::numeric(2)), "vertex\n0\n1\n");
}

TEST(IncidenceCsv, QuotedLabelsRoundTrip) {
  const Hypergraph h(3, {{0, 2}});
  const LabelTable labels({"plain", "with,comma", "say \"hi\""});
  const auto back = parse_incidence_csv(emit_incidence_csv(h, labels));
  EXPECT_EQ(back.labels, labels);
  EXPECT_EQ(back.hypergraph, h);
}

TEST(HypergraphJson, RoundTripKeepsFlagsAndBounds) {
  const Hypergraph h(4, {{0, 1, 2}, {3}}, {0.75, 1.0}, {false, true}, SizeBounds(3, 4));
  const LabelTable labels({"w", "x", "y", "z"});
  const auto doc = hypergraph_to_json(h, labels);
  EXPECT_EQ(doc["format_version"], kFormatVersion);
  const auto back = hypergraph_from_json(nlohmann::json::parse(dump_json(doc)));
  EXPECT_EQ(back.hypergraph, h);
  EXPECT_EQ(back.labels, labels);
}

TEST(HypergraphJson, RejectsUnknownVersion) {
  auto doc = hypergraph_to_json(Hypergraph(1, {{0}}), LabelTable::numeric(1));
  doc["format_version"] = 99;
  EXPECT_THROW(hypergraph_from_json(nlohmann::json(doc)), InputError);
}

TEST(ClassifierJson, RoundTripIsExact) {
  const auto model = initialize_classifier(5, 3, {.hidden = 4, .seed = 12});
  const auto back = classifier_from_json(nlohmann::json::parse(dump_json(classifier_to_json(model))));
  EXPECT_EQ(back, model);
}

TEST(LabeledRows, SkipsHeader) {
  const auto rows = parse_labeled_rows("vertex,f0,f1\na,1,2\nb,3,4.5\n");
  EXPECT_EQ(rows.labels, (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(rows.values[1], (std::vector<double>{3, 4.5}));
  EXPECT_THROW(parse_labeled_rows("a,1\nb,x\n"), InputError);
}

TEST(Csv, SplitHonorsQuotes) {
  EXPECT_EQ(split_csv_record("a,\"b,c\",\"d\"\"e\""), (std::vector<std::string>{"a", "b,c", "d\"e"}));
  EXPECT_EQ(csv_field("x,y"), "\"x,y\"");
  EXPECT_EQ(csv_field("xy"), "xy");
}

}  // namespace
}  // namespace dosage
