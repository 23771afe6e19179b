#pragma once

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "hypermat/errors.hpp"
#include "hypermat/hypergraph.hpp"
#include "hypermat/tensor.hpp"

namespace hypermat {

/// Formats a double with 17 significant digits (round-trip exact).
inline std::string num17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

inline constexpr const char* kTensorFormat = "rtensor-v1";
inline constexpr const char* kGraphFormat = "rgraph-v1";

namespace detail {

inline nlohmann::json parse_json(std::istream& in) {
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::parse_error, e.what());
  }
}

inline std::string json_format_field(const nlohmann::json& doc) {
  require(doc.is_object() && doc.contains("format") && doc["format"].is_string(),
          Errc::parse_error, "document must carry a \"format\" string");
  return doc["format"].get<std::string>();
}

}  // namespace detail

/// Parses an rtensor-v1 document:
/// {"format":"rtensor-v1","order":r,"dims":[...],"entries":[{"idx":[...],"val":x},...]}
/// Unlisted entries are zero; duplicate idx is a hard error; idx 0-based.
inline Tensor<double> read_tensor_json(const nlohmann::json& doc) {
  require(detail::json_format_field(doc) == kTensorFormat, Errc::parse_error,
          "expected format rtensor-v1");
  try {
    const int order = doc.at("order").get<int>();
    Dims dims;
    for (const auto& d : doc.at("dims")) dims.push_back(d.get<Index>());
    std::vector<std::pair<MultiIndex, double>> coo;
    if (doc.contains("entries")) {
      for (const auto& e : doc.at("entries")) {
        MultiIndex idx;
        for (const auto& i : e.at("idx")) idx.push_back(i.get<Index>());
        coo.emplace_back(std::move(idx), e.at("val").get<double>());
      }
    }
    return from_coo(order, dims, coo);
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::parse_error, e.what());
  }
}

inline Tensor<double> read_tensor(std::istream& in) {
  return read_tensor_json(detail::parse_json(in));
}

/// Parses an rgraph-v1 document:
/// {"format":"rgraph-v1","r":r,"n":n,"edges":[{"verts":[...],"weight":w},...]}
/// verts strictly increasing, 0-based.
inline WeightedRGraph read_graph_json(const nlohmann::json& doc) {
  require(detail::json_format_field(doc) == kGraphFormat, Errc::parse_error,
          "expected format rgraph-v1");
  try {
    const int r = doc.at("r").get<int>();
    const Index n = doc.at("n").get<Index>();
    std::vector<WeightedRGraph::Edge> edges;
    if (doc.contains("edges")) {
      for (const auto& e : doc.at("edges")) {
        WeightedRGraph::Edge edge;
        for (const auto& v : e.at("verts")) edge.verts.push_back(v.get<Index>());
        for (size_t i = 1; i < edge.verts.size(); ++i)
          require(edge.verts[i] > edge.verts[i - 1], Errc::parse_error,
                  "verts must be strictly increasing");
        edge.weight = e.at("weight").get<double>();
        edges.push_back(std::move(edge));
      }
    }
    return WeightedRGraph(r, n, std::move(edges));
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::parse_error, e.what());
  }
}

inline WeightedRGraph read_graph(std::istream& in) {
  return read_graph_json(detail::parse_json(in));
}

/// Loads either format; graphs are converted to their adjacency tensor.
inline Tensor<double> read_tensor_any(std::istream& in) {
  const nlohmann::json doc = detail::parse_json(in);
  const std::string fmt = detail::json_format_field(doc);
  if (fmt == kTensorFormat) return read_tensor_json(doc);
  if (fmt == kGraphFormat) return adjacency_tensor(read_graph_json(doc));
  fail(Errc::parse_error, "unknown format: " + fmt);
}

/// Writes the nonzero entries in flat (row-major) order.
inline void write_tensor(const Tensor<double>& a, std::ostream& out) {
  out << "{\"format\":\"" << kTensorFormat << "\",\"order\":" << a.order() << ",\"dims\":[";
  for (int k = 0; k < a.order(); ++k) out << (k ? "," : "") << a.dims()[k];
  out << "],\"entries\":[";
  bool first = true;
  for_each_index(a.dims(), [&](const MultiIndex& idx, Index f) {
    if (a[f] == 0.0) return;
    out << (first ? "" : ",") << "{\"idx\":[";
    for (int k = 0; k < a.order(); ++k) out << (k ? "," : "") << idx[k];
    out << "],\"val\":" << num17(a[f]) << "}";
    first = false;
  });
  out << "]}\n";
}

inline void write_graph(const WeightedRGraph& g, std::ostream& out) {
  out << "{\"format\":\"" << kGraphFormat << "\",\"r\":" << g.r() << ",\"n\":" << g.n()
      << ",\"edges\":[";
  bool first = true;
  for (const auto& e : g.edges()) {
    out << (first ? "" : ",") << "{\"verts\":[";
    for (size_t i = 0; i < e.verts.size(); ++i) out << (i ? "," : "") << e.verts[i];
    out << "],\"weight\":" << num17(e.weight) << "}";
    first = false;
  }
  out << "]}\n";
}

inline Tensor<double> load_tensor_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), Errc::io_error, "cannot open " + path);
  return read_tensor_any(in);
}

inline WeightedRGraph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), Errc::io_error, "cannot open " + path);
  return read_graph(in);
}

}  // namespace hypermat
