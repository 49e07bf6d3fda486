#pragma once

#include <cctype>
#include <cmath>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "mark/belief.hpp"
#include "mark/choice_tree.hpp"
#include "mark/error.hpp"
#include "mark/io/csv.hpp"

namespace mark::io {

using nlohmann::json;

enum class OutputFormat { table, json, csv };

/// Every knob a command reads. Unset optionals fall back to per-command defaults.
struct AnalysisConfig {
  std::optional<double> ioi;
  std::optional<double> iof;
  std::optional<OrderingMode> ordering;
  bool normalized = false;
  bool percent = false;
  double log_base = 2.0;
  std::vector<double> alphas{0.5, 2.0};
  std::vector<int> ks{1, 2};
  OutputFormat format = OutputFormat::table;
};

/// Flag values as given on the command line; only what was set overrides.
struct ConfigOverrides {
  std::optional<double> ioi;
  std::optional<double> iof;
  std::optional<std::string> ordering;
  bool normalized = false;
  bool percent = false;
  std::optional<double> log_base;
  std::vector<double> alphas;
  std::vector<int> ks;
  std::optional<std::string> format;
};

inline OrderingMode parse_ordering(std::string_view s) {
  if (s == "listed") return OrderingMode::listed;
  if (s == "by-probability" || s == "by_probability") return OrderingMode::by_probability;
  if (s == "composite") return OrderingMode::composite;
  throw Error(Errc::ParseError, "unknown ordering '" + std::string(s) +
                                    "' (listed|by-probability|composite)");
}

inline std::string_view to_string(OrderingMode m) {
  switch (m) {
    case OrderingMode::listed: return "listed";
    case OrderingMode::by_probability: return "by-probability";
    case OrderingMode::composite: return "composite";
  }
  return "listed";
}

inline OutputFormat parse_format(std::string_view s) {
  if (s == "table") return OutputFormat::table;
  if (s == "json") return OutputFormat::json;
  if (s == "csv") return OutputFormat::csv;
  throw Error(Errc::ParseError, "unknown format '" + std::string(s) + "' (table|json|csv)");
}

/// Parsed input file. CSV inputs fill only the fields their layout carries.
struct InputDocument {
  std::vector<std::string> labels;
  struct State {
    std::string name;
    double resource = 0.0;
    std::vector<double> values;
  };
  std::vector<State> states;
  std::vector<std::optional<int>> ranks;
  std::optional<ContinuousBelief> density;
  std::optional<ChoiceNode> tree;
  json config = json::object();
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::ParseError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline bool looks_like_json(const std::string& path, std::string_view text) {
  if (std::filesystem::path(path).extension() == ".json") return true;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) return c == '{';
  return false;
}

namespace detail {

inline double json_number(const json& j, const std::string& what) {
  if (!j.is_number()) throw Error(Errc::ParseError, what + " must be a number");
  return j.get<double>();
}

inline ChoiceNode parse_tree_node(const json& j, const std::string& where) {
  if (!j.is_object()) throw Error(Errc::ParseError, where + " must be an object");
  ChoiceNode node;
  if (!j.contains("label") || !j["label"].is_string())
    throw Error(Errc::ParseError, where + ".label must be a string");
  node.label = j["label"].get<std::string>();
  node.prob = j.contains("prob") ? json_number(j["prob"], where + ".prob") : 0.0;
  if (j.contains("children")) {
    if (!j["children"].is_array()) throw Error(Errc::ParseError, where + ".children must be an array");
    for (std::size_t i = 0; i < j["children"].size(); ++i)
      node.children.push_back(
          parse_tree_node(j["children"][i], where + ".children[" + std::to_string(i) + "]"));
  }
  return node;
}

}  // namespace detail

inline InputDocument parse_json_document(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::ParseError, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw Error(Errc::ParseError, "top-level JSON value must be an object");
  InputDocument doc;
  if (j.contains("candidates")) {
    for (const auto& c : j["candidates"]) {
      if (!c.is_string()) throw Error(Errc::ParseError, "candidates must be strings");
      doc.labels.push_back(c.get<std::string>());
    }
  }
  if (j.contains("states")) {
    if (!j["states"].is_array()) throw Error(Errc::ParseError, "states must be an array");
    std::size_t idx = 0;
    for (const auto& s : j["states"]) {
      ++idx;
      const std::string where = "states[" + std::to_string(idx - 1) + "]";
      InputDocument::State state;
      state.name = s.contains("name") && s["name"].is_string() ? s["name"].get<std::string>()
                                                               : std::to_string(idx);
      state.resource = s.contains("resource") ? detail::json_number(s["resource"], where + ".resource")
                                              : static_cast<double>(idx);
      if (!s.contains("probs") || !s["probs"].is_array())
        throw Error(Errc::ParseError, where + ".probs must be an array");
      for (const auto& p : s["probs"]) state.values.push_back(detail::json_number(p, where + ".probs"));
      doc.states.push_back(std::move(state));
    }
  }
  if (j.contains("ranks")) {
    for (const auto& r : j["ranks"]) {
      if (r.is_null()) {
        doc.ranks.emplace_back();
      } else if (r.is_number_integer()) {
        doc.ranks.emplace_back(r.get<int>());
      } else {
        throw Error(Errc::ParseError, "ranks must be integers or null");
      }
    }
  }
  if (j.contains("density")) {
    const auto& d = j["density"];
    std::vector<double> samples;
    for (const auto& v : d.value("samples", json::array())) samples.push_back(detail::json_number(v, "density.samples"));
    doc.density = make_continuous(detail::json_number(d.value("lo", json()), "density.lo"),
                                  detail::json_number(d.value("hi", json()), "density.hi"),
                                  std::move(samples), d.value("normalize", false));
  }
  if (j.contains("tree")) doc.tree = detail::parse_tree_node(j["tree"], "tree");
  if (j.contains("config")) {
    if (!j["config"].is_object()) throw Error(Errc::ParseError, "config must be an object");
    doc.config = j["config"];
  }
  return doc;
}

/// Header row of labels followed by exactly one row of probabilities.
inline InputDocument parse_state_csv(std::string_view text) {
  const auto rows = parse_csv(text);
  if (rows.size() != 2)
    throw Error(Errc::ParseError, "state CSV needs a header row and one data row, found " +
                                      std::to_string(rows.size()) + " rows");
  InputDocument doc;
  for (const auto& c : rows[0].cells) {
    if (c.text.empty()) parse_fail(rows[0].line, c.column, "empty candidate label");
    doc.labels.push_back(c.text);
  }
  const auto& data = rows[1];
  if (data.cells.size() != doc.labels.size())
    parse_fail(data.line, data.cells.back().column,
               "expected " + std::to_string(doc.labels.size()) + " values, found " +
                   std::to_string(data.cells.size()));
  InputDocument::State state{"1", 0.0, {}};
  for (const auto& c : data.cells) state.values.push_back(parse_number(c, data.line));
  doc.states.push_back(std::move(state));
  return doc;
}

/// Columns `state,resource,<label...>`, one row per state.
inline InputDocument parse_timeline_csv(std::string_view text) {
  const auto rows = parse_csv(text);
  if (rows.empty()) throw Error(Errc::ParseError, "timeline CSV is empty");
  const auto& header = rows[0];
  if (header.cells.size() < 4 || header.cells[0].text != "state" || header.cells[1].text != "resource")
    parse_fail(header.line, 1, "timeline header must be 'state,resource,<label>,<label>...'");
  InputDocument doc;
  for (std::size_t i = 2; i < header.cells.size(); ++i) {
    if (header.cells[i].text.empty()) parse_fail(header.line, header.cells[i].column, "empty candidate label");
    doc.labels.push_back(header.cells[i].text);
  }
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (row.cells.size() != header.cells.size())
      parse_fail(row.line, row.cells.back().column,
                 "expected " + std::to_string(header.cells.size()) + " cells, found " +
                     std::to_string(row.cells.size()));
    InputDocument::State state;
    state.name = row.cells[0].text;
    state.resource = parse_number(row.cells[1], row.line);
    for (std::size_t i = 2; i < row.cells.size(); ++i)
      state.values.push_back(parse_number(row.cells[i], row.line));
    doc.states.push_back(std::move(state));
  }
  return doc;
}

/// Columns `label,rank,prob`; an empty or '?' rank marks the candidate unranked.
inline InputDocument parse_order_csv(std::string_view text) {
  const auto rows = parse_csv(text);
  if (rows.empty()) throw Error(Errc::ParseError, "candidate CSV is empty");
  const auto& header = rows[0];
  if (header.cells.size() != 3 || header.cells[0].text != "label" || header.cells[1].text != "rank" ||
      header.cells[2].text != "prob")
    parse_fail(header.line, 1, "candidate header must be 'label,rank,prob'");
  InputDocument doc;
  InputDocument::State state{"1", 0.0, {}};
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (row.cells.size() != 3)
      parse_fail(row.line, row.cells.back().column, "expected 3 cells, found " + std::to_string(row.cells.size()));
    doc.labels.push_back(row.cells[0].text);
    const auto& rank = row.cells[1];
    if (rank.text.empty() || rank.text == "?") {
      doc.ranks.emplace_back();
    } else {
      const double v = parse_number(rank, row.line);
      if (v != std::floor(v) || v < 1) parse_fail(row.line, rank.column, "rank must be a positive integer");
      doc.ranks.emplace_back(static_cast<int>(v));
    }
    state.values.push_back(parse_number(row.cells[2], row.line));
  }
  doc.states.push_back(std::move(state));
  return doc;
}

/// Overlays the document's `config` block, then the command-line flags.
inline AnalysisConfig resolve_config(const json& file_config, const ConfigOverrides& flags) {
  AnalysisConfig cfg;
  try {
    if (file_config.contains("ioi")) cfg.ioi = file_config["ioi"].get<double>();
    if (file_config.contains("iof")) cfg.iof = file_config["iof"].get<double>();
    if (file_config.contains("ordering"))
      cfg.ordering = parse_ordering(file_config["ordering"].get<std::string>());
    cfg.normalized = file_config.value("normalized", false);
    cfg.percent = file_config.value("percent", false);
    cfg.log_base = file_config.value("log_base", 2.0);
    if (file_config.contains("alpha")) cfg.alphas = file_config["alpha"].get<std::vector<double>>();
    if (file_config.contains("k")) cfg.ks = file_config["k"].get<std::vector<int>>();
    if (file_config.contains("format"))
      cfg.format = parse_format(file_config["format"].get<std::string>());
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, std::string("bad config value: ") + e.what());
  }
  if (flags.ioi) cfg.ioi = flags.ioi;
  if (flags.iof) cfg.iof = flags.iof;
  if (flags.ordering) cfg.ordering = parse_ordering(*flags.ordering);
  cfg.normalized = cfg.normalized || flags.normalized;
  cfg.percent = cfg.percent || flags.percent;
  if (flags.log_base) cfg.log_base = *flags.log_base;
  if (!flags.alphas.empty()) cfg.alphas = flags.alphas;
  if (!flags.ks.empty()) cfg.ks = flags.ks;
  if (flags.format) cfg.format = parse_format(*flags.format);
  return cfg;
}

}  // namespace mark::io
