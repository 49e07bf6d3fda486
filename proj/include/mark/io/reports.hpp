#pragma once

#include <cstddef>
#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "mark/belief.hpp"
#include "mark/knowledge.hpp"
#include "mark/pi_profile.hpp"
#include "mark/tracking.hpp"

namespace mark::io {

using nlohmann::json;

struct OrderValue {
  int k = 0;
  double ark = 0.0;
  friend bool operator==(const OrderValue&, const OrderValue&) = default;
};

struct AlphaValue {
  double alpha = 0.0;
  double value = 0.0;
  friend bool operator==(const AlphaValue&, const AlphaValue&) = default;
};

struct StateReport {
  std::string kind;  // "discrete" or "continuous"
  std::string ordering;
  InterestWindow window;
  std::vector<std::string> labels;  // line order
  std::vector<double> probs;        // line order, fractions
  KnowledgeScore score;
  std::vector<OrderValue> higher_order;
  double shannon = 0.0;
  std::optional<double> shannon_normalized;
  std::vector<AlphaValue> renyi;
  std::vector<AlphaValue> tsallis;
  std::optional<double> std_dev;
  PiProfile profile;
  friend bool operator==(const StateReport&, const StateReport&) = default;
};

struct TimelineRow {
  std::string state;
  double resource = 0.0;
  std::vector<double> values;  // as given (percent when --percent)
  double sum = 0.0;
  double shannon = 0.0;
  double shannon_normalized = 0.0;
  double mark = 0.0;
  friend bool operator==(const TimelineRow&, const TimelineRow&) = default;
};

struct SegmentValue {
  std::size_t from = 0;
  std::size_t to = 0;
  std::optional<double> value;  // empty when MARK did not drop
  friend bool operator==(const SegmentValue&, const SegmentValue&) = default;
};

struct TimelineReport {
  std::string ordering;
  InterestWindow window;
  bool normalized = false;
  std::vector<std::string> labels;
  std::vector<TimelineRow> rows;
  std::vector<SegmentValue> apparent;
  std::vector<LocalIntractability> local;
  std::vector<std::size_t> violations;
  std::optional<double> overall;
  std::vector<std::string> warnings;
  friend bool operator==(const TimelineReport&, const TimelineReport&) = default;
};

struct TreeNodeReport {
  std::string label;
  std::size_t depth = 0;
  double prob = 0.0;
  std::optional<KnowledgeScore> challenge;
  std::vector<std::string> challenge_labels;
  std::vector<double> challenge_probs;
  friend bool operator==(const TreeNodeReport&, const TreeNodeReport&) = default;
};

struct GenerationReport {
  std::size_t level = 0;
  std::vector<std::string> labels;
  std::vector<double> probs;
  KnowledgeScore score;
  friend bool operator==(const GenerationReport&, const GenerationReport&) = default;
};

struct TreeReport {
  std::vector<TreeNodeReport> nodes;  // preorder
  std::vector<GenerationReport> generations;
  friend bool operator==(const TreeReport&, const TreeReport&) = default;
};

struct OrderEntry {
  std::string label;
  std::optional<int> rank;
  double prob = 0.0;
  std::string provenance;
  friend bool operator==(const OrderEntry&, const OrderEntry&) = default;
};

struct OrderReport {
  std::vector<OrderEntry> line;
  friend bool operator==(const OrderReport&, const OrderReport&) = default;
};

}  // namespace mark::io

// JSON mapping. Optionals serialize as null.
namespace mark {

namespace io::detail {

template <typename T>
void put(nlohmann::json& j, const char* key, const std::optional<T>& v) {
  j[key] = v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

template <typename T>
void get(const nlohmann::json& j, const char* key, std::optional<T>& v) {
  if (j.contains(key) && !j.at(key).is_null())
    v = j.at(key).get<T>();
  else
    v.reset();
}

}  // namespace io::detail

inline void to_json(nlohmann::json& j, const InterestWindow& w) { j = {{"ioi", w.ioi}, {"iof", w.iof}}; }
inline void from_json(const nlohmann::json& j, InterestWindow& w) {
  w.ioi = j.at("ioi").get<double>();
  w.iof = j.at("iof").get<double>();
}

inline void to_json(nlohmann::json& j, const KnowledgeScore& s) {
  j = {{"ark", s.ark}, {"mark", s.mark}, {"order_k", s.order_k}};
  io::detail::put(j, "mark_normalized", s.mark_normalized);
}
inline void from_json(const nlohmann::json& j, KnowledgeScore& s) {
  s.ark = j.at("ark").get<double>();
  s.mark = j.at("mark").get<double>();
  s.order_k = j.at("order_k").get<int>();
  io::detail::get(j, "mark_normalized", s.mark_normalized);
}

inline void to_json(nlohmann::json& j, const PiProfile& p) {
  j = {{"kind", p.kind == ProfileKind::discrete ? "discrete" : "continuous"},
       {"widths", p.widths},
       {"values", p.values},
       {"argmax_locations", p.argmax_locations}};
}
inline void from_json(const nlohmann::json& j, PiProfile& p) {
  p.kind = j.at("kind").get<std::string>() == "discrete" ? ProfileKind::discrete : ProfileKind::continuous;
  p.widths = j.at("widths").get<std::vector<double>>();
  p.values = j.at("values").get<std::vector<double>>();
  p.argmax_locations = j.at("argmax_locations").get<std::vector<double>>();
}

inline void to_json(nlohmann::json& j, const LocalIntractability& l) {
  j = {{"mark", l.mark}, {"dt_dm", l.dt_dm}};
}
inline void from_json(const nlohmann::json& j, LocalIntractability& l) {
  l.mark = j.at("mark").get<double>();
  l.dt_dm = j.at("dt_dm").get<double>();
}

namespace io {

inline void to_json(json& j, const OrderValue& v) { j = {{"k", v.k}, {"ark", v.ark}}; }
inline void from_json(const json& j, OrderValue& v) {
  v.k = j.at("k").get<int>();
  v.ark = j.at("ark").get<double>();
}

inline void to_json(json& j, const AlphaValue& v) { j = {{"alpha", v.alpha}, {"value", v.value}}; }
inline void from_json(const json& j, AlphaValue& v) {
  v.alpha = j.at("alpha").get<double>();
  v.value = j.at("value").get<double>();
}

inline void to_json(json& j, const StateReport& r) {
  j = {{"command", "state"},       {"kind", r.kind},       {"ordering", r.ordering},
       {"window", r.window},       {"labels", r.labels},   {"probs", r.probs},
       {"score", r.score},         {"higher_order", r.higher_order},
       {"shannon", r.shannon},     {"renyi", r.renyi},     {"tsallis", r.tsallis},
       {"pi_profile", r.profile}};
  detail::put(j, "shannon_normalized", r.shannon_normalized);
  detail::put(j, "std_dev", r.std_dev);
}
inline void from_json(const json& j, StateReport& r) {
  r.kind = j.at("kind").get<std::string>();
  r.ordering = j.at("ordering").get<std::string>();
  r.window = j.at("window").get<InterestWindow>();
  r.labels = j.at("labels").get<std::vector<std::string>>();
  r.probs = j.at("probs").get<std::vector<double>>();
  r.score = j.at("score").get<KnowledgeScore>();
  r.higher_order = j.at("higher_order").get<std::vector<OrderValue>>();
  r.shannon = j.at("shannon").get<double>();
  r.renyi = j.at("renyi").get<std::vector<AlphaValue>>();
  r.tsallis = j.at("tsallis").get<std::vector<AlphaValue>>();
  r.profile = j.at("pi_profile").get<PiProfile>();
  detail::get(j, "shannon_normalized", r.shannon_normalized);
  detail::get(j, "std_dev", r.std_dev);
}

inline void to_json(json& j, const TimelineRow& r) {
  j = {{"state", r.state}, {"resource", r.resource}, {"values", r.values},
       {"sum", r.sum},     {"shannon", r.shannon},   {"shannon_normalized", r.shannon_normalized},
       {"mark", r.mark}};
}
inline void from_json(const json& j, TimelineRow& r) {
  r.state = j.at("state").get<std::string>();
  r.resource = j.at("resource").get<double>();
  r.values = j.at("values").get<std::vector<double>>();
  r.sum = j.at("sum").get<double>();
  r.shannon = j.at("shannon").get<double>();
  r.shannon_normalized = j.at("shannon_normalized").get<double>();
  r.mark = j.at("mark").get<double>();
}

inline void to_json(json& j, const SegmentValue& s) {
  j = {{"from", s.from}, {"to", s.to}};
  detail::put(j, "value", s.value);
}
inline void from_json(const json& j, SegmentValue& s) {
  s.from = j.at("from").get<std::size_t>();
  s.to = j.at("to").get<std::size_t>();
  detail::get(j, "value", s.value);
}

inline void to_json(json& j, const TimelineReport& r) {
  j = {{"command", "timeline"}, {"ordering", r.ordering},   {"window", r.window},
       {"normalized", r.normalized}, {"labels", r.labels},  {"rows", r.rows},
       {"apparent_intractability", r.apparent},           {"local_intractability", r.local},
       {"violations", r.violations}, {"warnings", r.warnings}};
  detail::put(j, "overall_intractability", r.overall);
}
inline void from_json(const json& j, TimelineReport& r) {
  r.ordering = j.at("ordering").get<std::string>();
  r.window = j.at("window").get<InterestWindow>();
  r.normalized = j.at("normalized").get<bool>();
  r.labels = j.at("labels").get<std::vector<std::string>>();
  r.rows = j.at("rows").get<std::vector<TimelineRow>>();
  r.apparent = j.at("apparent_intractability").get<std::vector<SegmentValue>>();
  r.local = j.at("local_intractability").get<std::vector<LocalIntractability>>();
  r.violations = j.at("violations").get<std::vector<std::size_t>>();
  r.warnings = j.at("warnings").get<std::vector<std::string>>();
  detail::get(j, "overall_intractability", r.overall);
}

inline void to_json(json& j, const TreeNodeReport& n) {
  j = {{"label", n.label}, {"depth", n.depth}, {"prob", n.prob},
       {"challenge_labels", n.challenge_labels}, {"challenge_probs", n.challenge_probs}};
  detail::put(j, "challenge", n.challenge);
}
inline void from_json(const json& j, TreeNodeReport& n) {
  n.label = j.at("label").get<std::string>();
  n.depth = j.at("depth").get<std::size_t>();
  n.prob = j.at("prob").get<double>();
  n.challenge_labels = j.at("challenge_labels").get<std::vector<std::string>>();
  n.challenge_probs = j.at("challenge_probs").get<std::vector<double>>();
  detail::get(j, "challenge", n.challenge);
}

inline void to_json(json& j, const GenerationReport& g) {
  j = {{"level", g.level}, {"labels", g.labels}, {"probs", g.probs}, {"score", g.score}};
}
inline void from_json(const json& j, GenerationReport& g) {
  g.level = j.at("level").get<std::size_t>();
  g.labels = j.at("labels").get<std::vector<std::string>>();
  g.probs = j.at("probs").get<std::vector<double>>();
  g.score = j.at("score").get<KnowledgeScore>();
}

inline void to_json(json& j, const TreeReport& r) {
  j = {{"command", "tree"}, {"nodes", r.nodes}, {"generations", r.generations}};
}
inline void from_json(const json& j, TreeReport& r) {
  r.nodes = j.at("nodes").get<std::vector<TreeNodeReport>>();
  r.generations = j.at("generations").get<std::vector<GenerationReport>>();
}

inline void to_json(json& j, const OrderEntry& e) {
  j = {{"label", e.label}, {"prob", e.prob}, {"provenance", e.provenance}};
  detail::put(j, "rank", e.rank);
}
inline void from_json(const json& j, OrderEntry& e) {
  e.label = j.at("label").get<std::string>();
  e.prob = j.at("prob").get<double>();
  e.provenance = j.at("provenance").get<std::string>();
  detail::get(j, "rank", e.rank);
}

inline void to_json(json& j, const OrderReport& r) { j = {{"command", "order"}, {"line", r.line}}; }
inline void from_json(const json& j, OrderReport& r) { r.line = j.at("line").get<std::vector<OrderEntry>>(); }

}  // namespace io
}  // namespace mark
