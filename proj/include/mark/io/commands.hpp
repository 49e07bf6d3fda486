#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "mark/belief.hpp"
#include "mark/choice_tree.hpp"
#include "mark/comparators.hpp"
#include "mark/error.hpp"
#include "mark/io/input.hpp"
#include "mark/io/reports.hpp"
#include "mark/knowledge.hpp"
#include "mark/ordering.hpp"
#include "mark/pi_profile.hpp"
#include "mark/tracking.hpp"

namespace mark::io {

namespace detail {

inline std::vector<double> scaled(const std::vector<double>& values, bool percent) {
  std::vector<double> out = values;
  if (percent)
    for (double& v : out) v /= 100.0;
  return out;
}

inline OrderingMode require_ordering(const AnalysisConfig& cfg) {
  if (!cfg.ordering)
    throw Error(Errc::ParseError, "--ordering is required (listed|by-probability|composite)");
  return *cfg.ordering;
}

inline std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return labels;
}

/// Belief for one state, arranged per the configured ordering.
inline DiscreteBelief arranged_belief(const InputDocument& doc, const std::vector<double>& values,
                                      const AnalysisConfig& cfg, OrderingMode mode) {
  auto labels = doc.labels.empty() ? default_labels(values.size()) : doc.labels;
  if (labels.size() != values.size())
    throw Error(Errc::InconsistentCandidates, "state has " + std::to_string(values.size()) +
                                                  " values for " + std::to_string(labels.size()) +
                                                  " candidates");
  auto belief = make_discrete(scaled(values, cfg.percent), mode, false, std::move(labels));
  if (mode == OrderingMode::composite && !doc.ranks.empty()) {
    if (doc.ranks.size() != belief.size())
      throw Error(Errc::LabelMismatch, "ranks and candidates differ in count");
    std::vector<RankedCandidate> cands;
    for (std::size_t i = 0; i < belief.size(); ++i)
      cands.push_back({belief.labels()[i], doc.ranks[i], belief.probs()[i]});
    belief = apply_ordering(belief, order_composite(cands));
  }
  return belief.canonical();
}

inline InterestWindow discrete_window(const AnalysisConfig& cfg, std::size_t n) {
  return {cfg.ioi.value_or(1.0), cfg.iof.value_or(static_cast<double>(n))};
}

}  // namespace detail

inline StateReport run_state(const InputDocument& doc, const AnalysisConfig& cfg) {
  StateReport report;
  if (doc.density) {
    const auto& belief = *doc.density;
    const InterestWindow window{cfg.ioi.value_or(belief.spacing()), cfg.iof.value_or(belief.length())};
    report.kind = "continuous";
    report.ordering = "listed";
    report.window = window;
    report.score = ark_continuous(belief, window);
    report.profile = pi_profile_continuous(belief, window);
    for (int k : cfg.ks) report.higher_order.push_back({k, ark_higher_order(report.profile, window, k).ark});
    report.shannon = shannon_continuous(belief, cfg.log_base);
    report.std_dev = std_dev(belief);
    return report;
  }
  if (doc.states.size() != 1)
    throw Error(Errc::ParseError, "state input must hold exactly one belief, found " +
                                      std::to_string(doc.states.size()));
  const auto mode = detail::require_ordering(cfg);
  const auto belief = detail::arranged_belief(doc, doc.states.front().values, cfg, mode);
  const auto window = detail::discrete_window(cfg, belief.size());
  report.kind = "discrete";
  report.ordering = std::string(to_string(mode));
  report.window = window;
  report.labels = belief.labels();
  report.probs.assign(belief.probs().begin(), belief.probs().end());
  report.score = score_discrete(belief, window);
  report.profile = pi_profile_discrete(belief, window);
  for (int k : cfg.ks) report.higher_order.push_back({k, ark_higher_order(report.profile, window, k).ark});
  const auto entropy = entropy_report(belief, cfg.alphas, cfg.log_base);
  report.shannon = entropy.shannon;
  report.shannon_normalized = entropy.shannon_normalized;
  for (const auto& [a, v] : entropy.renyi) report.renyi.push_back({a, v});
  for (const auto& [a, v] : entropy.tsallis) report.tsallis.push_back({a, v});
  report.std_dev = entropy.std_dev;
  return report;
}

inline TimelineReport run_timeline(const InputDocument& doc, const AnalysisConfig& cfg) {
  if (doc.states.size() < 2) throw Error(Errc::TooShort, "timeline needs at least two states");
  const auto mode = detail::require_ordering(cfg);
  TimelineReport report;
  report.ordering = std::string(to_string(mode));
  report.normalized = cfg.normalized;
  report.labels = doc.labels.empty() ? detail::default_labels(doc.states.front().values.size()) : doc.labels;
  report.window = detail::discrete_window(cfg, report.labels.size());

  std::vector<TrajectoryPoint> trajectory;
  for (std::size_t i = 0; i < doc.states.size(); ++i) {
    const auto& s = doc.states[i];
    if (i > 0 && !(s.resource > doc.states[i - 1].resource))
      throw Error(Errc::BadOrder, "resource must strictly increase (state '" + s.name + "')");
    auto belief = detail::arranged_belief(doc, s.values, cfg, mode);
    TimelineRow row;
    row.state = s.name;
    row.resource = s.resource;
    row.values = s.values;
    row.sum = std::accumulate(s.values.begin(), s.values.end(), 0.0);
    row.shannon = shannon_discrete(belief, cfg.log_base);
    row.shannon_normalized = shannon_normalized(belief);
    report.rows.push_back(std::move(row));
    // Arranged beliefs may carry state-specific label orders; windows are
    // already fixed, so the series runs in composite (as-is) mode.
    trajectory.push_back({s.resource, belief.with_labels({})});
  }
  const auto signature = mark_series(trajectory, report.window, OrderingMode::composite, cfg.normalized);
  for (std::size_t i = 0; i < signature.size(); ++i) report.rows[i].mark = signature.points()[i].mark;

  const auto& pts = signature.points();
  for (std::size_t i = 1; i < pts.size(); ++i) {
    SegmentValue seg{i - 1, i, std::nullopt};
    try {
      seg.value = apparent_intractability(pts[i - 1], pts[i]);
    } catch (const Error& e) {
      if (e.code() != Errc::NoProgress) throw;
    }
    report.apparent.push_back(seg);
  }
  const auto local = local_intractability(signature);
  report.local = local.segments;
  report.violations = local.violations;
  for (auto v : local.violations)
    report.warnings.push_back("MARK did not decrease between states '" + doc.states[v].name + "' and '" +
                              doc.states[v + 1].name + "'");
  try {
    report.overall = overall_intractability(signature);
  } catch (const Error& e) {
    if (e.code() != Errc::IncompleteSpan) throw;
    report.warnings.push_back("overall intractability omitted: MARK span 1 -> 0 not covered");
  }
  return report;
}

inline ChoiceNode scaled_tree(ChoiceNode node, bool percent) {
  if (percent) node.prob /= 100.0;
  for (auto& c : node.children) c = scaled_tree(std::move(c), percent);
  return node;
}

inline TreeReport run_tree(const InputDocument& doc, const AnalysisConfig& cfg) {
  if (!doc.tree) throw Error(Errc::ParseError, "input has no 'tree' object");
  const ChoiceTree tree(scaled_tree(*doc.tree, cfg.percent));
  TreeReport report;
  std::function<void(const ChoiceNode&, std::size_t)> walk = [&](const ChoiceNode& n, std::size_t depth) {
    TreeNodeReport node{n.label, depth, n.prob, std::nullopt, {}, {}};
    if (!n.is_leaf()) {
      const auto belief = node_challenge(n);
      node.challenge = score_discrete(belief, nominal_window(belief.size()));
      node.challenge_labels = belief.labels();
      node.challenge_probs.assign(belief.probs().begin(), belief.probs().end());
    }
    report.nodes.push_back(std::move(node));
    for (const auto& c : n.children) walk(c, depth + 1);
  };
  walk(tree.root(), 0);
  for (std::size_t level = 1; level <= tree.depth(); ++level) {
    const auto belief = generational_belief(tree, level);
    GenerationReport gen{level, belief.labels(), {}, score_discrete(belief, nominal_window(belief.size()))};
    gen.probs.assign(belief.probs().begin(), belief.probs().end());
    report.generations.push_back(std::move(gen));
  }
  return report;
}

inline OrderReport run_order(const InputDocument& doc, const AnalysisConfig& cfg) {
  if (doc.states.size() != 1) throw Error(Errc::ParseError, "candidate input needs one probability row");
  const auto& values = doc.states.front().values;
  if (doc.labels.size() != values.size())
    throw Error(Errc::LabelMismatch, "candidates and probabilities differ in count");
  if (!doc.ranks.empty() && doc.ranks.size() != values.size())
    throw Error(Errc::LabelMismatch, "ranks and candidates differ in count");
  const auto probs = detail::scaled(values, cfg.percent);
  std::vector<RankedCandidate> cands;
  for (std::size_t i = 0; i < values.size(); ++i)
    cands.push_back({doc.labels[i], doc.ranks.empty() ? std::nullopt : doc.ranks[i], probs[i]});
  const auto line = order_composite(cands);
  OrderReport report;
  for (std::size_t i = 0; i < line.candidates.size(); ++i) {
    const auto& c = line.candidates[i];
    report.line.push_back({c.label, c.rank, c.prob, std::string(to_string(line.provenance[i]))});
  }
  return report;
}

// ---------------------------------------------------------------- rendering

/// Six significant digits, no negative zero.
inline std::string num(double v) {
  if (v == 0.0) v = 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

inline std::string num(const std::optional<double>& v) { return v ? num(*v) : std::string("-"); }

inline std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

inline std::vector<std::string> nums(const std::vector<double>& v) {
  std::vector<std::string> out;
  for (double x : v) out.push_back(num(x));
  return out;
}

template <typename Report>
std::string render_json(const Report& report) {
  return json(report).dump(2) + "\n";
}

inline std::string render(const StateReport& r, OutputFormat format) {
  if (format == OutputFormat::json) return render_json(r);
  std::ostringstream out;
  if (format == OutputFormat::csv) {
    out << "metric,value\n";
    out << "ark," << num(r.score.ark) << "\n";
    out << "mark," << num(r.score.mark) << "\n";
    out << "mark_normalized," << num(r.score.mark_normalized) << "\n";
    for (const auto& h : r.higher_order) out << "ark_k" << h.k << "," << num(h.ark) << "\n";
    out << "shannon," << num(r.shannon) << "\n";
    out << "shannon_normalized," << num(r.shannon_normalized) << "\n";
    for (const auto& a : r.renyi) out << "renyi_" << num(a.alpha) << "," << num(a.value) << "\n";
    for (const auto& a : r.tsallis) out << "tsallis_" << num(a.alpha) << "," << num(a.value) << "\n";
    out << "std_dev," << num(r.std_dev) << "\n";
    out << "\nwidth,pi,argmax\n";
    for (std::size_t i = 0; i < r.profile.widths.size(); ++i)
      out << num(r.profile.widths[i]) << "," << num(r.profile.values[i]) << ","
          << num(r.profile.argmax_locations[i]) << "\n";
    return out.str();
  }
  out << "belief          " << r.kind << " (" << r.ordering << " order)\n";
  out << "window          ioi=" << num(r.window.ioi) << " iof=" << num(r.window.iof) << "\n";
  if (!r.labels.empty()) {
    out << "line            " << join(r.labels, " ") << "\n";
    out << "probabilities   " << join(nums(r.probs), " ") << "\n";
  }
  out << "ARK             " << num(r.score.ark) << "\n";
  out << "MARK            " << num(r.score.mark) << "\n";
  out << "MARK normalized " << num(r.score.mark_normalized) << "\n";
  for (const auto& h : r.higher_order) out << "ARK^" << h.k << "           " << num(h.ark) << "\n";
  out << "Shannon         " << num(r.shannon) << "\n";
  out << "Shannon norm.   " << num(r.shannon_normalized) << "\n";
  auto row = [&](const std::string& name, const AlphaValue& a) {
    std::string label = name + " a=" + num(a.alpha);
    label.resize(std::max<std::size_t>(label.size() + 1, 16), ' ');
    out << label << num(a.value) << "\n";
  };
  for (const auto& a : r.renyi) row("Renyi", a);
  for (const auto& a : r.tsallis) row("Tsallis", a);
  out << "std dev         " << num(r.std_dev) << "\n";
  out << "pi profile (width, pi, argmax):\n";
  for (std::size_t i = 0; i < r.profile.widths.size(); ++i)
    out << "  " << num(r.profile.widths[i]) << "  " << num(r.profile.values[i]) << "  "
        << num(r.profile.argmax_locations[i]) << "\n";
  return out.str();
}

inline std::string render(const TimelineReport& r, OutputFormat format) {
  if (format == OutputFormat::json) return render_json(r);
  std::ostringstream out;
  const std::string sep = format == OutputFormat::csv ? "," : "\t";
  out << "state" << sep << "resource" << sep << join(r.labels, sep) << sep << "sum" << sep << "shannon"
      << sep << "mark\n";
  for (const auto& row : r.rows)
    out << row.state << sep << num(row.resource) << sep << join(nums(row.values), sep) << sep
        << num(row.sum) << sep << num(row.shannon) << sep << num(row.mark) << "\n";
  out << "\nresource,mark,shannon_normalized\n";
  for (const auto& row : r.rows)
    out << num(row.resource) << "," << num(row.mark) << "," << num(row.shannon_normalized) << "\n";
  out << "\nfrom" << sep << "to" << sep << "apparent_intractability\n";
  for (const auto& seg : r.apparent)
    out << r.rows[seg.from].state << sep << r.rows[seg.to].state << sep
        << (seg.value ? num(*seg.value) : std::string("no-progress")) << "\n";
  out << "\nmark" << sep << "local_intractability\n";
  for (const auto& l : r.local) out << num(l.mark) << sep << num(l.dt_dm) << "\n";
  out << "\noverall_intractability" << sep << num(r.overall) << "\n";
  return out.str();
}

inline std::string render(const TreeReport& r, OutputFormat format) {
  if (format == OutputFormat::json) return render_json(r);
  std::ostringstream out;
  if (format == OutputFormat::csv) {
    out << "label,depth,prob,challenge_ark,challenge_mark\n";
    for (const auto& n : r.nodes)
      out << n.label << "," << n.depth << "," << num(n.prob) << ","
          << (n.challenge ? num(n.challenge->ark) : "") << ","
          << (n.challenge ? num(n.challenge->mark) : "") << "\n";
    out << "\nlevel,ark,mark,mark_normalized\n";
    for (const auto& g : r.generations)
      out << g.level << "," << num(g.score.ark) << "," << num(g.score.mark) << ","
          << num(g.score.mark_normalized) << "\n";
    return out.str();
  }
  for (const auto& n : r.nodes) {
    out << std::string(2 * n.depth, ' ') << n.label << " (" << num(n.prob) << ")";
    if (n.challenge) out << "  challenge ARK=" << num(n.challenge->ark) << " MARK=" << num(n.challenge->mark);
    out << "\n";
  }
  out << "\ngenerations:\n";
  for (const auto& g : r.generations)
    out << "  level " << g.level << "  ARK=" << num(g.score.ark) << " MARK=" << num(g.score.mark) << "  ["
        << join(g.labels, " ") << "]\n";
  return out.str();
}

inline std::string render(const OrderReport& r, OutputFormat format) {
  if (format == OutputFormat::json) return render_json(r);
  std::ostringstream out;
  const std::string sep = format == OutputFormat::csv ? "," : "\t";
  out << "position" << sep << "label" << sep << "rank" << sep << "prob" << sep << "provenance\n";
  for (std::size_t i = 0; i < r.line.size(); ++i) {
    const auto& e = r.line[i];
    out << i + 1 << sep << e.label << sep << (e.rank ? std::to_string(*e.rank) : "?") << sep << num(e.prob)
        << sep << e.provenance << "\n";
  }
  return out.str();
}

}  // namespace mark::io
