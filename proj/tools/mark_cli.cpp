// mark: file-driven front end for the knowledge metrics library.
//
//   mark state    <file> --ordering listed [--percent] [--normalized] ...
//   mark timeline <file> --ordering listed --percent --normalized
//   mark tree     <file> [--percent]
//   mark order    <file> [--percent]
//
// Exit codes: 0 success, 1 internal failure, 2 input or validation error.

#include <exception>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "mark/error.hpp"
#include "mark/io/commands.hpp"
#include "mark/io/input.hpp"

namespace {

enum class Command { state, timeline, tree, order };

mark::io::InputDocument load(const std::string& path, Command command) {
  const std::string text = mark::io::read_file(path);
  if (mark::io::looks_like_json(path, text)) return mark::io::parse_json_document(text);
  switch (command) {
    case Command::state: return mark::io::parse_state_csv(text);
    case Command::timeline: return mark::io::parse_timeline_csv(text);
    case Command::order: return mark::io::parse_order_csv(text);
    case Command::tree: break;
  }
  throw mark::Error(mark::Errc::ParseError, "tree input must be JSON");
}

std::string execute(Command command, const std::string& path, const mark::io::ConfigOverrides& flags) {
  const auto doc = load(path, command);
  const auto cfg = mark::io::resolve_config(doc.config, flags);
  switch (command) {
    case Command::state: return mark::io::render(mark::io::run_state(doc, cfg), cfg.format);
    case Command::timeline: {
      const auto report = mark::io::run_timeline(doc, cfg);
      for (const auto& w : report.warnings) std::cerr << "warning: " << w << "\n";
      return mark::io::render(report, cfg.format);
    }
    case Command::tree: return mark::io::render(mark::io::run_tree(doc, cfg), cfg.format);
    case Command::order: return mark::io::render(mark::io::run_order(doc, cfg), cfg.format);
  }
  return {};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Knowledge-gap metrics (ARK / MARK) for discrete and continuous beliefs"};
  app.require_subcommand(1);

  mark::io::ConfigOverrides flags;
  std::string input;
  std::string out_path;
  Command command = Command::state;

  auto add_common = [&](CLI::App* sub, bool analysis) {
    sub->add_option("input", input, "Input file (CSV or JSON)")->required();
    sub->add_flag("--percent", flags.percent, "Probabilities are given in percent");
    sub->add_option("--format", flags.format, "Output format: table|json|csv");
    sub->add_option("--out", out_path, "Write the report to this path instead of stdout");
    if (!analysis) return;
    sub->add_option("--ioi", flags.ioi, "Interval of indifference (columns, or axis units)");
    sub->add_option("--iof", flags.iof, "Interval of futility (columns, or axis units)");
    sub->add_option("--ordering", flags.ordering, "Candidate ordering: listed|by-probability|composite");
    sub->add_flag("--normalized", flags.normalized, "Report MARK rescaled so ignorance scores 1");
    sub->add_option("--log-base", flags.log_base, "Logarithm base for entropies (default 2)");
    sub->add_option("--alpha", flags.alphas, "Renyi/Tsallis orders");
    sub->add_option("--k", flags.ks, "Higher-order ARK orders");
  };

  auto* state = app.add_subcommand("state", "Metrics for a single belief state");
  add_common(state, true);
  state->callback([&] { command = Command::state; });
  auto* timeline = app.add_subcommand("timeline", "MARK signature and intractability over states");
  add_common(timeline, true);
  timeline->callback([&] { command = Command::timeline; });
  auto* tree = app.add_subcommand("tree", "Node and generational challenges of a choice tree");
  add_common(tree, false);
  tree->callback([&] { command = Command::tree; });
  auto* order = app.add_subcommand("order", "Arrange ranked/unranked candidates on one line");
  add_common(order, false);
  order->callback([&] { command = Command::order; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    const std::string report = execute(command, input, flags);
    if (out_path.empty()) {
      std::cout << report;
    } else {
      std::ofstream out(out_path, std::ios::binary);
      if (!out) {
        std::cerr << "error: cannot write '" << out_path << "'\n";
        return 2;
      }
      out << report;
    }
  } catch (const mark::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
