#include <fstream>
#include <iostream>
#include <string>

#include <unistd.h>

#include <CLI11.hpp>

#include "cli/dot.hpp"
#include "cli/session.hpp"

namespace {

using namespace hyperset;
using namespace hyperset::cli;

int repl(Session& session, bool json) {
  const bool interactive = isatty(STDIN_FILENO);
  std::string line;
  std::size_t line_no = 0;
  int status = 0;
  while (true) {
    if (interactive) std::cout << "> " << std::flush;
    if (!std::getline(std::cin, line)) break;
    ++line_no;
    if (line == "quit" || line == "exit") break;
    try {
      const Command cmd = parse(line, line_no);
      if (cmd.kind == Command::Kind::Empty) continue;
      const EvalResult r = session.execute(cmd);
      if (json)
        std::cout << json_envelope(session, line, r) << "\n";
      else if (!r.text.empty())
        std::cout << r.text << "\n";
    } catch (const AssertionFailure& e) {
      std::cerr << "error: " << e.what() << "\n";
      status = std::max(status, 1);
    } catch (const Error& e) {
      std::cerr << "error: " << e.what() << "\n";
      status = 2;
    }
  }
  return interactive ? 0 : status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Explore finitely presented hypersets: infinitons, semi- and quasi-infinitons."};
  std::string batch;
  std::string dot_expr;
  std::string dot_out;
  bool json = false;
  SessionOptions options;
  app.add_option("--batch", batch, "Run a command file")->check(CLI::ExistingFile);
  app.add_option("--dot", dot_expr, "Export the membership graph of an expression");
  app.add_option("-o,--output", dot_out, "Output file for --dot (default stdout)");
  app.add_flag("--json", json, "Print results as JSON envelopes");
  app.add_option("--max-numeral", options.system.max_numeral, "Largest numeral literal")->capture_default_str();
  app.add_option("--quasi-max-len", options.functors.quasi_max_len, "Longest cycle for functor quasi (2..4)")
      ->check(CLI::Range(2, 4))
      ->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  Session session(options);

  if (!dot_expr.empty()) {
    try {
      const NodeId n = session.eval(parse_expr(dot_expr));
      const std::string dot = export_dot(session.system(), n);
      if (dot_out.empty()) {
        std::cout << dot;
      } else {
        std::ofstream out(dot_out);
        if (!(out << dot)) {
          std::cerr << "error: cannot write '" << dot_out << "'\n";
          return 2;
        }
      }
      return 0;
    } catch (const Error& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    }
  }

  if (!batch.empty()) {
    std::ifstream in(batch);
    const BatchReport report = run_batch(session, in, std::cout, json);
    if (report.exit_code != 0) std::cerr << batch << ": " << report.message << "\n";
    return report.exit_code;
  }

  return repl(session, json);
}
