#include "cli/session.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "cli/dot.hpp"
#include "hyperset/audit.hpp"
#include "hyperset/equality.hpp"
#include "hyperset/igs.hpp"
#include "hyperset/rank.hpp"

namespace hyperset::cli {

namespace {

constexpr std::size_t kMaxLoadDepth = 8;

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::string describe(const Command& cmd) {
  switch (cmd.kind) {
    case Command::Kind::Let:
      return "let " + cmd.name;
    case Command::Kind::Audit:
      return "audit " + cmd.name;
    case Command::Kind::Export:
      return cmd.name;
    case Command::Kind::Load:
      return "load";
    case Command::Kind::Assert:
      return "assert";
    default:
      return cmd.name.empty() ? "command" : cmd.name;
  }
}

std::string help_text() {
  std::string out =
      "let x = E         bind a variable\n"
      "E                 show the canonical form of E\n"
      "audit ezf n       closure audit of stage n\n"
      "audit russell n [samples...]\n"
      "dot E             Graphviz export\n"
      "load path         run a command file\n"
      "assert C == R     check that command C renders R\n";
  for (const auto& op : operations()) out += std::string(op.usage) + "\n";
  out.pop_back();
  return out;
}

}  // namespace

Session::Session(SessionOptions options) : options_(options), sys_(options.system) {}

std::string Session::show(NodeId n) { return serialize(sys_, n); }

NodeId Session::eval(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Empty:
      return sys_.empty();
    case Expr::Kind::Brace: {
      std::vector<Item> items;
      for (const Expr& c : e.children) {
        if (c.kind == Expr::Kind::Unpack)
          items.push_back(Item::unpack(eval(c.children.at(0))));
        else if (c.kind == Expr::Kind::Null)
          items.push_back(Item::nullity());
        else
          items.push_back(Item::plain(eval(c)));
      }
      return mk_set(sys_, items);
    }
    case Expr::Kind::Unpack:
      throw EvalError("'*" + render(e.children.at(0)) + "' can only appear inside braces");
    case Expr::Kind::Null:
      throw EvalError("'null' can only appear inside braces");
    case Expr::Kind::Numeral:
      return mk_numeral(sys_, e.number);
    case Expr::Kind::Var: {
      auto it = env_.find(e.name);
      if (it == env_.end()) throw EvalError("unbound variable '" + e.name + "'");
      return it->second;
    }
    case Expr::Kind::Inf:
      return infiniton(sys_, eval(e.children.at(0)));
    case Expr::Kind::Semi: {
      const NodeId g = eval(e.children.at(0));
      return semi_infiniton(sys_, g, eval(e.children.at(1)));
    }
    case Expr::Kind::Quasi: {
      std::vector<NodeId> cycle;
      for (std::size_t i = 0; i + 1 < e.children.size(); ++i) cycle.push_back(eval(e.children[i]));
      const NodeId base = eval(e.children.back());
      return quasi_infiniton(sys_, cycle, base, e.number);
    }
  }
  throw EvalError("unknown expression");
}

std::size_t Session::natural_arg(const Expr& e) {
  if (e.kind == Expr::Kind::Numeral) return e.number;
  if (auto n = as_numeral(sys_, eval(e))) return *n;
  throw EvalError("'" + render(e) + "' is not a natural number");
}

EvalResult Session::execute(std::string_view line, std::size_t line_no) { return execute(parse(line, line_no)); }

EvalResult Session::execute(const Command& cmd) {
  try {
    switch (cmd.kind) {
      case Command::Kind::Empty:
        return {};
      case Command::Kind::Help:
        return {help_text(), std::nullopt};
      case Command::Kind::Let: {
        const NodeId n = eval(cmd.args.at(0));
        env_[cmd.name] = n;
        return {cmd.name + " = " + show(n), n};
      }
      case Command::Kind::Query:
        return query(cmd);
      case Command::Kind::Audit:
        return audit(cmd);
      case Command::Kind::Export: {
        const NodeId n = eval(cmd.args.at(0));
        std::string dot = export_dot(sys_, n);
        dot.pop_back();
        return {dot, n};
      }
      case Command::Kind::Load:
        return load(cmd.text);
      case Command::Kind::Assert:
        return check(cmd);
    }
  } catch (const AssertionFailure&) {
    throw;
  } catch (const EvalError&) {
    throw;
  } catch (const Error& e) {
    throw EvalError(describe(cmd) + ": " + e.what());
  }
  return {};
}

EvalResult Session::query(const Command& cmd) {
  const std::string& op = cmd.name;
  const auto& a = cmd.args;
  auto set_result = [&](NodeId n) { return EvalResult{show(n), n}; };

  if (op == "spectrum") {
    const Stage stage = spectrum_stage(sys_, natural_arg(a[0]));
    return {std::to_string(stage.elements.size()), std::nullopt};
  }
  if (op == "functor") {
    const NodeId s = eval(a[0]);
    if (cmd.text == "inf") return set_result(functor_inf(sys_, s));
    if (cmd.text == "semi") return set_result(functor_semi(sys_, s));
    FunctorConfig cfg = options_.functors;
    if (a.size() > 1) cfg.quasi_max_len = natural_arg(a[1]);
    return set_result(functor_quasi(sys_, s, cfg));
  }

  const NodeId x = eval(a[0]);
  if (op == "show") return set_result(x);
  if (op == "rankv") return {to_string(rank_v(sys_, x)), x};
  if (op == "rankt") return {to_string(rank_t(sys_, x)), x};
  if (op == "dim") return {to_string(dimension(sys_, x)), x};
  if (op == "classify") return {std::string(to_string(classify(sys_, x))), x};
  if (op == "partition") return {partition_class(sys_, x).describe(), x};
  if (op == "transitive") return {yes_no(is_transitive(sys_, x)), x};
  if (op == "omega") return {yes_no(omega_invariant(sys_, x)), x};
  if (op == "tc") return set_result(transitive_closure(sys_, x));
  if (op == "regular") {
    const RegularityReport r = check_regularity(sys_, x);
    if (!r.holds) return {"fails", x};
    if (r.vacuous) return {"holds (vacuous)", x};
    return {"holds (witness " + show(*r.witness) + ")", x};
  }
  if (op == "sublimits") {
    const GenSpec* tag = sys_.tag(x);
    if (!tag || tag->kind != GenKind::Quasi) throw EvalError("sublimits: " + show(x) + " is not a quasi-infiniton");
    const GenSpec spec = *tag;
    std::string out;
    for (NodeId q : hyperset::sublimits(sys_, spec.cycle, spec.base)) out += (out.empty() ? "" : "\n") + show(q);
    return {out, x};
  }
  if (op == "bigunion") return set_result(big_union_k(sys_, x, natural_arg(a[1])));
  if (op == "unfold") return set_result(unfold(sys_, x, natural_arg(a[1])));
  if (op == "homog") {
    const GenSpec* tag = sys_.tag(x);
    if (!tag) throw EvalError("homog: " + show(x) + " is not infinitely generated");
    const GenSpec spec = *tag;
    return {yes_no(homogeneity_prefix_check(sys_, spec, natural_arg(a[1]), natural_arg(a[2]))), x};
  }

  const NodeId y = eval(a[1]);
  if (op == "eq") return {yes_no(ezf_equal(sys_, x, y).equal), std::nullopt};
  if (op == "bisim") return {yes_no(bisimilar(sys_, x, y)), std::nullopt};
  if (op == "why") {
    const auto d = eq_distinguish(sys_, x, y);
    return {d ? d->description : "equal", std::nullopt};
  }
  if (op == "union") return set_result(set_union(sys_, x, y));
  if (op == "inter") return set_result(set_intersect(sys_, x, y));
  if (op == "diff") return set_result(set_difference(sys_, x, y));
  if (op == "product") return set_result(set_product(sys_, x, y));
  throw EvalError("unknown operation '" + op + "'");
}

EvalResult Session::audit(const Command& cmd) {
  const std::size_t n = natural_arg(cmd.args.at(0));
  if (cmd.name == "ezf") return {ezf_closure_audit(sys_, n).summary(), std::nullopt};
  std::vector<NodeId> samples;
  for (std::size_t i = 1; i < cmd.args.size(); ++i) samples.push_back(eval(cmd.args[i]));
  if (samples.empty()) samples = standard_russell_samples(sys_);
  return {russell_audit(sys_, n, samples).audit.summary(), std::nullopt};
}

EvalResult Session::load(const std::string& path) {
  if (load_depth_ >= kMaxLoadDepth) throw EvalError("load: nesting deeper than " + std::to_string(kMaxLoadDepth));
  std::ifstream in(path);
  if (!in) throw EvalError("load: cannot open '" + path + "'");
  ++load_depth_;
  std::string out;
  std::string line;
  std::size_t line_no = 0;
  try {
    while (std::getline(in, line)) {
      ++line_no;
      const EvalResult r = execute(line, line_no);
      if (!r.text.empty()) out += (out.empty() ? "" : "\n") + r.text;
    }
  } catch (const AssertionFailure& e) {
    --load_depth_;
    throw AssertionFailure(path + ":" + std::to_string(line_no) + ": " + e.what());
  } catch (const Error& e) {
    --load_depth_;
    throw EvalError(path + ":" + std::to_string(line_no) + ": " + e.what());
  }
  --load_depth_;
  return {out, std::nullopt};
}

EvalResult Session::check(const Command& cmd) {
  const EvalResult actual = execute(*cmd.inner);
  if (trim(actual.text) == cmd.text) return {"ok", actual.node};
  // A set-valued command also matches any expression denoting the same set.
  if (actual.node && (cmd.inner->kind == Command::Kind::Let ||
                      (cmd.inner->kind == Command::Kind::Query && actual.text == show(*actual.node)))) {
    try {
      if (eval(parse_expr(cmd.text)) == *actual.node) return {"ok", actual.node};
    } catch (const Error&) {
      // Not an expression; fall through to the textual mismatch.
    }
  }
  throw AssertionFailure("assertion failed: expected '" + cmd.text + "', got '" + trim(actual.text) + "'");
}

std::string json_envelope(const Session& session, std::string_view command, const EvalResult& result) {
  nlohmann::json j;
  j["command"] = std::string(command);
  j["result"] = result.text;
  if (result.node) {
    const SetSystem& sys = session.system();
    const NodeId n = *result.node;
    nlohmann::json ranks;
    ranks["rank_v"] = sys.well_founded(n) ? nlohmann::json(to_string(rank_v(sys, n))) : nlohmann::json(nullptr);
    ranks["rank_t"] = to_string(rank_t(sys, n));
    ranks["dimension"] = to_string(dimension(sys, n));
    j["ranks"] = ranks;
    j["classification"] = std::string(to_string(classify(sys, n)));
  } else {
    j["ranks"] = nullptr;
    j["classification"] = nullptr;
  }
  return j.dump();
}

BatchReport run_batch(Session& session, std::istream& in, std::ostream& out, bool json) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    try {
      const Command cmd = parse(line, line_no);
      if (cmd.kind == Command::Kind::Empty) continue;
      const EvalResult r = session.execute(cmd);
      if (json)
        out << json_envelope(session, trim(line), r) << "\n";
      else if (!r.text.empty())
        out << r.text << "\n";
    } catch (const AssertionFailure& e) {
      return {1, line_no, "line " + std::to_string(line_no) + ": " + e.what()};
    } catch (const SyntaxError& e) {
      return {2, line_no, std::string("syntax error at ") + e.what()};
    } catch (const Error& e) {
      return {2, line_no, "line " + std::to_string(line_no) + ": " + e.what()};
    }
  }
  return {};
}

}  // namespace hyperset::cli
