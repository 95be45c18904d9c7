#include "cli/parser.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace hyperset::cli {

namespace {

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) {
    if (!out.empty()) out += ", ";
    out += s;
  }
  return out;
}

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

const std::vector<std::string_view> kReserved = {"inf", "semi", "quasi", "null", "let", "assert", "load", "help",
                                                 "audit", "functor", "dot"};

class Reader {
 public:
  Reader(std::string_view text, std::size_t line) : text_(text), line_(line) {}

  Expr expr() {
    skip_space();
    if (accept('{')) {
      skip_space();
      if (accept('}')) return Expr{Expr::Kind::Empty, {}, 0, {}};
      Expr brace{Expr::Kind::Brace, {}, 0, {}};
      do brace.children.push_back(expr());
      while (accept(','));
      expect('}', {"','", "'}'"});
      return brace;
    }
    if (accept('*')) return Expr{Expr::Kind::Unpack, {expr()}, 0, {}};
    if (at_digit()) return Expr{Expr::Kind::Numeral, {}, natural(), {}};
    if (at_ident()) {
      const std::size_t start = pos_;
      const std::string word = ident();
      if (word == "null") return Expr{Expr::Kind::Null, {}, 0, {}};
      if (word == "inf") {
        expect('(', {"'('"});
        Expr e{Expr::Kind::Inf, {expr()}, 0, {}};
        expect(')', {"')'"});
        return e;
      }
      if (word == "semi") {
        expect('(', {"'('"});
        Expr e{Expr::Kind::Semi, {}, 0, {}};
        e.children.push_back(expr());
        expect(';', {"';'"});
        e.children.push_back(expr());
        expect(')', {"')'"});
        return e;
      }
      if (word == "quasi") {
        expect('(', {"'('"});
        expect('[', {"'['"});
        Expr e{Expr::Kind::Quasi, {}, 0, {}};
        do e.children.push_back(expr());
        while (accept(','));
        expect(']', {"','", "']'"});
        expect(';', {"';'"});
        e.children.push_back(expr());
        if (accept(';')) e.number = natural();
        expect(')', {"';'", "')'"});
        return e;
      }
      if (std::find(kReserved.begin(), kReserved.end(), word) != kReserved.end()) {
        pos_ = start;
        fail("reserved word '" + word + "' cannot be used as a variable", {"expression"});
      }
      return Expr{Expr::Kind::Var, {}, 0, word};
    }
    fail("expected an expression", {"'{'", "'*'", "natural", "identifier", "'null'", "'inf('", "'semi('", "'quasi('"});
  }

  std::string ident() {
    skip_space();
    if (!at_ident()) fail("expected an identifier", {"identifier"});
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::size_t natural() {
    skip_space();
    std::size_t v = 0;
    const char* first = text_.data() + pos_;
    auto [ptr, ec] = std::from_chars(first, text_.data() + text_.size(), v);
    if (ec != std::errc() || ptr == first) fail("expected a natural number", {"natural"});
    pos_ += static_cast<std::size_t>(ptr - first);
    return v;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c, std::vector<std::string> expected) {
    if (!accept(c)) fail(std::string("expected '") + c + "'", std::move(expected));
  }

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  bool at_ident() {
    skip_space();
    return pos_ < text_.size() && is_ident_start(text_[pos_]);
  }

  bool at_digit() {
    skip_space();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  std::string_view rest() {
    skip_space();
    return text_.substr(pos_);
  }

  void finish() {
    if (!at_end()) fail("unexpected trailing input", {"end of line"});
  }

  [[noreturn]] void fail(const std::string& message, std::vector<std::string> expected) const {
    throw SyntaxError(message, line_, pos_ + 1, std::move(expected));
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

const OperationInfo* find_operation(std::string_view name) {
  for (const auto& op : operations())
    if (op.name == name) return &op;
  return nullptr;
}

}  // namespace

SyntaxError::SyntaxError(std::string message, std::size_t line, std::size_t column, std::vector<std::string> expected)
    : ParseError(message, column == 0 ? 0 : column - 1),
      text_(std::to_string(line) + ":" + std::to_string(column) + ": " + message +
            (expected.empty() ? std::string() : " (expected one of: " + join(expected) + ")")),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

const std::vector<OperationInfo>& operations() {
  static const std::vector<OperationInfo> ops = {
      {"show", 1, 1, "show E            canonical text of E"},
      {"eq", 2, 2, "eq E1 E2          EZF equality"},
      {"bisim", 2, 2, "bisim E1 E2       structural bisimilarity"},
      {"why", 2, 2, "why E1 E2         what distinguishes E1 from E2"},
      {"rankv", 1, 1, "rankv E           rank in V (well-founded only)"},
      {"rankt", 1, 1, "rankt E           rank in the total universe"},
      {"dim", 1, 1, "dim E             membership dimension"},
      {"classify", 1, 1, "classify E        WF, NWF or TNWF"},
      {"partition", 1, 1, "partition E       rank stratum of E"},
      {"transitive", 1, 1, "transitive E      is E a transitive set"},
      {"omega", 1, 1, "omega E           is E omega-invariant"},
      {"regular", 1, 1, "regular E         does regularity hold for E"},
      {"tc", 1, 1, "tc E              transitive closure"},
      {"union", 2, 2, "union E1 E2"},
      {"inter", 2, 2, "inter E1 E2"},
      {"diff", 2, 2, "diff E1 E2"},
      {"product", 2, 2, "product E1 E2     Kuratowski product"},
      {"bigunion", 2, 2, "bigunion E k      k-fold union"},
      {"unfold", 2, 2, "unfold E k        k-th finite approximant"},
      {"homog", 3, 3, "homog E n k       homogeneity prefix check of E's generators"},
      {"sublimits", 1, 1, "sublimits Q       all phases of a quasi-infiniton"},
      {"spectrum", 1, 1, "spectrum n        size of P^(n)(0)"},
      {"functor", 1, 2, "functor inf|semi|quasi E [lmax]"},
  };
  return ops;
}

std::string render(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Empty:
      return "{}";
    case Expr::Kind::Brace: {
      std::string out = "{";
      for (std::size_t i = 0; i < e.children.size(); ++i) out += (i ? "," : "") + render(e.children[i]);
      return out + "}";
    }
    case Expr::Kind::Unpack:
      return "*" + render(e.children.at(0));
    case Expr::Kind::Numeral:
      return std::to_string(e.number);
    case Expr::Kind::Var:
      return e.name;
    case Expr::Kind::Null:
      return "null";
    case Expr::Kind::Inf:
      return "inf(" + render(e.children.at(0)) + ")";
    case Expr::Kind::Semi:
      return "semi(" + render(e.children.at(0)) + ";" + render(e.children.at(1)) + ")";
    case Expr::Kind::Quasi: {
      std::string out = "quasi([";
      for (std::size_t i = 0; i + 1 < e.children.size(); ++i) out += (i ? "," : "") + render(e.children[i]);
      return out + "];" + render(e.children.back()) + ";" + std::to_string(e.number) + ")";
    }
  }
  return {};
}

Expr parse_expr(std::string_view text) {
  Reader r(text, 1);
  Expr e = r.expr();
  r.finish();
  return e;
}

Command parse(std::string_view text, std::size_t line) {
  if (const auto hash = text.find('#'); hash != std::string_view::npos) text = text.substr(0, hash);
  Reader r(text, line);
  Command cmd;
  if (r.at_end()) return cmd;

  if (!r.at_ident()) {
    cmd.kind = Command::Kind::Query;
    cmd.name = "show";
    cmd.args.push_back(r.expr());
    r.finish();
    return cmd;
  }

  Reader probe = r;
  const std::string word = probe.ident();
  if (word == "assert") {
    const auto sep = text.find("==");
    if (sep == std::string_view::npos) {
      Reader at_end(text, line);
      while (!at_end.at_end()) at_end.ident();
      at_end.fail("assert needs '== expected'", {"'=='"});
    }
    const auto keyword = text.find("assert");
    const std::string_view body = text.substr(keyword + 6, sep - keyword - 6);
    cmd.kind = Command::Kind::Assert;
    cmd.inner = std::make_shared<Command>(parse(body, line));
    if (cmd.inner->kind == Command::Kind::Empty) r.fail("assert needs a command", {"command"});
    cmd.text = trim(text.substr(sep + 2));
    return cmd;
  }
  if (word == "let") {
    r.ident();
    cmd.kind = Command::Kind::Let;
    cmd.name = r.ident();
    if (std::find(kReserved.begin(), kReserved.end(), cmd.name) != kReserved.end() || find_operation(cmd.name))
      r.fail("cannot bind reserved word '" + cmd.name + "'", {"identifier"});
    r.expect('=', {"'='"});
    cmd.args.push_back(r.expr());
    r.finish();
    return cmd;
  }
  if (word == "help") {
    r.ident();
    r.finish();
    cmd.kind = Command::Kind::Help;
    return cmd;
  }
  if (word == "load") {
    r.ident();
    cmd.kind = Command::Kind::Load;
    cmd.text = trim(r.rest());
    if (cmd.text.empty()) r.fail("load needs a path", {"path"});
    return cmd;
  }
  if (word == "dot") {
    r.ident();
    cmd.kind = Command::Kind::Export;
    cmd.name = "dot";
    cmd.args.push_back(r.expr());
    r.finish();
    return cmd;
  }
  if (word == "audit") {
    r.ident();
    cmd.kind = Command::Kind::Audit;
    cmd.name = r.ident();
    if (cmd.name != "ezf" && cmd.name != "russell") r.fail("unknown audit '" + cmd.name + "'", {"'ezf'", "'russell'"});
    while (!r.at_end()) cmd.args.push_back(r.expr());
    if (cmd.args.empty()) r.fail("audit needs a stage index", {"natural"});
    if (cmd.name == "ezf" && cmd.args.size() != 1) r.fail("audit ezf takes one stage index", {"end of line"});
    return cmd;
  }
  if (word == "functor") {
    r.ident();
    cmd.kind = Command::Kind::Query;
    cmd.name = "functor";
    cmd.text = r.ident();
    if (cmd.text != "inf" && cmd.text != "semi" && cmd.text != "quasi")
      r.fail("unknown functor '" + cmd.text + "'", {"'inf'", "'semi'", "'quasi'"});
    cmd.args.push_back(r.expr());
    if (!r.at_end()) {
      if (cmd.text != "quasi") r.fail("only functor quasi takes a length bound", {"end of line"});
      cmd.args.push_back(r.expr());
    }
    r.finish();
    return cmd;
  }
  if (const OperationInfo* op = find_operation(word)) {
    r.ident();
    cmd.kind = Command::Kind::Query;
    cmd.name = word;
    while (!r.at_end()) cmd.args.push_back(r.expr());
    const int n = static_cast<int>(cmd.args.size());
    if (n < op->min_args || n > op->max_args)
      r.fail(std::string(word) + " takes " + std::to_string(op->min_args) + " argument(s): " + std::string(op->usage),
             {"expression"});
    return cmd;
  }

  // A bare expression that starts with an identifier.
  cmd.kind = Command::Kind::Query;
  cmd.name = "show";
  cmd.args.push_back(r.expr());
  r.finish();
  return cmd;
}

}  // namespace hyperset::cli
