#include <algorithm>
#include <cctype>
#include <charconv>

#include "hyperset/error.hpp"
#include "hyperset/igs.hpp"
#include "hyperset/set_system.hpp"

namespace hyperset {

bool shortlex_less(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

const std::string& Serializer::operator()(NodeId s) {
  if (auto it = memo_.find(s.value); it != memo_.end()) return it->second;
  std::string out;
  if (const GenSpec* spec = sys_.tag(s)) {
    const GenSpec copy = *spec;
    switch (copy.kind) {
      case GenKind::Infiniton:
        out = "inf(" + (*this)(copy.base) + ")";
        break;
      case GenKind::Semi:
        out = "semi(" + (*this)(copy.cycle.front()) + ";" + (*this)(copy.base) + ")";
        break;
      case GenKind::Quasi: {
        out = "quasi([";
        for (std::size_t i = 0; i < copy.cycle.size(); ++i) {
          if (i > 0) out += ',';
          out += (*this)(copy.cycle[i]);
        }
        out += "];" + (*this)(copy.base) + ";" + std::to_string(copy.phase) + ")";
        break;
      }
    }
  } else {
    std::vector<std::string> parts;
    for (NodeId m : sys_.members(s)) parts.push_back((*this)(m));
    std::sort(parts.begin(), parts.end(), shortlex_less);
    out = "{";
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i > 0) out += ',';
      out += parts[i];
    }
    out += "}";
  }
  return memo_.emplace(s.value, std::move(out)).first->second;
}

std::string serialize(const SetSystem& sys, NodeId s) { return Serializer(sys)(s); }

namespace {

class CanonicalReader {
 public:
  CanonicalReader(SetSystem& sys, std::string_view text) : sys_(sys), text_(text) {}

  NodeId read() {
    const NodeId n = value();
    skip_space();
    if (pos_ != text_.size()) throw ParseError("trailing input", pos_);
    return n;
  }

 private:
  NodeId value() {
    skip_space();
    if (accept("{")) {
      std::vector<NodeId> members;
      skip_space();
      if (!accept("}")) {
        do members.push_back(value());
        while (accept(","));
        expect("}");
      }
      return sys_.make(std::move(members));
    }
    const std::size_t start = pos_;
    try {
      if (accept("inf(")) {
        const NodeId base = value();
        expect(")");
        return infiniton(sys_, base);
      }
      if (accept("semi(")) {
        const NodeId g = value();
        expect(";");
        const NodeId base = value();
        expect(")");
        return semi_infiniton(sys_, g, base);
      }
      if (accept("quasi(")) {
        expect("[");
        std::vector<NodeId> cycle;
        do cycle.push_back(value());
        while (accept(","));
        expect("]");
        expect(";");
        const NodeId base = value();
        expect(";");
        const std::size_t phase = natural();
        expect(")");
        return quasi_infiniton(sys_, cycle, base, phase);
      }
    } catch (const PreconditionError& e) {
      throw ParseError(e.what(), start);
    }
    throw ParseError("expected '{', 'inf(', 'semi(' or 'quasi('", pos_);
  }

  std::size_t natural() {
    skip_space();
    std::size_t v = 0;
    const char* first = text_.data() + pos_;
    auto [ptr, ec] = std::from_chars(first, text_.data() + text_.size(), v);
    if (ec != std::errc() || ptr == first) throw ParseError("expected natural number", pos_);
    pos_ += static_cast<std::size_t>(ptr - first);
    return v;
  }

  bool accept(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }

  void expect(std::string_view token) {
    if (!accept(token)) throw ParseError("expected '" + std::string(token) + "'", pos_);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  SetSystem& sys_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

NodeId deserialize(SetSystem& sys, std::string_view text) { return CanonicalReader(sys, text).read(); }

SetSystem canonicalize(const SetSystem& sys) {
  Serializer text(sys);
  std::vector<NodeId> order = reachable(sys, sys.root());
  std::sort(order.begin(), order.end(), [&](NodeId a, NodeId b) { return shortlex_less(text(a), text(b)); });

  SetSystem out(sys.options());
  std::unordered_map<NodeId, NodeId> remap;
  const auto mapped = [&](NodeId n) { return remap.at(n); };
  for (NodeId n : order) {
    if (const GenSpec* spec = sys.tag(n)) {
      GenSpec copy = *spec;
      copy.base = mapped(copy.base);
      for (NodeId& g : copy.cycle) g = mapped(g);
      remap[n] = out.make_igs(copy);
    } else {
      std::vector<NodeId> members;
      for (NodeId m : sys.members(n)) members.push_back(mapped(m));
      remap[n] = out.make(std::move(members));
    }
  }
  out.set_root(mapped(sys.root()));
  return out;
}

}  // namespace hyperset
