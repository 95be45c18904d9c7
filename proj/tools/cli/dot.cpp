#include "cli/dot.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace hyperset::cli {

namespace {

constexpr std::size_t kMaxLabel = 24;

std::string label(const std::string& text) {
  std::string out = text.size() <= kMaxLabel ? text : text.substr(0, kMaxLabel - 3) + "...";
  std::string escaped;
  for (char c : out) {
    if (c == '"' || c == '\\') escaped += '\\';
    escaped += c;
  }
  return escaped;
}

}  // namespace

std::string export_dot(const SetSystem& sys, NodeId root) {
  Serializer text(sys);
  std::vector<NodeId> nodes = reachable(sys, root, false);
  std::sort(nodes.begin(), nodes.end(), [&](NodeId a, NodeId b) {
    const std::string& ta = text(a);
    const std::string& tb = text(b);
    return shortlex_less(ta, tb);
  });
  std::unordered_map<NodeId, std::size_t> index;
  for (std::size_t i = 0; i < nodes.size(); ++i) index.emplace(nodes[i], i);

  std::ostringstream out;
  out << "digraph hyperset {\n  rankdir=TB;\n  node [shape=circle, fontsize=10];\n";
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    out << "  n" << i << " [label=\"" << label(text(nodes[i])) << "\"";
    if (nodes[i] == root) out << ", peripheries=2";
    out << "];\n";
  }
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    std::vector<std::size_t> targets;
    for (NodeId m : sys.members(nodes[i])) targets.push_back(index.at(m));
    std::sort(targets.begin(), targets.end());
    for (std::size_t t : targets) {
      out << "  n" << i << " -> n" << t;
      if (sys.on_cycle(nodes[i]) && sys.on_cycle(nodes[t])) out << " [style=dashed]";
      out << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace hyperset::cli
