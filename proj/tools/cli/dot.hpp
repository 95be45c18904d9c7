#pragma once

#include <string>

#include "hyperset/set_system.hpp"

namespace hyperset::cli {

/// Graphviz digraph of the membership graph below `root`. Nodes are emitted
/// in shortlex order of their canonical text; edges inside a membership
/// cycle are dashed and the root is drawn with a double border.
std::string export_dot(const SetSystem& sys, NodeId root);

}  // namespace hyperset::cli
