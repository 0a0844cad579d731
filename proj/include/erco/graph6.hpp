#pragma once

#include <string>

#include "erco/graph.hpp"

namespace erco {

// graph6 interchange format, n <= 62 (single size byte).
std::string to_graph6(const SimpleGraph& g);
SimpleGraph from_graph6(const std::string& s);

// JSON edge-list alternative: {"n": int, "edges": [[i,j],...]}.
std::string to_json_edges(const SimpleGraph& g);
SimpleGraph from_json_edges(const std::string& text);

}  // namespace erco
