#pragma once

#include <string>

#include "qtwo/graph.hpp"

namespace qtwo {

// graph6 codec for graphs of order <= 62 (single-byte order field).
// Bit order is the standard one: x(0,1), x(0,2), x(1,2), x(0,3), ... --
// the upper triangle read column by column -- packed into 6-bit groups,
// most significant bit first, each group offset by 63.
//
// decode throws std::runtime_error naming the offending byte offset on
// malformed input; sparse6 (':') and extended-order ('~') strings are
// rejected explicitly.
Graph graph6_decode(const std::string& s);
std::string graph6_encode(const Graph& g);

}  // namespace qtwo
