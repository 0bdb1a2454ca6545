#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mmtw/decomposition.hpp"
#include "mmtw/hypergraph.hpp"

namespace mmtw {

/// `p hg <n> <m>`, `e <v>...`, `w <v> <rational>`, `c ...` comments; 1-based ids.
/// Throws InputError with the offending line number.
Hypergraph parse_hypergraph(std::string_view text);
/// Canonical form: header, edges in canonical order, then weights by vertex id.
std::string serialize_hypergraph(const Hypergraph& h);

/// `s td <bags> <max_bag_size> <n>`, `b <id> <v>...`, tree edges `<id1> <id2>`.
TreeDecomposition parse_td(std::string_view text);
std::string serialize_td(const TreeDecomposition& t);

/// Accepts integers, decimals and p/q.
Rational parse_rational(std::string_view s);
std::string format_rational(const Rational& r);

/// `map <new_id> <origin>` lines.
std::string serialize_id_map(const std::vector<std::string>& origins);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace mmtw
