#include "mmtw/io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "mmtw/errors.hpp"

namespace mmtw {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

[[noreturn]] void fail(int line, const std::string& what) {
  throw InputError("line " + std::to_string(line) + ": " + what);
}

long long to_int(std::string_view s, int line) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) fail(line, "expected an integer, got '" + std::string(s) + "'");
  return v;
}

template <class F>
void for_each_line(std::string_view text, F&& f) {
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    f(number, text.substr(pos, end - pos));
    if (end == text.size()) break;
    pos = end + 1;
  }
}

}  // namespace

Rational parse_rational(std::string_view s) {
  if (s.empty()) throw InputError("empty rational");
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    long long p = 0;
    long long q = 0;
    auto a = std::from_chars(s.data(), s.data() + slash, p);
    auto b = std::from_chars(s.data() + slash + 1, s.data() + s.size(), q);
    if (a.ec != std::errc() || a.ptr != s.data() + slash || b.ec != std::errc() || b.ptr != s.data() + s.size() ||
        q == 0) {
      throw InputError("malformed rational '" + std::string(s) + "'");
    }
    return Rational(p, q);
  }
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    const bool negative = s.front() == '-';
    std::string digits(s.substr(0, dot));
    std::string frac(s.substr(dot + 1));
    if (frac.empty() || frac.size() > 15 || frac.find_first_not_of("0123456789") != std::string::npos) {
      throw InputError("malformed rational '" + std::string(s) + "'");
    }
    long long whole = 0;
    std::string_view wv = digits;
    if (!wv.empty() && (wv.front() == '-' || wv.front() == '+')) wv.remove_prefix(1);
    if (!wv.empty()) {
      auto r = std::from_chars(wv.data(), wv.data() + wv.size(), whole);
      if (r.ec != std::errc() || r.ptr != wv.data() + wv.size()) throw InputError("malformed rational '" + std::string(s) + "'");
    }
    long long denom = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) denom *= 10;
    long long num = 0;
    std::from_chars(frac.data(), frac.data() + frac.size(), num);
    Rational r = Rational(whole) + Rational(num, denom);
    return negative ? -r : r;
  }
  long long v = 0;
  auto r = std::from_chars(s.data() + (s.front() == '+' ? 1 : 0), s.data() + s.size(), v);
  if (r.ec != std::errc() || r.ptr != s.data() + s.size()) throw InputError("malformed rational '" + std::string(s) + "'");
  return Rational(v);
}

std::string format_rational(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Hypergraph parse_hypergraph(std::string_view text) {
  bool header = false;
  long long n = 0;
  long long m = 0;
  long long seen_edges = 0;
  std::vector<VertexSet> edges;
  std::vector<std::pair<int, Rational>> weights;
  for_each_line(text, [&](int line, std::string_view raw) {
    const auto tok = split_ws(raw);
    if (tok.empty() || tok[0] == "c") return;
    if (tok[0] == "p") {
      if (header) fail(line, "second header line");
      if (tok.size() != 4 || tok[1] != "hg") fail(line, "expected 'p hg <n> <m>'");
      n = to_int(tok[2], line);
      m = to_int(tok[3], line);
      if (n < 0 || m < 0) fail(line, "negative count in header");
      header = true;
      return;
    }
    if (!header) fail(line, "missing 'p hg' header");
    auto vertex = [&](std::string_view s) {
      const long long v = to_int(s, line);
      if (v < 1 || v > n) fail(line, "vertex id " + std::string(s) + " out of range 1.." + std::to_string(n));
      return static_cast<int>(v - 1);
    };
    if (tok[0] == "e") {
      VertexSet e;
      for (std::size_t i = 1; i < tok.size(); ++i) e.insert(vertex(tok[i]));
      edges.push_back(std::move(e));
      ++seen_edges;
      return;
    }
    if (tok[0] == "w") {
      if (tok.size() != 3) fail(line, "expected 'w <v> <rational>'");
      const int v = vertex(tok[1]);
      try {
        weights.emplace_back(v, parse_rational(tok[2]));
      } catch (const InputError& e) {
        fail(line, e.what());
      }
      return;
    }
    fail(line, "unknown line type '" + std::string(tok[0]) + "'");
  });
  if (!header) throw InputError("line 1: missing 'p hg' header");
  if (seen_edges != m) {
    throw InputError("header announces " + std::to_string(m) + " edges but " + std::to_string(seen_edges) +
                     " were given");
  }
  Hypergraph h(static_cast<int>(n), std::move(edges));
  for (auto& [v, w] : weights) h.set_weight(v, w);
  return h;
}

std::string serialize_hypergraph(const Hypergraph& h) {
  std::ostringstream os;
  os << "p hg " << std::max(h.id_bound(), 0) << ' ' << h.num_edges() << '\n';
  for (const auto& e : h.edges()) {
    os << 'e';
    for (int v : e) os << ' ' << v + 1;
    os << '\n';
  }
  for (const auto& [v, w] : h.weights()) os << "w " << v + 1 << ' ' << format_rational(w) << '\n';
  return os.str();
}

TreeDecomposition parse_td(std::string_view text) {
  bool header = false;
  long long bags = 0;
  long long max_bag = 0;
  long long n = 0;
  std::vector<std::optional<VertexSet>> bag_of;
  std::set<std::pair<int, int>> edges;
  for_each_line(text, [&](int line, std::string_view raw) {
    const auto tok = split_ws(raw);
    if (tok.empty() || tok[0] == "c") return;
    if (tok[0] == "s") {
      if (header) fail(line, "second header line");
      if (tok.size() != 5 || tok[1] != "td") fail(line, "expected 's td <bags> <max_bag_size> <n>'");
      bags = to_int(tok[2], line);
      max_bag = to_int(tok[3], line);
      n = to_int(tok[4], line);
      if (bags < 0 || max_bag < 0 || n < 0) fail(line, "negative count in header");
      bag_of.assign(static_cast<std::size_t>(bags), std::nullopt);
      header = true;
      return;
    }
    if (!header) fail(line, "missing 's td' header");
    auto bag_id = [&](std::string_view s) {
      const long long id = to_int(s, line);
      if (id < 1 || id > bags) fail(line, "unknown bag id " + std::string(s));
      return static_cast<int>(id - 1);
    };
    if (tok[0] == "b") {
      if (tok.size() < 2) fail(line, "expected 'b <id> <v>...'");
      const int id = bag_id(tok[1]);
      if (bag_of[static_cast<std::size_t>(id)]) fail(line, "bag " + std::string(tok[1]) + " defined twice");
      VertexSet b;
      for (std::size_t i = 2; i < tok.size(); ++i) {
        const long long v = to_int(tok[i], line);
        if (v < 1 || v > n) fail(line, "vertex id " + std::string(tok[i]) + " out of range 1.." + std::to_string(n));
        b.insert(static_cast<int>(v - 1));
      }
      bag_of[static_cast<std::size_t>(id)] = std::move(b);
      return;
    }
    if (tok.size() != 2) fail(line, "expected a tree edge '<id1> <id2>'");
    const int a = bag_id(tok[0]);
    const int b = bag_id(tok[1]);
    if (a == b) fail(line, "tree edge is a self-loop");
    edges.emplace(std::min(a, b), std::max(a, b));
  });
  if (!header) throw InputError("line 1: missing 's td' header");
  TreeDecomposition t;
  t.num_vertices = static_cast<int>(n);
  for (std::size_t i = 0; i < bag_of.size(); ++i) {
    if (!bag_of[i]) throw InputError("bag " + std::to_string(i + 1) + " is never defined");
    t.bags.push_back(*bag_of[i]);
  }
  if (t.max_bag_size() != max_bag) {
    throw InputError("header announces max bag size " + std::to_string(max_bag) + " but the largest bag has " +
                     std::to_string(t.max_bag_size()));
  }
  t.edges.assign(edges.begin(), edges.end());
  check_tree(t);
  return t;
}

std::string serialize_td(const TreeDecomposition& t) {
  std::ostringstream os;
  os << "s td " << t.num_nodes() << ' ' << t.max_bag_size() << ' ' << t.num_vertices << '\n';
  for (int i = 0; i < t.num_nodes(); ++i) {
    os << "b " << i + 1;
    for (int v : t.bags[static_cast<std::size_t>(i)]) os << ' ' << v + 1;
    os << '\n';
  }
  std::set<std::pair<int, int>> edges;
  for (auto [a, b] : t.edges) edges.emplace(std::min(a, b), std::max(a, b));
  for (auto [a, b] : edges) os << a + 1 << ' ' << b + 1 << '\n';
  return os.str();
}

std::string serialize_id_map(const std::vector<std::string>& origins) {
  std::ostringstream os;
  for (std::size_t i = 0; i < origins.size(); ++i) os << "map " << i + 1 << ' ' << origins[i] << '\n';
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << contents;
}

}  // namespace mmtw
