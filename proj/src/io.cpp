#include "genset/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace genset::io {
namespace {

std::string strip(std::string line) {
  if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
  const auto first = line.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = line.find_last_not_of(" \t\r");
  return line.substr(first, last - first + 1);
}

long long parse_integer(std::string_view text, const std::string& context) {
  long long value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end || text.empty()) {
    throw InvalidInput(context + ": expected an integer, got '" + std::string(text) + "'");
  }
  return value;
}

long long parse_header(const std::string& line, const std::string& key, const std::string& context) {
  const std::string prefix = key + "=";
  if (line.rfind(prefix, 0) != 0) throw InvalidInput(context + ": expected '" + prefix + "<int>'");
  return parse_integer(std::string_view(line).substr(prefix.size()), context);
}

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  return in;
}

}  // namespace

SubsetMask parse_set(const std::string& text, int n) {
  if (text == "-") return SubsetMask{};
  std::uint64_t bits = 0;
  long long previous = 0;
  std::string_view rest(text);
  while (true) {
    const auto comma = rest.find(',');
    std::string_view token = rest.substr(0, comma);
    while (!token.empty() && (token.front() == ' ' || token.front() == '\t')) token.remove_prefix(1);
    while (!token.empty() && (token.back() == ' ' || token.back() == '\t')) token.remove_suffix(1);
    const long long e = parse_integer(token, "set '" + text + "'");
    if (e < 1 || e > n) {
      throw InvalidInput("set '" + text + "': element " + std::to_string(e) + " outside 1.." + std::to_string(n));
    }
    if (e <= previous) throw InvalidInput("set '" + text + "': elements must be strictly ascending");
    previous = e;
    bits |= std::uint64_t{1} << (e - 1);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return SubsetMask(bits);
}

MadeFamily read_family(std::istream& in) {
  std::string raw;
  int line_no = 0;
  int n = 0;
  std::vector<SubsetMask> masks;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = strip(raw);
    if (line.empty()) continue;
    const std::string context = "family line " + std::to_string(line_no);
    if (n == 0) {
      const long long value = parse_header(line, "n", context);
      if (value < 1 || value > kMaxGroundSet) throw InvalidInput(context + ": n out of range");
      n = static_cast<int>(value);
      continue;
    }
    try {
      masks.push_back(parse_set(line, n));
    } catch (const InvalidInput& e) {
      throw InvalidInput(context + ": " + e.what());
    }
  }
  if (n == 0) throw InvalidInput("family file has no 'n=<int>' header");
  return make_family(n, std::move(masks));
}

MadeFamily read_family_file(const std::string& path) {
  auto in = open(path);
  return read_family(in);
}

void write_family(std::ostream& out, const SetFamily& family) {
  out << "n=" << family.n() << '\n';
  for (SubsetMask s : family.members()) out << s.to_string() << '\n';
}

Graph read_graph(std::istream& in) {
  std::string raw;
  int line_no = 0;
  bool have_header = false;
  Graph g;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = strip(raw);
    if (line.empty()) continue;
    const std::string context = "graph line " + std::to_string(line_no);
    if (!have_header) {
      const long long m = parse_header(line, "vertices", context);
      if (m < 0) throw InvalidInput(context + ": negative vertex count");
      g = Graph(static_cast<std::size_t>(m));
      have_header = true;
      continue;
    }
    std::istringstream fields(line);
    std::string a, b, extra;
    if (!(fields >> a >> b) || (fields >> extra)) throw InvalidInput(context + ": expected 'u v'");
    const long long u = parse_integer(a, context), v = parse_integer(b, context);
    if (u < 0 || v < 0) throw InvalidInput(context + ": negative vertex");
    try {
      g.add_edge(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
    } catch (const InvalidInput& e) {
      throw InvalidInput(context + ": " + e.what());
    }
  }
  if (!have_header) throw InvalidInput("graph file has no 'vertices=<m>' header");
  return g;
}

Graph read_graph_file(const std::string& path) {
  auto in = open(path);
  return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << "vertices=" << g.vertex_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

}  // namespace genset::io
