#include "egodiv/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>

#include "egodiv/errors.hpp"

namespace egodiv {

namespace {

std::string_view trim(std::string_view s) {
  const auto not_space = [](char c) { return c != ' ' && c != '\t' && c != '\r' && c != '\n'; };
  auto begin = std::find_if(s.begin(), s.end(), not_space);
  auto end = std::find_if(s.rbegin(), s.rend(), not_space).base();
  return begin < end ? std::string_view(begin, static_cast<std::size_t>(end - begin)) : std::string_view{};
}

std::ifstream open(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  return in;
}

bool skippable(std::string_view line) { return line.empty() || line.front() == '#'; }

std::uint64_t parse_count(std::string_view text, std::size_t line, std::string_view column) {
  text = trim(text);
  if (!text.empty() && text.front() == '-') {
    throw ParseError(line, "negative count in column '" + std::string(column) + "'");
  }
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw ParseError(line, "bad count '" + std::string(text) + "' in column '" + std::string(column) + "'");
  }
  return value;
}

}  // namespace

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      out.emplace_back(trim(text.substr(start)));
      return out;
    }
    out.emplace_back(trim(text.substr(start, pos - start)));
    start = pos + 1;
  }
}

NodeId parse_node_id(std::string_view text, std::size_t line) {
  text = trim(text);
  NodeId value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ParseError(line, "bad node id '" + std::string(text) + "'");
  }
  return value;
}

std::vector<Edge> read_edge_list(std::istream& in) {
  std::vector<Edge> edges;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::string_view view = trim(line);
    if (skippable(view)) continue;
    const auto gap = view.find_first_of(" \t");
    if (gap == std::string_view::npos) throw ParseError(number, "expected two ids separated by a tab");
    const auto second = trim(view.substr(gap));
    if (second.find_first_of(" \t") != std::string_view::npos) {
      throw ParseError(number, "expected exactly two ids");
    }
    const Edge e{parse_node_id(view.substr(0, gap), number), parse_node_id(second, number)};
    if (e.from == e.to) throw ParseError(number, "self-loop on " + std::to_string(e.from));
    edges.push_back(e);
  }
  return edges;
}

std::vector<Edge> read_edge_list(const std::filesystem::path& path) {
  auto in = open(path);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const FollowGraph& g) {
  out << "# follower\tfollowee\n";
  for (LocalIndex v = 0; v < g.node_count(); ++v) {
    for (LocalIndex w : g.out_neighbors(v)) out << g.id_of(v) << '\t' << g.id_of(w) << '\n';
  }
}

std::vector<NodeId> read_ego_list(std::istream& in) {
  std::vector<NodeId> egos;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::string_view view = trim(line);
    if (skippable(view)) continue;
    egos.push_back(parse_node_id(view, number));
  }
  return egos;
}

std::vector<NodeId> read_ego_list(const std::filesystem::path& path) {
  auto in = open(path);
  return read_ego_list(in);
}

void write_ego_list(std::ostream& out, std::span<const NodeId> egos) {
  for (NodeId e : egos) out << e << '\n';
}

std::size_t CsvTable::column(std::string_view name) const {
  auto it = std::find(header.begin(), header.end(), name);
  if (it == header.end()) throw InputError("missing column '" + std::string(name) + "'");
  return static_cast<std::size_t>(it - header.begin());
}

bool CsvTable::has_column(std::string_view name) const {
  return std::find(header.begin(), header.end(), name) != header.end();
}

CsvTable read_csv(std::istream& in) {
  constexpr std::string_view schema_tag = "# schema:";
  CsvTable table;
  std::string line;
  std::size_t number = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++number;
    std::string_view view = trim(line);
    if (!have_header && view.starts_with(schema_tag)) {
      table.schema = std::string(trim(view.substr(schema_tag.size())));
      continue;
    }
    if (skippable(view)) continue;
    auto fields = split(view, ',');
    if (!have_header) {
      table.header = std::move(fields);
      have_header = true;
      continue;
    }
    if (fields.size() != table.header.size()) {
      throw ParseError(number, "expected " + std::to_string(table.header.size()) + " fields, found " +
                                   std::to_string(fields.size()));
    }
    table.rows.push_back(std::move(fields));
    table.lines.push_back(number);
  }
  if (!have_header) throw InputError("empty table: no header row");
  return table;
}

CsvTable read_csv(const std::filesystem::path& path) {
  auto in = open(path);
  return read_csv(in);
}

void check_schema(const CsvTable& table, std::string_view expected) {
  if (table.schema && *table.schema != expected) {
    throw InputError("schema mismatch: expected '" + std::string(expected) + "', found '" + *table.schema + "'");
  }
}

std::vector<PopularityRecord> read_popularity_csv(std::istream& in) {
  const CsvTable table = read_csv(in);
  const std::size_t user = table.column("user");
  const std::size_t up = table.column("upvotes");
  const std::size_t th = table.column("thanks");
  const std::size_t fav = table.column("favorites");
  std::vector<PopularityRecord> out;
  out.reserve(table.rows.size());
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    const std::size_t line = table.lines[r];
    out.push_back({parse_node_id(row[user], line), parse_count(row[up], line, "upvotes"),
                   parse_count(row[th], line, "thanks"), parse_count(row[fav], line, "favorites")});
  }
  return out;
}

std::vector<PopularityRecord> read_popularity_csv(const std::filesystem::path& path) {
  auto in = open(path);
  return read_popularity_csv(in);
}

void write_popularity_csv(std::ostream& out, std::span<const PopularityRecord> records) {
  out << "user,upvotes,thanks,favorites\n";
  for (const auto& r : records) out << r.user << ',' << r.upvotes << ',' << r.thanks << ',' << r.favorites << '\n';
}

void write_covariates_csv(std::ostream& out, std::span<const CovariateRecord> records) {
  out << "user,answer_count\n";
  for (const auto& r : records) out << r.user << ',' << r.answer_count << '\n';
}

std::string format_double(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return ec == std::errc{} ? std::string(buf, ptr) : std::string("nan");
}

}  // namespace egodiv
