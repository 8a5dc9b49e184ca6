#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "egodiv/graph.hpp"
#include "egodiv/reputation.hpp"
#include "egodiv/synthgen.hpp"

namespace egodiv {

/// Decimal non-negative 64-bit id. Throws ParseError tagged with `line`.
NodeId parse_node_id(std::string_view text, std::size_t line);

/// `<follower>\t<followee>` per line; `#` comments and blank lines skipped.
/// Any run of spaces or tabs separates the two ids.
std::vector<Edge> read_edge_list(std::istream& in);
std::vector<Edge> read_edge_list(const std::filesystem::path& path);
void write_edge_list(std::ostream& out, const FollowGraph& g);

/// One id per line, same comment rules as the edge list.
std::vector<NodeId> read_ego_list(std::istream& in);
std::vector<NodeId> read_ego_list(const std::filesystem::path& path);
void write_ego_list(std::ostream& out, std::span<const NodeId> egos);

/// Comma-separated table. An optional leading `# schema: <name> v<version>`
/// line is captured; other `#` lines and blank lines are skipped.
struct CsvTable {
  std::optional<std::string> schema;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::size_t> lines;  // source line of each row

  /// Column position; throws InputError naming the missing column.
  std::size_t column(std::string_view name) const;
  bool has_column(std::string_view name) const;
};

CsvTable read_csv(std::istream& in);
CsvTable read_csv(const std::filesystem::path& path);

/// Throws InputError unless `table.schema` is absent or equals `expected`.
void check_schema(const CsvTable& table, std::string_view expected);

/// Header `user,upvotes,thanks,favorites` (column order free). Negative or
/// malformed counts are rejected with their line number.
std::vector<PopularityRecord> read_popularity_csv(std::istream& in);
std::vector<PopularityRecord> read_popularity_csv(const std::filesystem::path& path);
void write_popularity_csv(std::ostream& out, std::span<const PopularityRecord> records);

void write_covariates_csv(std::ostream& out, std::span<const CovariateRecord> records);

/// Shortest text that round-trips the double.
std::string format_double(double value);

std::vector<std::string> split(std::string_view text, char sep);

}  // namespace egodiv
