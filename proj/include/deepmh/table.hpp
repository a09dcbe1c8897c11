#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "deepmh/net.hpp"

namespace deepmh {

/// Numeric CSV keyed by an explicit `case_id` first column. Unkeyed tables
/// (chain traces, loss curves) have no case_id column and no ids.
struct CaseTable {
  bool keyed = true;
  std::vector<std::string> case_ids;
  std::vector<std::string> columns;  // numeric columns, excluding case_id
  Matrix values;                     // rows x columns

  Eigen::Index rows() const { return values.rows(); }
  /// Index of `name`; -1 if absent.
  Eigen::Index find_column(std::string_view name) const;
  /// Column of `name`; throws ValidationError naming the column if absent.
  Vector column(std::string_view name) const;
  /// Columns prefix0, prefix1, ... (contiguous from 0). Throws if prefix0 is absent.
  Matrix numbered(std::string_view prefix) const;
  /// Like numbered(), but requires exactly `count` columns and names the first missing one.
  Matrix numbered(std::string_view prefix, Eigen::Index count) const;
};

CaseTable parse_case_table(std::string_view text, std::string_view source);
CaseTable read_case_table(const std::string& path);
CaseTable parse_numeric_csv(std::string_view text, std::string_view source);
CaseTable read_numeric_csv(const std::string& path);
std::string format_case_table(const CaseTable& table);
void write_case_table(const std::string& path, const CaseTable& table);

/// prefix0, ..., prefix{n-1}
std::vector<std::string> numbered_names(std::string_view prefix, Eigen::Index n);

}  // namespace deepmh
