#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qu2/endo.hpp"

namespace qu2 {

/// One line of the extension table: cycle notation ("-" if unknown), the
/// unitary u as element text, and the candidate U~ as element text.
struct TableRow {
  std::size_t line = 0;
  std::string cycle;
  std::string element;
  std::string u_tilde;
};

/// Tab-separated, '#' starts a comment line, blank lines ignored.
/// Throws UsageError on a malformed line and DomainError if the file is unreadable.
std::vector<TableRow> load_table(const std::string& path);

struct RowResult {
  TableRow row;
  bool verified = false;
  std::string reason;  // empty when verified
};

struct TableReport {
  std::vector<RowResult> rows;
  std::size_t verified = 0;
  std::string summary() const;  // "N/M verified"
};

RowResult verify_row(const TableRow& row);
TableReport verify_table(const std::vector<TableRow>& rows);

}  // namespace qu2
