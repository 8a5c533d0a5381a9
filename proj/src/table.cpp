#include "qu2/table.hpp"

#include <fstream>
#include <sstream>

#include "qu2/errors.hpp"
#include "qu2/parse.hpp"

namespace qu2 {

std::vector<TableRow> load_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read table '" + path + "'");
  std::vector<TableRow> rows;
  std::string text;
  for (std::size_t line = 1; std::getline(in, text); ++line) {
    if (!text.empty() && text.back() == '\r') text.pop_back();
    if (text.find_first_not_of(" \t") == std::string::npos || text[0] == '#') continue;
    std::vector<std::string> cols;
    std::stringstream ss(text);
    for (std::string col; std::getline(ss, col, '\t');) cols.push_back(col);
    if (cols.size() != 3) {
      throw UsageError(path + ":" + std::to_string(line) + ": expected 3 tab-separated columns");
    }
    rows.push_back({line, cols[0], cols[1], cols[2]});
  }
  return rows;
}

RowResult verify_row(const TableRow& row) {
  RowResult r{row, false, ""};
  try {
    const Element e = parse_element(row.element);
    const std::size_t level = e.depth();
    PermUnitary u;
    try {
      u = PermUnitary::from_element(e, level);
    } catch (const DomainError&) {
      r.reason = "not a permutation unitary";
      return r;
    }
    if (row.cycle != "-" && !(PermUnitary::from_cycles(level, row.cycle) == u)) {
      r.reason = "cycle column disagrees with the element (" + u.cycles() + ")";
      return r;
    }
    const Element ut = parse_element(row.u_tilde);
    if (!is_unitary(ut)) {
      r.reason = "U~ is not unitary";
      return r;
    }
    const ExtensionCheck c = check_extension_detail(u, ut);
    if (!c.ext1) r.reason = "ext1 fails";
    else if (!c.ext2) r.reason = "ext2 fails";
    r.verified = c.holds();
  } catch (const std::exception& ex) {
    r.reason = ex.what();
  }
  return r;
}

TableReport verify_table(const std::vector<TableRow>& rows) {
  TableReport report;
  for (const TableRow& row : rows) {
    report.rows.push_back(verify_row(row));
    if (report.rows.back().verified) ++report.verified;
  }
  return report;
}

std::string TableReport::summary() const {
  return std::to_string(verified) + "/" + std::to_string(rows.size()) + " verified";
}

}  // namespace qu2
