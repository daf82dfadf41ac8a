#ifndef SUMRANK_TABLES_HPP
#define SUMRANK_TABLES_HPP

#include <string>
#include <vector>

namespace sumrank {

/// One table cell: the field-size string plus an auxiliary column (g for the
/// q = 2 table, q for the fixed-g and fixed-N tables, empty in the summary
/// tables). Bold marks the smallest field size among comparable rows.
struct TableCell {
    std::string value;
    std::string aux;
    bool bold = false;
};

struct TableRow {
    std::string label;
    std::vector<TableCell> cells;
};

struct TableDoc {
    int id = 0;
    std::string title;
    std::vector<std::string> columns;
    std::vector<TableRow> rows;
};

/// Tables 1-2 are the MSRD/PMDS parameter summaries (formula cells); tables
/// 3-8 are the numeric parameter tables: q = 2, g = 7, g = 15, g = 31,
/// N = 30 and N = 62. All cells are computed from closed-form arithmetic,
/// never from constructed codes.
TableDoc compute_table(int id);

std::string render_table(const TableDoc& doc);
std::string render_table(int id);

}  // namespace sumrank

#endif
