#pragma once

#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace rectiforce::cli {

using Cell = std::variant<std::string, double, long long, bool>;

/// Long-format result table: one row per grid point.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add_row(std::vector<Cell> row);
};

/// Header row, comma separated, reals as %.8e, booleans as 1/0.
void write_csv(const Table& table, std::ostream& out);

/// Array of row objects keyed by column name; non-finite reals become null.
nlohmann::ordered_json rows_json(const Table& table);

std::string format_real(double v);

}  // namespace rectiforce::cli
