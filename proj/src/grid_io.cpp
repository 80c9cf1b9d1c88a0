#include "gkt/grid_io.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "gkt/errors.hpp"
#include "gkt/json_io.hpp"

namespace gkt::io {

namespace {

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
        const auto b = cell.find_first_not_of(" \t\r");
        const auto e = cell.find_last_not_of(" \t\r");
        out.push_back(b == std::string::npos ? std::string() : cell.substr(b, e - b + 1));
    }
    return out;
}

double parse_double(const std::string& s, std::size_t row) {
    try {
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw InvalidArgument("CSV row " + std::to_string(row) + ": cannot parse '" + s + "'");
    }
}

}  // namespace

GridFunction read_grid_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw InvalidArgument("empty CSV input");
    const auto header = split(line);
    static const char* axes[] = {"x", "y", "z"};
    const int n = static_cast<int>(header.size()) - 1;
    if (n < 1 || n > 3 || header.back() != "value")
        throw InvalidArgument("CSV header must be x[,y[,z]],value");
    for (int a = 0; a < n; ++a)
        if (header[a] != axes[a]) throw InvalidArgument("CSV header must be x[,y[,z]],value");

    std::vector<std::vector<double>> coords;
    std::vector<double> values;
    std::size_t row = 1;
    while (std::getline(in, line)) {
        ++row;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const auto cells = split(line);
        if (cells.size() != header.size())
            throw InvalidArgument("CSV row " + std::to_string(row) + " has wrong column count");
        std::vector<double> c(static_cast<std::size_t>(n));
        for (int a = 0; a < n; ++a) c[a] = parse_double(cells[a], row);
        coords.push_back(std::move(c));
        values.push_back(parse_double(cells.back(), row));
    }
    if (values.empty()) throw InvalidArgument("CSV contains no grid points");

    const auto m = static_cast<std::size_t>(std::llround(std::pow(static_cast<double>(values.size()), 1.0 / n)));
    std::size_t total = 1;
    for (int a = 0; a < n; ++a) total *= m;
    if (total != values.size() || m < 2)
        throw InvalidArgument("CSV row count " + std::to_string(values.size()) + " is not m^n for m >= 2");
    const double half_width = -coords.front()[0];
    Grid grid(n, half_width, m);
    const double tol = 1e-9 * std::max(1.0, half_width);
    for (std::size_t i = 0; i < coords.size(); ++i) {
        const auto p = grid.point(i);
        for (int a = 0; a < n; ++a)
            if (std::abs(p[a] - coords[i][a]) > tol)
                throw InvalidArgument("CSV coordinates do not form a uniform lexicographic grid (row " +
                                      std::to_string(i + 2) + ")");
    }
    return GridFunction(grid, std::move(values));
}

void write_grid_csv(std::ostream& out, const GridFunction& f) {
    static const char* axes[] = {"x", "y", "z"};
    const Grid& grid = f.grid();
    for (int a = 0; a < grid.dimension(); ++a) out << axes[a] << ',';
    out << "value\n";
    out << std::setprecision(17);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        for (double c : grid.point(i)) out << c << ',';
        out << f[i] << '\n';
    }
}

GridFunction load_grid_function(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open " + path);
    const bool is_json = path.size() >= 5 && path.substr(path.size() - 5) == ".json";
    if (!is_json) return read_grid_csv(in);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument(std::string("malformed JSON: ") + e.what());
    }
    return grid_function_from_json(j);
}

}  // namespace gkt::io
