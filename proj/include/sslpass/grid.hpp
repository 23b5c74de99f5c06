#pragma once

#include <cmath>
#include <cstddef>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "sslpass/geometry.hpp"

namespace sslpass {

/// Uniform cell grid over a field rectangle. Cell (ix, iy) covers
/// [origin + ix*cell, origin + (ix+1)*cell) x [... iy ...); values are stored
/// row-major with iy as the row index.
struct ScalarGrid {
    std::size_t nx = 0;
    std::size_t ny = 0;
    double cell_size = 0.0;
    Vec2 origin;
    std::vector<double> values;

    ScalarGrid() = default;
    ScalarGrid(std::size_t nx_, std::size_t ny_, double cell, Vec2 orig)
        : nx(nx_), ny(ny_), cell_size(cell), origin(orig), values(nx_ * ny_, 0.0) {
        if (nx == 0 || ny == 0 || !(cell_size > 0.0))
            throw std::invalid_argument("ScalarGrid: bad dimensions");
    }

    double& at(std::size_t ix, std::size_t iy) { return values[iy * nx + ix]; }
    double at(std::size_t ix, std::size_t iy) const { return values[iy * nx + ix]; }

    Vec2 cell_center(std::size_t ix, std::size_t iy) const {
        return {origin.x + (static_cast<double>(ix) + 0.5) * cell_size,
                origin.y + (static_cast<double>(iy) + 0.5) * cell_size};
    }
};

constexpr double kInfeasible = std::numeric_limits<double>::infinity();

/// Plain-text grid format: header `width height cell_size origin_x origin_y`,
/// then `height` rows (iy = 0 first) of `width` space-separated values with
/// `inf` for infeasible cells.
inline void write_grid(std::ostream& out, const ScalarGrid& grid) {
    out << grid.nx << ' ' << grid.ny << ' ';
    char buf[64];
    auto put = [&](double v) {
        if (std::isinf(v)) {
            out << "inf";
        } else {
            std::snprintf(buf, sizeof buf, "%.17g", v);
            out << buf;
        }
    };
    put(grid.cell_size);
    out << ' ';
    put(grid.origin.x);
    out << ' ';
    put(grid.origin.y);
    out << '\n';
    for (std::size_t iy = 0; iy < grid.ny; ++iy) {
        for (std::size_t ix = 0; ix < grid.nx; ++ix) {
            if (ix) out << ' ';
            put(grid.at(ix, iy));
        }
        out << '\n';
    }
}

inline void write_grid_file(const std::string& path, const ScalarGrid& grid) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open grid file for writing: " + path);
    write_grid(out, grid);
}

inline ScalarGrid read_grid(std::istream& in) {
    std::size_t nx = 0, ny = 0;
    double cell = 0.0;
    Vec2 origin;
    if (!(in >> nx >> ny >> cell >> origin.x >> origin.y))
        throw std::runtime_error("grid file: malformed header");
    ScalarGrid grid(nx, ny, cell, origin);
    for (std::size_t iy = 0; iy < ny; ++iy) {
        for (std::size_t ix = 0; ix < nx; ++ix) {
            std::string tok;
            if (!(in >> tok)) throw std::runtime_error("grid file: truncated data");
            grid.at(ix, iy) = (tok == "inf") ? kInfeasible : std::stod(tok);
        }
    }
    return grid;
}

inline ScalarGrid read_grid_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open grid file: " + path);
    return read_grid(in);
}

}  // namespace sslpass
