#include "core/render.hpp"

#include <algorithm>
#include <sstream>

#include "core/error.hpp"

namespace polysft {

namespace {

struct Grid {
    std::int64_t min_x = 0, max_x = -1, min_y = 0, max_y = -1;
    // symbol index per (x,y), -1 for absent
    std::vector<int> cells;

    std::int64_t width() const { return max_x - min_x + 1; }
    std::int64_t height() const { return max_y - min_y + 1; }
    int& at(std::int64_t x, std::int64_t y) {
        return cells[static_cast<std::size_t>((y - min_y) * width() + (x - min_x))];
    }
};

// Flatten a rank <= 2 free abelian configuration onto a grid; rank 1 maps to
// a single row.
Grid to_grid(const Configuration& c) {
    Grid g;
    auto put = [&](const IntVec& p, bool first) {
        std::int64_t x = p[0];
        std::int64_t y = p.size() > 1 ? p[1] : 0;
        if (first) {
            g.min_x = g.max_x = x;
            g.min_y = g.max_y = y;
        } else {
            g.min_x = std::min(g.min_x, x);
            g.max_x = std::max(g.max_x, x);
            g.min_y = std::min(g.min_y, y);
            g.max_y = std::max(g.max_y, y);
        }
    };
    if (c.is_torus()) {
        auto res = c.torus_lattice().residues();
        for (std::size_t i = 0; i < res.size(); ++i) put(res[i], i == 0);
        g.cells.assign(static_cast<std::size_t>(g.width() * g.height()), -1);
        for (std::size_t i = 0; i < res.size(); ++i)
            g.at(res[i][0], res[i].size() > 1 ? res[i][1] : 0) = c.values[i];
    } else {
        const auto& elems = c.ball_elements();
        for (std::size_t i = 0; i < elems.size(); ++i) put(elems[i].coords, i == 0);
        g.cells.assign(static_cast<std::size_t>(g.width() * g.height()), -1);
        for (std::size_t i = 0; i < elems.size(); ++i)
            g.at(elems[i].coords[0], elems[i].coords.size() > 1 ? elems[i].coords[1] : 0) = c.values[i];
    }
    return g;
}

bool grid_renderable(const Configuration& c) {
    return c.group->family == GroupFamily::FreeAbelian && c.group->rank <= 2;
}

} // namespace

std::string render_text(const Configuration& c) {
    std::ostringstream os;
    if (!grid_renderable(c)) {
        // coords listing in canonical order
        auto line = [&](const IntVec& coords, int value) {
            for (std::size_t j = 0; j < coords.size(); ++j) {
                if (j) os << ' ';
                os << coords[j];
            }
            os << ": " << c.alphabet.symbols[value] << '\n';
        };
        if (c.is_torus()) {
            auto res = c.torus_lattice().residues();
            for (std::size_t i = 0; i < res.size(); ++i) line(res[i], c.values[i]);
        } else {
            const auto& elems = c.ball_elements();
            for (std::size_t i = 0; i < elems.size(); ++i) line(elems[i].coords, c.values[i]);
        }
        return os.str();
    }
    Grid g = to_grid(c);
    std::size_t width = 1;
    for (const auto& s : c.alphabet.symbols) width = std::max(width, s.size());
    for (std::int64_t y = g.max_y; y >= g.min_y; --y) { // y axis points up
        for (std::int64_t x = g.min_x; x <= g.max_x; ++x) {
            if (x > g.min_x) os << ' ';
            int v = g.at(x, y);
            std::string s = v < 0 ? "." : c.alphabet.symbols[v];
            os << s << std::string(width - s.size(), ' ');
        }
        os << '\n';
    }
    return os.str();
}

std::vector<std::uint8_t> render_pgm(const Configuration& c) {
    if (!grid_renderable(c))
        fail(ErrorCode::Unsupported, "pgm render supports free abelian rank <= 2 only");
    Grid g = to_grid(c);
    int k = c.alphabet.size();
    std::ostringstream header;
    header << "P5\n" << g.width() << ' ' << g.height() << "\n255\n";
    std::string h = header.str();
    std::vector<std::uint8_t> out(h.begin(), h.end());
    for (std::int64_t y = g.max_y; y >= g.min_y; --y)
        for (std::int64_t x = g.min_x; x <= g.max_x; ++x) {
            int v = g.at(x, y);
            int gray = (v < 0 || k <= 1) ? 0 : (255 * v) / (k - 1);
            out.push_back(static_cast<std::uint8_t>(gray));
        }
    return out;
}

} // namespace polysft
