#include "wedgematch/render.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

namespace wedgematch {

namespace {

using Canvas = std::vector<std::string>;

std::string flatten(const Canvas& rows)
{
    std::string out;
    for (std::string row : rows) {
        row.erase(row.find_last_not_of(' ') + 1);
        out += row;
        out.push_back('\n');
    }
    return out;
}

// Shorter arcs first; each arc sits one level above everything it overlaps.
std::vector<int> arc_levels(const Matching& m)
{
    const auto edges = m.edges();
    std::vector<std::size_t> order(edges.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const int la = edges[a].right - edges[a].left;
        const int lb = edges[b].right - edges[b].left;
        return la != lb ? la < lb : edges[a].left < edges[b].left;
    });
    std::vector<int> level(edges.size(), 0);
    for (std::size_t k = 0; k < order.size(); ++k) {
        const Edge& e = edges[order[k]];
        int top = 0;
        for (std::size_t j = 0; j < k; ++j) {
            const Edge& f = edges[order[j]];
            if (f.left < e.right && e.left < f.right)
                top = std::max(top, level[order[j]]);
        }
        level[order[k]] = top + 1;
    }
    return level;
}

constexpr int kColumnsPerVertex = 4;

const char* kSvgHeader = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";

} // namespace

std::string render_ascii(const Matching& m)
{
    if (m.size() == 0)
        return "";
    const auto edges = m.edges();
    const std::vector<int> level = arc_levels(m);
    const int height = *std::max_element(level.begin(), level.end());
    const int vertices = m.vertex_count();
    const auto col = [](int v) { return static_cast<std::size_t>(kColumnsPerVertex * (v - 1)); };
    const std::size_t width = col(vertices) + std::to_string(vertices).size();

    Canvas rows(static_cast<std::size_t>(height), std::string(width, ' '));
    for (std::size_t i = 0; i < edges.size(); ++i) {
        std::string& row = rows[static_cast<std::size_t>(height - level[i])];
        for (std::size_t c = col(edges[i].left); c <= col(edges[i].right); ++c)
            row[c] = '-';
        row[col(edges[i].left)] = '+';
        row[col(edges[i].right)] = '+';
    }
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (int r = height - level[i] + 1; r < height; ++r) {
            rows[static_cast<std::size_t>(r)][col(edges[i].left)] = '|';
            rows[static_cast<std::size_t>(r)][col(edges[i].right)] = '|';
        }

    std::string labels(width, ' ');
    for (int v = 1; v <= vertices; ++v) {
        const std::string text = std::to_string(v);
        labels.replace(col(v), text.size(), text);
    }
    rows.push_back(labels);
    return flatten(rows);
}

std::string render_ascii(const WedgePath& p)
{
    const int n = p.size();
    const int top = std::max(0, *std::max_element(p.heights().begin(), p.heights().end()));
    const int bottom = -n;
    const auto row = [&](int y2) { return static_cast<std::size_t>(2 * top - y2); };  // y2 = 2y
    const auto col = [](int x2) { return static_cast<std::size_t>(x2); };             // x2 = 2x

    Canvas grid(static_cast<std::size_t>(2 * (top - bottom) + 1), std::string(static_cast<std::size_t>(2 * n + 1), ' '));
    for (int x = 0; x <= n; ++x)
        for (int y = bottom; y <= top; ++y)
            if (std::abs(y) <= x)
                grid[row(2 * y)][col(2 * x)] = '.';
    for (int x = 0; x < n; ++x) {
        if (x + 1 <= top)
            grid[row(2 * x + 1)][col(2 * x + 1)] = '/';
        if (-x - 1 >= bottom)
            grid[row(-2 * x - 1)][col(2 * x + 1)] = '\\';
    }

    int x = 0;
    int y = 0;
    grid[row(0)][col(0)] = 'o';
    for (Step step : p.steps()) {
        switch (step) {
        case Step::East:
            grid[row(2 * y)][col(2 * x + 1)] = '-';
            ++x;
            break;
        case Step::North:
            grid[row(2 * y + 1)][col(2 * x)] = '|';
            ++y;
            break;
        case Step::South:
            grid[row(2 * y - 1)][col(2 * x)] = '|';
            --y;
            break;
        }
        grid[row(2 * y)][col(2 * x)] = 'o';
    }
    return flatten(grid);
}

std::string render_svg(const Matching& m)
{
    constexpr int kSpacing = 40;
    constexpr int kMargin = 20;
    const int vertices = m.vertex_count();
    const int radius_max = kSpacing * std::max(1, vertices - 1) / 2;
    const int base = kMargin + radius_max;
    const int width = 2 * kMargin + kSpacing * std::max(1, vertices - 1);
    const int height = base + 2 * kMargin;
    const auto x_of = [&](int v) { return kMargin + kSpacing * (v - 1); };

    std::ostringstream os;
    os << kSvgHeader << "<!-- " << kSvgFormatVersion << " -->\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
       << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    for (const Edge& e : m.edges()) {
        const int r = kSpacing * (e.right - e.left) / 2;
        os << "  <path class=\"arc\" d=\"M " << x_of(e.left) << ' ' << base << " A " << r << ' ' << r
           << " 0 0 1 " << x_of(e.right) << ' ' << base << "\" fill=\"none\" stroke=\"black\"/>\n";
    }
    for (int v = 1; v <= vertices; ++v) {
        os << "  <circle class=\"vertex\" cx=\"" << x_of(v) << "\" cy=\"" << base
           << "\" r=\"3\" fill=\"black\"/>\n";
        os << "  <text x=\"" << x_of(v) << "\" y=\"" << base + 16
           << "\" font-size=\"12\" text-anchor=\"middle\">" << v << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

std::string render_svg(const WedgePath& p)
{
    constexpr int kUnit = 30;
    constexpr int kMargin = 20;
    const int n = p.size();
    const int width = 2 * kMargin + kUnit * n;
    const int height = 2 * kMargin + 2 * kUnit * n;
    const auto sx = [&](int x) { return kMargin + kUnit * x; };
    const auto sy = [&](int y) { return kMargin + kUnit * (n - y); };

    std::ostringstream os;
    os << kSvgHeader << "<!-- " << kSvgFormatVersion << " -->\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
       << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    for (int sign : {1, -1})
        os << "  <line class=\"wedge\" x1=\"" << sx(0) << "\" y1=\"" << sy(0) << "\" x2=\"" << sx(n)
           << "\" y2=\"" << sy(sign * n) << "\" stroke=\"gray\" stroke-dasharray=\"4 3\"/>\n";
    int x = 0;
    int y = 0;
    for (Step step : p.steps()) {
        const int nx = x + (step == Step::East ? 1 : 0);
        const int ny = y + (step == Step::North ? 1 : step == Step::South ? -1 : 0);
        os << "  <line class=\"step\" x1=\"" << sx(x) << "\" y1=\"" << sy(y) << "\" x2=\"" << sx(nx)
           << "\" y2=\"" << sy(ny) << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
        x = nx;
        y = ny;
    }
    os << "</svg>\n";
    return os.str();
}

} // namespace wedgematch
