#include "wedgematch/path.hpp"

#include <cstdlib>
#include <string>

#include "wedgematch/error.hpp"

namespace wedgematch {

WedgePath WedgePath::from_heights(std::vector<int> heights)
{
    if (heights.empty())
        throw InvalidObject("a wedge path needs at least one east step");
    for (std::size_t k = 0; k < heights.size(); ++k) {
        const int i = static_cast<int>(k) + 1;
        if (std::abs(heights[k]) > i - 1)
            throw InvalidObject("height a_" + std::to_string(i) + " = " + std::to_string(heights[k])
                                + " violates |a_i| <= " + std::to_string(i - 1));
    }
    return WedgePath(std::move(heights));
}

WedgePath WedgePath::parse_steps(std::string_view steps)
{
    if (steps.empty())
        throw ParseError("empty step string");
    for (std::size_t k = 0; k < steps.size(); ++k)
        if (steps[k] != 'E' && steps[k] != 'N' && steps[k] != 'S')
            throw ParseError("unexpected character '" + std::string(1, steps[k]) + "' at step "
                             + std::to_string(k + 1));

    int x = 0;
    int y = 0;
    char last = 0;
    std::vector<int> heights;
    for (std::size_t k = 0; k < steps.size(); ++k) {
        const char c = steps[k];
        if ((c == 'N' && last == 'S') || (c == 'S' && last == 'N'))
            throw InvalidObject("vertical reversal at step " + std::to_string(k + 1));
        switch (c) {
        case 'E':
            heights.push_back(y);
            ++x;
            break;
        case 'N': ++y; break;
        default: --y; break;
        }
        if (std::abs(y) > x)
            throw InvalidObject("step " + std::to_string(k + 1) + " leaves the wedge at ("
                                + std::to_string(x) + "," + std::to_string(y) + ")");
        last = c;
    }
    if (x == 0 || y != -x)
        throw InvalidObject("path ends at (" + std::to_string(x) + "," + std::to_string(y)
                            + "), not on y = -x");
    return WedgePath(std::move(heights));
}

std::vector<Step> WedgePath::steps() const
{
    std::vector<Step> out;
    int y = 0;
    auto run_to = [&](int target) {
        for (; y < target; ++y)
            out.push_back(Step::North);
        for (; y > target; --y)
            out.push_back(Step::South);
    };
    for (int a : heights_) {
        run_to(a);
        out.push_back(Step::East);
    }
    run_to(-size());
    return out;
}

std::string WedgePath::step_string() const
{
    std::string s;
    for (Step step : steps())
        s.push_back(static_cast<char>(step));
    return s;
}

int north_steps(const WedgePath& p)
{
    int north = 0;
    for (int i = 1; i < p.size(); ++i)
        if (p.height(i + 1) > p.height(i))
            north += p.height(i + 1) - p.height(i);
    return north;
}

int south_steps(const WedgePath& p)
{
    // Net descent from 0 to -n.
    return north_steps(p) + p.size();
}

int final_south_run(const WedgePath& p)
{
    return p.height(p.size()) + p.size();
}

bool is_dyck(const WedgePath& p)
{
    return north_steps(p) == 0;
}

std::vector<WedgePath> components(const WedgePath& p)
{
    const int n = p.size();
    // k splits iff a_{k+1} = -k and a_{k+j} + k <= j - 1 for all j.
    auto splits_at = [&](int k) {
        if (p.height(k + 1) != -k)
            return false;
        for (int j = 1; j <= n - k; ++j)
            if (p.height(k + j) + k > j - 1)
                return false;
        return true;
    };
    std::vector<WedgePath> parts;
    int start = 0;
    for (int k = 1; k <= n; ++k) {
        if (k < n && !splits_at(k))
            continue;
        std::vector<int> piece;
        for (int i = start + 1; i <= k; ++i)
            piece.push_back(p.height(i) + start);
        parts.push_back(WedgePath::from_heights(std::move(piece)));
        start = k;
    }
    return parts;
}

WedgePath concatenate(std::span<const WedgePath> parts)
{
    std::vector<int> heights;
    for (const WedgePath& part : parts) {
        const int offset = static_cast<int>(heights.size());
        for (int a : part.heights())
            heights.push_back(a - offset);
    }
    return WedgePath::from_heights(std::move(heights));
}

std::set<int> reversed_south_positions(const WedgePath& p)
{
    const auto steps = p.steps();
    const int total = static_cast<int>(steps.size());
    if (total != 2 * p.size())
        throw InvalidObject("path has " + std::to_string(total) + " steps, not 2n = "
                            + std::to_string(2 * p.size()) + "; it is not a Dyck path");
    std::set<int> positions;
    for (int i = 1; i <= total; ++i)
        if (steps[static_cast<std::size_t>(total - i)] == Step::South)
            positions.insert(i);
    return positions;
}

} // namespace wedgematch
