#pragma once

// Brute-force references used only by the tests. Nothing here calls into
// the library, so a bug in the implementation cannot leak into the oracle.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using Pairs = std::vector<std::pair<int, int>>;

// Every perfect matching of [2n], found by pairing up consecutive entries
// of every permutation and de-duplicating. Feasible for n <= 5.
inline std::set<Pairs> all_matchings(int n)
{
    std::vector<int> perm(static_cast<std::size_t>(2 * n));
    std::iota(perm.begin(), perm.end(), 1);
    std::set<Pairs> out;
    do {
        Pairs pairs;
        for (std::size_t i = 0; i < perm.size(); i += 2)
            pairs.emplace_back(std::min(perm[i], perm[i + 1]), std::max(perm[i], perm[i + 1]));
        std::sort(pairs.begin(), pairs.end());
        out.insert(std::move(pairs));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

inline int nestings(const Pairs& pairs)
{
    int count = 0;
    for (const auto& [a, b] : pairs)
        for (const auto& [c, d] : pairs)
            if (a < c && d < b)
                ++count;
    return count;
}

inline int crossings(const Pairs& pairs)
{
    int count = 0;
    for (const auto& [a, b] : pairs)
        for (const auto& [c, d] : pairs)
            if (a < c && c < b && b < d)
                ++count;
    return count;
}

// Every E/N/S walk from the origin that stays in |y| <= x, never follows N
// with S or S with N, and stops on reaching (n, -n).
inline std::vector<std::string> all_walks(int n)
{
    std::vector<std::string> out;
    std::string walk;
    auto dfs = [&](auto&& self, int x, int y, char last) -> void {
        if (x == n && y == -n) {
            out.push_back(walk);
            return;
        }
        const std::pair<char, std::pair<int, int>> moves[] = {
            {'E', {1, 0}}, {'N', {0, 1}}, {'S', {0, -1}}};
        for (const auto& [c, d] : moves) {
            if ((c == 'N' && last == 'S') || (c == 'S' && last == 'N'))
                continue;
            const int nx = x + d.first;
            const int ny = y + d.second;
            if (nx > n || std::abs(ny) > nx)
                continue;
            walk.push_back(c);
            self(self, nx, ny, c);
            walk.pop_back();
        }
    };
    dfs(dfs, 0, 0, 0);
    return out;
}

inline int count_char(const std::string& s, char c)
{
    return static_cast<int>(std::count(s.begin(), s.end(), c));
}

template <typename K>
std::map<int, unsigned long long> histogram(const std::vector<K>& values)
{
    std::map<int, unsigned long long> h;
    for (const auto& v : values)
        ++h[v];
    return h;
}

} // namespace oracle
