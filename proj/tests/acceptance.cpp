// Acceptance suite: one line per criterion, exit status 0 iff all pass.
// Every check is an exact integer or structural equality.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "oracle.hpp"
#include "wedgematch/bijections.hpp"
#include "wedgematch/enumeration.hpp"
#include "wedgematch/io.hpp"

using namespace wedgematch;

namespace {

constexpr int kExhaustiveMax = 6;

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool condition, const std::string& what)
    {
        if (!condition && ok) {
            ok = false;
            detail = what;
        }
    }
};

void paths_up_to(int max_n, const std::function<void(const WedgePath&)>& fn)
{
    for (int n = 1; n <= max_n; ++n)
        for_each_path(n, fn);
}

void matchings_up_to(int max_n, const std::function<void(const Matching&)>& fn)
{
    for (int n = 1; n <= max_n; ++n)
        for_each_matching(n, fn);
}

std::string where(const WedgePath& p) { return "path " + p.step_string(); }
std::string where(const Matching& m) { return "matching " + format_matching(m); }

Outcome cardinalities()
{
    Outcome o;
    const long long expected[] = {1, 3, 15, 105, 945, 10395, 135135};
    double small_seconds = 0;
    double seven_seconds = 0;
    for (int n = 1; n <= 7; ++n) {
        const auto start = std::chrono::steady_clock::now();
        std::uint64_t paths = 0;
        std::uint64_t matchings = 0;
        std::set<std::vector<int>> distinct_paths;
        std::set<std::vector<int>> distinct_matchings;
        for_each_path(n, [&](const WedgePath& p) {
            ++paths;
            distinct_paths.emplace(p.heights().begin(), p.heights().end());
        });
        for_each_matching(n, [&](const Matching& m) {
            ++matchings;
            distinct_matchings.insert(m.partner_table());
        });
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        (n <= 6 ? small_seconds : seven_seconds) += seconds;
        const auto want = static_cast<std::uint64_t>(expected[n - 1]);
        o.require(double_factorial(n) == want, "double_factorial(" + std::to_string(n) + ")");
        o.require(paths == want && distinct_paths.size() == want,
                  "n=" + std::to_string(n) + ": " + std::to_string(paths) + " paths");
        o.require(matchings == want && distinct_matchings.size() == want,
                  "n=" + std::to_string(n) + ": " + std::to_string(matchings) + " matchings");
    }
    o.require(small_seconds < 10.0, "n <= 6 took " + std::to_string(small_seconds) + " s");
    o.require(seven_seconds < 120.0, "n = 7 took " + std::to_string(seven_seconds) + " s");
    if (o.ok) {
        std::ostringstream os;
        os.precision(3);
        os << "n<=6 in " << small_seconds << " s, n=7 in " << seven_seconds << " s";
        o.detail = os.str();
    }
    return o;
}

Outcome theorem1()
{
    Outcome o;
    paths_up_to(kExhaustiveMax, [&](const WedgePath& p) {
        o.require(nestings(big_phi(p)) == north_steps(p), where(p));
    });
    for (int n = 1; n <= kExhaustiveMax; ++n)
        o.require(distribution(n, Statistic::NorthSteps).same_counts(distribution(n, Statistic::Nestings)),
                  "distributions differ at n=" + std::to_string(n));

    const std::map<int, std::uint64_t> frozen{{0, 5}, {1, 6}, {2, 3}, {3, 1}};
    o.require(distribution(3, Statistic::NorthSteps).counts == frozen, "n=3 north_steps row");
    o.require(distribution(3, Statistic::Nestings).counts == frozen, "n=3 nestings row");
    std::vector<int> ne;
    for (const auto& pairs : oracle::all_matchings(3))
        ne.push_back(oracle::nestings(pairs));
    std::vector<int> north;
    for (const auto& walk : oracle::all_walks(3))
        north.push_back(oracle::count_char(walk, 'N'));
    const auto ne_hist = oracle::histogram(ne);
    const auto north_hist = oracle::histogram(north);
    o.require(std::map<int, std::uint64_t>(ne_hist.begin(), ne_hist.end()) == frozen, "brute-force nestings row");
    o.require(std::map<int, std::uint64_t>(north_hist.begin(), north_hist.end()) == frozen,
              "brute-force north row");
    return o;
}

Outcome lemma1()
{
    Outcome o;
    paths_up_to(kExhaustiveMax, [&](const WedgePath& p) {
        const Matching m = psi(p);
        o.require(st_total(m) == north_steps(p), where(p) + ": st_total");
        const InsertionCode b = insertion_code(p);
        for (int i = 1; i < m.size(); ++i) {
            const PairRelation relation = classify_pair(m.edge(i), m.edge(i + 1));
            if (b[i] >= b[i + 1] + 2) {
                o.require(relation == PairRelation::Nesting, where(p) + ": expected nesting");
                o.require(st_component(m, i) == b[i] - b[i + 1] - 1, where(p) + ": st_i");
            } else {
                o.require(relation == (b[i] > 1 ? PairRelation::Crossing : PairRelation::Alignment),
                          where(p) + ": expected crossing/alignment");
                o.require(st_component(m, i) == 0, where(p) + ": st_i nonzero");
            }
        }
    });
    return o;
}

Outcome theorem2()
{
    Outcome o;
    matchings_up_to(kExhaustiveMax, [&](const Matching& m) {
        const Matching image = phi(m);
        o.require(nestings(image) == st_total(m), where(m) + ": nestings");
        o.require(first_edge(image) == first_edge(m), where(m) + ": first edge");
        o.require(phi_inv(image) == m, where(m) + ": phi_inv");
    });
    return o;
}

Outcome example1()
{
    Outcome o;
    const oracle::Pairs pairs = {{1, 4}, {2, 14}, {3, 12}, {5, 8}, {6, 9}, {7, 11}, {10, 13}};
    const Matching m = Matching::from_pairs(pairs);
    const WedgePath p = big_phi_inv(m);
    o.require(p.size() == 7, "path size");
    o.require(WedgePath::parse_steps(p.step_string()) == p, "path not valid in P_7");
    o.require(big_phi(p) == m, "big_phi does not return the matching");
    o.require(oracle::nestings(pairs) == 8, "pair-scan nesting count");
    o.require(north_steps(p) == oracle::nestings(pairs), "north steps");
    o.require(m.partner(1) == 4, "partner of 1");
    o.require(final_south_run(p) == 3, "south steps on x = 7");
    if (o.ok)
        o.detail = "path " + p.step_string() + ", 8 north, 3 final south";
    return o;
}

Outcome proposition_a()
{
    Outcome o;
    paths_up_to(kExhaustiveMax, [&](const WedgePath& p) {
        const Matching m = big_phi(p);
        for (int k = 1; k <= 2 * p.size() - 1; ++k)
            o.require((final_south_run(p) == k) == (m.partner(1) == k + 1), where(p));
    });
    return o;
}

Outcome proposition_b()
{
    Outcome o;
    paths_up_to(kExhaustiveMax, [&](const WedgePath& p) {
        const Matching full = big_phi(p);
        std::vector<int> path_sizes;
        for (const WedgePath& c : components(p))
            path_sizes.push_back(c.size());
        std::reverse(path_sizes.begin(), path_sizes.end());
        std::vector<int> matching_sizes;
        for (const auto& c : irreducible_components(full))
            matching_sizes.push_back(c.matching.size());
        o.require(path_sizes == matching_sizes, where(p) + ": component sizes");

        std::vector<Matching> pieces;
        for (const auto& c : irreducible_components(psi(p)))
            pieces.push_back(phi(c.matching));
        o.require(concatenate(pieces) == full, where(p) + ": componentwise phi");
    });
    return o;
}

Outcome dyck()
{
    Outcome o;
    std::uint64_t seen = 0;
    paths_up_to(kExhaustiveMax, [&](const WedgePath& p) {
        if (!is_dyck(p))
            return;
        ++seen;
        const Matching m = big_phi(p);
        o.require(nestings(m) == 0, where(p) + ": nestings");
        const auto lefts = left_endpoints(m);
        o.require(std::set<int>(lefts.begin(), lefts.end()) == reversed_south_positions(p),
                  where(p) + ": left endpoints");
        o.require(phi(psi(p)) == psi(p), where(p) + ": phi moved psi(P)");
    });
    // Catalan numbers 1, 2, 5, 14, 42, 132.
    o.require(seen == 1 + 2 + 5 + 14 + 42 + 132, "Dyck path count " + std::to_string(seen));
    return o;
}

Outcome round_trips()
{
    Outcome o;
    paths_up_to(kExhaustiveMax, [&](const WedgePath& p) {
        o.require(psi_inv(psi(p)) == p, where(p) + ": psi");
        o.require(big_phi_inv(big_phi(p)) == p, where(p) + ": big_phi");
        o.require(parse_path(p.step_string()) == p, where(p) + ": step text");
        o.require(parse_heights(format_heights(p)) == p, where(p) + ": height text");
        o.require(std::get<WedgePath>(parse_object(path_to_json(p).dump())) == p, where(p) + ": json");
    });
    matchings_up_to(kExhaustiveMax, [&](const Matching& m) {
        o.require(psi(psi_inv(m)) == m, where(m) + ": psi_inv");
        o.require(phi_inv(phi(m)) == m, where(m) + ": phi");
        o.require(phi(phi_inv(m)) == m, where(m) + ": phi_inv");
        o.require(big_phi(big_phi_inv(m)) == m, where(m) + ": big_phi_inv");
        o.require(parse_matching(format_matching(m)) == m, where(m) + ": pair text");
        o.require(std::get<Matching>(parse_object(matching_to_json(m).dump())) == m, where(m) + ": json");
    });
    return o;
}

Outcome figure1()
{
    Outcome o;
    const Matching m = parse_matching("(1,3),(2,7),(4,6),(5,8),(9,10)");
    o.require(crossings(m) == 3, "crossings " + std::to_string(crossings(m)));
    o.require(nestings(m) == 1, "nestings " + std::to_string(nestings(m)));
    o.require(alignments(m) == 6, "alignments " + std::to_string(alignments(m)));
    return o;
}

} // namespace

int main()
{
    const std::pair<const char*, Outcome (*)()> criteria[] = {
        {"1  cardinalities (2n-1)!! for n = 1..7", cardinalities},
        {"2  north steps -> nestings, n <= 6", theorem1},
        {"3  north steps = st(psi(P)), per index", lemma1},
        {"4  nestings(phi(M)) = st(M), first edge, inverse", theorem2},
        {"5  worked example of size 7", example1},
        {"6  final south run <-> partner of vertex 1", proposition_a},
        {"7  irreducible components reversed", proposition_b},
        {"8  Dyck paths map to non-nesting matchings", dyck},
        {"9  round trips of maps, parsers and printers", round_trips},
        {"10 crossings/nestings/alignments of the 10-vertex example", figure1},
    };
    int failures = 0;
    for (const auto& [name, check] : criteria) {
        const Outcome o = check();
        failures += o.ok ? 0 : 1;
        std::cout << (o.ok ? "[PASS] " : "[FAIL] ") << name;
        if (!o.detail.empty())
            std::cout << "  (" << o.detail << ")";
        std::cout << '\n';
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << '\n';
    return failures == 0 ? 0 : 1;
}
