#include "wedgematch/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <iomanip>
#include <sstream>
#include <set>
#include <thread>

#include <json.hpp>

#include "wedgematch/bijections.hpp"
#include "wedgematch/error.hpp"
#include "wedgematch/io.hpp"

namespace wedgematch {

boost::multiprecision::cpp_int double_factorial(int n)
{
    boost::multiprecision::cpp_int product = 1;
    for (int i = 1; i <= n; ++i)
        product *= 2 * i - 1;
    return product;
}

namespace {

void require_size(int n, int max_n)
{
    if (n < 1)
        throw InvalidObject("size must be at least 1, got " + std::to_string(n));
    if (n > max_n)
        throw CapExceeded("size " + std::to_string(n) + " exceeds the enumeration cap "
                          + std::to_string(max_n));
}

} // namespace

PathStream::PathStream(int n, std::vector<int> prefix)
    : n_(n), pinned_(prefix.size()), heights_(static_cast<std::size_t>(std::max(n, 0)))
{
    if (n < 1)
        throw InvalidObject("path size must be at least 1, got " + std::to_string(n));
    if (prefix.size() > static_cast<std::size_t>(n - 1))
        throw InvalidObject("prefix longer than the free heights a_2..a_n");
    for (int i = 1; i <= n; ++i)
        heights_[static_cast<std::size_t>(i - 1)] = -(i - 1);
    for (std::size_t k = 0; k < prefix.size(); ++k) {
        const int i = static_cast<int>(k) + 2;
        if (std::abs(prefix[k]) > i - 1)
            throw InvalidObject("prefix height a_" + std::to_string(i) + " = "
                                + std::to_string(prefix[k]) + " out of bounds");
        heights_[static_cast<std::size_t>(i - 1)] = prefix[k];
    }
}

std::optional<WedgePath> PathStream::next()
{
    if (done_)
        return std::nullopt;
    if (started_) {
        // Odometer over the unpinned heights; a_1 is always 0.
        int i = n_;
        const int lowest_free = 2 + static_cast<int>(pinned_);
        while (i >= lowest_free && heights_[static_cast<std::size_t>(i - 1)] == i - 1)
            --i;
        if (i < lowest_free) {
            done_ = true;
            return std::nullopt;
        }
        ++heights_[static_cast<std::size_t>(i - 1)];
        for (int j = i + 1; j <= n_; ++j)
            heights_[static_cast<std::size_t>(j - 1)] = -(j - 1);
    }
    started_ = true;
    return WedgePath::from_heights(heights_);
}

MatchingStream::MatchingStream(int n, std::vector<int> prefix)
    : n_(n), pinned_(prefix.size()), choice_(static_cast<std::size_t>(std::max(n, 0)), 0)
{
    if (n < 1)
        throw InvalidObject("matching size must be at least 1, got " + std::to_string(n));
    if (prefix.size() > static_cast<std::size_t>(n))
        throw InvalidObject("prefix longer than the number of choices");
    for (std::size_t k = 0; k < prefix.size(); ++k) {
        const int limit = 2 * (n - static_cast<int>(k)) - 2;
        if (prefix[k] < 0 || prefix[k] > limit)
            throw InvalidObject("prefix choice " + std::to_string(prefix[k]) + " out of bounds");
        choice_[k] = prefix[k];
    }
}

Matching MatchingStream::build() const
{
    std::vector<int> free(static_cast<std::size_t>(2 * n_));
    for (int v = 1; v <= 2 * n_; ++v)
        free[static_cast<std::size_t>(v - 1)] = v;
    std::vector<int> partner(free.size());
    for (int c : choice_) {
        const int l = free.front();
        const int w = free[static_cast<std::size_t>(c + 1)];
        partner[static_cast<std::size_t>(l - 1)] = w;
        partner[static_cast<std::size_t>(w - 1)] = l;
        free.erase(free.begin() + c + 1);
        free.erase(free.begin());
    }
    return Matching::from_partner_table(std::move(partner));
}

std::optional<Matching> MatchingStream::next()
{
    if (done_)
        return std::nullopt;
    if (started_) {
        int k = n_ - 1;
        const int lowest_free = static_cast<int>(pinned_);
        while (k >= lowest_free && choice_[static_cast<std::size_t>(k)] == 2 * (n_ - k) - 2)
            --k;
        if (k < lowest_free) {
            done_ = true;
            return std::nullopt;
        }
        ++choice_[static_cast<std::size_t>(k)];
        std::fill(choice_.begin() + k + 1, choice_.end(), 0);
    }
    started_ = true;
    return build();
}

void for_each_path(int n, const std::function<void(const WedgePath&)>& fn)
{
    PathStream stream(n);
    while (auto p = stream.next())
        fn(*p);
}

void for_each_matching(int n, const std::function<void(const Matching&)>& fn)
{
    MatchingStream stream(n);
    while (auto m = stream.next())
        fn(*m);
}

const char* to_string(Statistic s)
{
    switch (s) {
    case Statistic::NorthSteps: return "north_steps";
    case Statistic::Nestings: return "nestings";
    case Statistic::Crossings: return "crossings";
    case Statistic::StTotal: return "st_total";
    }
    return "?";
}

Statistic parse_statistic(std::string_view name)
{
    if (name == "north_steps" || name == "north")
        return Statistic::NorthSteps;
    if (name == "nestings" || name == "ne")
        return Statistic::Nestings;
    if (name == "crossings" || name == "cr")
        return Statistic::Crossings;
    if (name == "st_total" || name == "st")
        return Statistic::StTotal;
    throw ParseError("unknown statistic '" + std::string(name)
                     + "' (expected north_steps, nestings, crossings or st_total)");
}

std::uint64_t DistributionTable::total() const
{
    std::uint64_t sum = 0;
    for (const auto& [k, count] : counts)
        sum += count;
    return sum;
}

namespace {

int matching_statistic(const Matching& m, Statistic s)
{
    switch (s) {
    case Statistic::Nestings: return static_cast<int>(nestings(m));
    case Statistic::Crossings: return static_cast<int>(crossings(m));
    case Statistic::StTotal: return static_cast<int>(st_total(m));
    case Statistic::NorthSteps: break;
    }
    throw InvalidObject("north_steps is a path statistic");
}

} // namespace

DistributionTable distribution(int n, Statistic s, int max_n)
{
    require_size(n, max_n);
    DistributionTable table{n, s, {}};
    if (s == Statistic::NorthSteps)
        for_each_path(n, [&](const WedgePath& p) { ++table.counts[north_steps(p)]; });
    else
        for_each_matching(n, [&](const Matching& m) { ++table.counts[matching_statistic(m, s)]; });
    return table;
}

// ---------------------------------------------------------------------------
// Verification harness
// ---------------------------------------------------------------------------

namespace {

enum ClaimId : std::size_t {
    kCardinalityPaths,
    kCardinalityMatchings,
    kRoundtripPsi,
    kRoundtripPsiInv,
    kRoundtripPhi,
    kRoundtripPhiInv,
    kRoundtripBigPhi,
    kLemma1,
    kLemma1PerIndex,
    kTheorem2,
    kTheorem2FirstEdge,
    kTheorem1,
    kPropA,
    kPropBSizes,
    kPropBComponentwise,
    kDyck,
    kDistNorthNestings,
    kDistNestingsCrossings,
    kDistStNestings,
    kClaimCount,
};

constexpr ClaimInfo kCatalog[kClaimCount] = {
    {"cardinality_paths", "the path stream yields (2n-1)!! distinct paths"},
    {"cardinality_matchings", "the matching stream yields (2n-1)!! distinct matchings"},
    {"roundtrip_psi", "psi_inv(psi(P)) = P"},
    {"roundtrip_psi_inv", "psi(psi_inv(M)) = M"},
    {"roundtrip_phi", "phi_inv(phi(M)) = M"},
    {"roundtrip_phi_inv", "phi(phi_inv(M)) = M"},
    {"roundtrip_big_phi", "big_phi_inv(big_phi(P)) = P"},
    {"lemma1", "north_steps(P) = st_total(psi(P))"},
    {"lemma1_per_index", "st_i(psi(P)) = max(b_i - b_{i+1} - 1, 0) with the nested/crossed/aligned split"},
    {"theorem2", "nestings(phi(M)) = st_total(M)"},
    {"theorem2_first_edge", "phi(M) keeps the first edge of M"},
    {"theorem1", "nestings(big_phi(P)) = north_steps(P)"},
    {"prop_a", "final_south_run(P) = k iff 1 is matched to k+1 in big_phi(P)"},
    {"prop_b_sizes", "component sizes of P reversed = component sizes of big_phi(P)"},
    {"prop_b_componentwise", "phi applied per component of psi(P) reproduces big_phi(P)"},
    {"dyck", "Dyck P: big_phi(P) has no nestings, its left endpoints are the reversed south positions, phi fixes psi(P)"},
    {"distribution_north_nestings", "distribution of north_steps over P_n = distribution of nestings over M_n"},
    {"distribution_nestings_crossings", "distribution of nestings = distribution of crossings over M_n"},
    {"distribution_st_nestings", "distribution of st_total = distribution of nestings over M_n"},
};

struct Partial {
    std::vector<ClaimResult> claims;
    std::uint64_t paths = 0;
    std::uint64_t matchings = 0;
    std::set<std::vector<int>> seen_paths;
    std::set<std::vector<int>> seen_matchings;
    std::map<int, std::uint64_t> north;
    std::map<int, std::uint64_t> nest;
    std::map<int, std::uint64_t> cross;
    std::map<int, std::uint64_t> st;
};

class Checker {
public:
    Checker(Partial& out, const std::vector<bool>& selected, std::size_t limit)
        : out_(out), selected_(selected), limit_(limit)
    {
    }

    bool on(ClaimId id) const { return selected_[id]; }
    bool any(std::initializer_list<ClaimId> ids) const
    {
        return std::any_of(ids.begin(), ids.end(), [this](ClaimId id) { return on(id); });
    }

    template <typename Describe>
    void expect(ClaimId id, bool ok, Describe&& describe)
    {
        ClaimResult& c = out_.claims[id];
        ++c.tested;
        if (ok)
            return;
        ++c.failed;
        if (c.counterexamples.size() < limit_)
            c.counterexamples.push_back(describe());
    }

private:
    Partial& out_;
    const std::vector<bool>& selected_;
    std::size_t limit_;
};

std::string describe(const WedgePath& p)
{
    return "path " + p.step_string() + " [" + format_heights(p) + "]";
}

std::string describe(const Matching& m) { return "matching " + format_matching(m); }

template <typename T>
std::string show(const std::vector<T>& values)
{
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < values.size(); ++i)
        os << (i ? "," : "") << values[i];
    os << ']';
    return os.str();
}

std::string show(const std::map<int, std::uint64_t>& counts)
{
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : counts) {
        os << (first ? "" : " ") << k << ':' << c;
        first = false;
    }
    return os.str();
}

// Per-index st values and the relation of e_i, e_{i+1} predicted from the
// insertion code; one instance per path.
void check_lemma1_per_index(Checker& check, const WedgePath& p, const Matching& m)
{
    const InsertionCode b = insertion_code(p);
    std::string mismatch;
    for (int i = 1; i < m.size() && mismatch.empty(); ++i) {
        const long long expected = std::max(b[i] - b[i + 1] - 1, 0);
        const PairRelation expected_relation = b[i] >= b[i + 1] + 2 ? PairRelation::Nesting
                                                : b[i] > 1         ? PairRelation::Crossing
                                                                   : PairRelation::Alignment;
        const long long got = st_component(m, i);
        const PairRelation relation = classify_pair(m.edge(i), m.edge(i + 1));
        if (got != expected || relation != expected_relation)
            mismatch = "st_" + std::to_string(i) + " = " + std::to_string(got) + " ("
                       + to_string(relation) + "), expected " + std::to_string(expected) + " ("
                       + to_string(expected_relation) + ")";
    }
    check.expect(kLemma1PerIndex, mismatch.empty(), [&] { return describe(p) + ": " + mismatch; });
}

void check_path(Checker& check, Partial& out, const WedgePath& p)
{
    ++out.paths;
    if (check.on(kCardinalityPaths)) {
        const bool fresh = out.seen_paths.emplace(p.heights().begin(), p.heights().end()).second;
        check.expect(kCardinalityPaths, fresh, [&] { return describe(p) + " produced twice"; });
    }
    if (check.on(kDistNorthNestings))
        ++out.north[north_steps(p)];

    if (!check.any({kRoundtripPsi, kRoundtripBigPhi, kLemma1, kLemma1PerIndex, kTheorem1, kPropA,
                    kPropBSizes, kPropBComponentwise, kDyck}))
        return;

    const Matching image = psi(p);
    const Matching full = phi(image);
    const int north = north_steps(p);

    if (check.on(kRoundtripPsi)) {
        const WedgePath back = psi_inv(image);
        check.expect(kRoundtripPsi, back == p, [&] {
            return describe(p) + ": psi_inv(psi) gave " + format_heights(back);
        });
    }
    if (check.on(kRoundtripBigPhi)) {
        const WedgePath back = big_phi_inv(full);
        check.expect(kRoundtripBigPhi, back == p, [&] {
            return describe(p) + ": big_phi_inv(big_phi) gave " + format_heights(back);
        });
    }
    if (check.on(kLemma1)) {
        const long long st = st_total(image);
        check.expect(kLemma1, st == north, [&] {
            return describe(p) + ": north " + std::to_string(north) + " but st(psi(P)) = "
                   + std::to_string(st);
        });
    }
    if (check.on(kLemma1PerIndex))
        check_lemma1_per_index(check, p, image);
    if (check.on(kTheorem1)) {
        const long long ne = nestings(full);
        check.expect(kTheorem1, ne == north, [&] {
            return describe(p) + " -> " + format_matching(full) + ": nestings "
                   + std::to_string(ne) + " != north " + std::to_string(north);
        });
    }
    if (check.on(kPropA)) {
        const int run = final_south_run(p);
        check.expect(kPropA, full.partner(1) == run + 1, [&] {
            return describe(p) + ": final south run " + std::to_string(run)
                   + " but 1 is matched to " + std::to_string(full.partner(1));
        });
    }
    if (check.on(kPropBSizes) || check.on(kPropBComponentwise)) {
        const auto parts = irreducible_components(full);
        if (check.on(kPropBSizes)) {
            std::vector<int> path_sizes;
            for (const WedgePath& c : components(p))
                path_sizes.push_back(c.size());
            std::reverse(path_sizes.begin(), path_sizes.end());
            std::vector<int> matching_sizes;
            for (const auto& c : parts)
                matching_sizes.push_back(c.matching.size());
            check.expect(kPropBSizes, path_sizes == matching_sizes, [&] {
                return describe(p) + ": reversed path components " + show(path_sizes)
                       + " vs matching components " + show(matching_sizes);
            });
        }
        if (check.on(kPropBComponentwise)) {
            std::vector<Matching> pieces;
            for (const auto& c : irreducible_components(image))
                pieces.push_back(phi(c.matching));
            const Matching joined = concatenate(pieces);
            check.expect(kPropBComponentwise, joined == full, [&] {
                return describe(p) + ": componentwise phi gave " + format_matching(joined)
                       + ", global phi gave " + format_matching(full);
            });
        }
    }
    if (check.on(kDyck) && is_dyck(p)) {
        const auto lefts = left_endpoints(full);
        const std::set<int> left_set(lefts.begin(), lefts.end());
        const bool ok = nestings(full) == 0 && left_set == reversed_south_positions(p) && full == image;
        check.expect(kDyck, ok, [&] {
            return describe(p) + " -> " + format_matching(full) + " (psi gave "
                   + format_matching(image) + ")";
        });
    }
}

void check_matching(Checker& check, Partial& out, const Matching& m)
{
    ++out.matchings;
    if (check.on(kCardinalityMatchings)) {
        const bool fresh = out.seen_matchings.insert(m.partner_table()).second;
        check.expect(kCardinalityMatchings, fresh, [&] { return describe(m) + " produced twice"; });
    }
    if (check.on(kDistNorthNestings) || check.on(kDistNestingsCrossings) || check.on(kDistStNestings))
        ++out.nest[static_cast<int>(nestings(m))];
    if (check.on(kDistNestingsCrossings))
        ++out.cross[static_cast<int>(crossings(m))];
    if (check.on(kDistStNestings))
        ++out.st[static_cast<int>(st_total(m))];

    if (check.on(kRoundtripPsiInv)) {
        const Matching back = psi(psi_inv(m));
        check.expect(kRoundtripPsiInv, back == m, [&] {
            return describe(m) + ": psi(psi_inv) gave " + format_matching(back);
        });
    }
    if (check.on(kRoundtripPhi) || check.on(kTheorem2) || check.on(kTheorem2FirstEdge)) {
        const Matching image = phi(m);
        if (check.on(kRoundtripPhi)) {
            const Matching back = phi_inv(image);
            check.expect(kRoundtripPhi, back == m, [&] {
                return describe(m) + ": phi_inv(phi) gave " + format_matching(back);
            });
        }
        if (check.on(kTheorem2)) {
            const long long ne = nestings(image);
            const long long st = st_total(m);
            check.expect(kTheorem2, ne == st, [&] {
                return describe(m) + " -> " + format_matching(image) + ": nestings "
                       + std::to_string(ne) + " != st " + std::to_string(st);
            });
        }
        if (check.on(kTheorem2FirstEdge)) {
            check.expect(kTheorem2FirstEdge, first_edge(image) == first_edge(m), [&] {
                return describe(m) + " -> " + format_matching(image) + ": first edge moved";
            });
        }
    }
    if (check.on(kRoundtripPhiInv)) {
        const Matching back = phi(phi_inv(m));
        check.expect(kRoundtripPhiInv, back == m, [&] {
            return describe(m) + ": phi(phi_inv) gave " + format_matching(back);
        });
    }
}

std::vector<std::vector<int>> prefixes(std::vector<std::pair<int, int>> ranges)
{
    std::vector<std::vector<int>> out{{}};
    for (const auto& [lo, hi] : ranges) {
        std::vector<std::vector<int>> next;
        for (const auto& base : out)
            for (int v = lo; v <= hi; ++v) {
                next.push_back(base);
                next.back().push_back(v);
            }
        out = std::move(next);
    }
    return out;
}

struct Task {
    bool paths;
    std::vector<int> prefix;
};

std::vector<Task> plan_tasks(int n)
{
    const int depth = std::min(3, n - 1);
    std::vector<std::pair<int, int>> path_ranges;
    std::vector<std::pair<int, int>> matching_ranges;
    for (int k = 0; k < depth; ++k) {
        const int i = k + 2;
        path_ranges.emplace_back(-(i - 1), i - 1);
        matching_ranges.emplace_back(0, 2 * (n - k) - 2);
    }
    std::vector<Task> tasks;
    for (auto& prefix : prefixes(path_ranges))
        tasks.push_back({true, std::move(prefix)});
    for (auto& prefix : prefixes(matching_ranges))
        tasks.push_back({false, std::move(prefix)});
    return tasks;
}

void add_counts(std::map<int, std::uint64_t>& into, const std::map<int, std::uint64_t>& from)
{
    for (const auto& [k, c] : from)
        into[k] += c;
}

} // namespace

std::span<const ClaimInfo> claim_catalog() { return kCatalog; }

bool VerificationReport::passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const ClaimResult& c) { return c.failed == 0; });
}

const ClaimResult* VerificationReport::find(std::string_view label) const
{
    for (const ClaimResult& c : checks)
        if (c.label == label)
            return &c;
    return nullptr;
}

VerificationReport verify_all(int n, const VerifyOptions& options)
{
    require_size(n, options.max_n);
    const auto started = std::chrono::steady_clock::now();

    std::vector<bool> selected(kClaimCount, options.claims.empty());
    for (const std::string& prefix : options.claims) {
        bool matched = false;
        for (std::size_t id = 0; id < kClaimCount; ++id)
            if (kCatalog[id].label.starts_with(prefix)) {
                selected[id] = true;
                matched = true;
            }
        if (!matched)
            throw ParseError("no claim matches '" + prefix + "'");
    }

    const std::vector<Task> tasks = plan_tasks(n);
    std::vector<Partial> partials(tasks.size());
    std::atomic<std::size_t> cursor{0};
    auto worker = [&] {
        for (std::size_t t; (t = cursor.fetch_add(1)) < tasks.size();) {
            Partial& out = partials[t];
            out.claims.resize(kClaimCount);
            Checker check(out, selected, options.counterexample_limit);
            if (tasks[t].paths) {
                PathStream stream(n, tasks[t].prefix);
                while (auto p = stream.next())
                    check_path(check, out, *p);
            } else {
                MatchingStream stream(n, tasks[t].prefix);
                while (auto m = stream.next())
                    check_matching(check, out, *m);
            }
        }
    };
    const unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(tasks.size())));
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < jobs; ++j)
            pool.emplace_back(worker);
        for (auto& th : pool)
            th.join();
    }

    // Merge in task order so the report does not depend on scheduling.
    std::vector<ClaimResult> merged(kClaimCount);
    Partial totals;
    std::set<std::vector<int>> seen_paths;
    std::set<std::vector<int>> seen_matchings;
    std::uint64_t duplicate_paths = 0;
    std::uint64_t duplicate_matchings = 0;
    for (Partial& part : partials) {
        for (std::size_t id = 0; id < kClaimCount; ++id) {
            ClaimResult& into = merged[id];
            const ClaimResult& from = part.claims[id];
            into.tested += from.tested;
            into.failed += from.failed;
            for (const std::string& ce : from.counterexamples)
                if (into.counterexamples.size() < options.counterexample_limit)
                    into.counterexamples.push_back(ce);
        }
        totals.paths += part.paths;
        totals.matchings += part.matchings;
        for (auto& h : part.seen_paths)
            duplicate_paths += seen_paths.insert(h).second ? 0 : 1;
        for (auto& t : part.seen_matchings)
            duplicate_matchings += seen_matchings.insert(t).second ? 0 : 1;
        add_counts(totals.north, part.north);
        add_counts(totals.nest, part.nest);
        add_counts(totals.cross, part.cross);
        add_counts(totals.st, part.st);
    }

    const auto expected = double_factorial(n);
    auto finish_cardinality = [&](ClaimId id, std::uint64_t count, std::uint64_t duplicates,
                                  const char* what) {
        ClaimResult& c = merged[id];
        // Slices are disjoint by construction; a duplicate across slices is still a failure.
        c.failed += duplicates;
        if (expected != count) {
            ++c.failed;
            if (c.counterexamples.size() < options.counterexample_limit)
                c.counterexamples.push_back(std::string(what) + " stream yielded " + std::to_string(count)
                                            + ", expected " + expected.str());
        }
    };
    if (selected[kCardinalityPaths])
        finish_cardinality(kCardinalityPaths, totals.paths, duplicate_paths, "path");
    if (selected[kCardinalityMatchings])
        finish_cardinality(kCardinalityMatchings, totals.matchings, duplicate_matchings, "matching");

    auto finish_distribution = [&](ClaimId id, const char* left_name, const std::map<int, std::uint64_t>& left,
                                   const char* right_name, const std::map<int, std::uint64_t>& right,
                                   std::uint64_t objects) {
        ClaimResult& c = merged[id];
        c.tested = objects;
        if (left != right) {
            c.failed = 1;
            c.counterexamples.push_back(std::string(left_name) + " {" + show(left) + "} vs "
                                        + right_name + " {" + show(right) + "}");
        }
    };
    if (selected[kDistNorthNestings])
        finish_distribution(kDistNorthNestings, "north_steps", totals.north, "nestings", totals.nest,
                            totals.paths);
    if (selected[kDistNestingsCrossings])
        finish_distribution(kDistNestingsCrossings, "nestings", totals.nest, "crossings", totals.cross,
                            totals.matchings);
    if (selected[kDistStNestings])
        finish_distribution(kDistStNestings, "st_total", totals.st, "nestings", totals.nest,
                            totals.matchings);

    VerificationReport report;
    report.n = n;
    for (std::size_t id = 0; id < kClaimCount; ++id) {
        if (!selected[id])
            continue;
        merged[id].label = std::string(kCatalog[id].label);
        report.checks.push_back(std::move(merged[id]));
    }
    report.elapsed = std::chrono::steady_clock::now() - started;
    return report;
}

std::string report_to_text(const VerificationReport& report, bool with_timing)
{
    std::ostringstream os;
    os << "n=" << report.n << ": " << double_factorial(report.n).str() << " instances per claim\n";
    std::size_t width = 0;
    for (const ClaimResult& c : report.checks)
        width = std::max(width, c.label.size());
    for (const ClaimResult& c : report.checks) {
        os << "  " << (c.failed == 0 ? "[ok]  " : "[FAIL]") << ' ' << std::left
           << std::setw(static_cast<int>(width)) << c.label << std::right << "  " << c.tested
           << " tested, " << c.failed << " failed\n";
        for (const std::string& ce : c.counterexamples)
            os << "      counterexample: " << ce << '\n';
    }
    if (with_timing)
        os << "  elapsed " << std::fixed << std::setprecision(3) << report.elapsed.count() << " s\n";
    os << (report.passed() ? "PASS" : "FAIL") << '\n';
    return os.str();
}

namespace {

nlohmann::ordered_json report_json(const VerificationReport& report)
{
    nlohmann::ordered_json claims = nlohmann::ordered_json::object();
    for (const ClaimResult& c : report.checks)
        claims[c.label] = {{"tested", c.tested}, {"failed", c.failed}, {"counterexamples", c.counterexamples}};
    return {{"format_version", VerificationReport::kFormatVersion},
            {"n", report.n},
            {"passed", report.passed()},
            {"claims", std::move(claims)}};
}

} // namespace

std::string report_to_json(const VerificationReport& report) { return report_json(report).dump(2); }

} // namespace wedgematch
