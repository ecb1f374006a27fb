#include <gtest/gtest.h>

#include <set>

#include "oracle.hpp"
#include "wedgematch/enumeration.hpp"
#include "wedgematch/error.hpp"
#include "wedgematch/path.hpp"

using namespace wedgematch;

namespace {

WedgePath h(std::vector<int> heights) { return WedgePath::from_heights(std::move(heights)); }

std::vector<int> heights_of(const WedgePath& p) { return {p.heights().begin(), p.heights().end()}; }

} // namespace

TEST(FromHeights, StepStrings)
{
    EXPECT_EQ(h({0}).step_string(), "ES");
    EXPECT_EQ(h({0, -1}).step_string(), "ESES");
    EXPECT_EQ(h({0, 1}).step_string(), "ENESSS");
    EXPECT_EQ(h({0, 0}).step_string(), "EESS");
}

TEST(FromHeights, BoundViolation)
{
    try {
        (void)h({0, 2});
        FAIL();
    } catch (const InvalidObject& e) {
        const std::string what = e.what();
        EXPECT_NE(what.find("a_2"), std::string::npos) << what;
        EXPECT_NE(what.find("= 2"), std::string::npos) << what;
    }
    EXPECT_THROW((void)h({1}), InvalidObject);
    EXPECT_THROW((void)h({}), InvalidObject);
    EXPECT_THROW((void)h({0, 1, -3}), InvalidObject);
}

TEST(ParseSteps, Valid)
{
    EXPECT_EQ(heights_of(WedgePath::parse_steps("ESES")), (std::vector<int>{0, -1}));
    EXPECT_EQ(heights_of(WedgePath::parse_steps("ENESSS")), (std::vector<int>{0, 1}));
    EXPECT_EQ(heights_of(WedgePath::parse_steps("ES")), (std::vector<int>{0}));
}

TEST(ParseSteps, Errors)
{
    EXPECT_THROW((void)WedgePath::parse_steps("EN"), InvalidObject);      // wrong endpoint
    EXPECT_THROW((void)WedgePath::parse_steps("ESESS"), InvalidObject);   // leaves the wedge at (2,-3)
    EXPECT_THROW((void)WedgePath::parse_steps("ENSS"), InvalidObject);    // reversal
    EXPECT_THROW((void)WedgePath::parse_steps("SE"), InvalidObject);      // wedge at x = 0
    EXPECT_THROW((void)WedgePath::parse_steps("E"), InvalidObject);
    EXPECT_THROW((void)WedgePath::parse_steps("ESx"), ParseError);
    EXPECT_THROW((void)WedgePath::parse_steps("es"), ParseError);
    EXPECT_THROW((void)WedgePath::parse_steps(""), ParseError);
    try {
        (void)WedgePath::parse_steps("EENSSS");
        FAIL();
    } catch (const InvalidObject& e) {
        EXPECT_NE(std::string(e.what()).find("reversal at step 4"), std::string::npos) << e.what();
    }
}

TEST(PathStatistics, Examples)
{
    EXPECT_EQ(north_steps(h({0, 1, 0})), 1);
    EXPECT_EQ(north_steps(h({0, 1, 2})), 2);
    EXPECT_EQ(north_steps(h({0, -1, -2})), 0);
    EXPECT_EQ(final_south_run(h({0})), 1);
    EXPECT_EQ(final_south_run(h({0, 1})), 3);
    EXPECT_EQ(final_south_run(h({0, -1})), 1);
    EXPECT_TRUE(is_dyck(h({0, 0, -1})));
    EXPECT_FALSE(is_dyck(h({0, 1})));
    EXPECT_TRUE(is_dyck(h({0, -1, -2})));
}

TEST(PathComponents, Examples)
{
    const auto staircase = components(h({0, -1, -2}));
    ASSERT_EQ(staircase.size(), 3u);
    for (const auto& c : staircase)
        EXPECT_EQ(c, h({0}));

    EXPECT_EQ(components(h({0, 1})).size(), 1u);

    const auto split = components(h({0, -1, 0}));
    ASSERT_EQ(split.size(), 2u);
    EXPECT_EQ(split[0], h({0}));
    EXPECT_EQ(split[1], h({0, 1}));
}

TEST(ReversedSouthPositions, Examples)
{
    EXPECT_EQ(reversed_south_positions(h({0})), (std::set<int>{1}));
    EXPECT_EQ(reversed_south_positions(h({0, 0})), (std::set<int>{1, 2}));
    // ESES: steps 4 and 2 are south.
    EXPECT_EQ(reversed_south_positions(h({0, -1})), (std::set<int>{1, 3}));
    EXPECT_THROW((void)reversed_south_positions(h({0, 1})), InvalidObject);
}

TEST(PathInvariants, Exhaustive)
{
    for (int n = 1; n <= 6; ++n) {
        for_each_path(n, [&](const WedgePath& p) {
            EXPECT_EQ(WedgePath::from_heights(heights_of(p)), p);
            const std::string steps = p.step_string();
            EXPECT_EQ(WedgePath::parse_steps(steps), p);
            EXPECT_EQ(oracle::count_char(steps, 'E'), n);
            EXPECT_EQ(oracle::count_char(steps, 'N'), north_steps(p));
            EXPECT_EQ(oracle::count_char(steps, 'S'), south_steps(p));
            EXPECT_EQ(oracle::count_char(steps, 'S') - oracle::count_char(steps, 'N'), n);
            if (is_dyck(p))
                EXPECT_EQ(static_cast<int>(steps.size()), 2 * n);
            const auto parts = components(p);
            EXPECT_EQ(concatenate(parts), p);
            for (const auto& part : parts)
                EXPECT_EQ(components(part).size(), 1u);
        });
    }
}

// The walk oracle never sees heights; the two encodings must agree.
TEST(PathInvariants, MatchesWalkOracle)
{
    for (int n = 1; n <= 6; ++n) {
        std::set<std::string> walks;
        for (const auto& w : oracle::all_walks(n))
            walks.insert(w);
        std::set<std::string> ours;
        for_each_path(n, [&](const WedgePath& p) { ours.insert(p.step_string()); });
        EXPECT_EQ(ours, walks) << "n = " << n;
    }
}
