#include <gtest/gtest.h>

#include "wedgematch/enumeration.hpp"
#include "wedgematch/error.hpp"
#include "wedgematch/io.hpp"

using namespace wedgematch;

TEST(MatchingText, ParseAndFormat)
{
    const Matching m = parse_matching("(1,3),(2,7),(4,6),(5,8),(9,10)");
    EXPECT_EQ(m.size(), 5);
    EXPECT_EQ(parse_matching(" ( 9 , 10 ) ,(4,6),( 2,7),(5,8) , (3,1) "), m);
    EXPECT_EQ(format_matching(m), "(1,3),(2,7),(4,6),(5,8),(9,10)");
    EXPECT_EQ(parse_matching("[[1,3],[2,7],[4,6],[5,8],[9,10]]"), m);
    EXPECT_EQ(matching_to_json(m).dump(), "[[1,3],[2,7],[4,6],[5,8],[9,10]]");
}

TEST(MatchingText, Errors)
{
    EXPECT_THROW((void)parse_matching(""), ParseError);
    EXPECT_THROW((void)parse_matching("(1,2"), ParseError);
    EXPECT_THROW((void)parse_matching("(1,2)(3,4)"), ParseError);
    EXPECT_THROW((void)parse_matching("(a,2)"), ParseError);
    EXPECT_THROW((void)parse_matching("[[1,2,3]]"), ParseError);
    EXPECT_THROW((void)parse_matching("[[1,2],"), ParseError);
    EXPECT_THROW((void)parse_matching("(1,3),(2,3)"), InvalidObject);
    EXPECT_THROW((void)parse_matching("(1,6),(2,3)"), InvalidObject);
}

TEST(PathText, ParseAndFormat)
{
    EXPECT_EQ(format_heights(parse_heights("0,-1,0")), "0,-1,0");
    EXPECT_EQ(parse_heights(" 0 , -1 , 0 "), parse_heights("[0,-1,0]"));
    EXPECT_EQ(parse_path("ENESSS"), parse_heights("0,1"));
    EXPECT_EQ(path_to_json(parse_heights("0,1")).dump(), "[0,1]");
    EXPECT_THROW((void)parse_heights("0,,1"), ParseError);
    EXPECT_THROW((void)parse_heights("0,2"), InvalidObject);
    EXPECT_THROW((void)parse_path("EXS"), ParseError);
}

TEST(ObjectText, AutoDetect)
{
    EXPECT_TRUE(std::holds_alternative<Matching>(parse_object("(1,2)")));
    EXPECT_TRUE(std::holds_alternative<Matching>(parse_object("[[1,2]]")));
    EXPECT_TRUE(std::holds_alternative<WedgePath>(parse_object("ES")));
    EXPECT_TRUE(std::holds_alternative<WedgePath>(parse_object("0,1")));
    EXPECT_TRUE(std::holds_alternative<WedgePath>(parse_object("[0,1]")));
    EXPECT_TRUE(std::holds_alternative<WedgePath>(parse_object("0", InputKind::Heights)));
    EXPECT_THROW((void)parse_object("0", InputKind::Steps), ParseError);
    EXPECT_THROW((void)parse_input_kind("tree"), ParseError);
}

// Printers and parsers are mutually inverse on every object up to size 6.
TEST(TextRoundTrip, Exhaustive)
{
    for (int n = 1; n <= 6; ++n) {
        for_each_matching(n, [](const Matching& m) {
            ASSERT_EQ(parse_matching(format_matching(m)), m);
            ASSERT_EQ(std::get<Matching>(parse_object(matching_to_json(m).dump())), m);
        });
        for_each_path(n, [](const WedgePath& p) {
            ASSERT_EQ(parse_heights(format_heights(p)), p);
            ASSERT_EQ(parse_path(p.step_string()), p);
            ASSERT_EQ(std::get<WedgePath>(parse_object(path_to_json(p).dump())), p);
        });
    }
}
