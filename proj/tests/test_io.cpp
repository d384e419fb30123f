#include "support.hpp"
#include "tlf/errors.hpp"
#include "tlf/io.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

using namespace tlf;
using namespace tlf::test;

TEST(Json, ParsesDiscrete)
{
    const SignalBundle x = parse_bundle_json(R"({"time":"discrete","T":4,"props":{"p":[0,1,1,0,0]}})");
    EXPECT_EQ(x.time_kind(), TimeKind::discrete);
    EXPECT_EQ(x.discrete("p").values(), (std::vector<std::uint8_t>{0, 1, 1, 0, 0}));
}

TEST(Json, ParsesContinuous)
{
    const SignalBundle x = parse_bundle_json(R"({"time":"continuous","T":12,"props":{"p":[[2,6]]}})");
    EXPECT_EQ(x.continuous("p"), IntervalSet({{2, 6}}, 12));
    EXPECT_EQ(x.domain_end(), 12.0);
}

TEST(Json, Errors)
{
    EXPECT_THROW((void)parse_bundle_json(R"({"time":"continuous","T":12,"props":{"p":[[5,3]]}})"), domain_error);
    EXPECT_THROW((void)parse_bundle_json(R"({"time":"discrete","T":2,"props":{"p":[0,1]}})"), domain_error);
    EXPECT_THROW((void)parse_bundle_json(R"({"time":"discrete","T":1,"props":{"p":[0,2]}})"), domain_error);
    EXPECT_THROW((void)parse_bundle_json(R"({"time":"discrete","T":1})"), parse_error);
    EXPECT_THROW((void)parse_bundle_json(R"({"time":"weekly","T":1,"props":{}})"), parse_error);
    EXPECT_THROW((void)parse_bundle_json("{"), parse_error);
    EXPECT_THROW((void)parse_bundle_json(R"({"time":"continuous","T":4,"props":{"p":[1,2]}})"), parse_error);
}

TEST(Json, RoundTripIsByteExact)
{
    for (const std::string text : {R"({"time":"discrete","T":4,"props":{"p":[0,1,1,0,0],"q":[1,1,1,1,1]}})",
                                   R"({"time":"continuous","T":12.5,"props":{"p":[[0.25,6],[7,12.5]],"q":[]}})"})
        EXPECT_EQ(to_json(parse_bundle_json(text)), text);
}

TEST(Csv, ParsesAndRoundTrips)
{
    const std::string text = "t,p,q\n0,0,1\n1,1,1\n2,0,0\n";
    const SignalBundle x = parse_bundle_csv(text);
    EXPECT_EQ(x.t_end(), 2);
    EXPECT_TRUE(x.discrete("p")[1]);
    EXPECT_EQ(to_csv(x), text);
    EXPECT_THROW((void)parse_bundle_csv("t,p\n0,0\n2,1\n"), parse_error);
    EXPECT_THROW((void)parse_bundle_csv("t,p\n0,3\n"), domain_error);
    EXPECT_THROW((void)parse_bundle_csv("x,p\n0,1\n"), parse_error);
}

TEST(LoadBundle, PicksFormatFromExtension)
{
    const auto dir = std::filesystem::temp_directory_path();
    const auto csv = dir / "tlf_io_test.csv";
    const auto json = dir / "tlf_io_test.json";
    std::ofstream(csv) << "t,p\n0,1\n1,0\n";
    std::ofstream(json) << R"({"time":"discrete","T":1,"props":{"p":[1,0]}})";
    EXPECT_EQ(load_bundle(csv.string()), load_bundle(json.string()));
    EXPECT_THROW((void)load_bundle((dir / "tlf_missing_file.json").string()), parse_error);
    std::filesystem::remove(csv);
    std::filesystem::remove(json);
}

TEST(ResultWriters, Formats)
{
    EXPECT_EQ(values_csv({0, 0.25, 1}), "t,value\n0,0\n1,0.25\n2,1\n");
    EXPECT_EQ(knots_csv(PiecewiseLinear({{0, 0}, {2.5, 1}}, 4)), "t,value\n0,0\n2.5,1\n");
    const SpanSet s({Span::right_open(1, 2), Span::point(3), Span::open(4, 5)});
    EXPECT_EQ(satisfaction_json(s, 6),
              R"({"T":6,"intervals":[[1,2],[4,5]],"isolated_points":[3],"excluded_points":[4]})"
              "\n");
}
