#include <doctest.h>

#include <clocale>
#include <filesystem>
#include <fstream>

#include "commlip/errors.hpp"
#include "commlip/io.hpp"

using namespace commlip;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name)
{
    const auto dir = fs::temp_directory_path() / "commlip_io_tests";
    fs::create_directories(dir);
    return dir / name;
}

void write(const fs::path& p, const std::string& s)
{
    std::ofstream(p, std::ios::binary) << s;
}

} // namespace

TEST_SUITE("io") {

TEST_CASE("parameter text parsing")
{
    const auto v = parse_parameter_text("  0.5\n\n1e-3\t\r\n+2.25\n-4\n");
    REQUIRE(v.size() == 4);
    CHECK(v[0] == 0.5);
    CHECK(v[1] == 1e-3);
    CHECK(v[2] == 2.25);
    CHECK(v[3] == -4.0);
    CHECK(parse_parameter_text("").empty());
    CHECK_THROWS_AS(parse_parameter_text("0,5\n"), FormatError);
    CHECK_THROWS_AS(parse_parameter_text("1.0 2.0\n"), FormatError);
    CHECK_THROWS_AS(parse_parameter_text("abc\n"), FormatError);
}

TEST_CASE("parsing ignores the C locale setting")
{
    const char* old = std::setlocale(LC_NUMERIC, nullptr);
    const std::string saved = old ? old : "C";
    std::setlocale(LC_NUMERIC, "de_DE.UTF-8"); // may be unavailable; harmless then
    CHECK(parse_parameter_text("1.5\n")[0] == 1.5);
    std::setlocale(LC_NUMERIC, saved.c_str());
}

TEST_CASE("parameter tables")
{
    const auto a = scratch("a.txt");
    const auto b = scratch("b.txt");
    write(a, "0.1\n0.2\n");
    write(b, "1\n2\n");
    const auto t = read_parameter_table(a, b, 2);
    CHECK(t[1].a == 0.2);
    CHECK(t[1].b == 2.0);
    CHECK_THROWS_AS(read_parameter_table(a, b, 3), BadParameter);
    write(b, "1\n");
    CHECK_THROWS_AS(read_parameter_table(a, b, 2), BadParameter);
    CHECK_THROWS_AS(read_parameter_file(scratch("missing.txt")), FormatError);
}

TEST_CASE("certificate round trip is bit identical")
{
    std::vector<BoundPoint> pts{{0.5, 1.0123456789012345, {0.31, 0.17}, false},
                                {0.75, 1.0098765432109876, {0.29, 0.11}, false},
                                {1.0, 1.0111111111111111, {0.25, 0.066}, false}};
    const auto cert = global_constant(pts, 0.5, 1.0);
    const auto path = scratch("cert.json");
    atomic_write(path, certificate_to_json(cert));
    CHECK_FALSE(fs::exists(path.string() + ".tmp"));
    const auto back = read_certificate(path);
    CHECK(back.global_C == cert.global_C);
    CHECK(back.corner_small == cert.corner_small);
    CHECK(back.corner_large == cert.corner_large);
    REQUIRE(back.points.size() == 3);
    for (std::size_t k = 0; k < 3; ++k) {
        CHECK(back.points[k].c == cert.points[k].c);
        CHECK(back.points[k].C_k == cert.points[k].C_k);
        CHECK(back.points[k].params == cert.points[k].params);
        CHECK(back.lifted[k] == cert.lifted[k]);
    }
    CHECK_THROWS_AS(certificate_from_json("{\"grid\": [1]}"), FormatError);
    CHECK_THROWS_AS(certificate_from_json("not json"), FormatError);
}

TEST_CASE("csv columns")
{
    std::vector<BoundPoint> pts{{0.5, 1.01, {0.3, 0.1}, false}, {1.0, 10.0, {0.1, 10.0}, true}};
    const auto csv = points_to_csv(pts, {1.02});
    CHECK(csv.rfind("c_k,C_k,D_k,a,b,degenerate\n", 0) == 0);
    CHECK(csv.find("0.5,1.01,1.02,0.3,0.1,0\n") != std::string::npos);
    CHECK(csv.find("1,10,nan,0.1,10,1\n") != std::string::npos);
}

TEST_CASE("campaign json")
{
    CampaignConfig cfg;
    cfg.trials = 5;
    cfg.seed = 9;
    const auto json = campaign_to_json(monte_carlo_campaign(cfg));
    CHECK(json.find("\"seed\": 9") != std::string::npos);
    CHECK(json.find("\"norm\": \"operator\"") != std::string::npos);
    CHECK(json.find("\"argmax\"") != std::string::npos);
    CHECK(json.find("\"max_ratio\"") != std::string::npos);
}

}
