#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chowcalc/output.hpp"

#include <cstdlib>
#include <filesystem>
#include <string>

using namespace chowcalc;

namespace {

GradedTable sample_table()
{
    std::vector<DiagonalGenerator> gens;
    gens.push_back({"c1", 1, 2});
    gens.push_back({"c2", 2, 8});
    return graded_table(DiagonalPresentation(std::move(gens)), 3);
}

struct EnvGuard {
    std::string name;
    std::string saved;
    bool had = false;

    explicit EnvGuard(const std::string& n) : name(n)
    {
        if (const char* v = std::getenv(name.c_str())) {
            saved = v;
            had = true;
        }
    }
    ~EnvGuard()
    {
        if (had)
            ::setenv(name.c_str(), saved.c_str(), 1);
        else
            ::unsetenv(name.c_str());
    }
};

}  // namespace

TEST_CASE("document construction and validation")
{
    OutputDocument doc = make_document("ring:gl:n=2:q=3:d=3:invert=", sample_table());
    CHECK(doc.cutoff == 3);
    CHECK(doc.version == tool_version());
    REQUIRE(doc.components.size() == 4);
    CHECK(doc.components[0].first == 0);
    CHECK(doc.components[3].first == 3);
    CHECK_NOTHROW(doc.validate());

    OutputDocument empty;
    CHECK_THROWS_AS(empty.validate(), std::invalid_argument);

    OutputDocument unsorted = doc;
    std::swap(unsorted.components[1], unsorted.components[2]);
    CHECK_THROWS_AS(unsorted.validate(), std::invalid_argument);

    OutputDocument overflow = doc;
    overflow.cutoff = 2;
    CHECK_THROWS_AS(overflow.validate(), std::invalid_argument);
}

TEST_CASE("format parsing")
{
    CHECK(parse_format("text") == OutputFormat::text);
    CHECK(parse_format("csv") == OutputFormat::csv);
    CHECK(parse_format("doc") == OutputFormat::doc);
    CHECK(!parse_format("json"));
    CHECK(!parse_format(""));
    CHECK(std::string(format_name(OutputFormat::csv)) == "csv");
}

TEST_CASE("text rendering aligns columns")
{
    OutputDocument doc = make_document("ring:gl:n=2:q=3:d=3:invert=", sample_table());
    CHECK(render(doc, OutputFormat::text) ==
          "degree  group\n"
          "     0  Z\n"
          "     1  Z/2\n"
          "     2  Z/2 + Z/8\n"
          "     3  Z/2 + Z/2\n");
}

TEST_CASE("csv rendering")
{
    OutputDocument doc = make_document("ring:gl:n=2:q=3:d=3:invert=", sample_table());
    CHECK(render(doc, OutputFormat::csv) ==
          "degree,factors\n"
          "0,0\n"
          "1,2\n"
          "2,2;8\n"
          "3,2;2\n");
}

TEST_CASE("doc rendering carries every field except the timestamp")
{
    OutputDocument doc = make_document("ring:gl:n=2:q=3:d=3:invert=", sample_table());
    std::string expected = "descriptor: ring:gl:n=2:q=3:d=3:invert=\n"
                           "version: " + std::string(tool_version()) + "\n"
                           "cutoff: 3\n"
                           "component: 0=0\n"
                           "component: 1=2\n"
                           "component: 2=2;8\n"
                           "component: 3=2;2\n";
    CHECK(render(doc, OutputFormat::doc) == expected);

    OutputDocument stamped = doc;
    stamped.timestamp = "2026-08-23T00:00:00Z";
    for (OutputFormat f : {OutputFormat::text, OutputFormat::csv, OutputFormat::doc}) {
        CHECK(render(stamped, f) == render(doc, f));
        CHECK(render(stamped, f).find("2026") == std::string::npos);
    }
}

TEST_CASE("trivial and infinite components serialize distinctly")
{
    std::vector<DiagonalGenerator> gens;
    gens.push_back({"u", 2, 1});  // annihilator 1: trivial in every degree
    gens.push_back({"v", 3, 0});  // free generator
    OutputDocument doc =
        make_document("x", graded_table(DiagonalPresentation(std::move(gens)), 3));
    CHECK(render(doc, OutputFormat::csv) ==
          "degree,factors\n"
          "0,0\n"
          "1,\n"
          "2,\n"
          "3,0\n");
    CHECK(render(doc, OutputFormat::text) ==
          "degree  group\n"
          "     0  Z\n"
          "     1  0\n"
          "     2  0\n"
          "     3  Z\n");
    CHECK(render(doc, OutputFormat::doc).find("component: 1=\n") != std::string::npos);
}

TEST_CASE("canonical query strings")
{
    CHECK(canonical_ring_query(GroupKind::gl(2), 3, 3, {}) ==
          "ring:gl:n=2:q=3:d=3:invert=");
    CHECK(canonical_ring_query(GroupKind::sp_from_m(2), 3, 4, {Int(3), Int(2)}) ==
          "ring:sp:m=2:q=3:d=4:invert=2,3");
    CHECK(canonical_ring_query(GroupKind::sl(3), 4, 6, {Int(2), Int(3)}) ==
          "ring:sl:n=3:q=4:d=6:invert=2,3");
    CHECK(canonical_levi_query({2, 1}, 2, 4) == "levi:blocks=2,1:q=2:d=4");
    CHECK(canonical_wreath_query(3, 1, 2, 6) == "wreath:l=3:b=1:h=2:d=6");
    CHECK(canonical_sylow_shape_query(6, 2, 3) == "sylow-shape:n=6:q=2:l=3");
    CHECK(canonical_sylow_model_query(6, 2, 3, 4) == "sylow-model:n=6:q=2:l=3:d=4");
}

TEST_CASE("fnv1a matches the published vectors")
{
    CHECK(fnv1a("") == 14695981039346656037ull);
    CHECK(fnv1a("a") == 0xaf63dc4c8601ec8cull);
    CHECK(fnv1a("foobar") == 0x85944171f73967e8ull);
    CHECK(fnv1a("ring:gl:n=2:q=3:d=3:invert=") != fnv1a("ring:gl:n=2:q=3:d=4:invert="));
}

TEST_CASE("cache roundtrip under CHOWCALC_CACHE")
{
    EnvGuard guard("CHOWCALC_CACHE");
    std::filesystem::path dir =
        std::filesystem::temp_directory_path() / "chowcalc-test-cache";
    std::filesystem::remove_all(dir);
    ::setenv("CHOWCALC_CACHE", dir.c_str(), 1);

    REQUIRE(cache_directory() == dir.string());
    std::string key = cache_key("ring:gl:n=2:q=3:d=3:invert=", "text");
    CHECK(!cache_fetch(key));
    cache_store(key, "payload bytes\n");
    auto hit = cache_fetch(key);
    REQUIRE(hit.has_value());
    CHECK(*hit == "payload bytes\n");

    // Distinct formats and versions key separately.
    CHECK(!cache_fetch(cache_key("ring:gl:n=2:q=3:d=3:invert=", "csv")));
    CHECK(cache_key("x", "text").find(tool_version()) != std::string::npos);

    // Overwrites are last-writer-wins.
    cache_store(key, "second\n");
    CHECK(cache_fetch(key) == "second\n");

    std::filesystem::remove_all(dir);
}

TEST_CASE("cache directory resolution order")
{
    EnvGuard cache_guard("CHOWCALC_CACHE");
    EnvGuard xdg_guard("XDG_CACHE_HOME");
    EnvGuard home_guard("HOME");

    ::setenv("CHOWCALC_CACHE", "/tmp/explicit-cache", 1);
    ::setenv("XDG_CACHE_HOME", "/tmp/xdg", 1);
    CHECK(cache_directory() == "/tmp/explicit-cache");

    ::unsetenv("CHOWCALC_CACHE");
    CHECK(cache_directory() == "/tmp/xdg/chowcalc");

    ::unsetenv("XDG_CACHE_HOME");
    ::setenv("HOME", "/tmp/home", 1);
    CHECK(cache_directory() == "/tmp/home/.cache/chowcalc");

    ::unsetenv("HOME");
    CHECK(!cache_directory());
}
