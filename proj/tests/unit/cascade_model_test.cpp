#include <doctest.h>

#include <sstream>

#include "../support/generators.hpp"
#include "sehp/cascade_io.hpp"
#include "sehp/types.hpp"

using namespace sehp;

TEST_CASE("parse accepts well-formed records") {
    std::istringstream in(
        R"({"id":"a","timestamps":[1.0,2.0],"horizon":10.0})"
        "\n"
        R"({"id":"b","timestamps":[],"horizon":5.0})"
        "\n");
    const auto result = parse_cascades(in);
    REQUIRE(result.cascades.size() == 2);
    CHECK(result.issues.empty());
    CHECK(result.cascades[0].id == "a");
    CHECK(result.cascades[0].size() == 2);
    CHECK(result.cascades[0].horizon == 10.0);
    CHECK(result.cascades[1].size() == 0);
    CHECK(result.cascades[1].horizon == 5.0);
}

TEST_CASE("parse rejects invariant violations per record") {
    std::istringstream in(
        R"({"id":"c","timestamps":[6.0],"horizon":5.0})"
        "\n"
        R"({"id":"d","timestamps":[-1.0],"horizon":5.0})"
        "\n"
        "not json\n"
        R"({"id":"e","timestamps":[1.0],"horizon":5.0,"extra":1})"
        "\n"
        R"({"id":"ok","timestamps":[1.0],"horizon":5.0})"
        "\n");
    const auto result = parse_cascades(in);
    REQUIRE(result.cascades.size() == 1);
    CHECK(result.cascades[0].id == "ok");
    REQUIRE(result.issues.size() == 4);
    CHECK(result.issues[0].line == 1);
    CHECK(result.issues[0].reason == "timestamp exceeds horizon");
    CHECK(result.issues[1].reason == "negative timestamp");
    CHECK(result.issues[2].line == 3);
    CHECK(result.issues[3].line == 4);
    CHECK(result.has_rejections());
}

TEST_CASE("parse sorts unsorted timestamps with a warning") {
    std::istringstream in(R"({"id":"a","timestamps":[3.0,1.0,2.0],"horizon":5.0})"
                          "\n");
    const auto result = parse_cascades(in);
    REQUIRE(result.cascades.size() == 1);
    CHECK(result.cascades[0].timestamps == std::vector<double>{1.0, 2.0, 3.0});
    REQUIRE(result.issues.size() == 1);
    CHECK_FALSE(result.issues[0].rejected);
    CHECK_FALSE(result.has_rejections());
}

TEST_CASE("parse-serialize-parse round trip is exact") {
    SplitMix64 g(11);
    std::vector<Cascade> original;
    for (int i = 0; i < 20; ++i) {
        auto c = testsupport::random_cascade(g, 0.5);
        c.id = "cascade-" + std::to_string(i);
        original.push_back(std::move(c));
    }
    // awkward but representable values
    original.push_back(Cascade{"edge", {0.1 + 0.2, 1e-17, 1234567.875}, 1e9});
    std::stable_sort(original.back().timestamps.begin(),
                     original.back().timestamps.end());

    std::ostringstream out;
    write_cascades(out, original);
    std::istringstream in(out.str());
    const auto reparsed = parse_cascades(in);
    CHECK(reparsed.issues.empty());
    REQUIRE(reparsed.cascades.size() == original.size());
    for (std::size_t i = 0; i < original.size(); ++i) {
        CHECK(reparsed.cascades[i].id == original[i].id);
        CHECK(reparsed.cascades[i].horizon == original[i].horizon);
        CHECK(reparsed.cascades[i].timestamps == original[i].timestamps);
    }
}

namespace {

Cascade make_cascade(std::string id, std::vector<double> ts, double horizon) {
    return Cascade{std::move(id), std::move(ts), horizon};
}

}  // namespace

TEST_CASE("filter applies strict thresholds") {
    const double hour = 3600.0;
    const double two_days = 48.0 * hour;
    FilterCriteria criteria{hour, 10, two_days, 100};

    std::vector<double> eleven_early(11, 100.0);
    std::vector<double> fills(90, 7200.0);
    std::vector<double> kept_ts = eleven_early;
    kept_ts.insert(kept_ts.end(), fills.begin(), fills.end());  // 101 total
    REQUIRE(kept_ts.size() == 101);

    std::vector<double> ten_early(10, 100.0);
    std::vector<double> dropped_ts = ten_early;
    dropped_ts.insert(dropped_ts.end(), 95, 7200.0);  // 105 total, only 10 early

    const std::vector<Cascade> input{
        make_cascade("kept", kept_ts, two_days),
        make_cascade("dropped-early", dropped_ts, two_days),
    };
    const auto out = filter_cascades(input, criteria);
    REQUIRE(out.size() == 1);
    CHECK(out[0].id == "kept");
}

TEST_CASE("filter boundary counts events at exactly the window edge") {
    FilterCriteria zero{0.0, 0, 10.0, 0};
    const std::vector<Cascade> input{
        make_cascade("at-zero", {0.0, 1.0}, 10.0),
        make_cascade("after-zero", {0.5, 1.0}, 10.0),
    };
    const auto out = filter_cascades(input, zero);
    REQUIRE(out.size() == 1);
    CHECK(out[0].id == "at-zero");
}

TEST_CASE("filter is idempotent and monotone in the thresholds") {
    SplitMix64 g(23);
    std::vector<Cascade> corpus;
    for (int i = 0; i < 40; ++i) {
        auto c = testsupport::random_cascade(g, 1.0);
        c.id = "c" + std::to_string(i);
        corpus.push_back(std::move(c));
    }
    FilterCriteria criteria{5.0, 3, 20.0, 8};
    const auto once = filter_cascades(corpus, criteria);
    const auto twice = filter_cascades(once, criteria);
    REQUIRE(once.size() == twice.size());
    for (std::size_t i = 0; i < once.size(); ++i) {
        CHECK(once[i].id == twice[i].id);
    }

    std::size_t previous = corpus.size() + 1;
    for (std::size_t min_early = 0; min_early < 12; ++min_early) {
        FilterCriteria c{5.0, min_early, 20.0, 0};
        const auto kept = filter_cascades(corpus, c).size();
        CHECK(kept <= previous);
        previous = kept;
    }
}

TEST_CASE("filter criteria validation") {
    CHECK_THROWS_AS(validate_criteria(FilterCriteria{10.0, 0, 5.0, 0}),
                    std::invalid_argument);
}

TEST_CASE("count_at and truncated") {
    const auto c = make_cascade("x", {1.0, 2.0, 2.0, 5.0}, 10.0);
    CHECK(c.count_at(0.0) == 0);
    CHECK(c.count_at(2.0) == 3);  // boundary inclusive
    CHECK(c.count_at(10.0) == 4);

    const auto t = c.truncated(2.0);
    CHECK(t.horizon == 2.0);
    CHECK(t.timestamps == std::vector<double>{1.0, 2.0, 2.0});
    CHECK(t.id == "x");

    const auto full = c.truncated(99.0);
    CHECK(full.horizon == 10.0);
    CHECK(full.size() == 4);
}

TEST_CASE("validation catches bad cascades and params") {
    CHECK(cascade_valid(make_cascade("ok", {}, 1.0)));
    CHECK_FALSE(cascade_valid(make_cascade("bad", {2.0, 1.0}, 3.0)));
    CHECK_FALSE(cascade_valid(make_cascade("bad", {4.0}, 3.0)));
    CHECK_FALSE(cascade_valid(make_cascade("bad", {-1.0}, 3.0)));
    CHECK_FALSE(cascade_valid(make_cascade("bad", {1.0}, 0.0)));

    CHECK(params_valid(SehpParams{1.0, 0.0, 1.0}));
    CHECK_FALSE(params_valid(SehpParams{0.0, 0.0, 1.0}));
    CHECK_FALSE(params_valid(SehpParams{1.0, -0.1, 1.0}));
    CHECK_FALSE(params_valid(SehpParams{1.0, 0.0, 0.0}));
    const double nan = std::numeric_limits<double>::quiet_NaN();
    CHECK_FALSE(params_valid(SehpParams{nan, 0.0, 1.0}));
}
