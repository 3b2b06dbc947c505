#include "doctest.h"
#include "goss/cli_config.hpp"

using namespace goss;

TEST_CASE("run configs round trip through their serialization") {
    RunConfig c;
    c.subcommand = "compare";
    c.p = 3;
    c.b = 1;
    c.y = "ratio:-7/5";
    c.xdeg = 6;
    c.precision = 128;
    c.nmax = 4;
    c.format = "json";
    c.seed = 42;
    c.budget = 123456;

    auto js = c.to_json();
    RunConfig back = RunConfig::from_json(js);
    CHECK(back == c);
    CHECK(back.to_json().dump() == js.dump());

    // a parse of the dumped text also round trips (byte-for-byte determinism)
    RunConfig again = RunConfig::from_json(nlohmann::json::parse(js.dump()));
    CHECK(again == c);
}
