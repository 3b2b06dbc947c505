#ifndef GOSS_CLI_CONFIG_HPP
#define GOSS_CLI_CONFIG_HPP

#include <cstdint>
#include <string>

#include "json.hpp"

namespace goss {

// Run description shared by every subcommand; serialized into the output so
// a run is reproducible from its own report.
struct RunConfig {
    std::string subcommand;
    uint32_t p = 0;
    uint32_t b = 1;
    uint64_t q = 0;  // alternative to (p, b)
    std::string y;   // exponent grammar: integer | digits:p:... | ratio:a/c
    std::string f;   // vadic uniformizer, coefficient list low-degree-first
    long j = 0;      // special-value exponent
    uint32_t a4 = 0, a6 = 0;
    long g = 0, d = 1;
    long xdeg = 4;
    uint32_t precision = 64;
    long nmax = 4;
    std::string format = "json";
    uint64_t seed = 1;
    uint64_t budget = 200000000;
    long samples = 3;

    nlohmann::json to_json() const {
        return nlohmann::json{{"subcommand", subcommand},
                              {"p", p},
                              {"b", b},
                              {"q", q},
                              {"y", y},
                              {"f", f},
                              {"j", j},
                              {"a4", a4},
                              {"a6", a6},
                              {"g", g},
                              {"d", d},
                              {"xdeg", xdeg},
                              {"precision", precision},
                              {"nmax", nmax},
                              {"format", format},
                              {"seed", seed},
                              {"budget", budget},
                              {"samples", samples}};
    }

    static RunConfig from_json(const nlohmann::json& js) {
        RunConfig c;
        c.subcommand = js.at("subcommand").get<std::string>();
        c.p = js.at("p").get<uint32_t>();
        c.b = js.at("b").get<uint32_t>();
        c.q = js.at("q").get<uint64_t>();
        c.y = js.at("y").get<std::string>();
        c.f = js.at("f").get<std::string>();
        c.j = js.at("j").get<long>();
        c.a4 = js.at("a4").get<uint32_t>();
        c.a6 = js.at("a6").get<uint32_t>();
        c.g = js.at("g").get<long>();
        c.d = js.at("d").get<long>();
        c.xdeg = js.at("xdeg").get<long>();
        c.precision = js.at("precision").get<uint32_t>();
        c.nmax = js.at("nmax").get<long>();
        c.format = js.at("format").get<std::string>();
        c.seed = js.at("seed").get<uint64_t>();
        c.budget = js.at("budget").get<uint64_t>();
        c.samples = js.at("samples").get<long>();
        return c;
    }

    bool operator==(const RunConfig& o) const { return to_json() == o.to_json(); }
};

}  // namespace goss

#endif
