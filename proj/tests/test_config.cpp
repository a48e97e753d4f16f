#include <doctest.h>

#include <algorithm>
#include <string>

#include "thinfilm/config.hpp"

using namespace thinfilm;

namespace {
bool mentions(const ConfigError& e, const std::string& key) {
    return std::any_of(e.violations.begin(), e.violations.end(), [&](const std::string& v) {
        return v.find(key) != std::string::npos;
    });
}
} // namespace

TEST_CASE("an empty object parses to the defaults") {
    const RunConfig c = parse_config("{}");
    CHECK(c.model.bc == "periodic");
    CHECK(c.model.truncation == 32);
    CHECK(c.sim.h == 1e-3);
    CHECK(c.sim.seed == 1);
    CHECK(c.scan.truncations == std::vector<std::size_t>{16, 32, 64});
}

TEST_CASE("canonical emission round-trips to a fixed point") {
    RunConfig c;
    c.model.nu = -0.5;
    c.model.bc = "neumann";
    c.model.noise.type = "formula";
    c.model.noise.c = 0.3;
    c.model.noise.p = 1.5;
    c.sim.seed = 123456789;
    const std::string once = emit_config(c);
    const std::string twice = emit_config(parse_config(once));
    CHECK(once == twice);
}

TEST_CASE("all violations are reported together") {
    const std::string text = R"({
        "model": {"bc": "mixed", "length": -1.0, "truncation": 0},
        "sim": {"h": -0.5, "stride": 0}
    })";
    try {
        parse_config(text);
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(e.violations.size() >= 5);
        CHECK(mentions(e, "model.bc"));
        CHECK(mentions(e, "model.length"));
        CHECK(mentions(e, "model.truncation"));
        CHECK(mentions(e, "sim.h"));
        CHECK(mentions(e, "sim.stride"));
    }
}

TEST_CASE("type mismatches are violations, not crashes") {
    try {
        parse_config(R"({"sim": {"h": "fast"}})");
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(mentions(e, "h"));
    }
}

TEST_CASE("invalid JSON is a config error") {
    CHECK_THROWS_AS(parse_config("{"), ConfigError);
    CHECK_THROWS_AS(parse_config("[1,2,3]"), ConfigError);
}

TEST_CASE("noise configs build the advertised spectra") {
    NoiseConfig white;
    CHECK(white.build(3).alphas == std::vector<double>{1.0, 1.0, 1.0});

    NoiseConfig formula;
    formula.type = "formula";
    formula.c = 2.0;
    formula.p = 1.0;
    const NoiseSpectrum f = formula.build(2);
    CHECK(f.alphas[1] == doctest::Approx(1.0));

    NoiseConfig arr;
    arr.type = "array";
    arr.alphas = {0.5};
    const NoiseSpectrum a = arr.build(3);  // padded with zeros to N
    CHECK(a.alphas == std::vector<double>{0.5, 0.0, 0.0});
}

TEST_CASE("model config builds a spec with matching spectrum size") {
    ModelConfig mc;
    mc.bc = "neumann";
    mc.truncation = 5;
    mc.nu = -0.25;
    const ModelSpec m = mc.build();
    CHECK(m.basis.bc == BoundaryCondition::Neumann);
    CHECK(m.noise.modes() == 5);
    CHECK(m.spectrum().modes() == 5);
}
