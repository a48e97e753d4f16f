#include <doctest.h>

#include "thinfilm/errors.hpp"
#include "thinfilm/series.hpp"

using namespace thinfilm;

TEST_CASE("series appends enforce the shared increasing grid") {
    ObservableSeries s;
    s.names = {"x", "y"};
    s.append(0.0, {1.0, 2.0});
    s.append(0.5, {3.0, 4.0});
    CHECK(s.rows() == 2);
    CHECK_THROWS_AS(s.append(0.5, {0.0, 0.0}), IndexError);
    CHECK_THROWS_AS(s.append(1.0, {0.0}), IndexError);  // row width mismatch
    CHECK(s.column("y") == 1);
    CHECK(s.column_values("y") == std::vector<double>{2.0, 4.0});
    CHECK_THROWS_AS(s.column("z"), IndexError);
}

TEST_CASE("probe accumulator matches closed-form moments") {
    EnsembleStats::Probe p;
    for (double x : {1.0, 2.0, 3.0, 4.0}) p.add(x);
    CHECK(p.count == 4);
    CHECK(p.mean == doctest::Approx(2.5));
    CHECK(p.variance() == doctest::Approx(5.0 / 3.0));  // unbiased sample variance
    CHECK(p.min == 1.0);
    CHECK(p.max == 4.0);
}

TEST_CASE("merge pools exactly and respects identity") {
    EnsembleStats a = EnsembleStats::for_probes({"v"}, 99);
    EnsembleStats b = EnsembleStats::for_probes({"v"}, 99);
    a.add_row({1.0});
    a.add_row({2.0});
    b.add_row({3.0});
    b.add_row({4.0});
    const EnsembleStats ab = merge(a, b);
    CHECK(ab.probes[0].count == 4);
    CHECK(ab.probes[0].mean == doctest::Approx(2.5));
    CHECK(ab.probes[0].variance() == doctest::Approx(5.0 / 3.0));
    CHECK(ab.probes[0].min == 1.0);
    CHECK(ab.probes[0].max == 4.0);

    // order independence
    const EnsembleStats ba = merge(b, a);
    CHECK(ba.probes[0].mean == doctest::Approx(ab.probes[0].mean));
    CHECK(ba.probes[0].m2 == doctest::Approx(ab.probes[0].m2));

    // empty operand is the identity
    const EnsembleStats e = EnsembleStats::for_probes({"v"}, 99);
    const EnsembleStats ae = merge(a, e);
    CHECK(ae.probes[0].count == 2);
    CHECK(ae.probes[0].mean == doctest::Approx(1.5));
}

TEST_CASE("merge rejects mismatched provenance") {
    EnsembleStats a = EnsembleStats::for_probes({"v"}, 1);
    EnsembleStats b = EnsembleStats::for_probes({"v"}, 2);
    a.add_row({1.0});
    b.add_row({1.0});
    CHECK_THROWS_AS(merge(a, b), IndexError);
    EnsembleStats c = EnsembleStats::for_probes({"w"}, 1);
    c.add_row({1.0});
    CHECK_THROWS_AS(merge(a, c), IndexError);
}
