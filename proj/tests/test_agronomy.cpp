#include "oracles.hpp"
#include "test_support.hpp"

#include <agrisim/agronomy.hpp>
#include <agrisim/error.hpp>
#include <agrisim/fixtures.hpp>

#include <doctest.h>

using namespace agrisim;

namespace {

Zone make_zone(double ey, double no3, double om, double credits = 0.0) {
    Zone z;
    z.yield_goal = ey;
    z.soil_nitrate = no3;
    z.organic_matter = om;
    z.n_credits = credits;
    return z;
}

FieldGrid uniform_field(std::size_t rows, std::size_t cols, const Zone& proto) {
    std::vector<Zone> zones;
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            Zone z = proto;
            z.id = ZoneId{c, r + 1};
            zones.push_back(z);
        }
    }
    return FieldGrid(rows, cols, zones);
}

oracle::ZoneInputs inputs(const Zone& z) {
    return {z.yield_goal, z.soil_nitrate, z.organic_matter, z.n_credits};
}

const double kPa = 0.9255074471074378;

} // namespace

TEST_CASE("price adjustment") {
    CHECK(price_adjustment(7.53, 1.10) == doctest::Approx(kPa).epsilon(1e-12));
    CHECK(std::abs(price_adjustment(7.53, 1.10) - fixtures::targets::kPriceAdjustment) <= 0.0005);
    CHECK(price_adjustment(0.001, 1.0) == doctest::Approx(0.26312559579).epsilon(1e-12));
    CHECK(price_adjustment(7.53, 2.20) == doctest::Approx(0.6435741345041323).epsilon(1e-12));
    CHECK_THROWS_AS(price_adjustment(7.53, 0.0), Error);
    CHECK_THROWS_AS(price_adjustment(0.0, 1.10), Error);
    CHECK_THROWS_AS(price_adjustment(-1.0, 1.10), Error);
}

TEST_CASE("nitrogen recommendation") {
    auto z = make_zone(175, 3, 2);
    CHECK(recommend_nitrogen(z, kPa, 0.95) == doctest::Approx(151.22791685735532).epsilon(1e-12));
    // Nitrate alone covers the crop.
    CHECK(recommend_nitrogen(make_zone(150, 30, 2), kPa, 0.95) == 0.0);
    CHECK(recommend_nitrogen(make_zone(175, 3, 2, 500), kPa, 0.95) == 0.0);
    CHECK_THROWS_AS(recommend_nitrogen(z, 0.0, 0.95), Error);
    CHECK_THROWS_AS(recommend_nitrogen(z, kPa, -1.0), Error);
}

TEST_CASE("zone A1 of the calibrated field is prescribed about 147 lb") {
    auto field = fixtures::calibrated_field();
    auto n = recommend_nitrogen(field.zone(ZoneId::parse("A1")), kPa, 0.95);
    CHECK(std::abs(n - fixtures::targets::kZoneA1Recommendation) <= 0.5);
}

TEST_CASE("split prescription") {
    auto s = split_prescription(147.0, {});
    CHECK(s.planting == 36.75);
    CHECK(s.inseason == 110.25);
    CHECK(std::lround(s.inseason) == 110);
    auto zero = split_prescription(0.0, {});
    CHECK(zero.planting == 0.0);
    CHECK(zero.inseason == 0.0);
    auto half = split_prescription(100.0, {0.5, 0.5});
    CHECK(half.planting == 50.0);
    CHECK(half.inseason == 50.0);
    CHECK_THROWS_AS(split_prescription(100.0, {0.3, 0.6}), Error);
    CHECK_THROWS_AS(split_prescription(100.0, {-0.25, 1.25}), Error);
    CHECK_THROWS_AS(split_prescription(-1.0, {}), Error);
}

TEST_CASE("split shares always sum exactly") {
    test_support::ZoneSampler rng(11);
    for (int i = 0; i < 5000; ++i) {
        double n = rng.uniform(0.0, 400.0);
        double f = rng.uniform(0.0, 1.0);
        auto s = split_prescription(n, {f, 1.0 - f});
        CHECK(s.planting + s.inseason == n);
        CHECK(s.planting >= 0.0);
        CHECK(s.inseason >= 0.0);
    }
}

TEST_CASE("yield from rate") {
    auto z = make_zone(175, 3, 2);
    YieldBounds b;
    CHECK(yield_from_rate(151.22791685735532, z, b, kPa, 0.95) == doctest::Approx(175.0).epsilon(1e-12));
    CHECK(yield_from_rate(0.0, z, b, kPa, 0.95) == 100.0);
    CHECK(yield_from_rate(1000.0, z, b, kPa, 0.95) == 205.0);
    CHECK_THROWS_AS(yield_from_rate(-1.0, z, b, kPa, 0.95), Error);
    // 1.2 - 0.14 OM must stay positive.
    CHECK_THROWS_AS(yield_from_rate(100.0, make_zone(175, 3, 9), b, kPa, 0.95), Error);
    CHECK_THROWS_AS(yield_from_rate(100.0, z, {-1.0, 30.0}, kPa, 0.95), Error);
}

TEST_CASE("recommendation and yield agree with the oracle") {
    test_support::ZoneSampler rng(3);
    for (int i = 0; i < 2000; ++i) {
        auto z = rng.next();
        z.n_credits = rng.uniform(0.0, 40.0);
        double pa = rng.uniform(0.5, 1.2);
        double ta = rng.uniform(0.8, 1.0);
        CHECK(recommend_nitrogen(z, pa, ta) ==
              doctest::Approx(oracle::recommend(inputs(z), pa, ta)).epsilon(1e-12));
        double n = rng.uniform(0.0, 300.0);
        CHECK(yield_from_rate(n, z, {}, pa, ta) ==
              doctest::Approx(oracle::response(n, inputs(z), pa, ta, 100.0, 30.0)).epsilon(1e-12));
    }
}

TEST_CASE("recommendation inverts back to the yield goal") {
    test_support::ZoneSampler rng(1);
    for (int i = 0; i < 1000; ++i) {
        auto z = rng.next();
        double n = recommend_nitrogen(z, kPa, 0.95);
        double y = yield_from_rate(n, z, {}, kPa, 0.95);
        CHECK(std::abs(y - z.yield_goal) <= 1e-9);
    }
}

TEST_CASE("yield is clamped, monotone and scale-invariant") {
    test_support::ZoneSampler rng(2);
    YieldBounds b;
    for (int i = 0; i < 500; ++i) {
        auto z = rng.next();
        double prev = -1.0;
        for (double n = 0.0; n <= 400.0; n += 5.0) {
            double y = yield_from_rate(n, z, b, kPa, 0.95);
            CHECK(y >= b.floor);
            CHECK(y <= z.yield_goal + b.boost);
            CHECK(y >= prev);
            prev = y;
        }
        double k = rng.uniform(0.5, 2.0);
        double n = rng.uniform(0.0, 300.0);
        CHECK(yield_from_rate(k * n, z, b, k * kPa, 0.95) ==
              doctest::Approx(yield_from_rate(n, z, b, kPa, 0.95)).epsilon(1e-12));
    }
}

TEST_CASE("prescribe_field on a uniform field") {
    auto field = uniform_field(10, 10, make_zone(175, 3, 2));
    auto p = prescribe_field(field, {});
    CHECK(p.total() == doctest::Approx(15122.791685735532).epsilon(1e-12));
    CHECK(p.at(ZoneId::parse("J10")).n_rec == doctest::Approx(151.22791685735532).epsilon(1e-12));
    CHECK(p.coefficients().price_adj == doctest::Approx(kPa).epsilon(1e-12));
    CHECK(p.coefficients().timing_adj == 0.95);
}

TEST_CASE("prescription totals are row-major sums of the zone entries") {
    auto field = generate_field(9, 6, 7);
    auto p = prescribe_field(field, {});
    double planting = 0.0, inseason = 0.0, total = 0.0;
    for (std::size_t i = 0; i < field.size(); ++i) {
        const auto& e = p.entries()[i];
        CHECK(e.n_rec == recommend_nitrogen(field.zone(i), p.coefficients().price_adj, 0.95));
        CHECK(e.planting + e.inseason == e.n_rec);
        planting += e.planting;
        inseason += e.inseason;
        total += e.n_rec;
    }
    CHECK(p.planting_total() == planting);
    CHECK(p.inseason_total() == inseason);
    CHECK(p.total() == total);
    CHECK(p.n_rec_grid()[5] == p.entries()[5].n_rec);
    CHECK(p.planting_grid()[5] == p.entries()[5].planting);
    CHECK(p.inseason_grid()[5] == p.entries()[5].inseason);
}

TEST_CASE("a zone with no recommendation prescribes nothing") {
    auto field = uniform_field(1, 1, make_zone(150, 40, 2));
    auto p = prescribe_field(field, {});
    CHECK(p.total() == 0.0);
    CHECK(p.planting_total() == 0.0);
    CHECK(p.inseason_total() == 0.0);
}

TEST_CASE("harvest at the prescribed rate returns the yield goals") {
    auto field = generate_field(42, 10, 10);
    auto p = prescribe_field(field, {});
    auto h = harvest(field, p.n_rec_grid(), {}, p.coefficients());
    double goals = 0.0;
    for (std::size_t i = 0; i < field.size(); ++i) {
        CHECK(std::abs(h.yields[i] - field.zone(i).yield_goal) <= 1e-9);
        goals += field.zone(i).yield_goal;
    }
    CHECK(std::abs(h.total - goals) <= 1e-7);
}

TEST_CASE("planting share alone leaves the crop at the floor") {
    auto proto = make_zone(150, 2, 2.2);
    auto field = uniform_field(4, 5, proto);
    auto p = prescribe_field(field, {});
    CHECK(p.at(ZoneId::parse("A1")).n_rec == doctest::Approx(134.34666102211565).epsilon(1e-12));
    double floor_yield = oracle::response(p.at(ZoneId::parse("A1")).planting, inputs(proto), kPa, 0.95, 100, 30);
    REQUIRE(floor_yield == 100.0);
    auto h = harvest(field, p.planting_grid(), {}, p.coefficients());
    CHECK(h.total == 20 * 100.0);
}

TEST_CASE("harvest rejects mismatched or negative inputs") {
    auto field = generate_field(1, 3, 3);
    auto p = prescribe_field(field, {});
    CHECK_THROWS_AS(harvest(field, ValueGrid(3, 4, 100.0), {}, p.coefficients()), Error);
    auto applied = p.n_rec_grid();
    applied[4] = -1.0;
    CHECK_THROWS_AS(harvest(field, applied, {}, p.coefficients()), Error);
}
