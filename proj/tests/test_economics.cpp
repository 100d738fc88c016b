#include "test_support.hpp"

#include <agrisim/agronomy.hpp>
#include <agrisim/economics.hpp>
#include <agrisim/error.hpp>
#include <agrisim/fixtures.hpp>

#include <doctest.h>

#include <cmath>

using namespace agrisim;
namespace targets = fixtures::targets;

namespace {

bool cents_match(double computed, double stated) { return std::abs(computed - stated) <= 0.005 + 1e-9; }

} // namespace

TEST_CASE("scalar ledger terms") {
    CHECK(revenue(16983.0, 7.53) == doctest::Approx(127881.99));
    CHECK(cost(14759.0, 1.10) == doctest::Approx(16234.90));
    CHECK(profit(127881.99, 16234.90) == doctest::Approx(111647.09));
    CHECK(profit_loss_gain(111647.09, 98518.49) == doctest::Approx(13128.60));
    CHECK(revenue(0.0, 7.53) == 0.0);
    CHECK_THROWS_AS(revenue(-1.0, 7.53), Error);
    CHECK_THROWS_AS(cost(-1.0, 1.10), Error);
}

TEST_CASE("control ledger reproduces the stated dollar figures") {
    FieldTotals control{targets::kControlYield, targets::kControlTotalN};
    auto l = compile_ledger(control, control, EconParams{});
    CHECK(cents_match(l.expected_revenue, targets::kControlRevenue));
    CHECK(cents_match(l.expected_cost, targets::kControlCost));
    CHECK(cents_match(l.expected_profit, targets::kControlProfit));
    CHECK(l.profit_loss_gain == 0.0);
}

TEST_CASE("attack ledgers reproduce the stated dollar figures") {
    FieldTotals control{targets::kControlYield, targets::kControlTotalN};
    for (const auto& t : {targets::kScenario1, targets::kScenario2, targets::kScenario3}) {
        CAPTURE(t.scenario);
        auto l = compile_ledger(control, {t.yield, t.total_n}, EconParams{});
        CHECK(cents_match(l.actual_revenue, t.revenue));
        CHECK(cents_match(l.actual_cost, t.cost));
        CHECK(cents_match(l.actual_profit, t.profit));
        CHECK(cents_match(l.profit_loss_gain, t.loss));
    }
}

TEST_CASE("scenario 1 loss splits into lost sales and extra fertilizer") {
    FieldTotals control{targets::kControlYield, targets::kControlTotalN};
    const auto& t = targets::kScenario1;
    auto l = compile_ledger(control, {t.yield, t.total_n}, EconParams{});
    double sales = l.expected_revenue - l.actual_revenue;
    double fert = l.actual_cost - l.expected_cost;
    CHECK(cents_match(sales, targets::kScenario1SalesLoss));
    CHECK(cents_match(fert, targets::kScenario1ExtraFertilizerCost));
    CHECK(cents_match(sales + fert, t.loss));
}

TEST_CASE("scenario 3 stated sales loss is off by four dollars") {
    double sales = targets::kControlRevenue - targets::kScenario3.revenue;
    CHECK(cents_match(sales, 14472.66));
    CHECK(std::abs(sales - targets::kScenario3StatedSalesLoss) == doctest::Approx(4.0));
}

TEST_CASE("ledger identities hold for random totals") {
    test_support::ZoneSampler rng(17);
    for (int i = 0; i < 1000; ++i) {
        FieldTotals e{rng.uniform(0, 30000), rng.uniform(0, 30000)};
        FieldTotals a{rng.uniform(0, 30000), rng.uniform(0, 30000)};
        double corn = rng.uniform(0.01, 15), nitrogen = rng.uniform(0.01, 3);
        auto l = compile_ledger(e, a, corn, nitrogen);
        CHECK(l.expected_revenue == e.yield_total * corn);
        CHECK(l.actual_cost == a.n_total * nitrogen);
        CHECK(l.expected_profit == l.expected_revenue - l.expected_cost);
        CHECK(l.actual_profit == l.actual_revenue - l.actual_cost);
        CHECK(l.profit_loss_gain == l.expected_profit - l.actual_profit);
        double decomposed = corn * (e.yield_total - a.yield_total) + nitrogen * (a.n_total - e.n_total);
        CHECK(std::abs(l.profit_loss_gain - decomposed) <= 1e-6);
    }
}

TEST_CASE("zero corn price isolates the fertilizer term") {
    auto l = compile_ledger({16983, 14759}, {15243, 14783}, 0.0, 1.10);
    CHECK(l.expected_revenue == 0.0);
    CHECK(l.actual_revenue == 0.0);
    CHECK(l.profit_loss_gain == doctest::Approx(1.10 * 24));
    CHECK_THROWS_AS(compile_ledger({1, 1}, {1, 1}, -0.1, 1.10), Error);
    CHECK_THROWS_AS(compile_ledger({-1, 1}, {1, 1}, 7.53, 1.10), Error);
    EconParams zero_corn;
    zero_corn.corn_price = 0.0;
    CHECK_THROWS_AS(compile_ledger({1, 1}, {1, 1}, zero_corn), Error);
}

TEST_CASE("round_cents rounds half away from zero") {
    CHECK(round_cents(0.125) == doctest::Approx(0.13));
    CHECK(round_cents(-0.125) == doctest::Approx(-0.13));
    CHECK(round_cents(13128.604) == doctest::Approx(13128.60));
    CHECK(round_cents(0.0) == 0.0);
}
