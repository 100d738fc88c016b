#pragma once

#include "agrisim/agronomy.hpp"

namespace agrisim {

// Expected vs actual revenue, fertilizer cost and profit for one field.
// Money is carried at full precision; round_cents() is for display only.
struct Ledger {
    double expected_yield_total = 0.0;  // bu
    double actual_yield_total = 0.0;    // bu
    double expected_n_total = 0.0;      // lb
    double actual_n_total = 0.0;        // lb
    double expected_revenue = 0.0;
    double expected_cost = 0.0;
    double expected_profit = 0.0;
    double actual_revenue = 0.0;
    double actual_cost = 0.0;
    double actual_profit = 0.0;
    double profit_loss_gain = 0.0;  // expected - actual; positive means the farmer lost money
};

struct FieldTotals {
    double yield_total = 0.0;  // bu
    double n_total = 0.0;      // lb
};

double revenue(double yield_total, double corn_price);
double cost(double n_total, double nitrogen_price);
double profit(double revenue, double cost);
double profit_loss_gain(double expected_profit, double actual_profit);

// Prices only need to be >= 0 here; a zero corn price isolates the fertilizer term.
Ledger compile_ledger(const FieldTotals& expected, const FieldTotals& actual, double corn_price,
                      double nitrogen_price);
Ledger compile_ledger(const FieldTotals& expected, const FieldTotals& actual,
                      const EconParams& econ);

// Half away from zero, to whole cents.
double round_cents(double dollars);

} // namespace agrisim
