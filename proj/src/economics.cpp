#include "agrisim/economics.hpp"

#include "agrisim/error.hpp"

#include <cmath>

namespace agrisim {

double revenue(double yield_total, double corn_price) {
    if (!(yield_total >= 0.0)) throw_data_error("yield total must be >= 0");
    return yield_total * corn_price;
}

double cost(double n_total, double nitrogen_price) {
    if (!(n_total >= 0.0)) throw_data_error("nitrogen total must be >= 0");
    return n_total * nitrogen_price;
}

double profit(double revenue, double cost) { return revenue - cost; }

double profit_loss_gain(double expected_profit, double actual_profit) {
    return expected_profit - actual_profit;
}

Ledger compile_ledger(const FieldTotals& expected, const FieldTotals& actual, double corn_price,
                      double nitrogen_price) {
    if (!(corn_price >= 0.0) || !(nitrogen_price >= 0.0)) {
        throw_data_error("prices must be >= 0");
    }
    Ledger l;
    l.expected_yield_total = expected.yield_total;
    l.actual_yield_total = actual.yield_total;
    l.expected_n_total = expected.n_total;
    l.actual_n_total = actual.n_total;
    l.expected_revenue = revenue(expected.yield_total, corn_price);
    l.expected_cost = cost(expected.n_total, nitrogen_price);
    l.expected_profit = profit(l.expected_revenue, l.expected_cost);
    l.actual_revenue = revenue(actual.yield_total, corn_price);
    l.actual_cost = cost(actual.n_total, nitrogen_price);
    l.actual_profit = profit(l.actual_revenue, l.actual_cost);
    l.profit_loss_gain = profit_loss_gain(l.expected_profit, l.actual_profit);
    return l;
}

Ledger compile_ledger(const FieldTotals& expected, const FieldTotals& actual,
                      const EconParams& econ) {
    econ.validate();
    return compile_ledger(expected, actual, econ.corn_price, econ.nitrogen_price);
}

double round_cents(double dollars) { return std::round(dollars * 100.0) / 100.0; }

} // namespace agrisim
