#pragma once

#include "agrisim/error.hpp"
#include "agrisim/zone_id.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace agrisim {

// Row-major rows x cols container addressed by 0-based (row, col) or by ZoneId.
template <typename T>
class Grid {
public:
    Grid() = default;
    Grid(std::size_t rows, std::size_t cols, const T& fill = T{})
        : rows_(rows), cols_(cols), cells_(rows * cols, fill) {}
    Grid(std::size_t rows, std::size_t cols, std::vector<T> cells)
        : rows_(rows), cols_(cols), cells_(std::move(cells)) {
        if (cells_.size() != rows_ * cols_) {
            throw_data_error("grid cell count " + std::to_string(cells_.size()) +
                             " does not match " + std::to_string(rows_) + "x" +
                             std::to_string(cols_));
        }
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t size() const noexcept { return cells_.size(); }
    bool empty() const noexcept { return cells_.empty(); }

    T& operator()(std::size_t row, std::size_t col) { return cells_[row * cols_ + col]; }
    const T& operator()(std::size_t row, std::size_t col) const { return cells_[row * cols_ + col]; }

    T& operator[](std::size_t index) { return cells_[index]; }
    const T& operator[](std::size_t index) const { return cells_[index]; }

    const T& at(const ZoneId& id) const { return cells_.at(index_of(id)); }
    T& at(const ZoneId& id) { return cells_.at(index_of(id)); }

    std::size_t index_of(const ZoneId& id) const {
        if (id.column >= cols_ || id.row < 1 || id.row > rows_) {
            throw_data_error("zone " + id.to_string() + " is outside the " +
                             std::to_string(rows_) + "x" + std::to_string(cols_) + " grid");
        }
        return (id.row - 1) * cols_ + id.column;
    }

    ZoneId zone_at(std::size_t index) const { return ZoneId{index % cols_, index / cols_ + 1}; }

    std::span<T> cells() noexcept { return cells_; }
    std::span<const T> cells() const noexcept { return cells_; }

    auto begin() noexcept { return cells_.begin(); }
    auto end() noexcept { return cells_.end(); }
    auto begin() const noexcept { return cells_.begin(); }
    auto end() const noexcept { return cells_.end(); }

    template <typename U>
    bool same_shape(const Grid<U>& other) const noexcept {
        return rows_ == other.rows() && cols_ == other.cols();
    }

    bool operator==(const Grid&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> cells_;
};

using ValueGrid = Grid<double>;

// Fixed row-major reduction; every reported total goes through this.
inline double grid_sum(const ValueGrid& grid) {
    double total = 0.0;
    for (double v : grid) total += v;
    return total;
}

template <typename T, typename U>
void require_same_shape(const Grid<T>& a, const Grid<U>& b, const std::string& what) {
    if (!a.same_shape(b)) {
        throw_data_error(what + ": grid shape " + std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()) + " does not match " +
                         std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
    }
}

} // namespace agrisim
