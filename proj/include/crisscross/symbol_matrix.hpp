#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "crisscross/sequence.hpp"

namespace crisscross {

/// Row-major rectangular array over {0, ..., q-1}. Element access is 0-based.
class SymbolMatrix {
public:
    SymbolMatrix(std::size_t rows, std::size_t cols, Symbol q);
    SymbolMatrix(std::vector<std::vector<Symbol>> rows, Symbol q);
    SymbolMatrix(std::initializer_list<std::initializer_list<Symbol>> rows, Symbol q);

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] Symbol q() const noexcept { return q_; }

    [[nodiscard]] Symbol at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    /// Unchecked write; the caller keeps the value below q.
    void set(std::size_t r, std::size_t c, Symbol v) { data_[r * cols_ + c] = v; }

    [[nodiscard]] std::span<const Symbol> row(std::size_t r) const {
        return {data_.data() + r * cols_, cols_};
    }
    [[nodiscard]] std::vector<Symbol> column(std::size_t c) const;
    [[nodiscard]] std::span<const Symbol> data() const noexcept { return data_; }
    [[nodiscard]] std::span<Symbol> mutable_data() noexcept { return data_; }

    /// 0-based insertion index; `values` must have cols() entries.
    [[nodiscard]] SymbolMatrix with_row_inserted(std::size_t index, std::span<const Symbol> values) const;
    [[nodiscard]] SymbolMatrix with_column_inserted(std::size_t index, std::span<const Symbol> values) const;
    [[nodiscard]] SymbolMatrix with_row_and_column_removed(std::size_t row, std::size_t col) const;

    /// -sum of each row mod q, and of each column mod q.
    [[nodiscard]] std::vector<Symbol> negated_row_sums() const;
    [[nodiscard]] std::vector<Symbol> negated_column_sums() const;

    [[nodiscard]] std::vector<std::vector<Symbol>> to_rows() const;
    [[nodiscard]] std::string to_string() const;

    bool operator==(const SymbolMatrix&) const = default;
    auto operator<=>(const SymbolMatrix&) const = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    Symbol q_;
    std::vector<Symbol> data_;
};

} // namespace crisscross
