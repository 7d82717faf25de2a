#include "crisscross/symbol_matrix.hpp"

#include <algorithm>
#include <sstream>

#include "crisscross/errors.hpp"

namespace crisscross {

SymbolMatrix::SymbolMatrix(std::size_t rows, std::size_t cols, Symbol q)
    : rows_(rows), cols_(cols), q_(q), data_(rows * cols, 0) {
    require_alphabet(q);
}

SymbolMatrix::SymbolMatrix(std::vector<std::vector<Symbol>> rows, Symbol q)
    : rows_(rows.size()), cols_(rows.empty() ? 0 : rows.front().size()), q_(q) {
    require_alphabet(q);
    data_.reserve(rows_ * cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        if (rows[r].size() != cols_) {
            throw InvalidArgument("row " + std::to_string(r + 1) + " has " +
                                  std::to_string(rows[r].size()) + " entries, expected " +
                                  std::to_string(cols_));
        }
        for (std::size_t c = 0; c < cols_; ++c) {
            if (rows[r][c] >= q) {
                throw InvalidArgument("entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) +
                                      ")=" + std::to_string(rows[r][c]) +
                                      " outside the alphabet of size " + std::to_string(q));
            }
            data_.push_back(rows[r][c]);
        }
    }
}

SymbolMatrix::SymbolMatrix(std::initializer_list<std::initializer_list<Symbol>> rows, Symbol q)
    : SymbolMatrix(
          [&] {
              std::vector<std::vector<Symbol>> v;
              for (const auto& r : rows) {
                  v.emplace_back(r);
              }
              return v;
          }(),
          q) {}

std::vector<Symbol> SymbolMatrix::column(std::size_t c) const {
    std::vector<Symbol> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        out[r] = at(r, c);
    }
    return out;
}

SymbolMatrix SymbolMatrix::with_row_inserted(std::size_t index, std::span<const Symbol> values) const {
    if (index > rows_ || values.size() != cols_) {
        throw InvalidArgument("row insertion does not fit the array");
    }
    SymbolMatrix out(rows_ + 1, cols_, q_);
    auto dst = out.data_.begin();
    dst = std::copy(data_.begin(), data_.begin() + static_cast<std::ptrdiff_t>(index * cols_), dst);
    dst = std::copy(values.begin(), values.end(), dst);
    std::copy(data_.begin() + static_cast<std::ptrdiff_t>(index * cols_), data_.end(), dst);
    return out;
}

SymbolMatrix SymbolMatrix::with_column_inserted(std::size_t index, std::span<const Symbol> values) const {
    if (index > cols_ || values.size() != rows_) {
        throw InvalidArgument("column insertion does not fit the array");
    }
    SymbolMatrix out(rows_, cols_ + 1, q_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0, src = 0; c <= cols_; ++c) {
            out.set(r, c, c == index ? values[r] : at(r, src++));
        }
    }
    return out;
}

SymbolMatrix SymbolMatrix::with_row_and_column_removed(std::size_t row, std::size_t col) const {
    if (row >= rows_ || col >= cols_) {
        throw InvalidArgument("row/column removal out of range");
    }
    SymbolMatrix out(rows_ - 1, cols_ - 1, q_);
    auto dst = out.data_.begin();
    for (std::size_t r = 0; r < rows_; ++r) {
        if (r == row) {
            continue;
        }
        for (std::size_t c = 0; c < cols_; ++c) {
            if (c != col) {
                *dst++ = at(r, c);
            }
        }
    }
    return out;
}

std::vector<Symbol> SymbolMatrix::negated_row_sums() const {
    std::vector<Symbol> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        std::uint64_t s = 0;
        for (auto v : row(r)) {
            s += v;
        }
        out[r] = static_cast<Symbol>((q_ - s % q_) % q_);
    }
    return out;
}

std::vector<Symbol> SymbolMatrix::negated_column_sums() const {
    std::vector<std::uint64_t> sums(cols_, 0);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            sums[c] += at(r, c);
        }
    }
    std::vector<Symbol> out(cols_);
    for (std::size_t c = 0; c < cols_; ++c) {
        out[c] = static_cast<Symbol>((q_ - sums[c] % q_) % q_);
    }
    return out;
}

std::vector<std::vector<Symbol>> SymbolMatrix::to_rows() const {
    std::vector<std::vector<Symbol>> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        auto span = row(r);
        out.emplace_back(span.begin(), span.end());
    }
    return out;
}

std::string SymbolMatrix::to_string() const {
    std::ostringstream os;
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            os << (c ? " " : "") << at(r, c);
        }
        os << '\n';
    }
    return os.str();
}

} // namespace crisscross
