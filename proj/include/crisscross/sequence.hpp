#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace crisscross {

using Symbol = std::uint32_t;
using BigInt = boost::multiprecision::cpp_int;

/// A finite word over the alphabet {0, ..., q-1}.
///
/// Storage is 0-based; the coding operations take and report 1-based
/// positions.
class Sequence {
public:
    Sequence(std::vector<Symbol> symbols, Symbol q);
    Sequence(std::initializer_list<Symbol> symbols, Symbol q)
        : Sequence(std::vector<Symbol>(symbols), q) {}

    static Sequence zeros(std::size_t length, Symbol q);

    [[nodiscard]] std::size_t size() const noexcept { return symbols_.size(); }
    [[nodiscard]] bool empty() const noexcept { return symbols_.empty(); }
    [[nodiscard]] Symbol q() const noexcept { return q_; }
    [[nodiscard]] Symbol operator[](std::size_t i) const { return symbols_[i]; }
    [[nodiscard]] std::span<const Symbol> symbols() const noexcept { return symbols_; }
    [[nodiscard]] const std::vector<Symbol>& vector() const noexcept { return symbols_; }

    /// Copy with the symbol at 1-based `position` removed.
    [[nodiscard]] Sequence with_deletion(std::size_t position) const;
    /// Copy with `symbol` inserted so that it lands at 1-based `position`.
    [[nodiscard]] Sequence with_insertion(std::size_t position, Symbol symbol) const;
    [[nodiscard]] Sequence reversed() const;

    [[nodiscard]] std::string to_string() const;

    bool operator==(const Sequence&) const = default;

private:
    std::vector<Symbol> symbols_;
    Symbol q_;
};

/// Throws InvalidArgument unless q >= minimum.
void require_alphabet(Symbol q, Symbol minimum = 2);

/// True when no two neighbouring symbols are equal.
[[nodiscard]] bool adjacent_distinct(std::span<const Symbol> symbols) noexcept;

/// Largest t with base^t <= value, by repeated multiplication. value >= 1, base >= 2.
[[nodiscard]] unsigned floor_log(std::uint64_t value, std::uint64_t base);

} // namespace crisscross
