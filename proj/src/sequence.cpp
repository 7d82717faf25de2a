#include "crisscross/sequence.hpp"

#include <algorithm>
#include <sstream>

#include "crisscross/errors.hpp"

namespace crisscross {

Sequence::Sequence(std::vector<Symbol> symbols, Symbol q) : symbols_(std::move(symbols)), q_(q) {
    require_alphabet(q);
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        if (symbols_[i] >= q_) {
            throw InvalidArgument("symbol " + std::to_string(symbols_[i]) + " at position " +
                                  std::to_string(i + 1) + " is outside the alphabet of size " +
                                  std::to_string(q_));
        }
    }
}

Sequence Sequence::zeros(std::size_t length, Symbol q) {
    return Sequence(std::vector<Symbol>(length, 0), q);
}

Sequence Sequence::with_deletion(std::size_t position) const {
    if (position < 1 || position > symbols_.size()) {
        throw InvalidArgument("deletion position " + std::to_string(position) + " out of range");
    }
    auto out = symbols_;
    out.erase(out.begin() + static_cast<std::ptrdiff_t>(position - 1));
    return Sequence(std::move(out), q_);
}

Sequence Sequence::with_insertion(std::size_t position, Symbol symbol) const {
    if (position < 1 || position > symbols_.size() + 1) {
        throw InvalidArgument("insertion position " + std::to_string(position) + " out of range");
    }
    auto out = symbols_;
    out.insert(out.begin() + static_cast<std::ptrdiff_t>(position - 1), symbol);
    return Sequence(std::move(out), q_);
}

Sequence Sequence::reversed() const {
    auto out = symbols_;
    std::reverse(out.begin(), out.end());
    return Sequence(std::move(out), q_);
}

std::string Sequence::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        os << (i ? "," : "") << symbols_[i];
    }
    os << ')';
    return os.str();
}

void require_alphabet(Symbol q, Symbol minimum) {
    if (q < minimum) {
        throw InvalidArgument("alphabet size q=" + std::to_string(q) + " must be at least " +
                              std::to_string(minimum));
    }
}

bool adjacent_distinct(std::span<const Symbol> symbols) noexcept {
    return std::adjacent_find(symbols.begin(), symbols.end()) == symbols.end();
}

unsigned floor_log(std::uint64_t value, std::uint64_t base) {
    if (value < 1 || base < 2) {
        throw InvalidArgument("floor_log needs value >= 1 and base >= 2");
    }
    unsigned t = 0;
    std::uint64_t power = 1;
    while (power <= value / base) {
        power *= base;
        ++t;
    }
    return t;
}

} // namespace crisscross
