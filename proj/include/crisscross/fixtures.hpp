#pragma once

// Counterexample arrays against earlier criss-cross constructions: pairs of
// distinct arrays that a single criss-cross deletion maps to the same result.

#include <cstddef>
#include <string>
#include <vector>

#include "crisscross/symbol_matrix.hpp"

namespace crisscross::fixtures {

struct FixtureReport {
    bool passed = true;
    std::vector<std::string> lines;
};

/// 2x2 arrays over Z_4 with identical row and column sums.
[[nodiscard]] SymbolMatrix sum_collision_first();
[[nodiscard]] SymbolMatrix sum_collision_second();

/// 16x16 binary arrays differing in four entries of rows 15 and 16.
[[nodiscard]] SymbolMatrix row_collision_first();
[[nodiscard]] SymbolMatrix row_collision_second();

/// Equal row-sum and column-sum vectors, and corrupt(a,1,1) == corrupt(b,2,2) == [[2]].
[[nodiscard]] FixtureReport check_sum_collision(const SymbolMatrix& a, const SymbolMatrix& b);

/// corrupt(a,15,1) == corrupt(b,16,1) while a != b.
[[nodiscard]] FixtureReport check_row_collision(const SymbolMatrix& a, const SymbolMatrix& b);

/// Both checks on the embedded arrays.
[[nodiscard]] FixtureReport verify_counterexamples();

} // namespace crisscross::fixtures
