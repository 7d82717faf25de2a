#pragma once

// JSON file format shared by the CLI subcommands:
//   {"kind": "array" | "received" | "data", "q": ..., "n": ..., "rows": [[...]] | "symbols": [...]}
// For "received" files n is the dimension of the original array.

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "crisscross/code.hpp"
#include "crisscross/symbol_matrix.hpp"

namespace crisscross::io {

enum class FileKind { array, received, data };

[[nodiscard]] std::string_view to_string(FileKind kind) noexcept;

struct ArrayFile {
    FileKind kind = FileKind::array;
    Symbol q = 2;
    std::size_t n = 0;
    std::variant<std::vector<Symbol>, SymbolMatrix> payload;

    [[nodiscard]] static ArrayFile from_array(const CodeArray& x);
    [[nodiscard]] static ArrayFile from_received(const ReceivedArray& y);
    [[nodiscard]] static ArrayFile from_data(std::size_t n, Symbol q, std::vector<Symbol> symbols);

    [[nodiscard]] const SymbolMatrix& matrix() const;
    [[nodiscard]] const std::vector<Symbol>& symbols() const;
    [[nodiscard]] ReceivedArray received() const;

    /// Throws InvalidArgument unless entries and dimensions agree with kind.
    void validate() const;

    bool operator==(const ArrayFile&) const = default;
};

/// Deterministic text form; one matrix row per line.
[[nodiscard]] std::string serialize(const ArrayFile& file);
[[nodiscard]] ArrayFile parse(std::string_view text);

[[nodiscard]] ArrayFile read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const ArrayFile& file);

} // namespace crisscross::io
