#include "crisscross/array_file.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include <nlohmann/json.hpp>

#include "crisscross/errors.hpp"

namespace crisscross::io {

using nlohmann::json;

namespace {

template <typename Range>
void write_list(std::ostream& os, const Range& values) {
    os << '[';
    bool first = true;
    for (auto v : values) {
        os << (first ? "" : ", ") << v;
        first = false;
    }
    os << ']';
}

std::uint64_t read_unsigned(const json& doc, const char* key) {
    if (!doc.contains(key)) {
        throw InvalidArgument(std::string("missing field \"") + key + "\"");
    }
    const auto& v = doc.at(key);
    if (!v.is_number_unsigned()) {
        throw InvalidArgument(std::string("field \"") + key + "\" must be a non-negative integer");
    }
    return v.get<std::uint64_t>();
}

std::vector<Symbol> read_symbols(const json& list, const char* what) {
    if (!list.is_array()) {
        throw InvalidArgument(std::string(what) + " must be a list of integers");
    }
    std::vector<Symbol> out;
    out.reserve(list.size());
    for (const auto& v : list) {
        if (!v.is_number_unsigned() || v.get<std::uint64_t>() > std::numeric_limits<Symbol>::max()) {
            throw InvalidArgument(std::string(what) + " must contain non-negative integers");
        }
        out.push_back(v.get<Symbol>());
    }
    return out;
}

} // namespace

std::string_view to_string(FileKind kind) noexcept {
    switch (kind) {
    case FileKind::array:
        return "array";
    case FileKind::received:
        return "received";
    case FileKind::data:
        return "data";
    }
    return "?";
}

ArrayFile ArrayFile::from_array(const CodeArray& x) {
    return {FileKind::array, x.q(), x.rows(), x};
}

ArrayFile ArrayFile::from_received(const ReceivedArray& y) {
    return {FileKind::received, y.entries.q(), y.n, y.entries};
}

ArrayFile ArrayFile::from_data(std::size_t n, Symbol q, std::vector<Symbol> symbols) {
    return {FileKind::data, q, n, std::move(symbols)};
}

const SymbolMatrix& ArrayFile::matrix() const {
    if (const auto* m = std::get_if<SymbolMatrix>(&payload)) {
        return *m;
    }
    throw InvalidArgument("a data file has no rows");
}

const std::vector<Symbol>& ArrayFile::symbols() const {
    if (const auto* s = std::get_if<std::vector<Symbol>>(&payload)) {
        return *s;
    }
    throw InvalidArgument("an array file has no symbol list");
}

ReceivedArray ArrayFile::received() const {
    if (kind != FileKind::received) {
        throw InvalidArgument("expected a \"received\" file, got \"" + std::string(to_string(kind)) + "\"");
    }
    return {matrix(), n};
}

void ArrayFile::validate() const {
    require_alphabet(q);
    if (kind == FileKind::data) {
        for (auto s : symbols()) {
            if (s >= q) {
                throw InvalidArgument("data symbol " + std::to_string(s) + " outside the alphabet of size " +
                                      std::to_string(q));
            }
        }
        return;
    }
    const auto& m = matrix();
    if (m.q() != q) {
        throw InvalidArgument("matrix alphabet does not match q");
    }
    const std::size_t expected = kind == FileKind::array ? n : n - 1;
    if (n < 1 || m.rows() != expected || m.cols() != expected) {
        throw InvalidArgument(std::string("\"") + std::string(to_string(kind)) + "\" file with n=" +
                              std::to_string(n) + " must be " + std::to_string(expected) + "x" +
                              std::to_string(expected) + ", got " + std::to_string(m.rows()) + "x" +
                              std::to_string(m.cols()));
    }
}

std::string serialize(const ArrayFile& file) {
    file.validate();
    std::ostringstream os;
    os << "{\n  \"kind\": \"" << to_string(file.kind) << "\",\n  \"q\": " << file.q << ",\n  \"n\": " << file.n
       << ",\n";
    if (file.kind == FileKind::data) {
        os << "  \"symbols\": ";
        write_list(os, file.symbols());
        os << "\n}\n";
        return os.str();
    }
    const auto& m = file.matrix();
    os << "  \"rows\": [";
    for (std::size_t r = 0; r < m.rows(); ++r) {
        os << (r ? ",\n    " : "\n    ");
        write_list(os, m.row(r));
    }
    os << (m.rows() ? "\n  ]\n}\n" : "]\n}\n");
    return os.str();
}

ArrayFile parse(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InvalidArgument(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("kind") || !doc.at("kind").is_string()) {
        throw InvalidArgument("file must be a JSON object with a \"kind\" string");
    }
    ArrayFile file;
    const auto kind = doc.at("kind").get<std::string>();
    if (kind == "array") {
        file.kind = FileKind::array;
    } else if (kind == "received") {
        file.kind = FileKind::received;
    } else if (kind == "data") {
        file.kind = FileKind::data;
    } else {
        throw InvalidArgument("unknown file kind \"" + kind + "\"");
    }
    const auto q = read_unsigned(doc, "q");
    if (q > std::numeric_limits<Symbol>::max()) {
        throw InvalidArgument("q is too large");
    }
    file.q = static_cast<Symbol>(q);
    file.n = read_unsigned(doc, "n");
    if (file.kind == FileKind::data) {
        if (!doc.contains("symbols")) {
            throw InvalidArgument("data file needs a \"symbols\" list");
        }
        file.payload = read_symbols(doc.at("symbols"), "symbols");
    } else {
        if (!doc.contains("rows") || !doc.at("rows").is_array()) {
            throw InvalidArgument("array file needs a \"rows\" list");
        }
        std::vector<std::vector<Symbol>> rows;
        for (const auto& r : doc.at("rows")) {
            rows.push_back(read_symbols(r, "each row"));
        }
        file.payload = SymbolMatrix(std::move(rows), file.q);
    }
    file.validate();
    return file;
}

ArrayFile read_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw InvalidArgument("cannot open " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse(buffer.str());
}

void write_file(const std::filesystem::path& path, const ArrayFile& file) {
    const auto text = serialize(file);
    std::ofstream out(path);
    if (!out) {
        throw InvalidArgument("cannot write " + path.string());
    }
    out << text;
}

} // namespace crisscross::io
