#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "crisscross/analysis.hpp"
#include "crisscross/array_file.hpp"
#include "crisscross/code.hpp"
#include "crisscross/dvt.hpp"
#include "crisscross/enumeration.hpp"
#include "crisscross/errors.hpp"
#include "crisscross/fixtures.hpp"
#include "crisscross/rll_suffix.hpp"
#include "crisscross/selftest.hpp"

namespace py = pybind11;
using namespace crisscross;

namespace {

using Rows = std::vector<std::vector<Symbol>>;

py::int_ to_py(const BigInt& v) {
    return py::reinterpret_steal<py::int_>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

SymbolMatrix to_matrix(const Rows& rows, Symbol q) {
    return SymbolMatrix(rows, q);
}

rll::Params rll_params(std::size_t n, std::size_t m, Symbol q, std::uint64_t a, std::vector<Symbol> suffix) {
    return rll::Params{n, m, q, a, std::move(suffix)};
}

py::dict lengths_dict(const MessageLengths& l) {
    py::dict d;
    d["k1"] = l.k1;
    d["k2"] = l.k2;
    d["k3"] = l.k3;
    d["total"] = l.total;
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "q-ary single criss-cross deletion correcting code";

    auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    auto invalid = py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
    py::register_exception<NotACodeword>(m, "NotACodeword", invalid.ptr());
    py::register_exception<OutsideEncoderImage>(m, "OutsideEncoderImage", invalid.ptr());
    auto decode_error = py::register_exception<DecodeError>(m, "DecodeError", base.ptr());
    py::register_exception<NoCandidate>(m, "NoCandidate", decode_error.ptr());
    py::register_exception<AmbiguousCodeword>(m, "AmbiguousCodeword", decode_error.ptr());
    py::register_exception<NotDecodable>(m, "NotDecodable", decode_error.ptr());

    // One-dimensional codes. Sequences are lists of ints; positions are 1-based.
    m.def("diff", [](const std::vector<Symbol>& x, Symbol q) { return dvt::diff(Sequence(x, q)).vector(); },
          py::arg("x"), py::arg("q"));
    m.def("diff_inverse",
          [](const std::vector<Symbol>& y, Symbol q) { return dvt::diff_inverse(Sequence(y, q)).vector(); },
          py::arg("y"), py::arg("q"));
    m.def("syndrome", [](const std::vector<Symbol>& y, Symbol q) { return to_py(dvt::syndrome(Sequence(y, q))); },
          py::arg("y"), py::arg("q"));
    m.def("is_dvt_member",
          [](const std::vector<Symbol>& x, Symbol q, std::uint64_t a) {
              return dvt::is_dvt_member(Sequence(x, q), dvt::Params{x.size(), q, a});
          },
          py::arg("x"), py::arg("q"), py::arg("a"));
    m.def("decode_deletion",
          [](const std::vector<Symbol>& r, std::size_t n, Symbol q, std::uint64_t a) {
              const auto res = dvt::decode_deletion(Sequence(r, q), dvt::Params{n, q, a});
              return py::make_tuple(res.codeword.vector(), res.position);
          },
          py::arg("received"), py::arg("n"), py::arg("q"), py::arg("a"));
    m.def("decode_insertion",
          [](const std::vector<Symbol>& r, std::size_t n, Symbol q, std::uint64_t a) {
              return dvt::decode_insertion(Sequence(r, q), dvt::Params{n, q, a}).vector();
          },
          py::arg("received"), py::arg("n"), py::arg("q"), py::arg("a"));
    m.def("decode_rll_deletion",
          [](const std::vector<Symbol>& r, std::size_t n, Symbol q, std::uint64_t a) {
              const auto res = dvt::decode_rll_deletion(Sequence(r, q), dvt::Params{n, q, a});
              return py::make_tuple(res.codeword.vector(), res.position);
          },
          py::arg("received"), py::arg("n"), py::arg("q"), py::arg("a"));

    m.def("rll_index_sets",
          [](std::size_t n, Symbol q, bool relaxed) {
              const auto s = rll::index_sets(n, q, relaxed);
              py::dict d;
              d["t"] = s.t;
              d["powers"] = s.powers;
              d["steering"] = s.steering;
              d["data"] = s.data;
              return d;
          },
          py::arg("n"), py::arg("q"), py::arg("relaxed") = false);
    m.def("rll_encode",
          [](const std::vector<Symbol>& data, std::size_t n, std::size_t m_, Symbol q, std::uint64_t a,
             std::vector<Symbol> suffix, bool allow_unproven) {
              return rll::encode(data, rll_params(n, m_, q, a, std::move(suffix)), {allow_unproven}).vector();
          },
          py::arg("data"), py::arg("n"), py::arg("m"), py::arg("q"), py::arg("a"), py::arg("suffix"),
          py::arg("allow_unproven_parameters") = false);
    m.def("rll_is_member",
          [](const std::vector<Symbol>& x, std::size_t n, std::size_t m_, Symbol q, std::uint64_t a,
             std::vector<Symbol> suffix) {
              return rll::is_member(Sequence(x, q), rll_params(n, m_, q, a, std::move(suffix)));
          },
          py::arg("x"), py::arg("n"), py::arg("m"), py::arg("q"), py::arg("a"), py::arg("suffix"));
    m.def("rll_decode",
          [](const std::vector<Symbol>& r, std::size_t n, std::size_t m_, Symbol q, std::uint64_t a,
             std::vector<Symbol> suffix) {
              const auto res = rll::decode(Sequence(r, q), rll_params(n, m_, q, a, std::move(suffix)));
              return py::make_tuple(res.codeword.vector(), res.position);
          },
          py::arg("received"), py::arg("n"), py::arg("m"), py::arg("q"), py::arg("a"), py::arg("suffix"));
    m.def("rll_recover_data",
          [](const std::vector<Symbol>& x, std::size_t n, std::size_t m_, Symbol q, std::uint64_t a,
             std::vector<Symbol> suffix, bool allow_unproven) {
              return rll::recover_data(Sequence(x, q), rll_params(n, m_, q, a, std::move(suffix)), allow_unproven);
          },
          py::arg("x"), py::arg("n"), py::arg("m"), py::arg("q"), py::arg("a"), py::arg("suffix"),
          py::arg("allow_unproven_parameters") = false);

    // Two-dimensional code. Arrays are lists of rows.
    m.def("message_lengths",
          [](std::size_t n, Symbol q, bool allow_unproven) {
              return lengths_dict(message_lengths(CodeParams{n, q}, {allow_unproven}));
          },
          py::arg("n"), py::arg("q"), py::arg("allow_unproven_parameters") = false);
    m.def("encode",
          [](const std::vector<Symbol>& data, std::size_t n, Symbol q, bool allow_unproven) {
              return encode(data, CodeParams{n, q}, {allow_unproven}).to_rows();
          },
          py::arg("data"), py::arg("n"), py::arg("q"), py::arg("allow_unproven_parameters") = false);
    m.def("is_codeword",
          [](const Rows& x, std::size_t n, Symbol q) { return is_codeword(to_matrix(x, q), CodeParams{n, q}); },
          py::arg("x"), py::arg("n"), py::arg("q"));
    m.def("check_codeword",
          [](const Rows& x, std::size_t n, Symbol q) {
              const auto r = check_codeword(to_matrix(x, q), CodeParams{n, q});
              return py::make_tuple(r.violated_condition, r.detail);
          },
          py::arg("x"), py::arg("n"), py::arg("q"));
    m.def("check_zero_sums",
          [](const Rows& x, std::size_t n, Symbol q) { return check_zero_sums(to_matrix(x, q), CodeParams{n, q}); },
          py::arg("x"), py::arg("n"), py::arg("q"));
    m.def("corrupt",
          [](const Rows& x, Symbol q, std::size_t row, std::size_t col) {
              return corrupt(to_matrix(x, q), row, col).entries.to_rows();
          },
          py::arg("x"), py::arg("q"), py::arg("row"), py::arg("col"));
    m.def("decode",
          [](const Rows& y, std::size_t n, Symbol q) {
              return decode(ReceivedArray{to_matrix(y, q), n}, CodeParams{n, q}).to_rows();
          },
          py::arg("received"), py::arg("n"), py::arg("q"));
    m.def("recover_data",
          [](const Rows& x, std::size_t n, Symbol q, bool allow_unproven) {
              return recover_data(to_matrix(x, q), CodeParams{n, q}, {allow_unproven});
          },
          py::arg("x"), py::arg("n"), py::arg("q"), py::arg("allow_unproven_parameters") = false);

    // Analysis and verification.
    m.def("analyze",
          [](std::size_t n_min, std::size_t n_max, const std::vector<Symbol>& qs, bool allow_unproven) {
              py::list out;
              for (const auto& r : analysis::analyze(n_min, n_max, qs, {allow_unproven})) {
                  py::dict d;
                  d["n"] = r.n;
                  d["q"] = r.q;
                  d["k1"] = r.k1;
                  d["k2"] = r.k2;
                  d["k3"] = r.k3;
                  d["message_length"] = r.message_length;
                  d["encoder_redundancy"] = r.encoder_redundancy;
                  d["lower_bound"] = r.lower_bound;
                  d["upper_bound"] = r.upper_bound;
                  d["gap"] = r.gap;
                  out.append(d);
              }
              return out;
          },
          py::arg("n_min"), py::arg("n_max"), py::arg("qs"), py::arg("allow_unproven_parameters") = false);
    m.def("count_code_size",
          [](std::size_t n, Symbol q, const std::string& mode) {
              if (mode != "formula" && mode != "bruteforce") {
                  throw InvalidArgument("mode must be \"formula\" or \"bruteforce\"");
              }
              return to_py(enumeration::count_code_size(CodeParams{n, q}, mode == "formula"
                                                                                 ? enumeration::CountMode::formula
                                                                                 : enumeration::CountMode::bruteforce)
                               .size);
          },
          py::arg("n"), py::arg("q"), py::arg("mode") = "formula");
    m.def("verify_fixtures", [] { return fixtures::verify_counterexamples().passed; });
    m.def("selftest",
          [](std::size_t n, Symbol q, std::size_t trials, bool exhaustive_small, std::uint64_t seed) {
              selftest::Options o;
              o.n = n;
              o.q = q;
              o.trials = trials;
              o.exhaustive_small = exhaustive_small;
              o.seed = seed;
              const auto r = selftest::run(o);
              return py::make_tuple(r.passed, r.log);
          },
          py::arg("n") = 12, py::arg("q") = 5, py::arg("trials") = 50, py::arg("exhaustive_small") = false,
          py::arg("seed") = 1);

    // Array file text format.
    m.def("array_file_text",
          [](const Rows& x, std::size_t n, Symbol q, const std::string& kind) {
              if (kind == "array") {
                  return io::serialize(io::ArrayFile::from_array(to_matrix(x, q)));
              }
              if (kind == "received") {
                  return io::serialize(io::ArrayFile::from_received(ReceivedArray{to_matrix(x, q), n}));
              }
              throw InvalidArgument("kind must be \"array\" or \"received\"");
          },
          py::arg("rows"), py::arg("n"), py::arg("q"), py::arg("kind") = "array");
    m.def("data_file_text",
          [](const std::vector<Symbol>& symbols, std::size_t n, Symbol q) {
              return io::serialize(io::ArrayFile::from_data(n, q, symbols));
          },
          py::arg("symbols"), py::arg("n"), py::arg("q"));
    m.def("parse_file_text",
          [](const std::string& text) {
              const auto f = io::parse(text);
              py::dict d;
              d["kind"] = std::string(io::to_string(f.kind));
              d["q"] = f.q;
              d["n"] = f.n;
              if (f.kind == io::FileKind::data) {
                  d["symbols"] = f.symbols();
              } else {
                  d["rows"] = f.matrix().to_rows();
              }
              return d;
          },
          py::arg("text"));
}
