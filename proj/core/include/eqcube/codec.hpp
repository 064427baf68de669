#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "eqcube/diagram.hpp"
#include "eqcube/error.hpp"
#include "eqcube/hlpoly.hpp"
#include "eqcube/one_var_frac.hpp"
#include "eqcube/pipeline.hpp"
#include "eqcube/rational.hpp"
#include "eqcube/tri_var.hpp"

// JSON encodings. Rationals are always strings ("3", "-1/2"); the parsers
// also accept JSON integers. Decoding failures throw ParseFailure, whose
// message names the offending JSON path.
//
//   HLPoly      [[exp, coeff], ...]   exp "k" or "k/2"
//   OneVarFrac  HLPoly, rational, or {"num": HLPoly, "den": HLPoly}
//   TriVarElem  {"num": [[xexp, yexp, coeff], ...], "den": [...]}
//   MonGraph    {"vertices": V, "edges": [[tail, head, a, b], ...],
//                "orders": [[h, h, h], ...]}
//   DiagramVector [{"graph": MonGraph, "coeff": coeff}, ...]

namespace eqcube {

using Json = nlohmann::json;

/// ParseError with the source position (1-based; 0 when unknown).
class ParseFailure : public Error {
 public:
  ParseFailure(const std::string& message, std::size_t line = 0, std::size_t column = 0)
      : Error(ErrorCode::ParseError, message), line_(line), column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Parses JSON text, reporting syntax errors with line and column.
Json parse_json_text(std::string_view text);

Json encode(const Rational& q);
Json encode(const HLPoly& p);
Json encode(const OneVarFrac& f);
Json encode(const TriVarElem& f);
Json encode(const AlexanderPair& pair);
Json encode(const MonGraph& g);
Json encode(const DiagramVector& v);
Json encode(const Report& r);

Rational decode_rational(const Json& j, const std::string& path = "$");
HLPoly decode_hlpoly(const Json& j, const std::string& path = "$");
OneVarFrac decode_frac(const Json& j, const std::string& path = "$");
TriVarElem decode_trivar(const Json& j, const std::string& path = "$");
MonGraph decode_graph(const Json& j, const std::string& path = "$");
DiagramVector decode_diagram(const Json& j, const std::string& path = "$");

/// {"initial": {"Delta", "delta", "Q"?}?, "moves": [...]}; moves are
///   {"type": "surgery", "g", "Laa", "Lab", "Lba", "Lbb", "p", "q",
///    "Delta_after", "delta_after", "bpa"?}
///   {"type": "connected_sum", "lambda"}
///   {"type": "framing", "n"}
///   {"type": "knot_change", "V"}
/// Domain errors in otherwise well-formed input (e.g. NotCoprime) propagate
/// with their own codes.
Manifest decode_manifest(const Json& j);

}  // namespace eqcube
