#include "eqcube/codec.hpp"

#include <charconv>
#include <limits>

namespace eqcube {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) { throw ParseFailure(path + ": " + what); }

const Json& field(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path, std::string("missing field \"") + key + "\"");
  return *it;
}

const Json& array_at(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  return j;
}

std::string sub(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }
std::string sub(const std::string& path, const char* key) { return path + "." + key; }

long long decode_int(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<long long>();
}

int decode_small_int(const Json& j, const std::string& path) {
  const long long v = decode_int(j, path);
  if (v < std::numeric_limits<int>::min() / 4 || v > std::numeric_limits<int>::max() / 4) fail(path, "integer out of range");
  return static_cast<int>(v);
}

// "k" or "k/2" (or a JSON integer) to a doubled exponent.
int decode_exponent(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return 2 * decode_small_int(j, path);
  if (!j.is_string()) fail(path, "expected an exponent \"k\" or \"k/2\"");
  const std::string s = j.get<std::string>();
  const auto slash = s.find('/');
  const std::string head = s.substr(0, slash);
  int k = 0;
  const char* first = head.data();
  if (!head.empty() && head[0] == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, head.data() + head.size(), k);
  if (ec != std::errc() || ptr != head.data() + head.size() || head.empty()) fail(path, "bad exponent \"" + s + "\"");
  if (slash == std::string::npos) return 2 * k;
  if (s.substr(slash + 1) != "2") fail(path, "exponent denominators other than 2 are not supported: \"" + s + "\"");
  return k;
}

Json encode_exponent(int doubled) {
  return doubled % 2 == 0 ? std::to_string(doubled / 2) : std::to_string(doubled) + "/2";
}

Json encode_terms(const BiLaurent& p) {
  Json out = Json::array();
  for (const auto& [k, c] : p.terms()) out.push_back({k.first, k.second, to_string(c)});
  return out;
}

BiLaurent decode_terms(const Json& j, const std::string& path) {
  BiLaurent::Terms terms;
  const Json& a = array_at(j, path);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Json& t = a[i];
    if (!t.is_array() || t.size() != 3) fail(sub(path, i), "expected [xexp, yexp, coeff]");
    const BiLaurent::Key key{decode_small_int(t[0], sub(sub(path, i), std::size_t{0})), decode_small_int(t[1], sub(sub(path, i), std::size_t{1}))};
    terms[key] += decode_rational(t[2], sub(sub(path, i), std::size_t{2}));
  }
  return BiLaurent::from_terms(terms);
}

FracMatrix decode_matrix(const Json& j, int g, const std::string& path) {
  const Json& rows = array_at(j, path);
  if (rows.size() != static_cast<std::size_t>(g)) fail(path, "expected " + std::to_string(g) + " rows");
  FracMatrix m;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Json& row = array_at(rows[i], sub(path, i));
    if (row.size() != static_cast<std::size_t>(g)) fail(sub(path, i), "expected " + std::to_string(g) + " entries");
    auto& out = m.emplace_back();
    for (std::size_t k = 0; k < row.size(); ++k) out.push_back(decode_frac(row[k], sub(sub(path, i), k)));
  }
  return m;
}

AlexanderPair decode_pair(const Json& obj, const char* delta_big, const char* delta_small, const std::string& path) {
  return AlexanderPair(decode_hlpoly(field(obj, delta_big, path), sub(path, delta_big)),
                       decode_hlpoly(field(obj, delta_small, path), sub(path, delta_small)));
}

Move decode_move(const Json& j, const std::string& path) {
  const Json& type = field(j, "type", path);
  if (!type.is_string()) fail(sub(path, "type"), "expected a string");
  const std::string t = type.get<std::string>();
  if (t == "connected_sum") return ConnectedSumMove{decode_rational(field(j, "lambda", path), sub(path, "lambda"))};
  if (t == "framing") return FramingMove{decode_small_int(field(j, "n", path), sub(path, "n"))};
  if (t == "knot_change") return KnotChangeMove{FramedKnotChange(decode_hlpoly(field(j, "V", path), sub(path, "V")))};
  if (t == "surgery") {
    SurgeryMove m;
    const int g = decode_small_int(field(j, "g", path), sub(path, "g"));
    if (g < 0) fail(sub(path, "g"), "genus must be nonnegative");
    m.datum.genus = g;
    m.datum.Laa = decode_matrix(field(j, "Laa", path), g, sub(path, "Laa"));
    m.datum.Lab = decode_matrix(field(j, "Lab", path), g, sub(path, "Lab"));
    m.datum.Lba = decode_matrix(field(j, "Lba", path), g, sub(path, "Lba"));
    m.datum.Lbb = decode_matrix(field(j, "Lbb", path), g, sub(path, "Lbb"));
    if (j.contains("bpa")) {
      const Json& a = array_at(j["bpa"], sub(path, "bpa"));
      std::vector<OneVarFrac> bpa;
      for (std::size_t i = 0; i < a.size(); ++i) bpa.push_back(decode_frac(a[i], sub(sub(path, "bpa"), i)));
      m.datum.bpa = std::move(bpa);
    }
    m.datum.coefficient = SurgeryCoefficient(decode_int(field(j, "p", path), sub(path, "p")),
                                             decode_int(field(j, "q", path), sub(path, "q")));
    m.after = decode_pair(j, "Delta_after", "delta_after", path);
    m.datum.validate();
    return m;
  }
  fail(sub(path, "type"), "unknown move type \"" + t + "\"");
}

}  // namespace

Json parse_json_text(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    // e.byte is the 1-based offset of the offending character.
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseFailure("malformed JSON at line " + std::to_string(line) + ", column " + std::to_string(column), line,
                       column);
  }
}

Json encode(const Rational& q) { return to_string(q); }

Json encode(const HLPoly& p) {
  Json out = Json::array();
  for (const auto& [k, c] : p.terms()) out.push_back({encode_exponent(k), to_string(c)});
  return out;
}

Json encode(const OneVarFrac& f) {
  if (f.is_polynomial()) return encode(f.num());
  return {{"num", encode(f.num())}, {"den", encode(f.den())}};
}

Json encode(const TriVarElem& f) { return {{"num", encode_terms(f.num())}, {"den", encode_terms(f.den())}}; }

Json encode(const AlexanderPair& pair) { return {{"Delta", encode(pair.Delta())}, {"delta", encode(pair.delta())}}; }

Json encode(const MonGraph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges) edges.push_back({e.tail, e.head, e.a, e.b});
  Json orders = Json::array();
  for (const auto& o : g.orders) orders.push_back({o[0], o[1], o[2]});
  return {{"vertices", g.vertices}, {"edges", edges}, {"orders", orders}};
}

Json encode(const DiagramVector& v) {
  Json out = Json::array();
  for (const auto& [g, c] : v.terms()) out.push_back({{"graph", encode(g)}, {"coeff", encode(c)}});
  return out;
}

Json encode(const Report& r) {
  Json out;
  out["Q"] = encode(r.Q);
  out["eval_111"] = r.eval_111 ? encode(*r.eval_111) : Json(nullptr);
  if (!r.eval_111) out["eval_111_error"] = r.eval_111_error;
  out["final_pair"] = encode(r.final_pair);
  Json moves = Json::array();
  for (std::size_t i = 0; i < r.moves.size(); ++i) {
    const auto& m = r.moves[i];
    moves.push_back({{"index", i}, {"type", m.type}, {"delta", encode(m.delta)}, {"pair_after", encode(m.pair_after)}});
  }
  out["moves"] = moves;
  out["Q_cleared"] = encode(r.Q_cleared);
  out["Q_cleared_is_polynomial"] = r.Q_cleared.is_polynomial();
  out["symmetry_checked"] = true;
  out["notes"] = r.notes;
  if (r.reduction && r.reduction_request) {
    Json coords = Json::array();
    for (const auto& c : r.reduction->coordinates) coords.push_back(encode(c));
    out["reduction"] = {{"k_max", r.reduction_request->k_max},
                        {"window", {r.reduction_request->window.lo, r.reduction_request->window.hi}},
                        {"rank", r.reduction->rank},
                        {"representative", encode(r.reduction->representative)},
                        {"coordinates", coords}};
  }
  return out;
}

Rational decode_rational(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
  if (!j.is_string()) fail(path, "expected a rational as a string \"num/den\" or an integer");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const Error& e) {
    fail(path, e.what());
  }
}

HLPoly decode_hlpoly(const Json& j, const std::string& path) {
  if (j.is_string() || j.is_number_integer()) return HLPoly(decode_rational(j, path));
  HLPoly::Terms terms;
  const Json& a = array_at(j, path);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Json& t = a[i];
    if (!t.is_array() || t.size() != 2) fail(sub(path, i), "expected [exponent, coefficient]");
    terms[decode_exponent(t[0], sub(sub(path, i), std::size_t{0}))] += decode_rational(t[1], sub(sub(path, i), std::size_t{1}));
  }
  return HLPoly::from_terms(terms);
}

OneVarFrac decode_frac(const Json& j, const std::string& path) {
  if (!j.is_object()) return OneVarFrac(decode_hlpoly(j, path));
  const HLPoly den = decode_hlpoly(field(j, "den", path), sub(path, "den"));
  if (den.is_zero()) fail(sub(path, "den"), "zero denominator");
  return OneVarFrac(decode_hlpoly(field(j, "num", path), sub(path, "num")), den);
}

TriVarElem decode_trivar(const Json& j, const std::string& path) {
  const BiLaurent num = decode_terms(field(j, "num", path), sub(path, "num"));
  const BiLaurent den = j.contains("den") ? decode_terms(j["den"], sub(path, "den")) : BiLaurent(1);
  if (den.is_zero()) fail(sub(path, "den"), "zero denominator");
  return TriVarElem(num, den);
}

MonGraph decode_graph(const Json& j, const std::string& path) {
  MonGraph g;
  g.vertices = decode_small_int(field(j, "vertices", path), sub(path, "vertices"));
  const std::string ep = sub(path, "edges");
  const Json& edges = array_at(field(j, "edges", path), ep);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Json& e = edges[i];
    if (!e.is_array() || e.size() != 4) fail(sub(ep, i), "expected [tail, head, a, b]");
    g.edges.push_back({decode_small_int(e[0], sub(ep, i)), decode_small_int(e[1], sub(ep, i)),
                       decode_small_int(e[2], sub(ep, i)), decode_small_int(e[3], sub(ep, i))});
  }
  const std::string op = sub(path, "orders");
  const Json& orders = array_at(field(j, "orders", path), op);
  for (std::size_t i = 0; i < orders.size(); ++i) {
    const Json& o = orders[i];
    if (!o.is_array() || o.size() != 3) fail(sub(op, i), "expected three half-edge indices");
    g.orders.push_back({decode_small_int(o[0], sub(op, i)), decode_small_int(o[1], sub(op, i)),
                        decode_small_int(o[2], sub(op, i))});
  }
  validate(g);
  return g;
}

DiagramVector decode_diagram(const Json& j, const std::string& path) {
  DiagramVector v;
  const Json& a = array_at(j, path);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::string p = sub(path, i);
    const Rational c = a[i].is_object() && a[i].contains("coeff") ? decode_rational(a[i]["coeff"], sub(p, "coeff")) : Rational(1);
    v.add(decode_graph(field(a[i], "graph", p), sub(p, "graph")), c);
  }
  return v;
}

Manifest decode_manifest(const Json& j) {
  if (!j.is_object()) fail("$", "expected an object");
  Manifest m;
  if (j.contains("initial")) {
    const Json& init = j["initial"];
    if (!init.is_object()) fail("$.initial", "expected an object");
    if (init.contains("Delta") || init.contains("delta")) m.initial = decode_pair(init, "Delta", "delta", "$.initial");
    if (init.contains("Q")) m.initial_Q = decode_trivar(init["Q"], "$.initial.Q");
  }
  const Json& moves = array_at(field(j, "moves", "$"), "$.moves");
  for (std::size_t i = 0; i < moves.size(); ++i) m.moves.push_back(decode_move(moves[i], sub("$.moves", i)));
  return m;
}

}  // namespace eqcube
