#include <gtest/gtest.h>

#include "eqcube/codec.hpp"
#include "eqcube/pipeline.hpp"
#include "support/random.hpp"

namespace {

using namespace eqcube;

const char* kTrefoilSurgery = R"({
  "moves": [
    {"type": "surgery", "g": 1,
     "Laa": [["-1"]], "Lab": [["1"]], "Lba": [["0"]], "Lbb": [["-1"]],
     "p": 1, "q": 1,
     "Delta_after": [[-1, "1"], [0, "-1"], [1, "1"]],
     "delta_after": [[-1, "1"], [0, "-1"], [1, "1"]]}
  ]
})";

Report run_text(const std::string& text) { return run_pipeline(decode_manifest(parse_json_text(text))); }

TEST(Pipeline, EmptyManifest) {
  const Report r = run_text(R"({"moves": []})");
  EXPECT_EQ(r.Q, TriVarElem());
  ASSERT_TRUE(r.eval_111.has_value());
  EXPECT_EQ(*r.eval_111, 0);
  EXPECT_EQ(r.final_pair, AlexanderPair());
}

TEST(Pipeline, ConnectedSum) {
  const Report r = run_text(R"({"moves": [{"type": "connected_sum", "lambda": "1"}]})");
  EXPECT_EQ(r.Q, TriVarElem(Rational(6)));
  EXPECT_EQ(*r.eval_111, 6);
  ASSERT_EQ(r.moves.size(), 1u);
  EXPECT_EQ(r.moves[0].type, "connected_sum");
}

TEST(Pipeline, TrefoilSurgery) {
  const Report r = run_text(kTrefoilSurgery);
  EXPECT_EQ(r.Q, TriVarElem(Rational(6)));
  EXPECT_EQ(*r.eval_111, 6);
  EXPECT_EQ(r.final_pair.Delta(), HLPoly::t_pow(1) - HLPoly(1) + HLPoly::t_pow(-1));
  EXPECT_FALSE(r.notes.empty());
}

TEST(Pipeline, FramingInvolution) {
  testing_support::Rng rng(17);
  for (int i = 0; i < 5; ++i) {
    const AlexanderPair pair = testing_support::random_pair(rng, 2);
    Manifest m;
    m.initial = pair;
    m.initial_Q = TriVarElem(Rational(3));
    m.moves = {FramingMove{1}, FramingMove{-1}};
    const Report r = run_pipeline(m);
    EXPECT_EQ(r.Q, m.initial_Q);
    EXPECT_EQ(r.moves[0].delta + r.moves[1].delta, TriVarElem());
  }
}

TEST(Pipeline, MoveErrorCarriesIndex) {
  try {
    run_text(R"({"moves": [{"type": "connected_sum", "lambda": "0"},
                           {"type": "knot_change", "V": [[1, "1"], [-1, "1"]]}]})");
    FAIL();
  } catch (const MoveError& e) {
    EXPECT_EQ(e.index(), 1u);
    EXPECT_EQ(e.code(), ErrorCode::NotAntisymmetric);
  } catch (const Error& e) {
    // Decoding validates V before the pipeline runs.
    EXPECT_EQ(e.code(), ErrorCode::NotAntisymmetric);
  }
}

TEST(Pipeline, NonSymmetricInitialQIsRejected) {
  try {
    PipelineState s(AlexanderPair(), TriVarElem(BiLaurent::monomial(1, 0)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SymmetryViolation);
  }
}

TEST(Pipeline, Deterministic) {
  const Json a = encode(run_text(kTrefoilSurgery));
  const Json b = encode(run_text(kTrefoilSurgery));
  EXPECT_EQ(a.dump(), b.dump());
}

TEST(Pipeline, ReductionRequest) {
  const Report r = run_pipeline(decode_manifest(parse_json_text(kTrefoilSurgery)), ReductionRequest{10, {}});
  ASSERT_TRUE(r.reduction.has_value());
  EXPECT_EQ(r.reduction->rank, 10u);
  EXPECT_NE(r.reduction->representative, TriVarElem());
}

TEST(Codec, RationalRoundTrip) {
  for (const char* s : {"0", "3", "-1/2", "22/7"}) EXPECT_EQ(to_string(decode_rational(encode(parse_rational(s)))), s);
  EXPECT_EQ(decode_rational(Json(5)), 5);
}

TEST(Codec, PolynomialRoundTrip) {
  testing_support::Rng rng(2);
  for (int i = 0; i < 30; ++i) {
    const HLPoly p = testing_support::random_poly(rng, 4, i % 2 == 1);
    EXPECT_EQ(decode_hlpoly(encode(p)), p);
    const OneVarFrac f = testing_support::random_frac(rng);
    EXPECT_EQ(decode_frac(encode(f)), f);
    const TriVarElem t = testing_support::random_tri(rng);
    EXPECT_EQ(decode_trivar(encode(t)), t);
  }
}

TEST(Codec, ReportQRoundTrips) {
  const Report r = run_text(kTrefoilSurgery);
  const Json j = parse_json_text(encode(r).dump(2));
  EXPECT_EQ(decode_trivar(j.at("Q")), r.Q);
  EXPECT_EQ(j.at("eval_111"), "6");
  EXPECT_TRUE(j.at("symmetry_checked").get<bool>());
}

TEST(Codec, GraphRoundTrip) {
  testing_support::Rng rng(8);
  for (int i = 0; i < 20; ++i) {
    const MonGraph g = testing_support::random_graph(rng, 1 + i % 3);
    EXPECT_EQ(decode_graph(encode(g)), g);
  }
}

TEST(Codec, SyntaxErrorHasPosition) {
  try {
    parse_json_text("{\n  \"moves\": [\n    {\"type\": }\n  ]\n}");
    FAIL();
  } catch (const ParseFailure& e) {
    EXPECT_EQ(e.code(), ErrorCode::ParseError);
    EXPECT_EQ(e.line(), 3u);
    EXPECT_GT(e.column(), 0u);
  }
}

TEST(Codec, SchemaErrorNamesPath) {
  try {
    decode_manifest(parse_json_text(R"({"moves": [{"type": "framing", "n": "x"}]})"));
    FAIL();
  } catch (const ParseFailure& e) {
    EXPECT_NE(std::string(e.what()).find("$.moves[0].n"), std::string::npos) << e.what();
  }
  try {
    decode_manifest(parse_json_text(R"({"moves": [{"type": "teleport"}]})"));
    FAIL();
  } catch (const ParseFailure& e) {
    EXPECT_NE(std::string(e.what()).find("$.moves[0].type"), std::string::npos) << e.what();
  }
}

TEST(Codec, DomainErrorsKeepTheirCodes) {
  try {
    decode_manifest(parse_json_text(R"({"moves": [{"type": "surgery", "g": 0, "Laa": [], "Lab": [], "Lba": [], "Lbb": [],
                                                   "p": 2, "q": 4, "Delta_after": "1", "delta_after": "1"}]})"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotCoprime);
  }
}

}  // namespace
