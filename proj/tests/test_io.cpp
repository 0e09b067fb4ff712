#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pstab/corpus.hpp"
#include "pstab/io.hpp"

using namespace pstab;

namespace {

Json parse(const char* text) { return Json::parse(text); }

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::Internal;
}

}  // namespace

TEST_CASE("group point schema") {
  Json j = parse(R"({"group":{"type":"SL","n":2},"kind":"lie","matrices":[[["1","1"],["0","1"]]]})");
  GroupPoint x = parse_group_point_json(j, Field::Q);
  CHECK(x.group() == Group::SL);
  CHECK(x.kind() == Kind::LieTuple);
  CHECK(x.n() == 2);
  CHECK(x.mat(0) == Matrix::ints({{1, 1}, {0, 1}}));
}

TEST_CASE("parse error codes") {
  // SL group tuple with det 2
  Json det2 = parse(R"({"group":{"type":"SL","n":2},"kind":"group","matrices":[[["2","0"],["0","1"]]]})");
  CHECK(code_of([&] { parse_group_point_json(det2, Field::Q); }) == Errc::DetNotOne);

  // imaginary entries under field Q
  Json gauss = parse(R"({"group":{"type":"GL","n":2},"kind":"group","matrices":[[["i","0"],["0","-i"]]]})");
  CHECK(code_of([&] { parse_group_point_json(gauss, Field::Q); }) == Errc::FieldMismatch);
  CHECK_NOTHROW(parse_group_point_json(gauss, Field::QI));

  // nonsquare matrix
  Json rect = parse(R"({"group":{"type":"GL","n":2},"kind":"lie","matrices":[[["1","0","0"],["0","1","0"]]]})");
  CHECK(code_of([&] { parse_group_point_json(rect, Field::Q); }) == Errc::NotSquare);

  // unknown keys are rejected
  Json extra = parse(R"({"group":{"type":"GL","n":2},"kind":"lie","matrices":[[["1","0"],["0","1"]]],"comment":"x"})");
  CHECK(code_of([&] { parse_group_point_json(extra, Field::Q); }) == Errc::UnknownKey);

  Json missing = parse(R"({"group":{"type":"GL","n":2},"matrices":[[["1","0"],["0","1"]]]})");
  CHECK(code_of([&] { parse_group_point_json(missing, Field::Q); }) == Errc::MissingKey);

  Json singular = parse(R"({"group":{"type":"GL","n":2},"kind":"group","matrices":[[["1","1"],["1","1"]]]})");
  CHECK(code_of([&] { parse_group_point_json(singular, Field::Q); }) == Errc::NotInvertible);
}

TEST_CASE("cochar schema") {
  Json j = parse(R"({"weights":[1,-1],"conjugator":[["1","0"],["0","1"]]})");
  Cochar c = parse_cochar_json(j, Field::Q, 2);
  CHECK(c.weights() == std::vector<long long>{1, -1});
  CHECK(c.conjugator().is_identity());

  // omitted conjugator means identity, and identity is omitted on output
  Json no_h = parse(R"({"weights":[2,0]})");
  Cochar c2 = parse_cochar_json(no_h, Field::Q, 2);
  CHECK(c2.conjugator().is_identity());
  Json out = cochar_to_json(c2);
  CHECK(!out.contains("conjugator"));
  CHECK(out["weights"] == Json::array({2, 0}));

  Json bad = parse(R"({"weights":[1,-1],"spin":3})");
  CHECK_THROWS_AS(parse_cochar_json(bad, Field::Q, 2), Error);
}

TEST_CASE("report round trip") {
  auto rep = classify(example_sl2_shear());
  Json j = report_to_json(rep);
  // stable field order
  auto it = j.begin();
  CHECK(it.key() == "flags");
  ++it;
  CHECK(it.key() == "labels");
  ++it;
  CHECK(it.key() == "dims");
  ++it;
  CHECK(it.key() == "witness");
  ++it;
  CHECK(it.key() == "notes");

  REQUIRE(!j["witness"].is_null());
  // everything emitted parses back
  GroupPoint limit = parse_group_point_json(j["witness"]["limit"], Field::Q, "limit");
  CHECK(limit.mat(0).is_identity());
  Cochar c = parse_cochar_json(j["witness"]["cochar"], Field::Q, 2);
  CHECK(c.weights() == std::vector<long long>{1, -1});

  // byte determinism
  CHECK(j.dump(2) == report_to_json(classify(example_sl2_shear())).dump(2));
}

TEST_CASE("presentation schema") {
  Json j = parse(R"({"generators":2,"relators":[[1,2,-1,-2]]})");
  RepPresentation p = parse_presentation_json(j);
  CHECK(p.n_generators == 2);
  CHECK(p.relators.size() == 1);
  CHECK(p.relators[0] == std::vector<int>{1, 2, -1, -2});

  Json bad = parse(R"({"generators":2,"relators":[[0]]})");
  CHECK_THROWS_AS(parse_presentation_json(bad), Error);
  Json oob = parse(R"({"generators":2,"relators":[[3]]})");
  CHECK_THROWS_AS(parse_presentation_json(oob), Error);
}

TEST_CASE("scalar strings in matrices") {
  Json m = parse(R"([["1/2","1/3"],["0","1/7"]])");
  Matrix parsed = parse_matrix_json(m, Field::Q, "m");
  CHECK(parsed.at(0, 0) == Scalar::rational(1, 2));
  Json back = matrix_to_json(parsed);
  CHECK(back == m);
}
