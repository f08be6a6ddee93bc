#include <filesystem>
#include <fstream>

#include "bmwf/io.hpp"
#include "doctest.h"

using namespace bmwf;

namespace {

const ParamSet& P() {
  static const ParamSet p = make_params(kDefaultQ, kDefaultNu, 3);
  return p;
}

}  // namespace

TEST_CASE("element JSON round trip") {
  RationalContext c(3, rational_scalars(P()));
  RElement e = gen_T(c, 1) * gen_K(c, 2) + gen_Tinv(c, 2).scaled(Rational(-3, 7));
  Json j = element_to_json(e);
  CHECK(j["algebra"] == "bmw");
  CHECK(j["params"]["q"] == "6/5");
  CHECK(element_from_json(j, c) == e);
  CHECK(element_from_json(Json::parse(j.dump()), c) == e);
}

TEST_CASE("element JSON accepts arbitrary words and U letters") {
  RationalContext c(3, rational_scalars(P()));
  Json j = Json::parse(R"({"algebra":"bmw","n":3,"params":{"q":"6/5","nu":"7/3"},
      "terms":[{"word":["T1","U1"],"coeff":"2"},{"word":["K2","K2"],"coeff":"-3/7"}]})");
  CHECK(element_from_json(j, c) == unit(c).scaled(2) + gen_K(c, 2).scaled(P().mu * Rational(-3, 7)));
}

TEST_CASE("element JSON errors") {
  RationalContext c(2, rational_scalars(P()));
  auto bad = [&](const char* text) { return element_from_json(Json::parse(text), c); };
  CHECK_THROWS_AS(bad(R"({"algebra":"bmw","n":3,"params":{"q":"6/5","nu":"7/3"},"terms":[]})"), Error);
  CHECK_THROWS_AS(bad(R"({"algebra":"bmw","n":2,"params":{"q":"2","nu":"7/3"},"terms":[]})"), Error);
  CHECK_THROWS_AS(bad(R"({"algebra":"bmw","n":2,"params":{"q":"6/5","nu":"7/3"},"terms":[{"word":["T2"],"coeff":"1"}]})"),
                  Error);
  CHECK_THROWS_AS(bad(R"({"algebra":"bmw","n":2,"params":{"q":"6/5","nu":"7/3"},"terms":[{"word":["T1"],"coeff":"x"}]})"),
                  Error);
  CHECK_THROWS_AS(bad(R"({"algebra":"hecke"})"), Error);
}

TEST_CASE("idempotent record round trip") {
  RationalContext c(2, rational_scalars(P()));
  auto e = fusion_idempotent(c, P(), parse_tableau("1;1,1"));
  Json j = idempotent_to_json(e);
  CHECK(j["tableau"] == "1;1,1");
  CHECK(j["contents"][1] == "25/36");
  CHECK(j["method"] == "fusion");
  auto back = idempotent_from_json(j, c);
  CHECK(back.element == e.element);
  CHECK(back.contents == e.contents);
  CHECK(encode_tableau(back.tableau) == "1;1,1");
}

TEST_CASE("Brauer and Hecke JSON") {
  Json b = brauer_to_json(BrauerElement::eps(2, 1, Rational(5)) + BrauerElement::one(2, Rational(5)));
  CHECK(b["algebra"] == "brauer");
  CHECK(b["params"]["omega"] == "5");
  CHECK(b["terms"].size() == 2);
  for (const auto& t : b["terms"]) CHECK(t["diagram"].size() == 2);
  Rational q(6, 5);
  Json h = hecke_to_json(hecke_T(3, q, 2), q);
  CHECK(h["terms"][0]["perm"] == Json::parse("[1,3,2]"));
  CHECK(h["terms"][0]["coeff"] == "1");
}

TEST_CASE("idempotent cache") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "bmwf_cache_test";
  fs::remove_all(dir);
  RationalContext c(2, rational_scalars(P()));
  IdempotentCache cache(dir);
  if (std::getenv("BMWF_CACHE")) return;
  CHECK_FALSE(cache.load(c, P(), "fusion").has_value());
  std::vector<Idempotent> recs;
  for (const auto& t : enumerate_tableaux(2)) recs.push_back(fusion_idempotent(c, P(), t));
  cache.store(P(), "fusion", recs);
  auto hit = cache.load(c, P(), "fusion");
  REQUIRE(hit.has_value());
  REQUIRE(hit->size() == recs.size());
  for (std::size_t k = 0; k < recs.size(); ++k) CHECK((*hit)[k].element == recs[k].element);
  CHECK_FALSE(cache.load(c, P(), "jm").has_value());
  // another parameter set maps to another file
  auto p2 = make_params(Rational(2), Rational(3), 2);
  CHECK(cache.file_for(2, p2) != cache.file_for(2, P()));
  // a damaged file is treated as a miss
  std::ofstream(cache.file_for(2, P())) << "{not json";
  CHECK_FALSE(cache.load(c, P(), "fusion").has_value());
  fs::remove_all(dir);
}

TEST_CASE("suite reports") {
  auto r = suite_reflection(3, P(), 1);
  CHECK(r.pass());
  CHECK(r.checks == 30);
  Json j = report_to_json(r);
  CHECK(j["pass"] == true);
  CHECK(j["first_failure"].is_null());
  CHECK(suite_relations(3, P()).pass());
  CHECK(suite_contraction(2, Rational(5), 0).pass());
}

TEST_CASE("rational sampler is reproducible and avoids zero") {
  RationalSampler a(5), b(5);
  for (int k = 0; k < 200; ++k) {
    Rational x = a.next();
    CHECK(x == b.next());
    CHECK_FALSE(x.is_zero());
  }
}
