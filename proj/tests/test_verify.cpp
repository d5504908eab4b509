#include <doctest.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "zagreb/canonical.hpp"
#include "zagreb/families.hpp"
#include "zagreb/graph6.hpp"
#include "zagreb/report.hpp"
#include "zagreb/verify.hpp"

using namespace zagreb;

TEST_CASE("claim names round trip") {
  for (Claim c : {Claim::Theorem1, Claim::Theorem2, Claim::Theorem3, Claim::Theorem4, Claim::Theorem5, Claim::Lemma1,
                  Claim::Lemma2, Claim::Lemma3, Claim::Lemma4}) {
    CHECK(parse_claim(claim_name(c)) == c);
  }
  CHECK(claim_name(Claim::Theorem5) == "theorem-5");
  CHECK_FALSE(parse_claim("theorem-6").has_value());
  CHECK(is_theorem(Claim::Theorem3));
  CHECK_FALSE(is_theorem(Claim::Lemma3));
}

TEST_CASE("every theorem holds on small orders") {
  for (Claim c : {Claim::Theorem1, Claim::Theorem2, Claim::Theorem3, Claim::Theorem4, Claim::Theorem5}) {
    CAPTURE(claim_name(c));
    const VerdictReport r = verify_theorem(c, {.n_from = 4, .n_to = 6});
    CHECK(r.status == Status::Pass);
    CHECK(r.rows.size() == 3);
    CHECK(r.counterexamples.empty());
  }
}

TEST_CASE("theorem rows carry the observed extremes") {
  const VerdictReport t5 = verify_theorem(Claim::Theorem5, {.n_from = 4, .n_to = 6});
  REQUIRE(t5.rows.size() == 3);
  CHECK(t5.cyclomatic == 3);
  CHECK(t5.rows[0].observed_max == 96);
  CHECK(t5.rows[0].max_witnesses == std::vector<std::string>{"C~"});
  CHECK(t5.rows[1].observed_max == 132);
  CHECK(t5.rows[1].max_witnesses.size() == 2);
  CHECK(t5.rows[2].observed_max == 188);

  const VerdictReport t4 = verify_theorem(Claim::Theorem4, {.n_from = 4, .n_to = 6});
  const std::int64_t mins[] = {96, 98, 100};
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(t4.rows[i].observed_min == mins[i]);
    CHECK(t4.rows[i].lower_bound == 4 * static_cast<std::int64_t>(t4.rows[i].n) + 68);
  }

  const VerdictReport t3 = verify_theorem(Claim::Theorem3, {.n_from = 4, .n_to = 6});
  const std::int64_t bmins[] = {52, 54, 58};
  const std::int64_t bmaxs[] = {52, 84, 136};
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(t3.rows[i].observed_min == bmins[i]);
    CHECK(t3.rows[i].observed_max == bmaxs[i]);
  }
}

TEST_CASE("theorem range validation") {
  CHECK_THROWS(verify_theorem(Claim::Theorem1, {.n_from = 6, .n_to = 5}));
  CHECK_THROWS(verify_theorem(Claim::Theorem5, {.n_from = 4, .n_to = 9}));
  CHECK_THROWS(verify_theorem(Claim::Lemma1, {}));
  CHECK_THROWS(verify_lemma(Claim::Theorem1, {}));
}

TEST_CASE("every lemma holds on a small corpus") {
  for (Claim c : {Claim::Lemma1, Claim::Lemma2, Claim::Lemma3, Claim::Lemma4}) {
    CAPTURE(claim_name(c));
    const VerdictReport r = verify_lemma(c, {.trials = 200, .seed = 5, .exhaustive_order = 6, .min_sites = 20});
    CHECK(r.status == Status::Pass);
    REQUIRE(r.lemma.has_value());
    CHECK(r.lemma->violations == 0);
    CHECK(r.lemma->sites >= 20);
    CHECK(r.lemma->smallest_gain > 0);
  }
}

TEST_CASE("lemmas with too few sites are inconclusive") {
  const VerdictReport r = verify_lemma(Claim::Lemma2, {.trials = 1, .seed = 1, .exhaustive_order = 4, .min_sites = 1000});
  CHECK(r.status == Status::Inconclusive);
  CHECK_FALSE(r.notes.empty());
}

TEST_CASE("lemma results are reproducible for a seed") {
  const LemmaOptions options{.trials = 150, .seed = 42, .exhaustive_order = 5, .min_sites = 1};
  const auto a = without_timing(to_json(verify_lemma(Claim::Lemma1, options)));
  const auto b = without_timing(to_json(verify_lemma(Claim::Lemma1, options)));
  CHECK(a == b);
}

TEST_CASE("verdict json matches the golden file") {
  const VerdictReport r = verify_theorem(Claim::Theorem5, {.n_from = 4, .n_to = 6});
  const nlohmann::json doc = without_timing(to_json(r));
  std::ifstream golden(std::string(ZAGREB_GOLDEN_DIR) + "/theorem5_n4_6.json");
  REQUIRE(golden.good());
  const nlohmann::json expected = nlohmann::json::parse(golden);
  CHECK(doc == expected);
  CHECK(doc.at("kind") == "verdict");
  CHECK(doc.at("status") == "pass");
  CHECK_FALSE(doc.contains("wall_seconds"));
}
