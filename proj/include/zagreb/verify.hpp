#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "zagreb/enumerate.hpp"

namespace zagreb {

class VerifyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Claim { Theorem1, Theorem2, Theorem3, Theorem4, Theorem5, Lemma1, Lemma2, Lemma3, Lemma4 };

std::string_view claim_name(Claim claim);
std::optional<Claim> parse_claim(std::string_view text);
bool is_theorem(Claim claim);

enum class Status { Pass, Fail, Inconclusive };

std::string_view status_name(Status status);

/// A closed-form expectation attached to a verdict.
struct Expectation {
  std::string formula;
  bool stated = false;
  /// "equal" for extremal values, "lower-bound" for inequalities.
  std::string relation;
};

/// A concrete graph that contradicts the claim, with the value recomputed
/// from scratch.
struct Counterexample {
  std::size_t n = 0;
  std::string graph6;
  std::int64_t value = 0;
  std::string reason;
  std::string site;          // lemmas only
  std::string after_graph6;  // lemmas only
  std::int64_t value_after = 0;
};

struct TheoremRow {
  std::size_t n = 0;
  std::uint64_t labeled_graphs = 0;
  std::int64_t observed_min = 0;
  std::int64_t observed_max = 0;
  std::optional<std::int64_t> expected_min;
  std::optional<std::int64_t> lower_bound;
  std::optional<bool> lower_bound_attained;
  std::optional<std::int64_t> expected_max;
  std::vector<std::string> min_witnesses;
  std::vector<std::string> max_witnesses;
  std::vector<std::string> expected_min_witnesses;
  std::vector<std::string> expected_max_witnesses;
  bool ok = true;
};

struct LemmaStats {
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::size_t exhaustive_order = 0;
  std::size_t graphs = 0;
  std::size_t graphs_with_sites = 0;
  std::uint64_t sites = 0;
  std::uint64_t violations = 0;
  std::size_t min_sites = 0;
  std::int64_t smallest_gain = 0;  // smallest |delta| seen in the lemma's direction
  std::int64_t largest_gain = 0;
};

struct VerdictReport {
  Claim claim = Claim::Theorem1;
  std::size_t cyclomatic = 0;
  std::size_t n_from = 0;
  std::size_t n_to = 0;
  std::optional<Expectation> lower;
  std::optional<Expectation> upper;
  std::vector<TheoremRow> rows;
  std::optional<LemmaStats> lemma;
  Status status = Status::Pass;
  std::vector<Counterexample> counterexamples;
  std::vector<std::string> notes;
  double wall_seconds = 0.0;
};

struct TheoremOptions {
  std::size_t n_from = 4;
  std::size_t n_to = 7;
  std::size_t workers = 1;
  bool allow_large = false;
};

/// Exhaustive check of one extremal theorem at every order in the range.
VerdictReport verify_theorem(Claim claim, const TheoremOptions& options);

struct LemmaOptions {
  std::size_t trials = 1000;
  std::uint64_t seed = 1;
  /// Every connected graph up to this order joins the corpus.
  std::size_t exhaustive_order = 7;
  std::size_t min_sites = 100;
  std::size_t workers = 1;
};

/// Applies every applicable rewrite of the lemma's operation to every graph in
/// the corpus and checks the EM1 change has the stated strict sign.
VerdictReport verify_lemma(Claim claim, const LemmaOptions& options);

/// Connected graphs up to max_order (one per isomorphism class), computed once
/// per process and shared.
const std::vector<Graph>& small_connected_graphs(std::size_t max_order, std::size_t workers = 1);

}  // namespace zagreb
