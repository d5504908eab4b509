#include "zagreb/report.hpp"

#include <sstream>

namespace zagreb {

namespace {

using nlohmann::json;

json side_json(const ExtremeSide& side) {
  return {{"value", side.value}, {"labeled_witnesses", side.labeled_witnesses}, {"witnesses", side.witnesses}};
}

json expectation_json(const Expectation& e) {
  return {{"formula", e.formula}, {"basis", e.stated ? "stated" : "derived"}, {"relation", e.relation}};
}

}  // namespace

json to_json(const ExtremalReport& r) {
  return {
      {"schema", kReportSchema},
      {"kind", "extremal-scan"},
      {"n", r.n},
      {"cyclomatic", r.cyclomatic},
      {"index", std::string(index_name(r.index))},
      {"labeled_graphs", r.labeled_graphs},
      {"deduplicated", r.deduplicated},
      {"min", side_json(r.min)},
      {"max", side_json(r.max)},
      {"wall_seconds", r.wall_seconds},
  };
}

json to_json(const VerdictReport& r) {
  json doc;
  doc["schema"] = kReportSchema;
  doc["kind"] = "verdict";
  doc["claim"] = std::string(claim_name(r.claim));
  doc["status"] = std::string(status_name(r.status));
  if (is_theorem(r.claim)) {
    doc["cyclomatic"] = r.cyclomatic;
    doc["range"] = {r.n_from, r.n_to};
  }
  if (r.lower) doc["lower"] = expectation_json(*r.lower);
  if (r.upper) doc["upper"] = expectation_json(*r.upper);

  json rows = json::array();
  for (const auto& row : r.rows) {
    json j;
    j["n"] = row.n;
    j["labeled_graphs"] = row.labeled_graphs;
    j["observed_min"] = row.observed_min;
    j["observed_max"] = row.observed_max;
    if (row.expected_min) j["expected_min"] = *row.expected_min;
    if (row.lower_bound) j["lower_bound"] = *row.lower_bound;
    if (row.lower_bound_attained) j["lower_bound_attained"] = *row.lower_bound_attained;
    if (row.expected_max) j["expected_max"] = *row.expected_max;
    j["min_witnesses"] = row.min_witnesses;
    j["max_witnesses"] = row.max_witnesses;
    if (!row.expected_min_witnesses.empty()) j["expected_min_witnesses"] = row.expected_min_witnesses;
    if (!row.expected_max_witnesses.empty()) j["expected_max_witnesses"] = row.expected_max_witnesses;
    j["ok"] = row.ok;
    rows.push_back(std::move(j));
  }
  if (is_theorem(r.claim)) doc["per_n"] = std::move(rows);

  if (r.lemma) {
    const auto& s = *r.lemma;
    doc["corpus"] = {{"exhaustive_order", s.exhaustive_order},
                     {"random_trials", s.trials},
                     {"seed", s.seed},
                     {"graphs", s.graphs},
                     {"graphs_with_sites", s.graphs_with_sites}};
    doc["sites"] = s.sites;
    doc["min_sites"] = s.min_sites;
    doc["violations"] = s.violations;
    doc["gain"] = {{"smallest", s.smallest_gain}, {"largest", s.largest_gain}};
  }

  json cex = json::array();
  for (const auto& c : r.counterexamples) {
    json j = {{"n", c.n}, {"graph6", c.graph6}, {"em1", c.value}, {"reason", c.reason}};
    if (!c.site.empty()) {
      j["site"] = c.site;
      j["after_graph6"] = c.after_graph6;
      j["em1_after"] = c.value_after;
    }
    cex.push_back(std::move(j));
  }
  doc["counterexamples"] = std::move(cex);
  doc["notes"] = r.notes;
  doc["wall_seconds"] = r.wall_seconds;
  return doc;
}

json without_timing(json doc) {
  if (doc.is_object()) {
    doc.erase("wall_seconds");
    for (auto it = doc.begin(); it != doc.end(); ++it) *it = without_timing(*it);
  } else if (doc.is_array()) {
    for (auto& value : doc) value = without_timing(value);
  }
  return doc;
}

std::string extremal_csv_header() {
  return "n,cyclomatic,index,labeled_graphs,min,min_classes,max,max_classes";
}

std::string extremal_csv_row(const ExtremalReport& r) {
  std::ostringstream out;
  out << r.n << ',' << r.cyclomatic << ',' << index_name(r.index) << ',' << r.labeled_graphs << ',' << r.min.value
      << ',' << r.min.witnesses.size() << ',' << r.max.value << ',' << r.max.witnesses.size();
  return out.str();
}

}  // namespace zagreb
