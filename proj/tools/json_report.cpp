#include "json_report.hpp"

namespace conglab::report {

namespace {

json point_json(const ExactPoint& p) { return json::array({p.c[0].get_str(), p.c[1].get_str(), p.c[2].get_str()}); }

const char* case_name(EndSegmentCase c) {
  switch (c) {
    case EndSegmentCase::Identity:
      return "identity";
    case EndSegmentCase::Split:
      return "split";
    case EndSegmentCase::Chain:
      return "chain";
  }
  return "?";
}

}  // namespace

json to_json(const PieceMask& m) { return m.indices(); }

json to_json(const CongruenceSystem& sys) {
  json list = json::array();
  for (const auto& c : sys.congruences()) list.push_back({{"left", to_json(c.left)}, {"right", to_json(c.right)}});
  return {{"r", sys.pieces()}, {"congruences", std::move(list)}};
}

json to_json(const Deduction& d) {
  json steps = json::array();
  for (const auto& s : d.steps) {
    json j = {{"rule", s.rule == Rule::Subset ? "subset" : "congruence"}, {"from", to_json(s.from)}, {"to", to_json(s.to)}};
    if (s.rule == Rule::Congruence) {
      j["congruence"] = s.congruence + 1;
      j["inverse"] = s.inverse;
      j["complemented"] = s.complemented;
    }
    steps.push_back(std::move(j));
  }
  return {{"relation", d.relation == Relation::Congruent ? "congruent" : "subcongruent"},
          {"from", to_json(d.from)},
          {"to", to_json(d.to)},
          {"steps", std::move(steps)}};
}

json to_json(const ClassificationReport& rep) {
  json doc;
  doc["r"] = rep.r;
  doc["m"] = rep.m;
  json weak = {{"ok", rep.weak()}};
  if (rep.weak_witness) weak["witness"] = {{"mask", to_json(rep.weak_witness->mask)}, {"chain", to_json(rep.weak_witness->chain)}};
  json consistent = {{"ok", rep.consistent()}};
  if (rep.consistency_witness)
    consistent["witness"] = {{"left", to_json(rep.consistency_witness->left)},
                             {"right", to_json(rep.consistency_witness->right)},
                             {"chain", to_json(rep.consistency_witness->chain)}};
  json nonredundant = {{"ok", rep.nonredundant()}};
  if (rep.redundancy_witness)
    nonredundant["witness"] = {{"congruence", rep.redundancy_witness->index + 1}, {"chain", to_json(rep.redundancy_witness->chain)}};
  doc["weak"] = std::move(weak);
  doc["consistent"] = std::move(consistent);
  doc["nonredundant"] = std::move(nonredundant);
  json classes = json::array();
  for (const auto& cls : rep.classes.classes) {
    json c = json::array();
    for (const auto& m : cls) c.push_back(to_json(m));
    classes.push_back(std::move(c));
  }
  doc["classes"] = std::move(classes);
  doc["classes_complete"] = rep.classes.complete;
  return doc;
}

json to_json(const ReduceResult& res) {
  json rounds = json::array();
  for (const auto& m : res.rounds) rounds.push_back(to_json(m));
  json kept = json::array();
  for (auto i : res.kept_congruences) kept.push_back(i + 1);
  return {{"deleted", to_json(res.deleted)},
          {"rounds", std::move(rounds)},
          {"everything_deleted", res.everything_deleted()},
          {"original_index", res.original_index},
          {"kept_congruences", std::move(kept)},
          {"system", to_json(res.system)}};
}

json to_json(const TransformResult& res) {
  json sc = json::array();
  for (auto i : res.self_complement_indices) sc.push_back(i + 1);
  return {{"system", to_json(res.system)}, {"m_bar", res.m_bar}, {"self_complement", std::move(sc)}, {"input_size", res.input_size}};
}

json to_json(const PartitionSystem& ps) {
  json pairs = json::array();
  for (auto [i, j] : ps.pairs) pairs.push_back({i, j});
  return {{"n", ps.n}, {"r", ps.system.pieces()}, {"system", to_json(ps.system)}, {"sequences", ps.sequences}, {"pairs", std::move(pairs)}};
}

json to_json(const CongruenceDigraph& g, const DigraphEdge& e) {
  (void)g;
  return {{"from", to_json(e.from)}, {"to", to_json(e.to)}, {"label", edge_label(e)}, {"good", e.good}};
}

json to_json(const PartitionViolation& v, const Presentation& p) {
  return {{"g", format_word(v.g, p)},
          {"image", format_word(v.image, p)},
          {"congruence", v.congruence + 1},
          {"piece", v.piece},
          {"image_piece", v.image_piece}};
}

json to_json(const GroupPartition& part) {
  return {{"m_bar", part.m_bar()},
          {"anchor", format_word(part.anchor(), part.presentation())},
          {"case", case_name(part.end_segment_case())},
          {"split_index", part.split_index()},
          {"end_segment_pieces", part.end_segment_pieces()}};
}

json to_json(const PartitionReport& rep, const Presentation& p) {
  json j = {{"passed", rep.passed}, {"depth", rep.depth}, {"words", rep.words}, {"checks", rep.checks}};
  if (rep.violation) j["violation"] = to_json(*rep.violation, p);
  return j;
}

json to_json(const OrbitPartitionReport& rep, const Presentation& p) {
  json j = {{"passed", rep.passed},
            {"depth", rep.depth},
            {"points", rep.points},
            {"checks", rep.checks},
            {"exceptional", rep.exceptional}};
  if (rep.violation) j["violation"] = to_json(*rep.violation, p);
  return j;
}

json to_json(const FreenessCertificate& cert, const GroupRealization& real) {
  const Presentation& p = real.presentation;
  json gens = json::array();
  for (std::size_t i = 0; i < real.generators.size(); ++i)
    gens.push_back({{"name", format_word(Word::generator(p, i), p)},
                    {"entries", real.generators[i].entries()},
                    {"zeta_composed", static_cast<bool>(real.zeta_composed[i])}});
  json j = {{"m", p.generators()},
            {"m_bar", p.free_count()},
            {"depth", cert.depth},
            {"certified", cert.certified},
            {"words", cert.words},
            {"generators", std::move(gens)}};
  if (cert.counterexample) j["counterexample"] = format_word(*cert.counterexample, p);
  return j;
}

json to_json(const InvariantReport& rep) {
  json j = {{"passed", rep.passed()},
            {"no_full_intersection", rep.no_full_intersection},
            {"congruences", rep.congruences},
            {"finite_components", rep.finite_components},
            {"caps_nested", rep.caps_nested},
            {"progress", rep.progress},
            {"tracked_consistent", rep.tracked_consistent},
            {"patches", rep.patches},
            {"distinct_caps", rep.distinct_caps},
            {"tracked", rep.tracked},
            {"active_links", rep.active_links},
            {"components", rep.components},
            {"largest_component", rep.largest_component}};
  if (rep.witness) j["witness"] = *rep.witness;
  return j;
}

json to_json(const StageRecord& rec) {
  return {{"stage", rec.stage},
          {"base_entry", rec.z.index},
          {"whole_sphere", rec.z.whole},
          {"forced", rec.forced},
          {"x0", point_json(rec.x0)},
          {"k_bar", rec.k_bar},
          {"attempts", rec.attempts},
          {"support", rec.support},
          {"longest_trace", rec.longest_trace},
          {"s", rec.s_size},
          {"s_prime", rec.s_prime_size},
          {"radius_sq", rec.radius_sq.get_str()},
          {"patches_added", rec.patches_added}};
}

json to_json(const RunSummary& sum) {
  json reports = json::array();
  for (const auto& r : sum.reports) reports.push_back(to_json(r));
  json j = {{"requested", sum.requested},
            {"completed", sum.completed},
            {"passed", sum.passed},
            {"patches_per_piece", sum.patches_per_piece},
            {"covered_caps", sum.covered_caps},
            {"digest", sum.digest},
            {"reports", std::move(reports)}};
  if (sum.error) j["error"] = *sum.error;
  return j;
}

}  // namespace conglab::report
