#include <nlohmann/json.hpp>

#include "conglab/errors.hpp"
#include "conglab/sim.hpp"

namespace conglab {

namespace {

using nlohmann::json;

constexpr int kSchemaVersion = 1;

json point_json(const ExactPoint& p) { return json::array({p.c[0].get_str(), p.c[1].get_str(), p.c[2].get_str()}); }

Rational rational_of(const json& j) {
  Rational q(j.get<std::string>());
  q.canonicalize();
  return q;
}

ExactPoint point_of(const json& j) { return {rational_of(j.at(0)), rational_of(j.at(1)), rational_of(j.at(2))}; }

json mask_json(const PieceMask& m) { return m.indices(); }

}  // namespace

std::string snapshot_json(const StageState& st) {
  const Presentation& p = st.presentation();
  json doc;
  doc["schema"] = "conglab-stage-snapshot";
  doc["version"] = kSchemaVersion;
  doc["system"] = print_system(st.system);
  doc["variant"] = st.variant == Variant::Section2 ? "s2" : "s4";
  doc["m_bar"] = st.m_bar;
  doc["link_radius"] = st.link_radius;
  doc["certified_depth"] = st.realization.certified_depth;
  doc["config"] = {{"min_certified_depth", st.config.min_certified_depth},
                   {"activity_radius", st.config.activity_radius},
                   {"axis_depth", st.config.axis_depth},
                   {"x0_attempts", st.config.x0_attempts},
                   {"link_radius", st.config.link_radius}};
  doc["stage"] = st.stage;
  json stages = json::array();
  for (const auto& rec : st.history) {
    stages.push_back({{"stage", rec.stage},
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
                      {"patches_added", rec.patches_added}});
  }
  doc["stages"] = std::move(stages);
  json pieces = json::array();
  for (const auto& b : st.pieces) {
    json list = json::array();
    for (const auto& patch : b)
      list.push_back({{"word", format_word(patch.word, p)},
                      {"stage", patch.stage},
                      {"base_center", point_json(patch.base_center)},
                      {"radius_sq", patch.radius_sq.get_str()}});
    pieces.push_back(std::move(list));
  }
  doc["pieces"] = std::move(pieces);
  json tracked = json::array();
  for (const auto& t : st.tracked)
    tracked.push_back({{"stage", t.stage}, {"word", format_word(t.word, p)}, {"members", mask_json(t.members)}});
  doc["tracked"] = std::move(tracked);
  return doc.dump(1);
}

StageState load_snapshot(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("snapshot is not JSON: ") + e.what());
  }
  try {
    if (doc.at("schema") != "conglab-stage-snapshot") throw std::invalid_argument("not a stage snapshot");
    if (doc.at("version").get<int>() != kSchemaVersion)
      throw std::invalid_argument("unsupported snapshot version " + doc.at("version").dump());
    CongruenceSystem sys = parse_system(doc.at("system").get<std::string>());
    const Variant variant = doc.at("variant") == "s4" ? Variant::Section4 : Variant::Section2;
    const auto m_bar = doc.at("m_bar").get<std::size_t>();
    SimConfig config;
    const json& c = doc.at("config");
    config.min_certified_depth = c.at("min_certified_depth").get<std::size_t>();
    config.activity_radius = c.at("activity_radius").get<std::size_t>();
    config.axis_depth = c.at("axis_depth").get<std::size_t>();
    config.x0_attempts = c.at("x0_attempts").get<std::size_t>();
    config.link_radius = c.at("link_radius").get<std::size_t>();
    GroupRealization real = simulation_realization(sys, m_bar, doc.at("certified_depth").get<std::size_t>());
    StageState st = init(sys, std::move(real), variant, variant == Variant::Section2 ? CongruenceDigraph::npos : m_bar, config);
    const Presentation& p = st.presentation();

    std::vector<OrbitGraph::Id> x0_ids;
    for (const json& s : doc.at("stages")) {
      StageRecord rec;
      rec.stage = s.at("stage").get<std::size_t>();
      rec.z = st.schedule.entry(s.at("base_entry").get<std::size_t>());
      rec.forced = s.at("forced").get<bool>();
      rec.x0 = point_of(s.at("x0"));
      rec.k_bar = s.at("k_bar").get<int>();
      rec.attempts = s.at("attempts").get<std::size_t>();
      rec.support = s.at("support").get<std::size_t>();
      rec.longest_trace = s.at("longest_trace").get<std::size_t>();
      rec.s_size = s.at("s").get<std::size_t>();
      rec.s_prime_size = s.at("s_prime").get<std::size_t>();
      rec.radius_sq = rational_of(s.at("radius_sq"));
      rec.patches_added = s.at("patches_added").get<std::size_t>();
      rec.x0_id = st.graph.intern(rec.x0).first;
      x0_ids.push_back(rec.x0_id);
      st.history.push_back(std::move(rec));
    }
    st.stage = doc.at("stage").get<std::size_t>();
    if (st.stage != st.history.size()) throw std::invalid_argument("stage count does not match the stage records");

    const json& pieces = doc.at("pieces");
    if (pieces.size() != st.pieces.size()) throw std::invalid_argument("piece count does not match the system");
    for (std::size_t k = 0; k < pieces.size(); ++k) {
      for (const json& e : pieces[k]) {
        Patch patch;
        patch.word = parse_word(e.at("word").get<std::string>(), p);
        patch.stage = e.at("stage").get<std::size_t>();
        patch.base_center = point_of(e.at("base_center"));
        patch.radius_sq = rational_of(e.at("radius_sq"));
        if (patch.stage >= x0_ids.size()) throw std::invalid_argument("patch from an unknown stage");
        auto id = st.graph.walk(x0_ids[patch.stage], patch.word, st.realization);
        st.caps.insert(Cap{st.graph.point(id), patch.radius_sq}, PieceMask::of(st.r(), {static_cast<int>(k + 1)}));
        st.pieces[k].push_back(std::move(patch));
      }
    }
    for (const json& e : doc.at("tracked")) {
      TrackedPoint t;
      t.stage = e.at("stage").get<std::size_t>();
      t.word = parse_word(e.at("word").get<std::string>(), p);
      if (t.stage >= x0_ids.size()) throw std::invalid_argument("tracked point from an unknown stage");
      t.id = st.graph.walk(x0_ids[t.stage], t.word, st.realization);
      t.members = PieceMask::of(st.r(), e.at("members").get<std::vector<int>>());
      st.tracked.push_back(std::move(t));
    }
    return st;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed snapshot: ") + e.what());
  }
}

}  // namespace conglab
