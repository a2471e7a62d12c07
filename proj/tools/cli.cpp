#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "conglab/budget.hpp"
#include "conglab/errors.hpp"
#include "json_report.hpp"

namespace conglab::cli {

namespace {

using report::json;
using report::to_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_text(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot read " + path);
  buf << f.rdbuf();
  return buf.str();
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write " + path);
  f << text;
  if (!f) throw UsageError("cannot write " + path);
}

CongruenceSystem load_system(const std::string& path, std::istream& in, std::ostream& err) {
  ParsedSystem parsed = parse_system_text(read_text(path, in));
  for (const auto& note : parsed.notes) err << "note: " << note << '\n';
  return std::move(parsed.system);
}

std::string indent(const std::string& text, const std::string& pad = "  ") {
  std::string out;
  std::istringstream lines(text);
  for (std::string line; std::getline(lines, line);) out += pad + line + '\n';
  return out;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

// The system handed to the partition and simulation commands, with its m_bar.
struct Prepared {
  CongruenceSystem system;
  Variant variant = Variant::Section2;
  std::size_t m_bar = 0;
};

Prepared prepare(const CongruenceSystem& sys, const std::string& variant) {
  const bool s2 = variant == "s2" || (variant.empty() && is_weak(sys));
  if (s2) {
    if (!is_weak(sys)) throw std::invalid_argument("variant s2 needs a weak system; try --variant s4");
    return {sys, Variant::Section2, sys.size()};
  }
  TransformResult t = transform_to_weak_plus_selfcomp(sys);
  return {std::move(t.system), Variant::Section4, t.m_bar};
}

std::string undirected_label(const UndirectedEdge& e) {
  const std::string n = std::to_string(e.congruence + 1);
  return e.a.to_string() + " - " + e.b.to_string() + " (" + (e.self_complement ? "tau" : "f") + n +
         (e.complemented ? ", complemented" : "") + ")";
}

std::string case_text(EndSegmentCase c) {
  switch (c) {
    case EndSegmentCase::Identity:
      return "identity anchor";
    case EndSegmentCase::Split:
      return "split";
    case EndSegmentCase::Chain:
      return "chain";
  }
  return "?";
}

ViewAxis parse_axis(const std::string& s) {
  if (s == "x") return ViewAxis::X;
  if (s == "y") return ViewAxis::Y;
  return ViewAxis::Z;
}

// ---------------------------------------------------------------------------

int cmd_classify(const std::string& file, bool as_json, std::ostream& out, std::ostream& err, std::istream& in) {
  const CongruenceSystem sys = load_system(file, in, err);
  const ClassificationReport rep = classify(sys);
  const bool ok = rep.weak() && rep.consistent() && rep.nonredundant();
  if (as_json) {
    out << to_json(rep).dump(2) << '\n';
    return ok ? kExitOk : kExitCheckFailed;
  }
  out << "pieces " << rep.r << ", congruences " << rep.m << '\n';
  out << "weak: " << yes_no(rep.weak()) << '\n';
  if (rep.weak_witness)
    out << "  " << rep.weak_witness->mask.to_string() << " is congruent to its complement\n"
        << indent(describe(rep.weak_witness->chain), "    ");
  out << "consistent: " << yes_no(rep.consistent()) << '\n';
  if (rep.consistency_witness)
    out << "  " << rep.consistency_witness->left.to_string() << " <= " << rep.consistency_witness->right.to_string()
        << '\n'
        << indent(describe(rep.consistency_witness->chain), "    ");
  out << "nonredundant: " << yes_no(rep.nonredundant()) << '\n';
  if (rep.redundancy_witness)
    out << "  congruence " << rep.redundancy_witness->index + 1 << " follows from the others\n"
        << indent(describe(rep.redundancy_witness->chain), "    ");
  std::size_t nontrivial = 0;
  for (const auto& cls : rep.classes.classes) nontrivial += cls.size() > 1 ? 1 : 0;
  out << "classes: " << rep.classes.classes.size() << (rep.classes.complete ? "" : " (named masks only)") << ", "
      << nontrivial << " with more than one mask\n";
  for (const auto& cls : rep.classes.classes) {
    if (cls.size() < 2) continue;
    out << " ";
    for (std::size_t i = 0; i < cls.size(); ++i) out << (i ? " ~ " : " ") << cls[i].to_string();
    out << '\n';
  }
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_reduce(const std::string& file, bool as_json, std::ostream& out, std::ostream& err, std::istream& in) {
  const CongruenceSystem sys = load_system(file, in, err);
  const ReduceResult res = reduce_inconsistent(sys);
  if (as_json) {
    out << to_json(res).dump(2) << '\n';
    return kExitOk;
  }
  out << "deleted: " << res.deleted.to_string() << '\n';
  for (std::size_t i = 0; i < res.rounds.size(); ++i) out << "round " << i + 1 << ": " << res.rounds[i].to_string() << '\n';
  if (res.everything_deleted()) {
    out << "every piece is deleted\n";
    return kExitOk;
  }
  out << "pieces:";
  for (std::size_t k = 0; k < res.original_index.size(); ++k) out << ' ' << k + 1 << "<-" << res.original_index[k];
  out << "\nkept congruences:";
  for (auto i : res.kept_congruences) out << ' ' << i + 1;
  out << '\n' << print_system(res.system);
  return kExitOk;
}

int cmd_transform(const std::string& file, bool as_json, std::ostream& out, std::ostream& err, std::istream& in) {
  const CongruenceSystem sys = load_system(file, in, err);
  const TransformResult res = transform_to_weak_plus_selfcomp(sys);
  const bool ok = check_transform(sys, res);
  if (as_json) {
    json j = to_json(res);
    j["check"] = ok;
    out << j.dump(2) << '\n';
  } else {
    out << "# m_bar " << res.m_bar << ", self-complement:";
    for (auto i : res.self_complement_indices) out << ' ' << i + 1;
    out << ", from " << res.input_size << " congruences\n" << print_system(res.system);
  }
  if (!ok) err << "transform check failed\n";
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_gen(int n, bool as_json, std::ostream& out) {
  const PartitionSystem ps = generate_partition_system(n);
  if (as_json)
    out << to_json(ps).dump(2) << '\n';
  else
    out << print_system(ps.system);
  return kExitOk;
}

int cmd_graph(const std::string& file, const std::string& variant, std::vector<int> claims, const std::string& dot,
              bool as_json, std::ostream& out, std::ostream& err, std::istream& in) {
  const CongruenceSystem sys = load_system(file, in, err);
  std::optional<CongruenceDigraph> g;
  if (variant == "s4") {
    const TransformResult t = transform_to_weak_plus_selfcomp(sys);
    g.emplace(t.system, Variant::Section4, t.m_bar);
  } else {
    g.emplace(sys);
  }
  if (claims.empty()) claims = {1, 2, 3};
  std::sort(claims.begin(), claims.end());
  claims.erase(std::unique(claims.begin(), claims.end()), claims.end());

  bool ok = true;
  json doc = {{"variant", variant},
              {"m_bar", g->m_bar()},
              {"vertices", g->vertex_count()},
              {"edges", g->edges().size()},
              {"good_edges", g->good_count()}};
  std::ostringstream text;
  text << "variant " << variant << ", m_bar " << g->m_bar() << ", " << g->vertex_count() << " vertices, "
       << g->edges().size() << " edges, " << g->good_count() << " good\n";
  for (int c : claims) {
    if (c == 1) {
      const Claim1Result res = check_claim1(*g);
      ok = ok && res.holds;
      json cyc = json::array();
      for (auto e : res.cycle) cyc.push_back(to_json(*g, g->edge(e)));
      doc["claim1"] = {{"holds", res.holds}, {"cycle", std::move(cyc)}};
      text << "claim 1: " << (res.holds ? "holds" : "fails") << '\n';
      for (auto e : res.cycle) text << "  " << describe_edge(g->edge(e)) << '\n';
    } else if (c == 2) {
      const UndirectedQuotient q = build_quotient(*g);
      const Claim2Result res = check_claim2(*g, q);
      ok = ok && res.holds;
      json cyc = json::array();
      for (auto e : res.cycle) cyc.push_back(undirected_label(q.edges[e]));
      json taus = json::array();
      for (auto e : res.self_complement_edges) taus.push_back(undirected_label(q.edges[e]));
      doc["claim2"] = {{"holds", res.holds},
                       {"components", q.component_count},
                       {"cycle", std::move(cyc)},
                       {"self_complement_edges", std::move(taus)}};
      text << "claim 2: " << (res.holds ? "holds" : "fails") << " (" << q.component_count << " components)\n";
      for (auto e : res.cycle) text << "  " << undirected_label(q.edges[e]) << '\n';
      for (auto e : res.self_complement_edges) text << "  " << undirected_label(q.edges[e]) << '\n';
    } else {
      const Claim3Result res = check_claim3(*g, 0, state_budget());
      ok = ok && res.holds;
      json path = json::array();
      for (auto e : res.path) path.push_back(to_json(*g, g->edge(e)));
      doc["claim3"] = {{"holds", res.holds},
                       {"bound", res.bound},
                       {"longest", res.longest},
                       {"unbounded", res.unbounded},
                       {"states", res.states},
                       {"path", std::move(path)}};
      text << "claim 3: " << (res.holds ? "holds" : "fails") << " (bound " << res.bound << ", longest free path ";
      if (res.unbounded)
        text << "unbounded";
      else
        text << res.longest;
      text << ")\n";
      for (auto e : res.path) text << "  " << describe_edge(g->edge(e)) << '\n';
    }
  }
  if (!dot.empty()) write_text(dot, to_dot(*g), out);
  if (as_json)
    out << doc.dump(2) << '\n';
  else if (dot != "-")
    out << text.str();
  return ok ? kExitOk : kExitCheckFailed;
}

struct PartitionArgs {
  std::string file;
  std::string variant;
  std::string anchor = "e";
  std::size_t depth = 5;
  std::size_t dump_depth = 0;
  std::size_t power_bound = 16;
  std::string kernel = "parallel";
  bool as_json = false;
};

int cmd_partition(const PartitionArgs& a, std::ostream& out, std::ostream& err, std::istream& in) {
  const Prepared prep = prepare(load_system(a.file, in, err), a.variant);
  const Presentation pres = witness_presentation(prep.system, prep.m_bar);
  const Word anchor = parse_word(a.anchor, pres);
  const GroupPartition part = build_group_partition(prep.system, prep.m_bar, anchor);
  const PartitionReport rep =
      verify_group_partition(part, a.depth, a.kernel == "serial" ? Kernel::Serial : Kernel::Parallel);
  const bool anchored = part.assign(anchor) == part.assign(Word::identity());
  const bool ok = rep.passed && anchored;
  if (a.as_json) {
    json doc = to_json(part);
    doc["variant"] = prep.variant == Variant::Section2 ? "s2" : "s4";
    doc["system"] = to_json(prep.system);
    doc["anchor_piece"] = part.assign(anchor);
    doc["identity_piece"] = part.assign(Word::identity());
    doc["verify"] = to_json(rep, pres);
    if (a.dump_depth > 0) {
      json dump = json::array();
      for (const Word& g : enumerate_ball(pres, a.dump_depth)) dump.push_back({format_word(g, pres), part.assign(g)});
      doc["assignment"] = std::move(dump);
    }
    out << doc.dump(2) << '\n';
    return ok ? kExitOk : kExitCheckFailed;
  }
  out << "variant " << (prep.variant == Variant::Section2 ? "s2" : "s4") << ", m_bar " << prep.m_bar << ", anchor "
      << format_word(anchor, pres) << '\n';
  out << "end segment: " << case_text(part.end_segment_case());
  if (part.split_index() > 0) out << " at j = " << part.split_index();
  out << ", pieces";
  for (int k : part.end_segment_pieces()) out << ' ' << k;
  out << '\n';
  out << "anchor piece " << part.assign(anchor) << ", identity piece " << part.assign(Word::identity()) << '\n';
  out << "verified to length " << rep.depth << ": " << rep.words << " words, " << rep.checks << " checks, "
      << (rep.passed ? "passed" : "FAILED") << '\n';
  if (rep.violation) out << "  " << describe(*rep.violation, pres) << '\n';
  if (a.dump_depth > 0)
    for (const Word& g : enumerate_ball(pres, a.dump_depth)) out << format_word(g, pres) << ' ' << part.assign(g) << '\n';
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_orbit_partition(const PartitionArgs& a, std::ostream& out, std::ostream& err, std::istream& in) {
  const Prepared prep = prepare(load_system(a.file, in, err), a.variant);
  const Presentation pres = witness_presentation(prep.system, prep.m_bar);
  const Word w = parse_word(a.anchor, pres);
  const GroupPartition part = build_group_partition(prep.system, prep.m_bar, w);
  const OrbitPartition op = build_orbit_partition(part, OrbitModel(pres, w, a.power_bound));
  const OrbitPartitionReport rep = verify_orbit_partition(op, a.depth);
  if (a.as_json) {
    json doc = to_json(part);
    doc["variant"] = prep.variant == Variant::Section2 ? "s2" : "s4";
    doc["fixed_word"] = format_word(w, pres);
    doc["verify"] = to_json(rep, pres);
    if (a.dump_depth > 0) {
      json dump = json::array();
      for (const Word& g : enumerate_ball(pres, a.dump_depth))
        dump.push_back({format_word(g, pres), format_word(op.representative(g), pres), op.assign(g)});
      doc["assignment"] = std::move(dump);
    }
    out << doc.dump(2) << '\n';
    return rep.passed ? kExitOk : kExitCheckFailed;
  }
  out << "fixed word " << format_word(w, pres) << ", m_bar " << prep.m_bar << ", end segment "
      << case_text(part.end_segment_case()) << '\n';
  out << "verified to length " << rep.depth << ": " << rep.points << " points, " << rep.checks << " checks, "
      << rep.exceptional << " exceptional, " << (rep.passed ? "passed" : "FAILED") << '\n';
  if (rep.violation) out << "  " << describe(*rep.violation, pres) << '\n';
  if (a.dump_depth > 0)
    for (const Word& g : enumerate_ball(pres, a.dump_depth))
      out << format_word(g, pres) << " ~ " << format_word(op.representative(g), pres) << ' ' << op.assign(g) << '\n';
  return rep.passed ? kExitOk : kExitCheckFailed;
}

int cmd_certify(std::size_t m, std::size_t m_bar, std::size_t depth, const std::string& kernel, bool as_json,
                std::ostream& out) {
  if (m_bar > m) throw std::invalid_argument("--mbar exceeds --m");
  const GroupRealization real = standard_generators(Presentation(m_bar, m - m_bar));
  const FreenessCertificate cert =
      certify_ball_freeness(real, depth, kernel == "serial" ? Kernel::Serial : Kernel::Parallel);
  if (as_json) {
    out << to_json(cert, real).dump(2) << '\n';
    return cert.certified ? kExitOk : kExitCheckFailed;
  }
  const Presentation& p = real.presentation;
  for (std::size_t i = 0; i < real.generators.size(); ++i) {
    out << format_word(Word::generator(p, i), p) << (real.zeta_composed[i] ? " (composed with -I)" : "") << ":";
    for (const auto& e : real.generators[i].entries()) out << ' ' << e;
    out << '\n';
  }
  out << "depth " << cert.depth << ": " << cert.words << " words, " << (cert.certified ? "free" : "NOT free") << '\n';
  if (cert.counterexample) out << "  relation: " << format_word(*cert.counterexample, p) << '\n';
  return cert.certified ? kExitOk : kExitCheckFailed;
}

struct SimulateArgs {
  std::string file;
  std::string variant;
  std::size_t steps = 0;
  std::size_t snapshot_every = 0;
  std::string out_dir;
  bool svg = false;
  std::size_t certify_depth = 8;
  std::size_t attempts = 256;
  std::size_t link_radius = 0;
  bool as_json = false;
};

int cmd_simulate(const SimulateArgs& a, std::ostream& out, std::ostream& err, std::istream& in) {
  if ((a.snapshot_every > 0 || a.svg) && a.out_dir.empty()) throw UsageError("--snapshot-every and --svg need --out");
  const Prepared prep = prepare(load_system(a.file, in, err), a.variant);
  SimConfig config;
  config.x0_attempts = a.attempts;
  config.link_radius = a.link_radius;
  StageState st = init(prep.system, simulation_realization(prep.system, prep.m_bar, a.certify_depth), prep.variant,
                       prep.variant == Variant::Section2 ? CongruenceDigraph::npos : prep.m_bar, config);
  std::filesystem::path dir(a.out_dir);
  if (!a.out_dir.empty()) std::filesystem::create_directories(dir);
  auto save = [&](const StageState& s) {
    char name[32];
    std::snprintf(name, sizeof name, "stage-%04zu", s.stage);
    write_text((dir / (std::string(name) + ".json")).string(), snapshot_json(s), out);
    if (a.svg) write_text((dir / (std::string(name) + ".svg")).string(), render_svg(s), out);
  };
  if (!a.as_json)
    out << "variant " << (prep.variant == Variant::Section2 ? "s2" : "s4") << ", m_bar " << prep.m_bar
        << ", link radius " << st.link_radius << ", certified depth " << st.realization.certified_depth << '\n';
  json stages = json::array();
  const RunSummary sum = run(st, a.steps, [&](const StageState& s, const InvariantReport& rep) {
    const StageRecord& rec = s.history.back();
    if (a.as_json) {
      json j = to_json(rec);
      j["invariants"] = to_json(rep);
      stages.push_back(std::move(j));
    } else {
      out << "stage " << rec.stage + 1 << ": entry " << rec.z.index << (rec.z.whole ? " (sphere)" : "") << ", piece "
          << rec.k_bar << ", x0 after " << rec.attempts << " tries, support " << rec.support << ", |S| " << rec.s_size
          << ", |S'| " << rec.s_prime_size << ", radius^2 " << rec.radius_sq.get_str() << ", +" << rec.patches_added
          << " patches, " << (rep.passed() ? "invariants hold" : "INVARIANTS FAIL") << '\n';
      if (!rep.passed()) out << indent(describe(rep));
    }
    if (a.snapshot_every > 0 && s.stage % a.snapshot_every == 0) save(s);
  });
  if (!a.out_dir.empty() && (a.snapshot_every == 0 || st.stage % a.snapshot_every != 0)) save(st);
  if (a.as_json) {
    out << json{{"stages", std::move(stages)}, {"summary", to_json(sum)}}.dump(2) << '\n';
  } else {
    out << "completed " << sum.completed << " of " << sum.requested << " stages, patches per piece:";
    for (auto n : sum.patches_per_piece) out << ' ' << n;
    out << ", digest " << sum.digest << '\n';
  }
  if (sum.error) err << "error: " << *sum.error << '\n';
  if (sum.budget_error) return kExitUsage;
  return sum.passed ? kExitOk : kExitCheckFailed;
}

int cmd_render(const std::string& file, const std::string& axis, const std::string& target, std::ostream& out,
               std::istream& in) {
  const StageState st = load_snapshot(read_text(file, in));
  write_text(target.empty() ? "-" : target, render_svg(st, parse_axis(axis)), out);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
  CLI::App app{"Congruence systems, their digraphs, group partitions and the stage construction on the sphere",
               "conglab"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string file;
  bool as_json = false;
  auto add_file = [&](CLI::App* sub, const std::string& what = "congruence system file, - for stdin") {
    sub->add_option("file", file, what)->required();
  };
  auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", as_json, "machine-readable output"); };
  const auto variants = CLI::IsMember({"s2", "s4"});

  auto* classify_cmd = app.add_subcommand("classify", "decide weak, consistent and nonredundant, with witnesses");
  add_file(classify_cmd);
  add_json(classify_cmd);

  auto* reduce_cmd = app.add_subcommand("reduce", "delete the pieces an inconsistency forces empty");
  add_file(reduce_cmd);
  add_json(reduce_cmd);

  auto* transform_cmd = app.add_subcommand("transform", "rewrite as weak congruences plus self-complement ones");
  add_file(transform_cmd);
  add_json(transform_cmd);

  int n = 0;
  auto* gen_cmd = app.add_subcommand("gen-cor22", "print the partition system over sequences s_3..s_N");
  gen_cmd->add_option("--n", n, "N")->required()->check(CLI::Range(3, 6));
  add_json(gen_cmd);

  std::string variant;
  std::vector<int> claims;
  std::string dot;
  auto* graph_cmd = app.add_subcommand("graph", "build the congruence digraph and check its claims");
  add_file(graph_cmd);
  graph_cmd->add_option("--variant", variant, "s2, or s4 to transform first")->default_str("s2")->check(variants);
  graph_cmd->add_option("--claims", claims, "claims to check, e.g. 1,3")->delimiter(',')->check(CLI::Range(1, 3));
  graph_cmd->add_option("--dot", dot, "write Graphviz output, - for stdout");
  add_json(graph_cmd);

  PartitionArgs pa;
  std::string kernel = "parallel";
  auto* part_cmd = app.add_subcommand("partition", "build and verify the group partition");
  add_file(part_cmd);
  part_cmd->add_option("--variant", variant, "s2 or s4, default s2 when the system is weak")->check(variants);
  part_cmd->add_option("--w", pa.anchor, "anchor word placed with the identity");
  part_cmd->add_option("--verify-depth", pa.depth, "verify every word up to this length")->capture_default_str();
  part_cmd->add_option("--dump-depth", pa.dump_depth, "print the piece of every word up to this length");
  part_cmd->add_option("--kernel", kernel, "serial or parallel")->check(CLI::IsMember({"serial", "parallel"}));
  add_json(part_cmd);

  auto* orbit_cmd = app.add_subcommand("orbit-partition", "partition an orbit whose point is fixed by a word");
  add_file(orbit_cmd);
  orbit_cmd->add_option("--variant", variant, "s2 or s4, default s2 when the system is weak")->check(variants);
  orbit_cmd->add_option("--w", pa.anchor, "fixed word")->required();
  orbit_cmd->add_option("--verify-depth", pa.depth, "verify every orbit point up to this length")->capture_default_str();
  orbit_cmd->add_option("--dump-depth", pa.dump_depth, "print representatives and pieces up to this length");
  orbit_cmd->add_option("--power-bound", pa.power_bound, "largest power of w tried")->capture_default_str();
  add_json(orbit_cmd);

  std::size_t m = 0, m_bar = 0, depth = 0;
  auto* cert_cmd = app.add_subcommand("certify-free", "certify the committed rotations free up to a word length");
  cert_cmd->add_option("--m", m, "generators")->required()->check(CLI::Range(1, 8));
  cert_cmd->add_option("--mbar", m_bar, "infinite-order generators")->required();
  cert_cmd->add_option("--depth", depth, "word length")->required();
  cert_cmd->add_option("--kernel", kernel, "serial or parallel")->check(CLI::IsMember({"serial", "parallel"}));
  add_json(cert_cmd);

  SimulateArgs sa;
  auto* sim_cmd = app.add_subcommand("simulate", "run the stage construction on the sphere");
  add_file(sim_cmd);
  sim_cmd->add_option("--steps", sa.steps, "stages to run")->required();
  sim_cmd->add_option("--variant", variant, "s2 or s4, default s2 when the system is weak")->check(variants);
  sim_cmd->add_option("--snapshot-every", sa.snapshot_every, "write a snapshot every K stages");
  sim_cmd->add_option("--out", sa.out_dir, "snapshot directory");
  sim_cmd->add_flag("--svg", sa.svg, "write an SVG next to each snapshot");
  sim_cmd->add_option("--certify-depth", sa.certify_depth, "freeness certificate depth")->capture_default_str();
  sim_cmd->add_option("--attempts", sa.attempts, "x0 candidates per stage")->capture_default_str();
  sim_cmd->add_option("--link-radius", sa.link_radius, "support window, 0 for the default");
  add_json(sim_cmd);

  std::string axis = "z", target;
  auto* render_cmd = app.add_subcommand("render", "draw a snapshot as SVG");
  add_file(render_cmd, "snapshot JSON, - for stdin");
  render_cmd->add_option("--axis", axis, "view axis")->check(CLI::IsMember({"x", "y", "z"}))->capture_default_str();
  render_cmd->add_option("--out", target, "output file, stdout by default");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*classify_cmd) return cmd_classify(file, as_json, out, err, in);
    if (*reduce_cmd) return cmd_reduce(file, as_json, out, err, in);
    if (*transform_cmd) return cmd_transform(file, as_json, out, err, in);
    if (*gen_cmd) return cmd_gen(n, as_json, out);
    if (*graph_cmd) return cmd_graph(file, variant.empty() ? "s2" : variant, claims, dot, as_json, out, err, in);
    if (*part_cmd || *orbit_cmd) {
      pa.file = file;
      pa.variant = variant;
      pa.kernel = kernel;
      pa.as_json = as_json;
      return *part_cmd ? cmd_partition(pa, out, err, in) : cmd_orbit_partition(pa, out, err, in);
    }
    if (*cert_cmd) return cmd_certify(m, m_bar, depth, kernel, as_json, out);
    if (*sim_cmd) {
      sa.file = file;
      sa.variant = variant;
      sa.as_json = as_json;
      return cmd_simulate(sa, out, err, in);
    }
    if (*render_cmd) return cmd_render(file, axis, target, out, in);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    err << e.what() << '\n';
    return kExitUsage;
  } catch (const InvariantViolation& e) {
    err << "invariant violated: " << e.what() << '\n';
    return kExitCheckFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace conglab::cli
