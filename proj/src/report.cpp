#include "burnside/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <sstream>

namespace burnside {

using nlohmann::json;

namespace {

json subgroup_json(const SubgroupLattice& lat, int id) {
  const Subgroup& s = lat.at(id);
  json gens = json::array();
  for (int e : s.gens) gens.push_back(cycle_string(lat.group().element(e)));
  return json{{"class", lat.class_label(lat.class_of(id))},
              {"order", s.order},
              {"gens", gens}};
}

json rat_array(const std::vector<Rat>& v) {
  json a = json::array();
  for (const Rat& r : v) a.push_back(rat_to_string(r));
  return a;
}

json primes_json(const PrimeSet& raw, const PrimeSet& resolved) {
  json r = json::array();
  for (int p : resolved.primes()) r.push_back(p);
  return json{{"requested", raw.to_string()}, {"resolved", r}};
}

json head(const BurnsideRing& ring, const std::string& command) {
  const FiniteGroup& g = ring.lattice().group();
  return json{{"tool", "burnside"},
              {"version", "0.1.0"},
              {"command", command},
              {"group",
               {{"label", g.label()}, {"order", g.order()}, {"degree", g.degree()}}}};
}

PrimeSet resolve_primes(const BurnsideRing& ring, const PrimeSet& raw) {
  return raw.normalized(ring.lattice().group().order());
}

json marks_payload(const BurnsideRing& ring) {
  const SubgroupLattice& lat = ring.lattice();
  const TableOfMarks& t = ring.table_full();
  json classes = json::array();
  for (int c = 0; c < lat.class_count(); ++c) {
    json e = subgroup_json(lat, lat.class_rep(c));
    e["size"] = lat.class_members(c).size();
    classes.push_back(e);
  }
  json rows = json::array();
  for (const auto& row : t.entries) {
    json r = json::array();
    for (long v : row) r.push_back(v);
    rows.push_back(r);
  }
  return json{{"classes", classes}, {"table", rows}};
}

json idempotents_payload(const BurnsideRing& ring, const PrimeSet& pn, bool& ok) {
  const SubgroupLattice& lat = ring.lattice();
  const int full = lat.full_group_id();
  std::vector<int> ls = lat.p_perfect_class_ids(pn);
  std::vector<BurnsideElement> es;
  for (int l : ls) es.push_back(ring.dress_idempotent(full, lat.class_rep(l), pn));

  BurnsideElement sum = ring.zero(full);
  for (const auto& e : es) sum = sum + e;
  const bool sum_is_one = (sum == ring.one(full));
  bool orthogonal = true;
  for (size_t i = 0; i < es.size(); ++i)
    for (size_t j = i + 1; j < es.size(); ++j)
      if (!(es[i] * es[j]).is_zero()) orthogonal = false;

  json items = json::array();
  for (size_t i = 0; i < es.size(); ++i) {
    items.push_back(json{{"L", lat.class_label(ls[i])},
                         {"marks", rat_array(es[i].marks())},
                         {"orbit", rat_array(es[i].orbit_coeffs())}});
  }
  ok = sum_is_one && orthogonal;
  return json{{"idempotents", items},
              {"sum_is_one", sum_is_one},
              {"orthogonal", orthogonal}};
}

json norm_payload(const BurnsideRing& ring, NormPair pair, const PrimeSet& pn,
                  bool& ok) {
  const SubgroupLattice& lat = ring.lattice();
  const int full = lat.full_group_id();
  json rows = json::array();
  bool consistent = true;
  for (int l : lat.p_perfect_class_ids(pn)) {
    const BurnsideElement e = ring.dress_idempotent(full, lat.class_rep(l), pn);
    const BurnsideElement v = ring.norm(ring.restrict(e, pair.sub), pair.sup);
    const bool star = condition_star(lat, l, pair);
    const bool diamond = condition_diamond(ring, l, pair, pn);
    const bool division = norm_descends(ring, l, pair, pn);
    if (star != diamond || diamond != division) consistent = false;
    rows.push_back(json{{"L", lat.class_label(l)},
                        {"star", star},
                        {"diamond", diamond},
                        {"division", division},
                        {"norm_marks", rat_array(v.marks())}});
  }
  ok = consistent;
  return json{{"from", subgroup_json(lat, pair.sub)},
              {"to", subgroup_json(lat, pair.sup)},
              {"rows", rows},
              {"consistent", consistent}};
}

json theorem_a_payload(const BurnsideRing& ring, const PrimeSet& pn, bool& ok) {
  const SubgroupLattice& lat = ring.lattice();
  const TheoremAReport rep = verify_theorem_a(ring, pn);
  json ls = json::array();
  for (int l : rep.l_classes) ls.push_back(lat.class_label(l));
  json rows = json::array();
  for (const TheoremARow& r : rep.rows) {
    rows.push_back(json{{"L", lat.class_label(r.l_class)},
                        {"K", lat.class_label(lat.class_of(r.pair.sub))},
                        {"H", lat.class_label(lat.class_of(r.pair.sup))},
                        {"star", r.star},
                        {"diamond", r.diamond},
                        {"division", r.division}});
  }
  ok = rep.verdict;
  return json{{"l_classes", ls}, {"rows", rows}, {"verdict", rep.verdict}};
}

json indexing_payload(const BurnsideRing& ring, const PrimeSet& pn, bool& ok) {
  const SubgroupLattice& lat = ring.lattice();
  const std::vector<NormPair> pairs = pair_classes(lat);
  json systems = json::array();
  bool all_maximal = true;
  for (int l : lat.p_perfect_class_ids(pn)) {
    const IndexingSystem sys = indexing_system(lat, l, pn);
    const bool maximal = indexing_system_is_maximal(ring, sys, l, pn);
    if (!maximal) all_maximal = false;
    json prs = json::array();
    for (const NormPair& pr : pairs) {
      prs.push_back(json{{"K", lat.class_label(lat.class_of(pr.sub))},
                         {"H", lat.class_label(lat.class_of(pr.sup))},
                         {"admissible", sys.admissible(pr.sub, pr.sup)}});
    }
    systems.push_back(json{{"L", lat.class_label(l)},
                           {"pairs", prs},
                           {"closure_verified", true},
                           {"maximal", maximal}});
  }
  const IndexingSystem inter = intersect_all_dress(ring, pn);
  json iprs = json::array();
  for (const NormPair& pr : pairs) {
    iprs.push_back(json{{"K", lat.class_label(lat.class_of(pr.sub))},
                        {"H", lat.class_label(lat.class_of(pr.sup))},
                        {"admissible", inter.admissible(pr.sub, pr.sup)}});
  }
  ok = all_maximal;
  return json{{"systems", systems},
              {"intersection",
               json{{"pairs", iprs}, {"closure_verified", true}, {"matches_direct", true}}}};
}

json splitting_payload(const BurnsideRing& ring, const PrimeSet& pn, bool& ok) {
  const SubgroupLattice& lat = ring.lattice();
  const SplittingReport rep = splitting_report(ring, pn);
  json hosts = json::array();
  for (int c = 0; c < lat.class_count(); ++c) hosts.push_back(lat.class_label(c));
  json factors = json::array();
  for (const SplittingFactor& f : rep.factors) {
    json ranks = json::array();
    for (int r : f.ranks) ranks.push_back(r);
    factors.push_back(json{{"L", lat.class_label(f.l_class)},
                           {"marks", rat_array(f.marks)},
                           {"orbit", rat_array(f.orbit)},
                           {"ranks", ranks}});
  }
  json totals = json::array();
  for (int r : rep.total_ranks) totals.push_back(r);
  json shared = json::array();
  for (const NormPair& pr : rep.shared_pairs) {
    shared.push_back(json{{"K", lat.class_label(lat.class_of(pr.sub))},
                          {"H", lat.class_label(lat.class_of(pr.sup))}});
  }
  json decomp = json::array();
  for (const DecompositionRow& d : rep.decomposition) {
    decomp.push_back(json{{"L", lat.class_label(d.l_class)},
                          {"host", lat.class_label(d.host_class)},
                          {"summands", d.summands},
                          {"h_classes", d.h_classes_in_g_class}});
  }
  ok = rep.all_ok();
  return json{{"hosts", hosts},
              {"total_ranks", totals},
              {"factors", factors},
              {"sum_is_one", rep.sum_is_one},
              {"orthogonal", rep.orthogonal},
              {"ranks_additive", rep.ranks_additive},
              {"shared_norms_ok", rep.shared_norms_ok},
              {"shared_pairs", shared},
              {"decomposition", decomp}};
}

}  // namespace

ReportDocument build_marks_report(const BurnsideRing& ring) {
  ReportDocument d;
  d.json = head(ring, "marks");
  d.json["payload"] = marks_payload(ring);
  d.json["ok"] = true;
  return d;
}

ReportDocument build_idempotents_report(const BurnsideRing& ring, const PrimeSet& raw) {
  const PrimeSet pn = resolve_primes(ring, raw);
  ReportDocument d;
  d.json = head(ring, "idempotents");
  d.json["primes"] = primes_json(raw, pn);
  bool ok = false;
  d.json["payload"] = idempotents_payload(ring, pn, ok);
  d.json["ok"] = ok;
  return d;
}

ReportDocument build_norm_report(const BurnsideRing& ring, NormPair resolved,
                                 const PrimeSet& raw) {
  const PrimeSet pn = resolve_primes(ring, raw);
  ReportDocument d;
  d.json = head(ring, "norm");
  d.json["primes"] = primes_json(raw, pn);
  bool ok = false;
  d.json["payload"] = norm_payload(ring, resolved, pn, ok);
  d.json["ok"] = ok;
  return d;
}

ReportDocument build_theorem_a_report(const BurnsideRing& ring, const PrimeSet& raw) {
  const PrimeSet pn = resolve_primes(ring, raw);
  ReportDocument d;
  d.json = head(ring, "theorem-a");
  d.json["primes"] = primes_json(raw, pn);
  bool ok = false;
  d.json["payload"] = theorem_a_payload(ring, pn, ok);
  d.json["ok"] = ok;
  return d;
}

ReportDocument build_indexing_report(const BurnsideRing& ring, const PrimeSet& raw) {
  const PrimeSet pn = resolve_primes(ring, raw);
  ReportDocument d;
  d.json = head(ring, "indexing-systems");
  d.json["primes"] = primes_json(raw, pn);
  bool ok = false;
  d.json["payload"] = indexing_payload(ring, pn, ok);
  d.json["ok"] = ok;
  return d;
}

ReportDocument build_splitting_report(const BurnsideRing& ring, const PrimeSet& raw) {
  const PrimeSet pn = resolve_primes(ring, raw);
  ReportDocument d;
  d.json = head(ring, "splitting");
  d.json["primes"] = primes_json(raw, pn);
  bool ok = false;
  d.json["payload"] = splitting_payload(ring, pn, ok);
  d.json["ok"] = ok;
  return d;
}

ReportDocument build_full_report(const BurnsideRing& ring, const PrimeSet& raw) {
  const PrimeSet pn = resolve_primes(ring, raw);
  ReportDocument d;
  d.json = head(ring, "report");
  d.json["primes"] = primes_json(raw, pn);
  bool ok_i = false, ok_t = false, ok_x = false, ok_s = false;
  json payload;
  payload["marks"] = marks_payload(ring);
  payload["idempotents"] = idempotents_payload(ring, pn, ok_i);
  payload["theorem_a"] = theorem_a_payload(ring, pn, ok_t);
  payload["indexing_systems"] = indexing_payload(ring, pn, ok_x);
  payload["splitting"] = splitting_payload(ring, pn, ok_s);
  d.json["payload"] = payload;
  d.json["ok"] = ok_i && ok_t && ok_x && ok_s;
  return d;
}

// ---------------------------------------------------------------------------
// Text rendering (driven by the JSON payload, so both formats agree).

namespace {

const char* yesno(bool b) { return b ? "yes" : "no"; }
const char* yesno(const json& j) { return j.get<bool>() ? "yes" : "no"; }

std::string gens_text(const json& sub) {
  if (sub["gens"].empty()) return "()";
  std::string out;
  for (const auto& g : sub["gens"]) {
    if (!out.empty()) out += " ";
    out += g.get<std::string>();
  }
  return out;
}

std::string sub_text(const json& sub) {
  return "[" + sub["class"].get<std::string>() + "] gens " + gens_text(sub);
}

void render_table(std::ostream& os, const json& rows) {
  size_t width = 1;
  for (const auto& row : rows)
    for (const auto& v : row) width = std::max(width, v.dump().size());
  for (const auto& row : rows) {
    os << " ";
    for (const auto& v : row) os << " " << std::setw(static_cast<int>(width)) << v.dump();
    os << "\n";
  }
}

void render_marks(std::ostream& os, const json& p) {
  os << "conjugacy classes of subgroups:\n";
  for (const auto& c : p["classes"]) {
    os << "  [" << c["class"].get<std::string>() << "] order " << c["order"]
       << ", class size " << c["size"] << ", gens " << gens_text(c) << "\n";
  }
  os << "table of marks (rows phi^Q, columns G/K):\n";
  render_table(os, p["table"]);
}

void render_rat_list(std::ostream& os, const json& a) {
  for (size_t i = 0; i < a.size(); ++i) os << (i ? " " : "") << a[i].get<std::string>();
}

void render_idempotents(std::ostream& os, const json& p) {
  os << "primitive idempotents (one per P-perfect class):\n";
  for (const auto& e : p["idempotents"]) {
    os << "  e[" << e["L"].get<std::string>() << "]  marks: ";
    render_rat_list(os, e["marks"]);
    os << "   orbit: ";
    render_rat_list(os, e["orbit"]);
    os << "\n";
  }
  os << "sum is one: " << yesno(p["sum_is_one"]) << "\n";
  os << "pairwise orthogonal: " << yesno(p["orthogonal"]) << "\n";
}

void render_norm(std::ostream& os, const json& p) {
  os << "pair: K = " << sub_text(p["from"]) << "  <=  H = " << sub_text(p["to"]) << "\n";
  os << "per idempotent:\n";
  for (const auto& r : p["rows"]) {
    os << "  L=" << r["L"].get<std::string>() << "  star " << yesno(r["star"])
       << "  diamond " << yesno(r["diamond"]) << "  division "
       << yesno(r["division"]) << "  norm marks: ";
    render_rat_list(os, r["norm_marks"]);
    os << "\n";
  }
  os << "conditions agree: " << yesno(p["consistent"]) << "\n";
}

void render_theorem_a(std::ostream& os, const json& p) {
  os << "P-perfect classes:";
  for (const auto& l : p["l_classes"]) os << " " << l.get<std::string>();
  os << "\nrows (L; K <= H; star/diamond/division):\n";
  for (const auto& r : p["rows"]) {
    os << "  L=" << r["L"].get<std::string>() << "  K=" << r["K"].get<std::string>()
       << " <= H=" << r["H"].get<std::string>() << "   " << yesno(r["star"]) << "/"
       << yesno(r["diamond"]) << "/" << yesno(r["division"]) << "\n";
  }
  os << "all three conditions agree: " << yesno(p["verdict"]) << "\n";
}

void render_pair_list(std::ostream& os, const json& pairs, bool admissible_only) {
  bool first = true;
  for (const auto& pr : pairs) {
    if (admissible_only && !pr["admissible"].get<bool>()) continue;
    if (!first) os << ", ";
    os << pr["K"].get<std::string>() << "<=" << pr["H"].get<std::string>();
    first = false;
  }
  if (first) os << "(none)";
}

void render_indexing(std::ostream& os, const json& p) {
  for (const auto& s : p["systems"]) {
    os << "I[" << s["L"].get<std::string>() << "]: admissible pair classes: ";
    render_pair_list(os, s["pairs"], true);
    os << "\n  closure verified: " << yesno(s["closure_verified"])
       << "; maximal: " << yesno(s["maximal"]) << "\n";
  }
  const auto& inter = p["intersection"];
  os << "intersection: admissible pair classes: ";
  render_pair_list(os, inter["pairs"], true);
  os << "\n  closure verified: " << yesno(inter["closure_verified"])
     << "; matches direct description: " << yesno(inter["matches_direct"]) << "\n";
}

void render_splitting(std::ostream& os, const json& p) {
  os << "hosts:";
  for (const auto& h : p["hosts"]) os << " " << h.get<std::string>();
  os << "\ntotal ranks:";
  for (const auto& r : p["total_ranks"]) os << " " << r.dump();
  os << "\nfactors:\n";
  for (const auto& f : p["factors"]) {
    os << "  e[" << f["L"].get<std::string>() << "]  marks: ";
    render_rat_list(os, f["marks"]);
    os << "   orbit: ";
    render_rat_list(os, f["orbit"]);
    os << "\n    localized ranks:";
    for (const auto& r : f["ranks"]) os << " " << r.dump();
    os << "\n";
  }
  os << "sum is one: " << yesno(p["sum_is_one"]) << "\n";
  os << "pairwise orthogonal: " << yesno(p["orthogonal"]) << "\n";
  os << "ranks additive: " << yesno(p["ranks_additive"]) << "\n";
  os << "shared norms verified: " << yesno(p["shared_norms_ok"]) << "\n";
  os << "shared admissible pair classes: ";
  bool first = true;
  for (const auto& pr : p["shared_pairs"]) {
    if (!first) os << ", ";
    os << pr["K"].get<std::string>() << "<=" << pr["H"].get<std::string>();
    first = false;
  }
  if (first) os << "(none)";
  os << "\nrestricted idempotent decomposition (summands vs H-classes in the class of L):\n";
  for (const auto& d : p["decomposition"]) {
    os << "  L=" << d["L"].get<std::string>() << " host=" << d["host"].get<std::string>()
       << ": " << d["summands"].dump() << " vs " << d["h_classes"].dump() << "\n";
  }
}

}  // namespace

std::string ReportDocument::to_text() const {
  std::ostringstream os;
  const nlohmann::json& j = json;
  os << j["tool"].get<std::string>() << " " << j["version"].get<std::string>()
     << " -- " << j["command"].get<std::string>() << "\n";
  const auto& g = j["group"];
  os << "group " << g["label"].get<std::string>() << " (order " << g["order"].dump()
     << ", degree " << g["degree"].dump() << ")\n";
  if (j.contains("primes")) {
    os << "primes: " << j["primes"]["requested"].get<std::string>() << " -> {";
    const auto& res = j["primes"]["resolved"];
    for (size_t i = 0; i < res.size(); ++i) os << (i ? "," : "") << res[i].dump();
    os << "}\n";
  }
  os << "\n";
  const std::string cmd = j["command"].get<std::string>();
  const auto& p = j["payload"];
  if (cmd == "marks") {
    render_marks(os, p);
  } else if (cmd == "idempotents") {
    render_idempotents(os, p);
  } else if (cmd == "norm") {
    render_norm(os, p);
  } else if (cmd == "theorem-a") {
    render_theorem_a(os, p);
  } else if (cmd == "indexing-systems") {
    render_indexing(os, p);
  } else if (cmd == "splitting") {
    render_splitting(os, p);
  } else if (cmd == "report") {
    os << "== marks ==\n";
    render_marks(os, p["marks"]);
    os << "\n== idempotents ==\n";
    render_idempotents(os, p["idempotents"]);
    os << "\n== norm descent ==\n";
    render_theorem_a(os, p["theorem_a"]);
    os << "\n== indexing systems ==\n";
    render_indexing(os, p["indexing_systems"]);
    os << "\n== splitting ==\n";
    render_splitting(os, p["splitting"]);
  }
  os << "\nRESULT: " << (j["ok"].get<bool>() ? "ok" : "verification failed") << "\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// CLI

Config parse_config(int argc, const char* const* argv) {
  Config cfg;
  CLI::App app{"exact idempotent splitting of P-local Burnside rings and the norms each summand keeps"};
  app.require_subcommand(1);
  static const struct {
    const char* name;
    const char* desc;
  } kCommands[] = {
      {"marks", "print the table of marks"},
      {"idempotents", "print the primitive idempotents of the P-local Burnside ring"},
      {"norm", "analyze one norm map N_K^H on every idempotent summand"},
      {"theorem-a", "check that the star, diamond and division conditions agree"},
      {"indexing-systems", "print the admissible-pair systems I_L and their intersection"},
      {"splitting", "print the full splitting with ranks and shared norms"},
      {"report", "print everything"},
  };
  for (const auto& c : kCommands) {
    CLI::App* s = app.add_subcommand(c.name, c.desc);
    s->add_option("--group", cfg.group_spec,
                  "group spec: S<n>|A<n>|C<n>|D<2n>|Q8, products with 'x', or "
                  "cycle generators like \"(1,2)(3,4); (1,3,5)\"")
        ->required();
    s->add_option("--primes", cfg.primes_text,
                  "primes kept local: 'all', 'none' or a comma list like '2,3'");
    s->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    s->add_option("--out", cfg.out_path, "write output to a file instead of stdout");
    s->add_option("--max-order", cfg.max_order, "refuse groups larger than this");
    if (std::string(c.name) == "norm") {
      s->add_option("--from", cfg.from_spec, "generators of K in cycle notation")
          ->required();
      s->add_option("--to", cfg.to_spec, "generators of H in cycle notation")
          ->required();
    }
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    cfg.help_text = app.help();
    return cfg;
  } catch (const CLI::CallForAllHelp&) {
    cfg.help_text = app.help("", CLI::AppFormatMode::All);
    return cfg;
  } catch (const CLI::ParseError& e) {
    throw ConfigError(e.what());
  }
  cfg.command = app.get_subcommands().front()->get_name();
  return cfg;
}

NormPair resolve_pair(const SubgroupLattice& lat, const std::string& from_text,
                      const std::string& to_text) {
  const FiniteGroup& g = lat.group();
  auto resolve = [&](const std::string& text) {
    std::vector<int> idx;
    for (const Perm& p : parse_generators(text, g.degree())) {
      const int i = g.index_of(p);
      if (i < 0)
        throw ConfigError("generator " + cycle_string(p) +
                          " is not an element of " + g.label());
      idx.push_back(i);
    }
    return lat.closure_id(idx);
  };
  const int k = resolve(from_text);
  const int h = resolve(to_text);
  if (!lat.contains(h, k))
    throw ConfigError("the 'from' subgroup must lie inside the 'to' subgroup");
  return canonical_pair(lat, {k, h});
}

int run(const Config& cfg, std::ostream& out, std::ostream& err) {
  if (!cfg.help_text.empty()) {
    out << cfg.help_text;
    return 0;
  }
  try {
    const FiniteGroup g = build_group(cfg.group_spec, cfg.max_order);
    const SubgroupLattice lat(g);
    const BurnsideRing ring(lat);
    const PrimeSet raw = PrimeSet::parse(cfg.primes_text);

    ReportDocument doc;
    if (cfg.command == "marks") {
      doc = build_marks_report(ring);
    } else if (cfg.command == "idempotents") {
      doc = build_idempotents_report(ring, raw);
    } else if (cfg.command == "norm") {
      doc = build_norm_report(ring, resolve_pair(lat, cfg.from_spec, cfg.to_spec), raw);
    } else if (cfg.command == "theorem-a") {
      doc = build_theorem_a_report(ring, raw);
    } else if (cfg.command == "indexing-systems") {
      doc = build_indexing_report(ring, raw);
    } else if (cfg.command == "splitting") {
      doc = build_splitting_report(ring, raw);
    } else if (cfg.command == "report") {
      doc = build_full_report(ring, raw);
    } else {
      throw ConfigError("unknown command '" + cfg.command + "'");
    }

    const std::string rendered =
        cfg.format == "json" ? doc.to_json_string() : doc.to_text();
    if (!cfg.out_path.empty()) {
      std::ofstream f(cfg.out_path);
      if (!f) throw ConfigError("cannot write to " + cfg.out_path);
      f << rendered;
    } else {
      out << rendered;
    }
    return doc.ok() ? 0 : 2;
  } catch (const GroupCapError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const GroupSpecError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::logic_error& e) {
    err << "internal assertion failure: " << e.what() << "\n";
    return 4;
  }
}

}  // namespace burnside
