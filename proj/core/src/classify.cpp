#include "k3scroll/classify.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "k3scroll/moduli.hpp"

namespace k3s {

using json = nlohmann::ordered_json;

ADEGraph contracted_graph(const K3Config& cfg) {
  ADEGraph g;
  g.vertices = cfg.contracted_roots();
  for (size_t i = 0; i < g.vertices.size(); ++i)
    for (size_t j = i + 1; j < g.vertices.size(); ++j) {
      const i64 m = intersect(g.vertices[i], g.vertices[j]);
      if (m < 0 || m > 1) throw SingularityNotADE("multiple edge in the dual graph");
      if (m == 1) g.edges.push_back({static_cast<int>(i), static_cast<int>(j)});
    }
  return g;
}

namespace {

std::string component_type(const std::vector<int>& comp,
                           const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(comp.size());
  int edge_count = 0;
  std::vector<int> degree;
  for (int v : comp) {
    int d = 0;
    for (int w : adj[v])
      if (std::find(comp.begin(), comp.end(), w) != comp.end()) ++d;
    degree.push_back(d);
    edge_count += d;
  }
  edge_count /= 2;
  if (edge_count != n - 1) throw SingularityNotADE("component contains a cycle");
  const int branch = static_cast<int>(std::count_if(degree.begin(), degree.end(),
                                                    [](int d) { return d >= 3; }));
  const int maxdeg = degree.empty() ? 0 : *std::max_element(degree.begin(), degree.end());
  if (maxdeg <= 2) return "A" + std::to_string(n);
  if (branch > 1 || maxdeg > 3) throw SingularityNotADE("not a Dynkin tree");
  // one trivalent node: arm lengths decide D vs E
  int center = -1;
  for (size_t k = 0; k < comp.size(); ++k)
    if (degree[k] == 3) center = comp[k];
  std::vector<int> arms;
  for (int start : adj[center]) {
    if (std::find(comp.begin(), comp.end(), start) == comp.end()) continue;
    int len = 1, prev = center, cur = start;
    for (;;) {
      int next = -1;
      for (int w : adj[cur])
        if (w != prev && std::find(comp.begin(), comp.end(), w) != comp.end()) next = w;
      if (next < 0) break;
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms.size() != 3) throw SingularityNotADE("bad branch count");
  if (arms[0] == 1 && arms[1] == 1) return "D" + std::to_string(n);
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4)
    return "E" + std::to_string(n);
  throw SingularityNotADE("arm lengths outside the ADE range");
}

}  // namespace

std::string classify_ade(const ADEGraph& g) {
  const int n = static_cast<int>(g.vertices.size());
  if (n == 0) return "sm.";
  std::vector<std::vector<int>> adj(n);
  for (auto [a, b] : g.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<int> seen(n, 0);
  std::map<std::string, int> counts;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<int> comp, stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int w : adj[v])
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    counts[component_type(comp, adj)]++;
  }
  // canonical print: An before Dn before En, each by rank
  std::vector<std::string> keys;
  for (auto& [k, v] : counts) keys.push_back(k);
  std::sort(keys.begin(), keys.end(), [](const std::string& a, const std::string& b) {
    if (a[0] != b[0]) return a[0] < b[0];
    return std::stoi(a.substr(1)) < std::stoi(b.substr(1));
  });
  std::string out;
  for (const auto& k : keys) {
    if (!out.empty()) out += "+";
    if (counts[k] > 1) out += std::to_string(counts[k]);
    out += k;
  }
  return out;
}

std::string singularity_type(const K3Config& cfg) {
  return classify_ade(contracted_graph(cfg));
}

GenusTable load_genus_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FixtureGap("cannot open " + path);
  json j;
  in >> j;
  GenusTable t;
  t.g = j.at("genus").get<i64>();
  t.banner = j.value("banner", "");
  for (const auto& row : j.at("rows")) {
    CaseSpec cs;
    cs.c = row.at("c").get<i64>();
    cs.Dsq = row.at("Dsq").get<i64>();
    cs.scroll = row.at("scroll").get<std::string>();
    cs.moduli = row.at("moduli").get<i64>();
    cs.tag = row.at("tag").get<std::string>();
    cs.sing = row.at("sing").get<std::string>();
    cs.b_data = row.value("b_data", "");
    cs.b1 = row.value("b1", "");
    cs.note = row.value("note", "");
    if (row.contains("asserted"))
      cs.asserted = row.at("asserted").get<std::vector<std::string>>();
    cs.fixture = parse_lattice_file(row.at("fixture").dump());
    if (cs.fixture.has("D")) cs.declared_D = cs.fixture.cls("D");
    t.rows.push_back(std::move(cs));
  }
  return t;
}

CaseRecord run_case(const CaseSpec& row, i64 g) {
  K3Config cfg = K3Config::create(row.fixture);
  if (cfg.genus() != g) throw FixtureGap("fixture genus mismatch");

  CliffordData cd = clifford_index(cfg, row.declared_D);
  cd = tag_case(cfg, cd);

  CaseRecord rec;
  rec.g = g;
  rec.c = cd.c;
  rec.Dsq = cd.Dsq;
  rec.tag = tag_str(cd.tag, cd.c, cd.Dsq);
  rec.perfect = cd.perfect;
  rec.scroll_T = scroll_of(cfg, cd);
  rec.scroll_T0 = t0_type(rec.scroll_T);
  rec.sing = singularity_type(cfg);
  rec.b_data = row.b_data;
  rec.num_moduli = 20 - cfg.lattice()->rank();
  rec.provenance.push_back({"scroll", Provenance::Computed});
  rec.provenance.push_back({"tag", Provenance::Computed});
  rec.provenance.push_back({"moduli", Provenance::Computed});
  rec.provenance.push_back({"sing", Provenance::Computed});
  if (!row.b_data.empty()) rec.provenance.push_back({"b_data", Provenance::PaperAsserted});

  // cross-check the fixture-rank count against the family-dimension formulas
  if (cd.c == 1 && cd.Dsq == 0) {
    const auto m = moduli_c1(rec.scroll_T, g);
    if (m.impossible) throw NumericsMismatch("impossible scroll type in the pipeline");
    if (m.value != rec.num_moduli)
      rec.note += "[moduli formula " + std::to_string(m.value) + " vs rank count]";
  } else if (cd.c == 2 && cd.Dsq == 0 && !row.b1.empty()) {
    const i64 b1 = std::stoll(row.b1);
    const i64 m = moduli_c2(rec.scroll_T, b1, g);
    if (m != rec.num_moduli)
      rec.note += "[moduli formula " + std::to_string(m) + " vs rank count]";
  }
  return rec;
}

namespace {

void diff_field(DiffReport& rep, i64 g, const CaseSpec& row, const std::string& field,
                const std::string& expected, const std::string& actual) {
  const bool asserted =
      std::find(row.asserted.begin(), row.asserted.end(), field) != row.asserted.end();
  std::ostringstream os;
  os << "g=" << g << " " << row.scroll << " [" << row.tag << "] " << field << ": ";
  if (asserted) {
    ++rep.asserted_fields;
    os << "recorded \"" << expected << "\" (source-asserted; computed \"" << actual << "\")";
    rep.lines.push_back(os.str());
    return;
  }
  if (expected == actual) return;
  rep.clean = false;
  ++rep.mismatches;
  os << "expected \"" << expected << "\" got \"" << actual << "\"";
  rep.lines.push_back(os.str());
}

}  // namespace

std::string default_data_dir() {
  const char* env = std::getenv("K3S_DATA");
  if (env && *env) return env;
  return K3S_DATA_DIR;
}

DiffReport regenerate_tables(const std::string& data_dir, i64 g_min, i64 g_max) {
  DiffReport rep;
  for (i64 g = g_min; g <= g_max; ++g) {
    const std::string path = data_dir + "/models_g" + std::to_string(g) + ".json";
    GenusTable table = load_genus_table(path);
    if (!table.banner.empty())
      rep.lines.push_back("g=" + std::to_string(g) + " general model: " + table.banner);
    for (const auto& row : table.rows) {
      CaseRecord rec;
      try {
        rec = run_case(row, g);
      } catch (const Error& e) {
        rep.clean = false;
        ++rep.mismatches;
        rep.lines.push_back("g=" + std::to_string(g) + " " + row.scroll +
                            " pipeline error: " + e.what());
        continue;
      }
      diff_field(rep, g, row, "c", std::to_string(row.c), std::to_string(rec.c));
      diff_field(rep, g, row, "Dsq", std::to_string(row.Dsq), std::to_string(rec.Dsq));
      diff_field(rep, g, row, "scroll", row.scroll, rec.scroll_T.str());
      diff_field(rep, g, row, "moduli", std::to_string(row.moduli),
                 std::to_string(rec.num_moduli));
      diff_field(rep, g, row, "tag", row.tag, rec.tag);
      diff_field(rep, g, row, "sing", row.sing, rec.sing);
      if (!rec.note.empty()) {
        rep.clean = false;
        ++rep.mismatches;
        rep.lines.push_back("g=" + std::to_string(g) + " " + row.scroll + " " + rec.note);
      }
    }
  }

  // scroll-family tables: plane-cubic models ...
  {
    std::ifstream in(data_dir + "/c1_table.json");
    if (in) {
      json j;
      in >> j;
      for (const auto& row : j.at("rows")) {
        const i64 g = row.at("g").get<i64>();
        const ScrollType st = ScrollType::parse(row.at("scroll").get<std::string>());
        const i64 expect = row.at("moduli").get<i64>();
        const auto m = moduli_c1(st, g);
        if (m.impossible || m.value != expect) {
          rep.clean = false;
          ++rep.mismatches;
          rep.lines.push_back("cubic table g=" + std::to_string(g) + " " + st.str() +
                              ": expected " + std::to_string(expect) + " got " +
                              std::to_string(m.value));
        }
      }
      // shift law: singular (a,b,c) in P^g pairs with smooth (a+1,b+1,c+1)
      // in P^{g+3}
      std::vector<std::pair<i64, ScrollType>> smooth;
      for (const auto& row : j.at("rows"))
        smooth.push_back({row.at("g").get<i64>(),
                          ScrollType::parse(row.at("scroll").get<std::string>())});
      for (const auto& row : j.at("singular")) {
        const i64 g = row.at("g").get<i64>();
        for (const auto& s : row.at("types")) {
          const ScrollType st = ScrollType::parse(s.get<std::string>());
          const ScrollType lift = t0_type(st);
          const bool found =
              std::find(smooth.begin(), smooth.end(), std::make_pair(g + 3, lift)) !=
              smooth.end();
          if (!found) {
            rep.clean = false;
            ++rep.mismatches;
            rep.lines.push_back("cubic singular type " + st.str() + " at g=" +
                                std::to_string(g) + " has no shifted partner");
          }
          // a cone over the whole hyperplane section never arises
          if (st.e[1] == 0) {
            rep.clean = false;
            ++rep.mismatches;
            rep.lines.push_back("forbidden cone type " + st.str());
          }
        }
      }
    }
  }
  // ... and quadric-pair models
  {
    std::ifstream in(data_dir + "/c2_table.json");
    if (in) {
      json j;
      in >> j;
      for (const auto& row : j.at("rows")) {
        const i64 g = row.at("g").get<i64>();
        const ScrollType st = ScrollType::parse(row.at("scroll").get<std::string>());
        const i64 b1 = row.at("b1").get<i64>();
        const i64 expect = row.at("moduli").get<i64>();
        const i64 got = moduli_c2(st, b1, g);
        if (got != expect) {
          rep.clean = false;
          ++rep.mismatches;
          rep.lines.push_back("quadric-pair table g=" + std::to_string(g) + " " + st.str() +
                              " b1=" + std::to_string(b1) + ": expected " +
                              std::to_string(expect) + " got " + std::to_string(got));
        }
      }
    }
  }
  return rep;
}

}  // namespace k3s
