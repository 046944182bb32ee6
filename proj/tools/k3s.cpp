// Command line front end: every pipeline stage is scriptable, all output is
// exact integers, and `classify --diff` replays the stored tables.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

#include "k3scroll/classify.hpp"
#include "k3scroll/moduli.hpp"
#include "k3scroll/rolling.hpp"

using namespace k3s;
using ordered_json = nlohmann::ordered_json;

namespace {

LatticeFile load(const std::string& path) { return load_lattice_file(path); }

int run(int argc, char** argv) {
  CLI::App app{"scroll invariants of K3 projective models"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  i64 bound = 0;
  app.add_option("--bound", bound, "enumeration degree cap (default: L^2)");

  // lattice check <file>
  std::string lat_path;
  auto* sc_lat = app.add_subcommand("lattice", "lattice utilities");
  auto* sc_check = sc_lat->add_subcommand("check", "verify a lattice file");
  sc_check->add_option("file", lat_path)->required();

  // h0 <file> <class>
  std::string h0_path, h0_class;
  auto* sc_h0 = app.add_subcommand("h0", "h^0 of a named class or coordinate vector");
  sc_h0->add_option("file", h0_path)->required();
  sc_h0->add_option("class", h0_class)->required();

  // clifford <file>
  std::string cl_path;
  auto* sc_cl = app.add_subcommand("clifford", "Clifford index and divisor");
  sc_cl->add_option("file", cl_path)->required();

  // scroll-type <file>
  std::string st_path;
  auto* sc_st = app.add_subcommand("scroll-type", "scroll type of the model");
  sc_st->add_option("file", st_path)->required();

  // sections <type> <a> <b>   (b < 0 means the twist -|b|F, as in aH - bF)
  std::string sec_type;
  i64 sec_a = 0, sec_b = 0;
  std::string frame = "H";
  auto* sc_sec = app.add_subcommand("sections", "h^0(aH + bF) on a scroll");
  sc_sec->add_option("type", sec_type)->required();
  sc_sec->add_option("a", sec_a)->required();
  sc_sec->add_option("b", sec_b)->required();
  sc_sec->add_option("--frame", frame, "H or H0")->check(CLI::IsMember({"H", "H0"}));

  // betti <c> <Dsq>
  i64 bt_c = 0, bt_d = 0;
  auto* sc_bt = app.add_subcommand("betti", "fiber Betti table");
  sc_bt->add_option("c", bt_c)->required();
  sc_bt->add_option("Dsq", bt_d)->required();

  // bvectors <case-file>
  std::string bv_path;
  auto* sc_bv = app.add_subcommand("bvectors", "admissible quadric twist vectors");
  sc_bv->add_option("case", bv_path)->required();

  // moduli c1|c2|general
  auto* sc_mod = app.add_subcommand("moduli", "family dimension counts");
  std::string mod_kind, mod_type;
  i64 mod_g = 0, mod_b1 = 0;
  sc_mod->add_option("kind", mod_kind, "c1, c2 or general")->required();
  sc_mod->add_option("type", mod_type)->required();
  sc_mod->add_option("g", mod_g);
  sc_mod->add_option("b1", mod_b1);

  // classify --genus G..H [--diff]
  auto* sc_cf = app.add_subcommand("classify", "regenerate the classification tables");
  std::string genus_range = "5..10";
  bool do_diff = false;
  std::string data_dir = default_data_dir();
  sc_cf->add_option("--genus", genus_range, "range G..H");
  sc_cf->add_flag("--diff", do_diff, "diff against the stored tables");
  sc_cf->add_option("--data", data_dir, "fixture directory (env K3S_DATA)");

  CLI11_PARSE(app, argc, argv);

  if (*sc_check) {
    auto lf = load(lat_path);
    ordered_json out;
    out["rank"] = lf.lattice->rank();
    const Signature s = signature(*lf.lattice);
    out["signature"] = {s.positives, s.negatives, s.zeros};
    out["k3_picard"] = nikulin_exists(*lf.lattice);
    out["round_trip"] =
        write_lattice_file(parse_lattice_file(write_lattice_file(lf))) == write_lattice_file(lf);
    if (format == "json")
      std::cout << out.dump(2) << "\n";
    else
      std::cout << "rank " << lf.lattice->rank() << ", signature (" << s.positives << ","
                << s.negatives << "," << s.zeros << "), K3 Picard lattice: "
                << (out["k3_picard"].get<bool>() ? "yes" : "no") << "\n";
    return out["k3_picard"].get<bool>() ? 0 : 1;
  }

  if (*sc_h0) {
    auto lf = load(h0_path);
    K3Config cfg = K3Config::create(lf, bound);
    DivisorClass d = lf.has(h0_class)
                         ? lf.cls(h0_class)
                         : DivisorClass(lf.lattice, ScrollType::parse(h0_class).e);
    const auto v = h0(cfg, d);
    ordered_json out;
    out["class"] = d.coords;
    if (v.decided()) {
      out["h0"] = v.v();
      if (v.h1) out["h1"] = *v.h1;
    } else {
      out["h0"] = "undecided";
    }
    ordered_json tr = ordered_json::array();
    for (const auto& g : v.reduction_trace) tr.push_back(g.coords);
    out["reduction_trace"] = tr;
    if (format == "json")
      std::cout << out.dump(2) << "\n";
    else if (v.decided())
      std::cout << "h0 = " << v.v() << (v.h1 ? ", h1 = " + std::to_string(*v.h1) : "")
                << "\n";
    else
      std::cout << "h0 undecided (raise --bound)\n";
    return v.decided() ? 0 : 1;
  }

  if (*sc_cl || *sc_st) {
    auto lf = load(*sc_cl ? cl_path : st_path);
    K3Config cfg = K3Config::create(lf, bound);
    std::optional<DivisorClass> declared;
    if (lf.has("D")) declared = lf.cls("D");
    CliffordData cd = tag_case(cfg, clifford_index(cfg, declared));
    ordered_json out;
    out["g"] = cd.g;
    out["c"] = cd.c;
    out["tag"] = tag_str(cd.tag, cd.c, cd.Dsq);
    if (cd.D) {
      out["D"] = cd.D->coords;
      out["Dsq"] = cd.Dsq;
      out["perfect"] = cd.perfect;
    }
    if (*sc_st) {
      const ScrollType st = scroll_of(cfg, cd);
      out["scroll"] = st.str();
      out["scroll_T0"] = t0_type(st).str();
      out["singular_locus_dim"] = singular_locus_dim(cfg, cd) - 1;
      out["sing"] = singularity_type(cfg);
    }
    if (format == "json")
      std::cout << out.dump(2) << "\n";
    else if (*sc_cl)
      std::cout << "g = " << cd.g << ", c = " << cd.c << ", tag " << out["tag"].get<std::string>()
                << (cd.D ? ", D = " + cd.D->str() : "") << "\n";
    else
      std::cout << out["scroll"].get<std::string>() << "  (desingularization "
                << out["scroll_T0"].get<std::string>() << ", model sing "
                << out["sing"].get<std::string>() << ")\n";
    return 0;
  }

  if (*sc_sec) {
    ScrollType st = ScrollType::parse(sec_type);
    i64 b = sec_b;
    if (frame == "H0") b = sec_b - sec_a;  // aH0 + bF = aH + (a+b)F
    const i64 v = h0_scroll(st, sec_a, b);
    if (format == "json") {
      ordered_json out;
      out["type"] = st.str();
      out["a"] = sec_a;
      out["b"] = sec_b;
      out["h0"] = v;
      out["h1"] = h1_scroll(st, sec_a, b);
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << v << "\n";
    }
    return 0;
  }

  if (*sc_bt) {
    const BettiTable t = betti_fiber(bt_c, bt_d);
    ordered_json rows = ordered_json::array();
    for (const auto& [ij, v] : t.entries) {
      ordered_json r;
      r["i"] = ij.first;
      r["j"] = ij.second;
      r["beta"] = v;
      rows.push_back(r);
    }
    if (format == "json") {
      ordered_json out;
      out["c"] = bt_c;
      out["Dsq"] = bt_d;
      out["entries"] = rows;
      std::cout << out.dump(2) << "\n";
    } else {
      for (const auto& [ij, v] : t.entries)
        std::cout << "beta(" << ij.first << "," << ij.second << ") = " << v << "\n";
    }
    return 0;
  }

  if (*sc_bv) {
    std::ifstream in(bv_path);
    if (!in) throw ParseError("cannot open " + bv_path);
    ordered_json j;
    in >> j;
    BVectorCase cs;
    cs.T = ScrollType::parse(j.at("scroll").get<std::string>());
    cs.g = j.at("g").get<i64>();
    cs.c = j.at("c").get<i64>();
    cs.Dsq = j.at("Dsq").get<i64>();
    cs.npoints = j.at("npoints").get<i64>();
    if (j.contains("declared_max"))
      for (const auto& pr : j.at("declared_max"))
        cs.declared_max.push_back({pr.at(0).get<i64>(), pr.at(1).get<i64>()});
    const BettiTable bt = betti_fiber(cs.c, cs.Dsq);
    const BSumLedger led = bsum_solver(cs.g, cs.c, cs.Dsq, bt);
    const auto vecs = enumerate_bvectors(cs, led, bt);
    ordered_json out = ordered_json::array();
    for (const auto& v : vecs) out.push_back(v);
    if (format == "json")
      std::cout << out.dump(2) << "\n";
    else
      for (const auto& v : vecs) {
        for (size_t i = 0; i < v.size(); ++i) std::cout << (i ? "," : "(") << v[i];
        std::cout << ")\n";
      }
    return 0;
  }

  if (*sc_mod) {
    ScrollType st = ScrollType::parse(mod_type);
    ordered_json out;
    if (mod_kind == "c1") {
      const auto m = moduli_c1(st, mod_g);
      out["moduli"] = m.value;
      out["impossible"] = m.impossible;
      if (format == "json")
        std::cout << out.dump(2) << "\n";
      else
        std::cout << (m.impossible ? "impossible type, bound " : "") << m.value << "\n";
      return m.impossible ? 1 : 0;
    }
    if (mod_kind == "c2") {
      out["moduli"] = moduli_c2(st, mod_b1, mod_g);
    } else {
      const auto m = moduli_general(st);
      out["dim_in_scroll"] = m.dim_in_scroll;
      out["exact"] = m.exact;
      out["moduli"] = m.num_moduli;
    }
    if (format == "json")
      std::cout << out.dump(2) << "\n";
    else
      std::cout << out["moduli"].get<i64>() << "\n";
    return 0;
  }

  if (*sc_cf) {
    const auto pos = genus_range.find("..");
    const i64 gmin = std::stoll(genus_range.substr(0, pos));
    const i64 gmax = pos == std::string::npos ? gmin : std::stoll(genus_range.substr(pos + 2));
    const DiffReport rep = regenerate_tables(data_dir, gmin, gmax);
    if (format == "json") {
      ordered_json out;
      out["clean"] = rep.clean;
      out["mismatches"] = rep.mismatches;
      out["asserted_fields"] = rep.asserted_fields;
      out["lines"] = rep.lines;
      std::cout << out.dump(2) << "\n";
    } else {
      for (const auto& l : rep.lines) std::cout << l << "\n";
      std::cout << (rep.clean ? "TABLES MATCH" : "TABLES DIFFER") << " (" << rep.mismatches
                << " mismatches, " << rep.asserted_fields << " source-asserted fields)\n";
    }
    if (!do_diff) return 0;
    return rep.clean ? 0 : 2;
  }

  return 64;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 64;
  }
}
