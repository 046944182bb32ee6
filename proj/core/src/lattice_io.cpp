#include "k3scroll/lattice_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace k3s {

using json = nlohmann::ordered_json;

const DivisorClass& LatticeFile::cls(const std::string& name) const {
  auto it = classes.find(name);
  if (it == classes.end()) throw ParseError("missing class: " + name);
  return it->second;
}

LatticeFile parse_lattice_file(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const std::exception& e) {
    throw ParseError(std::string("bad lattice file: ") + e.what());
  }
  const int rank = j.at("rank").get<int>();
  IMat gram = j.at("gram").get<IMat>();
  if (static_cast<int>(gram.size()) != rank) throw ParseError("rank/gram mismatch");
  std::vector<std::string> names;
  if (j.contains("basis_names")) names = j.at("basis_names").get<std::vector<std::string>>();
  LatticeFile lf;
  lf.lattice = std::make_shared<Lattice>(std::move(gram), std::move(names));
  if (j.contains("classes")) {
    for (auto& [name, coords] : j.at("classes").items())
      lf.classes.emplace(name, DivisorClass(lf.lattice, coords.get<IVec>()));
  }
  // basis vectors are addressable by their names as well
  for (int i = 0; i < rank; ++i) {
    const std::string& nm = lf.lattice->basis_names()[i];
    if (lf.classes.count(nm)) continue;
    IVec e(rank, 0);
    e[i] = 1;
    lf.classes.emplace(nm, DivisorClass(lf.lattice, e));
  }
  return lf;
}

LatticeFile load_lattice_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_lattice_file(ss.str());
}

std::string write_lattice_file(const LatticeFile& lf) {
  json j;
  j["rank"] = lf.lattice->rank();
  j["gram"] = lf.lattice->gram();
  j["basis_names"] = lf.lattice->basis_names();
  json cls = json::object();
  for (const auto& [name, d] : lf.classes) cls[name] = d.coords;
  j["classes"] = cls;
  return j.dump(2) + "\n";
}

}  // namespace k3s
