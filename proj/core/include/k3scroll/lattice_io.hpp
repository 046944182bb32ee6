#pragma once

#include <map>
#include <string>

#include "k3scroll/lattice.hpp"

namespace k3s {

// Shared on-disk form: a JSON object with fields `rank`, `gram` (row-major),
// `basis_names`, and `classes` (named integer vectors, minimally "L" and
// "D"). Serialization is canonical so that load/save round-trips bit-exactly.
struct LatticeFile {
  LatticePtr lattice;
  std::map<std::string, DivisorClass> classes;

  const DivisorClass& cls(const std::string& name) const;
  bool has(const std::string& name) const { return classes.count(name) > 0; }
};

LatticeFile parse_lattice_file(const std::string& json_text);
LatticeFile load_lattice_file(const std::string& path);
std::string write_lattice_file(const LatticeFile& lf);

}  // namespace k3s
