#pragma once

#include <optional>
#include <string>
#include <vector>

#include "k3scroll/clifford.hpp"
#include "k3scroll/model.hpp"
#include "k3scroll/resolution.hpp"

namespace k3s {

// Dual graph of the contracted (-2)-curves; every component must be a
// Dynkin diagram of type A, D or E.
struct ADEGraph {
  std::vector<DivisorClass> vertices;
  std::vector<std::pair<int, int>> edges;
};

ADEGraph contracted_graph(const K3Config& cfg);

// Canonical singularity string: "sm." or "+"-joined grouped components,
// e.g. "A1", "2A1", "A1+A2", "D4".
std::string singularity_type(const K3Config& cfg);
std::string classify_ade(const ADEGraph& g);

enum class Provenance { Computed, PaperAsserted };

struct CaseRecord {
  i64 g = 0, c = 0, Dsq = 0;
  std::string tag;
  ScrollType scroll_T{IVec{0}};
  ScrollType scroll_T0{IVec{1}};
  i64 num_moduli = 0;
  std::string sing;
  std::string b_data;          // recorded twist data for the row, if any
  std::string perfect;
  std::string note;
  std::vector<std::pair<std::string, Provenance>> provenance;
};

// One classification row as stored in the expected-table files.
struct CaseSpec {
  i64 c = 0, Dsq = 0;
  std::string scroll;
  i64 moduli = 0;
  std::string tag;
  std::string sing;
  std::string b_data;
  std::string b1;                      // for the quadric-pair formula check
  std::vector<std::string> asserted;   // fields pinned by the source text
  std::string note;
  LatticeFile fixture;
  std::optional<DivisorClass> declared_D;
};

struct GenusTable {
  i64 g = 0;
  std::string banner;
  std::vector<CaseSpec> rows;
};

GenusTable load_genus_table(const std::string& path);

// Full pipeline on one fixture: Clifford data, case tag, scroll types,
// moduli count (20 - rank, cross-checked against the dimension formulas
// where they apply), and the ADE type of the contracted configuration.
CaseRecord run_case(const CaseSpec& row, i64 g);

struct RowDiff {
  std::string field;
  std::string expected;
  std::string actual;
  bool asserted = false;  // expected value is paper-recorded, not computed
};

struct DiffReport {
  bool clean = true;
  std::vector<std::string> lines;
  int mismatches = 0;
  int asserted_fields = 0;
};

// Regenerates the classification tables for the requested genera and diffs
// them against the stored rows; also replays the scroll-family tables.
DiffReport regenerate_tables(const std::string& data_dir, i64 g_min, i64 g_max);

std::string default_data_dir();

}  // namespace k3s
