#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "toricfano/arithmetic.hpp"
#include "toricfano/hodge_diamond.hpp"
#include "toricfano/lattice_point.hpp"

namespace toricfano {

/// Raw vertex list as stored on disk; no geometric validation.
struct PolytopeData {
  int dim = 0;
  std::vector<LatticePoint> vertices;
};

/// Text format: '#' comment lines, a header line "n v", then v lines of n
/// integers. Throws ParseError.
PolytopeData read_polytope(std::istream& in);
PolytopeData read_polytope_file(const std::filesystem::path& path);
void write_polytope(std::ostream& out, const PolytopeData& data, const std::string& comment = {});
void write_polytope_file(const std::filesystem::path& path, const PolytopeData& data,
                         const std::string& comment = {});

/// JSON object {"n": .., "h": [[..],..], "c1_cn1": .., "c_n": ..}; the two
/// Chern numbers are optional. Integers may also be given as decimal strings.
struct DiamondFile {
  HodgeDiamond diamond;
  std::optional<Integer> c1_cn1;
  std::optional<Integer> c_n;
};

/// Throws ParseError for malformed JSON or shape errors and InvalidDiamond
/// for tables that are well formed but violate the diamond invariants.
DiamondFile read_diamond(std::istream& in);
DiamondFile read_diamond_file(const std::filesystem::path& path);
void write_diamond(std::ostream& out, const DiamondFile& file);

/// True if the first non-blank character of the file is '{'.
bool looks_like_diamond(const std::filesystem::path& path);

}  // namespace toricfano
