#include "toricfano/polytope_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"

namespace toricfano {

namespace {

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  for (std::string t; is >> t;) out.push_back(std::move(t));
  return out;
}

std::int64_t parse_int(const std::string& token, std::size_t line_no) {
  std::int64_t value = 0;
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw Error(Errc::ParseError,
                "line " + std::to_string(line_no) + ": '" + token + "' is not a 64-bit integer");
  }
  return value;
}

bool is_comment_or_blank(const std::string& line) {
  const auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == '#';
}

Integer json_integer(const nlohmann::json& j, const std::string& what) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (!s.empty() && s.find_first_not_of("-0123456789") == std::string::npos &&
        s.find('-', 1) == std::string::npos && s != "-") {
      return Integer(s);
    }
  }
  throw Error(Errc::ParseError, what + " is not an integer");
}

nlohmann::json integer_json(const Integer& z) {
  if (z >= std::numeric_limits<std::int64_t>::min() && z <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(z);
  }
  return z.str();
}

std::ifstream open(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open " + path.string());
  return in;
}

}  // namespace

PolytopeData read_polytope(std::istream& in) {
  PolytopeData data;
  std::size_t expected = 0;
  bool header = false;
  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (is_comment_or_blank(line)) continue;
    const auto t = tokens(line);
    if (!header) {
      if (t.size() != 2) throw Error(Errc::ParseError, "header must be \"n v\"");
      const auto n = parse_int(t[0], line_no);
      const auto v = parse_int(t[1], line_no);
      if (n < 1 || v < 0) throw Error(Errc::ParseError, "header values out of range");
      data.dim = static_cast<int>(n);
      expected = static_cast<std::size_t>(v);
      header = true;
      continue;
    }
    if (data.vertices.size() == expected) {
      throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": more vertices than declared");
    }
    if (t.size() != static_cast<std::size_t>(data.dim)) {
      throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": expected " +
                                        std::to_string(data.dim) + " coordinates");
    }
    std::vector<Coord> coords;
    coords.reserve(t.size());
    for (const auto& tok : t) coords.push_back(parse_int(tok, line_no));
    data.vertices.emplace_back(std::move(coords));
  }
  if (!header) throw Error(Errc::ParseError, "missing header");
  if (data.vertices.size() != expected) {
    throw Error(Errc::ParseError, "declared " + std::to_string(expected) + " vertices, found " +
                                      std::to_string(data.vertices.size()));
  }
  return data;
}

PolytopeData read_polytope_file(const std::filesystem::path& path) {
  auto in = open(path);
  return read_polytope(in);
}

void write_polytope(std::ostream& out, const PolytopeData& data, const std::string& comment) {
  if (!comment.empty()) {
    std::istringstream lines(comment);
    for (std::string l; std::getline(lines, l);) out << "# " << l << '\n';
  }
  out << data.dim << ' ' << data.vertices.size() << '\n';
  for (const auto& v : data.vertices) {
    for (std::size_t i = 0; i < v.dim(); ++i) out << (i ? " " : "") << v[i];
    out << '\n';
  }
}

void write_polytope_file(const std::filesystem::path& path, const PolytopeData& data,
                         const std::string& comment) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::ParseError, "cannot write " + path.string());
  write_polytope(out, data, comment);
}

DiamondFile read_diamond(std::istream& in) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("h")) {
    throw Error(Errc::ParseError, "diamond file needs fields \"n\" and \"h\"");
  }
  const Integer n_big = json_integer(j.at("n"), "n");
  if (n_big < 0 || n_big > 64) throw Error(Errc::ParseError, "n out of range");
  const auto n = static_cast<std::size_t>(n_big);
  const auto size = n + 1;

  const auto& h = j.at("h");
  if (!h.is_array()) throw Error(Errc::ParseError, "\"h\" must be an array");
  std::vector<std::vector<Integer>> table(size, std::vector<Integer>(size));
  if (!h.empty() && h.front().is_array()) {
    if (h.size() != size) throw Error(Errc::ParseError, "\"h\" must have n+1 rows");
    for (std::size_t p = 0; p < size; ++p) {
      if (!h[p].is_array() || h[p].size() != size) {
        throw Error(Errc::ParseError, "row " + std::to_string(p) + " must have n+1 entries");
      }
      for (std::size_t q = 0; q < size; ++q) table[p][q] = json_integer(h[p][q], "h entry");
    }
  } else {
    if (h.size() != size * size) throw Error(Errc::ParseError, "flat \"h\" must have (n+1)^2 entries");
    for (std::size_t i = 0; i < size * size; ++i) table[i / size][i % size] = json_integer(h[i], "h entry");
  }

  DiamondFile file{HodgeDiamond(std::move(table)), std::nullopt, std::nullopt};
  if (j.contains("c1_cn1") && !j.at("c1_cn1").is_null()) file.c1_cn1 = json_integer(j.at("c1_cn1"), "c1_cn1");
  if (j.contains("c_n") && !j.at("c_n").is_null()) file.c_n = json_integer(j.at("c_n"), "c_n");
  return file;
}

DiamondFile read_diamond_file(const std::filesystem::path& path) {
  auto in = open(path);
  return read_diamond(in);
}

void write_diamond(std::ostream& out, const DiamondFile& file) {
  nlohmann::json j;
  j["n"] = file.diamond.n();
  auto rows = nlohmann::json::array();
  for (const auto& row : file.diamond.table()) {
    auto r = nlohmann::json::array();
    for (const auto& x : row) r.push_back(integer_json(x));
    rows.push_back(std::move(r));
  }
  j["h"] = std::move(rows);
  if (file.c1_cn1) j["c1_cn1"] = integer_json(*file.c1_cn1);
  if (file.c_n) j["c_n"] = integer_json(*file.c_n);
  out << j.dump(2) << '\n';
}

bool looks_like_diamond(const std::filesystem::path& path) {
  auto in = open(path);
  char c = 0;
  while (in.get(c)) {
    if (!std::isspace(static_cast<unsigned char>(c))) return c == '{';
  }
  return false;
}

}  // namespace toricfano
