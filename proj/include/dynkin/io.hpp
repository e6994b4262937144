#pragma once

// Matrix input parsing, catalog persistence (JSON lines) and table emitters.
// All serialized vertex indices are 1-based.

#include <cctype>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "dynkin/catalog.hpp"
#include "dynkin/gcm.hpp"
#include "dynkin/weyl.hpp"

namespace dynkin {

using ordered_json = nlohmann::ordered_json;

inline constexpr std::string_view kCatalogFormat = "dynkin-catalog/1";

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CatalogFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One row per line, whitespace-separated integers; '#' starts a comment and
/// blank lines are skipped.
inline Gcm parse_matrix_text(std::string_view text) {
  std::vector<std::vector<int>> rows;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    std::vector<int> row;
    std::size_t i = 0;
    while (i < line.size()) {
      if (std::isspace(static_cast<unsigned char>(line[i]))) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      const auto token = line.substr(i, j - i);
      int value = 0;
      const char* first = token.data();
      if (!token.empty() && token.front() == '+') ++first;
      auto [ptr, ec] = std::from_chars(first, token.data() + token.size(), value);
      if (ec != std::errc{} || ptr != token.data() + token.size())
        throw ParseError("line " + std::to_string(line_no) + ": '" + std::string(token) + "' is not an integer");
      row.push_back(value);
      i = j;
    }
    if (row.empty()) continue;
    if (!rows.empty() && row.size() != rows.front().size())
      throw ParseError("line " + std::to_string(line_no) + ": row has " + std::to_string(row.size()) +
                       " entries, expected " + std::to_string(rows.front().size()));
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("no matrix rows found");
  if (rows.size() != rows.front().size())
    throw ParseError("matrix has " + std::to_string(rows.size()) + " rows of " + std::to_string(rows.front().size()) +
                     " entries; it must be square");
  return Gcm::from_rows(rows);
}

inline std::vector<std::vector<int>> json_to_rows(const nlohmann::json& m, const std::string& where) {
  if (!m.is_array()) throw ParseError(where + ": matrix must be an array of arrays");
  std::vector<std::vector<int>> rows;
  for (std::size_t r = 0; r < m.size(); ++r) {
    if (!m[r].is_array()) throw ParseError(where + ": row " + std::to_string(r + 1) + " is not an array");
    std::vector<int> row;
    for (std::size_t c = 0; c < m[r].size(); ++c) {
      if (!m[r][c].is_number_integer())
        throw ParseError(where + ": entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) +
                         ") is not an integer");
      row.push_back(m[r][c].get<int>());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

/// {"matrix": [[...], ...], "rank": n}; rank is optional but must match.
inline Gcm parse_matrix_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("matrix")) throw ParseError("JSON input needs a \"matrix\" key");
  auto rows = json_to_rows(doc["matrix"], "\"matrix\"");
  if (doc.contains("rank")) {
    if (!doc["rank"].is_number_integer() || doc["rank"].get<long long>() != static_cast<long long>(rows.size()))
      throw ParseError("\"rank\" does not match the matrix size " + std::to_string(rows.size()));
  }
  return Gcm::from_rows(rows);
}

/// Structured JSON when the first non-blank character is '{', text otherwise.
inline Gcm parse_matrix_input(std::string_view text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '{') return parse_matrix_json(text);
    break;
  }
  return parse_matrix_text(text);
}

inline ordered_json matrix_json(const Gcm& m) {
  ordered_json rows = ordered_json::array();
  for (const auto& r : m.rows()) rows.push_back(r);
  return rows;
}

inline ordered_json blocks_json(const OrbitPartition& p) {
  ordered_json out = ordered_json::array();
  for (const auto& block : p.blocks) {
    ordered_json b = ordered_json::array();
    for (auto v : block) b.push_back(v + 1);
    out.push_back(std::move(b));
  }
  return out;
}

inline ordered_json to_json(const CatalogEntry& e) {
  ordered_json j;
  j["canonical_id"] = e.canonical_id;
  j["rank"] = e.rank;
  j["matrix"] = matrix_json(e.matrix);
  j["compact"] = e.compact;
  j["symmetrizable"] = e.symmetrizable;
  j["symmetrizer"] = e.symmetrizer ? ordered_json(e.symmetrizer->d) : ordered_json(nullptr);
  j["root_lengths"] = e.root_lengths ? ordered_json(*e.root_lengths) : ordered_json(nullptr);
  j["orbit_blocks"] = blocks_json(e.orbit_blocks);
  j["orbit_semantics"] = to_string(e.orbit_semantics);
  j["dual_id"] = e.dual_id;
  return j;
}

inline ordered_json catalog_header(std::size_t records) {
  ordered_json h;
  h["format"] = kCatalogFormat;
  h["index_base"] = 1;
  h["records"] = records;
  h["comment"] = "matrix rows/columns and orbit_blocks vertices are numbered from 1";
  return h;
}

inline void write_catalog(std::ostream& out, const std::vector<CatalogEntry>& entries) {
  out << catalog_header(entries.size()).dump() << '\n';
  for (const auto& e : entries) out << to_json(e).dump() << '\n';
}

inline CatalogEntry entry_from_json(const nlohmann::json& j, std::size_t line_no) {
  const std::string where = "line " + std::to_string(line_no);
  auto fail = [&](const std::string& msg) -> CatalogFormatError { return CatalogFormatError(where + ": " + msg); };
  if (!j.is_object()) throw fail("record is not a JSON object");
  for (const char* key : {"canonical_id", "rank", "matrix", "compact", "symmetrizable", "symmetrizer",
                          "root_lengths", "orbit_blocks", "orbit_semantics", "dual_id"})
    if (!j.contains(key)) throw fail(std::string("missing key \"") + key + "\"");

  CatalogEntry e;
  try {
    e.canonical_id = j.at("canonical_id").get<std::string>();
    e.rank = j.at("rank").get<std::size_t>();
    e.matrix = Gcm::from_rows(json_to_rows(j.at("matrix"), where));
    e.compact = j.at("compact").get<bool>();
    e.symmetrizable = j.at("symmetrizable").get<bool>();
    e.dual_id = j.at("dual_id").get<std::string>();
  } catch (const nlohmann::json::exception& ex) {
    throw fail(ex.what());
  } catch (const std::invalid_argument& ex) {
    throw fail(ex.what());
  } catch (const ParseError& ex) {
    throw fail(ex.what());
  }
  if (e.matrix.rank() != e.rank) throw fail("rank does not match matrix size");

  const auto& sym = j.at("symmetrizer");
  const auto& rho = j.at("root_lengths");
  if (e.symmetrizable != !sym.is_null()) throw fail("symmetrizer must be present exactly when symmetrizable");
  if (e.symmetrizable != !rho.is_null()) throw fail("root_lengths must be present exactly when symmetrizable");
  if (!sym.is_null()) {
    Symmetrization s;
    if (!sym.is_array() || sym.size() != e.rank) throw fail("symmetrizer must list one entry per vertex");
    for (const auto& x : sym) {
      if (!x.is_number_integer() || x.get<std::int64_t>() <= 0) throw fail("symmetrizer entries must be positive");
      s.d.push_back(x.get<std::int64_t>());
    }
    e.symmetrizer = std::move(s);
    if (!rho.is_number_unsigned()) throw fail("root_lengths must be a positive integer");
    e.root_lengths = rho.get<std::size_t>();
  }

  const auto& blocks = j.at("orbit_blocks");
  if (!blocks.is_array()) throw fail("orbit_blocks must be an array");
  std::vector<bool> covered(e.rank, false);
  for (const auto& b : blocks) {
    if (!b.is_array() || b.empty()) throw fail("orbit block must be a nonempty array");
    std::vector<std::size_t> block;
    for (const auto& v : b) {
      if (!v.is_number_unsigned() || v.get<std::size_t>() < 1 || v.get<std::size_t>() > e.rank)
        throw fail("orbit block vertex out of range");
      const auto idx = v.get<std::size_t>() - 1;
      if (covered[idx]) throw fail("orbit blocks overlap");
      covered[idx] = true;
      block.push_back(idx);
    }
    e.orbit_blocks.blocks.push_back(std::move(block));
  }
  for (bool c : covered)
    if (!c) throw fail("orbit blocks do not cover every vertex");

  const auto& sem = j.at("orbit_semantics");
  if (sem == "verified")
    e.orbit_semantics = OrbitSemantics::Verified;
  else if (sem == "unverified")
    e.orbit_semantics = OrbitSemantics::Unverified;
  else
    throw fail("orbit_semantics must be \"verified\" or \"unverified\"");
  return e;
}

inline std::vector<CatalogEntry> read_catalog(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw CatalogFormatError("empty catalog file: missing header line");
  nlohmann::json header;
  try {
    header = nlohmann::json::parse(line);
  } catch (const nlohmann::json::parse_error&) {
    throw CatalogFormatError("line 1: header is not JSON");
  }
  if (!header.is_object() || !header.contains("format") || !header["format"].is_string())
    throw CatalogFormatError("line 1: header lacks a format string");
  if (header["format"].get<std::string>() != kCatalogFormat)
    throw CatalogFormatError("format version mismatch: expected " + std::string(kCatalogFormat) + ", found " +
                             header["format"].get<std::string>());

  std::vector<CatalogEntry> entries;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error&) {
      throw CatalogFormatError("line " + std::to_string(line_no) + ": record is not JSON");
    }
    entries.push_back(entry_from_json(j, line_no));
  }
  if (header.contains("records") &&
      (!header["records"].is_number_unsigned() || header["records"].get<std::size_t>() != entries.size()))
    throw CatalogFormatError("header announces " + header["records"].dump() + " records, file has " +
                             std::to_string(entries.size()));
  return entries;
}

inline std::string matrix_inline(const Gcm& m) {
  std::string s;
  for (std::size_t i = 0; i < m.rank(); ++i) {
    if (i) s += ';';
    for (std::size_t j = 0; j < m.rank(); ++j) {
      if (j) s += ' ';
      s += std::to_string(m(i, j));
    }
  }
  return s;
}

inline std::string blocks_inline(const OrbitPartition& p) {
  std::string s;
  for (std::size_t b = 0; b < p.blocks.size(); ++b) {
    if (b) s += ' ';
    s += '{';
    for (std::size_t k = 0; k < p.blocks[b].size(); ++k) {
      if (k) s += ',';
      s += std::to_string(p.blocks[b][k] + 1);
    }
    s += '}';
  }
  return s;
}

inline std::string symmetrizer_inline(const std::optional<Symmetrization>& s) {
  if (!s) return "N.S.";
  std::string out = "diag(";
  for (std::size_t k = 0; k < s->d.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(s->d[k]);
  }
  return out + ")";
}

inline void write_catalog_tsv(std::ostream& out, const std::vector<CatalogEntry>& entries) {
  out << "canonical_id\trank\tmatrix\tcompact\tsymmetrizable\tsymmetrizer\troot_lengths\torbit_blocks\t"
         "orbit_semantics\tdual_id\n";
  for (const auto& e : entries) {
    out << e.canonical_id << '\t' << e.rank << '\t' << matrix_inline(e.matrix) << '\t'
        << (e.compact ? "true" : "false") << '\t' << (e.symmetrizable ? "true" : "false") << '\t'
        << symmetrizer_inline(e.symmetrizer) << '\t'
        << (e.root_lengths ? std::to_string(*e.root_lengths) : std::string()) << '\t'
        << blocks_inline(e.orbit_blocks) << '\t' << to_string(e.orbit_semantics) << '\t' << e.dual_id << '\n';
  }
}

/// Columns: index, matrix, diag(d) or N.S., Weyl orbits (blank when not
/// symmetrizable).
inline void write_catalog_latex(std::ostream& out, const std::vector<CatalogEntry>& entries) {
  out << "% dynkin-catalog table; vertices numbered from 1\n";
  out << "\\begin{longtable}{llll}\n";
  out << "No. & Matrix & Symmetrization & Weyl orbits \\\\\n\\hline\n";
  for (const auto& e : entries) {
    out << e.canonical_id << " & $\\left(\\begin{smallmatrix}";
    for (std::size_t i = 0; i < e.rank; ++i) {
      if (i) out << " \\\\ ";
      for (std::size_t j = 0; j < e.rank; ++j) out << (j ? " & " : "") << e.matrix(i, j);
    }
    out << "\\end{smallmatrix}\\right)$ & ";
    if (e.symmetrizer) {
      out << "$diag(";
      for (std::size_t k = 0; k < e.symmetrizer->d.size(); ++k) out << (k ? "," : "") << e.symmetrizer->d[k];
      out << ")$";
    } else {
      out << "N.S.";
    }
    out << " & ";
    if (e.symmetrizable) {
      out << '$';
      for (std::size_t b = 0; b < e.orbit_blocks.blocks.size(); ++b) {
        out << (b ? ", " : "") << "W\\{";
        const auto& block = e.orbit_blocks.blocks[b];
        for (std::size_t k = 0; k < block.size(); ++k) out << (k ? "," : "") << "\\alpha_{" << block[k] + 1 << '}';
        out << "\\}";
      }
      out << '$';
    }
    out << " \\\\\n";
  }
  out << "\\end{longtable}\n";
}

/// One root per line: height then coordinates, comma-separated.
inline void write_roots(std::ostream& out, const std::vector<RootVector>& roots) {
  for (const auto& r : roots) {
    out << r.height();
    for (int c : r.coords) out << ',' << c;
    out << '\n';
  }
}

}  // namespace dynkin
