#include "mloc/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <json.hpp>

namespace mloc {

namespace {

ParsedComplex compact(std::vector<std::vector<Vertex>> simplices, std::string name) {
  std::vector<Vertex> ids;
  for (const auto& s : simplices) ids.insert(ids.end(), s.begin(), s.end());
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  for (auto& s : simplices) {
    for (Vertex& v : s) v = static_cast<Vertex>(std::lower_bound(ids.begin(), ids.end(), v) - ids.begin());
  }
  ParsedComplex out;
  out.complex = SimplicialComplex::from_simplices(simplices, std::move(name), ids.size());
  out.original_ids = std::move(ids);
  return out;
}

void check_simplex(const std::vector<Vertex>& s, std::size_t line) {
  const std::string where = line ? "line " + std::to_string(line) + ": " : "";
  if (s.size() > static_cast<std::size_t>(kMaxDimension) + 1) {
    throw Error(ErrorCode::DimensionTooHigh, where + "simplex with " + std::to_string(s.size()) + " vertices", s);
  }
  auto sorted = s;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorCode::DuplicateVertexInSimplex, where + "repeated vertex in a simplex", s);
  }
}

std::size_t line_of_offset(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
}

}  // namespace

bool ParsedComplex::relabeled() const {
  for (std::size_t v = 0; v < original_ids.size(); ++v) {
    if (original_ids[v] != static_cast<Vertex>(v)) return true;
  }
  return false;
}

// A comment line of this form names the complex.
constexpr std::string_view kNameTag = "# name: ";

ParsedComplex parse_text(std::string_view text, std::string name) {
  std::vector<std::vector<Vertex>> simplices;
  std::size_t line_no = 0;
  std::size_t start = 0;
  bool named = false;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    if (line.substr(0, kNameTag.size()) == kNameTag && !named) {
      name = std::string(line.substr(kNameTag.size()));
      named = true;
    }
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::vector<Vertex> simplex;
    std::size_t pos = 0;
    while (pos < line.size()) {
      while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
      if (pos == line.size()) break;
      std::size_t tok_end = pos;
      while (tok_end < line.size() && !std::isspace(static_cast<unsigned char>(line[tok_end]))) ++tok_end;
      const std::string_view token = line.substr(pos, tok_end - pos);
      Vertex v = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
      if (ec != std::errc() || ptr != token.data() + token.size() || token.front() == '-' || token.front() == '+') {
        throw ParseError(line_no, "expected a non-negative integer, got '" + std::string(token) + "'");
      }
      simplex.push_back(v);
      pos = tok_end;
    }
    if (simplex.empty()) continue;
    check_simplex(simplex, line_no);
    simplices.push_back(std::move(simplex));
  }
  return compact(std::move(simplices), std::move(name));
}

ParsedComplex parse_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(line_of_offset(text, e.byte > 0 ? e.byte - 1 : 0), "invalid JSON");
  }
  if (!doc.is_object()) throw ParseError(1, "expected a JSON object");
  std::string name;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw ParseError(1, "\"name\" must be a string");
    name = doc["name"].get<std::string>();
  }
  if (!doc.contains("maximal_simplices") || !doc["maximal_simplices"].is_array()) {
    throw ParseError(1, "missing \"maximal_simplices\" array");
  }
  std::vector<std::vector<Vertex>> simplices;
  for (const auto& s : doc["maximal_simplices"]) {
    if (!s.is_array()) throw ParseError(1, "each simplex must be an array");
    std::vector<Vertex> simplex;
    for (const auto& v : s) {
      if (!v.is_number_integer() || v.get<long long>() < 0 || v.get<long long>() > INT32_MAX) {
        throw ParseError(1, "vertex ids must be non-negative integers");
      }
      simplex.push_back(static_cast<Vertex>(v.get<long long>()));
    }
    if (simplex.empty()) continue;
    check_simplex(simplex, 0);
    simplices.push_back(std::move(simplex));
  }
  return compact(std::move(simplices), std::move(name));
}

ParsedComplex parse_complex(std::string_view text, std::string name) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    ParsedComplex out = parse_json(text);
    if (out.complex.name().empty()) out.complex.set_name(std::move(name));
    return out;
  }
  return parse_text(text, std::move(name));
}

ParsedComplex read_complex_file(const std::string& path) {
  std::string content;
  std::string name;
  if (path == "-") {
    content.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    name = "stdin";
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open '" + path + "'");
    content.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    name = std::filesystem::path(path).stem().string();
  }
  return parse_complex(content, std::move(name));
}

std::string serialize_text(const SimplicialComplex& X) {
  std::ostringstream os;
  if (!X.name().empty()) os << kNameTag << X.name() << '\n';
  for (const Simplex& s : X.maximal_simplices()) {
    for (std::size_t i = 0; i < s.size(); ++i) os << (i ? " " : "") << s[i];
    os << '\n';
  }
  return os.str();
}

std::string serialize_json(const SimplicialComplex& X) {
  nlohmann::ordered_json doc;
  doc["name"] = X.name();
  doc["maximal_simplices"] = nlohmann::ordered_json::array();
  for (const Simplex& s : X.maximal_simplices()) doc["maximal_simplices"].push_back(s.to_vector());
  return doc.dump() + "\n";
}

std::string serialize(const SimplicialComplex& X, Format format) {
  return format == Format::Json ? serialize_json(X) : serialize_text(X);
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write '" + path.string() + "'");
  out << content;
}

}  // namespace mloc
