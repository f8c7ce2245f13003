#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "mloc/complex.hpp"

namespace mloc {

/// A parsed complex together with the relabeling applied to the file's ids:
/// dense vertex v was `original_ids[v]` in the input.
struct ParsedComplex {
  SimplicialComplex complex;
  std::vector<Vertex> original_ids;

  bool relabeled() const;
};

/// Text format: `#` starts a comment; every other nonblank line lists the
/// vertices of one maximal simplex. A line "# name: <text>" names the
/// complex. Throws ParseError (with line number),
/// DimensionTooHigh or DuplicateVertexInSimplex.
ParsedComplex parse_text(std::string_view text, std::string name = {});
/// {"name": ..., "maximal_simplices": [[...], ...]}.
ParsedComplex parse_json(std::string_view text);
/// JSON if the first non-blank character is '{', text otherwise.
ParsedComplex parse_complex(std::string_view text, std::string name = {});
/// Reads a file ("-" for standard input); the stem becomes the name unless
/// the content names the complex.
ParsedComplex read_complex_file(const std::string& path);

enum class Format { Text, Json };

/// Canonical text: an optional "# name: <name>" line, then the sorted maximal
/// simplices, one per line.
std::string serialize_text(const SimplicialComplex& X);
std::string serialize_json(const SimplicialComplex& X);
std::string serialize(const SimplicialComplex& X, Format format);

void write_file(const std::filesystem::path& path, std::string_view content);

}  // namespace mloc
