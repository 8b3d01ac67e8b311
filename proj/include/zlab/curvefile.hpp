#pragma once

// Curve files: "key = value" lines, indented continuation lines, '#' comments.
//
//   name = ...            field = D (0 for Q)
//   poly = ...            optional when a decomposition is given
//   decomposition = torus | semi-torus | semi-torus-10
//   f2, f3, g2, h2, g4, scale, square_scale = parts of the decomposition
//   expected.<key> = ...  claims checked by corpus verification

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zlab/singloc.hpp"

namespace zlab {

struct CurveFile {
  std::string name;
  FieldDescriptor field;
  std::optional<std::string> poly;
  std::string decomposition;
  std::map<std::string, std::string> parts;
  std::map<std::string, std::string> expected;
  std::map<std::string, int> lines;  // first line of every key

  /// Parses a named part over the file's field.
  BiPoly part(const std::string& key) const;
  bool has_part(const std::string& key) const { return parts.count(key) > 0; }
  /// The curve polynomial: poly if present, otherwise assembled from the parts.
  BiPoly polynomial() const;
  /// Polynomial assembled from the decomposition parts; nullopt without one.
  std::optional<BiPoly> decomposition_polynomial() const;
  Curve curve() const { return Curve(polynomial(), name); }

  /// Canonical text of the file (polynomials reprinted); parses back to an equal file.
  std::string to_text() const;
};

CurveFile parse_curve_file(std::string_view text, const std::string& origin = "<input>");
CurveFile load_curve_file(const std::string& path);

/// Corpus files compiled into the library, sorted by file name.
const std::vector<std::pair<std::string, std::string>>& embedded_corpus();
/// Looks up a corpus entry by curve name or file name.
std::optional<CurveFile> corpus_file(const std::string& name);

/// "(0, 1): A2; (0, -1): A2" -> list of (point text, type text).
std::vector<std::pair<std::string, std::string>> parse_point_claims(const std::string& text);
/// "(1, 0): 4" style claims with integer values.
std::vector<std::pair<std::string, int>> parse_int_claims(const std::string& text);
/// Parses an affine point "(a, b)" over the given field.
ProjPoint parse_point(const std::string& text, const FieldDescriptor& f);

}  // namespace zlab
