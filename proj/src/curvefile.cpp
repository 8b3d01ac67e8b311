#include "zlab/curvefile.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace zlab {
namespace {

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

std::vector<std::string> split_on(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == sep && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!trim(cur).empty()) out.push_back(trim(cur));
  return out;
}

const char* const kPartKeys[] = {"f2", "f3", "g2", "h2", "g4", "scale", "square_scale"};

}  // namespace

CurveFile parse_curve_file(std::string_view text, const std::string& origin) {
  CurveFile cf;
  std::map<std::string, std::string> raw;
  std::string current;
  int lineno = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    std::string body = hash == std::string::npos ? line : line.substr(0, hash);
    if (trim(body).empty()) continue;
    if (std::isspace(static_cast<unsigned char>(body[0]))) {
      if (current.empty()) throw ParseError(origin + ": continuation line without a key", lineno, 1);
      raw[current] += " " + trim(body);
      continue;
    }
    auto eq = body.find('=');
    if (eq == std::string::npos) throw ParseError(origin + ": expected 'key = value'", lineno, 1);
    current = trim(body.substr(0, eq));
    if (current.empty()) throw ParseError(origin + ": empty key", lineno, 1);
    if (raw.count(current)) throw ParseError(origin + ": duplicate key '" + current + "'", lineno, 1);
    raw[current] = trim(body.substr(eq + 1));
    cf.lines[current] = lineno;
  }
  for (auto& [k, v] : raw) {
    if (k == "name") {
      cf.name = v;
    } else if (k == "field") {
      try {
        cf.field = FieldDescriptor(parse_rational(v));
      } catch (const ParseError&) {
        throw ParseError(origin + ": bad field '" + v + "'", cf.lines[k], 1);
      }
    } else if (k == "poly") {
      cf.poly = v;
    } else if (k == "decomposition") {
      if (v != "torus" && v != "semi-torus" && v != "semi-torus-10")
        throw ParseError(origin + ": unknown decomposition '" + v + "'", cf.lines[k], 1);
      cf.decomposition = v;
    } else if (k.rfind("expected.", 0) == 0) {
      cf.expected[k.substr(9)] = v;
    } else {
      bool part = false;
      for (const char* p : kPartKeys) part = part || k == p;
      if (!part) throw ParseError(origin + ": unknown key '" + k + "'", cf.lines[k], 1);
      cf.parts[k] = v;
    }
  }
  if (cf.name.empty()) throw ParseError(origin + ": missing name", 1, 1);
  if (!cf.poly && cf.decomposition.empty()) throw ParseError(origin + ": neither poly nor decomposition given", 1, 1);
  // Fail early on malformed polynomials, reporting the file line.
  auto check = [&](const std::string& key, const std::string& body) {
    try {
      (void)parse_polynomial(body, cf.field);
    } catch (const ParseError& e) {
      throw ParseError(origin + ": " + key + ": " + e.what(), cf.lines[key] + e.line() - 1, e.column());
    }
  };
  if (cf.poly) check("poly", *cf.poly);
  for (const auto& [k, v] : cf.parts) check(k, v);
  return cf;
}

CurveFile load_curve_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_curve_file(ss.str(), path);
}

BiPoly CurveFile::part(const std::string& key) const {
  auto it = parts.find(key);
  if (it == parts.end()) throw Error(ErrorKind::InvalidArgument, name + ": missing part '" + key + "'");
  return parse_polynomial(it->second, field);
}

std::optional<BiPoly> CurveFile::decomposition_polynomial() const {
  if (decomposition.empty()) return std::nullopt;
  auto scalar = [&](const char* key) {
    return has_part(key) ? part(key) : BiPoly::constant(field, FieldElem::one(field));
  };
  if (decomposition == "torus") return scalar("scale") * pow(part("f2"), 3) + scalar("square_scale") * pow(part("f3"), 2);
  if (decomposition == "semi-torus") return pow(part("f2"), 3) + pow(part("g2"), 2) * part("h2");
  return pow(part("f2"), 5) + pow(part("g4"), 2) * part("h2");
}

BiPoly CurveFile::polynomial() const {
  if (poly) return parse_polynomial(*poly, field);
  return *decomposition_polynomial();
}

std::string CurveFile::to_text() const {
  std::string s = "name = " + name + "\nfield = " + (field.is_rational_field() ? "0" : field.radicand().get_str()) + "\n";
  if (poly) s += "poly = " + zlab::to_string(parse_polynomial(*poly, field)) + "\n";
  if (!decomposition.empty()) s += "decomposition = " + decomposition + "\n";
  for (const auto& [k, v] : parts) s += k + " = " + zlab::to_string(parse_polynomial(v, field)) + "\n";
  for (const auto& [k, v] : expected) s += "expected." + k + " = " + v + "\n";
  return s;
}

std::optional<CurveFile> corpus_file(const std::string& name) {
  for (const auto& [file, text] : embedded_corpus()) {
    if (file == name || file == name + ".curve") return parse_curve_file(text, file);
  }
  for (const auto& [file, text] : embedded_corpus()) {
    auto cf = parse_curve_file(text, file);
    if (cf.name == name) return cf;
  }
  return std::nullopt;
}

std::vector<std::pair<std::string, std::string>> parse_point_claims(const std::string& text) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& item : split_on(text, ';')) {
    auto colon = item.rfind(':');
    if (colon == std::string::npos) throw Error(ErrorKind::SyntaxError, "bad point claim '" + item + "'");
    out.emplace_back(trim(item.substr(0, colon)), trim(item.substr(colon + 1)));
  }
  return out;
}

std::vector<std::pair<std::string, int>> parse_int_claims(const std::string& text) {
  std::vector<std::pair<std::string, int>> out;
  for (auto& [p, v] : parse_point_claims(text)) out.emplace_back(p, std::stoi(v));
  return out;
}

ProjPoint parse_point(const std::string& text, const FieldDescriptor& f) {
  std::string t = trim(text);
  if (t.size() < 2 || t.front() != '(' || t.back() != ')') throw Error(ErrorKind::SyntaxError, "bad point '" + text + "'");
  auto parts = split_on(t.substr(1, t.size() - 2), ',');
  if (parts.size() != 2) throw Error(ErrorKind::SyntaxError, "bad point '" + text + "'");
  return ProjPoint::affine(FieldElem::parse(parts[0], f), FieldElem::parse(parts[1], f));
}

}  // namespace zlab
