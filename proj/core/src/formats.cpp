#include "grodeg/formats.hpp"

#include <cctype>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "grodeg/corpus.hpp"
#include "grodeg/error.hpp"
#include "grodeg/poly_text.hpp"

namespace grodeg {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, "cannot read file");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::string fnv1a_hex(std::string_view bytes) {
  uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<size_t>(i)] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

namespace {

std::string trimmed(const std::string& s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

[[noreturn]] void fail(const std::string& source, int line,
                       const std::string& what) {
  throw ParseError(source, line, what);
}

}  // namespace

Field IdealFile::choose_field(const std::optional<Field>& override_field) const {
  if (override_field) return *override_field;
  if (field) return *field;
  return Field::rationals();
}

MonomialOrder IdealFile::choose_order(
    const std::optional<MonomialOrder>& override_order) const {
  if (override_order) return *override_order;
  if (order) return *order;
  return MonomialOrder::lex();
}

Ideal IdealFile::resolve(const Field& f) const {
  std::vector<Polynomial> gens;
  for (size_t i = 0; i < polynomials.size(); ++i)
    gens.push_back(
        parse_polynomial(polynomials[i], f, nvars, source, lines[i]));
  return Ideal::from_generators(f, nvars, std::move(gens));
}

IdealFile parse_ideal_text(const std::string& text, const std::string& source) {
  IdealFile out;
  out.source = source;
  bool saw_vars = false;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = trimmed(raw);
    if (line.empty() || line[0] == '#') continue;
    auto header = [&](const char* key) -> std::optional<std::string> {
      std::string prefix = std::string(key) + ":";
      if (line.rfind(prefix, 0) != 0) return std::nullopt;
      if (!out.polynomials.empty())
        fail(source, lineno, "headers must precede the polynomials");
      return trimmed(line.substr(prefix.size()));
    };
    try {
      if (auto v = header("vars")) {
        if (saw_vars) fail(source, lineno, "duplicate vars header");
        size_t used = 0;
        int n = std::stoi(*v, &used);
        if (used != v->size() || n < 1)
          fail(source, lineno, "vars wants a positive integer");
        out.nvars = n;
        saw_vars = true;
        continue;
      }
      if (auto v = header("field")) {
        if (out.field) fail(source, lineno, "duplicate field header");
        out.field = Field::parse(*v);
        continue;
      }
      if (auto v = header("order")) {
        if (out.order) fail(source, lineno, "duplicate order header");
        out.order = MonomialOrder::parse(*v);
        continue;
      }
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      fail(source, lineno, std::string(e.what()));
    } catch (const std::exception&) {
      fail(source, lineno, "bad header value '" + line + "'");
    }
    if (!saw_vars)
      fail(source, lineno, "vars header must come before the polynomials");
    out.polynomials.push_back(line);
    out.lines.push_back(lineno);
  }
  if (!saw_vars) fail(source, lineno ? lineno : 1, "missing vars header");
  return out;
}

IdealFile read_ideal_file(const std::string& path) {
  return parse_ideal_text(read_file(path), path);
}

namespace {

json parse_json(const std::string& text, const std::string& source) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError(source, "malformed JSON");
  return j;
}

long int_field(const json& j, const std::string& source, const char* key) {
  if (!j.at(key).is_number_integer())
    throw ParseError(source, "'" + std::string(key) +
                     "' must be an integer");
  return j.at(key).get<long>();
}

void reject_unknown_keys(const json& j, const std::string& source,
                         std::initializer_list<const char*> known) {
  for (const auto& [key, value] : j.items()) {
    bool ok = false;
    for (const char* k : known) ok = ok || key == k;
    if (!ok) throw ParseError(source, "unknown key '" + key + "'");
  }
}

SimplicialComplex complex_from_json(const json& j, const std::string& source) {
  if (!j.is_object())
    throw ParseError(source, "complex must be a JSON object");
  reject_unknown_keys(j, source, {"n", "facets", "edges"});
  if (!j.contains("n")) throw ParseError(source, "complex needs 'n'");
  long n = int_field(j, source, "n");
  if (n < 0) throw ParseError(source, "'n' must be nonnegative");
  int nverts = static_cast<int>(n) + 1;
  auto vertex = [&](const json& v) {
    if (!v.is_number_integer() || v.get<long>() < 0 || v.get<long>() > n)
      throw ParseError(source, "vertex out of range 0.." +
                       std::to_string(n));
    return static_cast<int>(v.get<long>());
  };
  if (j.contains("facets") == j.contains("edges"))
    throw ParseError(source, "complex needs exactly one of facets/edges");
  if (j.contains("edges")) {
    if (!j.at("edges").is_array())
      throw ParseError(source, "'edges' must be an array");
    std::vector<std::pair<int, int>> edges;
    for (const json& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2)
        throw ParseError(source, "each edge must be a pair");
      edges.emplace_back(vertex(e[0]), vertex(e[1]));
    }
    return SimplicialComplex::graph(nverts, edges);
  }
  if (!j.at("facets").is_array())
    throw ParseError(source, "'facets' must be an array");
  std::vector<Face> facets;
  for (const json& f : j.at("facets")) {
    if (!f.is_array())
      throw ParseError(source, "each facet must be an array");
    std::vector<int> verts;
    for (const json& v : f) verts.push_back(vertex(v));
    facets.emplace_back(std::move(verts));
  }
  return SimplicialComplex::from_facets(nverts, std::move(facets));
}

Scalar scalar_from_json(const Field& f, const json& v,
                        const std::string& source) {
  if (v.is_number_integer()) return Scalar::from_int(f, v.get<long>());
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    try {
      size_t slash = s.find('/');
      size_t used = 0;
      long num = std::stol(s, &used);
      if (slash == std::string::npos) {
        if (used == s.size()) return Scalar::from_int(f, num);
      } else if (used == slash) {
        long den = std::stol(s.substr(slash + 1), &used);
        if (used == s.size() - slash - 1)
          return Scalar::from_fraction(f, num, den);
      }
    } catch (const std::exception&) {
    }
  }
  throw ParseError(source, "bad coefficient " + v.dump());
}

}  // namespace

SimplicialComplex parse_complex_text(const std::string& text,
                                     const std::string& source) {
  return complex_from_json(parse_json(text, source), source);
}

SimplicialComplex read_complex_file(const std::string& path) {
  return parse_complex_text(read_file(path), path);
}

CandidateFamily parse_sweep_text(const std::string& text,
                                 const std::string& source) {
  json j = parse_json(text, source);
  if (!j.is_object())
    throw ParseError(source, "sweep spec must be a JSON object");
  reject_unknown_keys(j, source,
                      {"complex", "order", "field", "coeff_grid", "grid_height",
                       "sampler", "deformations", "max_candidates",
                       "degree_ceiling", "power_bound", "witness_search"});
  if (!j.contains("complex"))
    throw ParseError(source, "sweep spec needs 'complex'");

  CandidateFamily fam;
  fam.delta = complex_from_json(j.at("complex"), source);
  if (j.contains("order")) {
    if (!j.at("order").is_string())
      throw ParseError(source, "'order' must be a string");
    try {
      fam.order = MonomialOrder::parse(j.at("order").get<std::string>());
    } catch (const Error& e) {
      throw ParseError(source, e.what());
    }
  }
  if (j.contains("field")) {
    if (!j.at("field").is_string())
      throw ParseError(source, "'field' must be a string");
    try {
      fam.field = Field::parse(j.at("field").get<std::string>());
    } catch (const Error& e) {
      throw ParseError(source, e.what());
    }
  }

  long grid_height = 1;
  if (j.contains("grid_height")) {
    grid_height = int_field(j, source, "grid_height");
    if (grid_height < 1)
      throw ParseError(source, "grid_height must be positive");
  }
  if (j.contains("coeff_grid") == j.contains("sampler"))
    throw ParseError(source,
                     "sweep spec needs exactly one of coeff_grid/sampler");
  if (j.contains("coeff_grid")) {
    fam.mode = CandidateFamily::Mode::exhaustive;
    const json& g = j.at("coeff_grid");
    if (g.is_string() && g.get<std::string>() == "full") {
      fam.grid = full_grid(fam.field, grid_height);
    } else if (g.is_array() && !g.empty()) {
      for (const json& v : g)
        fam.grid.push_back(scalar_from_json(fam.field, v, source));
    } else {
      throw ParseError(source,
                       "coeff_grid must be a nonempty array or \"full\"");
    }
  } else {
    const json& s = j.at("sampler");
    if (!s.is_object()) throw ParseError(source, "sampler must be an object");
    reject_unknown_keys(s, source, {"seed", "count", "height"});
    fam.mode = CandidateFamily::Mode::random;
    if (s.contains("seed"))
      fam.seed = static_cast<uint64_t>(int_field(s, source, "seed"));
    if (!s.contains("count"))
      throw ParseError(source, "sampler needs 'count'");
    fam.count = int_field(s, source, "count");
    if (fam.count < 1) throw ParseError(source, "count must be positive");
    if (s.contains("height")) {
      fam.coeff_height = int_field(s, source, "height");
      if (fam.coeff_height < 1)
        throw ParseError(source, "height must be positive");
    }
  }

  if (j.contains("deformations")) {
    const json& d = j.at("deformations");
    if (!d.is_object())
      throw ParseError(source, "deformations must be an object");
    reject_unknown_keys(d, source, {"seed", "count", "height", "moves"});
    uint64_t seed = 1;
    long count = 0, height = 2, moves = 3;
    if (d.contains("seed"))
      seed = static_cast<uint64_t>(int_field(d, source, "seed"));
    if (!d.contains("count"))
      throw ParseError(source, "deformations needs 'count'");
    count = int_field(d, source, "count");
    if (d.contains("height")) height = int_field(d, source, "height");
    if (d.contains("moves")) moves = int_field(d, source, "moves");
    if (count < 1 || height < 1 || moves < 1)
      throw ParseError(source, "deformation parameters must be positive");
    std::mt19937_64 rng(seed);
    for (long i = 0; i < count; ++i)
      fam.seeded.push_back(triangular_deformation(
          fam.delta, fam.field, rng, height, static_cast<int>(moves)));
  }

  if (j.contains("max_candidates")) {
    fam.max_candidates = int_field(j, source, "max_candidates");
    if (fam.max_candidates < 0)
      throw ParseError(source, "max_candidates must be nonnegative");
  }
  if (j.contains("degree_ceiling")) {
    long ceil = int_field(j, source, "degree_ceiling");
    if (ceil < 1) throw ParseError(source, "degree_ceiling must be positive");
    fam.gb.degree_ceiling = ceil;
    fam.smoothness.gb.degree_ceiling = ceil;
  }
  if (j.contains("power_bound")) {
    fam.smoothness.power_bound = int_field(j, source, "power_bound");
    if (fam.smoothness.power_bound < 1)
      throw ParseError(source, "power_bound must be positive");
  }
  if (j.contains("witness_search")) {
    if (!j.at("witness_search").is_boolean())
      throw ParseError(source, "witness_search must be a boolean");
    fam.smoothness.witness_search = j.at("witness_search").get<bool>();
  }
  return fam;
}

CandidateFamily read_sweep_file(const std::string& path) {
  return parse_sweep_text(read_file(path), path);
}

}  // namespace grodeg
