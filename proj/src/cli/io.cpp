#include "cli/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

namespace hrnum::cli {

namespace {

[[noreturn]] void field_error(const std::string& source, const std::string& field, const std::string& msg) {
  throw InputError(source + ": field '" + field + "': " + msg);
}

Coord to_coord(const Json& v, const std::string& source, const std::string& field) {
  if (v.is_number_unsigned()) {
    const auto u = v.get<std::uint64_t>();
    if (u > static_cast<std::uint64_t>(std::numeric_limits<Coord>::max()))
      field_error(source, field, "integer out of range");
    return static_cast<Coord>(u);
  }
  if (!v.is_number_integer()) field_error(source, field, "expected an integer, got " + v.dump());
  return v.get<Coord>();
}

double to_double(const Json& v, const std::string& source, const std::string& field) {
  if (!v.is_number()) field_error(source, field, "expected a number, got " + v.dump());
  return v.get<double>();
}

LatticePoint to_point(const Json& v, const std::string& source, const std::string& field) {
  if (!v.is_array()) field_error(source, field, "expected an integer vector");
  std::vector<Coord> c;
  for (std::size_t i = 0; i < v.size(); ++i)
    c.push_back(to_coord(v[i], source, field + "[" + std::to_string(i) + "]"));
  return LatticePoint(std::move(c));
}

LatticePoint to_point_of_rank(const Json& v, std::size_t rank, const std::string& source,
                              const std::string& field) {
  auto p = to_point(v, source, field);
  if (p.rank() != rank)
    field_error(source, field, "expected " + std::to_string(rank) + " coordinates, got " +
                                   std::to_string(p.rank()));
  return p;
}

Complex to_complex(const Json& v, const std::string& source, const std::string& field) {
  if (v.is_number()) return Complex(v.get<double>(), 0.0);
  if (!v.is_array() || v.size() != 2) field_error(source, field, "expected [re, im]");
  return Complex(to_double(v[0], source, field + "[0]"), to_double(v[1], source, field + "[1]"));
}

std::string format_double(double x) {
  if (!std::isfinite(x)) return "null";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write(std::ostringstream& os, const Json& v, int indent) {
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  const std::string close(static_cast<std::size_t>(indent), ' ');
  switch (v.type()) {
    case Json::value_t::object: {
      if (v.empty()) {
        os << "{}";
        return;
      }
      os << "{\n";
      bool first = true;
      for (const auto& [k, x] : v.items()) {
        if (!first) os << ",\n";
        first = false;
        os << pad << Json(k).dump() << ": ";
        write(os, x, indent + 2);
      }
      os << "\n" << close << "}";
      return;
    }
    case Json::value_t::array: {
      // Arrays of scalars stay on one line.
      bool flat = true;
      for (const auto& x : v) flat = flat && !x.is_structured();
      if (v.empty() || flat) {
        os << "[";
        for (std::size_t i = 0; i < v.size(); ++i) {
          if (i) os << ", ";
          write(os, v[i], indent);
        }
        os << "]";
        return;
      }
      os << "[\n";
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",\n";
        os << pad;
        write(os, v[i], indent + 2);
      }
      os << "\n" << close << "]";
      return;
    }
    case Json::value_t::number_float:
      os << format_double(v.get<double>());
      return;
    default:
      os << v.dump();
  }
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json parse_json(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, col = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string what = e.what();
    if (const auto pos = what.find(": "); pos != std::string::npos) what = what.substr(pos + 2);
    throw InputError(source + ":" + std::to_string(line) + ":" + std::to_string(col) +
                     ": malformed JSON: " + what);
  }
}

ConeSpec parse_cone_spec(const Json& doc, const std::string& source) {
  if (!doc.is_object()) throw InputError(source + ": expected a JSON object with 'rank' and 'generators'");
  if (!doc.contains("rank")) field_error(source, "rank", "missing");
  if (!doc.contains("generators")) field_error(source, "generators", "missing");
  const Coord rank = to_coord(doc["rank"], source, "rank");
  if (rank < 1) field_error(source, "rank", "must be at least 1");
  const auto& gens = doc["generators"];
  if (!gens.is_array()) field_error(source, "generators", "expected a list of integer vectors");
  std::vector<LatticePoint> pts;
  for (std::size_t i = 0; i < gens.size(); ++i)
    pts.push_back(to_point(gens[i], source, "generators[" + std::to_string(i) + "]"));
  std::string name;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) field_error(source, "name", "expected a string");
    name = doc["name"].get<std::string>();
  }
  try {
    return ConeSpec{validate_cone(static_cast<std::size_t>(rank), std::move(pts)), name};
  } catch (const Error& e) {
    throw InputError(source + ": invalid cone: " + e.what());
  }
}

ConeSpec read_cone_spec(const std::string& path) {
  return parse_cone_spec(parse_json(read_file(path), path), path);
}

Polynomial parse_polynomial(const Json& doc, std::size_t rank, const std::string& source) {
  Polynomial p(rank);
  auto add = [&](const LatticePoint& e, Complex c, const std::string& field) {
    if (!e.is_nonnegative()) field_error(source, field, "exponent " + e.to_string() + " is negative");
    p.add_term(e, c);
  };
  if (doc.is_array()) {
    for (std::size_t i = 0; i < doc.size(); ++i) {
      const std::string field = "[" + std::to_string(i) + "]";
      const auto& t = doc[i];
      if (!t.is_array() || t.size() != 3) field_error(source, field, "expected [re, im, [exponents]]");
      const Complex c(to_double(t[0], source, field + "[0]"), to_double(t[1], source, field + "[1]"));
      add(to_point_of_rank(t[2], rank, source, field + "[2]"), c, field);
    }
    return p;
  }
  if (!doc.is_object() || !doc.contains("terms") || !doc["terms"].is_array())
    throw InputError(source + ": expected {\"terms\": [...]} or a list of [re, im, [exponents]]");
  const auto& terms = doc["terms"];
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string field = "terms[" + std::to_string(i) + "]";
    const auto& t = terms[i];
    if (!t.is_object()) field_error(source, field, "expected {\"coeff\": [re, im], \"exp\": [...]}");
    if (!t.contains("coeff")) field_error(source, field + ".coeff", "missing");
    if (!t.contains("exp")) field_error(source, field + ".exp", "missing");
    add(to_point_of_rank(t["exp"], rank, source, field + ".exp"),
        to_complex(t["coeff"], source, field + ".coeff"), field);
  }
  return p;
}

Polynomial read_polynomial(const std::string& path, std::size_t rank) {
  return parse_polynomial(parse_json(read_file(path), path), rank, path);
}

SemicharacterSample parse_sample(const Json& doc, std::size_t rank, const std::string& source) {
  const Json* list = &doc;
  std::string prefix;
  if (doc.is_object() && doc.contains("values")) {
    list = &doc["values"];
    prefix = "values";
  }
  if (!list->is_array()) throw InputError(source + ": expected a list of {\"exponent\", \"value\"} entries");
  SemicharacterSample chi;
  for (std::size_t i = 0; i < list->size(); ++i) {
    const std::string field = prefix + "[" + std::to_string(i) + "]";
    const auto& e = (*list)[i];
    if (!e.is_object()) field_error(source, field, "expected {\"exponent\": [...], \"value\": [re, im]}");
    if (!e.contains("exponent")) field_error(source, field + ".exponent", "missing");
    if (!e.contains("value")) field_error(source, field + ".value", "missing");
    const auto s = to_point_of_rank(e["exponent"], rank, source, field + ".exponent");
    if (chi.values.count(s)) field_error(source, field + ".exponent", "duplicate exponent " + s.to_string());
    chi.values[s] = to_complex(e["value"], source, field + ".value");
  }
  return chi;
}

SemicharacterSample read_sample(const std::string& path, std::size_t rank) {
  return parse_sample(parse_json(read_file(path), path), rank, path);
}

LatticePoint parse_point(const std::string& text, std::size_t rank, const std::string& what) {
  std::vector<Coord> c;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw InputError(what + ": expected comma-separated integers, got '" + text + "'");
    c.push_back(v);
  }
  if (c.size() != rank)
    throw InputError(what + ": expected " + std::to_string(rank) + " coordinates, got " + std::to_string(c.size()));
  return LatticePoint(std::move(c));
}

Json to_json(const LatticePoint& p) {
  Json a = Json::array();
  for (std::size_t i = 0; i < p.rank(); ++i) a.push_back(p[i]);
  return a;
}

Json to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const std::vector<LatticePoint>& pts) {
  Json a = Json::array();
  for (const auto& p : pts) a.push_back(to_json(p));
  return a;
}

std::string dump(const Json& doc) {
  std::ostringstream os;
  write(os, doc, 0);
  os << "\n";
  return os.str();
}

}  // namespace hrnum::cli
