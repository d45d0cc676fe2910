#pragma once

#include <string>

#include <json.hpp>

#include "hrnum/characters.hpp"
#include "hrnum/cone.hpp"
#include "hrnum/polynomial.hpp"

namespace hrnum::cli {

using Json = nlohmann::ordered_json;

// Malformed input file or argument; always exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ConeSpec {
  Cone cone;
  std::string name;
};

std::string read_file(const std::string& path);

// Parses JSON text, reporting syntax errors as "<source>:<line>:<column>: ...".
Json parse_json(const std::string& text, const std::string& source);

ConeSpec parse_cone_spec(const Json& doc, const std::string& source);
ConeSpec read_cone_spec(const std::string& path);

// {"terms": [{"coeff": [re, im], "exp": [...]}, ...]}; a bare list of
// [re, im, [exps]] triples is also accepted.
Polynomial parse_polynomial(const Json& doc, std::size_t rank, const std::string& source);
Polynomial read_polynomial(const std::string& path, std::size_t rank);

// [{"exponent": [...], "value": [re, im]}, ...], optionally wrapped as {"values": [...]}.
SemicharacterSample parse_sample(const Json& doc, std::size_t rank, const std::string& source);
SemicharacterSample read_sample(const std::string& path, std::size_t rank);

// Comma-separated integers, e.g. "1,2".
LatticePoint parse_point(const std::string& text, std::size_t rank, const std::string& what);

Json to_json(const LatticePoint& p);
Json to_json(Complex z);
Json to_json(const std::vector<LatticePoint>& pts);

// Compact JSON with every float written to 17 significant digits.
std::string dump(const Json& doc);

}  // namespace hrnum::cli
