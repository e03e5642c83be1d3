#pragma once

#include "detrep/connected.hpp"
#include "detrep/matpoly.hpp"
#include "detrep/rep.hpp"
#include "detrep/twopareig.hpp"

#include "json.hpp"

#include <stdexcept>
#include <string>

namespace detrep {

using json = nlohmann::json;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// rationals travel as "p/q" strings; integers and floats are also accepted on input
json rational_to_json(const Rational& q);
Rational rational_from_json(const json& j);

json poly_to_json(const PolyQ& p);
json poly_to_json(const PolyC& p);
PolyQ poly_q_from_json(const json& j);
PolyC poly_c_from_json(const json& j);

json rep_to_json(const UniformRep& rep);
UniformRep rep_from_json(const json& j);

json set_to_json(const MonomialSet& s);
MonomialSet set_from_json(const json& j);

json matpoly_to_json(const MatrixPoly& P);
MatrixPoly matpoly_from_json(const json& j);

json rootset_to_json(const RootSet& r);
RootSet rootset_from_json(const json& j);
std::string rootset_to_csv(const RootSet& r);

json report_to_json(const VerificationReport& r);

json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace detrep
