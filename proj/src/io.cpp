#include "detrep/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace detrep {

namespace {

Exponent exp_from_json(const json& j, int n) {
  if (!j.is_array() || static_cast<int>(j.size()) != n) throw ParseError("exponent must be an array of length n");
  Exponent e;
  for (const auto& v : j) {
    if (!v.is_number_integer() || v.get<int>() < 0) throw ParseError("exponent entries must be nonnegative integers");
    e.push_back(v.get<int>());
  }
  return e;
}

int int_field(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer()) throw ParseError(std::string("missing integer field \"") + key + "\"");
  return j[key].get<int>();
}

double double_field(const json& j, const char* key, bool required = true) {
  if (!j.contains(key)) {
    if (required) throw ParseError(std::string("missing field \"") + key + "\"");
    return 0.0;
  }
  if (!j[key].is_number()) throw ParseError(std::string("field \"") + key + "\" must be a number");
  return j[key].get<double>();
}

// "p/q", "p", or a plain decimal such as "-1.25"
Rational parse_rational(const std::string& s) {
  auto dot = s.find('.');
  if (dot == std::string::npos) {
    Rational q;
    if (q.set_str(s, 10) != 0) throw ParseError("bad rational \"" + s + "\"");
    if (q.get_den() == 0) throw ParseError("zero denominator in \"" + s + "\"");
    q.canonicalize();
    return q;
  }
  std::string digits = s.substr(0, dot) + s.substr(dot + 1);
  mpz_class num, den = 1;
  if (digits.empty() || digits == "-" || num.set_str(digits, 10) != 0) throw ParseError("bad decimal \"" + s + "\"");
  for (std::size_t i = dot + 1; i < s.size(); ++i) den *= 10;
  Rational q(num, den);
  q.canonicalize();
  return q;
}

json affine_to_json(const AffineQ& a) {
  json x = json::array();
  for (const auto& v : a.x) x.push_back(rational_to_json(v));
  return {{"c", rational_to_json(a.c)}, {"x", x}};
}

AffineQ affine_from_json(const json& j, int n) {
  if (!j.is_object() || !j.contains("c") || !j.contains("x") || !j["x"].is_array())
    throw ParseError("affine entry needs \"c\" and \"x\"");
  if (static_cast<int>(j["x"].size()) != n) throw ParseError("affine \"x\" must have n entries");
  AffineQ a(n);
  a.c = rational_from_json(j["c"]);
  for (int i = 0; i < n; ++i) a.x[i] = rational_from_json(j["x"][i]);
  return a;
}

json matrix_to_json(const AffineMatrixQ& m) {
  json rows = json::array();
  for (const auto& r : m) {
    json row = json::array();
    for (const auto& a : r) row.push_back(affine_to_json(a));
    rows.push_back(row);
  }
  return rows;
}

AffineMatrixQ matrix_from_json(const json& j, int N, int n) {
  if (!j.is_array() || static_cast<int>(j.size()) != N) throw ParseError("matrix must have N rows");
  AffineMatrixQ m;
  for (const auto& r : j) {
    if (!r.is_array() || static_cast<int>(r.size()) != N) throw ParseError("matrix must have N columns");
    std::vector<AffineQ> row;
    for (const auto& a : r) row.push_back(affine_from_json(a, n));
    m.push_back(std::move(row));
  }
  return m;
}

template <class P>
json poly_json(const P& p, bool exact) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) {
    json t = {{"exp", e}};
    if constexpr (std::is_same_v<P, PolyQ>) {
      t["re"] = rational_to_json(c);
    } else {
      t["re"] = c.real();
      t["im"] = c.imag();
    }
    terms.push_back(t);
  }
  (void)exact;
  return {{"n", p.nvars()}, {"terms", terms}};
}

}  // namespace

json rational_to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_number_float()) return Rational(j.get<double>());
  throw ParseError("rational must be a string or number");
}

json poly_to_json(const PolyQ& p) { return poly_json(p, true); }
json poly_to_json(const PolyC& p) { return poly_json(p, false); }

PolyQ poly_q_from_json(const json& j) {
  int n = int_field(j, "n");
  if (n < 0) throw ParseError("n must be nonnegative");
  if (!j.contains("terms") || !j["terms"].is_array()) throw ParseError("missing \"terms\" array");
  PolyQ p(n);
  for (const auto& t : j["terms"]) {
    if (t.contains("im") && rational_from_json(t["im"]) != 0) throw ParseError("complex coefficient where a rational is required");
    if (!t.contains("re")) throw ParseError("term without \"re\"");
    p.add_term(exp_from_json(t["exp"], n), rational_from_json(t["re"]));
  }
  return p;
}

PolyC poly_c_from_json(const json& j) {
  int n = int_field(j, "n");
  if (n < 0) throw ParseError("n must be nonnegative");
  if (!j.contains("terms") || !j["terms"].is_array()) throw ParseError("missing \"terms\" array");
  PolyC p(n);
  for (const auto& t : j["terms"]) {
    if (!t.contains("re")) throw ParseError("term without \"re\"");
    double re = t["re"].is_string() ? rational_from_json(t["re"]).get_d() : double_field(t, "re");
    double im = 0.0;
    if (t.contains("im")) im = t["im"].is_string() ? rational_from_json(t["im"]).get_d() : double_field(t, "im");
    p.add_term(exp_from_json(t["exp"], n), Complex(re, im));
  }
  return p;
}

json rep_to_json(const UniformRep& rep) {
  json j = {{"n", rep.n}, {"d", rep.d}, {"N", rep.N}, {"M0", matrix_to_json(rep.M0)}};
  json ma = json::array();
  for (const auto& [alpha, cells] : rep.Malpha) ma.push_back({{"exp", alpha}, {"mat", matrix_to_json(rep.dense(alpha))}});
  j["Malpha"] = ma;
  if (!rep.method.empty()) j["method"] = rep.method;
  j["lift_warranted"] = rep.lift_warranted;
  return j;
}

UniformRep rep_from_json(const json& j) {
  int n = int_field(j, "n"), d = int_field(j, "d"), N = int_field(j, "N");
  if (n < 0 || d < 0 || N < 0) throw ParseError("n, d, N must be nonnegative");
  UniformRep rep(n, d, N);
  if (!j.contains("M0")) throw ParseError("missing \"M0\"");
  rep.M0 = matrix_from_json(j["M0"], N, n);
  if (!j.contains("Malpha") || !j["Malpha"].is_array()) throw ParseError("missing \"Malpha\" array");
  for (const auto& e : j["Malpha"]) {
    Exponent alpha = exp_from_json(e["exp"], n);
    if (total_degree(alpha) > d) throw ParseError("Malpha exponent exceeds degree d");
    AffineMatrixQ m = matrix_from_json(e["mat"], N, n);
    for (int r = 0; r < N; ++r)
      for (int c = 0; c < N; ++c)
        if (!m[r][c].is_zero()) rep.add(alpha, r, c, m[r][c]);
  }
  if (j.contains("method") && j["method"].is_string()) rep.method = j["method"].get<std::string>();
  if (j.contains("lift_warranted") && j["lift_warranted"].is_boolean()) rep.lift_warranted = j["lift_warranted"].get<bool>();
  return rep;
}

json set_to_json(const MonomialSet& s) {
  json parents = json::array();
  for (const auto& p : s.parents) parents.push_back({{"child", p.child}, {"parent", p.parent}, {"var", p.var}});
  return {{"n", s.n}, {"members", s.members}, {"parents", parents}};
}

MonomialSet set_from_json(const json& j) {
  int n = int_field(j, "n");
  if (!j.contains("members") || !j["members"].is_array()) throw ParseError("missing \"members\" array");
  std::vector<Exponent> members;
  for (const auto& m : j["members"]) members.push_back(exp_from_json(m, n));
  auto res = check_connected(n, members);
  if (!res) throw ParseError("monomial set is not connected: " + res.error);
  MonomialSet s = *res.set;
  // keep the stored parent edges when they are consistent
  if (j.contains("parents") && j["parents"].is_array()) {
    std::vector<ParentEdge> edges;
    for (const auto& p : j["parents"]) {
      ParentEdge e{int_field(p, "child"), int_field(p, "parent"), int_field(p, "var")};
      if (e.child < 0 || e.child >= s.size() || e.parent < 0 || e.parent >= s.size() || e.var < 0 || e.var >= n)
        throw ParseError("parent edge out of range");
      Exponent up = s.members[e.parent];
      up[e.var] += 1;
      if (up != s.members[e.child]) throw ParseError("parent edge does not differ by one variable");
      edges.push_back(e);
    }
    if (edges.size() == s.parents.size()) s.parents = edges;
  }
  return s;
}

json matpoly_to_json(const MatrixPoly& P) {
  json terms = json::array();
  for (const auto& [alpha, c] : P.C) {
    json mat = json::array();
    for (const auto& row : c) {
      json r = json::array();
      for (const auto& v : row) r.push_back(rational_to_json(v));
      mat.push_back(r);
    }
    terms.push_back({{"exp", alpha}, {"mat", mat}});
  }
  return {{"n", P.n}, {"d", P.d}, {"k", P.k}, {"terms", terms}};
}

MatrixPoly matpoly_from_json(const json& j) {
  MatrixPoly P{int_field(j, "n"), int_field(j, "d"), int_field(j, "k"), {}};
  if (!j.contains("terms") || !j["terms"].is_array()) throw ParseError("missing \"terms\" array");
  for (const auto& t : j["terms"]) {
    Exponent alpha = exp_from_json(t["exp"], P.n);
    const json& mat = t["mat"];
    if (!mat.is_array() || static_cast<int>(mat.size()) != P.k) throw ParseError("coefficient matrix must be k x k");
    MatrixQ c;
    for (const auto& row : mat) {
      if (!row.is_array() || static_cast<int>(row.size()) != P.k) throw ParseError("coefficient matrix must be k x k");
      std::vector<Rational> r;
      for (const auto& v : row) r.push_back(rational_from_json(v));
      c.push_back(std::move(r));
    }
    P.C[alpha] = std::move(c);
  }
  return P;
}

json rootset_to_json(const RootSet& r) {
  json roots = json::array();
  for (const auto& x : r.roots)
    roots.push_back({{"x_re", x.x.real()}, {"x_im", x.x.imag()}, {"y_re", x.y.real()}, {"y_im", x.y.imag()}, {"residual", x.residual}});
  json j = {{"roots", roots}, {"reduced_size", r.reduced_size}, {"retries", r.retries}, {"status", r.status}};
  if (!r.failure.empty()) j["failure"] = r.failure;
  return j;
}

RootSet rootset_from_json(const json& j) {
  RootSet r;
  if (!j.contains("roots") || !j["roots"].is_array()) throw ParseError("missing \"roots\" array");
  for (const auto& x : j["roots"]) {
    Root t;
    t.x = {double_field(x, "x_re"), double_field(x, "x_im")};
    t.y = {double_field(x, "y_re"), double_field(x, "y_im")};
    t.residual = double_field(x, "residual");
    r.roots.push_back(t);
  }
  r.reduced_size = int_field(j, "reduced_size");
  r.retries = int_field(j, "retries");
  if (!j.contains("status") || !j["status"].is_string()) throw ParseError("missing \"status\"");
  r.status = j["status"].get<std::string>();
  if (r.status != "ok" && r.status != "partial" && r.status != "failed") throw ParseError("unknown status \"" + r.status + "\"");
  if (j.contains("failure") && j["failure"].is_string()) r.failure = j["failure"].get<std::string>();
  return r;
}

std::string rootset_to_csv(const RootSet& r) {
  std::string out = "x_re,x_im,y_re,y_im,residual\n";
  char buf[160];
  for (const auto& x : r.roots) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g\n", x.x.real(), x.x.imag(), x.y.real(), x.y.imag(), x.residual);
    out += buf;
  }
  return out;
}

json report_to_json(const VerificationReport& r) {
  json j = {{"mode", r.mode == VerifyMode::Symbolic ? "symbolic" : "random"}, {"pass", r.pass}, {"trials", r.trials}};
  if (r.mode == VerifyMode::Randomized) j["failure_bound"] = r.failure_bound;
  auto vec = [](const std::vector<Rational>& v) {
    json a = json::array();
    for (const auto& q : v) a.push_back(rational_to_json(q));
    return a;
  };
  if (r.witness_x) j["witness_x"] = vec(*r.witness_x);
  if (r.witness_c) j["witness_c"] = vec(*r.witness_c);
  return j;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

}  // namespace detrep
