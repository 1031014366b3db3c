#include "nakajima/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace nakajima {

Json to_json(const Rational& q) { return rational_to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw std::invalid_argument("expected a rational, got " + j.dump());
}

Json to_json(const CycScalar& c) {
  Json a = Json::array();
  for (const auto& q : c.coeffs()) a.push_back(to_json(q));
  return a;
}

CycScalar cyc_from_json(const Json& j, int m) {
  if (!j.is_array()) return CycScalar(m, rational_from_json(j));
  std::vector<Rational> c;
  for (const auto& e : j) c.push_back(rational_from_json(e));
  return CycScalar(m, std::move(c));
}

Json to_json(const GroupAlgElem& t, bool group_basis) {
  Json j;
  j["m"] = t.m();
  Json vals = Json::array();
  if (group_basis) {
    for (const auto& c : t.group_coeffs()) vals.push_back(to_json(c));
    j["group"] = vals;
  } else {
    for (int k = 0; k < t.m(); ++k) vals.push_back(to_json(t.char_value(k)));
    j["charvals"] = vals;
  }
  return j;
}

GroupAlgElem group_from_json(const Json& j) {
  int m = j.at("m").get<int>();
  if (m < 1) throw std::invalid_argument("m must be positive");
  auto read = [&](const Json& arr) {
    if (!arr.is_array() || static_cast<int>(arr.size()) != m)
      throw std::invalid_argument("expected " + std::to_string(m) + " entries");
    std::vector<CycScalar> v;
    for (const auto& e : arr) v.push_back(cyc_from_json(e, m));
    return v;
  };
  if (j.contains("charvals")) return GroupAlgElem::from_charvals(read(j["charvals"]));
  if (j.contains("group")) return GroupAlgElem::from_group(read(j["group"]));
  throw std::invalid_argument("group algebra element needs \"charvals\" or \"group\"");
}

Json to_json(const BElem& b) {
  Json a = Json::array();
  for (const auto& t : b.group_terms()) a.push_back({{"a", t.a}, {"b", t.b}, {"g", t.g}, {"c", to_json(t.c)}});
  return a;
}

BElem belem_from_json(const Json& j, const TauPtr& ctx) {
  std::vector<BTerm> terms;
  for (const auto& e : j)
    terms.push_back({e.at("a").get<int>(), e.at("b").get<int>(), e.at("g").get<int>(), cyc_from_json(e.at("c"), ctx->m())});
  return BElem::from_terms(ctx, terms);
}

Json to_json(const QElem& q) {
  Json a = Json::array();
  for (const auto& t : q.group_terms())
    a.push_back({{"x", t.a}, {"z", t.b}, {"y", t.c}, {"w", t.d}, {"g", t.g}, {"c", to_json(t.coef)}});
  return a;
}

Json to_json(const QMatrix& a) {
  Json rows = Json::array();
  for (const auto& r : a.e) {
    Json row = Json::array();
    for (const auto& q : r) row.push_back(to_json(q));
    rows.push_back(row);
  }
  Json src = Json::array(), dst = Json::array();
  for (size_t i = 0; i < a.src.size(); ++i)
    src.push_back({{"label", a.src.labels[i]}, {"twist", {a.src.twists[i][0], a.src.twists[i][1]}}});
  for (size_t i = 0; i < a.dst.size(); ++i)
    dst.push_back({{"label", a.dst.labels[i]}, {"twist", {a.dst.twists[i][0], a.dst.twists[i][1]}}});
  return {{"source", src}, {"target", dst}, {"entries", rows}};
}

Json to_json(const BiPoly& p) {
  Json a = Json::array();
  for (const auto& [k, c] : p.terms()) a.push_back({{"x", k.first}, {"z", k.second}, {"c", to_json(c)}});
  return a;
}

Json to_json(const Poly& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(to_json(c));
  return a;
}

Poly poly_from_json(const Json& j, int m) {
  std::vector<CycScalar> c;
  for (const auto& e : j) c.push_back(cyc_from_json(e, m));
  return Poly(std::move(c));
}

Json to_json(const Matrix& a) {
  Json rows = Json::array();
  for (size_t i = 0; i < a.rows(); ++i) {
    Json row = Json::array();
    for (size_t k = 0; k < a.cols(); ++k) row.push_back(to_json(a(i, k)));
    rows.push_back(row);
  }
  return rows;
}

Matrix matrix_from_json(const Json& j, size_t rows, size_t cols, int m) {
  Matrix a(rows, cols);
  for (size_t i = 0; i < rows; ++i)
    for (size_t k = 0; k < cols; ++k) a(i, k) = CycScalar(m);
  if (!j.is_array()) throw std::invalid_argument("matrix must be an array");
  bool nested = !j.empty() && j[0].is_array() && (j[0].empty() || j[0][0].is_array() || j[0][0].is_string() ||
                                                   j[0][0].is_number());
  // A nested matrix has `rows` rows; a flat one has rows * cols scalars.
  if (nested && j.size() == rows && (rows == 0 || j[0].size() == cols) &&
      !(j.size() == rows * cols && cols == 1 && rows > 1 && j[0].size() != 1)) {
    for (size_t i = 0; i < rows; ++i) {
      if (j[i].size() != cols) throw std::invalid_argument("matrix row has the wrong length");
      for (size_t k = 0; k < cols; ++k) a(i, k) = cyc_from_json(j[i][k], m);
    }
    return a;
  }
  if (j.size() != rows * cols)
    throw std::invalid_argument("matrix needs " + std::to_string(rows) + "x" + std::to_string(cols) + " entries");
  for (size_t i = 0; i < rows; ++i)
    for (size_t k = 0; k < cols; ++k) a(i, k) = cyc_from_json(j[i * cols + k], m);
  return a;
}

Json to_json(const QuiverData& d) {
  Json j;
  j["m"] = d.m;
  j["tau"] = to_json(d.tau);
  j["dimsV"] = d.dimsV;
  j["dimsW"] = d.dimsW;
  for (const auto& [name, blocks] : {std::pair<const char*, const std::vector<Matrix>*>{"B1", &d.B1},
                                     {"B2", &d.B2},
                                     {"I", &d.I},
                                     {"J", &d.J}}) {
    Json arr = Json::array();
    for (const auto& b : *blocks) arr.push_back(to_json(b));
    j[name] = arr;
  }
  return j;
}

QuiverData quiver_from_json(const Json& j) {
  int m = j.at("m").get<int>();
  GroupAlgElem tau = group_from_json(j.at("tau"));
  if (tau.m() != m) throw std::invalid_argument("tau has the wrong m");
  auto dv = j.at("dimsV").get<std::vector<int>>();
  auto dw = j.at("dimsW").get<std::vector<int>>();
  if (static_cast<int>(dv.size()) != m || static_cast<int>(dw.size()) != m)
    throw std::invalid_argument("dimsV and dimsW need m entries");
  QuiverData d = zero_quiver(tau, dv, dw);
  auto vm = [&](int i) { return static_cast<size_t>(dv[((i % m) + m) % m]); };
  auto wm = [&](int i) { return static_cast<size_t>(dw[((i % m) + m) % m]); };
  for (int i = 0; i < m; ++i) {
    d.B1[i] = matrix_from_json(j.at("B1").at(i), vm(i - 1), vm(i), m);
    d.B2[i] = matrix_from_json(j.at("B2").at(i), vm(i + 1), vm(i), m);
    d.I[i] = matrix_from_json(j.at("I").at(i), vm(i), wm(i), m);
    d.J[i] = matrix_from_json(j.at("J").at(i), wm(i), vm(i), m);
  }
  d.validate();
  return d;
}

Json to_json(const AdelicPoint& pt) {
  Json rows = Json::array();
  for (const auto& v : pt.U.basis()) {
    Json row = Json::array();
    for (const auto& c : v) row.push_back(to_json(c));
    rows.push_back(row);
  }
  return {{"m", pt.m}, {"tau", to_json(pt.tau)}, {"W", pt.dimsW}, {"p", to_json(pt.p)}, {"U", rows}};
}

AdelicPoint adelic_from_json(const Json& j) {
  AdelicPoint pt;
  pt.m = j.at("m").get<int>();
  pt.tau = group_from_json(j.at("tau"));
  pt.dimsW = j.at("W").get<std::vector<int>>();
  pt.p = poly_from_json(j.at("p"), pt.m);
  size_t n = pt.model().dim();
  std::vector<Vec> rows;
  for (const auto& r : j.at("U")) {
    if (r.size() != n) throw std::invalid_argument("U row has the wrong length");
    Vec v;
    for (const auto& e : r) v.push_back(cyc_from_json(e, pt.m));
    rows.push_back(std::move(v));
  }
  pt.U = Subspace::span(n, rows);
  return pt;
}

GroupAlgElem parse_tau(const std::string& s, int m) {
  std::string t = s;
  while (!t.empty() && isspace(static_cast<unsigned char>(t.front()))) t.erase(t.begin());
  if (!t.empty() && t.front() == '{') {
    GroupAlgElem g = group_from_json(Json::parse(t));
    if (g.m() != m) throw std::invalid_argument("tau has m = " + std::to_string(g.m()) + ", expected " + std::to_string(m));
    return g;
  }
  std::vector<CycScalar> vals;
  std::stringstream ss(t);
  std::string item;
  while (std::getline(ss, item, ',')) vals.push_back(CycScalar(m, parse_rational(item)));
  if (vals.size() == 1) return GroupAlgElem::scalar(m, vals[0]);
  if (static_cast<int>(vals.size()) != m)
    throw std::invalid_argument("tau needs 1 or m = " + std::to_string(m) + " character values");
  return GroupAlgElem::from_charvals(std::move(vals));
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return Json::parse(in);
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << "\n";
}

std::string config_hash(const Json& config) {
  uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : config.dump()) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace nakajima
