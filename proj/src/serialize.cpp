#include "kcrystal/serialize.hpp"

#include <sstream>
#include <stdexcept>

namespace kcrystal {

namespace {

Json cell_to_json(CellSet c) { return Json(c.values()); }

CellSet cell_from_json(const Json& j) {
  CellSet c;
  for (int v : j.get<std::vector<int>>()) {
    if (v < 1 || v > kMaxEntry) throw std::invalid_argument("cell entry out of range");
    if (c.contains(v)) throw std::invalid_argument("repeated cell entry");
    c.insert(v);
  }
  if (c.empty()) throw std::invalid_argument("empty cell");
  return c;
}

Json cells_to_json(const std::set<Cell>& cells) {
  Json out = Json::array();
  for (const auto& [x, y] : cells) out.push_back({x, y});
  return out;
}

std::set<Cell> cells_from_json(const Json& j) {
  std::set<Cell> out;
  for (const auto& c : j) {
    if (!c.is_array() || c.size() != 2) throw std::invalid_argument("diagram cell must be [x,y]");
    out.emplace(c[0].get<int>(), c[1].get<int>());
  }
  return out;
}

}  // namespace

Json tableau_to_json(const SetValuedTableau& t) {
  Json rows = Json::array();
  for (const auto& row : t.rows()) {
    Json r = Json::array();
    for (CellSet c : row) r.push_back(cell_to_json(c));
    rows.push_back(std::move(r));
  }
  return Json{{"n", t.n()}, {"shape", t.shape()}, {"rows", std::move(rows)}, {"text", t.str()}};
}

SetValuedTableau tableau_from_json(const Json& j) {
  std::vector<std::vector<CellSet>> rows;
  for (const auto& r : j.at("rows")) {
    std::vector<CellSet> row;
    for (const auto& c : r) row.push_back(cell_from_json(c));
    rows.push_back(std::move(row));
  }
  return SetValuedTableau(std::move(rows), j.at("n").get<int>());
}

Json diagram_to_json(const KohnertDiagram& d) {
  return Json{{"boxes", cells_to_json(d.boxes)}, {"marked", cells_to_json(d.marked)}};
}

KohnertDiagram diagram_from_json(const Json& j) {
  KohnertDiagram d{cells_from_json(j.at("boxes")), cells_from_json(j.at("marked"))};
  if (!d.valid()) throw std::invalid_argument("diagram: marked box outside boxes or nonpositive coordinate");
  return d;
}

Json skyline_to_json(const SkylineTableau& s) {
  Json columns = Json::object();
  for (int c = 1; c <= s.n(); ++c) {
    if (s.height(c) == 0) continue;
    Json levels = Json::array();
    for (int level = 1; level <= s.height(c); ++level) levels.push_back(cell_to_json(s.at(c, level)));
    columns[std::to_string(c)] = std::move(levels);
  }
  return Json{{"shape", s.shape()}, {"columns", std::move(columns)}};
}

SkylineTableau skyline_from_json(const Json& j) {
  WeakComposition shape = j.at("shape").get<WeakComposition>();
  std::vector<std::vector<CellSet>> columns(shape.size());
  for (const auto& [key, levels] : j.at("columns").items()) {
    const int c = std::stoi(key);
    if (c < 1 || c > static_cast<int>(shape.size())) throw std::invalid_argument("skyline column out of range");
    for (const auto& cell : levels) columns[static_cast<std::size_t>(c - 1)].push_back(cell_from_json(cell));
  }
  return SkylineTableau(std::move(shape), std::move(columns));
}

Json polynomial_to_json(const BetaPolynomial& p) {
  Json terms = Json::array();
  for (const auto& [m, c] : p.terms()) terms.push_back(Json{{"coef", c}, {"beta", m.beta}, {"x", m.x}});
  return Json{{"n", p.nvars()}, {"text", p.str()}, {"terms", std::move(terms)}};
}

BetaPolynomial polynomial_from_json(const Json& j) {
  const int n = j.at("n").get<int>();
  BetaPolynomial p(n);
  for (const auto& t : j.at("terms")) {
    p += BetaPolynomial::monomial(n, t.at("x").get<std::vector<int>>(), t.at("beta").get<int>(),
                                  t.at("coef").get<BetaPolynomial::Coefficient>());
  }
  return p;
}

Json permutation_to_json(const Permutation& w) { return Json(w.word()); }

Permutation permutation_from_json(const Json& j) { return Permutation(j.get<std::vector<int>>()); }

WeakComposition parse_composition(const std::string& text) {
  WeakComposition out;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    std::size_t used = 0;
    int v = -1;
    try {
      v = std::stoi(part, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad composition part '" + part + "'");
    }
    if (used != part.size() || v < 0) throw std::invalid_argument("bad composition part '" + part + "'");
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty composition");
  return out;
}

std::string composition_str(const WeakComposition& a) {
  std::string out;
  for (std::size_t i = 0; i < a.size(); ++i) out += (i ? "," : "") + std::to_string(a[i]);
  return out;
}

}  // namespace kcrystal
