#include "vla/json_io.hpp"

#include "vla/errors.hpp"

namespace vla {

json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const json& j) {
  if (!j.is_string()) throw ParseError("rational must be a JSON string");
  return parse_rational(j.get<std::string>());
}

json to_json(LatticeVec v) { return json::array({v.x, v.y}); }

LatticeVec lattice_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() ||
      !j[1].is_number_integer())
    throw ParseError("lattice vector must be [int, int]");
  return {j[0].get<long>(), j[1].get<long>()};
}

json to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("matrix must be a non-empty array");
  std::size_t rows = j.size();
  if (!j[0].is_array() || j[0].empty()) throw ParseError("matrix rows must be arrays");
  std::size_t cols = j[0].size();
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols)
      throw ParseError("ragged matrix rows");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = rational_from_json(j[i][k]);
  }
  return m;
}

json to_json(const LieElement& e) {
  json out = json::array();
  for (const auto& [sym, c] : e.terms()) {
    json rec;
    if (sym.kind == BasisSymbol::Kind::Fun)
      rec["symbol"] = json{{"fun", to_json(sym.site)}};
    else
      rec["symbol"] = json{{"vec", to_json(sym.site)}, {"axis", sym.axis}};
    rec["coefficient"] = to_json(c);
    out.push_back(std::move(rec));
  }
  return out;
}

LieElement lie_element_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("Lie element must be an array of records");
  LieElement e;
  for (const json& rec : j) {
    const json& sym = rec.at("symbol");
    Rational c = rational_from_json(rec.at("coefficient"));
    if (sym.contains("fun"))
      e.add_term({BasisSymbol::Kind::Fun, lattice_from_json(sym.at("fun")), 0}, c);
    else
      e.add_term({BasisSymbol::Kind::Vec, lattice_from_json(sym.at("vec")),
                  sym.at("axis").get<int>()},
                 c);
  }
  return e;
}

json to_json(const Sl2Triple& t) {
  return json{{"dim", t.dim},
              {"E", to_json(t.E)},
              {"F", to_json(t.F)},
              {"H", to_json(t.H)}};
}

Sl2Triple triple_from_json(const json& j) {
  Sl2Triple t;
  t.dim = j.at("dim").get<std::size_t>();
  t.E = matrix_from_json(j.at("E"));
  t.F = matrix_from_json(j.at("F"));
  t.H = matrix_from_json(j.at("H"));
  if (t.E.rows() != t.dim || t.F.rows() != t.dim || t.H.rows() != t.dim)
    throw ParseError("triple matrices disagree with dim");
  return t;
}

json to_json(const ModuleVector& m) {
  json out = json::array();
  for (const auto& [deg, coords] : m.support()) {
    json cs = json::array();
    for (const Rational& c : coords) cs.push_back(to_json(c));
    out.push_back(json{{"degree", to_json(deg)}, {"coords", std::move(cs)}});
  }
  return out;
}

ModuleVector module_vector_from_json(const json& j) {
  ModuleVector m;
  for (const json& rec : j) {
    std::vector<Rational> coords;
    for (const json& c : rec.at("coords")) coords.push_back(rational_from_json(c));
    m.add(lattice_from_json(rec.at("degree")), coords);
  }
  return m;
}

json params_to_json(const ModuleParams& p) {
  return json{{"lambda", p.lambda},
              {"alpha", json::array({to_json(p.alpha[0]), to_json(p.alpha[1])})},
              {"mu", to_json(p.mu)}};
}

ModuleParams params_from_json(const json& j) {
  const json& alpha = j.at("alpha");
  if (!alpha.is_array() || alpha.size() != 2)
    throw ParseError("alpha must have two components");
  return ModuleParams::make(
      j.at("lambda").get<unsigned>(),
      {rational_from_json(alpha[0]), rational_from_json(alpha[1])},
      rational_from_json(j.at("mu")));
}

json to_json(const TExpression& e) {
  json out = json::array();
  for (const auto& [u, c] : e.terms())
    out.push_back(json{{"u", to_json(u)}, {"coeff", to_json(c)}});
  return out;
}

TExpression t_expression_from_json(const json& j) {
  TExpression e;
  for (const json& rec : j)
    e.add_term(lattice_from_json(rec.at("u")), rational_from_json(rec.at("coeff")));
  return e;
}

json to_json(const DeltaDescriptor& d) {
  json slots = json::array();
  for (LatticeVec u : d.slots) slots.push_back(to_json(u));
  return json{{"coeff", to_json(d.coeff)},
              {"base", to_json(d.base)},
              {"slots", std::move(slots)}};
}

DeltaDescriptor delta_descriptor_from_json(const json& j) {
  DeltaDescriptor d;
  d.coeff = rational_from_json(j.at("coeff"));
  d.base = lattice_from_json(j.at("base"));
  for (const json& u : j.at("slots")) d.slots.push_back(lattice_from_json(u));
  return d;
}

json realization_to_json(const TRealization& real) {
  json samples = json::array();
  for (LatticeVec p : real.known_points())
    samples.push_back(json{{"r", to_json(p)}, {"matrix", to_json(real.eval(p))}});
  return json{{"dim", real.dim()}, {"samples", std::move(samples)}};
}

TRealization realization_from_json(const json& j) {
  std::size_t dim = j.at("dim").get<std::size_t>();
  std::map<LatticeVec, Matrix> table;
  for (const json& rec : j.at("samples")) {
    LatticeVec p = lattice_from_json(rec.at("r"));
    if (p.is_zero()) continue;  // eval(0) = 0 is implicit
    table.emplace(p, matrix_from_json(rec.at("matrix")));
  }
  return TRealization::from_samples(dim, std::move(table));
}

json to_json(const IdentificationResult& r) {
  return json{{"alpha", json::array({to_json(r.alpha[0]), to_json(r.alpha[1])})},
              {"lambda", r.lambda},
              {"tau1", to_json(r.tau1)},
              {"tau2", to_json(r.tau2)},
              {"triple", to_json(r.triple)},
              {"change_of_basis", to_json(r.change_of_basis)}};
}

}  // namespace vla
