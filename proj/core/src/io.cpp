#include "trideg/io.hpp"

#include <fstream>
#include <sstream>

#include "trideg/error.hpp"

namespace trideg::io {

namespace {

template <typename F>
auto guard(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw InputError(std::string(what) + ": " + e.what());
  }
}

const json& member(const json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string(what) + ": missing \"" + key + "\"");
  return j.at(key);
}

int parse_degree(const std::string& s) {
  std::size_t used = 0;
  int n = 0;
  try {
    n = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw InputError("degree key \"" + s + "\" is not a decimal integer");
  return n;
}

json blocks_to_json(const Algebra& alg, const Blocks& b) {
  json out = json::object();
  for (const auto& [n, m] : b) {
    if (!m.is_zero()) out[std::to_string(n)] = to_json(alg, m);
  }
  return out;
}

Blocks blocks_from_json(const Algebra& alg, const json& j, const Complex& src, const Complex& tgt, int degree) {
  Blocks out;
  if (j.is_null()) return out;
  if (!j.is_object()) throw InputError("map components must be an object keyed by degree");
  for (const auto& [key, val] : j.items()) {
    const int n = parse_degree(key);
    out.emplace(n, matrix_from_json(alg, val, tgt.rank(n + degree), src.rank(n)));
  }
  return out;
}

}  // namespace

json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

// --- algebra -----------------------------------------------------------------

json to_json(const QuiverPresentation& q) {
  json arrows = json::array();
  for (const auto& a : q.arrows) {
    arrows.push_back({{"name", a.name}, {"source", q.vertices.at(a.source)}, {"target", q.vertices.at(a.target)}});
  }
  json rels = json::array();
  for (const auto& r : q.relations) {
    json path = json::array();
    for (auto a : r) path.push_back(q.arrows.at(a).name);
    rels.push_back(path);
  }
  json out{{"field", q.field}, {"vertices", q.vertices}, {"arrows", arrows}, {"relations", rels}};
  if (q.nilpotency_bound) out["nilpotency_bound"] = *q.nilpotency_bound;
  return out;
}

QuiverPresentation presentation_from_json(const json& j) {
  return guard("algebra", [&] {
    QuiverPresentation q;
    q.field = j.value("field", 2u);
    for (const auto& v : member(j, "vertices", "algebra")) q.vertices.push_back(v.get<std::string>());
    auto vertex = [&](const std::string& name) {
      for (std::size_t i = 0; i < q.vertices.size(); ++i) {
        if (q.vertices[i] == name) return i;
      }
      throw InputError("algebra: unknown vertex \"" + name + "\"");
    };
    if (j.contains("arrows")) {
      for (const auto& a : j.at("arrows")) {
        q.arrows.push_back(Arrow{member(a, "name", "arrow").get<std::string>(),
                                 vertex(member(a, "source", "arrow").get<std::string>()),
                                 vertex(member(a, "target", "arrow").get<std::string>())});
      }
    }
    if (j.contains("relations")) {
      for (const auto& r : j.at("relations")) {
        std::vector<std::size_t> path;
        for (const auto& name : r) {
          const std::string s = name.get<std::string>();
          std::size_t k = 0;
          while (k < q.arrows.size() && q.arrows[k].name != s) ++k;
          if (k == q.arrows.size()) throw InputError("algebra: relation uses unknown arrow \"" + s + "\"");
          path.push_back(k);
        }
        q.relations.push_back(std::move(path));
      }
    }
    if (j.contains("nilpotency_bound") && !j.at("nilpotency_bound").is_null()) {
      q.nilpotency_bound = j.at("nilpotency_bound").get<std::size_t>();
    }
    return q;
  });
}

AlgebraPtr algebra_from_json(const json& j) { return Algebra::build(presentation_from_json(j)); }

AlgebraPtr resolve_algebra(const json& j, const std::filesystem::path& base, const AlgebraPtr& inherited) {
  if (!j.is_object() || !j.contains("algebra")) {
    if (inherited) return inherited;
    throw InputError("missing \"algebra\"");
  }
  const json& a = j.at("algebra");
  if (a.is_string()) {
    std::filesystem::path p = a.get<std::string>();
    if (p.is_relative()) p = base / p;
    return algebra_from_json(read_json(p));
  }
  return algebra_from_json(a);
}

// --- elements and matrices -----------------------------------------------------

json to_json(const Algebra& alg, const AlgebraElement& e) {
  json out = json::object();
  for (std::size_t i = 0; i < e.dimension(); ++i) {
    if (e[i] != 0) out[alg.path_name(i)] = e[i];
  }
  return out;
}

AlgebraElement element_from_json(const Algebra& alg, const json& j) {
  return guard("algebra element", [&] {
    AlgebraElement e = alg.zero();
    if (j.is_number_integer()) {
      if (j.get<std::int64_t>() != 0) throw InputError("algebra element: bare nonzero scalar; use {\"e_v\": c}");
      return e;
    }
    if (!j.is_object()) throw InputError("algebra element must be an object {path: coeff}");
    for (const auto& [name, c] : j.items()) {
      auto p = alg.parse_path(name);
      if (!p) throw InputError("unknown or vanishing path \"" + name + "\"");
      e.set(*p, alg.field().add(e[*p], alg.field().reduce(c.get<std::int64_t>())));
    }
    return e;
  });
}

json to_json(const Algebra& alg, const AlgMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(alg, m(i, j)));
    out.push_back(row);
  }
  return out;
}

AlgMatrix matrix_from_json(const Algebra& alg, const json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows) {
    throw InputError("matrix: expected " + std::to_string(rows) + " rows");
  }
  AlgMatrix m(rows, cols, alg.dimension());
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) {
      throw InputError("matrix: row " + std::to_string(i) + " must have " + std::to_string(cols) + " entries");
    }
    for (std::size_t c = 0; c < cols; ++c) m.at(i, c) = element_from_json(alg, j[i][c]);
  }
  return m;
}

// --- complexes and maps ------------------------------------------------------

json to_json(const Complex& x, bool with_algebra) {
  const Algebra& alg = x.algebra();
  json terms = json::object();
  for (const auto& [n, t] : x.terms()) {
    json names = json::array();
    for (auto v : t) names.push_back(alg.vertex_name(v));
    terms[std::to_string(n)] = names;
  }
  json out{{"terms", terms}, {"differentials", blocks_to_json(alg, x.differentials())}};
  if (with_algebra) out["algebra"] = to_json(alg.presentation());
  return out;
}

Complex complex_from_json(const json& j, const AlgebraPtr& alg) {
  return guard("complex", [&] {
    Terms terms;
    for (const auto& [key, val] : member(j, "terms", "complex").items()) {
      std::vector<std::size_t> t;
      for (const auto& v : val) t.push_back(alg->vertex_index(v.get<std::string>()));
      terms.emplace(parse_degree(key), std::move(t));
    }
    auto rank = [&](int n) {
      auto it = terms.find(n);
      return it == terms.end() ? std::size_t{0} : it->second.size();
    };
    Blocks d;
    if (j.contains("differentials")) {
      for (const auto& [key, val] : j.at("differentials").items()) {
        const int n = parse_degree(key);
        d.emplace(n, matrix_from_json(*alg, val, rank(n + 1), rank(n)));
      }
    }
    return Complex(alg, std::move(terms), std::move(d));
  });
}

json to_json(const ChainMap& f, bool with_algebra) {
  json out{{"source", to_json(f.source())},
           {"target", to_json(f.target())},
           {"components", blocks_to_json(f.source().algebra(), f.components())}};
  if (with_algebra) out["algebra"] = to_json(f.source().algebra().presentation());
  return out;
}

ChainMap map_from_json(const json& j, const AlgebraPtr& alg) {
  return guard("map", [&] {
    Complex src = complex_from_json(member(j, "source", "map"), alg);
    Complex tgt = complex_from_json(member(j, "target", "map"), alg);
    Blocks b = blocks_from_json(*alg, j.contains("components") ? j.at("components") : json(), src, tgt, 0);
    return ChainMap(std::move(src), std::move(tgt), std::move(b));
  });
}

json to_json(const Homotopy& h) {
  return json{{"source", to_json(h.source())},
              {"target", to_json(h.target())},
              {"components", blocks_to_json(h.source().algebra(), h.components())}};
}

Homotopy homotopy_from_json(const json& j, const AlgebraPtr& alg) {
  return guard("homotopy", [&] {
    Complex src = complex_from_json(member(j, "source", "homotopy"), alg);
    Complex tgt = complex_from_json(member(j, "target", "homotopy"), alg);
    Blocks b = blocks_from_json(*alg, j.contains("components") ? j.at("components") : json(), src, tgt, -1);
    return Homotopy(std::move(src), std::move(tgt), std::move(b));
  });
}

json to_json(const IsoCertificate& c) {
  return json{{"map", to_json(c.map)}, {"inverse", to_json(c.inverse)}, {"contraction", to_json(c.contraction)}};
}

IsoCertificate iso_from_json(const json& j, const AlgebraPtr& alg) {
  return IsoCertificate{map_from_json(member(j, "map", "iso"), alg), map_from_json(member(j, "inverse", "iso"), alg),
                        homotopy_from_json(member(j, "contraction", "iso"), alg)};
}

json to_json(const Triangle& t) {
  json cert;
  if (t.is_standard()) {
    cert = json{{"kind", "standard"}};
  } else {
    cert = json{{"kind", "transported"},
                {"comparison", to_json(t.transport->comparison)},
                {"inclusion_square", to_json(t.transport->inclusion_square)},
                {"projection_square", to_json(t.transport->projection_square)}};
  }
  return json{{"f", to_json(t.f)},           {"g", to_json(t.g)},
              {"h", to_json(t.h)},           {"gf_null", to_json(t.gf_null)},
              {"hg_null", to_json(t.hg_null)}, {"certificate", cert}};
}

Triangle triangle_from_json(const json& j, const AlgebraPtr& alg) {
  return guard("triangle", [&] {
    Triangle t{map_from_json(member(j, "f", "triangle"), alg),
               map_from_json(member(j, "g", "triangle"), alg),
               map_from_json(member(j, "h", "triangle"), alg),
               homotopy_from_json(member(j, "gf_null", "triangle"), alg),
               homotopy_from_json(member(j, "hg_null", "triangle"), alg),
               std::nullopt};
    const json& c = member(j, "certificate", "triangle");
    const std::string kind = member(c, "kind", "certificate").get<std::string>();
    if (kind == "transported") {
      t.transport = TransportCertificate{iso_from_json(member(c, "comparison", "certificate"), alg),
                                         homotopy_from_json(member(c, "inclusion_square", "certificate"), alg),
                                         homotopy_from_json(member(c, "projection_square", "certificate"), alg)};
    } else if (kind != "standard") {
      throw InputError("triangle certificate kind must be \"standard\" or \"transported\"");
    }
    return t;
  });
}

json to_json(const NilpotencyCertificate& c) {
  return json{{"exponent", c.exponent}, {"homotopy", to_json(c.homotopy)}};
}

json to_json(const DegenerationWitness& w, bool with_algebra) {
  json out{{"side", to_string(w.side)},
           {"M", to_json(w.m)},
           {"N", to_json(w.n)},
           {"Z", to_json(w.z)},
           {"v", to_json(w.v)},
           {"u", to_json(w.u)},
           {"triangle", to_json(w.triangle)},
           {"nil", w.nil ? to_json(*w.nil) : json()}};
  if (with_algebra) out["algebra"] = to_json(w.m.algebra().presentation());
  return out;
}

DegenerationWitness witness_from_json(const json& j, const AlgebraPtr& alg) {
  return guard("witness", [&] {
    const std::string side = member(j, "side", "witness").get<std::string>();
    if (side != "left" && side != "right") throw InputError("witness side must be \"left\" or \"right\"");
    DegenerationWitness w{side == "left" ? Side::left : Side::right,
                          complex_from_json(member(j, "M", "witness"), alg),
                          complex_from_json(member(j, "N", "witness"), alg),
                          complex_from_json(member(j, "Z", "witness"), alg),
                          map_from_json(member(j, "v", "witness"), alg),
                          map_from_json(member(j, "u", "witness"), alg),
                          triangle_from_json(member(j, "triangle", "witness"), alg),
                          std::nullopt};
    if (j.contains("nil") && !j.at("nil").is_null()) {
      const json& n = j.at("nil");
      w.nil = NilpotencyCertificate{member(n, "exponent", "nil").get<std::size_t>(),
                                    homotopy_from_json(member(n, "homotopy", "nil"), alg)};
    }
    return w;
  });
}

json to_json(const HomologyDims& h) {
  json out = json::object();
  for (const auto& [n, d] : h) out[std::to_string(n)] = d;
  return out;
}

json to_json(const K0Class& k) { return json(k.coefficients); }

json to_json(const ObstructionCertificate& c) {
  return json{{"kind", "isolated-homology"}, {"degree", c.degree}, {"homology", to_json(c.homology)}, {"flag", c.flag}};
}

json to_json(const ShiftSum& s) {
  json out = json::array();
  for (const auto& t : s.terms) out.push_back({{"gen", t.gen}, {"shift", t.shift}, {"mult", t.mult}});
  return out;
}

ShiftSum shift_sum_from_json(const json& j) {
  return guard("shift sum", [&] {
    if (!j.is_array()) throw InputError("shift sum must be an array");
    ShiftSum s;
    for (const auto& t : j) {
      const std::int64_t mult = t.value("mult", std::int64_t{1});
      if (mult < 1) throw InputError("shift sum: multiplicities must be positive");
      s.terms.push_back(ShiftTerm{member(t, "gen", "shift sum").get<std::string>(),
                                  member(t, "shift", "shift sum").get<int>(), static_cast<std::size_t>(mult)});
    }
    s.validate();
    return s;
  });
}

json to_json(const std::vector<ShiftPair>& pairs) {
  json out = json::array();
  for (const auto& p : pairs) {
    out.push_back({{"gen", p.gen}, {"even_shift", p.even_shift}, {"odd_shift", p.odd_shift}, {"mult", p.mult}});
  }
  return out;
}

json to_json(const Tower& t, bool with_algebra) {
  json objects = json::array();
  for (const auto& o : t.objects) objects.push_back(to_json(o));
  json maps = json::array();
  for (const auto& f : t.maps) maps.push_back(to_json(f));
  json tags = json::array();
  for (const auto& tag : t.tags) tags.push_back({{"gen", tag.gen}, {"generator", to_json(tag.generator)}, {"shift", tag.shift}});
  json cones = json::array();
  for (const auto& c : t.cones) cones.push_back(to_json(c));
  json out{{"objects", objects}, {"maps", maps}, {"tags", tags}, {"cone_certificates", cones}};
  if (with_algebra) out["algebra"] = to_json(t.objects.front().algebra().presentation());
  return out;
}

Tower tower_from_json(const json& j, const AlgebraPtr& alg, const SearchOptions& opts) {
  std::vector<Complex> objects;
  std::vector<ChainMap> maps;
  std::vector<ConeTag> tags;
  guard("tower", [&] {
    for (const auto& o : member(j, "objects", "tower")) objects.push_back(complex_from_json(o, alg));
    for (const auto& f : member(j, "maps", "tower")) maps.push_back(map_from_json(f, alg));
    for (const auto& t : member(j, "tags", "tower")) {
      tags.push_back(ConeTag{member(t, "gen", "tag").get<std::string>(),
                             complex_from_json(member(t, "generator", "tag"), alg),
                             member(t, "shift", "tag").get<int>()});
    }
    return 0;
  });
  return certify_tower(std::move(objects), std::move(maps), std::move(tags), opts);
}

}  // namespace trideg::io
