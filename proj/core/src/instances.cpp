#include "trideg/instances.hpp"

#include <algorithm>
#include <map>

#include "trideg/error.hpp"
#include "trideg/hom_solver.hpp"

namespace trideg::instances {

namespace {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

std::vector<std::uint32_t> random_in_kernel(const la::Matrix& a, Rng& rng) {
  const la::Matrix k = la::kernel_basis(a);
  return sample(AffineSolution{std::vector<std::uint32_t>(a.cols(), 0), k}, rng);
}

la::Matrix stack(const la::Matrix& top, const std::vector<std::size_t>& unit_rows) {
  std::vector<std::uint32_t> entries(top.entries().begin(), top.entries().end());
  for (auto c : unit_rows) {
    std::vector<std::uint32_t> row(top.cols(), 0);
    row[c] = 1;
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return la::Matrix(top.rows() + unit_rows.size(), top.cols(), top.modulus(), std::move(entries));
}

std::size_t k_dimension(const Algebra& alg, std::size_t v) {
  std::size_t d = 0;
  for (auto x : alg.projective_dimension_vector(v)) d += x;
  return d;
}

}  // namespace

AlgebraPtr a2(std::uint32_t p) {
  QuiverPresentation q;
  q.field = p;
  q.vertices = {"1", "2"};
  q.arrows = {Arrow{"alpha", 0, 1}};
  return Algebra::build(q);
}

AlgebraPtr a3(std::uint32_t p, bool with_relation) {
  QuiverPresentation q;
  q.field = p;
  q.vertices = {"1", "2", "3"};
  q.arrows = {Arrow{"alpha", 0, 1}, Arrow{"beta", 1, 2}};
  if (with_relation) q.relations = {{0, 1}};
  return Algebra::build(q);
}

AlgebraPtr loop(std::uint32_t p) {
  QuiverPresentation q;
  q.field = p;
  q.vertices = {"1"};
  q.arrows = {Arrow{"x", 0, 0}};
  q.relations = {{0, 0}};
  return Algebra::build(q);
}

AlgebraPtr random_algebra(Rng& rng, std::uint32_t p) {
  switch (uniform(rng, 0, 3)) {
    case 0: return a2(p);
    case 1: return a3(p, true);
    case 2: return a3(p, false);
    default: return loop(p);
  }
}

Complex random_complex(const AlgebraPtr& alg, Rng& rng, const ComplexShape& shape) {
  const int amp = uniform_int(rng, 1, std::clamp(shape.amplitude, 1, 5));
  const int lo = shape.min_degree + uniform_int(rng, 0, 1);
  Terms terms;
  std::size_t total = 0;
  for (int n = lo; n < lo + amp; ++n) {
    const std::size_t count = uniform(rng, n == lo ? 1 : 0, std::max<std::size_t>(1, shape.max_term));
    for (std::size_t i = 0; i < count; ++i) {
      const std::size_t v = uniform(rng, 0, alg->vertex_count() - 1);
      const std::size_t dim = k_dimension(*alg, v);
      if (total + dim > shape.max_total) break;
      total += dim;
      terms[n].push_back(v);
    }
  }
  Blocks diffs;
  for (int n = lo; n + 1 < lo + amp; ++n) {
    if (terms[n].empty() || terms[n + 1].empty()) continue;
    LinearSystem sys(*alg);
    const auto u = sys.add_unknown(MapSpace(*alg, Terms{{n, terms[n]}}, Terms{{n + 1, terms[n + 1]}}, 1));
    auto prev = diffs.find(n - 1);
    if (prev != diffs.end()) {
      const auto eq = sys.add_equation(MapSpace(*alg, Terms{{n - 1, terms[n - 1]}}, Terms{{n + 1, terms[n + 1]}}, 2));
      sys.add_term(eq, n - 1, u, n, nullptr, &prev->second);
    }
    const auto coords = random_in_kernel(sys.matrix(), rng);
    auto blocks = sys.unknown(u).to_blocks(coords);
    if (!blocks.empty()) diffs.emplace(n, std::move(blocks.begin()->second));
  }
  return Complex(alg, std::move(terms), std::move(diffs));
}

ChainMap random_chain_map(const Complex& x, const Complex& y, Rng& rng) {
  const auto coords = random_in_kernel(commutation_system(x, y).matrix(), rng);
  return chain_map_from_coords(x, y, coords);
}

ChainMap random_radical_map(const Complex& x, const Complex& y, Rng& rng) {
  const Algebra& alg = x.algebra();
  const MapSpace space(x, y, 0);
  std::vector<std::size_t> idem;
  for (int n : space.degrees()) {
    const auto& src = space.source_term(n);
    const auto& tgt = space.target_term(n);
    for (std::size_t i = 0; i < tgt.size(); ++i) {
      for (std::size_t j = 0; j < src.size(); ++j) {
        if (tgt[i] != src[j]) continue;
        const auto e = alg.basis().find(tgt[i], {});
        idem.push_back(space.offset(n, i, j) + alg.local_index(*e));
      }
    }
  }
  const auto coords = random_in_kernel(stack(commutation_system(x, y).matrix(), idem), rng);
  return chain_map_from_coords(x, y, coords);
}

ChainMap random_endomorphism(const Complex& z, Rng& rng) {
  const std::size_t pick = uniform(rng, 0, 5);
  if (pick <= 1) return zero_map(z, z);
  if (pick <= 4) return random_radical_map(z, z, rng);
  return random_chain_map(z, z, rng);
}

namespace {
ComplexShape half(const ComplexShape& s) {
  ComplexShape h = s;
  h.max_total = std::max<std::size_t>(2, s.max_total / 2);
  return h;
}
}  // namespace

DegenerationWitness random_left_witness(const AlgebraPtr& alg, Rng& rng, const ComplexShape& shape) {
  const Complex z = random_complex(alg, rng, half(shape));
  const Complex m = random_complex(alg, rng, half(shape));
  const ChainMap v = random_endomorphism(z, rng);
  const ChainMap u = random_chain_map(z, m, rng);
  return left_witness(v, u);
}

HomotopyCartesian random_deg(const AlgebraPtr& alg, Rng& rng, const ComplexShape& shape) {
  const Complex z = random_complex(alg, rng, half(shape));
  const Complex m = random_complex(alg, rng, half(shape));
  return deg_pullback(random_chain_map(m, z, rng), random_endomorphism(z, rng));
}

HomotopyCartesian random_ged(const AlgebraPtr& alg, Rng& rng, const ComplexShape& shape) {
  const Complex z = random_complex(alg, rng, half(shape));
  const Complex m = random_complex(alg, rng, half(shape));
  return ged_pushout(random_chain_map(z, m, rng), random_endomorphism(z, rng));
}

std::pair<DegenerationWitness, DegenerationWitness> shared_s_pair(const DegenerationWitness& w1, const Complex& w_extra,
                                                                   std::uint32_t lambda) {
  if (w1.side != Side::right) throw InputError("shared_s_pair: right witness expected");
  const DirectSum ds = direct_sum(w1.m, w1.z);
  const ChainMap s = compose(ds.project_first, w1.triangle.f);
  const ChainMap t1 = compose(ds.project_second, w1.triangle.f);
  const ChainMap u2 = column(scale(w1.u, lambda), zero_map(w1.m, w_extra));
  const ChainMap v2 = diagonal(w1.v, identity_map(w_extra));
  const ChainMap t2 = column(scale(t1, lambda), zero_map(w1.n, w_extra));
  const ChainMap f2 = column(s, t2);
  const ChainMap g2 = row(u2, v2);
  const Homotopy h2 = column(scale(w1.triangle.gf_null, lambda), Homotopy(w1.n, w_extra, {}));
  auto t = certify_triangle(f2, g2, h2);
  if (!t) throw CertificateError("shared_s_pair: second triangle not found within budget");
  DegenerationWitness w2{Side::right, w1.m, w1.n, v2.source(), v2, u2, std::move(*t), nilpotency_certificate(v2)};
  return {w1, std::move(w2)};
}

std::pair<DegenerationWitness, DegenerationWitness> random_shared_s_pair(const AlgebraPtr& alg, Rng& rng,
                                                                          const ComplexShape& shape) {
  DegenerationWitness w1 = random_deg(alg, rng, shape).witness;
  ComplexShape small = shape;
  small.max_total = std::max<std::size_t>(2, shape.max_total / 4);
  small.amplitude = 2;
  Complex extra = Complex::zero(alg);
  switch (uniform(rng, 0, 2)) {
    case 0: break;
    case 1: extra = random_complex(alg, rng, small); break;
    default: extra = cone(identity_map(random_complex(alg, rng, small))).complex; break;
  }
  const std::uint32_t p = alg->modulus();
  const auto lambda = static_cast<std::uint32_t>(uniform(rng, 1, p - 1));
  return shared_s_pair(w1, extra, lambda);
}

Tower random_tower(const AlgebraPtr& alg, Rng& rng, std::size_t length, const SearchOptions& opts) {
  ComplexShape gen_shape;
  gen_shape.amplitude = 2;
  gen_shape.max_term = 1;
  gen_shape.max_total = 3;
  gen_shape.min_degree = 0;
  std::vector<Complex> objects{Complex::zero(alg)};
  std::vector<ChainMap> maps;
  std::vector<ConeTag> tags;
  for (std::size_t k = 1; k <= length; ++k) {
    Complex s = random_complex(alg, rng, gen_shape);
    const int r = uniform_int(rng, -2, 2);
    const Complex x = shift(s, r - 1);
    const ChainMap phi = random_chain_map(x, objects.back(), rng);
    const Cone c = cone(phi);
    maps.push_back(c.inclusion);
    objects.push_back(c.complex);
    tags.push_back(ConeTag{"S" + std::to_string(k), std::move(s), r});
  }
  return certify_tower(std::move(objects), std::move(maps), std::move(tags), opts);
}

ShiftSum random_zero_class(Rng& rng, std::size_t max_m) {
  static const std::vector<int> evens{-4, -2, 0, 2, 4};
  static const std::vector<int> odds{-3, -1, 1, 3};
  const std::size_t gens = uniform(rng, 1, 3);
  std::size_t budget = uniform(rng, gens, std::max(gens, max_m));
  ShiftSum out;
  for (std::size_t g = 0; g < gens; ++g) {
    const std::size_t left = gens - g - 1;
    const std::size_t m = (g + 1 == gens) ? budget : uniform(rng, 1, budget - left);
    budget -= m;
    std::map<int, std::size_t> mult;
    for (std::size_t i = 0; i < m; ++i) {
      ++mult[evens[uniform(rng, 0, evens.size() - 1)]];
      ++mult[odds[uniform(rng, 0, odds.size() - 1)]];
    }
    for (const auto& [k, c] : mult) out.terms.push_back(ShiftTerm{"S" + std::to_string(g + 1), k, c});
  }
  std::shuffle(out.terms.begin(), out.terms.end(), rng);
  return out;
}

Complex simple_resolution(const AlgebraPtr& alg) {
  const auto alpha = alg->parse_path("alpha");
  if (!alpha || alg->vertex_count() != 2) throw InputError("simple_resolution: A₂ expected");
  AlgMatrix d(1, 1, alg->dimension());
  d.at(0, 0) = alg->path_element(*alpha);
  return Complex(alg, Terms{{-1, {1}}, {0, {0}}}, Blocks{{-1, d}});
}

Zwara zwara(std::uint32_t p) {
  AlgebraPtr alg = a2(p);
  Complex n1 = Complex::stalk(alg, {1}, 0);
  Complex m = Complex::stalk(alg, {0}, 0);
  Complex n2 = simple_resolution(alg);
  AlgMatrix a(1, 1, alg->dimension());
  a.at(0, 0) = alg->path_element(*alg->parse_path("alpha"));
  ChainMap iota(n1, m, Blocks{{0, a}});
  ChainMap rho(m, n2, Blocks{{0, mat_identity(*alg, {0})}});
  DegenerationWitness w = left_witness(zero_map(n1, n1), iota);
  return Zwara{alg, n1, m, n2, iota, rho, std::move(w)};
}

}  // namespace trideg::instances
