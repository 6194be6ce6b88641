#include "trideg/triangles.hpp"

#include <random>

#include "trideg/error.hpp"
#include "trideg/hom_solver.hpp"

namespace trideg {

Triangle standard_triangle(const ChainMap& f) {
  Cone c = cone(f);
  Homotopy hg = Homotopy::zero(compose(c.projection, c.inclusion));
  return Triangle{f, c.inclusion, c.projection, c.null_homotopy, hg, std::nullopt};
}

bool verify_triangle(const Triangle& t) {
  if (!(t.f.target() == t.g.source()) || !(t.g.target() == t.h.source())) return false;
  if (!(t.h.target() == shift(t.x(), 1))) return false;
  if (!witnesses_null(t.gf_null, compose(t.g, t.f))) return false;
  if (!witnesses_null(t.hg_null, compose(t.h, t.g))) return false;
  const Cone c = cone(t.f);
  if (!t.transport) {
    return t.z() == c.complex && t.g.components() == c.inclusion.components() &&
           t.h.components() == c.projection.components();
  }
  const TransportCertificate& tc = *t.transport;
  const ChainMap& cmp = tc.comparison.map;
  if (!(cmp.source() == c.complex) || !(cmp.target() == t.z())) return false;
  if (!verify_iso(tc.comparison)) return false;
  if (!witnesses(tc.inclusion_square, compose(cmp, c.inclusion), t.g)) return false;
  return witnesses(tc.projection_square, c.projection, compose(t.h, cmp));
}

ChainMap cone_comparison(const ChainMap& f, const ChainMap& g, const Homotopy& gf_null) {
  const Complex& x = f.source();
  const Complex& y = f.target();
  const Complex& w = g.target();
  const Algebra& alg = x.algebra();
  const Cone c = cone(f);
  Blocks b;
  for (const auto& [n, _] : c.complex.terms()) {
    if (w.term(n).empty()) continue;
    const AlgMatrix hn = gf_null.at(n + 1);
    const AlgMatrix gn = g.at(n);
    b.emplace(n, mat_blocks(alg, {w.rank(n)}, {x.rank(n + 1), y.rank(n)}, {{&hn, &gn}}));
  }
  return ChainMap(c.complex, g.target(), std::move(b));
}

namespace {

std::optional<Triangle> finish(const ChainMap& f, const ChainMap& g, const Homotopy& gf_null,
                               const std::optional<ChainMap>& h, IsoCertificate iso) {
  const Cone c = cone(f);
  const ChainMap& cmp = iso.map;
  ChainMap third = h ? *h : compose(c.projection, iso.inverse);
  auto proj_sq = find_homotopy(c.projection, compose(third, cmp));
  if (!proj_sq) return std::nullopt;
  auto incl_sq = find_homotopy(compose(cmp, c.inclusion), g);
  if (!incl_sq) return std::nullopt;
  auto hg = is_nullhomotopic(compose(third, g));
  if (!hg) return std::nullopt;
  Triangle t{f, g, third, gf_null, *hg, TransportCertificate{std::move(iso), *incl_sq, *proj_sq}};
  return t;
}

}  // namespace

std::optional<Triangle> certify_triangle(const ChainMap& f, const ChainMap& g, const Homotopy& gf_null,
                                         const std::optional<ChainMap>& h, const SearchOptions& opts) {
  if (!(f.target() == g.source())) throw InputError("certify_triangle: f and g are not composable");
  if (!witnesses_null(gf_null, compose(g, f))) throw CertificateError("certify_triangle: homotopy does not witness g∘f ≃ 0");

  if (!h) {
    const Triangle std_t = standard_triangle(f);
    if (g.target() == std_t.z() && g.components() == std_t.g.components() && gf_null == std_t.gf_null) {
      return std_t;
    }
  }
  if (auto iso = is_iso(cone_comparison(f, g, gf_null))) {
    if (auto t = finish(f, g, gf_null, h, std::move(*iso))) return t;
  }
  // Other null homotopies differ by cycles of the homotopy system.
  const LinearSystem sys = homotopy_system(f.source(), g.target());
  const la::Matrix kernel = la::kernel_basis(sys.matrix());
  if (kernel.cols() == 0) return std::nullopt;
  const MapSpace space = sys.unknown(0);
  const std::vector<std::uint32_t> base = space.to_coords(gf_null.components());
  AffineSolution family{base, kernel};
  std::mt19937_64 rng(opts.seed);
  for (std::size_t k = 0; k < opts.budget; ++k) {
    const auto coords = sample(family, rng);
    Homotopy hk(f.source_ptr(), g.target_ptr(), space.to_blocks(coords));
    if (auto iso = is_iso(cone_comparison(f, g, hk))) {
      if (auto t = finish(f, g, hk, h, std::move(*iso))) return t;
    }
  }
  return std::nullopt;
}

}  // namespace trideg
