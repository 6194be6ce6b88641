#include "trideg/grothendieck.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "trideg/error.hpp"

namespace trideg {

bool K0Class::is_zero() const {
  return std::all_of(coefficients.begin(), coefficients.end(), [](auto c) { return c == 0; });
}

K0Class k0_class(const Complex& x) {
  K0Class out{std::vector<std::int64_t>(x.algebra().vertex_count(), 0)};
  for (const auto& [n, t] : x.terms()) {
    const std::int64_t sign = (n % 2 == 0) ? 1 : -1;
    for (auto v : t) out.coefficients[v] += sign;
  }
  return out;
}

void ShiftSum::validate() const {
  std::set<std::pair<std::string, int>> seen;
  for (const auto& t : terms) {
    if (t.mult == 0) throw InputError("shift sum: multiplicity of " + t.gen + "[" + std::to_string(t.shift) + "] is zero");
    if (!seen.emplace(t.gen, t.shift).second) {
      throw InputError("shift sum: " + t.gen + "[" + std::to_string(t.shift) + "] listed twice");
    }
  }
}

std::size_t ShiftSum::m() const {
  std::size_t even = 0;
  for (const auto& t : terms) {
    if (t.shift % 2 == 0) even += t.mult;
  }
  return even;
}

std::vector<ShiftPair> pair_decompose(const ShiftSum& x) {
  x.validate();
  std::vector<std::string> order;
  std::map<std::string, std::map<int, std::size_t>> by_gen;
  for (const auto& t : x.terms) {
    if (by_gen.find(t.gen) == by_gen.end()) order.push_back(t.gen);
    by_gen[t.gen][t.shift] += t.mult;
  }
  for (const auto& gen : order) {
    std::int64_t alt = 0;
    for (const auto& [k, m] : by_gen[gen]) alt += (k % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(m);
    if (alt != 0) {
      throw InputError("pair_decompose: generator " + gen + " has nonzero class (alternating sum " +
                       std::to_string(alt) + ")");
    }
  }

  std::vector<ShiftPair> out;
  for (const auto& gen : order) {
    auto& shifts = by_gen[gen];
    while (!shifts.empty()) {
      std::size_t q = shifts.begin()->second;
      for (const auto& [_, m] : shifts) q = std::min(q, m);
      auto even = std::find_if(shifts.begin(), shifts.end(), [](const auto& e) { return e.first % 2 == 0; });
      auto odd = std::find_if(shifts.rbegin(), shifts.rend(), [](const auto& e) { return e.first % 2 != 0; });
      const int k = even->first;
      const int l = odd->first;
      out.push_back(ShiftPair{gen, k, l, q});
      if ((shifts[k] -= q) == 0) shifts.erase(k);
      if ((shifts[l] -= q) == 0) shifts.erase(l);
    }
  }
  return out;
}

// --- towers ------------------------------------------------------------------

namespace {

/// Chain map between direct sums given a sparse grid of component maps,
/// indexed (target block, source block).
ChainMap block_map(const AlgebraPtr& alg, const std::vector<Complex>& sources, const std::vector<Complex>& targets,
                   const std::map<std::pair<std::size_t, std::size_t>, ChainMap>& grid) {
  const Complex src = direct_sum(sources, alg);
  const Complex tgt = direct_sum(targets, alg);
  Blocks b;
  for (const auto& [n, _] : src.terms()) {
    if (tgt.term(n).empty()) continue;
    std::vector<std::size_t> heights, widths;
    for (const auto& t : targets) heights.push_back(t.rank(n));
    for (const auto& s : sources) widths.push_back(s.rank(n));
    std::vector<AlgMatrix> store;
    store.reserve(grid.size());
    std::vector<std::vector<const AlgMatrix*>> cells(targets.size(), std::vector<const AlgMatrix*>(sources.size(), nullptr));
    for (const auto& [ij, f] : grid) {
      store.push_back(f.at(n));
      cells[ij.first][ij.second] = &store.back();
    }
    b.emplace(n, mat_blocks(*alg, heights, widths, cells));
  }
  return ChainMap(src, tgt, std::move(b));
}

/// Selection map whose degree-n target blocks are the listed source blocks.
/// `layout[n]` gives, per target block, (source offset, length).
ChainMap reorder(const Complex& x, const Complex& y,
                 const std::map<int, std::vector<std::pair<std::size_t, std::size_t>>>& layout) {
  std::map<int, std::vector<std::size_t>> perm;
  for (const auto& [n, blocks] : layout) {
    if (y.term(n).empty()) continue;
    std::vector<std::size_t> idx;
    for (const auto& [off, len] : blocks) {
      for (std::size_t i = 0; i < len; ++i) idx.push_back(off + i);
    }
    perm.emplace(n, std::move(idx));
  }
  return permutation_map(x, y, perm);
}

std::vector<int> degrees_of(const Complex& x) { return x.support(); }

}  // namespace

Tower certify_tower(std::vector<Complex> objects, std::vector<ChainMap> maps, std::vector<ConeTag> tags,
                    const SearchOptions& opts) {
  if (objects.empty() || objects.size() != maps.size() + 1 || tags.size() != maps.size()) {
    throw InputError("tower: need n+1 objects, n maps and n cone tags");
  }
  if (!objects.front().is_zero()) throw InputError("tower: M_0 must be zero");
  Tower t{std::move(objects), std::move(maps), std::move(tags), {}};
  for (std::size_t k = 1; k <= t.length(); ++k) {
    const ChainMap& f = t.maps[k - 1];
    if (!(f.source() == t.objects[k - 1]) || !(f.target() == t.objects[k])) {
      throw InputError("tower: f_" + std::to_string(k) + " does not map M_" + std::to_string(k - 1) + " to M_" +
                       std::to_string(k));
    }
    const Complex c = cone(f).complex;
    const Complex target = t.tags[k - 1].object();
    std::optional<ChainMap> candidate;
    // When M_k = cone(S[r-1] -> M_{k-1}), the S[r] part of cone(f_k) sits
    // after M_{k-1}^{n+1} in every degree.
    try {
      std::map<int, std::vector<std::pair<std::size_t, std::size_t>>> layout;
      for (int n : degrees_of(target)) layout[n] = {{t.objects[k - 1].rank(n + 1), target.rank(n)}};
      candidate = reorder(c, target, layout);
    } catch (const InputError&) {
      candidate.reset();
    }
    IsoSearch s = candidate ? find_iso(c, target, opts, candidate) : find_iso(c, target, opts);
    if (!s.certificate && candidate) s = find_iso(c, target, opts);
    if (!s.certificate) {
      throw CertificateError("tower: cone(f_" + std::to_string(k) + ") ≅ " + t.tags[k - 1].gen + "[" +
                             std::to_string(t.tags[k - 1].shift) + "] not found within budget");
    }
    t.cones.push_back(std::move(*s.certificate));
  }
  return t;
}

bool verify_tower(const Tower& t) {
  if (t.objects.size() != t.maps.size() + 1 || t.tags.size() != t.maps.size() || t.cones.size() != t.maps.size()) {
    return false;
  }
  if (!t.objects.front().is_zero()) return false;
  for (std::size_t k = 1; k <= t.length(); ++k) {
    const ChainMap& f = t.maps[k - 1];
    if (!(f.source() == t.objects[k - 1]) || !(f.target() == t.objects[k])) return false;
    const IsoCertificate& c = t.cones[k - 1];
    if (!(c.map.source() == cone(f).complex) || !(c.map.target() == t.tags[k - 1].object())) return false;
    if (!verify_iso(c)) return false;
  }
  return true;
}

Complex tower_cone_sum(const Tower& t) {
  std::vector<Complex> parts;
  for (const auto& tag : t.tags) parts.push_back(tag.object());
  return direct_sum(parts, t.objects.front().algebra_ptr());
}

std::vector<TowerStep> tower_nil_chain(const Tower& t, const SearchOptions& opts) {
  if (!verify_tower(t)) throw CertificateError("tower_nil_chain: tower certificate broken");
  const AlgebraPtr& alg = t.objects.front().algebra_ptr();
  std::vector<TowerStep> out;
  Complex d = Complex::zero(alg);  // C_{k+1} ⊕ ... ⊕ C_n
  for (std::size_t k = t.length(); k >= 1; --k) {
    const Complex& a = t.objects[k - 1];
    const Complex& b = t.objects[k];
    const ChainMap u = column(t.maps[k - 1], zero_map(a, d));
    DegenerationWitness w = left_witness(zero_map(a, a), u);

    const Complex c = t.tags[k - 1].object();
    const Complex d_next = direct_sum(c, d).sum;
    const Complex expected = direct_sum(a, d_next).sum;
    const Complex cf = cone(t.maps[k - 1]).complex;
    // N^n = A^{n+1} ⊕ A^n ⊕ B^n ⊕ D^n  ->  A^n ⊕ (A^{n+1} ⊕ B^n) ⊕ D^n
    std::map<int, std::vector<std::pair<std::size_t, std::size_t>>> layout;
    const Complex mid = direct_sum(a, direct_sum(cf, d).sum).sum;
    for (int n : mid.support()) {
      const std::size_t a1 = a.rank(n + 1), a0 = a.rank(n), b0 = b.rank(n);
      layout[n] = {{a1, a0}, {0, a1}, {a1 + a0, b0}, {a1 + a0 + b0, d.rank(n)}};
    }
    const ChainMap perm = reorder(w.n, mid, layout);
    const ChainMap fix = diagonal(identity_map(a), diagonal(t.cones[k - 1].map, identity_map(d)));
    IsoSearch s = find_iso(w.n, expected, opts, compose(fix, perm));
    if (!s.certificate) throw CertificateError("tower_nil_chain: step " + std::to_string(k) + " not found within budget");
    out.push_back(TowerStep{std::move(w), expected, std::move(*s.certificate)});
    d = d_next;
  }
  return out;
}

TowerStep tower_delta_witness(const Tower& t, const SearchOptions& opts) {
  if (!verify_tower(t)) throw CertificateError("tower_delta_witness: tower certificate broken");
  const AlgebraPtr& alg = t.objects.front().algebra_ptr();
  const std::size_t n_len = t.length();
  std::vector<Complex> zs(t.objects.begin() + 1, t.objects.end() - 1);  // M_1 .. M_{n-1}
  const Complex& m = t.objects.back();

  std::map<std::pair<std::size_t, std::size_t>, ChainMap> vgrid, ugrid;
  for (std::size_t k = 2; k + 1 <= n_len; ++k) vgrid.emplace(std::make_pair(k - 1, k - 2), t.maps[k - 1]);
  if (n_len >= 2) ugrid.emplace(std::make_pair(std::size_t{0}, n_len - 2), t.maps[n_len - 1]);
  const ChainMap v = block_map(alg, zs, zs, vgrid);
  const ChainMap u = block_map(alg, zs, {m}, ugrid);
  DegenerationWitness w = left_witness(v, u);

  // N^n = (M_1..M_{n-1})^{n+1} ⊕ (M_1..M_{n-1})^n ⊕ M^n  ->  ⊕_k (M_{k-1}^{n+1} ⊕ M_k^n)
  std::vector<Complex> cones;
  for (const auto& f : t.maps) cones.push_back(cone(f).complex);
  const Complex mid = direct_sum(cones, alg);
  std::map<int, std::vector<std::pair<std::size_t, std::size_t>>> layout;
  for (int deg : mid.support()) {
    std::vector<std::size_t> upper(n_len + 1, 0), lower(n_len + 1, 0);  // offsets of M_k^{deg+1} / M_k^{deg}
    std::size_t off = 0;
    for (std::size_t k = 1; k + 1 <= n_len; ++k) {
      upper[k] = off;
      off += t.objects[k].rank(deg + 1);
    }
    for (std::size_t k = 1; k <= n_len; ++k) {
      lower[k] = off;
      off += t.objects[k].rank(deg);
    }
    auto& l = layout[deg];
    for (std::size_t k = 1; k <= n_len; ++k) {
      if (k >= 2) l.emplace_back(upper[k - 1], t.objects[k - 1].rank(deg + 1));
      l.emplace_back(lower[k], t.objects[k].rank(deg));
    }
  }
  const ChainMap perm = reorder(w.n, mid, layout);
  std::vector<Complex> targets;
  std::map<std::pair<std::size_t, std::size_t>, ChainMap> cgrid;
  for (std::size_t k = 0; k < n_len; ++k) {
    targets.push_back(t.tags[k].object());
    cgrid.emplace(std::make_pair(k, k), t.cones[k].map);
  }
  const ChainMap fix = block_map(alg, cones, targets, cgrid);
  const Complex expected = tower_cone_sum(t);
  IsoSearch s = find_iso(w.n, expected, opts, compose(fix, perm));
  if (!s.certificate) throw CertificateError("tower_delta_witness: N ≅ ⊕ C_k not found within budget");
  return TowerStep{std::move(w), expected, std::move(*s.certificate)};
}

}  // namespace trideg
