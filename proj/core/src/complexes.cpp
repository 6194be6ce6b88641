#include "trideg/complexes.hpp"

#include <algorithm>
#include <sstream>

#include "trideg/error.hpp"
#include "trideg/hom_solver.hpp"

namespace trideg {

namespace {

const std::vector<std::size_t>& term_of(const Terms& t, int n) {
  static const std::vector<std::size_t> empty;
  auto it = t.find(n);
  return it == t.end() ? empty : it->second;
}

void check_entries(const Algebra& alg, const AlgMatrix& m, const std::vector<std::size_t>& target,
                   const std::vector<std::size_t>& source, const char* what) {
  if (m.rows() != target.size() || m.cols() != source.size()) {
    throw InputError(std::string(what) + ": block shape does not match the terms");
  }
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).dimension() != alg.dimension()) throw InputError(std::string(what) + ": entry over a different algebra");
      if (!alg.in_hom(m(i, j), source[j], target[i])) {
        throw InputError(std::string(what) + ": entry (" + std::to_string(i) + "," + std::to_string(j) +
                         ") is not in e_" + alg.vertex_name(target[i]) + " A e_" + alg.vertex_name(source[j]));
      }
    }
  }
}

/// Blocks of a degree-`deg` map, one per degree where both ends are
/// nonempty, validated and zero-filled.
Blocks normalize(const Algebra& alg, const Terms& src, const Terms& tgt, int deg, Blocks in, const char* what) {
  Blocks out;
  for (auto& [n, m] : in) {
    const auto& s = term_of(src, n);
    const auto& t = term_of(tgt, n + deg);
    if (s.empty() || t.empty()) {
      if (m.rows() * m.cols() != 0 && !m.is_zero()) {
        throw InputError(std::string(what) + ": nonzero block at degree " + std::to_string(n) + " outside the support");
      }
      continue;
    }
    check_entries(alg, m, t, s, what);
  }
  for (const auto& [n, s] : src) {
    const auto& t = term_of(tgt, n + deg);
    if (t.empty()) continue;
    auto it = in.find(n);
    if (it != in.end()) {
      out.emplace(n, std::move(it->second));
    } else {
      out.emplace(n, zero_block(alg, t, s));
    }
  }
  return out;
}

AlgMatrix block_or_zero(const Blocks& b, int n, const Algebra& alg, const std::vector<std::size_t>& target,
                        const std::vector<std::size_t>& source) {
  auto it = b.find(n);
  if (it != b.end()) return it->second;
  return zero_block(alg, target, source);
}

void require_same_algebra(const Complex& a, const Complex& b) {
  if (a.algebra_ptr() != b.algebra_ptr() && !(a.algebra().presentation() == b.algebra().presentation())) {
    throw InputError("complexes over different algebras");
  }
}

void require_equal(const Complex& a, const Complex& b, const char* what) {
  if (!(a == b)) throw InputError(std::string(what) + ": complexes do not match");
}

}  // namespace

AlgMatrix zero_block(const Algebra& a, const std::vector<std::size_t>& target, const std::vector<std::size_t>& source) {
  return AlgMatrix(target.size(), source.size(), a.dimension());
}

// --- Complex -----------------------------------------------------------------

Complex::Complex(AlgebraPtr algebra, Terms terms, Blocks differentials) : algebra_(std::move(algebra)) {
  if (!algebra_) throw InputError("complex without algebra");
  for (auto& [n, t] : terms) {
    for (auto v : t) {
      if (v >= algebra_->vertex_count()) throw InputError("complex term refers to an unknown vertex");
    }
    if (!t.empty()) terms_.emplace(n, std::move(t));
  }
  diffs_ = normalize(*algebra_, terms_, terms_, 1, std::move(differentials), "differential");
  for (const auto& [n, d] : diffs_) {
    auto next = diffs_.find(n + 1);
    if (next == diffs_.end()) continue;
    if (!mat_mul(*algebra_, next->second, d).is_zero()) {
      throw InputError("d^" + std::to_string(n + 1) + " ∘ d^" + std::to_string(n) + " is not zero");
    }
  }
}

Complex Complex::zero(AlgebraPtr algebra) { return Complex(std::move(algebra), {}, {}); }

Complex Complex::stalk(AlgebraPtr algebra, std::vector<std::size_t> vertices, int degree) {
  Terms t;
  t[degree] = std::move(vertices);
  return Complex(std::move(algebra), std::move(t), {});
}

const std::vector<std::size_t>& Complex::term(int n) const { return term_of(terms_, n); }

AlgMatrix Complex::differential(int n) const {
  return block_or_zero(diffs_, n, *algebra_, term(n + 1), term(n));
}

std::vector<int> Complex::support() const {
  std::vector<int> out;
  for (const auto& [n, _] : terms_) out.push_back(n);
  return out;
}

int Complex::min_degree() const { return terms_.empty() ? 0 : terms_.begin()->first; }
int Complex::max_degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

std::size_t Complex::total_rank() const {
  std::size_t n = 0;
  for (const auto& [_, t] : terms_) n += t.size();
  return n;
}

bool operator==(const Complex& a, const Complex& b) {
  if (&a == &b) return true;
  if (a.algebra_ != b.algebra_ && !(a.algebra_->presentation() == b.algebra_->presentation())) return false;
  return a.terms_ == b.terms_ && a.diffs_ == b.diffs_;
}

// --- ChainMap / Homotopy -----------------------------------------------------

ChainMap::ChainMap(Complex source, Complex target, Blocks components)
    : ChainMap(std::make_shared<const Complex>(std::move(source)), std::make_shared<const Complex>(std::move(target)),
               std::move(components)) {}

ChainMap::ChainMap(std::shared_ptr<const Complex> source, std::shared_ptr<const Complex> target, Blocks components)
    : source_(std::move(source)), target_(std::move(target)) {
  require_same_algebra(*source_, *target_);
  const Algebra& alg = source_->algebra();
  comps_ = normalize(alg, source_->terms(), target_->terms(), 0, std::move(components), "chain map");
  for (const auto& [n, _] : source_->terms()) {
    const AlgMatrix lhs = mat_mul(alg, target_->differential(n), at(n));
    const AlgMatrix rhs = mat_mul(alg, at(n + 1), source_->differential(n));
    if (!(lhs == rhs)) throw InputError("map does not commute with the differentials in degree " + std::to_string(n));
  }
}

AlgMatrix ChainMap::at(int n) const {
  return block_or_zero(comps_, n, source_->algebra(), target_->term(n), source_->term(n));
}

bool operator==(const ChainMap& a, const ChainMap& b) {
  return a.source() == b.source() && a.target() == b.target() && a.comps_ == b.comps_;
}

Homotopy::Homotopy(Complex source, Complex target, Blocks components)
    : Homotopy(std::make_shared<const Complex>(std::move(source)), std::make_shared<const Complex>(std::move(target)),
               std::move(components)) {}

Homotopy::Homotopy(std::shared_ptr<const Complex> source, std::shared_ptr<const Complex> target, Blocks components)
    : source_(std::move(source)), target_(std::move(target)) {
  require_same_algebra(*source_, *target_);
  comps_ = normalize(source_->algebra(), source_->terms(), target_->terms(), -1, std::move(components), "homotopy");
}

Homotopy Homotopy::zero(const ChainMap& between) { return Homotopy(between.source_ptr(), between.target_ptr(), {}); }

AlgMatrix Homotopy::at(int n) const {
  return block_or_zero(comps_, n, source_->algebra(), target_->term(n - 1), source_->term(n));
}

bool operator==(const Homotopy& a, const Homotopy& b) {
  return a.source() == b.source() && a.target() == b.target() && a.comps_ == b.comps_;
}

// --- elementary maps ---------------------------------------------------------

ChainMap identity_map(const Complex& x) {
  Blocks b;
  for (const auto& [n, t] : x.terms()) b.emplace(n, mat_identity(x.algebra(), t));
  auto p = std::make_shared<const Complex>(x);
  return ChainMap(p, p, std::move(b));
}

ChainMap zero_map(const Complex& x, const Complex& y) { return ChainMap(x, y, {}); }

ChainMap compose(const ChainMap& g, const ChainMap& f) {
  require_equal(f.target(), g.source(), "compose");
  const Algebra& alg = f.source().algebra();
  Blocks b;
  for (const auto& [n, _] : f.source().terms()) {
    if (g.target().term(n).empty()) continue;
    b.emplace(n, mat_mul(alg, g.at(n), f.at(n)));
  }
  return ChainMap(f.source_ptr(), g.target_ptr(), std::move(b));
}

namespace {
template <typename Map>
void require_parallel(const Map& f, const Map& g, const char* what) {
  require_equal(f.source(), g.source(), what);
  require_equal(f.target(), g.target(), what);
}
}  // namespace

ChainMap add(const ChainMap& f, const ChainMap& g) {
  require_parallel(f, g, "add");
  const Algebra& alg = f.source().algebra();
  Blocks b;
  for (const auto& [n, m] : f.components()) b.emplace(n, mat_add(alg, m, g.at(n)));
  return ChainMap(f.source_ptr(), f.target_ptr(), std::move(b));
}

ChainMap negate(const ChainMap& f) {
  const Algebra& alg = f.source().algebra();
  Blocks b;
  for (const auto& [n, m] : f.components()) b.emplace(n, mat_neg(alg, m));
  return ChainMap(f.source_ptr(), f.target_ptr(), std::move(b));
}

ChainMap subtract(const ChainMap& f, const ChainMap& g) { return add(f, negate(g)); }

ChainMap scale(const ChainMap& f, std::uint32_t c) {
  const Algebra& alg = f.source().algebra();
  Blocks b;
  for (const auto& [n, m] : f.components()) b.emplace(n, mat_scale(alg, m, c));
  return ChainMap(f.source_ptr(), f.target_ptr(), std::move(b));
}

ChainMap power(const ChainMap& f, std::size_t k) {
  require_equal(f.source(), f.target(), "power");
  ChainMap out = identity_map(f.source());
  for (std::size_t i = 0; i < k; ++i) out = compose(f, out);
  return out;
}

Homotopy add(const Homotopy& h, const Homotopy& k) {
  require_parallel(h, k, "add");
  const Algebra& alg = h.source().algebra();
  Blocks b;
  for (const auto& [n, m] : h.components()) b.emplace(n, mat_add(alg, m, k.at(n)));
  return Homotopy(h.source_ptr(), h.target_ptr(), std::move(b));
}

Homotopy negate(const Homotopy& h) {
  const Algebra& alg = h.source().algebra();
  Blocks b;
  for (const auto& [n, m] : h.components()) b.emplace(n, mat_neg(alg, m));
  return Homotopy(h.source_ptr(), h.target_ptr(), std::move(b));
}

Homotopy scale(const Homotopy& h, std::uint32_t c) {
  const Algebra& alg = h.source().algebra();
  Blocks b;
  for (const auto& [n, m] : h.components()) b.emplace(n, mat_scale(alg, m, c));
  return Homotopy(h.source_ptr(), h.target_ptr(), std::move(b));
}

Homotopy compose(const ChainMap& g, const Homotopy& h) {
  require_equal(h.target(), g.source(), "compose");
  const Algebra& alg = g.source().algebra();
  Blocks b;
  for (const auto& [n, _] : h.source().terms()) {
    if (g.target().term(n - 1).empty()) continue;
    b.emplace(n, mat_mul(alg, g.at(n - 1), h.at(n)));
  }
  return Homotopy(h.source_ptr(), g.target_ptr(), std::move(b));
}

Homotopy compose(const Homotopy& h, const ChainMap& f) {
  require_equal(f.target(), h.source(), "compose");
  const Algebra& alg = f.source().algebra();
  Blocks b;
  for (const auto& [n, _] : f.source().terms()) {
    if (h.target().term(n - 1).empty()) continue;
    b.emplace(n, mat_mul(alg, h.at(n), f.at(n)));
  }
  return Homotopy(f.source_ptr(), h.target_ptr(), std::move(b));
}

ChainMap boundary_of(const Homotopy& h) {
  const Algebra& alg = h.source().algebra();
  const Complex& x = h.source();
  const Complex& y = h.target();
  Blocks b;
  for (const auto& [n, _] : x.terms()) {
    if (y.term(n).empty()) continue;
    b.emplace(n, mat_add(alg, mat_mul(alg, y.differential(n - 1), h.at(n)), mat_mul(alg, h.at(n + 1), x.differential(n))));
  }
  return ChainMap(h.source_ptr(), h.target_ptr(), std::move(b));
}

bool witnesses(const Homotopy& h, const ChainMap& f, const ChainMap& g) {
  if (!(h.source() == f.source()) || !(h.target() == f.target())) return false;
  if (!(g.source() == f.source()) || !(g.target() == f.target())) return false;
  return boundary_of(h).components() == subtract(f, g).components();
}

bool witnesses_null(const Homotopy& h, const ChainMap& f) {
  if (!(h.source() == f.source()) || !(h.target() == f.target())) return false;
  return boundary_of(h).components() == f.components();
}

// --- shift, sum, cone ------------------------------------------------------

Complex shift(const Complex& x, int k) {
  if (k == 0) return x;
  const Algebra& alg = x.algebra();
  Terms t;
  Blocks d;
  for (const auto& [n, v] : x.terms()) t.emplace(n - k, v);
  for (const auto& [n, m] : x.differentials()) d.emplace(n - k, (k % 2 == 0) ? m : mat_neg(alg, m));
  return Complex(x.algebra_ptr(), std::move(t), std::move(d));
}

ChainMap shift(const ChainMap& f, int k) {
  Blocks b;
  for (const auto& [n, m] : f.components()) b.emplace(n - k, m);
  return ChainMap(shift(f.source(), k), shift(f.target(), k), std::move(b));
}

Homotopy shift(const Homotopy& h, int k) {
  const Algebra& alg = h.source().algebra();
  Blocks b;
  for (const auto& [n, m] : h.components()) b.emplace(n - k, (k % 2 == 0) ? m : mat_neg(alg, m));
  return Homotopy(shift(h.source(), k), shift(h.target(), k), std::move(b));
}

DirectSum direct_sum(const Complex& x, const Complex& y) {
  require_same_algebra(x, y);
  const Algebra& alg = x.algebra();
  Terms t;
  std::vector<int> degrees;
  for (const auto& [n, v] : x.terms()) degrees.push_back(n);
  for (const auto& [n, v] : y.terms()) degrees.push_back(n);
  std::sort(degrees.begin(), degrees.end());
  degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
  for (int n : degrees) {
    auto v = x.term(n);
    const auto& w = y.term(n);
    v.insert(v.end(), w.begin(), w.end());
    t.emplace(n, std::move(v));
  }
  Blocks d;
  for (int n : degrees) {
    if (t.count(n + 1) == 0) continue;
    const AlgMatrix dx = x.differential(n);
    const AlgMatrix dy = y.differential(n);
    d.emplace(n, mat_blocks(alg, {x.rank(n + 1), y.rank(n + 1)}, {x.rank(n), y.rank(n)}, {{&dx, nullptr}, {nullptr, &dy}}));
  }
  auto sum = std::make_shared<const Complex>(Complex(x.algebra_ptr(), std::move(t), std::move(d)));
  auto xp = std::make_shared<const Complex>(x);
  auto yp = std::make_shared<const Complex>(y);

  Blocks ix, iy, px, py;
  for (int n : degrees) {
    const AlgMatrix idx = mat_identity(alg, x.term(n));
    const AlgMatrix idy = mat_identity(alg, y.term(n));
    const std::vector<std::size_t> rows{x.rank(n), y.rank(n)};
    if (x.rank(n) > 0) {
      ix.emplace(n, mat_blocks(alg, rows, {x.rank(n)}, {{&idx}, {nullptr}}));
      px.emplace(n, mat_blocks(alg, {x.rank(n)}, rows, {{&idx, nullptr}}));
    }
    if (y.rank(n) > 0) {
      iy.emplace(n, mat_blocks(alg, rows, {y.rank(n)}, {{nullptr}, {&idy}}));
      py.emplace(n, mat_blocks(alg, {y.rank(n)}, rows, {{nullptr, &idy}}));
    }
  }
  return DirectSum{*sum, ChainMap(xp, sum, std::move(ix)), ChainMap(yp, sum, std::move(iy)),
                   ChainMap(sum, xp, std::move(px)), ChainMap(sum, yp, std::move(py))};
}

Complex direct_sum(const std::vector<Complex>& parts, const AlgebraPtr& algebra) {
  Complex out = Complex::zero(algebra);
  for (const auto& p : parts) out = direct_sum(out, p).sum;
  return out;
}

ChainMap column(const ChainMap& f, const ChainMap& g) {
  require_equal(f.source(), g.source(), "column");
  const Algebra& alg = f.source().algebra();
  const Complex target = direct_sum(f.target(), g.target()).sum;
  Blocks b;
  for (const auto& [n, _] : f.source().terms()) {
    if (target.term(n).empty()) continue;
    const AlgMatrix fn = f.at(n);
    const AlgMatrix gn = g.at(n);
    b.emplace(n, mat_blocks(alg, {f.target().rank(n), g.target().rank(n)}, {f.source().rank(n)}, {{&fn}, {&gn}}));
  }
  return ChainMap(f.source_ptr(), std::make_shared<const Complex>(target), std::move(b));
}

ChainMap row(const ChainMap& f, const ChainMap& g) {
  require_equal(f.target(), g.target(), "row");
  const Algebra& alg = f.source().algebra();
  const Complex source = direct_sum(f.source(), g.source()).sum;
  Blocks b;
  for (const auto& [n, _] : source.terms()) {
    if (f.target().term(n).empty()) continue;
    const AlgMatrix fn = f.at(n);
    const AlgMatrix gn = g.at(n);
    b.emplace(n, mat_blocks(alg, {f.target().rank(n)}, {f.source().rank(n), g.source().rank(n)}, {{&fn, &gn}}));
  }
  return ChainMap(std::make_shared<const Complex>(source), f.target_ptr(), std::move(b));
}

/// (h; k) : X -> Y ⊕ Y' for homotopies h : X -> Y, k : X -> Y'.
Homotopy column(const Homotopy& h, const Homotopy& k) {
  const Algebra& alg = h.source().algebra();
  const Complex target = direct_sum(h.target(), k.target()).sum;
  Blocks b;
  for (const auto& [n, _] : h.source().terms()) {
    if (target.term(n - 1).empty()) continue;
    const AlgMatrix hn = h.at(n);
    const AlgMatrix kn = k.at(n);
    b.emplace(n, mat_blocks(alg, {h.target().rank(n - 1), k.target().rank(n - 1)}, {h.source().rank(n)},
                            {{&hn}, {&kn}}));
  }
  return Homotopy(h.source_ptr(), std::make_shared<const Complex>(target), std::move(b));
}

ChainMap diagonal(const ChainMap& f, const ChainMap& g) {
  const Algebra& alg = f.source().algebra();
  const Complex source = direct_sum(f.source(), g.source()).sum;
  const Complex target = direct_sum(f.target(), g.target()).sum;
  Blocks b;
  for (const auto& [n, _] : source.terms()) {
    if (target.term(n).empty()) continue;
    const AlgMatrix fn = f.at(n);
    const AlgMatrix gn = g.at(n);
    b.emplace(n, mat_blocks(alg, {f.target().rank(n), g.target().rank(n)}, {f.source().rank(n), g.source().rank(n)},
                            {{&fn, nullptr}, {nullptr, &gn}}));
  }
  return ChainMap(source, target, std::move(b));
}

Cone cone(const ChainMap& f) {
  const Complex& x = f.source();
  const Complex& y = f.target();
  const Algebra& alg = x.algebra();
  Terms t;
  for (const auto& [n, v] : x.terms()) t[n - 1];
  for (const auto& [n, v] : y.terms()) t[n];
  for (auto& [n, v] : t) {
    v = x.term(n + 1);
    const auto& w = y.term(n);
    v.insert(v.end(), w.begin(), w.end());
  }
  Blocks d;
  for (const auto& [n, _] : t) {
    if (t.count(n + 1) == 0) continue;
    const AlgMatrix ndx = mat_neg(alg, x.differential(n + 1));
    const AlgMatrix fn = f.at(n + 1);
    const AlgMatrix dy = y.differential(n);
    d.emplace(n, mat_blocks(alg, {x.rank(n + 2), y.rank(n + 1)}, {x.rank(n + 1), y.rank(n)},
                            {{&ndx, nullptr}, {&fn, &dy}}));
  }
  auto c = std::make_shared<const Complex>(Complex(x.algebra_ptr(), std::move(t), std::move(d)));

  Blocks inc, proj, null;
  for (const auto& [n, _] : c->terms()) {
    const AlgMatrix idy = mat_identity(alg, y.term(n));
    const AlgMatrix idx = mat_identity(alg, x.term(n + 1));
    if (y.rank(n) > 0) inc.emplace(n, mat_blocks(alg, {x.rank(n + 1), y.rank(n)}, {y.rank(n)}, {{nullptr}, {&idy}}));
    if (x.rank(n + 1) > 0) proj.emplace(n, mat_blocks(alg, {x.rank(n + 1)}, {x.rank(n + 1), y.rank(n)}, {{&idx, nullptr}}));
  }
  // H^n : X^n -> cone^{n-1} = X^n ⊕ Y^{n-1}, x ↦ (x, 0)
  for (const auto& [n, v] : x.terms()) {
    const AlgMatrix idx = mat_identity(alg, v);
    null.emplace(n, mat_blocks(alg, {x.rank(n), y.rank(n - 1)}, {x.rank(n)}, {{&idx}, {nullptr}}));
  }
  auto yp = f.target_ptr();
  auto xs = std::make_shared<const Complex>(shift(x, 1));
  ChainMap inclusion(yp, c, std::move(inc));
  return Cone{*c, inclusion, ChainMap(c, xs, std::move(proj)), Homotopy(f.source_ptr(), c, std::move(null))};
}

ChainMap cone_map(const ChainMap& f, const ChainMap& f_prime, const ChainMap& a, const ChainMap& b, const Homotopy& h) {
  require_equal(a.source(), f.source(), "cone_map");
  require_equal(b.source(), f.target(), "cone_map");
  require_equal(a.target(), f_prime.source(), "cone_map");
  require_equal(b.target(), f_prime.target(), "cone_map");
  require_equal(h.source(), f.source(), "cone_map");
  require_equal(h.target(), f_prime.target(), "cone_map");
  const Algebra& alg = f.source().algebra();
  const Cone c = cone(f);
  const Cone cp = cone(f_prime);
  const Complex& x = f.source();
  const Complex& y = f.target();
  const Complex& xp = f_prime.source();
  const Complex& yp = f_prime.target();
  Blocks out;
  for (const auto& [n, _] : c.complex.terms()) {
    if (cp.complex.term(n).empty()) continue;
    const AlgMatrix an = a.at(n + 1);
    const AlgMatrix hn = h.at(n + 1);
    const AlgMatrix bn = b.at(n);
    out.emplace(n, mat_blocks(alg, {xp.rank(n + 1), yp.rank(n)}, {x.rank(n + 1), y.rank(n)}, {{&an, nullptr}, {&hn, &bn}}));
  }
  return ChainMap(c.complex, cp.complex, std::move(out));
}

ChainMap permutation_map(const Complex& x, const Complex& y, const std::map<int, std::vector<std::size_t>>& perm) {
  const Algebra& alg = x.algebra();
  Blocks b;
  for (const auto& [n, idx] : perm) {
    const auto& src = x.term(n);
    const auto& tgt = y.term(n);
    if (idx.size() != tgt.size()) throw InputError("permutation_map: wrong length in degree " + std::to_string(n));
    AlgMatrix m(tgt.size(), src.size(), alg.dimension());
    for (std::size_t i = 0; i < idx.size(); ++i) {
      if (idx[i] >= src.size() || src[idx[i]] != tgt[i]) throw InputError("permutation_map: vertex mismatch");
      m.at(i, idx[i]) = alg.idempotent(tgt[i]);
    }
    b.emplace(n, std::move(m));
  }
  return ChainMap(x, y, std::move(b));
}

// --- homotopy questions ------------------------------------------------------

std::optional<Homotopy> is_nullhomotopic(const ChainMap& f) {
  const LinearSystem sys = homotopy_system(f.source(), f.target());
  auto sol = sys.solve_particular({f.components()});
  if (!sol) return std::nullopt;
  return Homotopy(f.source_ptr(), f.target_ptr(), sys.split_unknowns(*sol).front());
}

std::optional<Homotopy> find_homotopy(const ChainMap& f, const ChainMap& g) { return is_nullhomotopic(subtract(f, g)); }

std::optional<Homotopy> is_contractible(const Complex& x) {
  if (x.is_zero()) return Homotopy(x, x, {});
  return is_nullhomotopic(identity_map(x));
}

std::optional<IsoCertificate> is_iso(const ChainMap& f) {
  const Cone c = cone(f);
  auto h = is_contractible(c.complex);
  if (!h) return std::nullopt;
  const Complex& x = f.source();
  const Complex& y = f.target();
  // The Y -> X block of the contraction is a homotopy inverse.
  Blocks inv;
  for (const auto& [n, _] : y.terms()) {
    if (x.term(n).empty()) continue;
    inv.emplace(n, mat_slice(h->at(n), 0, x.rank(n), x.rank(n + 1), y.rank(n)));
  }
  return IsoCertificate{f, ChainMap(f.target_ptr(), f.source_ptr(), std::move(inv)), *h};
}

bool verify_iso(const IsoCertificate& c) {
  const Cone cn = cone(c.map);
  if (!(c.contraction.source() == cn.complex) || !(c.contraction.target() == cn.complex)) return false;
  if (!witnesses_null(c.contraction, identity_map(cn.complex))) return false;
  return c.inverse.source() == c.map.target() && c.inverse.target() == c.map.source();
}

std::vector<ChainMap> chain_map_basis(const Complex& x, const Complex& y) {
  const LinearSystem sys = commutation_system(x, y);
  const la::Matrix k = la::kernel_basis(sys.matrix());
  std::vector<ChainMap> out;
  for (std::size_t c = 0; c < k.cols(); ++c) out.push_back(chain_map_from_coords(x, y, k.column(c)));
  return out;
}

namespace {
/// Coordinates (in MapSpace(X,Y,0)) of chain maps spanning Hom_K(X, Y).
std::vector<std::vector<std::uint32_t>> quotient_coords(const Complex& x, const Complex& y) {
  const la::Matrix cycles = la::kernel_basis(commutation_system(x, y).matrix());
  const la::Matrix bounds = homotopy_system(x, y).matrix();
  const la::RrefResult red = la::rref(bounds.hconcat(cycles));
  std::vector<std::vector<std::uint32_t>> out;
  for (auto p : red.pivots) {
    if (p >= bounds.cols()) out.push_back(cycles.column(p - bounds.cols()));
  }
  return out;
}
}  // namespace

std::vector<ChainMap> hom_basis_mod_homotopy(const Complex& x, const Complex& y) {
  std::vector<ChainMap> out;
  for (const auto& c : quotient_coords(x, y)) out.push_back(chain_map_from_coords(x, y, c));
  return out;
}

std::size_t hom_dimension_mod_homotopy(const Complex& x, const Complex& y) { return quotient_coords(x, y).size(); }

IsoSearch find_iso(const Complex& x, const Complex& y, const SearchOptions& opts, const std::optional<ChainMap>& candidate) {
  IsoSearch out;
  auto attempt = [&](const ChainMap& f) {
    ++out.attempts;
    if (auto c = is_iso(f)) {
      out.certificate = std::move(c);
      return true;
    }
    return false;
  };
  if (candidate) {
    if (!(candidate->source() == x) || !(candidate->target() == y)) throw InputError("find_iso: candidate has wrong endpoints");
    if (attempt(*candidate)) {
      out.found_by_candidate = true;
      return out;
    }
  } else if (x == y) {
    if (attempt(identity_map(x))) {
      out.found_by_candidate = true;
      return out;
    }
  }
  if (x.is_zero() && y.is_zero()) {
    attempt(zero_map(x, y));
    return out;
  }
  if (homology_dims(x) != homology_dims(y)) {
    // Isomorphic complexes have equal homology; reject without searching.
    // Dimension vectors are compared after dropping zero degrees.
    if (nonzero_homology(x) != nonzero_homology(y)) return out;
  }
  const auto basis = quotient_coords(x, y);
  if (basis.empty()) {
    if (is_contractible(x) && is_contractible(y)) attempt(zero_map(x, y));
    return out;
  }
  for (const auto& b : basis) {
    if (attempt(chain_map_from_coords(x, y, b))) return out;
  }
  std::mt19937_64 rng(opts.seed);
  const std::uint32_t p = x.algebra().modulus();
  const la::Field fld(p);
  std::uniform_int_distribution<std::uint32_t> dist(0, p - 1);
  for (std::size_t k = 0; k < opts.budget; ++k) {
    std::vector<std::uint32_t> v(basis.front().size(), 0);
    for (const auto& b : basis) {
      const std::uint32_t c = dist(rng);
      if (c == 0) continue;
      for (std::size_t i = 0; i < v.size(); ++i) v[i] = fld.add(v[i], fld.mul(c, b[i]));
    }
    if (attempt(chain_map_from_coords(x, y, v))) return out;
  }
  return out;
}

HomologyDims homology_dims(const Complex& x) {
  const Algebra& alg = x.algebra();
  HomologyDims out;
  if (x.is_zero()) return out;
  const std::size_t nv = alg.vertex_count();
  // k-matrix of d^n restricted to X^n e_v -> X^{n+1} e_v.
  auto restricted = [&](int n, std::size_t v) {
    const auto& src = x.term(n);
    const auto& tgt = x.term(n + 1);
    std::vector<std::size_t> col_off(src.size() + 1, 0), row_off(tgt.size() + 1, 0);
    for (std::size_t j = 0; j < src.size(); ++j) col_off[j + 1] = col_off[j] + alg.paths_between(src[j], v).size();
    for (std::size_t i = 0; i < tgt.size(); ++i) row_off[i + 1] = row_off[i] + alg.paths_between(tgt[i], v).size();
    la::Matrix m(row_off.back(), col_off.back(), alg.modulus());
    const AlgMatrix d = x.differential(n);
    for (std::size_t i = 0; i < tgt.size(); ++i) {
      for (std::size_t j = 0; j < src.size(); ++j) {
        if (d(i, j).is_zero()) continue;
        const auto& paths = alg.paths_between(src[j], v);
        for (std::size_t k = 0; k < paths.size(); ++k) {
          const AlgebraElement img = alg.multiply(d(i, j), alg.path_element(paths[k]));
          for (std::size_t p = 0; p < img.dimension(); ++p) {
            if (img[p] != 0) m.set(row_off[i] + alg.local_index(p), col_off[j] + k, img[p]);
          }
        }
      }
    }
    return m;
  };
  for (int n = x.min_degree(); n <= x.max_degree(); ++n) {
    std::vector<std::size_t> dims(nv, 0);
    for (std::size_t v = 0; v < nv; ++v) {
      std::size_t dim = 0;
      for (auto s : x.term(n)) dim += alg.paths_between(s, v).size();
      if (dim == 0) continue;
      const std::size_t out_rank = x.term(n + 1).empty() ? 0 : la::rank(restricted(n, v));
      const std::size_t in_rank = x.term(n - 1).empty() ? 0 : la::rank(restricted(n - 1, v));
      dims[v] = dim - out_rank - in_rank;
    }
    out.emplace(n, std::move(dims));
  }
  return out;
}

HomologyDims nonzero_homology(const Complex& x) {
  HomologyDims out;
  for (auto& [n, d] : homology_dims(x)) {
    if (std::any_of(d.begin(), d.end(), [](auto v) { return v != 0; })) out.emplace(n, d);
  }
  return out;
}

std::string describe(const Complex& x) {
  std::ostringstream os;
  if (x.is_zero()) return "0";
  bool first = true;
  for (const auto& [n, t] : x.terms()) {
    if (!first) os << " -> ";
    first = false;
    os << "[" << n << ":";
    for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << "P" << x.algebra().vertex_name(t[i]);
    os << "]";
  }
  return os.str();
}

}  // namespace trideg
