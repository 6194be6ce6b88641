#include "trideg/algebra.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "trideg/error.hpp"

namespace trideg {

namespace {

void validate(const QuiverPresentation& q) {
  if (q.vertices.empty()) throw InputError("quiver has no vertices");
  std::set<std::string> names;
  for (const auto& v : q.vertices) {
    if (v.empty()) throw InputError("empty vertex name");
    if (!names.insert(v).second) throw InputError("duplicate vertex name '" + v + "'");
  }
  std::set<std::string> arrow_names;
  for (const auto& a : q.arrows) {
    if (a.name.empty()) throw InputError("empty arrow name");
    if (a.name.find('*') != std::string::npos || a.name.rfind("e_", 0) == 0) {
      throw InputError("arrow name '" + a.name + "' may not contain '*' or start with 'e_'");
    }
    if (!arrow_names.insert(a.name).second) throw InputError("duplicate arrow name '" + a.name + "'");
    if (a.source >= q.vertices.size() || a.target >= q.vertices.size()) {
      throw InputError("arrow '" + a.name + "' has an unknown endpoint");
    }
  }
  for (const auto& rel : q.relations) {
    if (rel.empty()) throw InputError("empty relation");
    for (std::size_t i = 0; i < rel.size(); ++i) {
      if (rel[i] >= q.arrows.size()) throw InputError("relation refers to an unknown arrow");
      if (i > 0 && q.arrows[rel[i - 1]].target != q.arrows[rel[i]].source) {
        throw InputError("relation is not a composable path (arrows are listed in traversal order)");
      }
    }
  }
}

bool ends_with_relation(const QuiverPresentation& q, const std::vector<std::size_t>& path) {
  for (const auto& rel : q.relations) {
    if (rel.size() > path.size()) continue;
    if (std::equal(rel.begin(), rel.end(), path.end() - static_cast<std::ptrdiff_t>(rel.size()))) {
      return true;
    }
  }
  return false;
}

/// Extends every path of `level` by one arrow, dropping relation hits.
std::vector<BasisPath> next_level(const QuiverPresentation& q, const std::vector<BasisPath>& level) {
  std::vector<BasisPath> out;
  for (const auto& p : level) {
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
      if (q.arrows[a].source != p.end) continue;
      BasisPath ext{p.start, q.arrows[a].target, p.arrows};
      ext.arrows.push_back(a);
      if (!ends_with_relation(q, ext.arrows)) out.push_back(std::move(ext));
    }
  }
  return out;
}

// Nonzero paths of length >= w correspond to walks in the graph whose nodes
// are nonzero paths of length w and whose edges are nonzero paths of length
// w+1, where w+1 bounds every relation length. The quotient is finite iff
// this graph has no cycle.
bool has_unbounded_paths(const QuiverPresentation& q) {
  std::size_t max_rel = 0;
  for (const auto& r : q.relations) max_rel = std::max(max_rel, r.size());
  const std::size_t window = std::max<std::size_t>(1, max_rel == 0 ? 1 : max_rel - 1);

  std::vector<BasisPath> level;
  for (std::size_t v = 0; v < q.vertices.size(); ++v) level.push_back({v, v, {}});
  for (std::size_t l = 0; l < window; ++l) level = next_level(q, level);
  const std::vector<BasisPath> edges = next_level(q, level);

  std::map<std::vector<std::size_t>, std::size_t> node_id;
  for (const auto& p : level) node_id.emplace(p.arrows, node_id.size());
  std::vector<std::vector<std::size_t>> adj(node_id.size());
  for (const auto& e : edges) {
    std::vector<std::size_t> head(e.arrows.begin(), e.arrows.end() - 1);
    std::vector<std::size_t> tail(e.arrows.begin() + 1, e.arrows.end());
    auto h = node_id.find(head);
    auto t = node_id.find(tail);
    if (h != node_id.end() && t != node_id.end()) adj[h->second].push_back(t->second);
  }
  std::vector<int> state(adj.size(), 0);
  std::function<bool(std::size_t)> dfs = [&](std::size_t u) {
    state[u] = 1;
    for (auto w : adj[u]) {
      if (state[w] == 1) return true;
      if (state[w] == 0 && dfs(w)) return true;
    }
    state[u] = 2;
    return false;
  };
  for (std::size_t u = 0; u < adj.size(); ++u) {
    if (state[u] == 0 && dfs(u)) return true;
  }
  return false;
}

}  // namespace

PathBasis::PathBasis(std::vector<BasisPath> paths) : paths_(std::move(paths)) {
  for (std::size_t i = 0; i < paths_.size(); ++i) index_.emplace(std::make_pair(paths_[i].start, paths_[i].arrows), i);
}

std::optional<std::size_t> PathBasis::find(std::size_t start, const std::vector<std::size_t>& arrows) const {
  auto it = index_.find({start, arrows});
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

PathBasis build_basis(const QuiverPresentation& q) {
  validate(q);
  if (has_unbounded_paths(q)) {
    if (q.nilpotency_bound) {
      throw InputError("paths of length >= nilpotency_bound " + std::to_string(*q.nilpotency_bound) +
                       " survive the relations");
    }
    throw InputError("infinite-dimensional algebra: a cycle survives the relations and no nilpotency bound holds");
  }
  std::vector<BasisPath> all;
  std::vector<BasisPath> level;
  for (std::size_t v = 0; v < q.vertices.size(); ++v) level.push_back({v, v, {}});
  while (!level.empty()) {
    for (const auto& p : level) {
      if (q.nilpotency_bound && p.length() >= *q.nilpotency_bound) {
        throw InputError("path of length " + std::to_string(p.length()) +
                         " >= nilpotency_bound survives the relations");
      }
    }
    all.insert(all.end(), level.begin(), level.end());
    level = next_level(q, level);
  }
  return PathBasis(std::move(all));
}

Algebra::Algebra(QuiverPresentation q) : pres_(std::move(q)), field_(pres_.field) {}

std::shared_ptr<const Algebra> Algebra::build(QuiverPresentation q) {
  std::shared_ptr<Algebra> a(new Algebra(std::move(q)));
  a->basis_ = build_basis(a->pres_);
  const std::size_t n = a->basis_.size();
  a->product_.assign(n * n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& p = a->basis_[i];
    for (std::size_t j = 0; j < n; ++j) {
      const auto& r = a->basis_[j];
      if (p.end != r.start) continue;
      std::vector<std::size_t> cat = p.arrows;
      cat.insert(cat.end(), r.arrows.begin(), r.arrows.end());
      if (auto k = a->basis_.find(p.start, cat)) a->product_[i * n + j] = static_cast<std::int64_t>(*k);
    }
  }
  const std::size_t nv = a->vertex_count();
  a->between_.assign(nv * nv, {});
  a->local_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    auto& bucket = a->between_[a->basis_[i].start * nv + a->basis_[i].end];
    a->local_[i] = bucket.size();
    bucket.push_back(i);
  }
  return a;
}

std::size_t Algebra::vertex_index(const std::string& name) const {
  for (std::size_t i = 0; i < pres_.vertices.size(); ++i) {
    if (pres_.vertices[i] == name) return i;
  }
  throw InputError("unknown vertex '" + name + "'");
}

bool AlgebraElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](auto c) { return c == 0; });
}

AlgebraElement Algebra::idempotent(std::size_t v) const {
  return path_element(*basis_.find(v, {}));
}

AlgebraElement Algebra::path_element(std::size_t path, std::uint32_t coeff) const {
  AlgebraElement e(dimension());
  e.set(path, coeff % modulus());
  return e;
}

AlgebraElement Algebra::one() const {
  AlgebraElement e(dimension());
  for (std::size_t v = 0; v < vertex_count(); ++v) e.set(*basis_.find(v, {}), 1);
  return e;
}

AlgebraElement Algebra::multiply(const AlgebraElement& a, const AlgebraElement& b) const {
  const std::size_t n = dimension();
  AlgebraElement out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j] == 0) continue;
      const auto k = product_[i * n + j];
      if (k < 0) continue;
      const auto idx = static_cast<std::size_t>(k);
      out.set(idx, field_.add(out[idx], field_.mul(a[i], b[j])));
    }
  }
  return out;
}

AlgebraElement Algebra::add(const AlgebraElement& a, const AlgebraElement& b) const {
  AlgebraElement out(dimension());
  for (std::size_t i = 0; i < dimension(); ++i) out.set(i, field_.add(a[i], b[i]));
  return out;
}

AlgebraElement Algebra::sub(const AlgebraElement& a, const AlgebraElement& b) const {
  AlgebraElement out(dimension());
  for (std::size_t i = 0; i < dimension(); ++i) out.set(i, field_.sub(a[i], b[i]));
  return out;
}

AlgebraElement Algebra::neg(const AlgebraElement& a) const {
  AlgebraElement out(dimension());
  for (std::size_t i = 0; i < dimension(); ++i) out.set(i, field_.neg(a[i]));
  return out;
}

AlgebraElement Algebra::scale(const AlgebraElement& a, std::uint32_t c) const {
  AlgebraElement out(dimension());
  for (std::size_t i = 0; i < dimension(); ++i) out.set(i, field_.mul(a[i], c % modulus()));
  return out;
}

std::vector<AlgebraElement> Algebra::hom_basis(std::size_t v, std::size_t w) const {
  std::vector<AlgebraElement> out;
  for (auto p : paths_between(w, v)) out.push_back(path_element(p));
  return out;
}

bool Algebra::in_hom(const AlgebraElement& a, std::size_t v, std::size_t w) const {
  for (std::size_t i = 0; i < dimension(); ++i) {
    if (a[i] != 0 && (basis_[i].start != w || basis_[i].end != v)) return false;
  }
  return true;
}

std::vector<std::size_t> Algebra::projective_dimension_vector(std::size_t v) const {
  std::vector<std::size_t> dims(vertex_count(), 0);
  for (std::size_t w = 0; w < vertex_count(); ++w) dims[w] = paths_between(v, w).size();
  return dims;
}

std::string Algebra::path_name(std::size_t path) const {
  const auto& p = basis_[path];
  if (p.arrows.empty()) return "e_" + pres_.vertices[p.start];
  std::string out;
  for (std::size_t i = 0; i < p.arrows.size(); ++i) {
    if (i > 0) out += '*';
    out += pres_.arrows[p.arrows[i]].name;
  }
  return out;
}

std::optional<std::size_t> Algebra::parse_path(const std::string& name) const {
  if (name.rfind("e_", 0) == 0) {
    const std::string v = name.substr(2);
    for (std::size_t i = 0; i < pres_.vertices.size(); ++i) {
      if (pres_.vertices[i] == v) return basis_.find(i, {});
    }
    return std::nullopt;
  }
  std::vector<std::size_t> arrows;
  std::size_t pos = 0;
  while (pos <= name.size()) {
    const std::size_t next = name.find('*', pos);
    const std::string token = name.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    auto it = std::find_if(pres_.arrows.begin(), pres_.arrows.end(), [&](const Arrow& a) { return a.name == token; });
    if (it == pres_.arrows.end()) return std::nullopt;
    arrows.push_back(static_cast<std::size_t>(it - pres_.arrows.begin()));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  if (arrows.empty()) return std::nullopt;
  return basis_.find(pres_.arrows[arrows.front()].source, arrows);
}

bool Algebra::is_acyclic() const {
  const std::size_t n = vertex_count();
  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& a : pres_.arrows) adj[a.source].push_back(a.target);
  std::vector<int> state(n, 0);
  std::function<bool(std::size_t)> cyc = [&](std::size_t u) {
    state[u] = 1;
    for (auto w : adj[u]) {
      if (state[w] == 1 || (state[w] == 0 && cyc(w))) return true;
    }
    state[u] = 2;
    return false;
  };
  for (std::size_t u = 0; u < n; ++u) {
    if (state[u] == 0 && cyc(u)) return false;
  }
  return true;
}

bool AlgMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const auto& e) { return e.is_zero(); });
}

AlgMatrix mat_mul(const Algebra& a, const AlgMatrix& x, const AlgMatrix& y) {
  if (x.cols() != y.rows()) throw InputError("algebra matrix product shape mismatch");
  AlgMatrix out(x.rows(), y.cols(), a.dimension());
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t k = 0; k < x.cols(); ++k) {
      if (x(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < y.cols(); ++j) {
        if (y(k, j).is_zero()) continue;
        out.at(i, j) = a.add(out(i, j), a.multiply(x(i, k), y(k, j)));
      }
    }
  }
  return out;
}

AlgMatrix mat_add(const Algebra& a, const AlgMatrix& x, const AlgMatrix& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) throw InputError("algebra matrix sum shape mismatch");
  AlgMatrix out(x.rows(), x.cols(), a.dimension());
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t j = 0; j < x.cols(); ++j) out.at(i, j) = a.add(x(i, j), y(i, j));
  }
  return out;
}

AlgMatrix mat_sub(const Algebra& a, const AlgMatrix& x, const AlgMatrix& y) {
  return mat_add(a, x, mat_neg(a, y));
}

AlgMatrix mat_neg(const Algebra& a, const AlgMatrix& x) {
  AlgMatrix out(x.rows(), x.cols(), a.dimension());
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t j = 0; j < x.cols(); ++j) out.at(i, j) = a.neg(x(i, j));
  }
  return out;
}

AlgMatrix mat_scale(const Algebra& a, const AlgMatrix& x, std::uint32_t c) {
  AlgMatrix out(x.rows(), x.cols(), a.dimension());
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t j = 0; j < x.cols(); ++j) out.at(i, j) = a.scale(x(i, j), c);
  }
  return out;
}

AlgMatrix mat_identity(const Algebra& a, const std::vector<std::size_t>& vertices) {
  AlgMatrix out(vertices.size(), vertices.size(), a.dimension());
  for (std::size_t i = 0; i < vertices.size(); ++i) out.at(i, i) = a.idempotent(vertices[i]);
  return out;
}

AlgMatrix mat_blocks(const Algebra& a, const std::vector<std::size_t>& row_heights,
                     const std::vector<std::size_t>& col_widths,
                     const std::vector<std::vector<const AlgMatrix*>>& blocks) {
  std::size_t rows = 0, cols = 0;
  for (auto h : row_heights) rows += h;
  for (auto w : col_widths) cols += w;
  AlgMatrix out(rows, cols, a.dimension());
  std::size_t r0 = 0;
  for (std::size_t bi = 0; bi < row_heights.size(); ++bi) {
    std::size_t c0 = 0;
    for (std::size_t bj = 0; bj < col_widths.size(); ++bj) {
      const AlgMatrix* b = blocks[bi][bj];
      if (b != nullptr) {
        if (b->rows() != row_heights[bi] || b->cols() != col_widths[bj]) {
          throw InputError("block matrix: inconsistent block shape");
        }
        for (std::size_t i = 0; i < b->rows(); ++i) {
          for (std::size_t j = 0; j < b->cols(); ++j) out.at(r0 + i, c0 + j) = (*b)(i, j);
        }
      }
      c0 += col_widths[bj];
    }
    r0 += row_heights[bi];
  }
  return out;
}

AlgMatrix mat_slice(const AlgMatrix& x, std::size_t r0, std::size_t nr, std::size_t c0, std::size_t nc) {
  const std::size_t dim = x.rows() * x.cols() > 0 ? x(0, 0).dimension() : 0;
  AlgMatrix out(nr, nc, dim);
  for (std::size_t i = 0; i < nr; ++i) {
    for (std::size_t j = 0; j < nc; ++j) out.at(i, j) = x(r0 + i, c0 + j);
  }
  return out;
}

}  // namespace trideg
