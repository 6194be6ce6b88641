#include "trideg/hom_solver.hpp"

#include "trideg/error.hpp"

namespace trideg {

namespace {
const std::vector<std::size_t>& lookup(const Terms& t, int n) {
  static const std::vector<std::size_t> empty;
  auto it = t.find(n);
  return it == t.end() ? empty : it->second;
}
}  // namespace

MapSpace::MapSpace(const Algebra& algebra, Terms source, Terms target, int degree)
    : algebra_(&algebra), source_(std::move(source)), target_(std::move(target)), degree_(degree) {
  for (const auto& [n, src] : source_) {
    const auto& tgt = lookup(target_, n + degree_);
    if (src.empty() || tgt.empty()) continue;
    degrees_.push_back(n);
    block_offset_[n] = size_;
    auto& offs = entry_offsets_[n];
    offs.resize(tgt.size() * src.size());
    for (std::size_t i = 0; i < tgt.size(); ++i) {
      for (std::size_t j = 0; j < src.size(); ++j) {
        offs[i * src.size() + j] = size_;
        size_ += algebra_->paths_between(tgt[i], src[j]).size();
      }
    }
  }
}

bool MapSpace::has_block(int n) const { return block_offset_.count(n) > 0; }

const std::vector<std::size_t>& MapSpace::source_term(int n) const { return lookup(source_, n); }
const std::vector<std::size_t>& MapSpace::target_term(int n) const { return lookup(target_, n + degree_); }

std::size_t MapSpace::offset(int n, std::size_t i, std::size_t j) const {
  return entry_offsets_.at(n)[i * source_term(n).size() + j];
}

Blocks MapSpace::to_blocks(std::span<const std::uint32_t> coords) const {
  Blocks out;
  for (int n : degrees_) {
    const auto& src = source_term(n);
    const auto& tgt = target_term(n);
    AlgMatrix m(tgt.size(), src.size(), algebra_->dimension());
    for (std::size_t i = 0; i < tgt.size(); ++i) {
      for (std::size_t j = 0; j < src.size(); ++j) {
        const auto& paths = algebra_->paths_between(tgt[i], src[j]);
        const std::size_t off = offset(n, i, j);
        for (std::size_t k = 0; k < paths.size(); ++k) m.at(i, j).set(paths[k], coords[off + k]);
      }
    }
    out.emplace(n, std::move(m));
  }
  return out;
}

std::vector<std::uint32_t> MapSpace::to_coords(const Blocks& blocks) const {
  std::vector<std::uint32_t> out(size_, 0);
  for (int n : degrees_) {
    auto it = blocks.find(n);
    if (it == blocks.end()) continue;
    const auto& src = source_term(n);
    const auto& tgt = target_term(n);
    const AlgMatrix& m = it->second;
    if (m.rows() != tgt.size() || m.cols() != src.size()) throw InputError("map block shape mismatch");
    for (std::size_t i = 0; i < tgt.size(); ++i) {
      for (std::size_t j = 0; j < src.size(); ++j) {
        const AlgebraElement& e = m(i, j);
        const std::size_t off = offset(n, i, j);
        for (std::size_t p = 0; p < e.dimension(); ++p) {
          if (e[p] == 0) continue;
          const auto& bp = algebra_->basis()[p];
          if (bp.start != tgt[i] || bp.end != src[j]) throw InputError("map entry violates hom constraint");
          out[off + algebra_->local_index(p)] = e[p];
        }
      }
    }
  }
  return out;
}

std::size_t LinearSystem::add_unknown(MapSpace space) {
  unknowns_.push_back(std::move(space));
  return unknowns_.size() - 1;
}

std::size_t LinearSystem::add_equation(MapSpace space) {
  equations_.push_back(std::move(space));
  return equations_.size() - 1;
}

void LinearSystem::add_term(std::size_t eq, int n_out, std::size_t unknown, int n_in,
                            const AlgMatrix* left, const AlgMatrix* right, std::uint32_t coeff) {
  if (!unknowns_.at(unknown).has_block(n_in) || !equations_.at(eq).has_block(n_out)) return;
  Term t{eq, n_out, unknown, n_in, std::nullopt, std::nullopt, coeff % algebra_->modulus()};
  if (left != nullptr) t.left = *left;
  if (right != nullptr) t.right = *right;
  const auto& u = unknowns_[unknown];
  const auto& e = equations_[eq];
  const std::size_t rows = t.left ? t.left->rows() : u.target_term(n_in).size();
  const std::size_t cols = t.right ? t.right->cols() : u.source_term(n_in).size();
  if ((t.left && t.left->cols() != u.target_term(n_in).size()) ||
      (t.right && t.right->rows() != u.source_term(n_in).size()) ||
      rows != e.target_term(n_out).size() || cols != e.source_term(n_out).size()) {
    throw InputError("linear system term has inconsistent shape");
  }
  terms_.push_back(std::move(t));
}

std::size_t LinearSystem::unknown_count() const { return unknown_offset(unknowns_.size()); }
std::size_t LinearSystem::equation_count() const { return equation_offset(equations_.size()); }

std::size_t LinearSystem::unknown_offset(std::size_t u) const {
  std::size_t off = 0;
  for (std::size_t i = 0; i < u; ++i) off += unknowns_[i].size();
  return off;
}

std::size_t LinearSystem::equation_offset(std::size_t e) const {
  std::size_t off = 0;
  for (std::size_t i = 0; i < e; ++i) off += equations_[i].size();
  return off;
}

la::Matrix LinearSystem::matrix() const {
  const Algebra& alg = *algebra_;
  const la::Field& f = alg.field();
  la::Matrix m(equation_count(), unknown_count(), alg.modulus());
  // Dense accumulation buffer; la::Matrix::set reduces mod p.
  std::vector<std::uint32_t> acc(m.rows() * m.cols(), 0);
  const std::size_t ncols = m.cols();

  for (const Term& t : terms_) {
    const MapSpace& u = unknowns_[t.unknown];
    const MapSpace& e = equations_[t.eq];
    const std::size_t u_off = unknown_offset(t.unknown);
    const std::size_t e_off = equation_offset(t.eq);
    const auto& u_src = u.source_term(t.n_in);
    const auto& u_tgt = u.target_term(t.n_in);
    const auto& e_src = e.source_term(t.n_out);
    const auto& e_tgt = e.target_term(t.n_out);

    for (std::size_t i = 0; i < u_tgt.size(); ++i) {
      for (std::size_t j = 0; j < u_src.size(); ++j) {
        const auto& paths = alg.paths_between(u_tgt[i], u_src[j]);
        const std::size_t var0 = u_off + u.offset(t.n_in, i, j);
        for (std::size_t b = 0; b < paths.size(); ++b) {
          const std::size_t col = var0 + b;
          const AlgebraElement unit = alg.path_element(paths[b]);
          // left · E_ij(b): column i of left times b, landing in column j.
          std::vector<std::pair<std::size_t, AlgebraElement>> lcol;
          if (t.left) {
            for (std::size_t k = 0; k < t.left->rows(); ++k) {
              const auto& lk = (*t.left)(k, i);
              if (lk.is_zero()) continue;
              AlgebraElement prod = alg.multiply(lk, unit);
              if (!prod.is_zero()) lcol.emplace_back(k, std::move(prod));
            }
          } else {
            lcol.emplace_back(i, unit);
          }
          for (const auto& [k, lk] : lcol) {
            std::vector<std::pair<std::size_t, AlgebraElement>> out;
            if (t.right) {
              for (std::size_t l = 0; l < t.right->cols(); ++l) {
                const auto& r = (*t.right)(j, l);
                if (r.is_zero()) continue;
                AlgebraElement prod = alg.multiply(lk, r);
                if (!prod.is_zero()) out.emplace_back(l, std::move(prod));
              }
            } else {
              out.emplace_back(j, lk);
            }
            for (const auto& [l, val] : out) {
              const std::size_t row0 = e_off + e.offset(t.n_out, k, l);
              for (std::size_t p = 0; p < val.dimension(); ++p) {
                if (val[p] == 0) continue;
                const auto& bp = alg.basis()[p];
                if (bp.start != e_tgt[k] || bp.end != e_src[l]) {
                  throw InputError("linear system term leaves its hom space");
                }
                auto& slot = acc[(row0 + alg.local_index(p)) * ncols + col];
                slot = f.add(slot, f.mul(val[p], t.coeff));
              }
            }
          }
        }
      }
    }
  }
  return la::Matrix(m.rows(), m.cols(), alg.modulus(), std::move(acc));
}

std::vector<std::uint32_t> LinearSystem::flatten_equations(const std::vector<Blocks>& values) const {
  if (values.size() != equations_.size()) throw InputError("one right-hand side per equation space expected");
  std::vector<std::uint32_t> out;
  out.reserve(equation_count());
  for (std::size_t i = 0; i < equations_.size(); ++i) {
    auto c = equations_[i].to_coords(values[i]);
    out.insert(out.end(), c.begin(), c.end());
  }
  return out;
}

std::vector<Blocks> LinearSystem::split_unknowns(std::span<const std::uint32_t> coords) const {
  std::vector<Blocks> out;
  std::size_t off = 0;
  for (const auto& u : unknowns_) {
    out.push_back(u.to_blocks(coords.subspan(off, u.size())));
    off += u.size();
  }
  return out;
}

std::optional<AffineSolution> LinearSystem::solve(const std::vector<Blocks>& rhs) const {
  const la::Matrix a = matrix();
  const auto b = flatten_equations(rhs);
  la::Matrix bm(b.size(), 1, algebra_->modulus(), b);
  auto x = la::solve(a, bm);
  if (!x) return std::nullopt;
  return AffineSolution{x->column(0), la::kernel_basis(a)};
}

std::optional<std::vector<std::uint32_t>> LinearSystem::solve_particular(const std::vector<Blocks>& rhs) const {
  const la::Matrix a = matrix();
  const auto b = flatten_equations(rhs);
  la::Matrix bm(b.size(), 1, algebra_->modulus(), b);
  auto x = la::solve(a, bm);
  if (!x) return std::nullopt;
  return x->column(0);
}

std::vector<std::uint32_t> sample(const AffineSolution& s, std::mt19937_64& rng) {
  const std::uint32_t p = s.kernel.modulus();
  const la::Field f(p);
  std::vector<std::uint32_t> out = s.particular;
  std::uniform_int_distribution<std::uint32_t> dist(0, p - 1);
  for (std::size_t c = 0; c < s.kernel.cols(); ++c) {
    const std::uint32_t coef = dist(rng);
    if (coef == 0) continue;
    for (std::size_t r = 0; r < s.kernel.rows(); ++r) out[r] = f.add(out[r], f.mul(coef, s.kernel(r, c)));
  }
  return out;
}

LinearSystem homotopy_system(const Complex& x, const Complex& y) {
  LinearSystem sys(x.algebra());
  const auto h = sys.add_unknown(MapSpace(x, y, -1));
  const auto eq = sys.add_equation(MapSpace(x, y, 0));
  for (const auto& [n, _] : x.terms()) {
    // (d h + h d)^n = d_Y^{n-1} h^n + h^{n+1} d_X^n
    const AlgMatrix dy = y.differential(n - 1);
    const AlgMatrix dx = x.differential(n);
    sys.add_term(eq, n, h, n, &dy, nullptr);
    sys.add_term(eq, n, h, n + 1, nullptr, &dx);
  }
  return sys;
}

LinearSystem commutation_system(const Complex& x, const Complex& y) {
  const la::Field& fld = x.algebra().field();
  LinearSystem sys(x.algebra());
  const auto f = sys.add_unknown(MapSpace(x, y, 0));
  const auto eq = sys.add_equation(MapSpace(x, y, 1));
  for (const auto& [n, _] : x.terms()) {
    // d_Y^n f^n - f^{n+1} d_X^n
    const AlgMatrix dy = y.differential(n);
    const AlgMatrix dx = x.differential(n);
    sys.add_term(eq, n, f, n, &dy, nullptr);
    sys.add_term(eq, n, f, n + 1, nullptr, &dx, fld.neg(1));
  }
  return sys;
}

ChainMap chain_map_from_coords(const Complex& x, const Complex& y, std::span<const std::uint32_t> coords) {
  return ChainMap(x, y, MapSpace(x, y, 0).to_blocks(coords));
}

}  // namespace trideg
