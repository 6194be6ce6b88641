#pragma once

// Independent checks used by the tests. They avoid the library's solvers:
// everything here is brute-force enumeration or direct entry inspection.

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "trideg/complexes.hpp"

namespace oracle {

/// Exact d∘d = 0 and hom-entry constraints by direct inspection of every entry.
inline bool well_formed(const trideg::Complex& x) {
  const trideg::Algebra& a = x.algebra();
  for (const auto& [n, d] : x.differentials()) {
    const auto& src = x.term(n);
    const auto& tgt = x.term(n + 1);
    for (std::size_t i = 0; i < d.rows(); ++i)
      for (std::size_t j = 0; j < d.cols(); ++j)
        for (std::size_t p = 0; p < a.dimension(); ++p)
          if (d(i, j)[p] != 0 && (a.basis()[p].start != tgt[i] || a.basis()[p].end != src[j])) return false;
  }
  for (int n = x.min_degree(); n < x.max_degree(); ++n) {
    const auto& t0 = x.term(n);
    const auto& t2 = x.term(n + 2);
    if (t0.empty() || t2.empty()) continue;
    const auto d0 = x.differential(n);
    const auto d1 = x.differential(n + 1);
    for (std::size_t i = 0; i < t2.size(); ++i)
      for (std::size_t j = 0; j < t0.size(); ++j) {
        trideg::AlgebraElement acc = a.zero();
        for (std::size_t k = 0; k < x.rank(n + 1); ++k) acc = a.add(acc, a.multiply(d1(i, k), d0(k, j)));
        if (!acc.is_zero()) return false;
      }
  }
  return true;
}

/// Brute-force H^n(X)e_v over a small field: enumerate every vector of
/// X^n e_v, count the kernel of d^n and the image of d^{n-1}.
inline std::map<int, std::vector<std::size_t>> homology(const trideg::Complex& x) {
  const trideg::Algebra& a = x.algebra();
  const std::uint32_t p = a.modulus();
  std::map<int, std::vector<std::size_t>> out;
  // Basis of X^n e_v: pairs (summand, path from that summand's vertex to v).
  auto basis = [&](int n, std::size_t v) {
    std::vector<std::pair<std::size_t, std::size_t>> b;
    const auto& t = x.term(n);
    for (std::size_t s = 0; s < t.size(); ++s)
      for (std::size_t q = 0; q < a.dimension(); ++q)
        if (a.basis()[q].start == t[s] && a.basis()[q].end == v) b.emplace_back(s, q);
    return b;
  };
  // Image of a coordinate vector under d^n, as coordinates in X^{n+1} e_v.
  auto apply = [&](int n, std::size_t v, const std::vector<std::uint32_t>& c) {
    const auto src = basis(n, v);
    const auto tgt = basis(n + 1, v);
    std::vector<std::uint32_t> out_c(tgt.size(), 0);
    if (x.term(n + 1).empty()) return out_c;
    const auto d = x.differential(n);
    for (std::size_t k = 0; k < src.size(); ++k) {
      if (c[k] == 0) continue;
      const auto [s, q] = src[k];
      for (std::size_t i = 0; i < d.rows(); ++i) {
        const auto prod = a.multiply(d(i, s), a.path_element(q, c[k]));
        for (std::size_t r = 0; r < prod.dimension(); ++r) {
          if (prod[r] == 0) continue;
          for (std::size_t m = 0; m < tgt.size(); ++m)
            if (tgt[m].first == i && tgt[m].second == r) out_c[m] = (out_c[m] + prod[r]) % p;
        }
      }
    }
    return out_c;
  };
  auto all_vectors = [&](std::size_t dim) {
    std::vector<std::vector<std::uint32_t>> vs{{}};
    for (std::size_t i = 0; i < dim; ++i) {
      std::vector<std::vector<std::uint32_t>> next;
      for (const auto& v : vs)
        for (std::uint32_t c = 0; c < p; ++c) {
          auto w = v;
          w.push_back(c);
          next.push_back(w);
        }
      vs.swap(next);
    }
    return vs;
  };
  auto log_p = [&](std::size_t count) {
    std::size_t d = 0;
    while (count > 1) {
      count /= p;
      ++d;
    }
    return d;
  };
  for (int n = x.min_degree(); n <= x.max_degree(); ++n) {
    if (x.term(n).empty()) continue;
    std::vector<std::size_t> dims(a.vertex_count(), 0);
    for (std::size_t v = 0; v < a.vertex_count(); ++v) {
      const std::size_t dim = basis(n, v).size();
      if (dim == 0) continue;
      std::size_t kernel = 0;
      for (const auto& c : all_vectors(dim)) {
        const auto img = apply(n, v, c);
        bool zero = true;
        for (auto e : img) zero = zero && e == 0;
        kernel += zero;
      }
      std::set<std::vector<std::uint32_t>> image;
      if (!x.term(n - 1).empty())
        for (const auto& c : all_vectors(basis(n - 1, v).size())) image.insert(apply(n - 1, v, c));
      dims[v] = log_p(kernel) - (image.empty() ? 0 : log_p(image.size()));
    }
    out.emplace(n, dims);
  }
  return out;
}

}  // namespace oracle
