#include "trideg/obstruction.hpp"

#include <algorithm>

#include "trideg/error.hpp"

namespace trideg {

namespace {
bool vanishes(const HomologyDims& h, int n) {
  auto it = h.find(n);
  if (it == h.end()) return true;
  return std::all_of(it->second.begin(), it->second.end(), [](auto d) { return d == 0; });
}
}  // namespace

std::optional<ObstructionCertificate> isolated_homology_obstruction(const Complex& m) {
  const HomologyDims h = homology_dims(m);
  for (auto it = h.rbegin(); it != h.rend(); ++it) {
    const int n = it->first;
    if (vanishes(h, n)) continue;
    if (vanishes(h, n - 1) && vanishes(h, n + 1)) return ObstructionCertificate{n, h, "LES-certificate"};
  }
  return std::nullopt;
}

bool verify_obstruction(const ObstructionCertificate& c, const Complex& m) {
  const HomologyDims h = homology_dims(m);
  return h == c.homology && !vanishes(h, c.degree) && vanishes(h, c.degree - 1) && vanishes(h, c.degree + 1);
}

ZeroDegeneration zero_degenerates_witness(const Complex& s) {
  const Complex zero = Complex::zero(s.algebra_ptr());
  DegenerationWitness w = left_witness(zero_map(s, s), zero_map(s, zero));
  const Complex target = direct_sum(shift(s, 1), s).sum;
  Blocks id;
  for (const auto& [n, t] : w.n.terms()) id.emplace(n, mat_identity(s.algebra(), t));
  auto iso = is_iso(ChainMap(w.n, target, std::move(id)));
  if (!iso) throw CertificateError("zero_degenerates_witness: cone(0) ≅ s[1] ⊕ s not found within budget");
  return ZeroDegeneration{std::move(w), std::move(*iso)};
}

}  // namespace trideg
