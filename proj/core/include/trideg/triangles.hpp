#pragma once

// Distinguished triangles X -f-> Y -g-> W -h-> X[1] in K^b(proj A), always
// carried with a certificate. A standard triangle has W = cone(f) bit for
// bit with the canonical g and h. Otherwise the certificate is an
// isomorphism of triangles (id, id, c) from the standard one: c : cone(f) ->
// W is an iso in K^b, c∘ι ≃ g and h∘c ≃ π with recorded homotopies.

#include <optional>

#include "trideg/complexes.hpp"

namespace trideg {

struct TransportCertificate {
  IsoCertificate comparison;   // c : cone(f) -> W
  Homotopy inclusion_square;   // c∘ι - g = dK + Kd on Y
  Homotopy projection_square;  // π - h∘c = dK + Kd on cone(f)
};

struct Triangle {
  ChainMap f;
  ChainMap g;
  ChainMap h;
  Homotopy gf_null;  // witnesses g∘f ≃ 0
  Homotopy hg_null;  // witnesses h∘g ≃ 0
  std::optional<TransportCertificate> transport;

  [[nodiscard]] const Complex& x() const { return f.source(); }
  [[nodiscard]] const Complex& y() const { return f.target(); }
  [[nodiscard]] const Complex& z() const { return g.target(); }
  [[nodiscard]] bool is_standard() const { return !transport.has_value(); }
};

/// X -> Y -> cone(f) -> X[1] with ι, π and the canonical null homotopy.
Triangle standard_triangle(const ChainMap& f);

/// Exact re-check of composites, homotopies and the certificate.
bool verify_triangle(const Triangle& t);

/// Certifies X -f-> Y -g-> W as part of a distinguished triangle. `gf_null`
/// must witness g∘f ≃ 0; the comparison [gf_null, g] : cone(f) -> W is tried
/// first, then null homotopies shifted by random elements of the homotopy
/// kernel, up to opts.budget attempts. When `h` is absent it is read off as
/// π∘c⁻¹. Returns nullopt if no certificate was found.
std::optional<Triangle> certify_triangle(const ChainMap& f, const ChainMap& g, const Homotopy& gf_null,
                                         const std::optional<ChainMap>& h = std::nullopt,
                                         const SearchOptions& opts = {});

/// The comparison map [H, g] : cone(f) -> W induced by a null homotopy H of g∘f.
ChainMap cone_comparison(const ChainMap& f, const ChainMap& g, const Homotopy& gf_null);

}  // namespace trideg
