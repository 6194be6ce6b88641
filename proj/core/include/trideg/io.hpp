#pragma once

// JSON formats.
//
//   algebra:  {"field": p, "vertices": [...], "arrows": [{"name","source","target"}],
//              "relations": [[arrow names in traversal order], ...], "nilpotency_bound": N}
//   complex:  {"algebra": <object or file path>, "terms": {"<n>": [vertex names]},
//              "differentials": {"<n>": [[{"<path>": coeff, ...}, ...], ...]}}
//   map:      {"algebra": ..., "source": complex, "target": complex, "components": {"<n>": matrix}}
//
// Paths are arrow names joined by '*' in traversal order; e_<v> is the
// idempotent at v. Nested complexes and maps inherit the enclosing algebra.

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "trideg/degeneration.hpp"
#include "trideg/grothendieck.hpp"
#include "trideg/obstruction.hpp"
#include "trideg/triangles.hpp"

namespace trideg::io {

using nlohmann::json;

/// Parses a file; syntax errors become InputError naming file, line and column.
json read_json(const std::filesystem::path& path);

json to_json(const QuiverPresentation& q);
QuiverPresentation presentation_from_json(const json& j);
AlgebraPtr algebra_from_json(const json& j);
/// Resolves the "algebra" member of `j`: an inline object or a path relative
/// to `base`. Falls back to `inherited` when the member is absent.
AlgebraPtr resolve_algebra(const json& j, const std::filesystem::path& base, const AlgebraPtr& inherited = nullptr);

json to_json(const Algebra& alg, const AlgebraElement& e);
AlgebraElement element_from_json(const Algebra& alg, const json& j);
json to_json(const Algebra& alg, const AlgMatrix& m);
AlgMatrix matrix_from_json(const Algebra& alg, const json& j, std::size_t rows, std::size_t cols);

/// Without the algebra member unless `with_algebra`.
json to_json(const Complex& x, bool with_algebra = false);
Complex complex_from_json(const json& j, const AlgebraPtr& alg);

json to_json(const ChainMap& f, bool with_algebra = false);
ChainMap map_from_json(const json& j, const AlgebraPtr& alg);
json to_json(const Homotopy& h);
Homotopy homotopy_from_json(const json& j, const AlgebraPtr& alg);

json to_json(const IsoCertificate& c);
IsoCertificate iso_from_json(const json& j, const AlgebraPtr& alg);
json to_json(const Triangle& t);
Triangle triangle_from_json(const json& j, const AlgebraPtr& alg);
json to_json(const NilpotencyCertificate& c);

/// Bundle {"algebra", "side", "M", "N", "Z", "v", "u", "triangle", "nil"}.
json to_json(const DegenerationWitness& w, bool with_algebra = true);
DegenerationWitness witness_from_json(const json& j, const AlgebraPtr& alg);

json to_json(const HomologyDims& h);
json to_json(const K0Class& k);
json to_json(const ObstructionCertificate& c);

json to_json(const ShiftSum& s);
ShiftSum shift_sum_from_json(const json& j);
json to_json(const std::vector<ShiftPair>& pairs);

/// {"algebra", "objects": [complex...], "maps": [map...],
///  "tags": [{"gen", "generator": complex, "shift"}]}
json to_json(const Tower& t, bool with_algebra = true);
Tower tower_from_json(const json& j, const AlgebraPtr& alg, const SearchOptions& opts = {});

}  // namespace trideg::io
