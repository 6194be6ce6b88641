#include "commands.hpp"

#include <filesystem>
#include <map>

#include "trideg/error.hpp"
#include "trideg/instances.hpp"
#include "trideg/io.hpp"
#include "trideg/obstruction.hpp"

namespace trideg::cli {

namespace {

using nlohmann::json;

/// Reads input files that must all live over one algebra.
class Loader {
 public:
  json read(const std::string& path, AlgebraPtr& alg) {
    const std::filesystem::path p(path);
    json j = io::read_json(p);
    AlgebraPtr a = io::resolve_algebra(j, p.parent_path(), alg_);
    if (alg_ && a != alg_) {
      if (!(a->presentation() == alg_->presentation())) throw InputError(path + ": algebra differs from earlier inputs");
      a = alg_;
    }
    alg_ = a;
    alg = a;
    return j;
  }
  Complex complex(const std::string& path) {
    AlgebraPtr a;
    const json j = read(path, a);
    return io::complex_from_json(j, a);
  }
  ChainMap map(const std::string& path) {
    AlgebraPtr a;
    const json j = read(path, a);
    return io::map_from_json(j, a);
  }
  DegenerationWitness witness(const std::string& path) {
    AlgebraPtr a;
    const json j = read(path, a);
    return io::witness_from_json(j, a);
  }

 private:
  AlgebraPtr alg_;
};

SearchOptions search(const Options& o) { return SearchOptions{o.budget, o.seed}; }

std::string k0_text(const K0Class& k) { return io::to_json(k).dump(); }

void witness_report(Report& r, const DegenerationWitness& w) {
  r.set("witness", io::to_json(w));
  r.verdict("witness", verify_witness(w),
            std::string("M ≤_Δ N, ") + to_string(w.side) + " triangle " +
                (w.triangle.is_standard() ? "(standard cone)" : "(transported certificate)"));
  if (w.nil) {
    r.verdict("nilpotent", verify_nilpotency(*w.nil, w.v),
              "v nilpotent with exponent " + std::to_string(w.nil->exponent) + ", so M ≤_{Δ+nil} N");
  } else {
    r.note("       v not certified nilpotent within the default bound");
  }
  const bool same = k0_class(w.m) == k0_class(w.n);
  r.verdict("k0", same, "[M] = [N] = " + k0_text(k0_class(w.n)));
}

}  // namespace

Report cmd_cone(const std::string& map_path, const Options&) {
  Loader in;
  const ChainMap f = in.map(map_path);
  Report r("cone");
  const Triangle t = standard_triangle(f);
  r.set("cone", io::to_json(t.z()));
  r.set("triangle", io::to_json(t));
  r.note("cone(f) = " + describe(t.z()));
  r.verdict("triangle", verify_triangle(t), "X -f-> Y -ι-> cone(f) -π-> X[1] is a standard triangle");
  return r;
}

Report cmd_deg(const std::string& u_path, const std::string& v_path, const Options& o) {
  Loader in;
  const ChainMap u = in.map(u_path);
  const ChainMap v = in.map(v_path);
  Report r("deg");
  const auto hc = deg_pullback(u, v, search(o));
  r.note("Deg(u, v) = " + describe(hc.n));
  r.set("N", io::to_json(hc.n));
  r.set("r", io::to_json(hc.r));
  r.set("s", io::to_json(hc.s));
  witness_report(r, hc.witness);
  return r;
}

Report cmd_ged(const std::string& u_path, const std::string& v_path, const Options& o) {
  Loader in;
  const ChainMap u = in.map(u_path);
  const ChainMap v = in.map(v_path);
  Report r("ged");
  const auto hc = ged_pushout(u, v, search(o));
  r.note("Ged(u', v) = " + describe(hc.n));
  r.set("N", io::to_json(hc.n));
  r.set("r", io::to_json(hc.r));
  r.set("s", io::to_json(hc.s));
  witness_report(r, hc.witness);
  return r;
}

Report cmd_left_witness(const std::string& z_path, const std::string& v_path, const std::string& u_path,
                        const Options&) {
  Loader in;
  const Complex z = in.complex(z_path);
  const ChainMap v = in.map(v_path);
  const ChainMap u = in.map(u_path);
  if (!(v.source() == z) || !(v.target() == z)) throw InputError("left-witness: v is not an endomorphism of Z");
  if (!(u.source() == z)) throw InputError("left-witness: u does not start at Z");
  Report r("left-witness");
  const auto w = left_witness(v, u);
  r.note("N = cone((v; u)) = " + describe(w.n));
  witness_report(r, w);
  return r;
}

Report cmd_nilpotent(const std::string& v_path, const Options&) {
  Loader in;
  const ChainMap v = in.map(v_path);
  if (!(v.source() == v.target())) throw InputError("nilpotent: v is not an endomorphism");
  Report r("nilpotent");
  const auto c = nilpotency_certificate(v);
  if (c) {
    r.set("nil", io::to_json(*c));
    r.verdict("nilpotent", verify_nilpotency(*c, v), "v^" + std::to_string(c->exponent) + " ≃ 0");
  } else {
    r.verdict("nilpotent", false, "v is not nilpotent up to homotopy (bound 1 + dim End_K(Z))");
  }
  return r;
}

Report cmd_k0(const std::string& complex_path, const Options&) {
  Loader in;
  const Complex x = in.complex(complex_path);
  Report r("k0");
  const K0Class k = k0_class(x);
  r.set("k0", io::to_json(k));
  r.set("vertices", x.algebra().presentation().vertices);
  r.note("[X] = " + k0_text(k) + (k.is_zero() ? " (zero class)" : ""));
  return r;
}

Report cmd_pair_decompose(const std::string& sum_path, const Options&) {
  const ShiftSum x = io::shift_sum_from_json(io::read_json(sum_path));
  Report r("pair-decompose");
  const auto pairs = pair_decompose(x);
  r.set("m", x.m());
  r.set("pairs", io::to_json(pairs));
  r.note("m(X) = " + std::to_string(x.m()));
  for (const auto& p : pairs) {
    r.note("(" + p.gen + "[" + std::to_string(p.even_shift) + "] ⊕ " + p.gen + "[" + std::to_string(p.odd_shift) +
           "])^" + std::to_string(p.mult));
  }
  std::map<std::pair<std::string, int>, std::size_t> in_ms, out_ms;
  for (const auto& t : x.terms) in_ms[{t.gen, t.shift}] += t.mult;
  for (const auto& p : pairs) {
    out_ms[{p.gen, p.even_shift}] += p.mult;
    out_ms[{p.gen, p.odd_shift}] += p.mult;
  }
  r.verdict("multiset", in_ms == out_ms, "pairs re-expand to the input");
  return r;
}

Report cmd_tower_deg(const std::string& tower_path, const Options& o) {
  AlgebraPtr alg;
  Loader in;
  const json j = in.read(tower_path, alg);
  const Tower t = io::tower_from_json(j, alg, search(o));
  Report r("tower-deg");
  r.verdict("tower", verify_tower(t), "tower of length " + std::to_string(t.length()) + " with certified cones");
  for (std::size_t k = 0; k < t.cones.size(); ++k) {
    r.iso("cone_" + std::to_string(k + 1),
          "cone(f_" + std::to_string(k + 1) + ") ≅ " + t.tags[k].gen + "[" + std::to_string(t.tags[k].shift) + "]",
          t.cones[k]);
  }
  const bool both = o.nil_chain == o.single;
  const K0Class km = k0_class(t.objects.back());
  if (o.nil_chain || both) {
    const auto chain = tower_nil_chain(t, search(o));
    json steps = json::array();
    for (std::size_t k = 0; k < chain.size(); ++k) {
      const auto& s = chain[k];
      const std::string key = "nil_chain_" + std::to_string(k + 1);
      steps.push_back(io::to_json(s.witness, false));
      r.verdict(key, verify_witness(s.witness) && s.witness.nil && k0_class(s.witness.n) == km,
                "step " + std::to_string(k + 1) + ": pushout along 0 gives a Δ+nil witness");
      r.iso(key + "_iso", "step " + std::to_string(k + 1) + ": N ≅ " + describe(s.expected), s.iso);
    }
    r.set("nil_chain", steps);
  }
  if (o.single || both) {
    const auto s = tower_delta_witness(t, search(o));
    r.set("single", io::to_json(s.witness, false));
    r.verdict("single", verify_witness(s.witness) && k0_class(s.witness.n) == km,
              "one triangle ⊕M_k -> (⊕M_k) ⊕ M -> ⊕C_k");
    r.iso("single_iso", "N ≅ ⊕C_k = " + describe(s.expected), s.iso);
  }
  return r;
}

Report cmd_obstruct(const std::string& complex_path, const Options&) {
  Loader in;
  const Complex m = in.complex(complex_path);
  Report r("obstruct");
  r.set("homology", io::to_json(homology_dims(m)));
  if (const auto c = isolated_homology_obstruction(m)) {
    r.set("obstruction", io::to_json(*c));
    r.verdict("obstruction", verify_obstruction(*c, m),
              "isolated homology in degree " + std::to_string(c->degree) + " [" + c->flag + "]: 0 is not ≤_Δ M");
  } else {
    r.set("obstruction", nullptr);
    r.note("no certificate: whether 0 ≤_Δ M holds is unknown");
  }
  r.set("k0", io::to_json(k0_class(m)));
  return r;
}

Report cmd_zero_deg(const std::string& complex_path, const Options&) {
  Loader in;
  const Complex s = in.complex(complex_path);
  Report r("zero-deg");
  const auto z = zero_degenerates_witness(s);
  r.note("0 ≤_{Δ+nil} cone(0_S) = " + describe(z.witness.n));
  witness_report(r, z.witness);
  r.iso("iso", "cone(0_S) ≅ S[1] ⊕ S", z.iso);
  return r;
}

Report cmd_compare_cones(const std::string& witness_path, const Options& o) {
  Loader in;
  const auto w = in.witness(witness_path);
  if (!verify_witness(w)) throw CertificateError("compare-cones: the input witness does not verify");
  Report r("compare-cones");
  const auto c = theorem_cone_comparison(w, search(o));
  r.set("cone_pi", io::to_json(c.cone_pi));
  r.set("cone_v", io::to_json(c.cone_v));
  r.set("explicit_alpha", c.explicit_alpha);
  r.iso("alpha", std::string("cone(v) ≅ cone(π)") + (c.explicit_alpha ? " via the completed triangle map" : " via search"),
        c.certificate);
  return r;
}

Report cmd_two_pushout(const std::string& w1_path, const std::string& w2_path, const Options& o) {
  Loader in;
  const auto w1 = in.witness(w1_path);
  const auto w2 = in.witness(w2_path);
  if (!verify_witness(w1) || !verify_witness(w2)) throw CertificateError("two-pushout: an input witness does not verify");
  Report r("two-pushout");
  const auto t = two_pushout_theorem(w1, w2, search(o));
  r.set("X", io::to_json(t.x));
  r.set("Y", io::to_json(t.y));
  r.set("d", io::to_json(t.d));
  if (t.witness) r.set("witness", io::to_json(*t.witness, false));
  r.verdict("two_pushout", t.verdict, "X ≤_{Δ,left} Y through Z'");
  return r;
}

namespace {

Report demo_zwara(const Options& o) {
  const auto zw = instances::zwara(o.field);
  Report r("demo zwara");
  r.note("A₂ over GF(" + std::to_string(o.field) + "): 0 -> N1 = P2 -ι-> M = P1 -ρ-> N2 = S1 -> 0");
  witness_report(r, zw.witness);
  r.iso("N", "N ≅ N2 ⊕ N1", find_iso(zw.witness.n, direct_sum(zw.n2, zw.n1).sum, search(o)).certificate);
  const auto c = theorem_cone_comparison(zw.witness, search(o));
  r.iso("alpha", "cone(v) ≅ cone(π)", c.certificate);
  const Complex target = direct_sum(shift(zw.n1, 1), zw.n1).sum;
  r.iso("cone_pi", "cone(π) ≅ N1[1] ⊕ N1", find_iso(c.cone_pi, target, search(o)).certificate);
  r.iso("cone_rho", "cone(ρ) ≅ ker(ρ)[1] = N1[1]", find_iso(cone(zw.rho).complex, shift(zw.n1, 1), search(o)).certificate);
  return r;
}

Report demo_lemma(const Options& o) {
  const Complex s = instances::simple_resolution(instances::a2(o.field));
  const Complex three = direct_sum(s, shift(s, 3)).sum;
  const Complex one = direct_sum(s, shift(s, 1)).sum;
  Report r("demo lemma-counterexample");
  r.note("S = simple S1 of A₂ as P2 -> P1");
  const auto c = isolated_homology_obstruction(three);
  r.verdict("obstruction", c && verify_obstruction(*c, three),
            c ? "S ⊕ S[3]: isolated homology in degree " + std::to_string(c->degree) + " [" + c->flag +
                    "], so 0 is not ≤_Δ S ⊕ S[3]"
              : "S ⊕ S[3]: expected an obstruction");
  if (c) r.set("obstruction", io::to_json(*c));
  r.verdict("k0", k0_class(three).is_zero(), "[S ⊕ S[3]] = " + k0_text(k0_class(three)));
  r.verdict("adjacent", !isolated_homology_obstruction(one), "S ⊕ S[1]: no certificate");
  const auto z = zero_degenerates_witness(s);
  r.verdict("zero_deg", verify_witness(z.witness) && z.witness.nil.has_value(), "0 ≤_{Δ+nil} S ⊕ S[1]");
  r.iso("zero_deg_iso", "cone(0_S) ≅ S[1] ⊕ S", z.iso);
  r.note("       so a zero class does not imply a degeneration of zero");
  return r;
}

Report demo_cone_zero(const Options& o) {
  auto alg = instances::a2(o.field);
  const Complex z = direct_sum(instances::simple_resolution(alg), Complex::stalk(alg, {0}, 1)).sum;
  Report r("demo cone-zero");
  r.note("Z = " + describe(z));
  const auto c = cone_zero(z, search(o));
  r.iso("cone_zero", "cone(0_Z) ≅ Z[1] ⊕ Z (candidate, attempt " + std::to_string(c.iso.attempts) + ")",
        c.iso.certificate);
  r.note("follow-up witness, v = 0:");
  witness_report(r, c.follow_up);
  r.iso("follow_up", "cone((0; ε)) ≅ Z[1] ⊕ Z", c.follow_up_iso.certificate);
  return r;
}

}  // namespace

Report cmd_demo(const std::string& name, const Options& o) {
  if (o.field != 2 && o.field != 3 && o.field != 5 && o.field != 7) throw InputError("--field must be a small prime");
  if (name == "zwara") return demo_zwara(o);
  if (name == "lemma-counterexample") return demo_lemma(o);
  if (name == "cone-zero") return demo_cone_zero(o);
  throw InputError("unknown demo \"" + name + "\"");
}

Report cmd_prop_suite(const Options& o) {
  instances::Rng rng(o.seed);
  const SearchOptions opts = search(o);
  std::map<std::string, std::pair<std::size_t, std::size_t>> tally;  // passed, run
  auto record = [&](const std::string& key, bool ok) {
    auto& t = tally[key];
    t.second += 1;
    if (ok) t.first += 1;
  };
  auto guarded = [&](const std::string& key, auto&& check) {
    bool ok = false;
    try {
      ok = check();
    } catch (const CertificateError&) {
      ok = false;
    }
    record(key, ok);
  };
  for (std::size_t c = 0; c < o.cases; ++c) {
    const std::uint32_t p = (c % 2 == 0) ? 2 : 3;
    auto alg = instances::random_algebra(rng, p);
    guarded("left_witness", [&] {
      const auto w = instances::random_left_witness(alg, rng);
      return verify_witness(w) && k0_class(w.m) == k0_class(w.n) && theorem_cone_comparison(w, opts).verdict;
    });
    guarded("deg_pullback", [&] {
      const auto w = instances::random_deg(alg, rng, {}).witness;
      return verify_witness(w) && k0_class(w.m) == k0_class(w.n);
    });
    guarded("ged_pushout", [&] {
      const auto w = instances::random_ged(alg, rng, {}).witness;
      return verify_witness(w) && k0_class(w.m) == k0_class(w.n);
    });
    guarded("cone_zero", [&] {
      const auto z = cone_zero(instances::random_complex(alg, rng), opts);
      return z.iso.found_by_candidate && z.iso.attempts == 1 && verify_witness(z.follow_up) && z.follow_up.nil &&
             z.follow_up.nil->exponent == 1;
    });
    guarded("zero_degeneration", [&] {
      const auto z = zero_degenerates_witness(instances::random_complex(alg, rng));
      return verify_witness(z.witness) && k0_class(z.witness.n).is_zero() &&
             !isolated_homology_obstruction(z.witness.n);
    });
    guarded("pair_decompose", [&] {
      const auto x = instances::random_zero_class(rng);
      return !pair_decompose(x).empty();
    });
    guarded("tower", [&] {
      const Tower t = instances::random_tower(alg, rng, 1 + c % 3, opts);
      const Complex sum = tower_cone_sum(t);
      return tower_nil_chain(t, opts).back().iso.map.target() == sum &&
             tower_delta_witness(t, opts).iso.map.target() == sum;
    });
  }
  Report r("prop-suite");
  r.set("seed", o.seed);
  r.set("cases", o.cases);
  json counts = json::object();
  for (const auto& [key, t] : tally) {
    counts[key] = {{"passed", t.first}, {"run", t.second}};
    r.verdict(key, t.first == t.second, key + ": " + std::to_string(t.first) + "/" + std::to_string(t.second));
  }
  r.set("counts", counts);
  return r;
}

}  // namespace trideg::cli
