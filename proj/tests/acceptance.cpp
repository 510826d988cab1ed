// Acceptance checks, one PASS/FAIL line per criterion. Exit status is nonzero if any criterion fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "fdtc/fdtc.hpp"
#include "fdtc/foliation.hpp"
#include "fdtc/topology.hpp"
#include "support.hpp"
#include "topology_cases.hpp"

using namespace fdtc;
using namespace fdtc::testing;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

Rational exact(const MappingClassWord& w, const std::string& c = "C1") {
  const FDTCResult r = fdtc_exact(w, c);
  if (!r.value) throw std::runtime_error("fdtc_exact returned no value for " + w.str());
  return *r.value;
}

MappingClassWord chain_word() {
  const SurfaceSpec s = one_holed_torus();
  const Spine sp(s);
  MappingClassWord w(s);
  w.push_back(twist_generator(sp, "a", sp.parse_word("a1"), 1));
  w.push_back(twist_generator(sp, "b", sp.parse_word("b1"), 1));
  return w;
}

std::vector<MappingClassWord> criterion_words(std::mt19937& rng) {
  std::vector<MappingClassWord> out;
  for (int t = 0; t < 50; ++t) out.push_back(random_torus_word(rng, 1 + static_cast<int>(rng() % 6)));
  return out;
}

Outcome boundary_twists() {
  Outcome o;
  for (long k = -3; k <= 3; ++k) {
    o.require(exact(boundary_word(one_holed_torus(), "C1", k)) == Rational(k), "one-holed torus k=" + std::to_string(k));
    const SurfaceSpec s2 = torus_two_holes();
    for (const char* c : {"C1", "C2"}) {
      o.require(exact(boundary_word(s2, c, k), c) == Rational(k), std::string("S_{1,2} ") + c + " k=" + std::to_string(k));
      const char* other = std::string(c) == "C1" ? "C2" : "C1";
      o.require(exact(boundary_word(s2, c, k), other) == Rational(0), std::string("S_{1,2} cross term on ") + other);
    }
  }
  return o;
}

Outcome chain_relation() {
  Outcome o;
  const FDTCResult r = fdtc_exact(chain_word(), "C1");
  o.require(r.value && *r.value == Rational(1, 6), "value is not 1/6");
  o.require(r.N == 31, "N = " + std::to_string(r.N));
  o.require(r.D == 6, "D = " + std::to_string(r.D));
  const MappingClassWord rel = compose(power(chain_word(), 6), boundary_word(one_holed_torus(), "C1", -1));
  o.require(acts_identically(rel, 8).identical_on_probes, "(T_a T_b)^6 T_C^-1 moves a probe");
  return o;
}

Outcome torus_knot_braids() {
  Outcome o;
  const SurfaceSpec s = punctured_disc(2);
  const Spine sp(s);
  for (int k = 1; k <= 5; ++k) {
    MappingClassWord w(s);
    w.push_back(braid_generator(sp, 1, k));
    const FDTCResult r = braid_fdtc(w, "C1");
    o.require(r.value && *r.value == Rational(k, 2), "sigma_1^" + std::to_string(k));
  }
  return o;
}

Outcome quasimorphism_laws(const std::vector<MappingClassWord>& words, std::mt19937& rng) {
  Outcome o;
  const SurfaceSpec s = one_holed_torus();
  for (const auto& w : words) {
    const Rational c = exact(w);
    o.require(exact(power(w, 2)) == Rational(2) * c, "homogeneity (square) on " + w.str());
    o.require(exact(power(w, 3)) == Rational(3) * c, "homogeneity (cube) on " + w.str());
    o.require(exact(invert(w)) == -c, "inverse on " + w.str());
    const MappingClassWord h = random_torus_word(rng, 1 + static_cast<int>(rng() % 3));
    o.require(exact(compose(compose(h, w), invert(h))) == c, "conjugation on " + w.str());
    o.require(exact(compose(boundary_word(s, "C1", 1), w)) == c + Rational(1), "boundary shift on " + w.str());
  }
  for (int t = 0; t < 50; ++t) {
    const MappingClassWord u = random_torus_word(rng, 1 + static_cast<int>(rng() % 6));
    const MappingClassWord v = random_torus_word(rng, 1 + static_cast<int>(rng() % 6));
    const QuasimorphismAudit a = quasimorphism_audit(u, v, "C1");
    o.require(a.defect <= Rational(1), "defect " + a.defect.str() + " on " + u.str() + " / " + v.str());
    o.require(a.defect == (a.c12 - a.c1 - a.c2).abs(), "defect is not |c(uv) - c(u) - c(v)|");
  }
  return o;
}

Outcome interval_soundness(const std::vector<MappingClassWord>& words) {
  Outcome o;
  const Spine sp(one_holed_torus());
  std::vector<ArcClass> probes;
  for (const ArcClass& g : enumerate_arcs(sp, sp.face_index("C1"), 4))
    if (is_essential(sp, g)) probes.push_back(g);
  o.require(!probes.empty(), "no essential probe arcs");
  for (const auto& w : words) {
    const Rational c = exact(w);
    for (const ArcClass& g : probes)
      for (long N = 1; N <= 10; ++N) {
        const KeyLemmaBracket b = key_lemma_bracket(w, "C1", g, N);
        const RationalInterval iv = b.interval();
        o.require(iv.contains(c), "value outside the interval for " + w.str() + " at N=" + std::to_string(N));
        o.require(Rational(b.M + 1, N) - Rational(b.M, N) == Rational(1, N), "bracket width");
        // An exact equality collapses the bracket to the point M/N, which must then be the value.
        if (b.equality) o.require(c == Rational(b.M, N), "equality point is not the value");
        else o.require(iv.width() == Rational(1, N), "interval width is not 1/N");
      }
  }
  if (o.ok) o.detail = std::to_string(probes.size()) + " probe arcs";
  return o;
}

std::vector<Rational> brute_candidates(const RationalInterval& iv, long D) {
  std::vector<Rational> out;
  for (long q = 1; q <= D; ++q) {
    const mpz_class lo = (iv.lo * Rational(q)).floor() - 1, hi = (iv.hi * Rational(q)).ceil() + 1;
    for (mpz_class p = lo; p <= hi; ++p) {
      const Rational r(p, q);
      if (r.denominator() == q && iv.contains(r)) out.push_back(r);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Outcome farey_oracle(std::mt19937& rng) {
  Outcome o;
  for (int t = 0; t < 1000; ++t) {
    const long D = 1 + static_cast<long>(rng() % 12);
    const long den = 1 + static_cast<long>(rng() % 80);
    long a = static_cast<long>(rng() % 321) - 160, b = static_cast<long>(rng() % 321) - 160;
    if (a > b) std::swap(a, b);
    RationalInterval iv{Rational(a, den), Rational(b, den), rng() % 2 == 0, rng() % 2 == 0};
    if (iv.lo == iv.hi) iv.lo_closed = iv.hi_closed = true;
    const std::vector<Rational> want = brute_candidates(iv, D);
    const DenominatorSearch got = unique_bounded_denominator(iv, D);
    const auto expected = want.empty()      ? DenominatorSearch::Status::Empty
                          : want.size() == 1 ? DenominatorSearch::Status::Unique
                                             : DenominatorSearch::Status::Ambiguous;
    o.require(got.status == expected, "status mismatch on " + iv.str() + " D=" + std::to_string(D));
    o.require(got.candidates == want, "candidate mismatch on " + iv.str() + " D=" + std::to_string(D));
  }
  for (int t = 0; t < 1000; ++t) {
    const long D = 2 + static_cast<long>(rng() % 11);
    const long q = 1 + static_cast<long>(rng() % D);
    const Rational target(static_cast<long>(rng() % 201) - 100, q);
    const long gap = D * (D - 1);
    // Width w = gap^-1 * k / (k + 1) < gap^-1, with the target at a random position inside.
    const long k = 1 + static_cast<long>(rng() % 50);
    const Rational w(k, gap * (k + 1));
    const Rational shift = w * Rational(static_cast<long>(rng() % 101), 100);
    const RationalInterval iv = RationalInterval::closed(target - shift, target - shift + w);
    const DenominatorSearch got = unique_bounded_denominator(iv, D);
    o.require(got.status == DenominatorSearch::Status::Unique, "narrow interval " + iv.str() + " not unique");
    o.require(got.candidates.size() == 1 && got.candidates[0] == target, "narrow interval lost the target");
  }
  return o;
}

Rational brute_infimum(long X, long n, long bound) {
  const Rational delta = n % 2 ? Rational((n - 1) * (n - 1), 4 * n * n) : Rational(n - 2, 4 * n);
  Rational best;
  for (long m = 1; m <= bound; ++m) {
    const Rational v((Rational(X * m, n) - delta).ceil(), m);
    if (m == 1 || v < best) best = v;
  }
  return best;
}

Outcome infimum_oracle(std::mt19937& rng) {
  Outcome o;
  for (int t = 0; t < 500; ++t) {
    // Alternate parities of n so both branches of delta are covered.
    const long n = 2 * (1 + static_cast<long>(rng() % 6)) - (t % 2);
    const long X = static_cast<long>(rng() % 41);
    o.require(f_infimum(X, n) == brute_infimum(X, n, 10000),
              "X=" + std::to_string(X) + " n=" + std::to_string(n));
  }
  return o;
}

// Simple closed curve of slope p/q on the one-holed torus.
Curve slope_curve(const Spine& sp, long p, long q) {
  const Letter a = sp.generator("a1"), b = sp.generator("b1");
  Word w;
  const long n = std::labs(p) + std::labs(q);
  for (long k = 1; k <= n; ++k) {
    const bool along_a = (k * std::labs(q)) / n == ((k - 1) * std::labs(q)) / n;
    if (along_a) w.push_back(p >= 0 ? a : inverse_letter(a));
    else w.push_back(q >= 0 ? b : inverse_letter(b));
  }
  return canonical_curve(w);
}

long torus_ab_sign() {
  const SurfaceSpec s = one_holed_torus();
  const Spine sp(s);
  MappingClassWord w(s);
  w.push_back(twist_generator(sp, "a", sp.parse_word("a1"), 1));
  const auto h = torus_homology(apply(w, canonical_curve(sp.parse_word("b1"))).word);
  return h[0] * h[1];
}

Outcome slope_model(std::mt19937& rng) {
  Outcome o;
  const Spine sp(one_holed_torus());
  const long ab = torus_ab_sign();
  o.require(std::labs(ab) == 1, "T_a(b) is not of slope (+-1, 1)");
  const Curve a = slope_curve(sp, 1, 0), b = slope_curve(sp, 0, 1);
  const std::vector<std::pair<long, long>> tests{{1, 0}, {0, 1}, {1, 1}, {1, -1}, {2, 1}, {1, 2}, {3, -2}};
  std::vector<Curve> test_curves;
  for (auto [r, s] : tests) test_curves.push_back(slope_curve(sp, r, s));
  for (int t = 0; t < 1000; ++t) {
    const MappingClassWord w = random_torus_word(rng, 1 + static_cast<int>(rng() % 10));
    std::array<long, 2> ha{1, 0}, hb{0, 1};
    const auto& gens = w.generators();
    for (auto it = gens.rbegin(); it != gens.rend(); ++it) {
      ha = torus_twist(ha, it->label == "a", it->power, ab);
      hb = torus_twist(hb, it->label == "a", it->power, ab);
    }
    for (auto [x, model] : {std::pair{a, ha}, std::pair{b, hb}}) {
      const Curve img = apply(w, x);
      const auto h = torus_homology(img.word);
      const bool same = h == model || (h[0] == -model[0] && h[1] == -model[1]);
      o.require(same, "homology of the image under " + w.str());
      for (std::size_t i = 0; i < tests.size(); ++i) {
        const long want = std::labs(model[0] * tests[i].second - model[1] * tests[i].first);
        o.require(geometric_intersection(sp, img, test_curves[i]) == want, "intersection under " + w.str());
      }
    }
  }
  return o;
}

Outcome foliation_validators() {
  Outcome o;
  const SingularityCounts u{2, 0, 1, 0};
  o.require(self_linking(u) == -1, "sl of the unknot disc counts");
  o.require(euler_characteristic(u) == 1, "Euler characteristic of the unknot disc counts");
  o.require(self_linking(unknot_disc()) == -1, "sl of the unknot disc graph");
  const auto graphs = valid_graphs();
  o.require(graphs.size() == 10, "expected 10 valid graphs");
  std::size_t total = 0;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    o.require(validate_graph(graphs[i]).empty(), "graph " + std::to_string(i) + " rejected");
    for (const Corruption& c : corruptions(graphs[i])) {
      ++total;
      o.require(!validate_graph(c.graph).empty(), "graph " + std::to_string(i) + " corruption not flagged: " + c.what);
    }
  }
  o.require(total > 0, "no corruptions generated");
  if (o.ok) o.detail = std::to_string(total) + " corruptions flagged";
  return o;
}

Outcome criterion_tables() {
  Outcome o;
  const auto cases = verdict_cases();
  o.require(cases.size() >= 30, "fewer than 30 table entries");
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const Verdict v = evaluate(cases[i]);
    o.require(v.conclusion == cases[i].expected && v.criterion == cases[i].criterion,
              "table entry " + std::to_string(i) + " gave " + v.criterion);
  }
  for (const auto& g : genus_cases()) {
    const BoundReport r = braid_genus_bounds(g.in);
    o.require(r.upper == g.bound, "braid genus bound for chi=" + std::to_string(g.in.chi_F));
  }
  return o;
}

Outcome ot_disc() {
  Outcome o;
  const OTDiscReport ok = transverse_ot_disc_check(one_negative_elliptic_ot_disc());
  o.require(ok.valid, "reference disc rejected");
  o.require(ok.certifies_non_right_veering, "reference disc does not certify non-right-veering");
  const std::vector<std::pair<FoliationGraph, std::string>> mutations{
      {ot_mutation_tree(), "condition 1: G-- is not a tree"},
      {ot_mutation_c_circles(), "condition 2: foliation contains c-circles"},
      {ot_mutation_circle(), "condition 3: G++ is not a circle"}};
  for (const auto& [g, why] : mutations) {
    const OTDiscReport r = transverse_ot_disc_check(g);
    o.require(!r.valid && r.violations == std::vector<std::string>{why}, "mutation not rejected: " + why);
  }
  return o;
}

}  // namespace

int main() {
  std::mt19937 rng(seed_from_env(20240611));
  const std::vector<MappingClassWord> words = criterion_words(rng);
  struct Criterion {
    int id;
    const char* name;
    double limit_s;  // 0 when no runtime bound applies
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "boundary twist calibration", 5, boundary_twists},
      {2, "chain relation", 10, chain_relation},
      {3, "torus-knot braids", 10, torus_knot_braids},
      {4, "homogeneity, conjugation, boundary shift, defect", 0, [&] { return quasimorphism_laws(words, rng); }},
      {5, "interval soundness", 0, [&] { return interval_soundness(words); }},
      {6, "Farey oracle", 0, [&] { return farey_oracle(rng); }},
      {7, "infimum oracle", 0, [&] { return infimum_oracle(rng); }},
      {8, "slope-model oracle", 30, [&] { return slope_model(rng); }},
      {9, "foliation validators", 0, foliation_validators},
      {10, "criterion tables", 0, criterion_tables},
      {11, "transverse overtwisted disc", 0, ot_disc},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.ok && c.limit_s > 0 && secs >= c.limit_s) {
      o.ok = false;
      o.detail = "runtime limit exceeded";
    }
    if (!o.ok) ++failed;
    std::printf("%s criterion %d: %s (%.2f s)%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, secs,
                o.detail.empty() ? "" : " - ", o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
