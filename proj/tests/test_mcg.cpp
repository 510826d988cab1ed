#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "fdtc/mcg.hpp"
#include "support.hpp"

using namespace fdtc;
using namespace fdtc::testing;

namespace {

MappingClassWord word(const SurfaceSpec& s, std::initializer_list<Generator> gens) {
  MappingClassWord w(s);
  for (const auto& g : gens) w.push_back(g);
  return w;
}

bool same_on_probes(const MappingClassWord& u, const MappingClassWord& v, int bound) {
  return acts_identically(compose(u, invert(v)), bound).identical_on_probes;
}

// a.b read off from T_a(b); every other twist must agree with the homology model for this sign.
long torus_ab_sign() {
  const SurfaceSpec s = one_holed_torus();
  const Spine sp(s);
  const Curve img = apply(word(s, {twist_generator(sp, "a", sp.parse_word("a1"), 1)}), canonical_curve(sp.parse_word("b1")));
  const auto h = torus_homology(img.word);
  return h[0] * h[1];  // b + (a.b) a up to orientation
}

}  // namespace

TEST_CASE("identity and disjoint twists") {
  const SurfaceSpec s = one_holed_torus();
  const Spine sp(s);
  CHECK(acts_identically(MappingClassWord(s), 6).identical_on_probes);
  const Curve a = canonical_curve(sp.parse_word("a1"));
  CHECK(apply(word(s, {twist_generator(sp, "a", a.word, 3)}), a) == a);
}

TEST_CASE("T_b(a) has slope (1,1) up to sign") {
  const SurfaceSpec s = one_holed_torus();
  const Spine sp(s);
  const Curve a = canonical_curve(sp.parse_word("a1"));
  const Curve img = apply(word(s, {twist_generator(sp, "b", sp.parse_word("b1"), 1)}), a);
  const auto h = torus_homology(img.word);
  CHECK(std::labs(h[0]) == 1);
  CHECK(std::labs(h[1]) == 1);
  CHECK(geometric_intersection(sp, img, a) == 1);
}

TEST_CASE("homology model on random torus words") {
  const SurfaceSpec s = one_holed_torus();
  const Spine sp(s);
  const long ab = torus_ab_sign();
  REQUIRE(std::labs(ab) == 1);
  std::mt19937 rng(seed_from_env(3));
  const Curve a = canonical_curve(sp.parse_word("a1")), b = canonical_curve(sp.parse_word("b1"));
  for (int t = 0; t < 200; ++t) {
    const MappingClassWord w = random_torus_word(rng, 1 + static_cast<int>(rng() % 8));
    std::array<long, 2> ha{1, 0}, hb{0, 1};
    const auto& gens = w.generators();
    for (auto it = gens.rbegin(); it != gens.rend(); ++it) {
      const bool about_a = it->label == "a";
      ha = torus_twist(ha, about_a, it->power, ab);
      hb = torus_twist(hb, about_a, it->power, ab);
    }
    const Curve ia = apply(w, a), ib = apply(w, b);
    const auto ga = torus_homology(ia.word), gb = torus_homology(ib.word);
    CHECK(((ga == ha) || (ga[0] == -ha[0] && ga[1] == -ha[1])));
    CHECK(((gb == hb) || (gb[0] == -hb[0] && gb[1] == -hb[1])));
    CHECK(geometric_intersection(sp, ia, ib) == 1);
    CHECK(geometric_intersection(sp, ia, a) == std::labs(ha[1]));
  }
}

TEST_CASE("twist squared intersection identity") {
  // i(T_c(x), x) = i(x, c)^2 on the one-holed torus.
  const SurfaceSpec s = one_holed_torus();
  const Spine sp(s);
  const Curve c = canonical_curve(sp.parse_word("a1"));
  for (const char* x : {"b1", "a1 b1", "a1 a1 b1", "b1 b1 a1", "a1 a1 a1 b1"}) {
    const Curve cx = canonical_curve(sp.parse_word(x));
    const long k = geometric_intersection(sp, cx, c);
    const Curve img = apply(word(s, {twist_generator(sp, "a", c.word, 1)}), cx);
    CHECK(geometric_intersection(sp, img, cx) == k * k);
  }
}

TEST_CASE("group relations") {
  const SurfaceSpec s = one_holed_torus();
  const Spine sp(s);
  const Generator Ta = twist_generator(sp, "a", sp.parse_word("a1"), 1);
  const Generator Tb = twist_generator(sp, "b", sp.parse_word("b1"), 1);
  CHECK(same_on_probes(word(s, {Ta, Tb, Ta}), word(s, {Tb, Ta, Tb}), 6));
  CHECK_FALSE(same_on_probes(word(s, {Ta, Tb}), word(s, {Tb, Ta}), 6));
  MappingClassWord chain = power(word(s, {Ta, Tb}), 6);
  CHECK(same_on_probes(chain, boundary_word(s, "C1", 1), 6));
  CHECK(power(chain, 0).empty());
}

TEST_CASE("inverse acts trivially") {
  std::mt19937 rng(seed_from_env(8));
  for (int t = 0; t < 10; ++t) {
    const MappingClassWord w = random_torus_word(rng, 6);
    CHECK(acts_identically(compose(w, invert(w)), 6).identical_on_probes);
  }
}

TEST_CASE("action law on random triples") {
  std::mt19937 rng(seed_from_env(21));
  const SurfaceSpec torus = one_holed_torus(), disc = punctured_disc(3);
  const Spine st(torus), sd(disc);
  const auto torus_arcs = enumerate_arcs(st, 0, 4), disc_arcs = enumerate_arcs(sd, 0, 4);
  auto disc_word = [&](int length) {
    MappingClassWord w(disc);
    for (int i = 0; i < length; ++i)
      w.push_back(braid_generator(sd, 1 + static_cast<int>(rng() % 2), rng() % 2 ? 1 : -1));
    return w;
  };
  for (int t = 0; t < 100; ++t) {
    const MappingClassWord u = random_torus_word(rng, 4), v = random_torus_word(rng, 4);
    const ArcClass& g = torus_arcs[rng() % torus_arcs.size()];
    CHECK(apply(compose(u, v), g) == apply(u, apply(v, g)));
    const MappingClassWord p = disc_word(4), q = disc_word(4);
    const ArcClass& h = disc_arcs[rng() % disc_arcs.size()];
    CHECK(apply(compose(p, q), h) == apply(p, apply(q, h)));
  }
}

TEST_CASE("lifted twist agrees with the direct shear") {
  const SurfaceSpec s = torus_two_holes();
  const Spine sp(s);
  const int base = sp.face(0).base_corner;
  const TreeOrder order(sp, base);
  std::mt19937 rng(seed_from_env(2));
  for (const char* c : {"a1", "b1", "a1 b1"}) {
    const Curve curve = canonical_curve(sp.parse_word(c));
    for (long p : {-2L, -1L, 1L, 3L}) {
      const LiftedAction lift = twist_action(sp, curve, p, base);
      for (int t = 0; t < 100; ++t) {
        Word g;
        const int len = static_cast<int>(rng() % 6);
        for (int i = 0; i < len; ++i) g.push_back(static_cast<Letter>(rng() % sp.half_edge_count()));
        const CornerPoint z{reduce(g), static_cast<int>(rng() % sp.half_edge_count())};
        CHECK(lift.apply(z) == shear(order, curve.word, p, z));
      }
    }
  }
}

TEST_CASE("braid generators") {
  const SurfaceSpec d2 = punctured_disc(2), d3 = punctured_disc(3);
  const Spine s2(d2), s3(d3);
  CHECK(puncture_permutation_order(word(d2, {braid_generator(s2, 1, 1)})) == 2);
  CHECK(puncture_permutation_order(word(d2, {braid_generator(s2, 1, 2)})) == 1);
  CHECK(puncture_permutation_order(word(d3, {braid_generator(s3, 1, 1), braid_generator(s3, 2, 1)})) == 3);
  CHECK(puncture_permutation_order(MappingClassWord(one_holed_torus())) == 1);
  CHECK_THROWS_AS(braid_generator(s2, 2, 1), PreconditionError);
  // Braid relation and the square of a half twist.
  const Generator s1 = braid_generator(s3, 1, 1), s2g = braid_generator(s3, 2, 1);
  CHECK(same_on_probes(word(d3, {s1, s2g, s1}), word(d3, {s2g, s1, s2g}), 4));
  CHECK(same_on_probes(word(d3, {braid_generator(s3, 1, 2)}),
                       word(d3, {twist_generator(s3, "c", s3.parse_word("p1 p2"), 1)}), 4));
}

TEST_CASE("permutation is a homomorphism") {
  const SurfaceSpec d4 = punctured_disc(4);
  const Spine sp(d4);
  std::mt19937 rng(seed_from_env(4));
  auto rand_word = [&] {
    MappingClassWord w(d4);
    for (int i = 0; i < 5; ++i) w.push_back(braid_generator(sp, 1 + static_cast<int>(rng() % 3), rng() % 2 ? 1 : -1));
    return w;
  };
  for (int t = 0; t < 50; ++t) {
    const MappingClassWord u = rand_word(), v = rand_word();
    const auto pu = u.permutation(), pv = v.permutation(), puv = compose(u, v).permutation();
    for (int j = 0; j < 4; ++j) CHECK(puv[static_cast<std::size_t>(j)] == pu[static_cast<std::size_t>(pv[static_cast<std::size_t>(j)])]);
  }
}

TEST_CASE("boundary twist on the annulus moves every arc") {
  SurfaceSpec s;
  s.boundary_labels = {"C1", "C2"};
  const Spine sp(s);
  const IdentityProbe r = acts_identically(word(s, {boundary_generator(sp, "C1", 1)}), 3);
  CHECK_FALSE(r.identical_on_probes);
  REQUIRE(r.witness);
  CHECK(is_essential(sp, *r.witness));
}
