#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <random>

#include "cycle_basis.hpp"
#include "quantile_w1.hpp"
#include "transport_lp.hpp"
#include "vecfield/chem/bonds.hpp"
#include "vecfield/chem/stability.hpp"
#include "vecfield/core/rng.hpp"
#include "vecfield/corpus/generator.hpp"
#include "vecfield/metrics/distance.hpp"
#include "vecfield/metrics/geometry.hpp"
#include "vecfield/metrics/report.hpp"

using namespace vecfield;

namespace {

std::vector<double> samples(Rng& rng, std::size_t n, double lo, double hi) {
  std::vector<double> v(n);
  for (double& x : v) x = rng.uniform(lo, hi);
  return v;
}

Molecule ring(int n, double radius = 1.4) {
  Molecule m;
  std::vector<Bond> bonds;
  for (int i = 0; i < n; ++i) {
    const double a = 2 * std::numbers::pi * i / n;
    m.add_atom(Element::C, {radius * std::cos(a), radius * std::sin(a), 0});
    bonds.push_back({std::size_t(i), std::size_t((i + 1) % n), 1});
  }
  m.set_bonds(bonds);
  return m;
}

Categorical tv_oracle_dist(const std::map<std::string, double>& counts) {
  double total = 0.0;
  for (const auto& [k, v] : counts) total += v;
  Categorical p;
  for (const auto& [k, v] : counts) p[k] = v / total;
  return p;
}

double tv_oracle(const Categorical& p, const Categorical& q) {
  std::map<std::string, double> diff;
  for (const auto& [k, v] : p) diff[k] += v;
  for (const auto& [k, v] : q) diff[k] -= v;
  double s = 0.0;
  for (const auto& [k, v] : diff) s += std::abs(v);
  return s / 2;
}

}  // namespace

TEST_CASE("wasserstein1 examples") {
  const std::vector<double> a{0.3, 1.2, 2.5};
  CHECK(wasserstein1(a, a) == 0.0);
  CHECK(wasserstein1(std::vector<double>{0.0}, std::vector<double>{1.0}) == 1.0);
  CHECK_THROWS_AS(wasserstein1(std::vector<double>{}, a), std::domain_error);
}

TEST_CASE("wasserstein1 matches the transport LP") {
  Rng rng(1);
  for (int trial = 0; trial < 10; ++trial) {
    const auto a = samples(rng, 50, -2, 3);
    const auto b = samples(rng, 50, -1, 4);
    CHECK(std::abs(wasserstein1(a, b) - oracle::transport_w1(a, b)) < 1e-9);
  }
  for (int trial = 0; trial < 10; ++trial) {
    const auto a = samples(rng, 1 + rng.next() % 12, -2, 3);
    const auto b = samples(rng, 1 + rng.next() % 17, -1, 4);
    CHECK(std::abs(wasserstein1(a, b) - oracle::transport_w1(a, b)) < 1e-9);
    CHECK(std::abs(wasserstein1(a, b) - oracle::quantile_w1(a, b)) < 1e-12);
  }
}

TEST_CASE("wasserstein1 properties") {
  Rng rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = samples(rng, 1 + rng.next() % 40, -5, 5);
    const auto b = samples(rng, 1 + rng.next() % 40, -3, 7);
    const auto c = samples(rng, 1 + rng.next() % 40, -6, 2);
    CHECK(wasserstein1(a, b) == doctest::Approx(wasserstein1(b, a)).epsilon(1e-12));
    CHECK(wasserstein1(a, c) <= wasserstein1(a, b) + wasserstein1(b, c) + 1e-12);
    const double s = rng.uniform(-4, 4);
    std::vector<double> sa = a, sb = b;
    for (double& x : sa) x *= s;
    for (double& x : sb) x *= s;
    CHECK(wasserstein1(sa, sb) == doctest::Approx(std::abs(s) * wasserstein1(a, b)).epsilon(1e-10));
  }
}

TEST_CASE("total_variation") {
  const Categorical p{{"a", 0.7}, {"b", 0.3}};
  const Categorical q{{"a", 0.5}, {"b", 0.5}};
  CHECK(total_variation(p, p) == 0.0);
  CHECK(total_variation(p, q) == doctest::Approx(0.2).epsilon(1e-14));
  CHECK(total_variation(Categorical{{"x", 1.0}}, Categorical{{"y", 1.0}}) == 1.0);
  CHECK_THROWS(validate(Categorical{{"a", 0.5}}));
  CHECK_THROWS(validate(Categorical{{"a", 1.5}, {"b", -0.5}}));
  CHECK_THROWS_AS(normalize({}), std::domain_error);

  Rng rng(3);
  auto random_cat = [&rng]() {
    std::map<std::string, std::size_t> counts;
    for (const char* l : {"a", "b", "c", "d", "e"}) counts[l] = rng.next() % 10;
    counts["a"] += 1;
    return normalize(counts);
  };
  for (int trial = 0; trial < 100; ++trial) {
    const Categorical x = random_cat(), y = random_cat(), z = random_cat();
    CHECK(total_variation(x, y) == doctest::Approx(total_variation(y, x)).epsilon(1e-15));
    CHECK(total_variation(x, z) <= total_variation(x, y) + total_variation(y, z) + 1e-15);
    CHECK(total_variation(x, y) >= 0.0);
    CHECK(total_variation(x, y) <= 1.0);
    Categorical rx, ry;
    for (const auto& [k, v] : x) rx["label_" + k] = v;
    for (const auto& [k, v] : y) ry["label_" + k] = v;
    CHECK(total_variation(rx, ry) == doctest::Approx(total_variation(x, y)).epsilon(1e-15));
  }
}

TEST_CASE("extract_geometry") {
  SUBCASE("water") {
    const double theta = 104.5 * std::numbers::pi / 180.0;
    Molecule w;
    w.add_atom(Element::O, {0, 0, 0});
    w.add_atom(Element::H, {0.96, 0, 0});
    w.add_atom(Element::H, {0.96 * std::cos(theta), 0.96 * std::sin(theta), 0});
    const Geometry g = extract_geometry(infer_bonds(w));
    REQUIRE(g.bond_lengths.size() == 2);
    CHECK(g.bond_lengths[0] == doctest::Approx(0.96).epsilon(1e-12));
    CHECK(g.bond_lengths[1] == doctest::Approx(0.96).epsilon(1e-12));
    REQUIRE(g.bond_angles.size() == 1);
    CHECK(g.bond_angles[0] == doctest::Approx(104.5).epsilon(1e-12));
    CHECK(g.valencies == std::vector<int>{2, 1, 1});
    CHECK(g.ring_sizes.empty());
  }
  SUBCASE("linear chain") {
    Molecule m({{Element::C, {0, 0, 0}}, {Element::C, {1.5, 0, 0}}, {Element::C, {3.0, 0, 0}}},
               {{0, 1, 1}, {1, 2, 1}});
    const Geometry g = extract_geometry(m);
    REQUIRE(g.bond_angles.size() == 1);
    CHECK(g.bond_angles[0] == doctest::Approx(180.0));
  }
  SUBCASE("six ring") {
    CHECK(extract_geometry(ring(6)).ring_sizes == std::vector<int>{6});
  }
  SUBCASE("no bonds") {
    Molecule m;
    m.add_atom(Element::C, {0, 0, 0});
    const Geometry g = extract_geometry(m);
    CHECK(g.bond_lengths.empty());
    CHECK(g.bond_angles.empty());
  }
}

TEST_CASE("smallest rings match the exhaustive cycle basis") {
  SUBCASE("fused and bridged systems") {
    // Naphthalene skeleton: two six-rings sharing an edge.
    Molecule naph = ring(6);
    std::vector<Bond> bonds = naph.bonds();
    for (int i = 0; i < 4; ++i) naph.add_atom(Element::C, {3.0 + i * 0.3, 1.0 + i, 0});
    bonds.push_back({0, 6, 1});
    bonds.push_back({6, 7, 1});
    bonds.push_back({7, 8, 1});
    bonds.push_back({8, 9, 1});
    bonds.push_back({9, 1, 1});
    naph.set_bonds(bonds);
    CHECK(oracle::ring_sizes(naph) == std::vector<int>{6, 6});
    std::vector<int> got;
    for (const auto& r : smallest_rings(naph)) got.push_back(static_cast<int>(r.size()));
    CHECK(got == std::vector<int>{6, 6});

    // Cube graph: five independent four-rings.
    Molecule cube;
    for (int i = 0; i < 8; ++i) cube.add_atom(Element::C, {double(i & 1), double((i >> 1) & 1), double(i >> 2)});
    std::vector<Bond> edges;
    for (std::size_t i = 0; i < 8; ++i)
      for (int bit = 0; bit < 3; ++bit)
        if (!(i & (1u << bit))) edges.push_back({i, i | (1u << bit), 1});
    cube.set_bonds(edges);
    CHECK(oracle::ring_sizes(cube) == std::vector<int>{4, 4, 4, 4, 4});
    CHECK(extract_geometry(cube).ring_sizes == std::vector<int>{4, 4, 4, 4, 4});
  }

  SUBCASE("random graphs") {
    Rng rng(5);
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t n = 4 + rng.next() % 7;
      Molecule m;
      for (std::size_t i = 0; i < n; ++i) m.add_atom(Element::C, {double(i), 0, 0});
      std::vector<Bond> bonds;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (rng.uniform() < 0.35) bonds.push_back({i, j, 1});
      m.set_bonds(bonds);
      std::vector<int> got = extract_geometry(m).ring_sizes;
      std::sort(got.begin(), got.end());
      CHECK(got == oracle::ring_sizes(m));
    }
  }
}

TEST_CASE("evaluate_corpus") {
  const auto ref = generate_corpus(20, CorpusSpec{}, 4);

  SUBCASE("self comparison") {
    const MetricsReport r = evaluate_corpus(ref, ref);
    CHECK(r.valency_w1 == 0.0);
    CHECK(r.atom_tv == 0.0);
    CHECK(r.bond_tv == 0.0);
    CHECK(r.bond_len_w1 == 0.0);
    CHECK(r.bond_ang_w1 == 0.0);
    CHECK(r.ring_size_tv == 0.0);
    CHECK(r.atoms_per_mol_tv == 0.0);
    CHECK(r.valid_pct == 100.0);
    CHECK(r.single_fragment_pct == 100.0);
    CHECK(r.unique_pct > 0.0);
    CHECK(r.unique_pct <= 100.0);
  }

  SUBCASE("one molecule repeated") {
    const std::vector<Molecule> same(100, ref[0]);
    CHECK(evaluate_corpus(same, ref).unique_pct == doctest::Approx(1.0));
  }

  SUBCASE("order invariance") {
    std::vector<Molecule> shuffled = ref;
    std::mt19937_64 g(3);
    std::shuffle(shuffled.begin(), shuffled.end(), g);
    const auto gen = generate_corpus(15, CorpusSpec{}, 5);
    CHECK(to_json(evaluate_corpus(gen, shuffled)) == to_json(evaluate_corpus(gen, ref)));
  }

  SUBCASE("empty corpus") {
    CHECK_THROWS_AS(evaluate_corpus(std::vector<Molecule>{}, ref), std::domain_error);
    CHECK_THROWS_AS(evaluate_corpus(ref, std::vector<Molecule>{}), std::domain_error);
  }

  SUBCASE("per-metric oracles") {
    CorpusSpec noisy_spec;
    noisy_spec.max_heavy = 6;
    auto gen = generate_corpus(50, noisy_spec, 12);
    // Jitter coordinates so perception sees different geometry and bonds.
    Rng rng(8);
    for (auto& m : gen) {
      Molecule j;
      for (const auto& a : m.atoms()) j.add_atom(a.element, a.position + 0.15 * rng.direction());
      m = j;
    }
    const auto ref50 = generate_corpus(50, CorpusSpec{}, 13);
    const MetricsReport r = evaluate_corpus(gen, ref50);

    struct Pool {
      std::vector<double> val, len, ang;
      std::map<std::string, double> atoms, bonds, rings, sizes;
      double stable = 0, valid = 0, single = 0;
    };
    auto collect = [](const std::vector<Molecule>& corpus) {
      Pool p;
      for (const auto& raw : corpus) {
        const Molecule m = perceive(raw);
        const Geometry g = extract_geometry(m);
        for (int v : g.valencies) p.val.push_back(v);
        p.len.insert(p.len.end(), g.bond_lengths.begin(), g.bond_lengths.end());
        p.ang.insert(p.ang.end(), g.bond_angles.begin(), g.bond_angles.end());
        for (const auto& a : m.atoms()) p.atoms[std::string(symbol(a.element))] += 1;
        for (const auto& b : m.bonds()) {
          std::string x(symbol(m.atoms()[b.a].element)), y(symbol(m.atoms()[b.b].element));
          if (index_of(m.atoms()[b.b].element) < index_of(m.atoms()[b.a].element)) std::swap(x, y);
          p.bonds[x + "-" + y + ":" + std::to_string(b.order)] += 1;
        }
        for (int s : g.ring_sizes) p.rings[std::to_string(s)] += 1;
        p.sizes[std::to_string(largest_fragment(m).size())] += 1;
        const auto st = check_stability(m);
        p.stable += st.molecule_stable;
        p.valid += st.valid;
        p.single += st.single_fragment;
      }
      if (p.rings.empty()) p.rings["none"] = 1;
      return p;
    };
    const Pool a = collect(gen), b = collect(ref50);
    CHECK(std::abs(r.valency_w1 - oracle::quantile_w1(a.val, b.val)) < 1e-9);
    CHECK(std::abs(r.bond_len_w1 - oracle::quantile_w1(a.len, b.len)) < 1e-9);
    CHECK(std::abs(r.bond_ang_w1 - oracle::quantile_w1(a.ang, b.ang)) < 1e-9);
    CHECK(std::abs(r.atom_tv - tv_oracle(tv_oracle_dist(a.atoms), tv_oracle_dist(b.atoms))) < 1e-9);
    CHECK(std::abs(r.bond_tv - tv_oracle(tv_oracle_dist(a.bonds), tv_oracle_dist(b.bonds))) < 1e-9);
    CHECK(std::abs(r.ring_size_tv - tv_oracle(tv_oracle_dist(a.rings), tv_oracle_dist(b.rings))) < 1e-9);
    CHECK(std::abs(r.atoms_per_mol_tv - tv_oracle(tv_oracle_dist(a.sizes), tv_oracle_dist(b.sizes))) < 1e-9);
    CHECK(r.stable_mol_pct == doctest::Approx(100.0 * a.stable / 50));
    CHECK(r.valid_pct == doctest::Approx(100.0 * a.valid / 50));
    CHECK(r.single_fragment_pct == doctest::Approx(100.0 * a.single / 50));
    CHECK(r.bond_len_w1 > 0.0);
  }

  SUBCASE("serialisation") {
    MetricsReport r;
    r.bond_len_w1 = std::nan("");
    CHECK(to_json(r).find("\"bond_len_w1\": null") != std::string::npos);
    CHECK(csv_row(r).find("nan") != std::string::npos);
    const std::string header = csv_header(r);
    CHECK(std::count(header.begin(), header.end(), ',') == 11);
  }
}
