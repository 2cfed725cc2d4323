#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>

#include "dbscan_bruteforce.hpp"
#include "permutation_rmsd.hpp"
#include "vecfield/core/rng.hpp"
#include "vecfield/corpus/generator.hpp"
#include "vecfield/provider/provider.hpp"
#include "vecfield/reconstruct/box.hpp"
#include "vecfield/reconstruct/dbscan.hpp"
#include "vecfield/reconstruct/evolve.hpp"
#include "vecfield/reconstruct/extract.hpp"
#include "vecfield/reconstruct/init.hpp"
#include "vecfield/reconstruct/reconstruct.hpp"
#include "vecfield/reconstruct/rmsd.hpp"

using namespace vecfield;

namespace {

class ConstantProvider final : public FieldProvider {
 public:
  explicit ConstantProvider(Vec3 v) : v_(v) {}
  Vec3 sample(const Vec3&, Element) const override { return v_; }

 private:
  Vec3 v_;
};

class ExclusiveOnlyProvider final : public FieldProvider {
 public:
  ExclusiveOnlyProvider(const Molecule& mol, const FieldParams& p) : mol_(mol), p_(p) {}
  Vec3 sample(const Vec3& q, Element) const override { return -attraction_all(q); }

 private:
  Vec3 attraction_all(const Vec3& q) const {
    std::vector<Vec3> all;
    for (const auto& a : mol_.atoms()) all.push_back(a.position);
    return attraction(q, all, p_);
  }
  Molecule mol_;
  FieldParams p_;
};

TrajectoryBatch one_particle(Element k, Vec3 q) {
  TrajectoryBatch b;
  b.groups.push_back({k, {Particle{q}}});
  return b;
}

std::vector<Vec3> random_cloud(Rng& rng, std::size_t n, double extent) {
  std::vector<Vec3> pts(n);
  for (auto& p : pts) p = {rng.uniform(0, extent), rng.uniform(0, extent), rng.uniform(0, extent)};
  return pts;
}

Molecule test_molecule() {
  CorpusSpec spec;
  spec.min_atoms = spec.max_atoms = 10;
  spec.max_heavy = 4;
  return generate_molecule(spec, 17);
}

}  // namespace

TEST_CASE("config defaults") {
  const ReconstructionConfig cfg;
  CHECK(cfg.eta == 0.1);
  CHECK(cfg.t_max == 500);
  CHECK(cfg.eps_db == 0.1);
  CHECK(cfg.n_min == 3);
  const QueryBudget qm9 = qm9_budget();
  CHECK(qm9[index_of(Element::C)] == 200);
  CHECK(qm9[index_of(Element::H)] == 200);
  CHECK(qm9[index_of(Element::O)] == 30);
  CHECK(qm9[index_of(Element::N)] == 30);
  CHECK(qm9[index_of(Element::F)] == 15);
  ReconstructionConfig bad;
  bad.eps_db = 0.0;
  CHECK_THROWS(bad.validate());
  bad = {};
  bad.t_max = 0;
  CHECK_THROWS(bad.validate());
}

TEST_CASE("init_uniform") {
  const Box unit = Box::from_corners({0, 0, 0}, {1, 1, 1});
  QueryBudget budget{};
  budget[index_of(Element::C)] = 200;
  const TrajectoryBatch a = init_uniform(budget, 5, unit, 3);
  CHECK(a.particle_count() == 200);
  for (const auto& g : a.groups) {
    for (const auto& p : g.particles) {
      CHECK(g.element == Element::C);
      CHECK(unit.contains(p.position));
      CHECK(p.state == ParticleState::Active);
    }
  }
  const TrajectoryBatch b = init_uniform(budget, 5, unit, 3);
  CHECK(a.groups[0].particles.size() == b.groups[0].particles.size());
  for (std::size_t i = 0; i < a.groups[0].particles.size(); ++i) {
    CHECK(a.groups[0].particles[i].position == b.groups[0].particles[i].position);
  }

  const auto pts = uniform_points(unit, 100000, 8);
  Vec3 mean;
  for (const Vec3& p : pts) mean += p;
  mean *= 1.0 / pts.size();
  for (int c = 0; c < 3; ++c) CHECK(std::abs(mean[c] - 0.5) < 0.005);

  CHECK_THROWS_AS(init_uniform(budget, 5, Box::from_corners({0, 0, 0}, {1, 0, 1}), 3), std::domain_error);
}

TEST_CASE("adaptive selection") {
  Rng rng(1);
  const Box box = Box::from_corners({-3, -3, -3}, {3, 3, 3});
  const auto pool = uniform_points(box, 40, 2);

  SUBCASE("budget equal to the pool is a permutation") {
    const ConstantProvider flat({0.1, 0, 0});
    auto out = adaptive_select(flat, pool, Element::C, pool.size(), 8, 0.0, 5);
    auto key = [](const Vec3& v) { return std::tuple(v.x, v.y, v.z); };
    std::vector<std::tuple<double, double, double>> a, b;
    for (const auto& v : out) a.push_back(key(v));
    for (const auto& v : pool) b.push_back(key(v));
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
  }

  SUBCASE("constant field selects uniformly") {
    const ConstantProvider flat({0.1, 0, 0});
    std::vector<int> hits(pool.size(), 0);
    for (int s = 0; s < 2000; ++s) {
      for (const Vec3& v : adaptive_select(flat, pool, Element::C, 10, 8, 0.0, std::uint64_t(s))) {
        hits[std::find(pool.begin(), pool.end(), v) - pool.begin()]++;
      }
    }
    // Each point is chosen with probability 1/4; 2000 draws give sd ~19.4.
    for (int h : hits) CHECK(std::abs(h - 500) < 100);
  }

  SUBCASE("scores from magnitude neighbourhoods") {
    const std::vector<double> mags{0.0, 0.0, 0.0, 0.0, 1.0};
    const auto s = adaptive_scores(mags, 2);
    CHECK(s[0] == 0.0);
    CHECK(s[4] == doctest::Approx(0.0));
    CHECK_THROWS(adaptive_select(ConstantProvider({}), pool, Element::C, pool.size() + 1, 8, 0.0, 1));
  }

  SUBCASE("selection concentrates around a single atom") {
    Molecule m;
    m.add_atom(Element::C, {0, 0, 0});
    const AnalyticProvider provider(m, FieldParams{});
    double adaptive_total = 0.0, uniform_total = 0.0;
    for (int s = 0; s < 100; ++s) {
      const auto candidates = uniform_points(box, 400, std::uint64_t(1000 + s));
      const auto chosen = adaptive_select(provider, candidates, Element::C, 100, 8, 0.0, std::uint64_t(s));
      for (const Vec3& v : chosen) adaptive_total += norm(v);
      for (std::size_t i = 0; i < 100; ++i) uniform_total += norm(candidates[i]);
    }
    CHECK(adaptive_total <= uniform_total);
  }
}

TEST_CASE("evolve") {
  const FieldParams p;
  Molecule c;
  c.add_atom(Element::C, {0, 0, 0});
  const AnalyticProvider provider(c, p);
  ReconstructionConfig cfg;

  SUBCASE("particle at the atom does not move") {
    const auto out = evolve(provider, one_particle(Element::C, {0, 0, 0}), cfg);
    const Particle& q = out.groups[0].particles[0];
    CHECK(q.state == ParticleState::Converged);
    CHECK(q.iterations == 0);
    CHECK(q.position == Vec3{0, 0, 0});
  }

  SUBCASE("single particle reaches the atom and matches a hand-rolled Euler loop") {
    const auto out = evolve(provider, one_particle(Element::C, {0, 0, 2.0}), cfg);
    const Particle& q = out.groups[0].particles[0];
    CHECK(q.state == ParticleState::Converged);
    CHECK(q.iterations <= 500);
    CHECK(norm(q.position) < 1e-4);

    Vec3 x{0, 0, 2.0};
    int steps = 0;
    for (; steps < cfg.t_max; ++steps) {
      const Vec3 v = ground_truth_field(x, c, Element::C, p).vector;
      if (norm(v) < cfg.tau) break;
      x = x + cfg.eta * v;
    }
    CHECK(steps == q.iterations);
    CHECK(norm(x - q.position) == 0.0);
  }

  SUBCASE("infinite threshold converges immediately") {
    cfg.tau = std::numeric_limits<double>::infinity();
    const Box box = Box::from_corners({-2, -2, -2}, {2, 2, 2});
    const auto out = evolve(provider, init_uniform(qm9_budget(), 5, box, 1), cfg);
    CHECK(out.count(ParticleState::Converged) == out.particle_count());
    for (const auto& g : out.groups)
      for (const auto& q : g.particles) CHECK(q.iterations == 0);
  }

  SUBCASE("non-finite field marks divergence") {
    const ConstantProvider nan_field({std::nan(""), 0, 0});
    const auto out = evolve(nan_field, one_particle(Element::C, {1, 0, 0}), cfg);
    CHECK(out.groups[0].particles[0].state == ParticleState::Diverged);
  }

  SUBCASE("exhausted after t_max") {
    const ConstantProvider drift({0.5, 0, 0});
    cfg.t_max = 7;
    const auto out = evolve(drift, one_particle(Element::C, {0, 0, 0}), cfg);
    CHECK(out.groups[0].particles[0].state == ParticleState::Exhausted);
    CHECK(out.groups[0].particles[0].iterations == 7);
  }

  SUBCASE("parallel equals serial and converged particles satisfy the threshold") {
    const Molecule m = test_molecule();
    const AnalyticProvider field(m, p);
    const Box box = Box::around(m, 2.0);
    const auto init = init_uniform(qm9_budget(), 5, box, 4);
    const auto par = evolve(field, init, cfg);
    const auto ser = serial::evolve(field, init, cfg);
    bool identical = true;
    for (std::size_t g = 0; g < par.groups.size(); ++g) {
      for (std::size_t i = 0; i < par.groups[g].particles.size(); ++i) {
        const Particle& a = par.groups[g].particles[i];
        const Particle& b = ser.groups[g].particles[i];
        identical = identical && a.position == b.position && a.iterations == b.iterations && a.state == b.state;
        if (a.state == ParticleState::Converged) CHECK(norm(field.sample(a.position, par.groups[g].element)) < cfg.tau);
      }
    }
    CHECK(identical);
  }
}

TEST_CASE("dbscan examples") {
  CHECK(dbscan(std::vector<Vec3>{}, 0.1, 3).empty());
  const std::vector<Vec3> same(5, Vec3{1, 2, 3});
  CHECK(dbscan(same, 0.1, 3) == std::vector<int>(5, 0));
  const std::vector<Vec3> sparse{{0, 0, 0}, {1, 0, 0}, {2, 0, 0}};
  CHECK(dbscan(sparse, 0.1, 3) == std::vector<int>(3, kNoise));
  CHECK_THROWS(dbscan(sparse, 0.0, 3));
  CHECK_THROWS(dbscan(sparse, 0.1, 0));
}

TEST_CASE("dbscan matches the brute-force reference") {
  Rng rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    auto pts = random_cloud(rng, 300, 1.0);
    const auto fast = dbscan(pts, 0.1, 3);
    const auto slow = oracle::dbscan(pts, 0.1, 3);
    CHECK(fast == slow);

    std::vector<std::size_t> perm(pts.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng.engine());
    std::vector<Vec3> shuffled;
    for (std::size_t i : perm) shuffled.push_back(pts[i]);
    const auto relabel = dbscan(shuffled, 0.1, 3);
    std::vector<int> back(pts.size());
    for (std::size_t i = 0; i < perm.size(); ++i) back[perm[i]] = relabel[i];
    CHECK(oracle::same_partition(fast, back));
  }
}

TEST_CASE("extract_atoms") {
  ReconstructionConfig cfg;
  auto group = [](Element k, std::vector<Vec3> pts, ParticleState s = ParticleState::Converged) {
    ParticleGroup g{k, {}};
    for (const Vec3& v : pts) g.particles.push_back({v, 1, s});
    return g;
  };
  SUBCASE("tight cluster becomes its mean") {
    TrajectoryBatch b;
    b.groups.push_back(group(Element::C, {{0, 0, 0}, {0.01, 0, 0}, {0, 0.02, 0}, {0, 0, 0.03}}));
    const Extraction e = extract_atoms(b, cfg);
    REQUIRE(e.molecule.size() == 1);
    CHECK(norm(e.molecule.atoms()[0].position - Vec3{0.0025, 0.005, 0.0075}) < 1e-15);
    CHECK(e.clustered == 4);
  }
  SUBCASE("separated clusters") {
    TrajectoryBatch b;
    b.groups.push_back(group(Element::O, {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}, {3, 0, 0}, {3, 0, 0}, {3, 0, 0}}));
    CHECK(extract_atoms(b, cfg).molecule.size() == 2);
  }
  SUBCASE("sparse noise and unconverged particles are dropped") {
    TrajectoryBatch b;
    b.groups.push_back(group(Element::C, {{0, 0, 0}, {1, 0, 0}, {2, 0, 0}}));
    b.groups.push_back(group(Element::H, {{5, 5, 5}, {5, 5, 5}, {5, 5, 5}}, ParticleState::Exhausted));
    const Extraction e = extract_atoms(b, cfg);
    CHECK(e.molecule.empty());
    CHECK(e.noise == 3);
  }
}

TEST_CASE("rmsd") {
  const Molecule m = test_molecule();
  SUBCASE("identity and shift") {
    CHECK(rmsd(m, m).matched);
    CHECK(rmsd(m, m).rmsd == 0.0);
    CHECK(rmsd(m, m.transformed(Mat3::identity(), {1, 0, 0})).rmsd == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(rmsd(Molecule{}, Molecule{}).matched);
  }
  SUBCASE("mismatch carries deltas") {
    Molecule extra = m;
    extra.add_atom(Element::F, {9, 9, 9});
    const RmsdResult r = rmsd(m, extra);
    CHECK_FALSE(r.matched);
    CHECK(std::isnan(r.rmsd));
    CHECK(r.deltas[index_of(Element::F)] == -1);
    CHECK(r.deltas[index_of(Element::C)] == 0);
  }
  SUBCASE("matches brute-force permutation search") {
    Rng rng(30);
    for (int trial = 0; trial < 50; ++trial) {
      Molecule a, b;
      const int n = 2 + static_cast<int>(rng.next() % 7);
      for (int i = 0; i < n; ++i) {
        const Element e = i % 3 == 0 ? Element::H : Element::C;
        a.add_atom(e, {rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2)});
      }
      std::vector<std::size_t> perm(a.size());
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng.engine());
      for (std::size_t i : perm) {
        const auto& at = a.atoms()[i];
        b.add_atom(at.element, at.position + Vec3{rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5)});
      }
      CHECK(rmsd(a, b).rmsd == doctest::Approx(oracle::permutation_rmsd(a, b)).epsilon(1e-12));
      Molecule shuffled;
      for (std::size_t i : perm) shuffled.add_atom(a.atoms()[i].element, a.atoms()[i].position);
      CHECK(rmsd(a, shuffled).rmsd == 0.0);
    }
  }
  SUBCASE("assignment") {
    const std::vector<double> cost{4, 1, 3, 2, 0, 5, 3, 2, 2};
    const auto a = min_cost_assignment(cost, 3);
    CHECK(cost[0 * 3 + a[0]] + cost[1 * 3 + a[1]] + cost[2 * 3 + a[2]] == 5.0);
    CHECK_THROWS(min_cost_assignment(cost, 2));
  }
}

TEST_CASE("reconstruct") {
  const Molecule m = test_molecule();
  const FieldParams p;
  const ReconstructionConfig cfg;
  const Box box = Box::around(m, cfg.padding);

  SUBCASE("analytic round trip") {
    const AnalyticProvider provider(m, p);
    const Reconstruction rec = reconstruct_detailed(provider, cfg, box, 5);
    const ReconstructionReport report = score_reconstruction("m", rec, m);
    CHECK(report.success());
    CHECK(report.score.rmsd < 1e-6);
    CHECK(rec.molecule.element_counts() == m.element_counts());
    CHECK(rec.stats.particles == rec.batch.particle_count());
    CHECK(rec.stats.converged + rec.stats.exhausted + rec.stats.diverged == rec.stats.particles);
    std::size_t hist = 0;
    for (std::size_t h : rec.stats.iterations_histogram) hist += h;
    CHECK(hist == rec.stats.converged);
    CHECK_FALSE(rec.molecule.bonds().empty());

    const Molecule again = reconstruct(provider, cfg, box, 5);
    REQUIRE(again.size() == rec.molecule.size());
    for (std::size_t i = 0; i < again.size(); ++i) CHECK(again.atoms()[i].position == rec.molecule.atoms()[i].position);
  }

  SUBCASE("repulsion only yields nothing") {
    const ExclusiveOnlyProvider provider(m, p);
    CHECK(reconstruct(provider, cfg, box, 5).empty());
  }

  SUBCASE("pipeline equivariance with a co-rotated box") {
    Rng rng(44);
    const AnalyticProvider provider(m, p);
    const Molecule base = reconstruct(provider, cfg, box, 9);
    for (int i = 0; i < 3; ++i) {
      const Mat3 r = rng.rotation();
      const Vec3 t{rng.uniform(-5, 5), rng.uniform(-5, 5), rng.uniform(-5, 5)};
      const Molecule moved = m.transformed(r, t);
      const AnalyticProvider moved_provider(moved, p);
      const Molecule rec = reconstruct(moved_provider, cfg, box.transformed(r, t), 9);
      const Molecule back = rec.transformed(r.transposed(), r.transposed() * (-t));
      const RmsdResult score = rmsd(back, base);
      CHECK(score.matched);
      CHECK(score.rmsd < 1e-6);
    }
  }

  SUBCASE("adaptive initialisation also recovers the molecule") {
    ReconstructionConfig adaptive = cfg;
    adaptive.adaptive = true;
    const AnalyticProvider provider(m, p);
    const RmsdResult score = rmsd(reconstruct(provider, adaptive, box, 5), m);
    CHECK(score.matched);
  }

  SUBCASE("report json and trajectory csv") {
    const AnalyticProvider provider(m, p);
    TrajectoryRecord record;
    record.stride = 50;
    const Reconstruction rec = reconstruct_detailed(provider, cfg, box, 5, &record);
    const std::string json = to_json(score_reconstruction("mol", rec, m));
    for (const char* key : {"\"success\"", "\"rmsd\"", "\"atom_count_deltas\"", "\"iterations_histogram\"",
                            "\"noise_particle_fraction\"", "\"wall_time_ms\""}) {
      CHECK(json.find(key) != std::string::npos);
    }
    CHECK(to_json(score_reconstruction("mol", rec, m), false).find("wall_time_ms") == std::string::npos);
    const std::string csv = record.csv(rec.batch);
    CHECK(csv.rfind("step,element,particle,x,y,z\n", 0) == 0);
  }
}

TEST_CASE("box transforms") {
  const Box b = Box::from_corners({0, 0, 0}, {2, 4, 6});
  CHECK(b.volume() == doctest::Approx(48.0));
  CHECK(b.contains({1, 1, 1}));
  CHECK_FALSE(b.contains({3, 1, 1}));
  Rng rng(2);
  const Mat3 r = rng.rotation();
  const Box moved = b.transformed(r, {1, 1, 1});
  const Vec3 u{0.2, 0.7, 0.4};
  CHECK(norm(moved.from_unit(u) - (r * b.from_unit(u) + Vec3{1, 1, 1})) < 1e-12);
}
