#include "symcap/capacityfn.hpp"

#include <cmath>
#include <thread>

#include "symcap/ech.hpp"

namespace symcap {

Rational ech_lower(const WeightTuple& target, const Rational& z, size_t K) {
  if (z < Rational(1)) throw DomainError("ech_lower needs z >= 1");
  if (K < 1) throw DomainError("ech_lower needs K >= 1");
  auto e = ellipsoid_capacities(Rational(1), z, K);
  auto c = convex_capacities(target, K);
  Rational best;
  for (size_t k = 1; k <= K; ++k) best = std::max(best, e.at(k) / c.at(k));
  return best;
}

bool ClassLower::above_volume() const { return mu && symcap::above_volume(*mu, z, vol); }

double ClassLower::volume() const { return std::sqrt(z.to_double() / vol.to_double()); }

double ClassLower::value() const {
  double v = volume();
  return mu ? std::max(v, mu->to_double()) : v;
}

std::string ClassLower::str() const {
  if (above_volume()) return mu->str();
  return "sqrt((" + z.str() + ")/(" + vol.str() + "))";
}

ClassLower class_lower(const Target& t, const Surd& z, const std::vector<ObstructionClass>& classes) {
  ClassLower out{z, t.vol, std::nullopt, std::nullopt};
  for (size_t i = 0; i < classes.size(); ++i) {
    if (class_lambda(classes[i], t).sign() <= 0) continue;
    Surd mu = mu_at(classes[i], t, z);
    if (!out.mu || mu > *out.mu) {
      out.mu = mu;
      out.which = i;
    }
  }
  return out;
}

double EmbedFnSample::best() const { return std::max(ech.to_double(), cls.value()); }

ScanResult scan(const WeightTuple& target, const std::vector<Rational>& grid, size_t K, long d_max, unsigned jobs) {
  Target t = Target::of(target);
  auto classes = enumerate_classes(t, d_max);
  ScanResult res;
  res.samples.resize(grid.size());
  std::optional<CapacitySequence> caps;
  if (K > 0) caps = convex_capacities(target, K);
  auto work = [&](size_t i) {
    EmbedFnSample s;
    s.z = grid[i];
    if (caps) {
      auto e = ellipsoid_capacities(Rational(1), grid[i], K);
      for (size_t k = 1; k <= K; ++k) s.ech = std::max(s.ech, e.at(k) / caps->at(k));
    }
    s.cls = class_lower(t, Surd(grid[i]), classes);
    res.samples[i] = std::move(s);
  };
  jobs = std::max(1u, jobs);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < jobs; ++w)
    pool.emplace_back([&, w] {
      for (size_t i = w; i < grid.size(); i += jobs) work(i);
    });
  for (auto& th : pool) th.join();

  for (size_t i = 1; i + 1 < grid.size(); ++i) {
    const auto &a = res.samples[i - 1], &b = res.samples[i], &c = res.samples[i + 1];
    if (!a.cls.above_volume() || !b.cls.above_volume() || !c.cls.above_volume()) continue;
    Surd left = (*b.cls.mu - *a.cls.mu) / Surd(b.z - a.z);
    Surd right = (*c.cls.mu - *b.cls.mu) / Surd(c.z - b.z);
    if (left != right) {
      res.samples[i].corner = true;
      res.corners.push_back(b.z);
    }
  }
  return res;
}

AccumulationReport accumulation_report(const AccumulationInput& in, size_t K, long d_max) {
  AccumulationReport rep;
  rep.a0 = accumulation_point(in.per, in.vol);
  if (!rep.a0) {
    rep.verdict = "Per^2 < 4 Vol: no accumulation point";
    if (in.gromov) rep.gromov_bound = Surd(1) / *in.gromov;
    return rep;
  }
  const Surd& a0 = *rep.a0;
  rep.v_sq = a0 / in.vol;
  auto beats = [&](const Surd& x) { return above_volume(x, a0, in.vol); };

  if (in.tuple) {
    Target t = Target::of(*in.tuple);
    auto classes = enumerate_classes(t, d_max);
    auto cl = class_lower(t, a0, classes);
    if (cl.mu) {
      rep.class_bound = cl.mu;
      rep.class_best = classes[*cl.which];
    }
    if (K > 0 && in.tuple->is_rational()) {
      auto e = ellipsoid_capacities_exact(Surd(1), a0, K);
      auto c = convex_capacities(*in.tuple, K);
      for (size_t k = 1; k <= K; ++k) {
        Surd r = e[k] / Surd(c.at(k));
        if (!rep.ech_bound || r > *rep.ech_bound) {
          rep.ech_bound = r;
          rep.ech_k = k;
        }
      }
    }
  }
  // an embedding of B(1) needs scale 1/w, and c is nondecreasing in z
  if (in.gromov) rep.gromov_bound = Surd(1) / *in.gromov;

  rep.exceeds = (rep.class_bound && beats(*rep.class_bound)) || (rep.ech_bound && beats(*rep.ech_bound)) ||
                (rep.gromov_bound && beats(*rep.gromov_bound));
  rep.verdict = rep.exceeds ? "a0 is obstructed: no infinite staircase accumulates at a0"
                            : "no certificate: computed bounds do not exceed V(a0)";
  return rep;
}

}  // namespace symcap
