#include "symcap/ech.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>
#include <thread>

namespace symcap {

namespace {

using i64 = std::int64_t;
using i128 = __int128;

i64 checked(i128 x) {
  if (x > std::numeric_limits<i64>::max() || x < std::numeric_limits<i64>::min())
    throw DomainError("capacity values exceed the 64-bit range");
  return static_cast<i64>(x);
}

i64 to_i64(const BigInt& n) {
  if (!n.fits_slong_p()) throw DomainError("integer exceeds the 64-bit range");
  return n.get_si();
}

BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// index of the capacity value n of a unit ball: least n with (n^2+3n)/2 >= k
i64 ball_level(i64 k) {
  i64 n = static_cast<i64>(std::sqrt(2.0 * static_cast<double>(k)));
  while (n > 0 && (n - 1) * (n - 1) + 3 * (n - 1) >= 2 * k) --n;
  while (n * n + 3 * n < 2 * k) ++n;
  return n;
}

// positions where a nondecreasing sequence increases (plus 0)
std::vector<size_t> breakpoints(const std::vector<i64>& v) {
  std::vector<size_t> out{0};
  for (size_t j = 1; j < v.size(); ++j)
    if (v[j] > v[j - 1]) out.push_back(j);
  return out;
}

std::vector<i64> maxplus(const std::vector<i64>& a, const std::vector<i64>& b, size_t K) {
  const std::vector<i64>& x = breakpoints(a).size() <= breakpoints(b).size() ? b : a;
  const std::vector<i64>& y = &x == &a ? b : a;
  auto bp = breakpoints(y);
  std::vector<i64> out(K + 1, std::numeric_limits<i64>::min());
  for (size_t k = 0; k <= K; ++k) {
    i64 best = std::numeric_limits<i64>::min();
    for (size_t j : bp) {
      if (j > k) break;
      best = std::max(best, checked(static_cast<i128>(x[k - j]) + y[j]));
    }
    out[k] = best;
  }
  return out;
}

// common unit for several sequences, and integer factors to reach it
Rational common_unit(const std::vector<CapacitySequence>& parts, std::vector<i64>& factors) {
  BigInt g = 0, l = 1;
  for (const auto& p : parts) {
    g = gcd(g, p.unit.num());
    l = lcm(l, p.unit.den());
  }
  Rational u(g, l);
  factors.clear();
  for (const auto& p : parts) factors.push_back(to_i64((p.unit / u).num()));
  return u;
}

}  // namespace

std::vector<Rational> CapacitySequence::values() const {
  std::vector<Rational> out;
  out.reserve(v.size());
  for (size_t k = 0; k < v.size(); ++k) out.push_back(at(k));
  return out;
}

bool CapacitySequence::nondecreasing() const {
  if (v.empty() || v[0] != 0) return false;
  for (size_t k = 1; k < v.size(); ++k)
    if (v[k] < v[k - 1]) return false;
  return true;
}

CapacitySequence CapacitySequence::scaled(const Rational& lambda) const {
  if (lambda.sign() <= 0) throw DomainError("scale must be positive");
  CapacitySequence s = *this;
  s.unit = unit * lambda;
  return s;
}

CapacitySequence ball_capacities(const Rational& a, size_t K) {
  if (a.sign() <= 0) throw DomainError("ball size must be positive");
  CapacitySequence s{"B(" + a.str() + ")", a, {}};
  s.v.resize(K + 1);
  i64 n = 0;
  for (size_t k = 0; k <= K; ++k) {
    while (n * n + 3 * n < 2 * static_cast<i64>(k)) ++n;
    s.v[k] = n;
  }
  return s;
}

CapacitySequence ellipsoid_capacities(const Rational& a, const Rational& b, size_t K) {
  if (a.sign() <= 0 || b.sign() <= 0) throw DomainError("ellipsoid parameters must be positive");
  BigInt l = lcm(a.den(), b.den());
  i64 A = to_i64((a * Rational(l)).num()), B = to_i64((b * Rational(l)).num());
  CapacitySequence s{"E(" + a.str() + "," + b.str() + ")", Rational(BigInt(1), l), {}};
  // merge the progressions j*B + i*A, one row per j, opened lazily
  using Item = std::pair<i64, i64>;  // value, row
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  pq.push({0, 0});
  i64 opened = 0;
  while (s.v.size() <= K) {
    auto [val, row] = pq.top();
    pq.pop();
    s.v.push_back(val);
    pq.push({checked(static_cast<i128>(val) + A), row});
    if (row == opened) {
      ++opened;
      pq.push({checked(static_cast<i128>(opened) * B), opened});
    }
  }
  return s;
}

std::vector<Surd> ellipsoid_capacities_exact(const Surd& a, const Surd& b, size_t K) {
  if (a.sign() <= 0 || b.sign() <= 0) throw DomainError("ellipsoid parameters must be positive");
  struct Item {
    Surd val;
    long row;
    bool operator>(const Item& o) const { return val > o.val; }
  };
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  pq.push({Surd(), 0});
  long opened = 0;
  std::vector<Surd> out;
  while (out.size() <= K) {
    Item it = pq.top();
    pq.pop();
    out.push_back(it.val);
    pq.push({it.val + a, it.row});
    if (it.row == opened) {
      ++opened;
      pq.push({Surd(opened) * b, opened});
    }
  }
  return out;
}

CapacitySequence disjoint_union_capacities(const std::vector<CapacitySequence>& parts, size_t K) {
  if (parts.empty()) throw DomainError("disjoint union of nothing");
  std::vector<i64> f;
  Rational u = common_unit(parts, f);
  std::vector<i64> acc;
  std::string desc;
  for (size_t i = 0; i < parts.size(); ++i) {
    const auto& p = parts[i];
    if (p.size() < K + 1) throw DomainError("part sequence shorter than K+1");
    if (!p.nondecreasing()) throw DomainError("part sequence must be nondecreasing from 0");
    std::vector<i64> w(K + 1);
    for (size_t k = 0; k <= K; ++k) w[k] = checked(static_cast<i128>(p.v[k]) * f[i]);
    acc = i == 0 ? w : maxplus(acc, w, K);
    desc += (i ? " + " : "") + p.descriptor;
  }
  return CapacitySequence{desc, u, acc};
}

CapacitySequence disjoint_union_partition_oracle(const std::vector<CapacitySequence>& parts, size_t K) {
  if (K > 40) throw DomainError("partition oracle limited to K <= 40");
  std::vector<i64> f;
  Rational u = common_unit(parts, f);
  CapacitySequence out{"oracle", u, std::vector<i64>(K + 1)};
  for (size_t k = 0; k <= K; ++k) {
    i64 best = std::numeric_limits<i64>::min();
    std::vector<size_t> ks(parts.size(), 0);
    // enumerate compositions of k into parts.size() nonnegative pieces
    std::function<void(size_t, size_t, i64)> rec = [&](size_t i, size_t left, i64 acc) {
      if (i + 1 == parts.size()) {
        best = std::max(best, acc + parts[i].v.at(left) * f[i]);
        return;
      }
      for (size_t j = 0; j <= left; ++j) rec(i + 1, left - j, acc + parts[i].v.at(j) * f[i]);
    };
    rec(0, k, 0);
    out.v[k] = best;
  }
  return out;
}

// ------------------------------------------------------- subtraction formula

namespace {

struct ScaledTuple {
  BigInt L;
  i64 B;
  std::vector<i64> cuts;
  i128 S;  // sum of squares of cuts
};

ScaledTuple scale(const WeightTuple& t) {
  if (!t.is_rational()) throw DomainError("ECH capacities need a rational tuple");
  ScaledTuple s;
  s.L = t.rb().den();
  for (const auto& c : t.rcuts()) s.L = lcm(s.L, c.den());
  s.B = to_i64((t.rb() * Rational(s.L)).num());
  s.S = 0;
  for (const auto& c : t.rcuts()) {
    s.cuts.push_back(to_i64((c * Rational(s.L)).num()));
    s.S += static_cast<i128>(s.cuts.back()) * s.cuts.back();
  }
  return s;
}

// c_m of a disjoint union of integer balls, extended on demand
class BallUnion {
 public:
  explicit BallUnion(std::vector<i64> sizes) : sizes_(std::move(sizes)) { build(1024); }

  i64 at(size_t m) {
    if (m >= v_.size()) build(std::max(2 * v_.size(), m + 1));
    return v_[m];
  }
  // read-only access for parallel workers once the size suffices
  i64 peek(size_t m) const { return v_[m]; }
  size_t size() const { return v_.size(); }
  void ensure(size_t m) {
    if (m >= v_.size()) build(std::max(2 * v_.size(), m + 1));
  }

 private:
  void build(size_t M) {
    v_.assign(M, 0);
    bool first = true;
    for (i64 b : sizes_) {
      std::vector<i64> ball(M);
      i64 n = 0;
      for (size_t k = 0; k < M; ++k) {
        while (n * n + 3 * n < 2 * static_cast<i64>(k)) ++n;
        ball[k] = checked(static_cast<i128>(n) * b);
      }
      if (first) {
        v_ = ball;
        first = false;
        continue;
      }
      // ball breakpoints sit at triangular numbers
      std::vector<i64> out(M);
      for (size_t k = 0; k < M; ++k) {
        i64 best = v_[k];
        for (i64 j = 1;; ++j) {
          size_t t = static_cast<size_t>(j * (j + 1) / 2);
          if (t > k) break;
          best = std::max(best, checked(static_cast<i128>(v_[k - t]) + j * b));
        }
        out[k] = best;
      }
      v_.swap(out);
    }
  }

  std::vector<i64> sizes_;
  std::vector<i64> v_;
};

// min over d of d*B - U[(d^2+3d)/2 - k], with the Cauchy-Schwarz stopping rule
template <class Lookup>
i64 subtract_min(const ScaledTuple& s, i64 k, Lookup&& U) {
  i64 d = ball_level(k);
  i64 best = std::numeric_limits<i64>::max();
  for (;; ++d) {
    i64 twice_m = d * d + 3 * d - 2 * k;
    i64 m = twice_m / 2;
    i64 val = checked(static_cast<i128>(d) * s.B - U(static_cast<size_t>(m)));
    best = std::min(best, val);
    // lower bound f(d) = dB - sqrt(2m S) is convex in d; once increasing and
    // above the best value it certifies every larger d
    i128 slope_lhs = 4 * static_cast<i128>(s.B) * s.B * twice_m;
    i128 slope_rhs = s.S * (2 * static_cast<i128>(d) + 3) * (2 * d + 3);
    i128 gap = static_cast<i128>(d) * s.B - best;
    if (slope_lhs >= slope_rhs && gap > 0 && gap * gap > static_cast<i128>(twice_m) * s.S) break;
  }
  return best;
}

i64 max_index_needed(const ScaledTuple& s, i64 k) {
  // the largest m visited before the stopping rule fires, bounded crudely
  (void)s;
  return k;
}

}  // namespace

Rational convex_capacity(const WeightTuple& t, size_t k) {
  auto s = scale(t);
  BallUnion U(s.cuts);
  i64 v = subtract_min(s, static_cast<i64>(k), [&](size_t m) { return s.cuts.empty() ? 0 : U.at(m); });
  return Rational(BigInt(static_cast<long>(v)), s.L);
}

CapacitySequence convex_capacities(const WeightTuple& t, size_t K, unsigned jobs) {
  auto s = scale(t);
  CapacitySequence out{t.str(), Rational(BigInt(1), s.L), std::vector<i64>(K + 1, 0)};
  BallUnion U(s.cuts);
  auto lookup_serial = [&](size_t m) { return s.cuts.empty() ? i64{0} : U.at(m); };
  if (jobs <= 1 || K < 2000) {
    for (size_t k = 1; k <= K; ++k) out.v[k] = subtract_min(s, static_cast<i64>(k), lookup_serial);
    return out;
  }
  // size the union table on the last index first, then fan out read-only
  out.v[K] = subtract_min(s, static_cast<i64>(K), lookup_serial);
  for (size_t k = K; k > 0; k -= std::min<size_t>(k, 997)) subtract_min(s, static_cast<i64>(k), lookup_serial);
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errs(jobs);
  for (unsigned w = 0; w < jobs; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (size_t k = 1 + w; k <= K; k += jobs) {
          out.v[k] = subtract_min(s, static_cast<i64>(k), [&](size_t m) -> i64 {
            if (s.cuts.empty()) return 0;
            if (m >= U.size()) throw DomainError("union table too short");
            return U.peek(m);
          });
        }
      } catch (...) {
        errs[w] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errs) {
    if (!e) continue;
    // a worker ran past the table: fall back to the serial path
    for (size_t k = 1; k <= K; ++k) out.v[k] = subtract_min(s, static_cast<i64>(k), lookup_serial);
    break;
  }
  (void)max_index_needed;
  return out;
}

// ------------------------------------------------------ lattice paths

namespace {

// support value of omega in the outward normal of a counterclockwise edge
Rational edge_length(const RationalPolygon& omega, long ex, long ey) {
  Rational best;
  bool first = true;
  for (const auto& p : omega.vertices) {
    Rational v = p.x * Rational(ey) - p.y * Rational(ex);
    if (first || v > best) best = v;
    first = false;
  }
  return best;
}

std::vector<std::pair<long, long>> edges_of(const std::vector<LatticePoint>& path) {
  std::vector<std::pair<long, long>> e;
  if (path.size() < 2) return e;
  for (size_t i = 0; i < path.size(); ++i) {
    const auto& a = path[i];
    const auto& b = path[(i + 1) % path.size()];
    e.emplace_back(b.x - a.x, b.y - a.y);
  }
  return e;
}

long gcdl(long a, long b) { return std::gcd(std::labs(a), std::labs(b)); }

}  // namespace

Rational omega_length(const RationalPolygon& omega, const std::vector<LatticePoint>& path) {
  Rational s;
  for (auto [ex, ey] : edges_of(path)) s += edge_length(omega, ex, ey);
  return s;
}

long lattice_count(const std::vector<LatticePoint>& path) {
  if (path.empty()) return 0;
  if (path.size() == 1) return 1;
  long twice_area = 0, boundary = 0;
  for (size_t i = 0; i < path.size(); ++i) {
    const auto& a = path[i];
    const auto& b = path[(i + 1) % path.size()];
    twice_area += a.x * b.y - a.y * b.x;
    boundary += gcdl(b.x - a.x, b.y - a.y);
  }
  // Pick: L = A + B/2 + 1
  return (twice_area + boundary + 2) / 2;
}

DecompositionCheck omega_length_decomposition(const RationalPolygon& omega, const std::vector<LatticePoint>& path) {
  if (path.size() < 3) throw DomainError("decomposition check needs a lattice polygon with area");
  // translate both so that they meet the axes
  Rational mx = omega.vertices[0].x, my = omega.vertices[0].y;
  for (const auto& p : omega.vertices) {
    mx = std::min(mx, p.x);
    my = std::min(my, p.y);
  }
  RationalPolygon om = omega.translated(-mx, -my);
  long px = path[0].x, py = path[0].y;
  for (const auto& p : path) {
    px = std::min(px, p.x);
    py = std::min(py, p.y);
  }
  std::vector<Point> pv;
  for (const auto& p : path) pv.push_back({Rational(p.x - px), Rational(p.y - py)});
  RationalPolygon P = RationalPolygon::make(pv);
  std::vector<LatticePoint> lp;
  for (const auto& p : P.vertices) lp.push_back({p.x.num().get_si(), p.y.num().get_si()});

  DecompositionCheck out;
  out.lhs = omega_length(om, lp);

  auto cut = cut_decomposition(om);
  Rational b = cut.tree.b;
  const auto& v = om.vertices;
  const auto& w = P.vertices;
  Rational bp = w[0].x + w[0].y;
  for (const auto& p : w) bp = std::max(bp, p.x + p.y);

  // locate the corner pieces of a polygon meeting the axes
  struct Marks {
    size_t ytop, ybot, xright, xleft, sleft, sright;
  };
  auto marks = [](const std::vector<Point>& u, const Rational& bb) {
    const size_t n = u.size();
    auto pick = [&](auto pred, auto better) {
      size_t best = n;
      for (size_t i = 0; i < n; ++i)
        if (pred(u[i]) && (best == n || better(u[i], u[best]))) best = i;
      return best;
    };
    Marks m;
    auto ony = [](const Point& p) { return p.x.is_zero(); };
    auto onx = [](const Point& p) { return p.y.is_zero(); };
    auto ons = [&](const Point& p) { return p.x + p.y == bb; };
    m.ytop = pick(ony, [](const Point& a, const Point& c) { return a.y > c.y; });
    m.ybot = pick(ony, [](const Point& a, const Point& c) { return a.y < c.y; });
    m.xright = pick(onx, [](const Point& a, const Point& c) { return a.x > c.x; });
    m.xleft = pick(onx, [](const Point& a, const Point& c) { return a.x < c.x; });
    m.sleft = pick(ons, [](const Point& a, const Point& c) { return a.x < c.x; });
    m.sright = pick(ons, [](const Point& a, const Point& c) { return a.x > c.x; });
    return m;
  };
  Marks mo = marks(v, b), mp = marks(w, bp);

  auto walk = [](const std::vector<Point>& u, size_t from, size_t to) {
    std::vector<Point> out;
    for (size_t i = from;; i = (i + 1) % u.size()) {
      out.push_back(u[i]);
      if (i == to) break;
    }
    return out;
  };
  auto map_pts = [](const std::vector<Point>& pts, const IntMat2& m, const Point& sh) {
    std::vector<Point> out;
    for (const auto& p : pts) {
      Rational x = p.x + sh.x, y = p.y + sh.y;
      out.push_back({Rational(m.a) * x + Rational(m.b) * y, Rational(m.c) * x + Rational(m.d) * y});
    }
    return out;
  };
  // concave length: min over the region's upper boundary of e x p
  auto concave_len = [](const std::vector<Point>& chain, const Rational& ex, const Rational& ey) {
    Rational best;
    bool first = true;
    for (const auto& p : chain) {
      Rational val = ex * p.y - ey * p.x;
      if (first || val < best) best = val;
      first = false;
    }
    return best;
  };

  IntMat2 id{1, 0, 0, 1}, m1{-1, -1, 1, 0}, m2{0, 1, -1, -1};
  struct Piece {
    size_t of, ot, pf, pt;
    IntMat2 m;
    Point osh;
  };
  Piece pieces[3] = {{mo.ybot, mo.xleft, mp.ybot, mp.xleft, id, Point{}},
                     {mo.sleft, mo.ytop, mp.sleft, mp.ytop, m1, Point{Rational(0), -b}},
                     {mo.xright, mo.sright, mp.xright, mp.sright, m2, Point{-b, Rational(0)}}};
  Rational rhs = b * bp;
  for (const auto& pc : pieces) {
    auto chain = map_pts(walk(v, pc.of, pc.ot), pc.m, pc.osh);
    auto lam = walk(w, pc.pf, pc.pt);
    for (size_t i = 0; i + 1 < lam.size(); ++i) {
      Rational ex = lam[i + 1].x - lam[i].x, ey = lam[i + 1].y - lam[i].y;
      Rational mx2 = Rational(pc.m.a) * ex + Rational(pc.m.b) * ey;
      Rational my2 = Rational(pc.m.c) * ex + Rational(pc.m.d) * ey;
      rhs -= concave_len(chain, mx2, my2);
    }
  }
  out.rhs = rhs;
  return out;
}

namespace {

struct Dir {
  long x, y;
  int half;  // 0: angle in (-pi/2, pi/2], 1: (pi/2, 3pi/2]
};

int half_of(long x, long y) { return (x > 0 || (x == 0 && y > 0)) ? 0 : 1; }

bool dir_less(const Dir& a, const Dir& b) {
  if (a.half != b.half) return a.half < b.half;
  return a.x * b.y - a.y * b.x > 0;
}

bool same_dir(const Dir& a, const Dir& b) { return a.half == b.half && a.x * b.y - a.y * b.x == 0; }

}  // namespace

OracleResult lattice_path_oracle(const RationalPolygon& omega, size_t k, size_t max_k) {
  if (k > max_k) throw DomainError("lattice path oracle: k above the enumeration bound");
  OracleResult res;
  if (k == 0) {
    res.value = Rational();
    res.minimizer = {{0, 0}};
    return res;
  }
  const long N = static_cast<long>(k) + 1;
  // recentre omega at its vertex mean so that every support value is positive
  Rational cx, cy;
  for (const auto& p : omega.vertices) {
    cx += p.x;
    cy += p.y;
  }
  cx /= Rational(static_cast<long>(omega.vertices.size()));
  cy /= Rational(static_cast<long>(omega.vertices.size()));
  RationalPolygon om = omega.translated(-cx, -cy);

  // side of an axis-parallel square centred at the origin inside om
  Rational side;
  bool first = true;
  const auto& v = om.vertices;
  for (size_t i = 0; i < v.size(); ++i) {
    const auto& a = v[i];
    const auto& c = v[(i + 1) % v.size()];
    Rational nx = c.y - a.y, ny = a.x - c.x;  // outward normal
    Rational h = nx * a.x + ny * a.y;
    Rational s = Rational(2) * h / (abs(nx) + abs(ny));
    if (first || s < side) side = s;
    first = false;
  }
  // initial bound from straight segments with N points
  Rational best = Rational(N - 1) * (edge_length(om, 1, 0) + edge_length(om, -1, 0));
  res.minimizer = {{0, 0}, {N - 1, 0}};
  Rational vert = Rational(N - 1) * (edge_length(om, 0, 1) + edge_length(om, 0, -1));
  if (vert < best) {
    best = vert;
    res.minimizer = {{0, 0}, {0, N - 1}};
  }
  // width + height of any better polygon is at most best / side
  const long R = (best / side).floor().get_si();

  std::vector<Dir> dirs;
  for (long x = -R; x <= R; ++x)
    for (long y = -R; y <= R; ++y) {
      if (x == 0 && y == 0) continue;
      if (std::labs(x) + std::labs(y) > R) continue;
      if (gcdl(x, y) > N - 1) continue;
      dirs.push_back({x, y, half_of(x, y)});
    }
  std::stable_sort(dirs.begin(), dirs.end(), [](const Dir& a, const Dir& b) {
    if (dir_less(a, b)) return true;
    if (dir_less(b, a)) return false;
    return std::labs(a.x) + std::labs(a.y) < std::labs(b.x) + std::labs(b.y);
  });
  std::vector<Rational> len(dirs.size());
  for (size_t i = 0; i < dirs.size(); ++i) len[i] = edge_length(om, dirs[i].x, dirs[i].y);
  // first index of the next direction class
  std::vector<size_t> next_class(dirs.size());
  for (size_t i = dirs.size(); i-- > 0;)
    next_class[i] = (i + 1 < dirs.size() && same_dir(dirs[i], dirs[i + 1])) ? next_class[i + 1] : i + 1;

  std::vector<LatticePoint> verts{{0, 0}};
  std::function<void(size_t, long, long, const Rational&, long, long)> dfs =
      [&](size_t from, long x, long y, const Rational& acc, long twice_area, long boundary) {
        ++res.visited;
        if (verts.size() >= 2) {
          Dir last{verts.back().x - verts[verts.size() - 2].x, verts.back().y - verts[verts.size() - 2].y, 0};
          last.half = half_of(last.x, last.y);
          Dir close{-x, -y, half_of(-x, -y)};
          if (dir_less(last, close)) {
            long ta = twice_area;  // closing edge ends at the origin: no area term
            long bd = boundary + gcdl(x, y);
            long L = (ta + bd + 2) / 2;
            if (L > N) return;  // every completion contains this polygon
            if (L == N) {
              Rational total = acc + edge_length(om, -x, -y);
              if (total < best) {
                best = total;
                res.minimizer = verts;
              }
            }
          }
        }
        for (size_t i = from; i < dirs.size(); ++i) {
          const Dir& d = dirs[i];
          long nx = x + d.x, ny = y + d.y;
          if (nx < 0 || (nx == 0 && ny <= 0)) continue;
          if (nx > R || std::labs(ny) > R) continue;
          Rational nacc = acc + len[i];
          if (nacc >= best) continue;
          long g = gcdl(d.x, d.y);
          if (boundary + g > N) continue;
          verts.push_back({nx, ny});
          dfs(next_class[i], nx, ny, nacc, twice_area + (x * ny - y * nx), boundary + g);
          verts.pop_back();
        }
      };
  dfs(0, 0, 0, Rational(), 0, 0);
  res.value = best;
  return res;
}

// ------------------------------------------------------------ subleading

double SubleadingTrace::e(size_t k) const {
  mpf_class c(seq.at(k).get(), 256);
  mpf_class r = to_mpf(Surd(Rational(2 * static_cast<long>(k))) * vol, 256);
  mpf_class s(0, 256);
  mpf_sqrt(s.get_mpf_t(), r.get_mpf_t());
  mpf_class d(c - s, 256);
  return d.get_d();
}

int SubleadingTrace::compare(size_t k, const Rational& x) const {
  // sign of c_k - x - sqrt(2k Vol)
  return sign_plus_sqrt(Surd(seq.at(k) - x), Surd(-1), Surd(Rational(2 * static_cast<long>(k))) * vol);
}

SubleadingTrace subleading_trace(const CapacitySequence& seq, const Surd& vol) {
  SubleadingTrace tr{seq, vol, {}, {}};
  if (seq.size() < 2) return tr;
  double run = std::numeric_limits<double>::infinity();
  tr.running_min.push_back(run);  // k = 0 unused
  std::vector<double> es(seq.size());
  for (size_t k = 1; k < seq.size(); ++k) {
    es[k] = tr.e(k);
    run = std::min(run, es[k]);
    tr.running_min.push_back(run);
  }
  for (size_t k = 1; k < seq.size(); ++k)
    if (es[k] == run) tr.argmin.push_back(k);
  return tr;
}

SubleadingTrace subleading_trace(const WeightTuple& t, size_t K, unsigned jobs) {
  return subleading_trace(convex_capacities(t, K, jobs), stats(t).vol);
}

}  // namespace symcap
