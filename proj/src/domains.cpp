#include "symcap/domains.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

namespace symcap {

// ------------------------------------------------------------ WeightTuple

WeightTuple WeightTuple::make(const Surd& b, std::vector<Surd> cuts) {
  if (b.sign() <= 0) throw DomainError("b must be positive");
  for (const auto& c : cuts)
    if (c.sign() < 0) throw DomainError("cuts must be nonnegative");
  std::erase_if(cuts, [](const Surd& c) { return c.sign() == 0; });
  std::stable_sort(cuts.begin(), cuts.end(), std::greater<>());
  Surd sum, sq;
  for (const auto& c : cuts) {
    sum += c;
    sq += c * c;
  }
  if (sq >= b * b) throw DomainError("tuple violates sum b_j^2 < b^2");
  if (sum > Surd(3) * b) throw DomainError("tuple violates sum b_j <= 3b");
  if (cuts.size() >= 2 && cuts[0] + cuts[1] > b) throw DomainError("tuple violates b_1 + b_2 <= b");
  return WeightTuple{b, std::move(cuts)};
}

WeightTuple WeightTuple::make(const Rational& b, const std::vector<Rational>& cuts) {
  return make(Surd(b), std::vector<Surd>(cuts.begin(), cuts.end()));
}

WeightTuple WeightTuple::parse(std::string_view text) {
  std::string s(text);
  auto colon = s.find(':');
  std::string head = colon == std::string::npos ? s : s.substr(0, colon);
  std::string tail = colon == std::string::npos ? "" : s.substr(colon + 1);
  Surd b = Surd::parse(head);
  std::vector<Surd> cuts;
  std::string tok;
  auto flush = [&] {
    if (!tok.empty()) cuts.push_back(Surd::parse(tok));
    tok.clear();
  };
  // tokens are separated by commas or whitespace; surds keep their spaces
  // only inside "a + b*sqrt(s)", so commas are required between surds
  bool has_comma = tail.find(',') != std::string::npos;
  for (char c : tail) {
    if (c == ',' || (!has_comma && std::isspace(static_cast<unsigned char>(c)))) flush();
    else tok += c;
  }
  flush();
  return make(b, std::move(cuts));
}

bool WeightTuple::is_rational() const {
  if (!b.is_rational()) return false;
  for (const auto& c : cuts)
    if (!c.is_rational()) return false;
  return true;
}

Rational WeightTuple::rb() const { return b.to_rational(); }

std::vector<Rational> WeightTuple::rcuts() const {
  std::vector<Rational> out;
  for (const auto& c : cuts) out.push_back(c.to_rational());
  return out;
}

WeightTuple WeightTuple::scaled(const Surd& lambda) const {
  if (lambda.sign() <= 0) throw DomainError("scale must be positive");
  WeightTuple t{b * lambda, {}};
  for (const auto& c : cuts) t.cuts.push_back(c * lambda);
  return t;
}

std::string WeightTuple::str() const {
  std::string s = b.str() + ":";
  for (size_t i = 0; i < cuts.size(); ++i) s += (i ? "," : "") + cuts[i].str();
  return s;
}

// ---------------------------------------------------------------- polygons

namespace {

Rational cross(const Point& o, const Point& a, const Point& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

Rational cross_dir(const Rational& ax, const Rational& ay, const Rational& bx, const Rational& by) {
  return ax * by - ay * bx;
}

// half-plane index for angular ordering of nonzero directions
int half(const Rational& x, const Rational& y) { return (y.sign() > 0 || (y.is_zero() && x.sign() > 0)) ? 0 : 1; }

bool angle_less(const Rational& ax, const Rational& ay, const Rational& bx, const Rational& by) {
  int ha = half(ax, ay), hb = half(bx, by);
  if (ha != hb) return ha < hb;
  return cross_dir(ax, ay, bx, by).sign() > 0;
}

}  // namespace

RationalPolygon RationalPolygon::make(std::vector<Point> pts) {
  std::vector<Point> v;
  for (const auto& p : pts)
    if (v.empty() || !(v.back() == p)) v.push_back(p);
  while (v.size() > 1 && v.front() == v.back()) v.pop_back();
  if (v.size() < 3) throw DomainError("polygon needs at least three distinct vertices");
  Rational area2;
  for (size_t i = 0; i < v.size(); ++i) {
    const auto& p = v[i];
    const auto& q = v[(i + 1) % v.size()];
    area2 += p.x * q.y - p.y * q.x;
  }
  if (area2.is_zero()) throw DomainError("degenerate polygon");
  if (area2.sign() < 0) std::reverse(v.begin(), v.end());
  bool changed = true;
  while (changed && v.size() >= 3) {
    changed = false;
    for (size_t i = 0; i < v.size(); ++i) {
      const auto& a = v[(i + v.size() - 1) % v.size()];
      const auto& c = v[(i + 1) % v.size()];
      if (cross(a, v[i], c).is_zero()) {
        v.erase(v.begin() + static_cast<long>(i));
        changed = true;
        break;
      }
    }
  }
  if (v.size() < 3) throw DomainError("degenerate polygon");
  const size_t n = v.size();
  int descents = 0;
  for (size_t i = 0; i < n; ++i) {
    const auto& a = v[(i + n - 1) % n];
    const auto& c = v[(i + 1) % n];
    if (cross(a, v[i], c).sign() <= 0) throw DomainError("polygon is not convex");
    Rational dx1 = v[i].x - a.x, dy1 = v[i].y - a.y, dx2 = c.x - v[i].x, dy2 = c.y - v[i].y;
    if (!angle_less(dx1, dy1, dx2, dy2)) ++descents;
  }
  if (descents != 1) throw DomainError("polygon is not convex (self-overlapping)");
  for (const auto& p : v)
    if (p.x.sign() < 0 || p.y.sign() < 0) throw DomainError("polygon leaves the positive quadrant");
  return RationalPolygon{v};
}

RationalPolygon RationalPolygon::parse(std::string_view text) {
  std::vector<Point> pts;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string xs, ys, extra;
    if (!(ls >> xs)) continue;
    if (!(ls >> ys) || (ls >> extra)) throw DomainError("polygon line needs exactly two coordinates: " + line);
    pts.push_back({Rational::parse(xs), Rational::parse(ys)});
  }
  return make(std::move(pts));
}

Rational RationalPolygon::twice_area() const {
  Rational a;
  for (size_t i = 0; i < vertices.size(); ++i) {
    const auto& p = vertices[i];
    const auto& q = vertices[(i + 1) % vertices.size()];
    a += p.x * q.y - p.y * q.x;
  }
  return a;
}

RationalPolygon RationalPolygon::translated(const Rational& dx, const Rational& dy) const {
  RationalPolygon r = *this;
  for (auto& p : r.vertices) {
    p.x += dx;
    p.y += dy;
  }
  return r;
}

// ----------------------------------------------------------------- cutting

namespace {

Point apply(const IntMat2& m, const Point& shift, const Point& p) {
  // m * (p + shift)
  Rational x = p.x + shift.x, y = p.y + shift.y;
  return {Rational(m.a) * x + Rational(m.b) * y, Rational(m.c) * x + Rational(m.d) * y};
}

std::optional<CutNode> concave_rec(const std::vector<Point>& chain, const IntMat2& m, const Point& shift,
                                   int depth) {
  if (depth > 100000) throw DomainError("cutting recursion did not terminate");
  if (chain.size() < 2) return std::nullopt;
  if (chain.front().y.sign() <= 0 || chain.back().x.sign() <= 0) return std::nullopt;
  Rational a = chain[0].x + chain[0].y;
  for (const auto& p : chain) a = std::min(a, p.x + p.y);
  if (a.sign() <= 0) return std::nullopt;
  size_t s = chain.size(), e = 0;
  for (size_t i = 0; i < chain.size(); ++i) {
    if (chain[i].x + chain[i].y == a) {
      s = std::min(s, i);
      e = i;
    }
  }
  CutNode node;
  node.size = a;
  node.map = m;
  node.shift = shift;
  // region above the cut: corner (0,a), map (x,y) -> (x, x+y-a)
  {
    IntMat2 m1{1, 0, 1, 1};
    Point sh{Rational(0), -a};
    std::vector<Point> c1;
    for (size_t i = 0; i <= s; ++i) c1.push_back(apply(m1, sh, chain[i]));
    if (auto ch = concave_rec(c1, m1, sh, depth + 1)) {
      node.children.push_back(std::move(*ch));
      node.labels.push_back(1);
    }
  }
  // region right of the cut: corner (a,0), map (x,y) -> (x+y-a, y)
  {
    IntMat2 m2{1, 1, 0, 1};
    Point sh{-a, Rational(0)};
    std::vector<Point> c2;
    for (size_t i = e; i < chain.size(); ++i) c2.push_back(apply(m2, sh, chain[i]));
    if (auto ch = concave_rec(c2, m2, sh, depth + 1)) {
      node.children.push_back(std::move(*ch));
      node.labels.push_back(2);
    }
  }
  return node;
}

void collect(const CutNode& n, std::vector<Rational>& out) {
  out.push_back(n.size);
  for (const auto& c : n.children) collect(c, out);
}

bool nested(const CutNode& n) {
  Rational s;
  for (const auto& c : n.children) {
    if (!nested(c)) return false;
    s += c.size;
  }
  return s <= n.size;
}

}  // namespace

std::optional<CutNode> concave_cuts(const std::vector<Point>& chain) {
  return concave_rec(chain, IntMat2{1, 0, 0, 1}, Point{}, 0);
}

std::vector<Rational> CutTree::sizes() const {
  std::vector<Rational> out;
  for (const auto& r : regions)
    if (r) collect(*r, out);
  return out;
}

bool CutTree::check_nesting() const {
  for (const auto& r : regions)
    if (r && !nested(*r)) return false;
  return true;
}

CutResult cut_decomposition(const RationalPolygon& poly) {
  Rational minx = poly.vertices[0].x, miny = poly.vertices[0].y;
  for (const auto& p : poly.vertices) {
    minx = std::min(minx, p.x);
    miny = std::min(miny, p.y);
  }
  const auto P = poly.translated(-minx, -miny);
  const auto& v = P.vertices;
  const size_t n = v.size();
  Rational b = v[0].x + v[0].y;
  for (const auto& p : v) b = std::max(b, p.x + p.y);

  auto pick = [&](auto pred, auto better) {
    size_t best = n;
    for (size_t i = 0; i < n; ++i)
      if (pred(v[i]) && (best == n || better(v[i], v[best]))) best = i;
    return best;
  };
  auto on_y = [](const Point& p) { return p.x.is_zero(); };
  auto on_x = [](const Point& p) { return p.y.is_zero(); };
  auto on_s = [&](const Point& p) { return p.x + p.y == b; };
  size_t ytop = pick(on_y, [](const Point& a, const Point& c) { return a.y > c.y; });
  size_t ybot = pick(on_y, [](const Point& a, const Point& c) { return a.y < c.y; });
  size_t xright = pick(on_x, [](const Point& a, const Point& c) { return a.x > c.x; });
  size_t xleft = pick(on_x, [](const Point& a, const Point& c) { return a.x < c.x; });
  size_t sleft = pick(on_s, [](const Point& a, const Point& c) { return a.x < c.x; });
  size_t sright = pick(on_s, [](const Point& a, const Point& c) { return a.x > c.x; });

  auto walk = [&](size_t from, size_t to, const IntMat2& m, const Point& shift) {
    std::vector<Point> out;
    for (size_t i = from;; i = (i + 1) % n) {
      out.push_back(apply(m, shift, v[i]));
      if (i == to) break;
    }
    return out;
  };

  CutResult res;
  res.tree.b = b;
  IntMat2 id{1, 0, 0, 1}, m1{-1, -1, 1, 0}, m2{0, 1, -1, -1};
  // Omega_0 at the origin, Omega_1 at (0,b), Omega_2 at (b,0)
  res.tree.regions[0] = concave_rec(walk(ybot, xleft, id, Point{}), id, Point{}, 0);
  Point sh1{Rational(0), -b}, sh2{-b, Rational(0)};
  res.tree.regions[1] = concave_rec(walk(sleft, ytop, m1, sh1), m1, sh1, 0);
  res.tree.regions[2] = concave_rec(walk(xright, sright, m2, sh2), m2, sh2, 0);

  std::vector<Rational> sizes = res.tree.sizes();
  std::stable_sort(sizes.begin(), sizes.end(), std::greater<>());
  res.tuple = WeightTuple::make(b, sizes);
  return res;
}

// ------------------------------------------------------------------- stats

std::optional<Surd> accumulation_point(const Surd& per, const Surd& vol) {
  if (vol.sign() <= 0) throw DomainError("volume must be positive");
  if ((per * per - Surd(4) * vol).sign() < 0 || per.sign() < 0) return std::nullopt;
  Surd s = per * per / vol - Surd(2);
  Surd disc = s * s - Surd(4);
  auto root = surd_sqrt(disc);
  if (!root) throw DomainError("accumulation point is not a quadratic surd");
  return (s + *root) / Surd(2);
}

DomainStats stats(const WeightTuple& t) {
  DomainStats st;
  Surd sum, sq;
  for (const auto& c : t.cuts) {
    sum += c;
    sq += c * c;
  }
  st.per = Surd(3) * t.b - sum;
  st.vol = t.b * t.b - sq;
  st.a0 = accumulation_point(st.per, st.vol);
  return st;
}

namespace {

// primitive integral direction and multiplier of a rational vector
std::pair<std::pair<BigInt, BigInt>, Rational> primitive(const Rational& dx, const Rational& dy) {
  BigInt l;
  mpz_lcm(l.get_mpz_t(), dx.den().get_mpz_t(), dy.den().get_mpz_t());
  BigInt X = (dx * Rational(l)).num(), Y = (dy * Rational(l)).num();
  BigInt g;
  mpz_gcd(g.get_mpz_t(), X.get_mpz_t(), Y.get_mpz_t());
  if (g == 0) return {{0, 0}, Rational()};
  return {{X / g, Y / g}, Rational(g, l)};
}

}  // namespace

Rational affine_length(const Point& from, const Point& to) {
  return primitive(to.x - from.x, to.y - from.y).second;
}

Rational boundary_perimeter(const RationalPolygon& poly) {
  Rational s;
  const auto& v = poly.vertices;
  for (size_t i = 0; i < v.size(); ++i) s += affine_length(v[i], v[(i + 1) % v.size()]);
  return s;
}

BigInt singularity_order(const RationalPolygon& poly, size_t vertex) {
  const auto& v = poly.vertices;
  const size_t n = v.size();
  if (vertex >= n) throw DomainError("vertex index out of range");
  const auto& a = v[(vertex + n - 1) % n];
  const auto& c = v[(vertex + 1) % n];
  auto d1 = primitive(v[vertex].x - a.x, v[vertex].y - a.y).first;
  auto d2 = primitive(c.x - v[vertex].x, c.y - v[vertex].y).first;
  BigInt det = d1.first * d2.second - d1.second * d2.first;
  return abs(det);
}

unsigned cut_length_lower_bound(const BigInt& order) {
  if (order < 1) throw DomainError("singularity order must be positive");
  BigInt f0 = 1, f1 = 1;  // F_k, F_{k+1}
  unsigned k = 0;
  while (8 * f0 * f0 < order) {
    BigInt f2 = f0 + f1;
    f0 = f1;
    f1 = f2;
    ++k;
  }
  return k;
}

int VolumeConstraint::compare(const Surd& x) const { return sign_plus_sqrt(x, Surd(-1), z / vol); }

std::optional<Surd> VolumeConstraint::exact() const { return surd_sqrt(z / vol); }

double VolumeConstraint::approx() const {
  mpf_class q = to_mpf(z / vol, 256);
  mpf_class r(0, 256);
  mpf_sqrt(r.get_mpf_t(), q.get_mpf_t());
  return r.get_d();
}

VolumeConstraint volume_constraint(const Surd& vol, const Surd& z) {
  if (vol.sign() <= 0) throw DomainError("volume must be positive");
  if (z.sign() < 0) throw DomainError("z must be nonnegative");
  return {z, vol};
}

VolumeConstraint volume_constraint(const WeightTuple& t, const Surd& z) { return volume_constraint(stats(t).vol, z); }

}  // namespace symcap
