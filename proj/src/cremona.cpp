#include "symcap/cremona.hpp"

#include <algorithm>
#include <numeric>

#include "symcap/ech.hpp"

namespace symcap {

ClassVector ClassVector::of(const ObstructionClass& c) {
  ClassVector v{c.d, c.mtilde};
  v.n.insert(v.n.end(), c.m.begin(), c.m.end());
  return v;
}

BigInt ClassVector::linear() const {
  BigInt s = 3 * d;
  for (const auto& x : n) s -= x;
  return s;
}

BigInt ClassVector::self_intersection() const {
  BigInt s = d * d;
  for (const auto& x : n) s -= x * x;
  return s;
}

std::string ClassVector::str() const {
  std::string s = "(" + d.get_str() + ";";
  for (size_t i = 0; i < n.size(); ++i) s += (i ? "," : "") + n[i].get_str();
  return s + ")";
}

bool is_reduced(const WeightTuple& t) {
  Surd def = t.b;
  for (size_t j = 0; j < 3 && j < t.cuts.size(); ++j) def -= t.cuts[j];
  return def.sign() >= 0;
}

WeightTuple cremona_move_tuple(const WeightTuple& t) {
  if (is_reduced(t)) return t;
  std::vector<Surd> c = t.cuts;
  while (c.size() < 3) c.emplace_back();
  Surd def = t.b - c[0] - c[1] - c[2];
  for (size_t j = 0; j < 3; ++j) c[j] += def;
  return WeightTuple::make(t.b + def, c);
}

ClassVector class_move(const ClassVector& v, size_t i, size_t j, size_t k) {
  if (i == j || j == k || i == k) throw DomainError("Cremona move needs distinct indices");
  if (std::max({i, j, k}) >= v.n.size()) throw DomainError("Cremona move index out of range");
  ClassVector out = v;
  BigInt def = v.d - v.n[i] - v.n[j] - v.n[k];
  out.d += def;
  out.n[i] += def;
  out.n[j] += def;
  out.n[k] += def;
  return out;
}

namespace {

bool is_e1(const ClassVector& v) {
  if (v.d != 0) return false;
  int neg = 0;
  for (const auto& x : v.n) {
    if (x == -1) ++neg;
    else if (x != 0) return false;
  }
  return neg == 1;
}

}  // namespace

std::string ReductionTrace::json() const {
  std::string s = "[";
  for (size_t t = 0; t < steps.size(); ++t) {
    const auto& st = steps[t];
    s += (t ? "," : "") + std::string("{\"move\":[") + std::to_string(st.i) + "," + std::to_string(st.j) + "," +
         std::to_string(st.k) + "],\"defect\":" + st.defect.get_str() + "}";
  }
  return s + "]";
}

ReductionTrace reduce_class(const ClassVector& start) {
  if (start.linear() != 1 || start.self_intersection() != -1)
    throw DomainError("class fails the Diophantine identities: " + start.str());
  ReductionTrace tr;
  ClassVector v = start;
  while (v.n.size() < 3) v.n.emplace_back(0);
  for (;;) {
    // three largest entries, ties broken by position
    std::vector<size_t> idx(v.n.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return v.n[a] > v.n[b]; });
    BigInt def = v.d - v.n[idx[0]] - v.n[idx[1]] - v.n[idx[2]];
    if (def >= 0) break;
    if (v.d < 0) break;
    tr.steps.push_back({idx[0], idx[1], idx[2], def});
    v = class_move(v, idx[0], idx[1], idx[2]);
  }
  tr.terminal = v;
  tr.exceptional = is_e1(v);
  if (!tr.exceptional) tr.reason = v.d < 0 ? "degree became negative" : "reduced vector is not (0;-1)";
  return tr;
}

bool is_exceptional(const ClassVector& v) { return reduce_class(v).exceptional; }

ClassVector replay(const ClassVector& start, const ReductionTrace& trace) {
  ClassVector v = start;
  while (v.n.size() < 3) v.n.emplace_back(0);
  for (const auto& st : trace.steps) v = class_move(v, st.i, st.j, st.k);
  return v;
}

bool capacity_invariance_check(const WeightTuple& a, const WeightTuple& b, size_t K) {
  auto ca = convex_capacities(a, K), cb = convex_capacities(b, K);
  for (size_t k = 0; k <= K; ++k)
    if (ca.at(k) != cb.at(k)) return false;
  return true;
}

std::vector<WeightTuple> cremona_chain(const WeightTuple& t) {
  std::vector<WeightTuple> chain{t};
  // each move lowers b by the (negative) defect; a long chain means a bug
  for (int guard = 0; guard < 100000 && !is_reduced(chain.back()); ++guard)
    chain.push_back(cremona_move_tuple(chain.back()));
  if (!is_reduced(chain.back())) throw DomainError("Cremona reduction did not terminate");
  return chain;
}

size_t cremona_length_upper(const WeightTuple& t) { return cremona_chain(t).back().cuts.size(); }

}  // namespace symcap
