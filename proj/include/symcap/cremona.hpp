#pragma once

#include <string>
#include <vector>

#include "symcap/classes.hpp"
#include "symcap/domains.hpp"

namespace symcap {

// d L - sum n_i E_i; entries may turn negative during reduction.
struct ClassVector {
  BigInt d;
  std::vector<BigInt> n;

  static ClassVector of(const ObstructionClass& c);  // mtilde then m
  BigInt linear() const;                             // 3d - sum n_i
  BigInt self_intersection() const;                  // d^2 - sum n_i^2
  std::string str() const;
  friend bool operator==(const ClassVector&, const ClassVector&) = default;
};

// One move on a weight tuple; unchanged when b - b1 - b2 - b3 >= 0.
WeightTuple cremona_move_tuple(const WeightTuple& t);
bool is_reduced(const WeightTuple& t);

// c_{ijk}: add the defect d - n_i - n_j - n_k to d and to positions i, j, k.
ClassVector class_move(const ClassVector& v, size_t i, size_t j, size_t k);

struct ReductionStep {
  size_t i, j, k;  // positions in the vector before the move
  BigInt defect;
};

struct ReductionTrace {
  bool exceptional = false;
  std::vector<ReductionStep> steps;
  ClassVector terminal;
  std::string reason;

  std::string json() const;
};

// Moves on the three largest entries until the defect is nonnegative; the class
// is exceptional when that leaves (0; -1) up to zeros.  Throws on a class that
// fails the Diophantine identities.
ReductionTrace reduce_class(const ClassVector& v);
bool is_exceptional(const ClassVector& v);

// Replays the recorded moves from the start vector.
ClassVector replay(const ClassVector& start, const ReductionTrace& trace);

bool capacity_invariance_check(const WeightTuple& a, const WeightTuple& b, size_t K);

// Tuples visited by repeated moves, starting with t and ending reduced.
std::vector<WeightTuple> cremona_chain(const WeightTuple& t);
size_t cremona_length_upper(const WeightTuple& t);

}  // namespace symcap
