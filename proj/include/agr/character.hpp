#pragma once

#include <string>

#include "agr/trivector.hpp"

namespace agr {

// Character (a, b) of the 2-torus, the monomial lambda^a mu^b.
struct Character {
  long a = 0, b = 0;

  friend Character operator+(Character x, Character y) { return {x.a + y.a, x.b + y.b}; }
  friend Character operator-(Character x, Character y) { return {x.a - y.a, x.b - y.b}; }
  friend bool operator==(Character x, Character y) { return x.a == y.a && x.b == y.b; }
  friend bool operator!=(Character x, Character y) { return !(x == y); }
  friend bool operator<(Character x, Character y) {
    return x.a != y.a ? x.a < y.a : x.b < y.b;
  }

  std::string str() const { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }
};

// One-parameter subgroup s -> t_{s^c, s^d}; pairing with a character is the
// integer exponent of s.
struct OneParamSubgroup {
  long c = 0, d = 0;

  long pair(Character ch) const { return c * ch.a + d * ch.b; }
  std::string str() const { return "(" + std::to_string(c) + "," + std::to_string(d) + ")"; }
};

// Character of the tilde eigenvector t_k (k = 1..7): the torus scales t_k by
// lambda^a mu^b.
Character tilde_unit_character(int k);

// Character of the coordinate trivector t_i ^ t_j ^ t_k (sum of the three).
Character tilde_tri_character(const grass::TriIndex& t);

}  // namespace agr
