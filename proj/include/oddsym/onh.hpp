#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "oddsym/combinatorics.hpp"
#include "oddsym/osym.hpp"
#include "oddsym/scalar.hpp"

namespace oddsym {

using Expo = std::vector<int>;  // x^k = x_1^{k_1} ... x_n^{k_n}

struct OPol {
  int n = 0;
  std::map<Expo, i64> c;

  OPol() = default;
  explicit OPol(int nv) : n(nv) {}
  static OPol one(int n);
  static OPol var(int n, int i);  // x_i, 1-based
  static OPol mono(int n, const Expo& k, i64 coeff = 1);

  void add(const Expo& k, i64 v);
  bool zero() const { return c.empty(); }
  OPol& operator+=(const OPol& o);
  OPol& operator-=(const OPol& o);
  friend OPol operator+(OPol a, const OPol& b) { return a += b; }
  friend OPol operator-(OPol a, const OPol& b) { return a -= b; }
  OPol operator-() const;
  friend OPol operator*(i64 s, const OPol& a);
  friend OPol operator*(const OPol& a, const OPol& b);
  bool operator==(const OPol& o) const { return n == o.n && c == o.c; }
  bool operator!=(const OPol& o) const { return !(*this == o); }

  std::string str() const;
  nlohmann::json to_json() const;
};

int expo_deg(const Expo& k);
// sign of x^a x^b = sign * x^{a+b}
int mono_sign(const Expo& a, const Expo& b);

OPol sn_act(const Perm& w, const OPol& f);
OPol demazure(int j, const OPol& f);
OPol opol_gamma(const OPol& f);  // x_i -> x_{n+1-i}
OPol opol_star(const OPol& f);   // anti-involution fixing each x_i

struct Gen {
  bool tau = false;
  int i = 1;
  bool operator==(const Gen& o) const { return tau == o.tau && i == o.i; }
};
struct ONHWord {
  std::vector<Gen> g;
  i64 coeff = 1;
};
ONHWord parse_word(const std::string& s);
std::string word_str(const ONHWord& w);
ONHWord tau_word(const std::vector<int>& letters);
ONHWord concat(const ONHWord& a, const ONHWord& b);
int word_parity(const ONHWord& w);

// the rightmost generator acts first
OPol onh_apply(const ONHWord& w, const OPol& f);
OPol right_action(const OPol& f, const ONHWord& w);  // f . w, leftmost acts first

std::vector<int> wn_word(int n);  // fixed reduced word of the longest element
ONHWord omega(int n);
OPol xi(int n);
ONHWord tau_of(const Perm& w);  // fixed word for w_n, lex-smallest otherwise
OPol schubert(const Perm& w);
OPol schur_poly(const Partition& l, int n);

OPol h_poly(int n, int r);
OPol e_poly(int n, int r);
OPol sym_to_opol(const Sym& x, int n);
// inverse of sym_to_opol on OSym_n; result is in the Schur basis with ht <= n
Sym opol_to_schur(const OPol& f, bool* ok);
std::map<Perm, Sym> decompose_over_osym(const OPol& f);

}  // namespace oddsym
