#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "oddsym/osym.hpp"

namespace oddsym {

// R_ell = Sym_m[c], m = floor(ell/2); g_r is the r-th even elementary
// symmetric polynomial (degree 4r), c is odd of degree 2 with c^2 = 0, and
// c g_m = 0 when ell is even.  Keys are multisets of g-indices.
struct REll {
  int ell = 0;
  std::map<Partition, i64> even, odd;

  REll() = default;
  explicit REll(int l) : ell(l) {}
  static REll one(int ell);
  static REll g(int ell, int r);
  static REll c(int ell);
  static REll scalar(int ell, i64 v);

  int m() const { return ell / 2; }
  bool zero() const { return even.empty() && odd.empty(); }
  void add_even(const Partition& k, i64 v);
  void add_odd(const Partition& k, i64 v);
  REll& operator+=(const REll& o);
  REll& operator-=(const REll& o);
  friend REll operator+(REll a, const REll& b) { return a += b; }
  friend REll operator-(REll a, const REll& b) { return a -= b; }
  friend REll operator*(i64 s, const REll& a);
  friend REll operator*(const REll& a, const REll& b);
  bool operator==(const REll& o) const { return ell == o.ell && even == o.even && odd == o.odd; }
  bool operator!=(const REll& o) const { return !(*this == o); }
  REll even_part() const;
  REll odd_part() const;
  i64 constant() const;
  std::string str() const;
};

REll rell_from_osym(const Sym& x, int ell);  // x in the h-basis
REll rell_e(int ell, int r);                 // image of e_r
REll rell_h(int ell, int r);                 // image of h_r
REll retruncate(const REll& x, int ell2);    // R_ell -> R_ell2 on generators
// monomial basis of R_ell in q-degree d (g_r has degree 4r, c degree 2)
std::vector<REll> rell_monomials(int ell, int d);

// OH_n^ell: keys are partitions in the n x n' box, coefficients act on the right.
struct OH {
  int n = 0, ell = 0;
  std::map<Partition, REll> t;

  OH() = default;
  OH(int nn, int l) : n(nn), ell(l) {}
  static OH one(int n, int ell);
  static OH basis(int n, int ell, const Partition& l);  // s_l (x) 1, normalised
  static OH from_r(int n, int ell, const REll& r);       // 1 (x) r
  void add(const Partition& l, const REll& r);
  bool zero() const { return t.empty(); }
  OH& operator+=(const OH& o);
  OH& operator-=(const OH& o);
  friend OH operator+(OH a, const OH& b) { return a += b; }
  friend OH operator-(OH a, const OH& b) { return a -= b; }
  friend OH operator*(i64 s, const OH& a);
  OH times_r(const REll& r) const;  // right multiplication by 1 (x) r
  bool operator==(const OH& o) const { return n == o.n && ell == o.ell && t == o.t; }
  bool operator!=(const OH& o) const { return !(*this == o); }
  std::string str() const;
  nlohmann::json to_json() const;
};

int nprime(int n, int ell);
std::vector<Partition> oh_basis(int n, int ell);  // Gr(n, n')

// normal form of sum over keys of s_l (x) r with ht(l) <= n unrestricted otherwise
OH oh_normalize(int n, int ell, const std::map<Partition, REll>& raw);
OH oh_from_sym(int n, int ell, const Sym& x);  // x (x) 1 for x in the h-basis
OH oh_mul(const OH& a, const OH& b);
REll oh_trace(const OH& a);
OH psi_iso(const OH& a, bool forward);
OH delta_auto(const OH& a);
REll alpha(const OH& a);
std::map<Partition, i64> oh_bar(const OH& a);
// trace of s_l s_m in the specialisation, over oh_basis(n, ell)
std::vector<std::vector<i64>> trace_gram(int n, int ell);
Partition complement(const Partition& l, int n, int np);  // n x np box complement

}  // namespace oddsym
