#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "oddsym/oh.hpp"

namespace oddsym {

// Vectors in V_n^ell (kind 'V', right basis v(x^r)) or U_n^ell (kind 'U',
// left basis u(x^r)), 0 <= r <= n, with coefficients in OH_{n+1}^ell.
// tilde selects the unshifted V~ = Pi^n V or the shifted U~ = Pi^{n'} U; the
// coefficient of U~ is taken with respect to the U~ action.
struct BimodVec {
  char kind = 'V';
  bool tilde = false;
  int n = 0, ell = 0;
  std::vector<OH> c;

  BimodVec() = default;
  BimodVec(char k, int nn, int l, bool t = false);
  static BimodVec basis(char k, int n, int ell, int r, bool t = false);  // r <= n

  int np() const { return ell - n - 1; }
  bool zero() const;
  BimodVec& operator+=(const BimodVec& o);
  BimodVec& operator-=(const BimodVec& o);
  friend BimodVec operator+(BimodVec a, const BimodVec& b) { return a += b; }
  friend BimodVec operator-(BimodVec a, const BimodVec& b) { return a -= b; }
  friend BimodVec operator*(i64 s, const BimodVec& a);
  bool operator==(const BimodVec& o) const;
  bool operator!=(const BimodVec& o) const { return !(*this == o); }
  std::string str() const;
  nlohmann::json to_json() const;
};

OH eps_bar(int n, int ell, int r);  // image of eps_r in OH_n^ell
OH eta_bar(int n, int ell, int r);
int oh_term_degree(const Partition& l, bool odd, const Partition& g);
OH oh_parity_part(const OH& a, int par);

// v_n(x^p), u_n(x^p) expanded in the free bases
BimodVec v_reduce(int n, int ell, int p);
BimodVec u_reduce(int n, int ell, int p);
BimodVec gen(char kind, int n, int ell, int p, bool tilde = false);

// a in OH_n (V) or OH_{n+1} (U) acting on the left; b in OH_{n+1} (V) or OH_n (U) on the right
BimodVec act_left(const OH& a, const BimodVec& x);
BimodVec act_right(const BimodVec& x, const OH& b);
// switch between U and U~ (V and V~ share coordinates)
BimodVec retilde(const BimodVec& x, bool tilde);

// coordinates over OH_n on the opposite-side bases v(x^k) / u(x^k), 0 <= k <= n'
std::vector<OH> to_left_basis(const BimodVec& v);
std::vector<OH> to_right_basis(const BimodVec& u);

// generating series in t with OH coefficients, exponents >= lo kept
struct TruncSeries {
  int lo = 0;
  int n = 0, ell = 0;
  std::map<int, OH> c;
  TruncSeries(int lo_, int nn, int l) : lo(lo_), n(nn), ell(l) {}
  void add(int e, const OH& a);
  OH at(int e) const;
  TruncSeries above(int p) const;    // terms with exponent > p
  TruncSeries at_most(int p) const;  // terms with exponent <= p
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
};
TruncSeries eps_series(int n, int ell, int lo);  // eps^{(n)}(t)
TruncSeries eta_series(int n, int ell, int lo);  // eta^{(n)}(t)
// v_n(x^p) from the t^{-p-1} coefficient of the generating identity for v((t-x)^{-1})
BimodVec v_reduce_series(int n, int ell, int p);
BimodVec u_reduce_series(int n, int ell, int p);

// V (x)_{OH_{n+1}} U as sum over p, q of v(x^p) (x) m[p][q] u(x^q)
struct TensorVU {
  int n = 0, ell = 0;
  std::vector<std::vector<OH>> m;
  TensorVU(int nn, int l);
  bool operator==(const TensorVU& o) const { return n == o.n && ell == o.ell && m == o.m; }
  bool operator!=(const TensorVU& o) const { return !(*this == o); }
  TensorVU& operator+=(const TensorVU& o);
  std::string str() const;
};
TensorVU tensor_vu(const BimodVec& v, const BimodVec& u);
TensorVU act_left(const OH& a, const TensorVU& z);   // a in OH_n
TensorVU act_right(const TensorVU& z, const OH& a);  // a in OH_n

// U~ (x)_{OH_n} V~ as sum over j, k of u~(x^j) (x) m[j][k] v~(x^k), j, k <= n'
struct TensorUV {
  int n = 0, ell = 0;
  std::vector<std::vector<OH>> m;
  TensorUV(int nn, int l);
  bool operator==(const TensorUV& o) const { return n == o.n && ell == o.ell && m == o.m; }
  bool operator!=(const TensorUV& o) const { return !(*this == o); }
  TensorUV& operator+=(const TensorUV& o);
};
TensorUV tensor_uv(const BimodVec& u, const BimodVec& v);
TensorUV act_left(const OH& a, const TensorUV& z);   // a in OH_{n+1}
TensorUV act_right(const TensorUV& z, const OH& a);  // a in OH_{n+1}

OH ev(int n, int ell, int r, int s);
OH ev_apply(const BimodVec& u, const BimodVec& v);
TensorVU coev(int n, int ell);
TensorVU coev_collapsed(int n, int ell, int form);  // form 1 or 2

OH tilde_ev(int n, int ell, int r, int s);
OH tilde_ev_apply(const BimodVec& v, const BimodVec& u);
TensorUV tilde_coev(int n, int ell);

// crossing sigma_n on u_{n-1}(x^r) (x) v_{n-1}(x^s), 0 <= s <= n-1
TensorVU crossing(int n, int ell, int r, int s);

}  // namespace oddsym
