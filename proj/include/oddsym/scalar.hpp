#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace oddsym {

using i64 = std::int64_t;

// Laurent polynomial in q with integer coefficients.
using Laurent = std::map<int, i64>;

// Element of Z[q,q^-1]^pi, pi^2 = 1.  Keys are (q-exponent, pi-exponent).
class GP {
public:
  GP() = default;
  GP(i64 c);
  static GP mono(i64 c, int d, int p = 0);
  static GP q(int d = 1) { return mono(1, d, 0); }
  static GP pi(int p = 1) { return mono(1, 0, p); }
  static GP from_pm(const Laurent& plus, const Laurent& minus);

  const std::map<std::pair<int, int>, i64>& terms() const { return t_; }
  bool zero() const { return t_.empty(); }
  i64 coeff(int d, int p) const;
  void add(int d, int p, i64 c);

  GP& operator+=(const GP& o);
  GP& operator-=(const GP& o);
  GP& operator*=(const GP& o);
  friend GP operator+(GP a, const GP& b) { return a += b; }
  friend GP operator-(GP a, const GP& b) { return a -= b; }
  friend GP operator*(GP a, const GP& b) { return a *= b; }
  GP operator-() const;
  bool operator==(const GP& o) const { return t_ == o.t_; }
  bool operator!=(const GP& o) const { return t_ != o.t_; }
  bool operator<(const GP& o) const { return t_ < o.t_; }

  GP bar() const;
  GP pow(int e) const;
  Laurent at(int sign) const;
  bool nonneg() const;

  std::string str() const;
  nlohmann::json to_json() const;
  static GP from_json(const nlohmann::json& j);

private:
  std::map<std::pair<int, int>, i64> t_;
};

inline GP pi_pow(i64 e) { return GP::pi(static_cast<int>(((e % 2) + 2) % 2)); }
inline GP sgn(i64 e) { return GP((e % 2 == 0) ? 1 : -1); }
inline GP pq2(i64 e) { return GP::mono(1, static_cast<int>(2 * e), static_cast<int>(((e % 2) + 2) % 2)); }

// exact quotient of Laurent polynomials; throws if not exact
Laurent ldiv(const Laurent& a, const Laurent& b);
Laurent lmul(const Laurent& a, const Laurent& b);

inline i64 c2(i64 n) { return n * (n - 1) / 2; }
inline i64 hash_op(i64 n, i64 r) { return n * r + c2(r); }

GP qint(i64 n);
GP qfact(i64 n);
GP qbinom(i64 n, i64 r);
GP qtrinom(i64 n, i64 r, i64 s);
GP qmultinom(const std::vector<int>& alpha);
GP bpoly(i64 m, i64 n, i64 r);
GP cpoly(i64 m, i64 n, i64 r);

}  // namespace oddsym
