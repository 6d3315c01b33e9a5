#include "oddsym/scalar.hpp"

#include <stdexcept>
#include <sstream>

namespace oddsym {

GP::GP(i64 c) {
  if (c) t_[{0, 0}] = c;
}

GP GP::mono(i64 c, int d, int p) {
  GP r;
  r.add(d, p, c);
  return r;
}

void GP::add(int d, int p, i64 c) {
  if (!c) return;
  p = ((p % 2) + 2) % 2;
  auto k = std::make_pair(d, p);
  auto it = t_.find(k);
  if (it == t_.end()) {
    t_.emplace(k, c);
  } else if ((it->second += c) == 0) {
    t_.erase(it);
  }
}

i64 GP::coeff(int d, int p) const {
  auto it = t_.find({d, p});
  return it == t_.end() ? 0 : it->second;
}

GP& GP::operator+=(const GP& o) {
  for (auto& [k, c] : o.t_) add(k.first, k.second, c);
  return *this;
}

GP& GP::operator-=(const GP& o) {
  for (auto& [k, c] : o.t_) add(k.first, k.second, -c);
  return *this;
}

GP& GP::operator*=(const GP& o) {
  GP r;
  for (auto& [a, x] : t_)
    for (auto& [b, y] : o.t_) r.add(a.first + b.first, a.second + b.second, x * y);
  t_ = std::move(r.t_);
  return *this;
}

GP GP::operator-() const {
  GP r = *this;
  for (auto& [k, c] : r.t_) c = -c;
  return r;
}

GP GP::bar() const {
  GP r;
  for (auto& [k, c] : t_) r.add(-k.first, k.second, c);
  return r;
}

GP GP::pow(int e) const {
  if (e < 0) throw std::invalid_argument("GP::pow: negative exponent");
  GP r(1), b = *this;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

Laurent GP::at(int sign) const {
  Laurent r;
  for (auto& [k, c] : t_) {
    i64 v = (sign < 0 && k.second) ? -c : c;
    if ((r[k.first] += v) == 0) r.erase(k.first);
  }
  return r;
}

bool GP::nonneg() const {
  for (auto& [k, c] : t_)
    if (c < 0) return false;
  return true;
}

GP GP::from_pm(const Laurent& plus, const Laurent& minus) {
  GP r;
  auto get = [](const Laurent& l, int d) {
    auto it = l.find(d);
    return it == l.end() ? i64(0) : it->second;
  };
  std::map<int, int> ds;
  for (auto& [d, c] : plus) ds[d];
  for (auto& [d, c] : minus) ds[d];
  for (auto& [d, _] : ds) {
    i64 a = get(plus, d), b = get(minus, d);
    if ((a + b) % 2) throw std::logic_error("GP::from_pm: parity mismatch");
    r.add(d, 0, (a + b) / 2);
    r.add(d, 1, (a - b) / 2);
  }
  return r;
}

std::string GP::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [k, c] : t_) {
    i64 a = c;
    if (!first) {
      os << (a < 0 ? " - " : " + ");
      a = a < 0 ? -a : a;
    } else if (a < 0) {
      os << "-";
      a = -a;
    }
    first = false;
    bool bare = true;
    if (a != 1 || (k.first == 0 && k.second == 0)) {
      os << a;
      bare = false;
    }
    if (k.second) {
      os << (bare ? "" : "*") << "pi";
      bare = false;
    }
    if (k.first) {
      os << (bare ? "" : "*") << "q";
      if (k.first != 1) os << "^" << k.first;
    }
  }
  return os.str();
}

nlohmann::json GP::to_json() const {
  auto j = nlohmann::json::array();
  for (auto& [k, c] : t_) j.push_back({{"d", k.first}, {"p", k.second}, {"c", c}});
  return j;
}

GP GP::from_json(const nlohmann::json& j) {
  GP r;
  for (auto& e : j) r.add(e.at("d").get<int>(), e.at("p").get<int>(), e.at("c").get<i64>());
  return r;
}

Laurent lmul(const Laurent& a, const Laurent& b) {
  Laurent r;
  for (auto& [d, x] : a)
    for (auto& [e, y] : b) r[d + e] += x * y;
  std::erase_if(r, [](auto& kv) { return kv.second == 0; });
  return r;
}

Laurent ldiv(const Laurent& a, const Laurent& b) {
  if (b.empty()) throw std::domain_error("ldiv: division by zero");
  Laurent rem = a, quo;
  auto [bd, bc] = *b.rbegin();
  while (!rem.empty()) {
    auto [rd, rc] = *rem.rbegin();
    if (rc % bc) throw std::logic_error("ldiv: inexact");
    i64 c = rc / bc;
    int d = rd - bd;
    if (d < a.begin()->first - b.begin()->first) throw std::logic_error("ldiv: inexact");
    quo[d] = c;
    for (auto& [e, y] : b) {
      if ((rem[d + e] -= c * y) == 0) rem.erase(d + e);
    }
  }
  return quo;
}

GP qint(i64 n) {
  GP r;
  if (n >= 0) {
    for (i64 i = 0; i < n; ++i) r.add(static_cast<int>(1 - n + 2 * i), static_cast<int>(i), 1);
  } else {
    r = -(pi_pow(-n) * qint(-n));
  }
  return r;
}

GP qfact(i64 n) {
  GP r(1);
  for (i64 i = 1; i <= n; ++i) r *= qint(i);
  return r;
}

namespace {
GP exact_quot(const GP& num, const GP& den) {
  return GP::from_pm(ldiv(num.at(1), den.at(1)), ldiv(num.at(-1), den.at(-1)));
}
}  // namespace

GP qbinom(i64 n, i64 r) {
  if (r < 0) return GP();
  if (r == 0) return GP(1);
  GP num(1);
  for (i64 i = 0; i < r; ++i) num *= qint(n - i);
  if (num.zero()) return GP();
  return exact_quot(num, qfact(r));
}

GP qtrinom(i64 n, i64 r, i64 s) {
  if (r < 0 || s < 0) return GP();
  return qbinom(n, r) * qbinom(n - r, s);
}

GP qmultinom(const std::vector<int>& alpha) {
  i64 n = 0;
  GP r(1);
  for (int a : alpha) {
    n += a;
    r *= qbinom(n, a);
  }
  return r;
}

GP bpoly(i64 m, i64 n, i64 r) {
  GP sum;
  for (i64 s = 0; s <= r - 1; ++s) {
    GP t = pq2(n - r + m * (r - s - 1)) *
           GP::q(static_cast<int>((m - n + r - 1) * (n - r + s + 1) + (n - r) * s)) *
           qbinom(m + s, n - r + s + 1) * qbinom(n - r + s, s);
    sum += t;
  }
  i64 e = hash_op(n - r, r);
  return GP::mono(1, static_cast<int>(-2 * e), static_cast<int>(((e % 2) + 2) % 2)) * sum;
}

GP cpoly(i64 m, i64 n, i64 r) {
  i64 e = hash_op(n - r, r);
  return GP::mono(1, static_cast<int>(-2 * e + (m - n + r) * n + (n - r) * r),
                  static_cast<int>(((e % 2) + 2) % 2)) *
         qbinom(m + r, n) * qbinom(n, r);
}

}  // namespace oddsym
