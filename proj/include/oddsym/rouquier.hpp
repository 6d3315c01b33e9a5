#pragma once

#include <map>
#include <utility>
#include <vector>

#include <json.hpp>

#include "oddsym/combinatorics.hpp"
#include "oddsym/linalg.hpp"
#include "oddsym/scalar.hpp"

namespace oddsym {

// Vectors of the specialised rank-one chain
//   U_{n'-1} (x) ... (x) U_{n-d} (x) V_{n-d} (x) ... (x) V_{n-1} (x)_{OH_n} k
// in the product of the right bases u(x^q), v(x^r).
using ChainIndex = std::vector<int>;
using ChainVec = std::map<ChainIndex, Q>;

struct ChainShape {
  int ell = 0, k = 0, n = 0, d = 0;
  int nu() const { return k + d; }  // number of U factors
  int size() const { return k + 2 * d; }
  int factor_index(int i) const;  // j of U_j or V_j
  bool is_u(int i) const { return i < nu(); }
  int rank(int i) const;  // size of the right basis of factor i
  int degree(const ChainIndex& x) const;
  std::vector<ChainIndex> basis() const;
};

// u(sigma_lambda) (x) v(sigma_mu) pushed into the chain through the splitting maps
ChainVec chain_embed(const ChainShape& s, const Partition& lambda, const Partition& mu);
// id (x) ev (x) id on the middle U (x) V pair, from shape d to shape d - 1
ChainVec chain_ev(const ChainShape& s, const ChainIndex& x);

struct RouquierTerm {
  int d = 0;
  ChainShape shape;
  std::vector<std::pair<Partition, Partition>> labels;  // (lambda, mu)
  std::vector<int> degrees;
  QMat rows;  // chain coordinates of each basis vector
  std::vector<ChainIndex> chain_basis;
  bool independent = true;  // labels give linearly independent vectors
  bool spanning = true;     // labels just outside the boxes lie in the span
};

struct RouquierComplex {
  int ell = 0, k = 0, n = 0;
  int dmin = 0;
  std::vector<RouquierTerm> terms;  // d = dmin .. n
  // diff[i]: matrix of the differential from terms[i] to terms[i-1], one column per source vector
  std::vector<QMat> diff;
  std::vector<bool> closed;  // differential lands in the image of the next term
  const RouquierTerm& term(int d) const { return terms.at(d - dmin); }
};

RouquierComplex build_complex(int ell, int k);
GP term_dim(const RouquierTerm& t);
GP image_dim(const RouquierComplex& c, int d);     // graded dim of im of the differential out of C_d
GP homology_dim(const RouquierComplex& c, int d);  // graded superdimension of H_d
bool square_zero(const RouquierComplex& c);
nlohmann::json complex_json(const RouquierComplex& c);

// initial pairs and the map (lambda, mu) -> (lambda^-, mu^+)
bool initial_pair(int k, int n, int d, const Partition& lambda, const Partition& mu);
std::pair<Partition, Partition> terminal_of(int k, int n, int d, const Partition& lambda, const Partition& mu);
bool pair_less(const std::pair<Partition, Partition>& a, const std::pair<Partition, Partition>& b);

}  // namespace oddsym
