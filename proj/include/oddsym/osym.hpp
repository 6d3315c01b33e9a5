#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "oddsym/combinatorics.hpp"
#include "oddsym/scalar.hpp"

namespace oddsym {

// Element of OSym.  Stored in the h-basis unless a function says otherwise.
using Sym = std::map<Partition, i64>;
using SymTensor = std::map<std::pair<Partition, Partition>, i64>;

void sym_add(Sym& a, const Partition& l, i64 c);
void sym_axpy(Sym& a, i64 c, const Sym& b);
Sym sym_scale(i64 c, const Sym& a);
Sym sym_one();
Sym sym_h(int r);
int sym_parity(const Partition& l);

// h-basis arithmetic
Sym straighten(const std::vector<int>& word, i64 coeff = 1);
Sym mul(const Sym& a, const Sym& b);
Sym e_elem(int r);
Sym e_mono(const Partition& l);  // e_l in the h-basis

// e-coordinates
Sym to_e(const Sym& x);
Sym from_e(const Sym& xe);

enum class Side { minus, plus };
SymTensor coproduct(const Sym& x, Side side);
SymTensor tensor_mul(const SymTensor& a, const SymTensor& b);
i64 pair(const Sym& x, const Sym& y, Side side);

Sym psi(const Sym& x);
Sym gamma(const Sym& x);
Sym star(const Sym& x);

i64 kostka(const Partition& l, const Partition& m);
Sym schur(const Partition& l);                 // s_l in the h-basis
Sym to_schur(const Sym& x);                    // h-basis -> s-basis
Sym from_schur(const Sym& xs);                 // s-basis -> h-basis
Sym lr(const Partition& l, const Partition& m);  // s_l s_m in the s-basis
Sym sigma_fn(const Partition& l);              // gamma(s_l) in the h-basis

// image in OSym_n carried in the e-basis with parts <= n
Sym truncate(const Sym& x, int n);

std::string sym_str(const Sym& x, char basis = 'h');
nlohmann::json sym_json(const Sym& x, char basis);
Sym sym_from_json(const nlohmann::json& j);

}  // namespace oddsym
