#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace oddsym {

using Partition = std::vector<int>;
using Composition = std::vector<int>;
// one-line notation, 0-based: w[i] = w(i+1)-1
using Perm = std::vector<int>;

struct PartStats {
  long N = 0, NE = 0, NEbar = 0, dN = 0, dE = 0;
};

bool is_partition(const Partition& l);
Partition trim(Partition l);
int psize(const Partition& l);
Partition transpose(const Partition& l);
PartStats stats(const Partition& l);
bool dominates(const Partition& l, const Partition& m);  // l >= m
std::vector<Partition> partitions_of(int n);                // lex decreasing
std::vector<Partition> enum_grpar(int m, int n);            // ht <= m, l1 <= n
std::vector<Partition> partitions_upto(int n);              // all of size <= n
std::string pstr(const Partition& l);
long ncomp(const Composition& a);

struct Tableau {
  Partition shape;
  std::vector<std::vector<int>> rows;
};
bool semistandard(const Tableau& t);
int tableau_sign(const Tableau& t);
std::vector<Tableau> ssyt(const Partition& shape, const Composition& content);
std::optional<int> pieri_sign(const Partition& l, const Partition& m, int r);

// permutations
Perm perm_id(int n);
Perm perm_mul(const Perm& a, const Perm& b);  // a after b
Perm perm_inv(const Perm& w);
Perm perm_s(int n, int i);  // s_i, 1-based i
int perm_len(const Perm& w);
std::vector<int> reduced_word(const Perm& w);  // lex-smallest, 1-based letters
Perm from_word(int n, const std::vector<int>& word);
Perm longest(int n);
std::vector<Perm> all_perms(int n);
std::vector<Perm> min_coset_reps(const Composition& alpha);  // [S_n / S_alpha]_min

nlohmann::json part_json(const Partition& l);

}  // namespace oddsym
