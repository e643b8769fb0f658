#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "flagslice/combinatorics.hpp"

namespace fixtures {

// Published word lists used as regression targets.

// SL(4,H), complete flags, 24 words.
inline const std::vector<std::string> quaternionic_n8 = {
    "13578642", "13756842", "15378462", "15734862", "17356482", "17534682",
    "31578624", "31756824", "35178264", "35712864", "37156284", "37512684",
    "51378426", "51734826", "53178246", "53712846", "57134286", "57312486",
    "71356428", "71534628", "73156248", "73512648", "75134268", "75312468",
};

// SL(8,R), d = (2,1,2,1,2); 36 listed rows. One row is printed as
// (35)(8)(21)(7)(24), which repeats 2 and omits 1 and 6; it is taken as (16).
inline const std::vector<std::string> real_21212_listed = {
    "(24)(6)(78)(5)(13)", "(24)(7)(58)(6)(13)", "(24)(8)(56)(7)(13)", "(25)(6)(78)(3)(14)",
    "(25)(7)(38)(6)(14)", "(25)(8)(36)(7)(14)", "(26)(4)(78)(3)(15)", "(26)(7)(38)(4)(15)",
    "(26)(8)(34)(7)(15)", "(27)(4)(58)(3)(16)", "(27)(5)(38)(4)(16)", "(27)(8)(34)(5)(16)",
    "(28)(4)(56)(3)(17)", "(28)(5)(36)(4)(17)", "(28)(6)(34)(5)(17)", "(35)(6)(78)(1)(24)",
    "(35)(7)(18)(6)(24)", "(35)(8)(16)(7)(24)", "(36)(4)(78)(1)(25)", "(36)(7)(18)(4)(25)",
    "(36)(8)(14)(7)(25)", "(37)(4)(58)(1)(26)", "(37)(5)(18)(4)(26)", "(37)(8)(14)(5)(26)",
    "(38)(4)(56)(1)(27)", "(38)(5)(16)(4)(27)", "(38)(6)(14)(5)(27)", "(57)(2)(38)(1)(46)",
    "(57)(3)(18)(2)(46)", "(57)(8)(12)(3)(46)", "(58)(2)(36)(1)(47)", "(58)(3)(16)(2)(47)",
    "(58)(6)(12)(3)(47)", "(68)(2)(34)(1)(57)", "(68)(3)(14)(2)(57)", "(68)(4)(12)(3)(57)",
};

// SL(8,R), d = (3,3,2); listed varieties.
inline const std::vector<std::string> real_332_listed = {"(257)(138)(46)", "(258)(136)(47)", "(268)(134)(57)"};

// SU(3,2) and SU(4,2) strictly pairing words; nested parentheses are display only.
inline const std::vector<std::string> su32_listed = {"(51)(42)3", "(51)3(42)", "3(51)(42)", "(42)(51)3",
                                                     "(42)3(51)", "3(42)(51)", "(4(51)2)3", "3(4(51)2)"};
inline const std::vector<std::string> su42_listed = {
    "(61)(52)34", "(61)3(52)4", "3(61)(52)4", "(61)34(52)", "3(61)4(52)", "34(61)(52)", "(52)(61)34", "(52)3(61)4",
    "3(52)(61)4", "(52)34(61)", "3(52)4(61)", "34(52)(61)", "(5(61)2)34", "3(5(61)2)4", "34(5(61)2)"};

// Gr(5,11) orbit a=(3,1), b=(2,5) in SU(7,4).
inline const std::vector<std::string> gr511_listed = {"1 2 8 10 11 3 4 5 6 7 9", "1 3 8 9 11 2 4 5 6 7 10",
                                                      "2 3 8 9 10 1 4 5 6 7 11"};

inline const std::vector<std::string> perm_615234 = {"413256", "143256", "412356", "142356"};

inline std::string strip_parens(std::string s) {
  s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == '(' || c == ')'; }), s.end());
  return s;
}

inline std::set<flagslice::Permutation> parse_plain(const std::vector<std::string>& words) {
  std::set<flagslice::Permutation> out;
  for (const auto& w : words) out.insert(flagslice::parse_permutation(strip_parens(w)));
  return out;
}

// Grouped words, normalized to minimal coset representatives of d.
inline std::set<flagslice::Permutation> parse_grouped(const std::vector<std::string>& words,
                                                      const flagslice::DimensionSequence& d) {
  std::set<flagslice::Permutation> out;
  for (const auto& w : words) out.insert(flagslice::minimal_coset_representative(flagslice::parse_permutation(w), d));
  return out;
}

template <class Range>
std::set<flagslice::Permutation> as_set(const Range& r) {
  return {r.begin(), r.end()};
}

inline std::vector<flagslice::Permutation> all_permutations(int n) {
  std::vector<int> word(n);
  for (int i = 0; i < n; ++i) word[i] = i + 1;
  std::vector<flagslice::Permutation> out;
  do {
    out.emplace_back(word);
  } while (std::next_permutation(word.begin(), word.end()));
  return out;
}

}  // namespace fixtures
