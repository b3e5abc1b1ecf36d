#pragma once

#include <map>
#include <string>

#include <splitlimit/specsystem.hpp>

namespace splitlimit {

// The three graph families handled throughout: unconstrained
// distance-hereditary, 2-connected distance-hereditary, 3-leaf power.
enum class Family { dh, dh2c, leaf3 };

const char* family_name(Family f);
Family family_from_string(const std::string& s);

// Defining combinatorial system of each family, in the rooted typed-tree
// grammar.  Unknown names: dh and dh2c use D_K, D_SC, D_SX; leaf3 uses
// L, E_SX, E_SC, E_K.
SpecSystem family_system(Family f);

// Solved base series of a family plus the standard derived series:
//   "D"    total tree series (D, Dbar or E)
//   "F"    the auxiliary exp-series (F, F_2c) -- for leaf3 this slot holds P
//   "H"    the jump series (H, Hbar, P)
//   "Mdot" the type-summed numerator series used by the k=1 analysis
struct FamilySeries {
  Family family = Family::dh;
  int order = 0;
  std::map<std::string, TruncatedSeries> named;

  const TruncatedSeries& at(const std::string& key) const;
  bool has(const std::string& key) const { return named.count(key) != 0; }
  const TruncatedSeries& total() const { return at("D"); }
};

FamilySeries solve_family(Family f, int order);

}  // namespace splitlimit
