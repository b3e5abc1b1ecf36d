#include <splitlimit/families.hpp>

#include <stdexcept>

namespace splitlimit {

const char* family_name(Family f) {
  switch (f) {
    case Family::dh: return "dh";
    case Family::dh2c: return "dh2c";
    case Family::leaf3: return "leaf3";
  }
  return "?";
}

Family family_from_string(const std::string& s) {
  if (s == "dh") return Family::dh;
  if (s == "dh2c" || s == "2c") return Family::dh2c;
  if (s == "leaf3" || s == "3l" || s == "3leaf") return Family::leaf3;
  throw std::invalid_argument("unknown family '" + s + "'");
}

SpecSystem family_system(Family f) {
  using E = SpecExpr;
  SpecSystem sys;
  auto z = E::z();
  switch (f) {
    case Family::dh:
    case Family::dh2c: {
      auto dK = E::ref("D_K"), dC = E::ref("D_SC"), dX = E::ref("D_SX");
      auto argCX = E::add({z, dC, dX});  // items under a K node
      auto argKX = E::add({z, dK, dX});  // items under star extremities
      ExprPtr center;                    // what may hang at an S_X center
      if (f == Family::dh)
        center = E::add({z, dK, dC});
      else
        center = E::add({dK, dC});  // a leaf at a star center would be a cut vertex
      sys.equations.emplace_back("D_K", E::exp_ge(argCX, 2));
      sys.equations.emplace_back("D_SC", E::exp_ge(argKX, 2));
      sys.equations.emplace_back("D_SX", center * E::exp_ge(argKX, 1));
      break;
    }
    case Family::leaf3: {
      auto l = E::ref("L"), eX = E::ref("E_SX"), eC = E::ref("E_SC");
      auto items = E::add({l, eX});
      sys.equations.emplace_back("L", z + E::exp_ge(z, 2));
      sys.equations.emplace_back("E_SX", l * E::exp_ge(items, 1));
      sys.equations.emplace_back("E_SC", E::exp_ge(items, 2));
      sys.equations.emplace_back("E_K", l + (eX + eC) * E::exp_ge(z, 1));
      break;
    }
  }
  return sys;
}

const TruncatedSeries& FamilySeries::at(const std::string& key) const {
  auto it = named.find(key);
  if (it == named.end())
    throw std::out_of_range(std::string("no series '") + key + "' for family " +
                            family_name(family));
  return it->second;
}

FamilySeries solve_family(Family f, int order) {
  FamilySeries out;
  out.family = f;
  out.order = order;
  out.named = solve_fixpoint(family_system(f), order);

  const auto z = TruncatedSeries::z(order);
  const auto one = TruncatedSeries::constant(1, order);

  if (f == Family::dh || f == Family::dh2c) {
    const auto& dK = out.named.at("D_K");
    const auto& dC = out.named.at("D_SC");
    const auto& dX = out.named.at("D_SX");
    TruncatedSeries F = exp_ge(z + dK + dX, 1);
    TruncatedSeries denom = (one + F) * (one - Rat(2) * F);
    if (f == Family::dh) {
      out.named.emplace("D", dK + dC + dX);
      out.named.emplace("H", F / denom);
      out.named.emplace("Mdot", (one + F) / (one - Rat(2) * F));
    } else {
      // the root of a 2-connected tree is never of type S_C
      out.named.emplace("D", dK + dX);
      out.named.emplace("H", (F - z) / denom);
      out.named.emplace("Mdot", inverse(denom));
    }
    out.named.emplace("F", std::move(F));
  } else {
    const auto& L = out.named.at("L");
    const auto& eX = out.named.at("E_SX");
    TruncatedSeries expLE = exp_ge(L + eX, 0);
    TruncatedSeries P = L * expLE;
    TruncatedSeries ez = exp_ge(z, 0);
    out.named.emplace("D", out.named.at("E_SX") + out.named.at("E_SC") + out.named.at("E_K"));
    out.named.emplace("H", P);
    out.named.emplace("Mdot", (ez * expLE) * (ez * expLE));
    out.named.emplace("P", P);
    out.named.emplace("F", std::move(P));
  }
  return out;
}

}  // namespace splitlimit
