#include "common.hpp"

namespace tmat {

void register_builtin_families(FamilyRegistry& registry) {
  using namespace families;
  for (auto make : {make_hilbert, make_inversehilbert, make_cauchy, make_minij, make_clement, make_lehmer,
                    make_pei, make_pascal, make_kms, make_moler, make_forsythe, make_jordbloc, make_frank,
                    make_lotkin, make_grcar, make_wilkinson, make_poisson, make_companion, make_triw}) {
    registry.add(make());
  }
}

const std::vector<std::string>& builtin_family_ids() {
  static const std::vector<std::string> ids = {
      "hilbert", "inversehilbert", "cauchy", "minij", "clement",   "lehmer",  "pei",
      "pascal",  "kms",            "moler",  "forsythe", "jordbloc", "frank", "lotkin",
      "grcar",   "wilkinson",      "poisson", "companion", "triw"};
  return ids;
}

}  // namespace tmat
