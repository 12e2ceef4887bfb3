#include "tabhom/lincomb.hpp"

namespace tabhom {

RationalLinComb specialize(const LinComb& c, const Rational& q0) {
  RationalLinComb r(c.shape(), c.type());
  for (const auto& [t, coeff] : c) r.add(t, specialize(coeff, q0));
  return r;
}

}  // namespace tabhom
