#pragma once

#include "tabhom/composition.hpp"
#include "tabhom/hecke.hpp"
#include "tabhom/lincomb.hpp"
#include "tabhom/permutation.hpp"
#include "tabhom/tableau.hpp"

#include <map>

namespace tabhom {

/// Largest n the brute-force oracle accepts: 8, or TABHOM_ORACLE_CAP.
int oracle_cap();
/// Throws OracleCapExceeded if n > oracle_cap().
void check_oracle_cap(int n);

/// x_mu phi_A computed in H_n in four ways.
/// sum of T_w over the double coset W_la 1_A W_mu
HeckeElem image_h1(const Tableau& a);
/// sum over distinct row arrangements A' of A of x_la T_{1_A'}
HeckeElem image_h2(const Tableau& a);
/// x_la T_{1_A} sum_{d in D_nu cap W_mu} T_d, nu the row reading of A
HeckeElem image_h3(const Tableau& a);
/// sum_{d in D_pi^{-1} cap W_la} T_d T_{1_A} x_mu, pi the column reading of A
HeckeElem image_h4(const Tableau& a);

/// Element of M^la in coordinates of the basis {x_la T_d : d in D_la}.
struct TabloidVector {
  Composition lambda;
  std::map<Permutation, LaurentPoly> coords;
  friend bool operator==(const TabloidVector&, const TabloidVector&) = default;
};

/// Reads off the coefficient of T_d for each d in D_la and checks
/// h = sum_d c_d x_la T_d.  Throws MembershipError if h is not in M^la.
TabloidVector tabloid_coords(const HeckeElem& h, const Composition& lambda);

/// The image of v under phi_C: sum_d c_d (x_ka phi_C) T_d, where ka is the
/// shape of C.
HeckeElem apply_hom(const TabloidVector& v, const Tableau& c);

/// Writes h in the basis {x_mu phi_A}; the coefficient of phi_A is that of
/// T_{1_A}.  Throws MembershipError if h is not such a combination.
LinComb hom_coordinates(const HeckeElem& h, const Composition& mu, const Composition& lambda);

/// h T_{w_mu} y_{mu'}
HeckeElem specht_image(const HeckeElem& h, const Partition& mu);

/// Whether sum_A c_A phi_A vanishes on S^mu: (sum_A c_A x_mu phi_A)
/// T_{w_mu} y_{mu'} = 0 in H_n.
bool specht_check(const LinComb& c);

}  // namespace tabhom
