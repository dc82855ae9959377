#pragma once

#include "looprep/lattices.hpp"

#include <optional>

namespace looprep {

// A skew T-valued biadditive form on Lambda_Z compatible with level ell,
// tabulated on a section of Z. Entries are exact rationals q in [0,1)
// standing for exp(2 pi i q). Off the section the form extends by
//   omega(s(z)+a, s(z')+b) = omega(s(z),s(z')) (-1)^{ell(<a,s(z')>+<s(z),b>+<a,b>)}
// for a, b in the coroot lattice.
struct CommutatorMap {
    CentralSubgroup subgroup;
    long long level = 0;
    Mat section; // row per subgroup element: a coweight lift in Lambda_Z
    Mat table;   // q(i,j) = omega(section_i, section_j)
};

// Builds the zero candidate table over the minimal-dominant section.
CommutatorMap make_form(const RootSystem& rs, const CentralSubgroup& z, long long level);

// True iff the tabulated form extends to a well-defined biadditive skew
// form on Lambda_Z obeying omega(a, mu) = (-1)^{ell<a,mu>} on the coroot
// lattice. Throws std::invalid_argument for structurally broken input
// (wrong shapes, non-skew table, section not lifting the subgroup).
bool is_admissible(const RootSystem& rs, const CommutatorMap& omega);

// Precomputed admissibility test against the minimal-dominant section,
// for callers that screen many tables of the same shape.
class FormChecker {
  public:
    FormChecker(const RootSystem& rs, const CentralSubgroup& z, long long level);
    // assumes a skew table with zero diagonal and zero identity row
    bool table_admissible(const Mat& table) const;

  private:
    std::vector<std::vector<std::size_t>> product_;
    std::vector<Mat> twist_; // twist_[i][j][k] in {0, 1/2}
};

// Value q of omega on an arbitrary pair of Lambda_Z vectors.
Rat evaluate(const RootSystem& rs, const CommutatorMap& omega, const Vec& mu, const Vec& nu);

// All admissible forms at this level, sorted by table. Empty exactly when
// the level is incompatible; one form for cyclic Z, two for the Klein case.
std::vector<CommutatorMap> enumerate_admissible(const RootSystem& rs, const CentralSubgroup& z,
                                                long long level);

// (-1)^{ell<x,y> + ell^2 <x,x><y,y>} on section pairs; requires the basic
// level of G/Z to divide ell.
CommutatorMap canonical_form(const RootSystem& rs, const CentralSubgroup& z, long long level);

struct CenterForm {
    bool nontrivial = false;
    Mat table; // the induced alternating form on Z
};

// Defined exactly when omega is invariant under coroot shifts, i.e. all
// base values (-1)^{ell<a,mu>} are +1; then omega descends to Z.
std::optional<CenterForm> pulled_back_center_form(const RootSystem& rs,
                                                  const CommutatorMap& omega);

} // namespace looprep
