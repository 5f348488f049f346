#pragma once
// Quasi-determinants over complex scalars and square complex blocks.

#include "ptds/linalg.hpp"

namespace ptds {

// |M| expanded about the b x b block whose top-left entry is (r0, c0):
//   m_RC - M_{R,~C} (M_{~R,~C})^{-1} M_{~R,C}.
// Throws SingularPointError when the complementary minor has rcond < 1e-12.
CMat quasidet(const CMat& m, Eigen::Index r0, Eigen::Index c0, Eigen::Index b = 1);

// Blocks of [[E F G], [H A B], [J C D]] with A, B, C, D all b x b.
struct SylvesterBlocks {
  CMat E, F, G, H, A, B, J, C, D;
};

CMat assemble(const SylvesterBlocks& s);

// Relative defect of
//   |E F G; H A B; J C [D]| = |E G; J [D]| - |E F; J [C]| |E F; H [A]|^{-1} |E G; H [B]|.
struct SylvesterSides {
  CMat lhs, rhs;
  double defect() const;  // |lhs - rhs| / |lhs|, Frobenius
};
SylvesterSides sylvester_sides(const SylvesterBlocks& s);
double sylvester_defect(const SylvesterBlocks& s);
bool sylvester_check(const SylvesterBlocks& s, double tol = 1e-9);

// The same comparison with the block labels exactly as they appear in print
// (|E F; J [D]| and |E F; J [A]|); kept to document that it does not hold.
double sylvester_defect_as_printed(const SylvesterBlocks& s);

}  // namespace ptds
