#pragma once

#include <string>
#include <vector>

#include "pstab/classify.hpp"

namespace pstab {

// The worked examples wired into the `corpus` command and the acceptance
// suite: the three SL_2-on-gl_2 cases, the Gaussian quaternion pair in GL_2,
// and the exp/limit equivalence spot checks for nilpotent arguments.

GroupPoint example_sl2_diag();    // diag(1,2), adjoint kind under SL_2
GroupPoint example_sl2_scalar();  // diag(1,1)
GroupPoint example_sl2_shear();   // [[1,1],[0,1]]
GroupPoint example_quaternion_pair();  // (diag(i,-i), [[0,1],[-1,0]]) in GL_2 over Q(i)

struct CaseResult {
  std::string name;
  bool pass = true;
  std::vector<std::string> details;
  void check(bool ok, const std::string& what);
};

std::vector<CaseResult> run_corpus(unsigned long long seed = 0);

}  // namespace pstab
