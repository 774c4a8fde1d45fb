#pragma once

#include <map>
#include <string>
#include <vector>

#include "bstab/catalog.hpp"

namespace bstab {

/// Jordan-Holder multiplicities by simple-class name; zero entries are omitted.
using MultiplicityVector = std::map<std::string, long>;

enum class DecomposeReason {
  Ok,
  ZeroTarget,         ///< the zero class; the empty decomposition is returned
  NonpositiveTop,     ///< nonzero target whose twisted top degree is <= 0: no solutions
};

struct DecomposeResult {
  std::vector<MultiplicityVector> solutions;  ///< sorted lexicographically in catalog order
  DecomposeReason reason = DecomposeReason::Ok;
  Rational budget;                            ///< twisted top degree of the target
  std::vector<long> bounds;                   ///< per-simple enumeration bound actually used
};

const char* to_string(DecomposeReason r);

/// All nonnegative-integer combinations of the catalog's (shifted) simple
/// classes equal to `target`. For 3-folds b must lie in solve_b_range(model)
/// (Error(Precondition) otherwise); surfaces require b = 0. Every simple then
/// has a strictly positive twisted top degree, which bounds each multiplicity
/// by ceil(top(target) / min_s q_s(b)) times `bound_scale`.
DecomposeResult decompose(const ContractionModel& model, const ChernVector& target, const Rational& b,
                          long bound_scale = 1);

/// Equality of Jordan-Holder multisets.
bool s_equivalent(const MultiplicityVector& m1, const MultiplicityVector& m2);

/// Sum of multiplicity * shifted class over the model's catalog.
ChernVector class_of(const ContractionModel& model, const MultiplicityVector& m);

}  // namespace bstab
