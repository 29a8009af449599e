#pragma once

#include <stdexcept>
#include <string>

namespace curvewind {

enum class Errc {
  mixed_kernels,
  parallel,
  cusp_turn,
  not_a_cycle,
  non_generic,
  mixed_groups,
  identity_holonomy,
  orientable_group,
  parabolic_holonomy,
  not_parabolic,
  malformed_curve,
  too_crowded,
  no_nearby_strand,
  margin_exceeded,
  null_homotopic,
  not_null_homotopic,
  orientation_reversing_holonomy,
  wrong_case,
  not_reversible,
  reversible_class,
  not_conjugate,
  needs_reference,
  non_orientable,
  non_trivial_differential,
  internal,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::mixed_kernels: return "MixedKernels";
    case Errc::parallel: return "Parallel";
    case Errc::cusp_turn: return "CuspTurn";
    case Errc::not_a_cycle: return "NotACycle";
    case Errc::non_generic: return "NonGeneric";
    case Errc::mixed_groups: return "MixedGroups";
    case Errc::identity_holonomy: return "IdentityHolonomy";
    case Errc::orientable_group: return "OrientableGroup";
    case Errc::parabolic_holonomy: return "ParabolicHolonomy";
    case Errc::not_parabolic: return "NotParabolic";
    case Errc::malformed_curve: return "MalformedCurve";
    case Errc::too_crowded: return "TooCrowded";
    case Errc::no_nearby_strand: return "NoNearbyStrand";
    case Errc::margin_exceeded: return "MarginExceeded";
    case Errc::null_homotopic: return "NullHomotopic";
    case Errc::not_null_homotopic: return "NotNullHomotopic";
    case Errc::orientation_reversing_holonomy: return "OrientationReversingHolonomy";
    case Errc::wrong_case: return "WrongCase";
    case Errc::not_reversible: return "NotReversible";
    case Errc::reversible_class: return "ReversibleClass";
    case Errc::not_conjugate: return "NotConjugate";
    case Errc::needs_reference: return "NeedsReference";
    case Errc::non_orientable: return "NonOrientable";
    case Errc::non_trivial_differential: return "NonTrivialDifferential";
    case Errc::internal: return "Internal";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace curvewind
