#ifndef FFC_ERRORS_HPP
#define FFC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ffc {

enum class errc {
    division_by_zero,
    field_mismatch,
    zero_polynomial,
    enumeration_too_large,
    zero_argument,
    bad_residue_degree,
    pole_at_place,
    not_geometric,
    wild_kummer,
    not_reduced,
    not_disjoint,
    unsupported_genus,
    singular_model_point,
    element_not_in_group,
    formula_mismatch,
    gamma_not_in_coset,
    non_integral_fiber_term,
    theorem_violation,
    bound_violation,
    bad_descriptor,
    internal,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::division_by_zero: return "DivisionByZero";
        case errc::field_mismatch: return "FieldMismatch";
        case errc::zero_polynomial: return "ZeroPolynomial";
        case errc::enumeration_too_large: return "EnumerationTooLarge";
        case errc::zero_argument: return "ZeroArgument";
        case errc::bad_residue_degree: return "BadResidueDegree";
        case errc::pole_at_place: return "PoleAtPlace";
        case errc::not_geometric: return "NotGeometric";
        case errc::wild_kummer: return "WildKummer";
        case errc::not_reduced: return "NotReduced";
        case errc::not_disjoint: return "NotDisjoint";
        case errc::unsupported_genus: return "UnsupportedGenus";
        case errc::singular_model_point: return "SingularModelPoint";
        case errc::element_not_in_group: return "ElementNotInGroup";
        case errc::formula_mismatch: return "FormulaMismatch";
        case errc::gamma_not_in_coset: return "GammaNotInCoset";
        case errc::non_integral_fiber_term: return "NonIntegralFiberTerm";
        case errc::theorem_violation: return "TheoremViolation";
        case errc::bound_violation: return "BoundViolation";
        case errc::bad_descriptor: return "BadDescriptor";
        case errc::internal: return "Internal";
    }
    return "Unknown";
}

/// Library-wide exception. `code()` is stable and machine-readable; the
/// message is for humans.
class error : public std::runtime_error {
  public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    errc code() const noexcept { return code_; }

  private:
    errc code_;
};

} // namespace ffc

#endif
