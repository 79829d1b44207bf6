#pragma once

#include <string>

#include "linf/deform.hpp"

namespace linf {

inline constexpr const char* kEngineVersion = "1.0.0";
inline constexpr const char* kStructuredSchema = "linf-result/1";

enum class Format { plain, latex, structured };

Format format_from_string(const std::string& name);

/// Display names follow the usual notation for the small model spaces:
/// phi_k on the even line, phi^i_j / psi_i on the odd plane,
/// phi^k_e, phi^k_f, psi^k_e, psi^k_f on the 1|1 space and
/// phi_{(i1,i2),i} on the even plane; anything else gets the generic
/// c[input -> output] form.
std::string key_name(const GradedSpace& space, const CochainKey& key,
                     Format fmt);
std::string monomial_name(const GradedSpace& space, const Monomial& m,
                          Format fmt);
std::string param_name(const std::string& generator, Format fmt);
std::string poly_string(const ParamPoly& p, Format fmt);
std::string rat_string(const Rat& r, Format fmt);

/// Extra display names for composite cochains (the h^k representatives).
struct Alias {
    Cochain rep;
    std::string plain;
    std::string latex;
};

std::vector<Alias> deformation_aliases(const Deformation& defm);

std::string cochain_string(const Cochain& c, Format fmt,
                           const std::vector<Alias>& aliases = {});
std::string param_cochain_string(const ParamCochain& pc, Format fmt,
                                 const std::vector<Alias>& aliases = {});

/// Multi-line report: the deformation, its relations, status and (when
/// the delta basis touches the window boundary) a truncation note.
std::string deformation_string(const Deformation& defm, Format fmt);

/// Structured (JSON) serialization; carries the engine version, window
/// and truncation degree.
std::string deformation_structured(const Deformation& defm);
std::string param_cochain_structured(const ParamCochain& pc,
                                     const ArityWindow& window,
                                     int truncation_degree);

/// Round-trip parsers for the structured format.
Deformation deformation_from_structured(const std::string& text);
ParamCochain param_cochain_from_structured(const std::string& text);

}  // namespace linf
