#pragma once

#include <string>
#include <vector>

#include "sdlab/companion.hpp"
#include "sdlab/complex_matrix.hpp"
#include "sdlab/kms.hpp"
#include "sdlab/numrange.hpp"

namespace sdlab::io {

/// Matrix file schema: {"rows": R, "cols": C, "data": [[re, im], ...]},
/// data row-major with exactly R*C finite entries.
ComplexMatrix parse_matrix(const std::string& json_text);
std::string write_matrix(const ComplexMatrix& m);

ComplexMatrix load_matrix(const std::string& path);
void save_matrix(const std::string& path, const ComplexMatrix& m);

/// {"m": M, "n": N, "diag_blocks": [matrix...], "bottom_blocks": [matrix...]}
companion::GeneralizedCompanionSpec parse_companion_spec(const std::string& json_text);
std::string write_companion_spec(const companion::GeneralizedCompanionSpec& spec);
companion::GeneralizedCompanionSpec load_companion_spec(const std::string& path);

/// {"m": M, "A": matrix}
kms::KmsSpec parse_kms_spec(const std::string& json_text);
std::string write_kms_spec(const kms::KmsSpec& spec);
kms::KmsSpec load_kms_spec(const std::string& path);

/// True when the document looks like a KMS spec rather than a bare matrix.
bool looks_like_kms_spec(const std::string& json_text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

/// CSV rows "theta,support,re,im", one per boundary sample.
std::string boundary_csv(const std::vector<numrange::BoundarySample>& samples);

/// Minimal SVG: one polyline through the boundary points, viewBox fitted to
/// the data with a 5% margin, no styling dependencies.
std::string boundary_svg(const std::vector<numrange::BoundarySample>& samples);

} // namespace sdlab::io
