#pragma once

// Text formats. All indices are 1-based in files; '#' starts a comment.
//
// Algebra:
//   dim = 4
//   arity = 3
//   twist:                      optional, identity when absent
//   1 0 0 0                     d rows of d rationals
//   ...
//   [2,3,4] -> 1,0,0,0          bracket of basis vectors, any index order
//
// Leibniz algebra: a first line `leibniz`, then `dim`, an optional twist and
// entries `[a,b] -> c_1,...,c_D` for ordered pairs.
//
// Cochain: a first line `cochain`, then `dim`, `arity`, `degree`,
// `symmetry` (last-block-skew | block-skew | tensor) and `values` (1 or d),
// then entries `[i_1,...,i_k] -> c_1,...,c_v` listing all p(n-1)+1 arguments
// in any order compatible with the symmetry.
//
// Representation: a first line `representation`, then `dim`, `arity`,
// `module` (the dimension d' of V), an optional `nu:` block of d' rows
// (identity when absent) and entries `[i_1,...,i_{n-1}] -> m_1,...,m_{d'^2}`
// giving rho(e_{i_1},...,e_{i_{n-1}}) flattened column by column.
//
// Rationals are [+-]?digits(/digits)? with a positive denominator. Entries
// listed twice must agree; writers emit canonical tuples in increasing order
// and skip zero entries, so write(read(write(x))) == write(x).

#include "nambu/algebra.hpp"
#include "nambu/cochain.hpp"
#include "nambu/derivations.hpp"
#include "nambu/fundamental.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace nambu {

HomNambuAlgebra parse_algebra(std::string_view text);
std::string format_algebra(const HomNambuAlgebra& alg);

HomLeibnizAlgebra parse_leibniz(std::string_view text);
std::string format_leibniz(const HomLeibnizAlgebra& leib);

Cochain parse_cochain(std::string_view text);
std::string format_cochain(const Cochain& c);
/// Several cochain documents back to back, each starting with `cochain`.
std::vector<Cochain> parse_cochains(std::string_view text);
std::string format_cochains(const std::vector<Cochain>& cs);

RepresentationMap parse_representation(std::string_view text);
std::string format_representation(const RepresentationMap& rep);
/// Rows of space-separated rationals.
std::string format_matrix(const Matrix& m);
/// Inverse of format_matrix; rows must have equal length.
Matrix parse_matrix(std::string_view text);
/// Comma-separated rationals, e.g. "1,-1/2,0".
Vector parse_vector(std::string_view text);

Symmetry parse_symmetry(std::string_view name);

/// Reads a whole file; throws std::runtime_error when it cannot be opened.
std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, std::string_view text);

}  // namespace nambu
