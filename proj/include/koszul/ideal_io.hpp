#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "koszul/monomial.hpp"

namespace koszul {

/// Reads the line-oriented ideal format:
///
///     # comment
///     ring 3
///     gen 2 0 1
///     mon x1^2*x3
///
/// `ring` must be the first directive. Generators are minimalized. Throws ParseError.
MonomialIdeal parse_ideal(std::istream& in);
MonomialIdeal parse_ideal_string(std::string_view text);
MonomialIdeal read_ideal_file(const std::string& path);

/// `ring` line followed by one `gen` line per generator, in canonical order.
std::string format_ideal(const MonomialIdeal& ideal);

/// x1^2*x3 style; the zero vector prints as "1".
std::string format_monomial(const ExponentVector& m);

/// Parses a `mon` expression in a ring of n variables. Column numbers in errors are relative
/// to the start of the expression plus `column_offset`.
ExponentVector parse_monomial(std::string_view expr, std::size_t num_vars, std::size_t line = 1,
                              std::size_t column_offset = 0);

}  // namespace koszul
