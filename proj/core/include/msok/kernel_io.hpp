#pragma once

#include "msok/kernelizer.hpp"

#include <string>
#include <string_view>

namespace msok {

/// Kernel documents extend the edge-list format with
///
///     module <i>: <label> ...              kernel vertices of module i
///     annotation (<X labels> | <Y labels> | <w>)
///     threshold <r>
///     direction <= | >=
///
/// Module lines list every kernel vertex once, in index order, and assign
/// the labels. Labels inside X and Y are sorted by kernel index.
std::string emit_kernel(const McKernel& k);
std::string emit_annotated(const AnnotatedInstance& a);

/// Reads either document kind. A missing threshold reads as 0 and a missing
/// direction as <=. Throws ParseError with the offending line.
AnnotatedInstance parse_annotated(std::string_view text);

} // namespace msok
