#ifndef AIT_ABSTRACTION_HPP
#define AIT_ABSTRACTION_HPP

#include <string_view>

#include "ait/term.hpp"

namespace ait {

// Bracket abstraction of a named variable out of an applicative term
// (no remaining binders). Rule precedence:
//   1. the variable does not occur       -> K X
//   2. the term is the variable itself   -> I
//   3. application                       -> S (abstract X) (abstract Y)
TermPtr lambda_abstract(std::string_view name, const TermPtr& t);

// Eliminates every binder innermost-first via lambda_abstract, yielding a
// term over S/K/I, the remaining constants and any free markers.
TermPtr combinatorize(const TermPtr& t);

} // namespace ait

#endif
