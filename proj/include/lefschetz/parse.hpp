#pragma once

#include <string>
#include <vector>

#include "lefschetz/form.hpp"

namespace lefschetz {

// Grammar: terms joined by + / -; a term is an optional rational coefficient
// (p/q or integer) and *-separated variable powers v^e. Whitespace is
// insignificant. "0" is the zero form.
Form parse_form(const std::string& text, const std::vector<std::string>& variables);

// Derived display names for differential operators acting on the given
// variables: single lowercase letters are uppercased, x<k> becomes y<k>,
// anything else gets a D prefix.
std::vector<std::string> operator_names(const std::vector<std::string>& variables);

}  // namespace lefschetz
