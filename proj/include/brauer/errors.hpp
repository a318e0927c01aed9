/*
   Copyright 2026 brauer-fusion contributors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef BRAUER_ERRORS_HPP
#define BRAUER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace brauer {

/// Bad arguments: indices out of range, size mismatches, malformed input.
struct usage_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Division by zero or evaluation at a pole.
struct pole_error : std::domain_error {
    using std::domain_error::domain_error;
};

/// A regularized product evaluation hit a genuine pole (numerator does not
/// vanish to the denominator's order).  Always indicates a bug upstream.
struct fusion_regularity_error : std::domain_error {
    using std::domain_error::domain_error;
};

/// A quantity that must be a scalar multiple of a known element is not.
struct inconsistency_error : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace brauer

#endif
