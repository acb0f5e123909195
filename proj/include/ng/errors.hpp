#pragma once

#include <stdexcept>
#include <string>

namespace ng {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct composite_characteristic : error { using error::error; };
struct reducible_modulus : error { using error::error; };
struct field_mismatch : error { using error::error; };
struct division_by_zero : error { using error::error; };
struct even_characteristic : error { using error::error; };
struct zero_polynomial : error { using error::error; };
struct non_generic_set : error { using error::error; };
struct bad_characteristic : error { using error::error; };
struct pole_input : error { using error::error; };
struct not_in_special_set : error { using error::error; };
struct precondition_violated : error { using error::error; };
struct unsupported_arity : error { using error::error; };
struct budget_exceeded : error { using error::error; };
struct too_large : error { using error::error; };
struct degenerate_graph : error { using error::error; };
struct bad_parameters : error { using error::error; };
struct invalid_input : error { using error::error; };

} // namespace ng
