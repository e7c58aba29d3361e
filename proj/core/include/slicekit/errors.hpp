#pragma once

#include <stdexcept>
#include <string>

namespace slicekit {

/// Base class for all domain errors raised by the library.
struct slice_error : std::runtime_error {
  explicit slice_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct descriptor_error : slice_error {
  explicit descriptor_error(const std::string& msg) : slice_error(msg) {}
};

struct rank_mismatch_error : slice_error {
  explicit rank_mismatch_error(const std::string& msg) : slice_error(msg) {}
};

struct not_dominant_error : slice_error {
  explicit not_dominant_error(const std::string& msg) : slice_error(msg) {}
};

struct not_minuscule_error : slice_error {
  explicit not_minuscule_error(const std::string& msg) : slice_error(msg) {}
};

struct mu_not_in_orbit_error : slice_error {
  explicit mu_not_in_orbit_error(const std::string& msg) : slice_error(msg) {}
};

struct mu_condition_error : slice_error {
  explicit mu_condition_error(const std::string& msg) : slice_error(msg) {}
};

struct tuple_not_fixed_point_error : slice_error {
  explicit tuple_not_fixed_point_error(const std::string& msg) : slice_error(msg) {}
};

/// Raised by attracting-dimension counts when a tangent line has zero weight
/// under the chosen one-parameter subgroup; carries a printout of the term.
struct zero_weight_term_error : slice_error {
  explicit zero_weight_term_error(const std::string& term_text)
      : slice_error("zero-weight term under cocharacter: " + term_text),
        term(term_text) {}
  std::string term;
};

struct malformed_subset_error : slice_error {
  explicit malformed_subset_error(const std::string& msg) : slice_error(msg) {}
};

}  // namespace slicekit
