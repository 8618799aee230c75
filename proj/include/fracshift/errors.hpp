#pragma once

#include <stdexcept>
#include <string>

namespace fracshift {

enum class Errc {
  invalid_argument,
  invalid_family,
  insufficient_data,
  index_range,
  divergent_moment,
  out_of_envelope,
  domain,
  incompatible_space,
  singular_node,
  time_singularity,
  coefficient_overflow,
  quadrature_tolerance,
  usage,
};

/// Exception carrying a machine-readable error category.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace fracshift
