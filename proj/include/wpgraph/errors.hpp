#pragma once

#include <stdexcept>
#include <string>

namespace wpgraph {

enum class errc {
  byte_out_of_range,
  length_mismatch,
  nonzero_padding,
  order_too_large,
  not_independent,
  bad_tuple,
  a_maximum,
  has_isolated_vertex,
  k_out_of_range,
  alpha_too_small,
  internal_zero,
  bad_spec,
  io_error,
  bad_argument,
};

const char* errc_name(errc c);

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

}  // namespace wpgraph
