#include "wpgraph/errors.hpp"

namespace wpgraph {

const char* errc_name(errc c) {
  switch (c) {
    case errc::byte_out_of_range: return "ByteOutOfRange";
    case errc::length_mismatch: return "LengthMismatch";
    case errc::nonzero_padding: return "NonzeroPadding";
    case errc::order_too_large: return "OrderTooLarge";
    case errc::not_independent: return "NotIndependent";
    case errc::bad_tuple: return "BadTuple";
    case errc::a_maximum: return "AMaximum";
    case errc::has_isolated_vertex: return "HasIsolatedVertex";
    case errc::k_out_of_range: return "KOutOfRange";
    case errc::alpha_too_small: return "AlphaTooSmall";
    case errc::internal_zero: return "InternalZero";
    case errc::bad_spec: return "BadSpec";
    case errc::io_error: return "IoError";
    case errc::bad_argument: return "BadArgument";
  }
  return "Error";
}

}  // namespace wpgraph
