#pragma once

#include <stdexcept>
#include <string>

namespace hypermat {

/// Failure categories raised by the library. The CLI maps any of these to
/// exit code 2 (invalid input or flags).
enum class Errc {
  bad_order,
  bad_permutation,
  bad_exponent,
  bad_parameter,
  duplicate_index,
  index_out_of_range,
  dim_mismatch,
  not_cubical,
  not_symmetric,
  not_regular,
  not_order2,
  not_partite,
  negative_entries,
  non_positive_vector,
  vertex_out_of_range,
  unknown_instance,
  too_large,
  parse_error,
  io_error,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::bad_order: return "BadOrder";
    case Errc::bad_permutation: return "BadPermutation";
    case Errc::bad_exponent: return "BadExponent";
    case Errc::bad_parameter: return "BadParameter";
    case Errc::duplicate_index: return "DuplicateIndex";
    case Errc::index_out_of_range: return "IndexOutOfRange";
    case Errc::dim_mismatch: return "DimMismatch";
    case Errc::not_cubical: return "NotCubical";
    case Errc::not_symmetric: return "NotSymmetric";
    case Errc::not_regular: return "NotRegular";
    case Errc::not_order2: return "NotOrder2";
    case Errc::not_partite: return "NotPartite";
    case Errc::negative_entries: return "NegativeEntries";
    case Errc::non_positive_vector: return "NonPositiveVector";
    case Errc::vertex_out_of_range: return "VertexOutOfRange";
    case Errc::unknown_instance: return "UnknownInstance";
    case Errc::too_large: return "TooLarge";
    case Errc::parse_error: return "ParseError";
    case Errc::io_error: return "IoError";
  }
  return "Error";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

inline void require(bool ok, Errc code, const std::string& msg) {
  if (!ok) fail(code, msg);
}

}  // namespace hypermat
