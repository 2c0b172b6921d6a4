#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace addcomb {

enum class error_kind {
  non_associative,
  index_out_of_range,
  unknown_spec,
  parse_error,
  not_unital,
  candidate_invalid,
  no_witness,
  empty_transform,
  empty_set,
  not_group,
  not_cyclic,
  carrier_too_large,
  precondition_failed,
  bad_z,
};

constexpr std::string_view to_string(error_kind k) {
  switch (k) {
    case error_kind::non_associative: return "NonAssociative";
    case error_kind::index_out_of_range: return "IndexOutOfRange";
    case error_kind::unknown_spec: return "UnknownSpec";
    case error_kind::parse_error: return "ParseError";
    case error_kind::not_unital: return "NotUnital";
    case error_kind::candidate_invalid: return "CandidateInvalid";
    case error_kind::no_witness: return "NoWitness";
    case error_kind::empty_transform: return "EmptyTransform";
    case error_kind::empty_set: return "EmptySet";
    case error_kind::not_group: return "NotGroup";
    case error_kind::not_cyclic: return "NotCyclic";
    case error_kind::carrier_too_large: return "CarrierTooLarge";
    case error_kind::precondition_failed: return "PreconditionFailed";
    case error_kind::bad_z: return "BadZ";
  }
  return "Unknown";
}

/// Every recoverable failure in the library is reported through this type.
class error : public std::runtime_error {
 public:
  error(error_kind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  error_kind kind() const noexcept { return kind_; }

 private:
  error_kind kind_;
};

}  // namespace addcomb
