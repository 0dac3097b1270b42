#ifndef ORBICHI_ERRORS_HPP
#define ORBICHI_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace orbichi {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A configured resource cap was exceeded (group order, search nodes,
/// G-set scan size, subgroup lattice size). Maps to CLI exit code 3.
struct CapExceeded : Error {
  using Error::Error;
};

struct OrderCapExceeded : CapExceeded {
  using CapExceeded::CapExceeded;
};
struct SearchCapExceeded : CapExceeded {
  using CapExceeded::CapExceeded;
};
struct SizeCapExceeded : CapExceeded {
  using CapExceeded::CapExceeded;
};

/// Invalid input data (bad tables, schemas, ranges). Maps to CLI exit code 2.
struct InvalidInput : Error {
  using Error::Error;
};

struct NotAGroup : InvalidInput {
  using InvalidInput::InvalidInput;
};
struct DegreeMismatch : InvalidInput {
  using InvalidInput::InvalidInput;
};
struct BadLetter : InvalidInput {
  using InvalidInput::InvalidInput;
};
struct TargetNotWreath : InvalidInput {
  using InvalidInput::InvalidInput;
};
struct MissingClass : InvalidInput {
  using InvalidInput::InvalidInput;
};
struct DuplicateClass : InvalidInput {
  using InvalidInput::InvalidInput;
};
struct ConjugacyConflict : InvalidInput {
  using InvalidInput::InvalidInput;
};
struct InvalidAction : InvalidInput {
  using InvalidInput::InvalidInput;
};
struct GroupMismatch : InvalidInput {
  using InvalidInput::InvalidInput;
};
struct NotCentralizing : InvalidInput {
  using InvalidInput::InvalidInput;
};
struct NonIntegerResult : InvalidInput {
  using InvalidInput::InvalidInput;
};
struct BadConstantTerm : InvalidInput {
  using InvalidInput::InvalidInput;
};

/// The requested operation is not defined for this source presentation
/// (general presented groups on paths that need abstract subgroup
/// presentations).
struct UnsupportedSource : Error {
  using Error::Error;
};
struct SourceNotFinite : UnsupportedSource {
  using UnsupportedSource::UnsupportedSource;
};

}  // namespace orbichi

#endif
