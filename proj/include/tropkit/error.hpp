#pragma once

#include <stdexcept>
#include <string>

namespace tropkit {

/** Base class for every error raised by the toolkit. */
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/** A precondition on an argument does not hold (zero vector, non-admissible fan, ...). */
class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what) : Error(what) {}
};

/** Two objects that must live in the same ambient lattice do not. */
class RankMismatch : public Error {
 public:
  explicit RankMismatch(const std::string& what) : Error(what) {}
};

/** Input exceeds the desk-scale caps (ambient rank, Hilbert enumeration box). */
class DeskScaleExceeded : public Error {
 public:
  explicit DeskScaleExceeded(const std::string& what) : Error(what) {}
};

/** Two fans whose supports must agree do not. */
class SupportMismatch : public Error {
 public:
  explicit SupportMismatch(const std::string& what) : Error(what) {}
};

}  // namespace tropkit
